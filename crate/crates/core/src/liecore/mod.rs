//! Lie algebras as exact structure-constant tensors.
//!
//! A [`LieAlgebra`] stores the full antisymmetric tensor c_{ij}^k over ℚ.
//! On top of that this module computes the classical invariants used to
//! separate non-isomorphic algebras: the Killing form, derived and lower
//! central series dimensions, center, solvable radical, a Levi complement
//! for the abelian-radical case, and the Bianchi normal form of 3-dimensional
//! algebras.

mod algebra;
mod bianchi;
mod levi;
mod subspace;

pub use algebra::{JacobiReport, LieAlgebra, SeriesProfile, SubspacePredicates};
pub use bianchi::{bianchi_algebra, bianchi_classify, BianchiType};
pub use levi::{levi_complement, levi_complements_randomized};
pub use subspace::Subspace;

use thiserror::Error;

/// Errors from Lie-algebra computations.
#[derive(Debug, Error)]
pub enum LieError {
    #[error("expected a 3-dimensional algebra, got dimension {0}")]
    NotThreeDimensional(usize),
    #[error("Bianchi parameter is irrational: discriminant {0} is not a rational square")]
    IrrationalParameter(String),
    #[error("parameter out of domain: {0}")]
    ParamDomain(String),
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
