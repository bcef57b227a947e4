//! The discriminating invariants of six-dimensional Drinfeld doubles.
//!
//! Coarse invariants (Killing signature, bracket-series dimensions) split
//! the catalog into blocks; the refined invariants separate doubles inside
//! a block:
//!
//! * the split coefficients of semisimple doubles — the monic quadratic
//!   whose cube is char(K⁻¹B), encoding the unordered pair {α, β} with
//!   ⟨·,·⟩ = αK₁ + βK₂ on the complexified simple components;
//! * the restriction of ⟨·,·⟩ to a Levi complement, either identically zero
//!   or an exact multiple λ·K_S of its Killing form;
//! * the signature of ⟨·,·⟩ restricted to the center;
//! * the census of maximal isotropic abelian subalgebras with their dual
//!   partner subalgebras.
//!
//! Each refined invariant is populated exactly when its precondition holds
//! and is marked not-applicable otherwise, never silently zeroed.

mod center_sig;
mod symvec;
mod isotropic;
mod levi_class;
mod mia;
mod profile;
mod split;

pub use center_sig::center_form_signature;
pub use isotropic::{
    decomposition_orientations, isotropic_subalgebra_families, IsotropicFamily,
};
pub use levi_class::{levi_restriction_class, LeviRestrictionClass};
pub use mia::{mia_census, AnsatzForm, DualPartnerStatus, MiaCensus, MiaFamily, ParamSet};
pub use profile::{invariant_profile, profile_of_double, InvariantProfile};
pub use split::{semisimple_split_coeffs, SplitInvariant};

use thiserror::Error;

/// Errors from invariant computations.
#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("invariant not applicable: {0}")]
    NotApplicable(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Lie(#[from] crate::liecore::LieError),
    #[error(transparent)]
    Exact(#[from] crate::exactmath::ExactError),
}
