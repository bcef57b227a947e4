//! Exact scalar fields and dense linear algebra on small matrices.
//!
//! Scalars are arbitrary-precision rationals ([`Rat`]) or Gaussian rationals
//! ([`GaussRat`], elements of ℚ(i)); matrices are value types generic over
//! either field. Everything here is exact: rank, nullspace, determinant,
//! characteristic polynomial and symmetric-form signature never round.

mod matrix;
mod mpoly;
mod poly;
mod scalar;
mod solve;

pub use matrix::{signature, Mat};
pub use mpoly::MPoly;
pub use poly::Poly;
pub use scalar::{fmt_rat, gauss, parse_rat, rat, rat_sqrt, rint, Field, GaussRat, Rat};
pub use solve::{rational_roots, solve_system, Binding, Solution, SolveOutcome};

use thiserror::Error;

/// Errors from exact linear algebra.
#[derive(Debug, Error)]
pub enum ExactError {
    /// An operation was called on an argument violating its contract
    /// (non-square matrix, non-symmetric form, dimension mismatch).
    #[error("contract violation: {0}")]
    Contract(String),
    /// Text did not parse as an exact rational.
    #[error("invalid rational literal `{0}`")]
    Parse(String),
}
