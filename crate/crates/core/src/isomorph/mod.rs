//! Isomorphism verification of Drinfeld doubles and the classification
//! pipeline.
//!
//! Two doubles presented in canonical bases are isomorphic iff an invertible
//! 6×6 matrix C maps one onto the other preserving both the bracket table
//! and the canonical pairing:
//!
//!   C_a^p C_b^q B_pq = B_ab,   C_a^p C_b^q F_pq^r = F'_ab^c C_c^r,
//!
//! with rows of C giving the new basis in the old one. Witness matrices
//! compose by matrix product and invert by matrix inverse. A bounded
//! backtracking search can look for witnesses; non-isomorphism is only ever
//! certified by an invariant, never by search exhaustion.

mod candidate;
mod matrices;
mod search;
mod theorem;

pub use candidate::{duality_witness, verify_matrix, IsoCandidate, VerifyReport};
pub use matrices::{catalog_iso, catalog_iso_pairs};
pub use search::{default_entries, search_iso, SearchOutcome};
pub use theorem::{
    separating_invariant, verify_theorem, ClassInstance, ClassMember, ClassificationReport,
    GridSpec, SeparationRecord, TheoremClass, WitnessEdge,
};

use thiserror::Error;

/// Errors from isomorphism handling.
#[derive(Debug, Error)]
pub enum IsoError {
    #[error("candidate matrix is singular (determinant zero)")]
    Singular,
    #[error("no catalog transformation for {0} -> {1}")]
    UnknownPair(String, String),
    #[error("search budget must be positive")]
    BadBudget,
    #[error(transparent)]
    Manin(#[from] crate::manin::ManinError),
    #[error(transparent)]
    Invariant(#[from] crate::invariants::InvariantError),
}
