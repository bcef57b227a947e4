//! Manin triples and their Drinfeld doubles.
//!
//! A triple is stored as the two 3-dimensional structure-constant tensors
//! (f, f̃) written in a basis where the pairing has the canonical form: the
//! two subalgebra spans are isotropic and ⟨X_i, X̃^j⟩ = δ_i^j. Construction
//! validates both Jacobi identities and the mixed compatibility identity;
//! [`build_double`] then assembles the six-dimensional bracket table and
//! re-verifies the full Jacobi identity.
//!
//! The catalog holds the standard list of 44 inequivalent triples (up to
//! duality) in dimension six, keyed by stable labels such as `(6_0|5.iii|b)`,
//! with exact rational parameter binding and domain checks.

mod catalog;
mod double;
mod triple;

pub use catalog::{
    bianchi_labels, catalog_bianchi, catalog_entries, catalog_entry, catalog_triple,
    resolve_label_alias, CatalogEntry, ParamDomain,
};
pub use double::{assemble_bracket_table, build_double, canonical_form, DoubleAlgebra};
pub use triple::{dualize, mixed_jacobi_report, MixedJacobiReport, Params, ManinTriple};

use thiserror::Error;

/// Errors from triple construction and the catalog.
#[derive(Debug, Error)]
pub enum ManinError {
    #[error("first subalgebra violates the Jacobi identity at {0:?}")]
    JacobiPrimal(Vec<(usize, usize, usize)>),
    #[error("second subalgebra violates the Jacobi identity at {0:?}")]
    JacobiDual(Vec<(usize, usize, usize)>),
    #[error("mixed Jacobi identity violated at (i,j,k,l)={0:?}")]
    MixedJacobi(Vec<(usize, usize, usize, usize)>),
    #[error("assembled double violates the Jacobi identity at {0:?}")]
    DoubleJacobi(Vec<(usize, usize, usize)>),
    #[error("unknown catalog label `{0}`")]
    UnknownLabel(String),
    #[error("triple `{label}` requires parameter `{param}`")]
    MissingParam { label: String, param: char },
    #[error("triple `{label}` takes no parameter `{param}`")]
    UnexpectedParam { label: String, param: char },
    #[error("parameter {param}={value} outside domain {domain} for `{label}`")]
    ParamOutOfDomain { label: String, param: char, value: String, domain: String },
    #[error(transparent)]
    Lie(#[from] crate::liecore::LieError),
}
