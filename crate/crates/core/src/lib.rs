//! Exact-arithmetic construction and classification of 6-dimensional real
//! Drinfeld doubles.
//!
//! A Manin triple (𝒟, 𝒢, 𝒢̃) is a decomposition of a Lie algebra 𝒟 carrying an
//! ad-invariant nondegenerate symmetric bilinear form ⟨·,·⟩ into two maximally
//! isotropic subalgebras. In dimension six the subalgebras are the
//! 3-dimensional (Bianchi) algebras, and the standard catalog contains 44
//! triples up to duality. This crate builds the six-dimensional doubles from
//! the catalog over exact rationals, computes the invariants that separate
//! non-isomorphic doubles (Killing signature, derived-series dimensions,
//! split-form coefficients, Levi restriction, center signatures, maximal
//! isotropic abelian subalgebra census), verifies explicit isomorphism
//! witnesses, and reproduces the classification into 22 classes.
//!
//! All arithmetic is exact: rationals (and Gaussian rationals where a
//! complexified criterion needs them) backed by arbitrary-precision integers.
//! There is no floating point anywhere in the crate.
//!
//! ```
//! use drinfeld_lab::exactmath::rint;
//! use drinfeld_lab::invariants::invariant_profile;
//! use drinfeld_lab::manin::{catalog_triple, Params};
//!
//! // the double of (9|5|b) at b = 1 is so(3,1) with a rotation-type form
//! let triple = catalog_triple("(9|5|b)", &Params::with_b(rint(1)))?;
//! let profile = invariant_profile(&triple)?;
//! assert_eq!(profile.killing, (3, 3, 0));
//! assert_eq!(profile.series.commutant, 6);
//! let split = profile.split.expect("semisimple doubles carry a split quadratic");
//! assert_eq!(split.to_string(), "L^2 - (0)L + (1/16)");
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod exactmath;
pub mod liecore;
pub mod invariants;
pub mod isomorph;
pub mod manin;
pub mod specio;

pub use exactmath::{Mat, Poly, Rat};
pub use liecore::{BianchiType, LieAlgebra, SeriesProfile, Subspace};
pub use invariants::InvariantProfile;
pub use isomorph::{ClassificationReport, IsoCandidate};
pub use manin::{DoubleAlgebra, ManinTriple};
