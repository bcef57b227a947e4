//! Text input format for algebras and triples, and report emission.
//!
//! The `.lalg` format declares a basis, optional exact rational parameters,
//! bracket relations and an optional pairing:
//!
//! ```text
//! # three-dimensional example
//! basis X1 X2 X3;
//! param a = 2 where a > 0;
//! [X1,X2] = -a*X2 + X3;
//! [X3,X1] = X2 + a*X3;
//! ```
//!
//! Reports are emitted as human-readable text, CSV, or JSON. Output is
//! deterministic and byte-stable for fixed input; rationals are always
//! serialized as `p/q` strings, never floats.

mod emit;
mod parse;

pub use emit::{emit_classification, emit_profiles, triple_to_lalg, Format};
pub use parse::{parse_algebra, AlgebraDocument, BracketDecl, ParseError};
