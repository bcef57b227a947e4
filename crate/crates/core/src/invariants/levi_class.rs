//! Restriction of the bilinear form to a Levi complement.
//!
//! Applies to doubles that are neither semisimple nor solvable and whose
//! radical is 3-dimensional and abelian. The restriction of ⟨·,·⟩ to any
//! Levi complement S ≅ sl(2,ℝ) is ad-invariant, hence either identically
//! zero (S maximally isotropic) or a nonzero multiple λ·K_S of the Killing
//! form of S. The class — and λ — do not depend on the choice of complement,
//! which is re-verified here across several independent lifts.

use num_traits::Zero;

use crate::exactmath::{fmt_rat, rint, Mat, Rat};
use crate::manin::DoubleAlgebra;

use super::InvariantError;
use crate::liecore::{levi_complements_randomized, Subspace};

/// Outcome of restricting the form to a Levi complement.
#[derive(Clone, Debug, PartialEq)]
pub enum LeviRestrictionClass {
    /// ⟨·,·⟩ vanishes on S (S is maximally isotropic).
    Isotropic,
    /// ⟨·,·⟩|_S = λ·K_S with the exact rational λ.
    Proportional(Rat),
}

impl std::fmt::Display for LeviRestrictionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LeviRestrictionClass::Isotropic => write!(f, "isotropic"),
            LeviRestrictionClass::Proportional(l) => write!(f, "lambda = {}", fmt_rat(l)),
        }
    }
}

/// Computes the restriction class, checking it across at least three
/// distinct Levi lifts.
pub fn levi_restriction_class(d: &DoubleAlgebra) -> Result<LeviRestrictionClass, InvariantError> {
    let alg = d.algebra();
    let (_, _, z) = alg.killing_signature();
    if z == 0 {
        return Err(InvariantError::NotApplicable("double is semisimple".into()));
    }
    let rad = alg.radical()?;
    if rad.dim() == alg.dim() {
        return Err(InvariantError::NotApplicable("double is solvable".into()));
    }
    if rad.dim() != 3 {
        return Err(InvariantError::NotApplicable(format!(
            "radical has dimension {}, need 3",
            rad.dim()
        )));
    }
    if alg.bracket_span(&rad, &rad).dim() != 0 {
        return Err(InvariantError::NotApplicable("radical is not abelian".into()));
    }
    let seeds = lift_seeds();
    let complements = levi_complements_randomized(alg, &rad, &seeds)?;
    let mut class: Option<LeviRestrictionClass> = None;
    for s in &complements {
        let c = classify_restriction(d, s)?;
        match &class {
            None => class = Some(c),
            Some(prev) => {
                if *prev != c {
                    return Err(InvariantError::Internal(format!(
                        "restriction class changed across Levi lifts: {prev} vs {c}"
                    )));
                }
            }
        }
    }
    Ok(class.expect("at least one Levi complement"))
}

fn lift_seeds() -> Vec<Vec<Rat>> {
    // three deterministic seed patterns for the homogeneous correction space;
    // extra entries are ignored when the space is smaller
    let pattern = |f: fn(usize) -> i64| (0..9).map(|i| rint(f(i))).collect::<Vec<_>>();
    vec![
        pattern(|i| (i as i64) + 1),
        pattern(|i| if i % 2 == 0 { 1 } else { -2 }),
        pattern(|i| ((i as i64) * 3 - 5) % 7),
    ]
}

fn classify_restriction(
    d: &DoubleAlgebra,
    s: &Subspace,
) -> Result<LeviRestrictionClass, InvariantError> {
    let basis = s.basis_vectors();
    let m = basis.len();
    let mut restricted = Mat::zero(m, m);
    for i in 0..m {
        for j in 0..m {
            restricted[(i, j)] = d.pair(&basis[i], &basis[j]);
        }
    }
    if restricted.is_zero() {
        return Ok(LeviRestrictionClass::Isotropic);
    }
    let k_s = d.algebra().restrict_to(s)?.killing_gram();
    // find the proportionality constant from any nonzero entry of K_S
    let mut lambda = None;
    'outer: for i in 0..m {
        for j in 0..m {
            if !k_s[(i, j)].is_zero() {
                lambda = Some(restricted[(i, j)].clone() / k_s[(i, j)].clone());
                break 'outer;
            }
        }
    }
    let lambda = lambda
        .ok_or_else(|| InvariantError::Internal("Killing form of Levi complement is zero".into()))?;
    if k_s.scale(&lambda) != restricted {
        return Err(InvariantError::Internal(
            "restriction is neither zero nor proportional to the Killing form".into(),
        ));
    }
    Ok(LeviRestrictionClass::Proportional(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::manin::{build_double, catalog_triple, Params};

    fn class_of(label: &str, params: Params) -> LeviRestrictionClass {
        let t = catalog_triple(label, &params).unwrap();
        levi_restriction_class(&build_double(&t).unwrap()).unwrap()
    }

    #[test]
    fn abelian_dual_gives_isotropic_complement() {
        assert_eq!(class_of("(8|1)", Params::none()), LeviRestrictionClass::Isotropic);
    }

    #[test]
    fn scaled_duals_give_minus_one_over_b() {
        assert_eq!(
            class_of("(4|2.iii|b)", Params::with_b(rint(1))),
            LeviRestrictionClass::Proportional(rint(-1))
        );
        assert_eq!(
            class_of("(7_0|4|b)", Params::with_b(rint(2))),
            LeviRestrictionClass::Proportional(rat(-1, 2))
        );
    }

    #[test]
    fn not_applicable_for_semisimple_doubles() {
        let t = catalog_triple("(9|5|b)", &Params::with_b(rint(1))).unwrap();
        let err = levi_restriction_class(&build_double(&t).unwrap()).unwrap_err();
        assert!(matches!(err, InvariantError::NotApplicable(_)));
    }
}
