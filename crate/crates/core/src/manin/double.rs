//! Assembly of the six-dimensional Drinfeld double from a Manin triple.

use num_traits::{One, Zero};

use crate::exactmath::{Mat, Rat};
use crate::liecore::{LieAlgebra, Subspace};

use super::triple::ManinTriple;
use super::ManinError;

/// The canonical pairing matrix: ⟨X_i, X̃^j⟩ = δ_i^j, both spans isotropic.
pub fn canonical_form() -> Mat<Rat> {
    let mut b = Mat::zero(6, 6);
    for i in 0..3 {
        b[(i, i + 3)] = Rat::one();
        b[(i + 3, i)] = Rat::one();
    }
    b
}

/// A six-dimensional Lie algebra with the canonical ad-invariant form, in
/// the basis (X₁, X₂, X₃, X̃¹, X̃², X̃³) of its source triple.
#[derive(Clone, PartialEq)]
pub struct DoubleAlgebra {
    algebra: LieAlgebra,
    source: ManinTriple,
}

impl std::fmt::Debug for DoubleAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DoubleAlgebra of {}", self.source.display_label())
    }
}

impl DoubleAlgebra {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn source(&self) -> &ManinTriple {
        &self.source
    }

    /// The bilinear form in this basis (always the canonical matrix).
    pub fn form(&self) -> Mat<Rat> {
        canonical_form()
    }

    /// ⟨u, v⟩ for coordinate vectors.
    pub fn pair(&self, u: &[Rat], v: &[Rat]) -> Rat {
        let bv = self.form().mul_vec(v);
        u.iter().zip(&bv).fold(Rat::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    /// Whether the form vanishes identically on `s × s`.
    pub fn is_isotropic(&self, s: &Subspace) -> bool {
        let basis = s.basis_vectors();
        basis.iter().enumerate().all(|(i, u)| {
            basis.iter().skip(i).all(|v| self.pair(u, v).is_zero())
        })
    }

    /// Isotropic of the maximal dimension 3.
    pub fn is_maximally_isotropic(&self, s: &Subspace) -> bool {
        s.dim() == 3 && self.is_isotropic(s)
    }

    /// ⟨[x,y],z⟩ + ⟨y,[x,z]⟩ = 0 on all basis triples.
    pub fn form_is_ad_invariant(&self) -> bool {
        let n = 6;
        let e = |i: usize| -> Vec<Rat> {
            (0..n).map(|t| if t == i { Rat::one() } else { Rat::zero() }).collect()
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.pair(&self.algebra.bracket(&e(x), &e(y)), &e(z))
                        + self.pair(&e(y), &self.algebra.bracket(&e(x), &e(z)));
                    if !lhs.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The span of X₁..X₃ (the first subalgebra inside the double).
    pub fn primal_span(&self) -> Subspace {
        let rows: Vec<Vec<Rat>> = (0..3)
            .map(|i| (0..6).map(|t| if t == i { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        Subspace::span(6, &rows)
    }

    /// The span of X̃¹..X̃³.
    pub fn dual_span(&self) -> Subspace {
        let rows: Vec<Vec<Rat>> = (3..6)
            .map(|i| (0..6).map(|t| if t == i { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        Subspace::span(6, &rows)
    }
}

/// Assembles all six-dimensional brackets:
///   [X_i, X_j] = f_{ij}^k X_k,
///   [X̃^i, X̃^j] = f̃^{ij}_k X̃^k,
///   [X_i, X̃^j] = f_{ki}^j X̃^k + f̃^{jk}_i X_k,
/// and verifies the full Jacobi identity of the result.
pub fn build_double(t: &ManinTriple) -> Result<DoubleAlgebra, ManinError> {
    let algebra = assemble_bracket_table(t.g(), t.gt());
    let jacobi = algebra.check_jacobi();
    if !jacobi.is_valid() {
        return Err(ManinError::DoubleJacobi(jacobi.violations));
    }
    Ok(DoubleAlgebra { algebra, source: t.clone() })
}

/// The raw bracket table of the would-be double, without any validity
/// checks. Exists so the equivalence "mixed identity ⟺ six-dimensional
/// Jacobi" can be exercised on invalid pairs too.
pub fn assemble_bracket_table(f: &LieAlgebra, ft: &LieAlgebra) -> LieAlgebra {
    let mut brackets: Vec<((usize, usize), Vec<(Rat, usize)>)> = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let terms: Vec<(Rat, usize)> = (0..3)
                .filter(|&k| !f.c(i, j, k).is_zero())
                .map(|k| (f.c(i, j, k).clone(), k))
                .collect();
            brackets.push(((i, j), terms));
            let dual_terms: Vec<(Rat, usize)> = (0..3)
                .filter(|&k| !ft.c(i, j, k).is_zero())
                .map(|k| (ft.c(i, j, k).clone(), 3 + k))
                .collect();
            brackets.push(((3 + i, 3 + j), dual_terms));
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            let mut terms: Vec<(Rat, usize)> = Vec::new();
            for k in 0..3 {
                let coef = f.c(k, i, j);
                if !coef.is_zero() {
                    terms.push((coef.clone(), 3 + k));
                }
                let coef = ft.c(j, k, i);
                if !coef.is_zero() {
                    terms.push((coef.clone(), k));
                }
            }
            brackets.push(((i, 3 + j), terms));
        }
    }
    let labels = vec!["X1", "X2", "X3", "Xt1", "Xt2", "Xt3"]
        .into_iter()
        .map(String::from)
        .collect();
    LieAlgebra::from_brackets(6, &brackets).with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::super::triple::{ManinTriple, Params};
    use super::*;
    use crate::exactmath::rint;
    use crate::liecore::{bianchi_algebra, BianchiType};

    #[test]
    fn abelian_pair_gives_the_abelian_double() {
        let t = ManinTriple::new(
            "(1|1)",
            LieAlgebra::abelian(3),
            LieAlgebra::abelian(3),
            Params::none(),
        )
        .unwrap();
        let d = build_double(&t).unwrap();
        assert_eq!(d.algebra().series_profile().commutant, 0);
        assert!(d.form_is_ad_invariant());
    }

    #[test]
    fn nine_with_abelian_dual_has_the_expected_cross_bracket() {
        let t = ManinTriple::new(
            "(9|1)",
            bianchi_algebra(&BianchiType::Nine).unwrap(),
            LieAlgebra::abelian(3),
            Params::none(),
        )
        .unwrap();
        let d = build_double(&t).unwrap();
        // [X₁, X̃²] = f_{k1}² X̃^k = f_{31}² X̃³ = X̃³
        let x1 = vec![rint(1), rint(0), rint(0), rint(0), rint(0), rint(0)];
        let xt2 = vec![rint(0), rint(0), rint(0), rint(0), rint(1), rint(0)];
        let w = d.algebra().bracket(&x1, &xt2);
        assert_eq!(w, vec![rint(0); 5].into_iter().chain([rint(1)]).collect::<Vec<_>>());
        assert!(d.form_is_ad_invariant());
        assert!(d.is_maximally_isotropic(&d.primal_span()));
        assert!(d.is_maximally_isotropic(&d.dual_span()));
    }
}
