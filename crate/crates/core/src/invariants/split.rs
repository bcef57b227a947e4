//! Split coefficients of semisimple doubles.
//!
//! On a semisimple double the bilinear form restricts to multiples α, β of
//! the Killing forms of the two complexified simple components, so K⁻¹B has
//! characteristic polynomial ((λ−α)(λ−β))³. The unordered pair {α, β} may be
//! complex, but the monic quadratic q(λ) = λ² − sλ + p having them as roots
//! is rational, so the invariant is stored as (s, p) and compared exactly
//! without any root extraction.

use num_traits::One;

use crate::exactmath::{fmt_rat, rint, Poly, Rat};
use crate::manin::DoubleAlgebra;

use super::InvariantError;

/// The monic quadratic q(λ) = λ² − sλ + p with char(K⁻¹B) = q(λ)³.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitInvariant {
    pub s: Rat,
    pub p: Rat,
}

impl SplitInvariant {
    pub fn quadratic(&self) -> Poly<Rat> {
        Poly::new(vec![self.p.clone(), -self.s.clone(), Rat::one()])
    }

    /// The discriminant s² − 4p; negative exactly when {α, β} is a complex
    /// conjugate pair.
    pub fn discriminant(&self) -> Rat {
        self.s.clone() * self.s.clone() - rint(4) * self.p.clone()
    }
}

impl std::fmt::Display for SplitInvariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L^2 - ({})L + ({})", fmt_rat(&self.s), fmt_rat(&self.p))
    }
}

/// Computes the split invariant of a semisimple double.
pub fn semisimple_split_coeffs(d: &DoubleAlgebra) -> Result<SplitInvariant, InvariantError> {
    let k = d.algebra().killing_gram();
    let Some(k_inv) = k.inverse() else {
        return Err(InvariantError::NotApplicable(
            "split coefficients need a nondegenerate Killing form".into(),
        ));
    };
    let m = k_inv.mul(&d.form());
    let c = m.char_poly()?;
    debug_assert!(c.is_monic() && c.degree() == Some(6));
    // q³ = λ⁶ − 3sλ⁵ + (3p + 3s²)λ⁴ + …; recover (s, p) from the two top
    // coefficients and then verify the full cube
    let s = -c.coeff(5) / rint(3);
    let p = c.coeff(4) / rint(3) - s.clone() * s.clone();
    let split = SplitInvariant { s, p };
    if split.quadratic().pow(3) != c {
        return Err(InvariantError::Internal(format!(
            "char(K⁻¹B) = {c} is not the cube of a monic quadratic"
        )));
    }
    Ok(split)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::manin::{build_double, catalog_triple, Params};

    fn split_of(label: &str, params: Params) -> SplitInvariant {
        let t = catalog_triple(label, &params).unwrap();
        semisimple_split_coeffs(&build_double(&t).unwrap()).unwrap()
    }

    #[test]
    fn real_split_pair_of_sl2_sl2_doubles() {
        // {1/(4b), −1/(4b)} at b = 1: q = λ² − 1/16
        let q = split_of("(8|5.i|b)", Params::with_b(rint(1)));
        assert_eq!(q, SplitInvariant { s: rint(0), p: rat(-1, 16) });
        assert!(q.discriminant() > rint(0));
    }

    #[test]
    fn complex_split_pair_of_so31_doubles() {
        // {i/(4b), −i/(4b)} at b = 1: q = λ² + 1/16
        let q = split_of("(9|5|b)", Params::with_b(rint(1)));
        assert_eq!(q, SplitInvariant { s: rint(0), p: rat(1, 16) });
        assert!(q.discriminant() < rint(0));
    }

    #[test]
    fn split_pair_with_nonzero_trace() {
        // independently derived by substituting a=2, b=1 into the closed
        // forms s = −a²/(b(a²+1)²), p = a²/(16b²(a²+1)²)
        let q = split_of("(7_a|7_{1/a}|b)", Params::with_ab(rint(2), rint(1)));
        assert_eq!(q, SplitInvariant { s: rat(-4, 25), p: rat(1, 100) });
    }

    #[test]
    fn not_applicable_on_degenerate_killing_form() {
        let t = catalog_triple("(8|1)", &Params::none()).unwrap();
        let err = semisimple_split_coeffs(&build_double(&t).unwrap()).unwrap_err();
        assert!(matches!(err, InvariantError::NotApplicable(_)));
    }
}
