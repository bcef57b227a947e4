//! The Manin triple data type and its compatibility identities.

use num_traits::Zero;

use crate::exactmath::{fmt_rat, Rat};
use crate::liecore::LieAlgebra;

use super::ManinError;

/// Exact rational parameter bindings for a catalog triple.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params {
    pub a: Option<Rat>,
    pub b: Option<Rat>,
}

impl Params {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn with_a(a: Rat) -> Self {
        Params { a: Some(a), b: None }
    }

    pub fn with_b(b: Rat) -> Self {
        Params { a: None, b: Some(b) }
    }

    pub fn with_ab(a: Rat, b: Rat) -> Self {
        Params { a: Some(a), b: Some(b) }
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if let Some(a) = &self.a {
            parts.push(format!("a={}", fmt_rat(a)));
        }
        if let Some(b) = &self.b {
            parts.push(format!("b={}", fmt_rat(b)));
        }
        write!(f, "{}", parts.join(","))
    }
}

/// A six-dimensional Manin triple in canonical pairing, given by the
/// structure constants f of 𝒢 and f̃ of 𝒢̃.
#[derive(Clone, PartialEq)]
pub struct ManinTriple {
    label: String,
    dual: bool,
    g: LieAlgebra,
    gt: LieAlgebra,
    params: Params,
}

impl std::fmt::Debug for ManinTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ManinTriple {}", self.display_label())
    }
}

impl ManinTriple {
    /// Validates the three compatibility identities and builds the triple.
    pub fn new(
        label: impl Into<String>,
        g: LieAlgebra,
        gt: LieAlgebra,
        params: Params,
    ) -> Result<Self, ManinError> {
        assert_eq!(g.dim(), 3);
        assert_eq!(gt.dim(), 3);
        let jg = g.check_jacobi();
        if !jg.is_valid() {
            return Err(ManinError::JacobiPrimal(jg.violations));
        }
        let jgt = gt.check_jacobi();
        if !jgt.is_valid() {
            return Err(ManinError::JacobiDual(jgt.violations));
        }
        let mixed = mixed_jacobi_report(&g, &gt);
        if !mixed.is_valid() {
            return Err(ManinError::MixedJacobi(mixed.violations));
        }
        Ok(ManinTriple { label: label.into(), dual: false, g, gt, params })
    }

    /// Catalog label, e.g. `(6_0|5.iii|b)`.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Label plus duality marker and bound parameters, for reports.
    pub fn display_label(&self) -> String {
        let mut s = String::new();
        if self.dual {
            s.push_str("dual ");
        }
        s.push_str(&self.label);
        let params = self.params.to_string();
        if !params.is_empty() {
            s.push_str(&format!(" [{params}]"));
        }
        s
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Structure constants f of the first subalgebra.
    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    /// Structure constants f̃ of the second subalgebra.
    pub fn gt(&self) -> &LieAlgebra {
        &self.gt
    }
}

/// The dual triple: 𝒢 ↔ 𝒢̃, swapping f and f̃. An involution.
pub fn dualize(t: &ManinTriple) -> ManinTriple {
    ManinTriple {
        label: t.label.clone(),
        dual: !t.dual,
        g: t.gt.clone(),
        gt: t.g.clone(),
        params: t.params.clone(),
    }
}

/// Violations of the mixed compatibility identity between f and f̃.
#[derive(Clone, Debug, Default)]
pub struct MixedJacobiReport {
    /// Tuples (i, j, k, l), 1-based, at which the identity fails.
    pub violations: Vec<(usize, usize, usize, usize)>,
}

impl MixedJacobiReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the mixed Jacobi identity: the X̃-component of
/// [X_i,[X̃^j,X̃^k]] + cyclic, expanded through the double's bracket rule,
///
///   Σ_m ( f̃^{jk}_m f_{li}^m + f̃^{km}_l f_{mi}^j − f̃^{jm}_l f_{mi}^k
///         − f̃^{jm}_i f_{lm}^k + f̃^{km}_i f_{lm}^j ) = 0
///
/// for all i, l (lower) and j, k (upper).
pub fn mixed_jacobi_report(g: &LieAlgebra, gt: &LieAlgebra) -> MixedJacobiReport {
    let f = |a: usize, b: usize, c: usize| g.c(a, b, c).clone();
    let ft = |a: usize, b: usize, c: usize| gt.c(a, b, c).clone();
    let mut report = MixedJacobiReport::default();
    for i in 0..3 {
        for l in 0..3 {
            for j in 0..3 {
                for k in (j + 1)..3 {
                    let mut sum = Rat::zero();
                    for m in 0..3 {
                        sum += ft(j, k, m) * f(l, i, m)
                            + ft(k, m, l) * f(m, i, j)
                            - ft(j, m, l) * f(m, i, k)
                            - ft(j, m, i) * f(l, m, k)
                            + ft(k, m, i) * f(l, m, j);
                    }
                    if !sum.is_zero() {
                        report.violations.push((i + 1, j + 1, k + 1, l + 1));
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rint;
    use crate::liecore::{bianchi_algebra, BianchiType};

    #[test]
    fn pair_of_abelian_algebras_is_a_triple() {
        let t = ManinTriple::new(
            "(1|1)",
            LieAlgebra::abelian(3),
            LieAlgebra::abelian(3),
            Params::none(),
        )
        .unwrap();
        let d = dualize(&t);
        assert_eq!(d.g(), t.gt());
        assert_eq!(dualize(&d), t);
    }

    #[test]
    fn incompatible_pair_is_rejected() {
        // 𝒢 = so(3) with 𝒢̃ = so(3) does not satisfy the mixed identity
        let nine = bianchi_algebra(&BianchiType::Nine).unwrap();
        let err = ManinTriple::new("bad", nine.clone(), nine, Params::none()).unwrap_err();
        assert!(matches!(err, ManinError::MixedJacobi(_)));
    }

    #[test]
    fn jacobi_failure_is_reported_with_its_tuple() {
        let broken = LieAlgebra::from_brackets(
            3,
            &[((0, 1), vec![(rint(1), 2)]), ((2, 0), vec![(rint(1), 0)]), ((1, 2), vec![(rint(1), 0)])],
        );
        let err =
            ManinTriple::new("bad", broken, LieAlgebra::abelian(3), Params::none()).unwrap_err();
        let ManinError::JacobiPrimal(violations) = err else { panic!("wrong error") };
        assert_eq!(violations, vec![(1, 2, 3)]);
    }
}
