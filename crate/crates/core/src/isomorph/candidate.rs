//! Isomorphism candidates and exact verification.

use num_traits::{One, Zero};

use crate::exactmath::{Mat, Rat};
use crate::manin::{build_double, dualize, DoubleAlgebra, ManinTriple};

use super::IsoError;

/// A candidate isomorphism between two doubles: the rows of `matrix` express
/// the target's canonical basis in the source's canonical basis.
#[derive(Clone, Debug)]
pub struct IsoCandidate {
    pub from: ManinTriple,
    pub to: ManinTriple,
    pub matrix: Mat<Rat>,
}

/// Exact verification outcome; empty violation lists mean the candidate is
/// a genuine isomorphism of doubles.
#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    /// Pairs (a, b), 1-based, where C·B·Cᵀ differs from B.
    pub form_violations: Vec<(usize, usize)>,
    /// Tuples (a, b, r), 1-based, where the bracket condition fails.
    pub structure_violations: Vec<(usize, usize, usize)>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.form_violations.is_empty() && self.structure_violations.is_empty()
    }
}

impl IsoCandidate {
    pub fn new(from: ManinTriple, to: ManinTriple, matrix: Mat<Rat>) -> Self {
        IsoCandidate { from, to, matrix }
    }

    /// Builds both doubles and verifies the candidate.
    pub fn verify(&self) -> Result<VerifyReport, IsoError> {
        let d_from = build_double(&self.from)?;
        let d_to = build_double(&self.to)?;
        verify_matrix(&self.matrix, &d_from, &d_to)
    }

    /// Witness composition: `self` then `next` gives source → next.target.
    pub fn compose(&self, next: &IsoCandidate) -> IsoCandidate {
        IsoCandidate {
            from: self.from.clone(),
            to: next.to.clone(),
            matrix: next.matrix.mul(&self.matrix),
        }
    }

    /// Witness inversion: target → source.
    pub fn invert(&self) -> Result<IsoCandidate, IsoError> {
        let inv = self.matrix.inverse().ok_or(IsoError::Singular)?;
        Ok(IsoCandidate { from: self.to.clone(), to: self.from.clone(), matrix: inv })
    }
}

/// Verifies both conditions of the isomorphism criterion exactly, listing
/// every violated index. `c`'s rows express the target basis in the source
/// basis; `d` is the source double and `d2` the target.
pub fn verify_matrix(
    c: &Mat<Rat>,
    d: &DoubleAlgebra,
    d2: &DoubleAlgebra,
) -> Result<VerifyReport, IsoError> {
    assert!(c.rows() == 6 && c.cols() == 6);
    if c.det().is_zero() {
        return Err(IsoError::Singular);
    }
    let mut report = VerifyReport::default();
    let b = d.form();
    let cbct = c.mul(&b).mul(&c.transpose());
    for a in 0..6 {
        for bb in 0..6 {
            if cbct[(a, bb)] != b[(a, bb)] {
                report.form_violations.push((a + 1, bb + 1));
            }
        }
    }
    let rows: Vec<Vec<Rat>> = (0..6).map(|i| c.row(i)).collect();
    for a in 0..6 {
        for bb in a + 1..6 {
            let lhs = d.algebra().bracket(&rows[a], &rows[bb]);
            let mut rhs = vec![Rat::zero(); 6];
            for cc in 0..6 {
                let coef = d2.algebra().c(a, bb, cc);
                if coef.is_zero() {
                    continue;
                }
                for (slot, entry) in rhs.iter_mut().zip(&rows[cc]) {
                    *slot += coef.clone() * entry.clone();
                }
            }
            for r in 0..6 {
                if lhs[r] != rhs[r] {
                    report.structure_violations.push((a + 1, bb + 1, r + 1));
                }
            }
        }
    }
    Ok(report)
}

/// The canonical relabeling X_i ↔ X̃^i as a verified witness from a triple
/// to its dual: a permutation matrix, which preserves the canonical form.
pub fn duality_witness(t: &ManinTriple) -> IsoCandidate {
    let mut p = Mat::zero(6, 6);
    for i in 0..3 {
        p[(i, i + 3)] = Rat::one();
        p[(i + 3, i)] = Rat::one();
    }
    IsoCandidate { from: t.clone(), to: dualize(t), matrix: p }
}
