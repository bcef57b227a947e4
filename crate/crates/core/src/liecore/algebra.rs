//! The structure-constant tensor and the invariants derived from it.

use num_traits::Zero;

use crate::exactmath::{signature, Mat, Rat};

use super::subspace::Subspace;
use super::LieError;

/// A finite-dimensional Lie algebra over ℚ given by structure constants
/// c_{ij}^k with [e_i, e_j] = Σ_k c_{ij}^k e_k.
#[derive(Clone)]
pub struct LieAlgebra {
    dim: usize,
    /// Row-major tensor, index (i·n + j)·n + k.
    c: Vec<Rat>,
    labels: Vec<String>,
}

/// Equality is structural: same dimension and structure constants; basis
/// labels are presentation metadata.
impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.c == other.c
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra(dim {})", self.dim)?;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let w = self.bracket_basis(i, j);
                if w.iter().all(Zero::is_zero) {
                    continue;
                }
                let terms: Vec<String> = w
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| format!("{}·{}", x, self.labels[k]))
                    .collect();
                write!(f, " [{},{}]={}", self.labels[i], self.labels[j], terms.join("+"))?;
            }
        }
        Ok(())
    }
}

/// Dimensions of the commutant and the two bracket series.
///
/// `upper` holds dim 𝒟², dim 𝒟³ for the descending series
/// 𝒟^{i+1} = [𝒟^i, 𝒟]; `lower` holds dim 𝒟₂, dim 𝒟₃ for the derived series
/// 𝒟_{i+1} = [𝒟_i, 𝒟_i]. Both start from the commutant 𝒟¹ = 𝒟₁ = [𝒟,𝒟].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesProfile {
    pub commutant: usize,
    pub upper: (usize, usize),
    pub lower: (usize, usize),
}

/// Jacobi-identity check result; an empty violation list means valid.
#[derive(Clone, Debug, Default)]
pub struct JacobiReport {
    /// Triples (i, j, k), 1-based, whose cyclic sum fails.
    pub violations: Vec<(usize, usize, usize)>,
}

impl JacobiReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Membership facts about a subspace of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubspacePredicates {
    pub is_subalgebra: bool,
    pub is_abelian: bool,
    pub is_ideal: bool,
}

impl LieAlgebra {
    /// Builds an algebra from bracket data `[e_i, e_j] = Σ coeff·e_k`
    /// (0-based indices, each unordered pair at most once); antisymmetric
    /// partners are filled in.
    pub fn from_brackets(dim: usize, brackets: &[((usize, usize), Vec<(Rat, usize)>)]) -> Self {
        let mut c = vec![Rat::zero(); dim * dim * dim];
        let mut seen = Vec::new();
        for ((i, j), terms) in brackets {
            assert!(*i < dim && *j < dim && i != j, "bad bracket indices ({i},{j})");
            let key = (*i.min(j), *i.max(j));
            assert!(!seen.contains(&key), "bracket ({i},{j}) assigned twice");
            seen.push(key);
            for (coeff, k) in terms {
                assert!(*k < dim);
                c[(i * dim + j) * dim + k] = coeff.clone();
                c[(j * dim + i) * dim + k] = -coeff.clone();
            }
        }
        let labels = (1..=dim).map(|i| format!("e{i}")).collect();
        LieAlgebra { dim, c, labels }
    }

    pub fn abelian(dim: usize) -> Self {
        Self::from_brackets(dim, &[])
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Structure constant c_{ij}^k (0-based).
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let n = self.dim;
        let mut w = vec![Rat::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let uv = u[i].clone() * v[j].clone();
                for k in 0..n {
                    let cijk = self.c(i, j, k);
                    if !cijk.is_zero() {
                        w[k] += uv.clone() * cijk.clone();
                    }
                }
            }
        }
        w
    }

    /// Matrix of ad(v): x ↦ [v, x] in the standard basis.
    pub fn ad(&self, v: &[Rat]) -> Mat<Rat> {
        let n = self.dim;
        let mut m = Mat::zero(n, n);
        for j in 0..n {
            let e_j: Vec<Rat> =
                (0..n).map(|t| if t == j { Rat::from_integer(1.into()) } else { Rat::zero() }).collect();
            let col = self.bracket(v, &e_j);
            for k in 0..n {
                m[(k, j)] = col[k].clone();
            }
        }
        m
    }

    /// Reports every basis triple (i, j, k) violating the Jacobi identity
    /// Σ_cyc c_{ij}^m c_{mk}^l = 0.
    pub fn check_jacobi(&self) -> JacobiReport {
        let n = self.dim;
        let mut report = JacobiReport::default();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut sums = vec![Rat::zero(); n];
                    for m in 0..n {
                        for l in 0..n {
                            let s = self.c(i, j, m).clone() * self.c(m, k, l).clone()
                                + self.c(j, k, m).clone() * self.c(m, i, l).clone()
                                + self.c(k, i, m).clone() * self.c(m, j, l).clone();
                            sums[l] += s;
                        }
                    }
                    if sums.iter().any(|s| !s.is_zero()) {
                        report.violations.push((i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        report
    }

    /// Antisymmetry of the tensor: c_{ij}^k = −c_{ji}^k.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| *self.c(i, j, k) == -self.c(j, i, k).clone()))
        })
    }

    /// Killing form Gram matrix K_{ab} = Σ c_{ac}^d c_{bd}^c.
    pub fn killing_gram(&self) -> Mat<Rat> {
        let n = self.dim;
        let mut k = Mat::zero(n, n);
        for a in 0..n {
            for b in a..n {
                let mut sum = Rat::zero();
                for c in 0..n {
                    for d in 0..n {
                        let t = self.c(a, c, d).clone() * self.c(b, d, c).clone();
                        sum += t;
                    }
                }
                k[(a, b)] = sum.clone();
                k[(b, a)] = sum;
            }
        }
        k
    }

    pub fn killing_signature(&self) -> (usize, usize, usize) {
        signature(&self.killing_gram()).expect("Killing Gram matrix is symmetric and square")
    }

    pub fn is_semisimple(&self) -> bool {
        let (_, _, z) = self.killing_signature();
        z == 0
    }

    /// Span of all brackets [a, b], a ∈ `s`, b ∈ `t`.
    pub fn bracket_span(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for a in s.basis_vectors() {
            for b in t.basis_vectors() {
                vectors.push(self.bracket(&a, &b));
            }
        }
        Subspace::span(self.dim, &vectors)
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_span(&full, &full)
    }

    /// Dimensions of the commutant, the descending series 𝒟², 𝒟³ and the
    /// derived series 𝒟₂, 𝒟₃. The descending series stabilizes at the third
    /// step for every algebra here; that is asserted.
    pub fn series_profile(&self) -> SeriesProfile {
        let full = Subspace::full(self.dim);
        let d1 = self.bracket_span(&full, &full);
        let d2 = self.bracket_span(&d1, &full);
        let d3 = self.bracket_span(&d2, &full);
        let d4 = self.bracket_span(&d3, &full);
        assert_eq!(d4.dim(), d3.dim(), "descending series must stabilize at step 3");
        let l2 = self.bracket_span(&d1, &d1);
        let l3 = self.bracket_span(&l2, &l2);
        SeriesProfile { commutant: d1.dim(), upper: (d2.dim(), d3.dim()), lower: (l2.dim(), l3.dim()) }
    }

    /// Exact solution space of ad(x) = 0.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // rows indexed by (j, k): Σ_i x_i c_{ij}^k = 0
        let mut m = Mat::zero(n * n, n);
        for j in 0..n {
            for k in 0..n {
                for i in 0..n {
                    m[(j * n + k, i)] = self.c(i, j, k).clone();
                }
            }
        }
        Subspace::span(n, &m.nullspace())
    }

    /// Centralizer of a single vector: {x : [x, v] = 0}.
    pub fn centralizer(&self, v: &[Rat]) -> Subspace {
        let n = self.dim;
        let mut m = Mat::zero(n, n);
        for k in 0..n {
            for i in 0..n {
                let mut sum = Rat::zero();
                for j in 0..n {
                    sum += self.c(i, j, k).clone() * v[j].clone();
                }
                m[(k, i)] = sum;
            }
        }
        Subspace::span(n, &m.nullspace())
    }

    /// Solvable radical as the Killing-orthogonal complement of the derived
    /// subalgebra; the result is verified to be a solvable ideal.
    pub fn radical(&self) -> Result<Subspace, LieError> {
        let derived = self.derived_subalgebra();
        let k = self.killing_gram();
        let basis = derived.basis_vectors();
        let mut m = Mat::zero(basis.len(), self.dim);
        for (r, d) in basis.iter().enumerate() {
            let kd = k.mul_vec(d);
            for i in 0..self.dim {
                m[(r, i)] = kd[i].clone();
            }
        }
        let rad = Subspace::span(self.dim, &m.nullspace());
        if !self.predicates(&rad).is_ideal {
            return Err(LieError::Internal("radical candidate is not an ideal".into()));
        }
        if !self.is_solvable_subspace(&rad) {
            return Err(LieError::Internal("radical candidate is not solvable".into()));
        }
        Ok(rad)
    }

    fn is_solvable_subspace(&self, s: &Subspace) -> bool {
        let mut current = s.clone();
        for _ in 0..=self.dim {
            if current.dim() == 0 {
                return true;
            }
            let next = self.bracket_span(&current, &current);
            if next.dim() == current.dim() {
                return false;
            }
            current = next;
        }
        false
    }

    /// Exact membership tests for a subspace.
    pub fn predicates(&self, s: &Subspace) -> SubspacePredicates {
        let br = self.bracket_span(s, s);
        let is_subalgebra = s.contains(&br);
        let is_abelian = br.dim() == 0;
        let full = Subspace::full(self.dim);
        let is_ideal = s.contains(&self.bracket_span(&full, s));
        SubspacePredicates { is_subalgebra, is_abelian, is_ideal }
    }

    /// The same algebra in a new basis e'_i = Σ_k A_{ki} e_k (columns of `a`
    /// are the new basis vectors).
    pub fn change_basis(&self, a: &Mat<Rat>) -> Result<LieAlgebra, LieError> {
        let n = self.dim;
        assert!(a.rows() == n && a.cols() == n);
        let inv = a
            .inverse()
            .ok_or_else(|| LieError::Unsupported("basis change matrix is singular".into()))?;
        let mut c = vec![Rat::zero(); n * n * n];
        for i in 0..n {
            let ei: Vec<Rat> = (0..n).map(|r| a[(r, i)].clone()).collect();
            for j in 0..n {
                let ej: Vec<Rat> = (0..n).map(|r| a[(r, j)].clone()).collect();
                let w = self.bracket(&ei, &ej);
                let coords = inv.mul_vec(&w);
                for k in 0..n {
                    c[(i * n + j) * n + k] = coords[k].clone();
                }
            }
        }
        Ok(LieAlgebra { dim: n, c, labels: self.labels.clone() })
    }

    /// Structure constants of a subalgebra in the basis of `s`.
    pub fn restrict_to(&self, s: &Subspace) -> Result<LieAlgebra, LieError> {
        let basis = s.basis_vectors();
        let m = basis.len();
        let mut brackets = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let w = self.bracket(&basis[i], &basis[j]);
                let coords = s
                    .coordinates(&w)
                    .ok_or_else(|| LieError::Unsupported("subspace is not a subalgebra".into()))?;
                let terms: Vec<(Rat, usize)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (x, k))
                    .collect();
                brackets.push(((i, j), terms));
            }
        }
        Ok(LieAlgebra::from_brackets(m, &brackets))
    }
}

#[cfg(test)]
mod tests {
    use super::super::bianchi::{bianchi_algebra, BianchiType};
    use super::*;
    use crate::exactmath::rint;

    #[test]
    fn abelian_algebra_is_valid() {
        let a = LieAlgebra::abelian(3);
        assert!(a.check_jacobi().is_valid());
        assert!(a.killing_gram().is_zero());
        assert_eq!(a.center().dim(), 3);
    }

    #[test]
    fn so3_constants_are_valid_and_killing_is_minus_two() {
        let nine = bianchi_algebra(&BianchiType::Nine).unwrap();
        assert!(nine.is_antisymmetric());
        assert!(nine.check_jacobi().is_valid());
        let k = nine.killing_gram();
        assert_eq!(k, Mat::identity(3).scale(&rint(-2)));
        // independent double-sum oracle
        for a in 0..3 {
            for b in 0..3 {
                let mut sum = rint(0);
                for c in 0..3 {
                    for d in 0..3 {
                        sum += nine.c(a, c, d).clone() * nine.c(b, d, c).clone();
                    }
                }
                assert_eq!(k[(a, b)], sum);
            }
        }
    }

    #[test]
    fn sign_flips_of_so3_brackets_stay_valid() {
        // flipping [e1,e2] to −e3 does not break Jacobi: each cyclic term
        // hits a [e_k, e_k], so any sign pattern on this table is a Lie
        // algebra (this one is sl(2,ℝ))
        let flipped = LieAlgebra::from_brackets(
            3,
            &[
                ((0, 1), vec![(rint(-1), 2)]),
                ((1, 2), vec![(rint(1), 0)]),
                ((2, 0), vec![(rint(1), 1)]),
            ],
        );
        assert!(flipped.is_antisymmetric());
        assert!(flipped.check_jacobi().is_valid());
        assert_eq!(
            super::super::bianchi::bianchi_classify(&flipped).unwrap(),
            BianchiType::Eight
        );
    }

    #[test]
    fn broken_brackets_report_the_violating_triple() {
        // [e3,e1] redirected onto e1; the cyclic sum picks up [e1,e2] = e3
        let broken = LieAlgebra::from_brackets(
            3,
            &[
                ((0, 1), vec![(rint(1), 2)]),
                ((1, 2), vec![(rint(1), 0)]),
                ((2, 0), vec![(rint(1), 0)]),
            ],
        );
        assert!(broken.is_antisymmetric());
        let report = broken.check_jacobi();
        assert_eq!(report.violations, vec![(1, 2, 3)]);
    }

    #[test]
    fn killing_of_bianchi_five() {
        let five = bianchi_algebra(&BianchiType::Five).unwrap();
        let k = five.killing_gram();
        assert_eq!(k, Mat::diag(vec![rint(2), rint(0), rint(0)]));
        assert_eq!(five.killing_signature(), (1, 0, 2));
    }

    #[test]
    fn predicates_on_whole_space() {
        let nine = bianchi_algebra(&BianchiType::Nine).unwrap();
        let full = Subspace::full(3);
        let p = nine.predicates(&full);
        assert!(p.is_subalgebra && p.is_ideal && !p.is_abelian);
        let one = LieAlgebra::abelian(3);
        assert!(one.predicates(&full).is_abelian);
    }

    #[test]
    fn series_of_bianchi_two() {
        let two = bianchi_algebra(&BianchiType::Two).unwrap();
        let s = two.series_profile();
        assert_eq!(s.commutant, 1);
        assert_eq!(s.upper, (0, 0));
        assert_eq!(s.lower, (0, 0));
    }

    #[test]
    fn radical_of_semisimple_is_zero() {
        let nine = bianchi_algebra(&BianchiType::Nine).unwrap();
        assert_eq!(nine.radical().unwrap().dim(), 0);
        let five = bianchi_algebra(&BianchiType::Five).unwrap();
        assert_eq!(five.radical().unwrap().dim(), 3);
    }
}
