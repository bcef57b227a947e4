//! Subspaces of a Lie algebra's underlying vector space, held in reduced
//! row echelon form so equality of spans is plain equality of matrices.

use num_traits::Zero;

use crate::exactmath::{Mat, Rat};

/// An exact subspace of ℚ^n, with a canonical (RREF) basis.
#[derive(Clone, PartialEq)]
pub struct Subspace {
    ambient: usize,
    /// RREF basis, one vector per row; no zero rows.
    basis: Mat<Rat>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of {}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

impl Subspace {
    /// The span of the given vectors.
    pub fn span(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length must match ambient dimension");
        }
        if vectors.is_empty() {
            return Subspace { ambient, basis: Mat::zero(0, ambient) };
        }
        let (r, pivots) = Mat::from_rows(vectors.to_vec()).rref();
        let rows: Vec<Vec<Rat>> = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace { ambient, basis: Mat::from_rows(rows) }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::span(ambient, &[])
    }

    pub fn full(ambient: usize) -> Self {
        let id = Mat::identity(ambient);
        Subspace { ambient, basis: id }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        self.basis.row_vecs()
    }

    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let mut rows = self.basis.row_vecs();
        rows.push(v.to_vec());
        Mat::from_rows(rows).rank() == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.ambient, &rows)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // kernel trick: x in both spans ⟺ x = aᵀA = bᵀB with (a, −b) in the
        // kernel of [Aᵀ Bᵀ]
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        let a = &self.basis;
        let b = &other.basis;
        let mut cols: Vec<Vec<Rat>> = Vec::new();
        for i in 0..a.rows() {
            cols.push(a.row(i));
        }
        for i in 0..b.rows() {
            cols.push(b.row(i));
        }
        let stacked = Mat::from_rows(cols).transpose();
        let kernel = stacked.nullspace();
        let vectors: Vec<Vec<Rat>> = kernel
            .iter()
            .map(|k| {
                let mut v = vec![Rat::zero(); self.ambient];
                for (i, coeff) in k.iter().take(a.rows()).enumerate() {
                    for (j, entry) in a.row(i).into_iter().enumerate() {
                        v[j] += coeff.clone() * entry;
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, &vectors)
    }

    /// Indices of standard basis vectors that complete this subspace to the
    /// whole space (the non-pivot coordinates of the RREF basis).
    pub fn standard_complement(&self) -> Vec<usize> {
        let pivots: Vec<usize> = (0..self.dim())
            .map(|i| (0..self.ambient).find(|&j| !self.basis[(i, j)].is_zero()).unwrap())
            .collect();
        (0..self.ambient).filter(|j| !pivots.contains(j)).collect()
    }

    /// Coordinates of `v` in this subspace's basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        self.basis.transpose().solve(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rint;

    fn v(entries: &[i64]) -> Vec<Rat> {
        entries.iter().map(|&x| rint(x)).collect()
    }

    #[test]
    fn span_canonicalizes() {
        let s1 = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]);
        let s2 = Subspace::span(3, &[v(&[1, 1, 1]), v(&[2, 2, 1])]);
        assert_eq!(s1, s2);
        assert_eq!(s1.dim(), 2);
        assert!(s1.contains_vector(&v(&[3, 3, -7])));
        assert!(!s1.contains_vector(&v(&[1, 0, 0])));
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let meet = a.intersection(&b);
        assert_eq!(meet, Subspace::span(3, &[v(&[0, 1, 0])]));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn standard_complement_completes_basis() {
        let s = Subspace::span(4, &[v(&[1, 2, 0, 0]), v(&[0, 0, 1, 5])]);
        assert_eq!(s.standard_complement(), vec![1, 3]);
    }

    #[test]
    fn coordinates_in_basis() {
        let s = Subspace::span(3, &[v(&[1, 0, 1]), v(&[0, 1, 1])]);
        let c = s.coordinates(&v(&[2, 3, 5])).unwrap();
        assert_eq!(c, vec![rint(2), rint(3)]);
        assert!(s.coordinates(&v(&[1, 0, 0])).is_none());
    }
}
