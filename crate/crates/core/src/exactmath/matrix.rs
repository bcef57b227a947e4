//! Dense exact matrices over a [`Field`].
//!
//! Matrices are immutable value types sized at construction; operations
//! return fresh values. Elimination uses exact field division throughout, so
//! rank, nullspace, determinant and inverse are exact. The symmetric-form
//! signature is computed by congruence diagonalization (Sylvester's law),
//! with the hyperbolic-pair reduction when every remaining diagonal entry
//! vanishes, so no root-finding is ever required.

use num_traits::{Signed, Zero};

use super::scalar::{Field, Rat};
use super::{ExactError, Poly};

/// A dense row-major matrix with exact entries.
#[derive(Clone, PartialEq)]
pub struct Mat<F: Field = Rat> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> std::fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:?}", self[(i, j)])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> std::ops::Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Mat<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds an `n`×`n` matrix from integer literals, mostly for tests and
    /// fixed constants.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| F::from_int(x)).collect()).collect(),
        )
    }

    pub fn diag(entries: Vec<F>) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + add;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .fold(F::zero(), |acc, j| acc + self[(i, j)].clone() * v[j].clone())
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data =
            self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data =
            self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F) -> Self {
        let data = self.data.iter().map(|a| a.clone() * s.clone()).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            for j in 0..a.cols {
                let tmp = a[(r, j)].clone();
                a[(r, j)] = a[(p, j)].clone();
                a[(p, j)] = tmp;
            }
            let inv = a[(r, c)].clone();
            for j in 0..a.cols {
                a[(r, j)] = a[(r, j)].clone() / inv.clone();
            }
            for i in 0..a.rows {
                if i != r && !a[(i, c)].is_zero() {
                    let f = a[(i, c)].clone();
                    for j in 0..a.cols {
                        let sub = f.clone() * a[(r, j)].clone();
                        a[(i, j)] = a[(i, j)].clone() - sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact basis of the right nullspace: every returned `v` has `Mv = 0`,
    /// and the basis size is `cols − rank`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    v[col] = -r[(*row, free)].clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn det(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut a = self.clone();
        let n = a.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                for j in 0..n {
                    let tmp = a[(c, j)].clone();
                    a[(c, j)] = a[(p, j)].clone();
                    a[(p, j)] = tmp;
                }
                det = -det;
            }
            det = det * a[(c, c)].clone();
            let inv = a[(c, c)].clone();
            for i in c + 1..n {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone() / inv.clone();
                for j in c..n {
                    let sub = f.clone() * a[(c, j)].clone();
                    a[(i, j)] = a[(i, j)].clone() - sub;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// One solution of `Mx = b` (free variables set to zero), or `None` when
    /// the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Characteristic polynomial `det(λI − M)`, monic of degree `n`, by the
    /// Faddeev–LeVerrier recurrence (exact in characteristic zero).
    pub fn char_poly(&self) -> Result<Poly<F>, ExactError> {
        if !self.is_square() {
            return Err(ExactError::Contract(
                "characteristic polynomial of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        let mut m = Mat::identity(n);
        for k in 1..=n {
            if k > 1 {
                // M_k = A·M_{k−1} + c_{n−k+1}·I
                let mut next = self.mul(&m);
                for i in 0..n {
                    next[(i, i)] = next[(i, i)].clone() + coeffs[n - k + 1].clone();
                }
                m = next;
            }
            let am = self.mul(&m);
            let trace = (0..n).fold(F::zero(), |acc, i| acc + am[(i, i)].clone());
            coeffs[n - k] = -(trace / F::from_int(k as i64));
        }
        Ok(Poly::new(coeffs))
    }
}

/// Signature `(p, n, z)` of a symmetric rational matrix: the counts of
/// positive, negative and zero eigenvalues, obtained by exact congruence
/// diagonalization.
pub fn signature(m: &Mat<Rat>) -> Result<(usize, usize, usize), ExactError> {
    if !m.is_square() {
        return Err(ExactError::Contract("signature of a non-square matrix".into()));
    }
    if !m.is_symmetric() {
        return Err(ExactError::Contract("signature of a non-symmetric matrix".into()));
    }
    let n = m.rows();
    let mut a = m.clone();
    // symmetric row+column operation helpers keep A congruent to the input
    for i in 0..n {
        if a[(i, i)].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                swap_sym(&mut a, i, j);
            } else if let Some(j) = (i + 1..n).find(|&j| !a[(i, j)].is_zero()) {
                // all remaining diagonal entries vanish: fold the hyperbolic
                // pair (i, j) so the diagonal entry becomes 2·a[i][j] ≠ 0
                add_sym(&mut a, i, j);
            } else {
                continue;
            }
        }
        let pivot = a[(i, i)].clone();
        for j in i + 1..n {
            if a[(j, i)].is_zero() {
                continue;
            }
            let f = a[(j, i)].clone() / pivot.clone();
            eliminate_sym(&mut a, i, j, &f);
        }
    }
    let (mut p, mut neg, mut z) = (0, 0, 0);
    for i in 0..n {
        let d = &a[(i, i)];
        if d.is_zero() {
            z += 1;
        } else if d.is_positive() {
            p += 1;
        } else {
            neg += 1;
        }
    }
    debug_assert_eq!(p + neg + z, n);
    Ok((p, neg, z))
}

fn swap_sym(a: &mut Mat<Rat>, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let tmp = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = tmp;
    }
    for r in 0..n {
        let tmp = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = tmp;
    }
}

fn add_sym(a: &mut Mat<Rat>, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let add = a[(j, c)].clone();
        a[(i, c)] = a[(i, c)].clone() + add;
    }
    for r in 0..n {
        let add = a[(r, j)].clone();
        a[(r, i)] = a[(r, i)].clone() + add;
    }
}

fn eliminate_sym(a: &mut Mat<Rat>, i: usize, j: usize, f: &Rat) {
    let n = a.rows();
    for c in 0..n {
        let sub = f.clone() * a[(i, c)].clone();
        a[(j, c)] = a[(j, c)].clone() - sub;
    }
    for r in 0..n {
        let sub = f.clone() * a[(r, i)].clone();
        a[(r, j)] = a[(r, j)].clone() - sub;
    }
}
