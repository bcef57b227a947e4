//! Levi complements for algebras whose radical is abelian.
//!
//! With an abelian radical N the correction is linear: lift a basis of the
//! semisimple quotient, write the bracket defects in N, and solve the exact
//! linear system that makes the lifted span close under the bracket. A
//! solution always exists for valid input; the homogeneous solution space
//! parametrizes all complements reachable from the chosen lift, which is what
//! the randomized-lift checks sample.

use num_traits::Zero;

use crate::exactmath::{Mat, Rat};

use super::algebra::LieAlgebra;
use super::subspace::Subspace;
use super::LieError;

/// One Levi complement of `rad` in `alg`.
pub fn levi_complement(alg: &LieAlgebra, rad: &Subspace) -> Result<Subspace, LieError> {
    Ok(levi_solution_space(alg, rad)?.complement(&[]))
}

/// Several Levi complements obtained from distinct solutions of the
/// correction system (at least one; more when the system is underdetermined).
/// `seeds` picks the homogeneous combinations, so callers control sampling.
pub fn levi_complements_randomized(
    alg: &LieAlgebra,
    rad: &Subspace,
    seeds: &[Vec<Rat>],
) -> Result<Vec<Subspace>, LieError> {
    let space = levi_solution_space(alg, rad)?;
    let mut out = vec![space.complement(&[])];
    for seed in seeds {
        out.push(space.complement(seed));
    }
    Ok(out)
}

struct LeviSolutions {
    ambient: usize,
    lift: Vec<Vec<Rat>>,
    rad_basis: Vec<Vec<Rat>>,
    particular: Vec<Rat>,
    homogeneous: Vec<Vec<Rat>>,
}

impl LeviSolutions {
    /// Assembles span{c_i + u_i} for the correction u = particular + Σ seed·h.
    fn complement(&self, seed: &[Rat]) -> Subspace {
        let mut u = self.particular.clone();
        for (s, h) in seed.iter().zip(&self.homogeneous) {
            for (t, hv) in u.iter_mut().zip(h) {
                *t += s.clone() * hv.clone();
            }
        }
        let m = self.lift.len();
        let r = self.rad_basis.len();
        let vectors: Vec<Vec<Rat>> = (0..m)
            .map(|i| {
                let mut v = self.lift[i].clone();
                for (t, rb) in (0..r).map(|j| (u[i * r + j].clone(), &self.rad_basis[j])) {
                    for (slot, entry) in v.iter_mut().zip(rb) {
                        *slot += t.clone() * entry.clone();
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, &vectors)
    }
}

fn levi_solution_space(alg: &LieAlgebra, rad: &Subspace) -> Result<LeviSolutions, LieError> {
    let n = alg.dim();
    if rad.dim() == 0 {
        return Ok(LeviSolutions {
            ambient: n,
            lift: Subspace::full(n).basis_vectors(),
            rad_basis: vec![],
            particular: vec![],
            homogeneous: vec![],
        });
    }
    if alg.bracket_span(rad, rad).dim() != 0 {
        return Err(LieError::Unsupported("Levi correction needs an abelian radical".into()));
    }
    let rad_basis = rad.basis_vectors();
    let r = rad_basis.len();
    let m = n - r;
    // lift: standard basis vectors complementary to the radical
    let lift: Vec<Vec<Rat>> = rad
        .standard_complement()
        .into_iter()
        .map(|j| {
            let mut v = vec![Rat::zero(); n];
            v[j] = Rat::from_integer(1.into());
            v
        })
        .collect();
    // full-space basis (radical ∪ lift) for decompositions
    let mut full_rows = rad_basis.clone();
    full_rows.extend(lift.iter().cloned());
    let full = Mat::from_rows(full_rows).transpose();
    let decompose = |v: &[Rat]| -> (Vec<Rat>, Vec<Rat>) {
        let x = full.solve(v).expect("radical ∪ lift spans the algebra");
        (x[..r].to_vec(), x[r..].to_vec())
    };
    // quotient constants γ and defects n_ij
    let mut gamma = vec![vec![Rat::zero(); m]; m * m];
    let mut defect = vec![vec![Rat::zero(); r]; m * m];
    for i in 0..m {
        for j in 0..m {
            let w = alg.bracket(&lift[i], &lift[j]);
            let (nij, gij) = decompose(&w);
            gamma[i * m + j] = gij;
            defect[i * m + j] = nij;
        }
    }
    // unknowns u_{i,t}: coordinates of the correction of lift[i] in the
    // radical basis. For each pair i<j and radical coordinate t:
    //   [c_i, u_j] − [c_j, u_i] − γ_ij^k u_k = −n_ij
    let unknowns = m * r;
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let mut a: Mat<Rat> = Mat::zero(pairs.len() * r, unknowns);
    let mut b = vec![Rat::zero(); pairs.len() * r];
    // ad action of each lift vector on the radical, in radical coordinates
    let ad_on_rad: Vec<Mat<Rat>> = lift
        .iter()
        .map(|c| {
            let mut mat = Mat::zero(r, r);
            for (s, rb) in rad_basis.iter().enumerate() {
                let w = alg.bracket(c, rb);
                let (coords, rest) = decompose(&w);
                assert!(rest.iter().all(Zero::is_zero), "radical must be an ideal");
                for t in 0..r {
                    mat[(t, s)] = coords[t].clone();
                }
            }
            mat
        })
        .collect();
    for (row_block, &(i, j)) in pairs.iter().enumerate() {
        for t in 0..r {
            let row = row_block * r + t;
            // [c_i, u_j] term
            for s in 0..r {
                a[(row, j * r + s)] = a[(row, j * r + s)].clone() + ad_on_rad[i][(t, s)].clone();
                a[(row, i * r + s)] = a[(row, i * r + s)].clone() - ad_on_rad[j][(t, s)].clone();
            }
            // −γ_ij^k u_{k,t}
            for k in 0..m {
                let g = gamma[i * m + j][k].clone();
                if !g.is_zero() {
                    a[(row, k * r + t)] = a[(row, k * r + t)].clone() - g;
                }
            }
            b[row] = -defect[i * m + j][t].clone();
        }
    }
    let particular = a
        .solve(&b)
        .ok_or_else(|| LieError::Internal("Levi correction system is inconsistent".into()))?;
    let homogeneous = a.nullspace();
    Ok(LeviSolutions { ambient: n, lift, rad_basis, particular, homogeneous })
}
