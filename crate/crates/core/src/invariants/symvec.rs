//! Vectors with polynomial entries, for the one- and three-parameter
//! subalgebra ansatz computations.

use num_traits::Zero;

use crate::exactmath::{Mat, MPoly, Rat};
use crate::liecore::LieAlgebra;

pub(crate) type SymVec = Vec<MPoly>;

pub(crate) fn sym_from_rat(v: &[Rat]) -> SymVec {
    v.iter().map(|x| MPoly::constant(x.clone())).collect()
}

pub(crate) fn sym_add(u: &SymVec, v: &SymVec) -> SymVec {
    u.iter().zip(v).map(|(a, b)| a.add(b)).collect()
}

pub(crate) fn sym_scale(v: &SymVec, s: &MPoly) -> SymVec {
    v.iter().map(|a| a.mul(s)).collect()
}

/// Bracket of two symbolic vectors through the structure constants.
pub(crate) fn sym_bracket(alg: &LieAlgebra, u: &SymVec, v: &SymVec) -> SymVec {
    let n = alg.dim();
    let mut w = vec![MPoly::zero(); n];
    for i in 0..n {
        if u[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if v[j].is_zero() {
                continue;
            }
            let prod = u[i].mul(&v[j]);
            for k in 0..n {
                let c = alg.c(i, j, k);
                if !c.is_zero() {
                    w[k] = w[k].add(&prod.scale(c));
                }
            }
        }
    }
    w
}

/// Applies a rational matrix to a symbolic vector.
pub(crate) fn sym_mat_apply(m: &Mat<Rat>, v: &SymVec) -> SymVec {
    (0..m.rows())
        .map(|i| {
            let mut acc = MPoly::zero();
            for (j, entry) in v.iter().enumerate() {
                let c = &m[(i, j)];
                if !c.is_zero() {
                    acc = acc.add(&entry.scale(c));
                }
            }
            acc
        })
        .collect()
}

pub(crate) fn sym_eval(v: &SymVec, values: &[Rat]) -> Vec<Rat> {
    v.iter().map(|p| p.eval(values)).collect()
}
