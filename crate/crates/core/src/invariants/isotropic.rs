//! Complete enumeration of maximal isotropic subalgebras and the
//! decomposition-orientation separator.
//!
//! Relative to the transverse pair (𝒢, 𝒢̃) every maximal isotropic subspace L
//! is classified by k = dim(L ∩ 𝒢̃): its projection U to 𝒢 has dimension
//! 3 − k, L ∩ 𝒢̃ is forced to be the annihilator U⁰, and L is the graph of an
//! antisymmetric map U → 𝒢̃/U⁰ over U plus U⁰. Running U over the reduced
//! echelon cells of the Grassmannian gives a disjoint, complete
//! parametrization with at most three unknowns per cell, and the subalgebra
//! closure conditions are polynomial, solved exactly.
//!
//! Two complementary maximal isotropic subalgebras decompose the double into
//! a Manin triple again. For the solvable doubles whose census consists of a
//! single abelian family without dual partner, the remaining decompositions
//! all have both sides of rotation type, and the sign of the extracted dual
//! structure constant is invariant under every admissible renormalization.
//! That sign ("decomposition orientation") separates doubles that agree in
//! every linear invariant and differ only by the sign of the bilinear form.

use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

use crate::exactmath::{rat_sqrt, rint, solve_system, Mat, MPoly, Rat, SolveOutcome};
use crate::liecore::{bianchi_classify, BianchiType, Subspace};
use crate::manin::DoubleAlgebra;

use super::symvec::{sym_bracket, sym_eval, SymVec};
use super::InvariantError;

/// One family of maximal isotropic subalgebras: a cell of the Lagrangian
/// stratification together with the solved parameter set.
#[derive(Clone, Debug)]
pub struct IsotropicFamily {
    /// dim(L ∩ 𝒢̃) of the cell this family lives in.
    pub dual_intersection: usize,
    /// Symbolic basis (entries polynomial in the free parameters).
    basis: Vec<SymVec>,
    /// Free parameter indices of the solved family.
    frees: Vec<usize>,
    /// Fixed parameter values (by variable index).
    fixed: Vec<(usize, Rat)>,
}

impl IsotropicFamily {
    /// Number of free parameters.
    pub fn parameter_count(&self) -> usize {
        self.frees.len()
    }

    /// Concrete members at the given free-parameter values.
    pub fn instantiate(&self, values: &[Rat]) -> Vec<Vec<Rat>> {
        assert_eq!(values.len(), self.frees.len());
        let mut assignment = vec![Rat::zero(); 4];
        for (var, val) in &self.fixed {
            assignment[*var] = val.clone();
        }
        for (var, val) in self.frees.iter().zip(values) {
            assignment[*var] = val.clone();
        }
        self.basis.iter().map(|b| sym_eval(b, &assignment)).collect()
    }
}

/// Enumerates all maximal isotropic subalgebras of the double, as solved
/// families over the Lagrangian cells. `Err` carries an explanation when a
/// cell's closure system cannot be decided exactly.
pub fn isotropic_subalgebra_families(
    d: &DoubleAlgebra,
) -> Result<Vec<IsotropicFamily>, InvariantError> {
    let mut out = Vec::new();
    for k in 0..=3usize {
        for pivots in subsets_of_size(3 - k) {
            let (basis, nvars) = cell_basis(&pivots);
            // closure equations: [s_i, s_j] ∈ L for all pairs
            let mut eqs = Vec::new();
            for i in 0..3 {
                for j in i + 1..3 {
                    let w = sym_bracket(d.algebra(), &basis[i], &basis[j]);
                    eqs.extend(membership_conditions(&w, &pivots, &basis));
                }
            }
            eqs.retain(|p| !p.is_zero());
            match solve_system(&eqs, nvars) {
                SolveOutcome::Infeasible => {}
                SolveOutcome::Undecided => {
                    return Err(InvariantError::Internal(format!(
                        "closure system undecided on cell k={k}, pivots {pivots:?}"
                    )));
                }
                SolveOutcome::Solutions(sols) => {
                    for sol in sols {
                        let frees = sol.free_vars();
                        // resolve bound variables at zero frees to freeze the family
                        let zero_frees: BTreeMap<usize, Rat> =
                            frees.iter().map(|&v| (v, Rat::zero())).collect();
                        let Some(values) = sol.instantiate(&zero_frees) else {
                            return Err(InvariantError::Internal(
                                "unresolvable solution bindings".into(),
                            ));
                        };
                        // substitute the bound variables into the basis,
                        // leaving the frees symbolic
                        let mut substituted = basis.clone();
                        let mut fixed = Vec::new();
                        for v in 0..nvars {
                            if !frees.contains(&v) {
                                let val = MPoly::constant(values[v].clone());
                                for b in &mut substituted {
                                    for entry in b.iter_mut() {
                                        *entry = entry.substitute(v, &val);
                                    }
                                }
                                fixed.push((v, values[v].clone()));
                            }
                        }
                        out.push(IsotropicFamily {
                            dual_intersection: k,
                            basis: substituted,
                            frees,
                            fixed,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

fn subsets_of_size(m: usize) -> Vec<Vec<usize>> {
    let mut subsets = Vec::new();
    for mask in 0..8u8 {
        let set: Vec<usize> = (0..3).filter(|&i| mask & (1 << i) != 0).collect();
        if set.len() == m {
            subsets.push(set);
        }
    }
    subsets
}

/// Symbolic basis of the Lagrangian cell with the given pivot set: graph
/// vectors over the echelon subspace U plus the annihilator U⁰, always three
/// vectors in total. Also returns the number of variables used.
fn cell_basis(pivots: &[usize]) -> (Vec<SymVec>, usize) {
    let m = pivots.len();
    let non_pivots: Vec<usize> = (0..3).filter(|c| !pivots.contains(c)).collect();
    // echelon parameters α_{i,c} for each pivot row i and later non-pivot
    // column c; antisymmetric graph parameters after those
    let mut var = 0;
    let mut alpha = vec![vec![MPoly::zero(); 3]; m];
    for (i, &p) in pivots.iter().enumerate() {
        for &c in &non_pivots {
            if c > p {
                alpha[i][c] = MPoly::var(var);
                var += 1;
            }
        }
    }
    let mut phi = vec![vec![MPoly::zero(); m]; m];
    for i in 0..m {
        for j in i + 1..m {
            phi[i][j] = MPoly::var(var);
            phi[j][i] = phi[i][j].neg();
            var += 1;
        }
    }
    assert!(var <= 4, "cell uses more than four parameters");
    let mut basis: Vec<SymVec> = Vec::new();
    // graph rows: u_i + Σ_j φ_{ij}·X̃^{pivot_j}
    for (i, &p) in pivots.iter().enumerate() {
        let mut v = vec![MPoly::zero(); 6];
        v[p] = MPoly::constant(Rat::one());
        for &c in &non_pivots {
            if c > p {
                v[c] = alpha[i][c].clone();
            }
        }
        for (j, &q) in pivots.iter().enumerate() {
            v[3 + q] = phi[i][j].clone();
        }
        basis.push(v);
    }
    // annihilator rows: X̃^c − Σ_i α_{i,c}·X̃^{pivot_i}
    for &c in &non_pivots {
        let mut v = vec![MPoly::zero(); 6];
        v[3 + c] = MPoly::constant(Rat::one());
        for (i, &p) in pivots.iter().enumerate() {
            if c > p {
                v[3 + p] = alpha[i][c].neg();
            }
        }
        basis.push(v);
    }
    (basis, var)
}

/// Conditions for a symbolic vector to lie in the cell's span.
fn membership_conditions(w: &SymVec, pivots: &[usize], basis: &[SymVec]) -> Vec<MPoly> {
    let m = pivots.len();
    let non_pivots: Vec<usize> = (0..3).filter(|c| !pivots.contains(c)).collect();
    let mut eqs = Vec::new();
    // primal part must lie in U: non-pivot coordinates are determined by the
    // pivot coordinates through the echelon entries
    for &c in &non_pivots {
        let mut expect = MPoly::zero();
        for (i, &p) in pivots.iter().enumerate() {
            expect = expect.add(&w[p].mul(&basis[i][c]));
        }
        eqs.push(w[c].sub(&expect));
    }
    // dual part minus the graph of the primal part must lie in U⁰, i.e.
    // pair to zero with every u_l
    let y: Vec<MPoly> = (0..3)
        .map(|t| {
            let mut acc = w[3 + t].clone();
            for (i, &p) in pivots.iter().enumerate() {
                acc = acc.sub(&w[p].mul(&basis[i][3 + t]));
            }
            acc
        })
        .collect();
    for l in 0..m {
        let mut acc = MPoly::zero();
        for t in 0..3 {
            acc = acc.add(&y[t].mul(&basis[l][t]));
        }
        eqs.push(acc);
    }
    eqs
}

/// Samples every Manin decomposition of the double reachable on a small
/// parameter grid and extracts, for decompositions whose sides are both of
/// rotation type 7_0, the orientation sign of the dual structure constants.
/// Returns the set of observed orientations together with the pair types.
pub fn decomposition_orientations(
    d: &DoubleAlgebra,
) -> Result<DecompositionSummary, InvariantError> {
    let families = isotropic_subalgebra_families(d)?;
    let grid = [rint(0), rint(1), rint(-1), rint(2)];
    let mut members: Vec<Subspace> = Vec::new();
    for family in &families {
        let combos = parameter_grid(family.parameter_count(), &grid);
        for combo in combos {
            let basis = family.instantiate(&combo);
            let span = Subspace::span(6, &basis);
            if span.dim() == 3 && d.is_isotropic(&span) && !members.contains(&span) {
                debug_assert!(d
                    .algebra()
                    .bracket_span(&span, &span)
                    .basis_vectors()
                    .iter()
                    .all(|v| span.contains_vector(v)));
                members.push(span);
            }
        }
    }
    let mut summary = DecompositionSummary::default();
    for (i, l1) in members.iter().enumerate() {
        for l2 in &members[i..] {
            if l1.sum(l2).dim() != 6 {
                continue;
            }
            for (first, second) in [(l1, l2), (l2, l1)] {
                let t1 = side_type(d, first)?;
                let t2 = side_type(d, second)?;
                match orientation_of_pair(d, first, second) {
                    Some(sign) => summary.record(t1, t2, Some(sign)),
                    None => summary.record(t1, t2, None),
                }
            }
        }
    }
    Ok(summary)
}

/// Observed decomposition pair types and rotation orientations.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DecompositionSummary {
    /// Sorted, deduplicated entries "type1|type2|orientation".
    pub entries: Vec<String>,
    /// Observed orientation signs over 7_0|7_0 pairs.
    pub orientations: Vec<i8>,
}

impl DecompositionSummary {
    fn record(&mut self, t1: BianchiType, t2: BianchiType, sign: Option<i8>) {
        let entry = match sign {
            Some(s) => format!("{t1}|{t2}|{}", if s > 0 { "+" } else { "-" }),
            None => format!("{t1}|{t2}"),
        };
        if !self.entries.contains(&entry) {
            self.entries.push(entry);
            self.entries.sort();
        }
        if let Some(s) = sign {
            if !self.orientations.contains(&s) {
                self.orientations.push(s);
                self.orientations.sort();
            }
        }
    }
}

fn side_type(d: &DoubleAlgebra, s: &Subspace) -> Result<BianchiType, InvariantError> {
    let sub = d.algebra().restrict_to(s)?;
    Ok(bianchi_classify(&sub)?)
}

/// For a complementary pair (L₁, L₂) with L₁ of type 7_0, normalizes L₁ to
/// the standard rotation basis and reads the orientation of the dual side's
/// bracket. Returns `None` when L₁ is not of rotation type or the
/// normalization needs an irrational scaling.
fn orientation_of_pair(d: &DoubleAlgebra, l1: &Subspace, l2: &Subspace) -> Option<i8> {
    let alg = d.algebra();
    let sub = alg.restrict_to(l1).ok()?;
    if bianchi_classify(&sub).ok()? != BianchiType::Seven0 {
        return None;
    }
    let basis = l1.basis_vectors();
    // derived algebra of L₁ and a vector outside it
    let derived = alg.bracket_span(l1, l1);
    let y3_raw = basis.iter().find(|v| !derived.contains_vector(v))?.clone();
    // ad(y₃)² = −c² on the derived plane; rescale so the rotation is unit
    let dbasis = derived.basis_vectors();
    let mut a = Mat::zero(2, 2);
    for (j, b) in dbasis.iter().enumerate() {
        let w = alg.bracket(&y3_raw, b);
        let coords = derived.coordinates(&w)?;
        for i in 0..2 {
            a[(i, j)] = coords[i].clone();
        }
    }
    let det = a.det();
    if !det.is_positive() {
        return None;
    }
    let c = rat_sqrt(&det)?;
    let y3: Vec<Rat> = y3_raw.iter().map(|x| x.clone() / c.clone()).collect();
    let y1 = dbasis[0].clone();
    let y2 = alg.bracket(&y3, &y1);
    // dual basis inside L₂
    let l2_basis = l2.basis_vectors();
    let mut gram = Mat::zero(3, 3);
    for (i, w) in l2_basis.iter().enumerate() {
        for (j, y) in [&y1, &y2, &y3].into_iter().enumerate() {
            gram[(i, j)] = d.pair(w, y);
        }
    }
    let inv = gram.inverse()?;
    let dual: Vec<Vec<Rat>> = (0..3)
        .map(|i| {
            let mut v = vec![Rat::zero(); 6];
            for (j, w) in l2_basis.iter().enumerate() {
                for (slot, entry) in v.iter_mut().zip(w) {
                    *slot += inv[(j, i)].clone() * entry.clone();
                }
            }
            v
        })
        .collect();
    // dual-side constants: read the ỹ³-coefficient of [ỹ¹, ỹ²]
    let w = alg.bracket(&dual[0], &dual[1]);
    let l2_span = Subspace::span(6, &dual);
    let coords = l2_span.coordinates(&w)?;
    let c3 = coords[2].clone();
    if c3.is_zero() {
        return None;
    }
    Some(if c3.is_positive() { 1 } else { -1 })
}

fn parameter_grid(nparams: usize, grid: &[Rat]) -> Vec<Vec<Rat>> {
    let mut combos = vec![Vec::new()];
    for _ in 0..nparams {
        let mut next = Vec::new();
        for combo in &combos {
            for g in grid {
                let mut c = combo.clone();
                c.push(g.clone());
                next.push(c);
            }
        }
        combos = next;
    }
    combos
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manin::{build_double, catalog_triple, Params};

    fn double(label: &str) -> DoubleAlgebra {
        build_double(&catalog_triple(label, &Params::none()).unwrap()).unwrap()
    }

    #[test]
    fn rotation_pair_doubles_have_opposite_orientations() {
        let s1 = decomposition_orientations(&double("(7_0|2.i)")).unwrap();
        let s2 = decomposition_orientations(&double("(7_0|2.ii)")).unwrap();
        assert_eq!(s1.orientations, vec![1]);
        assert_eq!(s2.orientations, vec![-1]);
    }

    #[test]
    fn enumeration_finds_the_canonical_pair() {
        let d = double("(7_0|2.i)");
        let families = isotropic_subalgebra_families(&d).unwrap();
        // must include a transverse family (the rotation side) and the
        // full dual side
        assert!(families.iter().any(|f| f.dual_intersection == 0));
        assert!(families.iter().any(|f| f.dual_intersection == 3));
    }
}
