//! Census of maximal isotropic abelian subalgebras.
//!
//! Applies to doubles with a 5-dimensional commutant 𝒟₁ and 1-dimensional
//! center. Any abelian 3-space avoiding 𝒟₁ would need a 3-dimensional
//! centralizer meeting it, so once the centralizer of the out-of-commutant
//! basis direction is verified to be span{e, Z(𝒟)} every maximal isotropic
//! abelian subalgebra 𝒜 satisfies Z(𝒟) ⊆ 𝒜 ⊆ 𝒟₁. Modulo the radical of the
//! pairing on 𝒟₁ (which is exactly Z(𝒟)) the candidates are the Lagrangian
//! planes of a split 4-space, which fall into five shapes relative to the
//! hyperbolic frame (u₁, ũ₁), (u₂, ũ₂), two of them with one rational
//! parameter:
//!
//!   1. span{z, u₁, ũ₂}
//!   2. span{z, u₁ + α·ũ₂, u₂ − α·ũ₁}
//!   3. span{z, u₁ + α·u₂, −α·ũ₁ + ũ₂}
//!   4. span{z, u₂, ũ₁}
//!   5. span{z, ũ₁, ũ₂}
//!
//! The abelian condition (which subsumes closure) becomes polynomial
//! equations of degree ≤ 2 in α, solved exactly over ℚ. For each family a
//! complementary isotropic subalgebra ("dual partner") is searched over the
//! complete graph parametrization of isotropic complements, and classified
//! by Bianchi type when found.

use num_traits::{One, Zero};
use std::collections::BTreeMap;

use crate::exactmath::{
    fmt_rat, rat, rational_roots, rint, solve_system, Mat, MPoly, Poly, Rat, SolveOutcome,
};
use crate::liecore::{bianchi_classify, BianchiType, Subspace};
use crate::manin::DoubleAlgebra;

use super::symvec::{sym_add, sym_bracket, sym_eval, sym_from_rat, sym_mat_apply, sym_scale};
use super::InvariantError;

/// Which of the five ansatz shapes a family comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AnsatzForm {
    Fixed1,
    Parametric2,
    Parametric3,
    Fixed4,
    Fixed5,
}

impl std::fmt::Display for AnsatzForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AnsatzForm::Fixed1 => write!(f, "span{{z, u1, ut2}}"),
            AnsatzForm::Parametric2 => write!(f, "span{{z, u1+a·ut2, u2−a·ut1}}"),
            AnsatzForm::Parametric3 => write!(f, "span{{z, u1+a·u2, −a·ut1+ut2}}"),
            AnsatzForm::Fixed4 => write!(f, "span{{z, u2, ut1}}"),
            AnsatzForm::Fixed5 => write!(f, "span{{z, ut1, ut2}}"),
        }
    }
}

/// Parameter values at which a parametric shape is an abelian subalgebra.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamSet {
    /// The shape has no parameter.
    NotParametric,
    /// A single exact value.
    Value(Rat),
    /// Every parameter value works: a one-parameter family.
    Free,
}

impl std::fmt::Display for ParamSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParamSet::NotParametric => Ok(()),
            ParamSet::Value(v) => write!(f, " at a = {}", fmt_rat(v)),
            ParamSet::Free => write!(f, " for every a"),
        }
    }
}

/// Whether a complementary isotropic subalgebra exists for a family.
#[derive(Clone, Debug, PartialEq)]
pub enum DualPartnerStatus {
    Found {
        /// One witness complement.
        basis: Vec<Vec<Rat>>,
        /// Bianchi type of the witness.
        basis_type: BianchiType,
        /// Sorted set of types over every solution family of the complete
        /// complement search (sampled over free parameters).
        types: Vec<BianchiType>,
    },
    NoneExists,
    Undecided,
}

/// One maximal isotropic abelian subalgebra (or one-parameter family).
#[derive(Clone, Debug, PartialEq)]
pub struct MiaFamily {
    pub form: AnsatzForm,
    pub param: ParamSet,
    /// Basis at the witness parameter (the value itself, or 0 for free).
    pub witness_basis: Vec<Vec<Rat>>,
    pub dual_partner: DualPartnerStatus,
}

impl MiaFamily {
    pub fn dual_types(&self) -> Option<&[BianchiType]> {
        match &self.dual_partner {
            DualPartnerStatus::Found { types, .. } => Some(types),
            _ => None,
        }
    }
}

/// The full census result.
#[derive(Clone, Debug, PartialEq)]
pub struct MiaCensus {
    pub families: Vec<MiaFamily>,
    /// False when the structural reduction did not apply; the families list
    /// is then only a partial answer.
    pub complete: bool,
    pub notes: Vec<String>,
}

impl MiaCensus {
    pub fn family_count(&self) -> usize {
        self.families.len()
    }

    /// Multiset of witness dual-partner types over families that have one.
    pub fn dual_types(&self) -> Vec<BianchiType> {
        let mut types: Vec<BianchiType> = self
            .families
            .iter()
            .filter_map(|f| match &f.dual_partner {
                DualPartnerStatus::Found { basis_type, .. } => Some(basis_type.clone()),
                _ => None,
            })
            .collect();
        types.sort_by_key(|t| t.to_string());
        types
    }

    /// Presentation-independent shape of the census, usable as an
    /// isomorphism invariant. The redundant first shape (it is the zero
    /// member of the third family) is skipped, so the entries are the
    /// disjoint cells of the Lagrangian stratification: each contributes
    /// whether it is an isolated subalgebra or a one-parameter family, and
    /// the set of Bianchi types achieved by its isotropic complements.
    pub fn fingerprint(&self) -> Vec<String> {
        let mut fp: Vec<String> = self
            .families
            .iter()
            .filter(|f| f.form != AnsatzForm::Fixed1)
            .map(|f| {
                let dual = match &f.dual_partner {
                    DualPartnerStatus::Found { types, .. } => {
                        let names: Vec<String> = types.iter().map(|t| t.to_string()).collect();
                        format!("dual{{{}}}", names.join(","))
                    }
                    DualPartnerStatus::NoneExists => "no dual".into(),
                    DualPartnerStatus::Undecided => "dual?".into(),
                };
                let kind = match &f.param {
                    ParamSet::Free => "family",
                    _ => "isolated",
                };
                format!("{kind}|{dual}")
            })
            .collect();
        fp.sort();
        fp
    }
}

/// Runs the census. Returns a census flagged incomplete when the double does
/// not have the structure the reduction needs.
pub fn mia_census(d: &DoubleAlgebra) -> Result<MiaCensus, InvariantError> {
    let alg = d.algebra();
    let mut notes = Vec::new();
    let full = Subspace::full(6);
    let d1 = alg.bracket_span(&full, &full);
    let center = alg.center();
    let frame = match census_frame(d, &d1, &center, &mut notes) {
        Some(f) => f,
        None => {
            return Ok(MiaCensus { families: Vec::new(), complete: false, notes });
        }
    };

    let mut families = Vec::new();
    let e = basis_vec(6, frame.z);
    let u1 = basis_vec(6, frame.u[0]);
    let ut1 = basis_vec(6, frame.u[0] + 3);
    let u2 = basis_vec(6, frame.u[1]);
    let ut2 = basis_vec(6, frame.u[1] + 3);

    // fixed shapes
    for (form, b2, b3) in [
        (AnsatzForm::Fixed1, u1.clone(), ut2.clone()),
        (AnsatzForm::Fixed4, u2.clone(), ut1.clone()),
        (AnsatzForm::Fixed5, ut1.clone(), ut2.clone()),
    ] {
        let basis = vec![e.clone(), b2, b3];
        if is_abelian_span(d, &basis) {
            debug_assert!(d.is_maximally_isotropic(&Subspace::span(6, &basis)));
            let dual_partner = search_dual_partner(d, &basis);
            families.push(MiaFamily {
                form,
                param: ParamSet::NotParametric,
                witness_basis: basis,
                dual_partner,
            });
        }
    }

    // parametric shapes: v2(α), v3(α) with the abelian conditions solved in α
    let alpha = MPoly::var(0);
    for (form, v2, v3) in [
        (
            AnsatzForm::Parametric2,
            sym_add(&sym_from_rat(&u1), &sym_scale(&sym_from_rat(&ut2), &alpha)),
            sym_add(&sym_from_rat(&u2), &sym_scale(&sym_from_rat(&ut1), &alpha.neg())),
        ),
        (
            AnsatzForm::Parametric3,
            sym_add(&sym_from_rat(&u1), &sym_scale(&sym_from_rat(&u2), &alpha)),
            sym_add(&sym_from_rat(&ut2), &sym_scale(&sym_from_rat(&ut1), &alpha.neg())),
        ),
    ] {
        let z_sym = sym_from_rat(&e);
        let mut eqs: Vec<MPoly> = Vec::new();
        for (a, b) in [(&z_sym, &v2), (&z_sym, &v3), (&v2, &v3)] {
            eqs.extend(sym_bracket(alg, a, b));
        }
        eqs.retain(|p| !p.is_zero());
        if eqs.is_empty() {
            // abelian for every parameter value
            let witness = |val: &Rat| -> Vec<Vec<Rat>> {
                let vals = [val.clone(), Rat::zero(), Rat::zero(), Rat::zero()];
                vec![e.clone(), sym_eval(&v2, &vals), sym_eval(&v3, &vals)]
            };
            let basis = witness(&Rat::zero());
            let dual_partner = search_dual_partner(d, &basis);
            // the family's duality behavior is sampled at several values
            for sample in [rint(1), rint(-1), rint(2)] {
                let s_basis = witness(&sample);
                debug_assert!(is_abelian_span(d, &s_basis));
                let s_status = dual_partner_status_kind(&search_dual_partner(d, &s_basis));
                if s_status != dual_partner_status_kind(&dual_partner) {
                    notes.push(format!(
                        "{form}: dual partner existence varies across the family"
                    ));
                    break;
                }
            }
            families.push(MiaFamily {
                form,
                param: ParamSet::Free,
                witness_basis: basis,
                dual_partner,
            });
            continue;
        }
        // each equation is univariate in α of degree ≤ 2
        let mut candidates: Option<Vec<Rat>> = None;
        for p in &eqs {
            let coeffs: Vec<Rat> = p
                .coeffs_in(0)
                .iter()
                .map(|c| c.as_constant().expect("ansatz equations are univariate"))
                .collect();
            let roots = rational_roots(&coeffs)
                .ok_or_else(|| InvariantError::Internal("root search overflow".into()))?;
            if roots.is_empty() {
                let poly = Poly::new(coeffs);
                if poly.degree() == Some(2) {
                    let disc = poly.coeff(1).clone() * poly.coeff(1).clone()
                        - rint(4) * poly.coeff(2).clone() * poly.coeff(0).clone();
                    notes.push(format!(
                        "{form}: no rational member (discriminant {})",
                        fmt_rat(&disc)
                    ));
                }
            }
            candidates = Some(match candidates {
                None => roots,
                Some(prev) => prev.into_iter().filter(|r| roots.contains(r)).collect(),
            });
            if candidates.as_ref().is_some_and(Vec::is_empty) {
                break;
            }
        }
        for root in candidates.unwrap_or_default() {
            let vals = [root.clone(), Rat::zero(), Rat::zero(), Rat::zero()];
            let basis = vec![e.clone(), sym_eval(&v2, &vals), sym_eval(&v3, &vals)];
            debug_assert!(is_abelian_span(d, &basis));
            let dual_partner = search_dual_partner(d, &basis);
            families.push(MiaFamily {
                form,
                param: ParamSet::Value(root),
                witness_basis: basis,
                dual_partner,
            });
        }
    }

    families.sort_by_key(|f| f.form);
    Ok(MiaCensus { families, complete: true, notes })
}

struct CensusFrame {
    /// Index of the center direction (a standard basis vector).
    z: usize,
    /// Indices of the two hyperbolic-frame vectors u₁ < u₂ (their partners
    /// are index ± 3).
    u: [usize; 2],
}

fn basis_vec(n: usize, i: usize) -> Vec<Rat> {
    (0..n).map(|t| if t == i { Rat::one() } else { Rat::zero() }).collect()
}

fn partner(i: usize) -> usize {
    if i < 3 {
        i + 3
    } else {
        i - 3
    }
}

fn census_frame(
    d: &DoubleAlgebra,
    d1: &Subspace,
    center: &Subspace,
    notes: &mut Vec<String>,
) -> Option<CensusFrame> {
    let alg = d.algebra();
    if d1.dim() != 5 {
        notes.push(format!("commutant has dimension {}, need 5", d1.dim()));
        return None;
    }
    if center.dim() != 1 {
        notes.push(format!("center has dimension {}, need 1", center.dim()));
        return None;
    }
    // the unique standard basis direction outside the commutant
    let mut outside = Vec::new();
    for i in 0..6 {
        if !d1.contains_vector(&basis_vec(6, i)) {
            outside.push(i);
        }
    }
    let [e_out] = outside[..] else {
        notes.push("commutant is not spanned by five standard basis vectors".into());
        return None;
    };
    // the pairing radical of the commutant is the partner direction; the
    // reduction needs it to be the center
    let z = partner(e_out);
    if !center.contains_vector(&basis_vec(6, z)) {
        notes.push("center is not the pairing-radical of the commutant".into());
        return None;
    }
    let d2 = alg.bracket_span(d1, d1);
    if d2 != *center {
        notes.push("center differs from [D1, D1]".into());
        return None;
    }
    // "e_out commutes only with the center and itself"
    let centralizer = alg.centralizer(&basis_vec(6, e_out));
    let expected = Subspace::span(6, &[basis_vec(6, e_out), basis_vec(6, z)]);
    if centralizer != expected {
        notes.push("out-of-commutant direction has a larger centralizer".into());
        return None;
    }
    // the four remaining directions form two hyperbolic pairs (u, u+3)
    let blocked = e_out.min(z);
    let u: Vec<usize> = (0..3).filter(|&i| i != blocked).collect();
    Some(CensusFrame { z, u: [u[0], u[1]] })
}

fn is_abelian_span(d: &DoubleAlgebra, basis: &[Vec<Rat>]) -> bool {
    let alg = d.algebra();
    basis.iter().enumerate().all(|(i, a)| {
        basis.iter().skip(i + 1).all(|b| alg.bracket(a, b).iter().all(Zero::is_zero))
    })
}

fn dual_partner_status_kind(s: &DualPartnerStatus) -> u8 {
    match s {
        DualPartnerStatus::Found { .. } => 0,
        DualPartnerStatus::NoneExists => 1,
        DualPartnerStatus::Undecided => 2,
    }
}

/// Searches for an isotropic complementary subalgebra of span(basis).
///
/// Every isotropic complement of a maximal isotropic subspace 𝒜 is the graph
/// span{d_i + Σ_k M_{ik} a_k} of an antisymmetric 3×3 matrix M over a fixed
/// isotropic dual frame {d_i}, so closure under the bracket is a polynomial
/// system in the three entries of M, solved exactly.
pub(crate) fn search_dual_partner(d: &DoubleAlgebra, basis: &[Vec<Rat>]) -> DualPartnerStatus {
    let alg = d.algebra();
    // dual frame: ⟨d_i, a_j⟩ = δ_ij, then isotropy correction
    let b_rows: Vec<Vec<Rat>> = basis.iter().map(|a| d.form().mul_vec(a)).collect();
    let pairing = Mat::from_rows(b_rows);
    let mut dual: Vec<Vec<Rat>> = Vec::new();
    for i in 0..3 {
        let mut target = vec![Rat::zero(); 3];
        target[i] = Rat::one();
        match pairing.solve(&target) {
            Some(v) => dual.push(v),
            None => return DualPartnerStatus::Undecided,
        }
    }
    let raw = dual.clone();
    for i in 0..3 {
        for (j, a) in basis.iter().enumerate() {
            let c = d.pair(&raw[i], &raw[j]) / rint(2);
            if !c.is_zero() {
                for (slot, av) in dual[i].iter_mut().zip(a) {
                    *slot -= c.clone() * av.clone();
                }
            }
        }
    }
    debug_assert!(d.is_isotropic(&Subspace::span(6, &dual)));
    // change of basis into (a₁..a₃, d₁..d₃) coordinates
    let mut cols = basis.to_vec();
    cols.extend(dual.iter().cloned());
    let t = Mat::from_rows(cols).transpose();
    let Some(t_inv) = t.inverse() else { return DualPartnerStatus::Undecided };
    // symbolic graph vectors b_i = d_i + Σ_k M_{ik} a_k
    let (x, y, z) = (MPoly::var(0), MPoly::var(1), MPoly::var(2));
    let m_rows = [
        [MPoly::zero(), x.clone(), y.clone()],
        [x.neg(), MPoly::zero(), z.clone()],
        [y.neg(), z.neg(), MPoly::zero()],
    ];
    let graph: Vec<Vec<MPoly>> = (0..3)
        .map(|i| {
            let mut v = sym_from_rat(&dual[i]);
            for (k, a) in basis.iter().enumerate() {
                v = sym_add(&v, &sym_scale(&sym_from_rat(a), &m_rows[i][k]));
            }
            v
        })
        .collect();
    let mut eqs = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let w = sym_bracket(alg, &graph[i], &graph[j]);
            let coords = sym_mat_apply(&t_inv, &w);
            // membership in the graph: a-part must equal Σ q_i M_{ik}
            for k in 0..3 {
                let mut rhs = MPoly::zero();
                for (qi, row) in coords[3..].iter().zip(&m_rows) {
                    rhs = rhs.add(&qi.mul(&row[k]));
                }
                eqs.push(coords[k].sub(&rhs));
            }
        }
    }
    match solve_system(&eqs, 3) {
        SolveOutcome::Infeasible => DualPartnerStatus::NoneExists,
        SolveOutcome::Undecided => DualPartnerStatus::Undecided,
        SolveOutcome::Solutions(sols) => {
            let mut witness: Option<(Vec<Vec<Rat>>, BianchiType)> = None;
            let mut types: Vec<BianchiType> = Vec::new();
            let sample_grid =
                [Rat::zero(), Rat::one(), -Rat::one(), rint(2), rint(-2), rat(1, 2)];
            for sol in &sols {
                let frees = sol.free_vars();
                let assignments: Vec<BTreeMap<usize, Rat>> = if frees.is_empty() {
                    vec![BTreeMap::new()]
                } else {
                    sample_grid
                        .iter()
                        .map(|g| frees.iter().map(|&v| (v, g.clone())).collect())
                        .collect()
                };
                for assignment in assignments {
                    let Some(values) = sol.instantiate(&assignment) else { continue };
                    let vals: Vec<Rat> = (0..4)
                        .map(|i| values.get(i).cloned().unwrap_or_else(Rat::zero))
                        .collect();
                    let numeric: Vec<Vec<Rat>> =
                        graph.iter().map(|g| sym_eval(g, &vals)).collect();
                    let span = Subspace::span(6, &numeric);
                    debug_assert!(d.is_maximally_isotropic(&span));
                    debug_assert_eq!(span.sum(&Subspace::span(6, basis)).dim(), 6);
                    let Ok(sub) = alg.restrict_to(&span) else { continue };
                    let Ok(t) = bianchi_classify(&sub) else { continue };
                    if witness.is_none() {
                        witness = Some((numeric, t.clone()));
                    }
                    if !types.contains(&t) {
                        types.push(t);
                    }
                }
            }
            types.sort_by_key(|t| t.to_string());
            match witness {
                Some((basis, basis_type)) => {
                    DualPartnerStatus::Found { basis, basis_type, types }
                }
                None => DualPartnerStatus::Undecided,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::manin::{build_double, catalog_triple, Params};

    fn census_of(label: &str, params: Params) -> MiaCensus {
        let t = catalog_triple(label, &params).unwrap();
        mia_census(&build_double(&t).unwrap()).unwrap()
    }

    #[test]
    fn census_of_seven_a_has_two_families_with_seven_a_duals() {
        let c = census_of("(7_a|1)", Params::with_a(rint(2)));
        assert!(c.complete);
        assert_eq!(c.family_count(), 2);
        assert_eq!(
            c.dual_types(),
            vec![BianchiType::SevenA(rint(2)), BianchiType::SevenA(rint(2))]
        );
    }

    #[test]
    fn census_of_six_a_has_four_families() {
        let c = census_of("(6_a|1)", Params::with_a(rint(2)));
        assert!(c.complete);
        assert_eq!(c.family_count(), 4);
        // two families pair with type 6_a, two with 6_{1/a}
        let duals = c.dual_types();
        assert_eq!(
            duals,
            vec![
                BianchiType::SixA(rat(1, 2)),
                BianchiType::SixA(rat(1, 2)),
                BianchiType::SixA(rint(2)),
                BianchiType::SixA(rint(2)),
            ]
        );
    }

    #[test]
    fn census_counts_of_five_four_and_seven_zero() {
        assert_eq!(census_of("(5|1)", Params::none()).family_count(), 5);
        assert_eq!(census_of("(4|1)", Params::none()).family_count(), 3);
        assert_eq!(census_of("(7_0|1)", Params::none()).family_count(), 2);
        let c = census_of("(7_0|2.i)", Params::none());
        assert_eq!(c.family_count(), 1);
        assert_eq!(c.families[0].dual_partner, DualPartnerStatus::NoneExists);
    }

    #[test]
    fn fingerprints_agree_across_presentations_of_one_double() {
        // (5|1) and (6_0|1) decompose the same double; the raw family count
        // differs between presentations (the first shape re-lists the zero
        // member of the third family) but the intrinsic fingerprint must not
        let c5 = census_of("(5|1)", Params::none());
        let c6 = census_of("(6_0|1)", Params::none());
        assert_eq!(c5.family_count(), 5);
        assert_eq!(c6.family_count(), 4);
        assert_eq!(c5.fingerprint(), c6.fingerprint());
    }

    #[test]
    fn census_is_flagged_incomplete_outside_its_block() {
        let c = census_of("(9|5|b)", Params::with_b(rint(1)));
        assert!(!c.complete);
        assert!(c.families.is_empty());
    }
}
