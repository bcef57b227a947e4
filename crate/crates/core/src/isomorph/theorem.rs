//! End-to-end reproduction of the 22-class classification.
//!
//! The pipeline instantiates the whole catalog on a parameter grid, computes
//! every invariant profile, groups the triples into the 22 classes, verifies
//! an explicit witness for every intra-class edge (catalog matrices, duality
//! relabelings, inverse-parameter normalizations, extracted decompositions,
//! and their compositions), and names a separating invariant for every pair
//! of distinct doubles. Known discrepancies of the source tables are
//! reported as annotations, never silently patched.

use num_traits::{One, Signed, Zero};

use crate::exactmath::{fmt_rat, parse_rat, rat, Mat, Rat};
use crate::invariants::{
    decomposition_orientations, mia_census, profile_of_double, DualPartnerStatus,
    InvariantProfile,
};
use crate::liecore::BianchiType;
use crate::manin::{build_double, catalog_triple, dualize, DoubleAlgebra, Params};

use super::candidate::{duality_witness, IsoCandidate};
use super::matrices::catalog_iso;
use super::IsoError;

/// The parameter grid on which parametric triples are instantiated.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    pub a_values: Vec<Rat>,
    pub b_values: Vec<Rat>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            a_values: vec![rat(2, 1), rat(3, 1), rat(1, 2)],
            b_values: vec![rat(1, 1), rat(2, 1), rat(-1, 1)],
        }
    }
}

impl GridSpec {
    /// Parses `a=2,3,1/2;b=1,2,-1`. Each part optional.
    pub fn parse(text: &str) -> Result<GridSpec, String> {
        let mut grid = GridSpec { a_values: vec![], b_values: vec![] };
        for part in text.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (name, values) =
                part.split_once('=').ok_or_else(|| format!("bad grid part `{part}`"))?;
            let parsed: Result<Vec<Rat>, _> = values.split(',').map(parse_rat).collect();
            let parsed = parsed.map_err(|e| format!("bad grid value in `{part}`: {e}"))?;
            match name.trim() {
                "a" => grid.a_values = parsed,
                "b" => grid.b_values = parsed,
                other => return Err(format!("unknown grid parameter `{other}`")),
            }
        }
        if grid.a_values.is_empty() || grid.b_values.is_empty() {
            return Err("grid must bind both a and b".into());
        }
        Ok(grid)
    }

    fn a_above_one(&self) -> Vec<Rat> {
        self.a_values.iter().filter(|a| **a > Rat::one()).cloned().collect()
    }

    fn a_below_one(&self) -> Vec<Rat> {
        self.a_values
            .iter()
            .filter(|a| a.is_positive() && **a < Rat::one())
            .cloned()
            .collect()
    }

    fn b_positive(&self) -> Vec<Rat> {
        self.b_values.iter().filter(|b| b.is_positive()).cloned().collect()
    }

    fn b_nonzero(&self) -> Vec<Rat> {
        self.b_values.iter().filter(|b| !b.is_zero()).cloned().collect()
    }
}

/// One triple instance inside a class.
#[derive(Clone, Debug)]
pub struct ClassMember {
    pub label: String,
    pub params: Params,
    pub profile: InvariantProfile,
}

/// A verified witness between two member presentations.
#[derive(Clone, Debug)]
pub struct WitnessEdge {
    pub from: String,
    pub to: String,
    pub via: String,
    pub matrix: Mat<Rat>,
}

/// One class at one grid binding: a single isomorphism class of doubles.
#[derive(Clone, Debug)]
pub struct ClassInstance {
    pub binding: String,
    pub members: Vec<ClassMember>,
    pub edges: Vec<WitnessEdge>,
    /// Profile of the class representative (the first member).
    pub profile: InvariantProfile,
}

impl ClassInstance {
    pub fn id(&self, class_index: usize) -> String {
        if self.binding.is_empty() {
            format!("class {class_index}")
        } else {
            format!("class {class_index} [{}]", self.binding)
        }
    }
}

/// One of the 22 classes (a parametrized family of doubles).
#[derive(Clone, Debug)]
pub struct TheoremClass {
    pub index: usize,
    pub title: String,
    pub instances: Vec<ClassInstance>,
}

/// A named separation between two class instances.
#[derive(Clone, Debug)]
pub struct SeparationRecord {
    pub left: String,
    pub right: String,
    pub invariant: String,
}

/// The full classification report.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub grid: GridSpec,
    pub classes: Vec<TheoremClass>,
    pub separations: Vec<SeparationRecord>,
    pub annotations: Vec<String>,
    pub failures: Vec<String>,
}

impl ClassificationReport {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn all_verified(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares two profiles invariant by invariant and names the first one that
/// distinguishes them. The census fingerprint is compared only when both
/// censuses are complete; `None` means no implemented linear invariant
/// separates the profiles.
pub fn separating_invariant(p: &InvariantProfile, q: &InvariantProfile) -> Option<String> {
    if p.killing != q.killing {
        return Some("killing-signature".into());
    }
    if p.series != q.series {
        return Some("series-dimensions".into());
    }
    match (&p.split, &q.split) {
        (Some(a), Some(b)) if a != b => return Some("split-quadratic".into()),
        _ => {}
    }
    match (&p.levi, &q.levi) {
        (Some(a), Some(b)) if a != b => return Some("levi-restriction".into()),
        _ => {}
    }
    if p.center_signature != q.center_signature {
        return Some("center-signature".into());
    }
    match (&p.mia, &q.mia) {
        (Some(a), Some(b)) if a.complete && b.complete && a.fingerprint() != b.fingerprint() => {
            return Some("mia-census".into())
        }
        _ => {}
    }
    None
}

struct MemberSpec {
    label: &'static str,
    params: Params,
}

fn m(label: &'static str, a: Option<Rat>, b: Option<Rat>) -> MemberSpec {
    MemberSpec { label, params: Params { a, b } }
}

struct ClassSpec {
    index: usize,
    title: String,
    binding: String,
    members: Vec<MemberSpec>,
    /// Star edges from the representative: (to-label as known to the matrix
    /// catalog, parameters of the representative).
    star: Vec<&'static str>,
    /// Edge kinds beyond the catalog star.
    extra: Vec<ExtraEdge>,
}

enum ExtraEdge {
    /// rep(a, b) → catalog(1/a, b) through duality + rescaling of the first
    /// basis vector (the inverse-parameter presentations of one double).
    InverseParameter,
    /// (6_a|1) → (6_{1/a}|1) through a maximal isotropic abelian subalgebra
    /// and its complement, normalized to the standard basis.
    SixInverseDecomposition,
}

/// Runs the full pipeline on the grid.
pub fn verify_theorem(grid: &GridSpec) -> Result<ClassificationReport, IsoError> {
    let mut classes = Vec::new();
    let mut failures = Vec::new();
    let mut annotations = standard_annotations();

    for spec in class_specs(grid) {
        let instance = build_instance(&spec, &mut failures)?;
        match classes.iter_mut().find(|c: &&mut TheoremClass| c.index == spec.index) {
            Some(class) => class.instances.push(instance),
            None => classes.push(TheoremClass {
                index: spec.index,
                title: spec.title.clone(),
                instances: vec![instance],
            }),
        }
    }
    classes.sort_by_key(|c| c.index);

    // pairwise separation of distinct doubles
    let mut separations = Vec::new();
    let mut flat: Vec<(String, &ClassInstance)> = Vec::new();
    for class in &classes {
        for instance in &class.instances {
            flat.push((instance.id(class.index), instance));
        }
    }
    for i in 0..flat.len() {
        for j in i + 1..flat.len() {
            let (lid, li) = &flat[i];
            let (rid, ri) = &flat[j];
            let invariant = match separating_invariant(&li.profile, &ri.profile) {
                Some(inv) => inv,
                None => match orientation_separator(li, ri)? {
                    Some(inv) => inv,
                    None => {
                        failures.push(format!("no separating invariant for {lid} vs {rid}"));
                        continue;
                    }
                },
            };
            separations.push(SeparationRecord {
                left: lid.clone(),
                right: rid.clone(),
                invariant,
            });
        }
    }

    // census notes surface as annotations
    for class in &classes {
        for instance in &class.instances {
            if let Some(mia) = &instance.profile.mia {
                for note in &mia.notes {
                    let text = format!("{}: {}", instance.id(class.index), note);
                    if !annotations.contains(&text) {
                        annotations.push(text);
                    }
                }
            }
        }
    }

    Ok(ClassificationReport {
        grid: grid.clone(),
        classes,
        separations,
        annotations,
        failures,
    })
}

fn standard_annotations() -> Vec<String> {
    vec![
        "the catalog entry (8|5.iii) is the triple the class list names (8|2.iii); its dual \
         algebra classifies as Bianchi 5 and its double joins class 6 by the verified witness \
         from (8|1)"
            .into(),
        "the invariant table's row labeled (2|2) has no catalog entry; the computed profile \
         of (2|1) matches that row exactly (class 19)"
            .into(),
        "class 8 carries the scaling parameter b of (3|3.i) even though the class list prints \
         it unparametrized: the restriction of the form to the Levi complement is -1/(16b) \
         times the Killing form, so different b give non-isomorphic doubles"
            .into(),
        "class 18 instantiates the 7-family at a = 1 in addition to the grid values, since \
         the class exists only there"
            .into(),
    ]
}

fn class_specs(grid: &GridSpec) -> Vec<ClassSpec> {
    let mut specs = Vec::new();
    let bind_b = |b: &Rat| format!("b={}", fmt_rat(b));
    let bind_ab = |a: &Rat, b: &Rat| format!("a={},b={}", fmt_rat(a), fmt_rat(b));
    let bind_a = |a: &Rat| format!("a={}", fmt_rat(a));

    for b in grid.b_positive() {
        specs.push(ClassSpec {
            index: 1,
            title: "(9|5|b) = (8|5.ii|b) = (7_0|5.ii|b), b > 0".into(),
            binding: bind_b(&b),
            members: vec![
                m("(9|5|b)", None, Some(b.clone())),
                m("(8|5.ii|b)", None, Some(b.clone())),
                m("(7_0|5.ii|b)", None, Some(b.clone())),
            ],
            star: vec!["(8|5.ii|b)", "(7_0|5.ii|b)"],
            extra: vec![],
        });
        specs.push(ClassSpec {
            index: 2,
            title: "(8|5.i|b) = (6_0|5.iii|b), b > 0".into(),
            binding: bind_b(&b),
            members: vec![
                m("(8|5.i|b)", None, Some(b.clone())),
                m("(6_0|5.iii|b)", None, Some(b.clone())),
            ],
            star: vec!["(6_0|5.iii|b)"],
            extra: vec![],
        });
    }
    for a in grid.a_above_one() {
        for b in grid.b_nonzero() {
            specs.push(ClassSpec {
                index: 3,
                title: "(7_a|7_{1/a}|b) = (7_{1/a}|7_a|b), a >= 1, b != 0".into(),
                binding: bind_ab(&a, &b),
                members: vec![
                    m("(7_a|7_{1/a}|b)", Some(a.clone()), Some(b.clone())),
                    m("(7_a|7_{1/a}|b)", Some(Rat::one() / a.clone()), Some(b.clone())),
                ],
                star: vec![],
                extra: vec![ExtraEdge::InverseParameter],
            });
            specs.push(ClassSpec {
                index: 4,
                title: "(6_a|6_{1/a}.i|b) = (6_{1/a}|6_a.i|b), a > 1, b != 0".into(),
                binding: bind_ab(&a, &b),
                members: vec![
                    m("(6_a|6_{1/a}.i|b)", Some(a.clone()), Some(b.clone())),
                    m("(6_a|6_{1/a}.i|b)", Some(Rat::one() / a.clone()), Some(b.clone())),
                ],
                star: vec![],
                extra: vec![ExtraEdge::InverseParameter],
            });
        }
    }
    // class 3 also exists at a = 1 when the grid asks for it
    if grid.a_values.contains(&Rat::one()) {
        for b in grid.b_nonzero() {
            specs.push(ClassSpec {
                index: 3,
                title: "(7_a|7_{1/a}|b) = (7_{1/a}|7_a|b), a >= 1, b != 0".into(),
                binding: format!("a=1,b={}", fmt_rat(&b)),
                members: vec![m("(7_a|7_{1/a}|b)", Some(Rat::one()), Some(b.clone()))],
                star: vec![],
                extra: vec![],
            });
        }
    }
    specs.push(ClassSpec {
        index: 5,
        title: "(9|1)".into(),
        binding: String::new(),
        members: vec![m("(9|1)", None, None)],
        star: vec![],
        extra: vec![],
    });
    specs.push(ClassSpec {
        index: 6,
        title: "(8|1) = (8|2.iii) = (7_0|5.i) = (6_0|5.i) = (5|2.ii)".into(),
        binding: String::new(),
        members: vec![
            m("(8|1)", None, None),
            m("(8|2.iii)", None, None),
            m("(7_0|5.i)", None, None),
            m("(6_0|5.i)", None, None),
            m("(5|2.ii)", None, None),
        ],
        star: vec!["(8|2.iii)", "(7_0|5.i)", "(6_0|5.i)", "(5|2.ii)"],
        extra: vec![],
    });
    for b in grid.b_nonzero() {
        specs.push(ClassSpec {
            index: 7,
            title: "(7_0|4|b) = (4|2.iii|b) = (6_0|4.i|-b), b != 0".into(),
            binding: bind_b(&b),
            members: vec![
                m("(4|2.iii|b)", None, Some(b.clone())),
                m("(7_0|4|b)", None, Some(b.clone())),
                m("(6_0|4.i|b)", None, Some(-b.clone())),
            ],
            star: vec!["(7_0|4|b)", "(6_0|4.i|-b)"],
            extra: vec![],
        });
        specs.push(ClassSpec {
            index: 8,
            title: "(3|3.i), scaling parameter b != 0".into(),
            binding: bind_b(&b),
            members: vec![m("(3|3.i)", None, Some(b.clone()))],
            star: vec![],
            extra: vec![],
        });
    }
    for a in grid.a_above_one() {
        specs.push(ClassSpec {
            index: 9,
            title: "(7_a|1) = (7_a|2.i) = (7_a|2.ii), a > 1".into(),
            binding: bind_a(&a),
            members: seven_family(&a),
            star: vec!["(7_a|2.i)", "(7_a|2.ii)"],
            extra: vec![],
        });
        let inverse_in_grid = grid.a_values.contains(&(Rat::one() / a.clone()));
        let mut members = vec![
            m("(6_a|1)", Some(a.clone()), None),
            m("(6_a|2)", Some(a.clone()), None),
            m("(6_a|6_{1/a}.ii)", Some(a.clone()), None),
            m("(6_a|6_{1/a}.iii)", Some(a.clone()), None),
        ];
        let mut extra = vec![];
        if inverse_in_grid {
            let inv = Rat::one() / a.clone();
            members.extend(vec![
                m("(6_a|1)", Some(inv.clone()), None),
                m("(6_a|2)", Some(inv.clone()), None),
                m("(6_a|6_{1/a}.ii)", Some(inv.clone()), None),
                m("(6_a|6_{1/a}.iii)", Some(inv), None),
            ]);
            extra.push(ExtraEdge::SixInverseDecomposition);
        }
        specs.push(ClassSpec {
            index: 10,
            title: "(6_a|1) = (6_a|2) = (6_a|6_{1/a}.ii) = (6_a|6_{1/a}.iii), a > 1".into(),
            binding: bind_a(&a),
            members,
            star: vec!["(6_a|2)", "(6_a|6_{1/a}.ii)", "(6_a|6_{1/a}.iii)"],
            extra,
        });
    }
    specs.push(ClassSpec {
        index: 11,
        title: "(6_0|1) = (6_0|5.ii) = (5|1) = (5|2.i)".into(),
        binding: String::new(),
        members: vec![
            m("(5|1)", None, None),
            m("(5|2.i)", None, None),
            m("(6_0|1)", None, None),
            m("(6_0|5.ii)", None, None),
        ],
        star: vec!["(5|2.i)", "(6_0|1)", "(6_0|5.ii)"],
        extra: vec![],
    });
    specs.push(ClassSpec {
        index: 12,
        title: "(6_0|2) = (6_0|4.ii) = (4|1) = (4|2.i) = (4|2.ii)".into(),
        binding: String::new(),
        members: vec![
            m("(4|1)", None, None),
            m("(4|2.i)", None, None),
            m("(4|2.ii)", None, None),
            m("(6_0|2)", None, None),
            m("(6_0|4.ii)", None, None),
        ],
        star: vec!["(4|2.i)", "(4|2.ii)", "(6_0|2)", "(6_0|4.ii)"],
        extra: vec![],
    });
    specs.push(ClassSpec {
        index: 13,
        title: "(3|1) = (3|2) = (3|3.ii) = (3|3.iii)".into(),
        binding: String::new(),
        members: vec![
            m("(3|1)", None, None),
            m("(3|2)", None, None),
            m("(3|3.ii)", None, None),
            m("(3|3.iii)", None, None),
        ],
        star: vec!["(3|2)", "(3|3.ii)", "(3|3.iii)"],
        extra: vec![],
    });
    for a in grid.a_below_one() {
        specs.push(ClassSpec {
            index: 14,
            title: "(7_a|1) = (7_a|2.i) = (7_a|2.ii), 0 < a < 1".into(),
            binding: bind_a(&a),
            members: seven_family(&a),
            star: vec!["(7_a|2.i)", "(7_a|2.ii)"],
            extra: vec![],
        });
    }
    for (index, label) in [(15, "(7_0|1)"), (16, "(7_0|2.i)"), (17, "(7_0|2.ii)")] {
        specs.push(ClassSpec {
            index,
            title: label.into(),
            binding: String::new(),
            members: vec![m(label, None, None)],
            star: vec![],
            extra: vec![],
        });
    }
    specs.push(ClassSpec {
        index: 18,
        title: "(7_1|1) = (7_1|2.i) = (7_1|2.ii)".into(),
        binding: "a=1".into(),
        members: seven_family(&Rat::one()),
        star: vec!["(7_a|2.i)", "(7_a|2.ii)"],
        extra: vec![],
    });
    for (index, label) in [(19, "(2|1)"), (20, "(2|2.i)"), (21, "(2|2.ii)"), (22, "(1|1)")] {
        specs.push(ClassSpec {
            index,
            title: label.into(),
            binding: String::new(),
            members: vec![m(label, None, None)],
            star: vec![],
            extra: vec![],
        });
    }
    specs
}

fn seven_family(a: &Rat) -> Vec<MemberSpec> {
    vec![
        m("(7_a|1)", Some(a.clone()), None),
        m("(7_a|2.i)", Some(a.clone()), None),
        m("(7_a|2.ii)", Some(a.clone()), None),
    ]
}

fn build_instance(
    spec: &ClassSpec,
    failures: &mut Vec<String>,
) -> Result<ClassInstance, IsoError> {
    // members and profiles
    let mut members = Vec::new();
    let mut doubles = Vec::new();
    for ms in &spec.members {
        let triple = catalog_triple(ms.label, &ms.params)?;
        let d = build_double(&triple)?;
        let profile = profile_of_double(&d)?;
        members.push(ClassMember {
            label: ms.label.to_string(),
            params: ms.params.clone(),
            profile,
        });
        doubles.push(d);
    }
    let rep_profile = members[0].profile.clone();
    // presentation-independent coherence of member profiles
    for member in &members[1..] {
        if let Some(inv) = separating_invariant(&rep_profile, &member.profile) {
            failures.push(format!(
                "class {}: member {} differs from representative by {}",
                spec.index,
                member.profile.label,
                inv
            ));
        }
    }
    // also check the duals share the profile
    for (ms, d) in spec.members.iter().zip(&doubles) {
        let dual = dualize(d.source());
        let dual_profile = profile_of_double(&build_double(&dual)?)?;
        if let Some(inv) = separating_invariant(&rep_profile, &dual_profile) {
            failures.push(format!(
                "class {}: dual of {} differs from representative by {}",
                spec.index, ms.label, inv
            ));
        }
    }

    // witnesses
    let mut edges: Vec<WitnessEdge> = Vec::new();
    let mut star_to_rep: Vec<Option<IsoCandidate>> = vec![None; members.len()];
    let rep = &spec.members[0];
    for to_label in &spec.star {
        let candidate = catalog_iso(rep.label, to_label, &rep.params)?;
        push_edge(&mut edges, failures, &candidate, "catalog");
        let resolved = crate::manin::resolve_label_alias(to_label);
        if let Some(pos) = members.iter().position(|mm| {
            crate::manin::resolve_label_alias(&mm.label) == resolved
                && mm.params == candidate.to.params().clone()
        }) {
            star_to_rep[pos] = Some(candidate);
        }
    }
    for extra in &spec.extra {
        match extra {
            ExtraEdge::InverseParameter => {
                let candidate = inverse_parameter_witness(rep)?;
                push_edge(&mut edges, failures, &candidate, "duality+rescaling");
            }
            ExtraEdge::SixInverseDecomposition => {
                let a = rep.params.a.clone().expect("class 10 binds a");
                let candidate = six_inverse_witness(&a)?;
                push_edge(&mut edges, failures, &candidate, "decomposition");
                // connect the inverse-parameter side's own star
                let inv_rep_params = Params::with_a(Rat::one() / a);
                for to_label in &spec.star {
                    let c = catalog_iso("(6_a|1)", to_label, &inv_rep_params)?;
                    push_edge(&mut edges, failures, &c, "catalog");
                }
            }
        }
    }
    // duality witness per member
    for d in &doubles {
        let w = duality_witness(d.source());
        push_edge(&mut edges, failures, &w, "duality");
    }
    // composed witnesses close the remaining representative pairs
    for i in 1..members.len() {
        for j in i + 1..members.len() {
            let (Some(ci), Some(cj)) = (&star_to_rep[i], &star_to_rep[j]) else { continue };
            let composed = ci.invert()?.compose(cj);
            push_edge(&mut edges, failures, &composed, "composed");
        }
    }

    Ok(ClassInstance {
        binding: spec.binding.clone(),
        members,
        edges,
        profile: rep_profile,
    })
}

fn push_edge(
    edges: &mut Vec<WitnessEdge>,
    failures: &mut Vec<String>,
    candidate: &IsoCandidate,
    via: &str,
) {
    let from = candidate.from.display_label();
    let to = candidate.to.display_label();
    match candidate.verify() {
        Ok(report) if report.is_valid() => edges.push(WitnessEdge {
            from,
            to,
            via: via.into(),
            matrix: candidate.matrix.clone(),
        }),
        Ok(report) => failures.push(format!(
            "witness {from} -> {to} ({via}) fails verification: form {:?}, structure {:?}",
            report.form_violations, report.structure_violations
        )),
        Err(e) => failures.push(format!("witness {from} -> {to} ({via}): {e}")),
    }
}

/// Witness from catalog(a, b) to catalog(1/a, b) for the self-paired 6- and
/// 7-families: relabel through the duality swap, then rescale the first
/// basis vector by 1/b to return the primal side to its normal form.
fn inverse_parameter_witness(rep: &MemberSpec) -> Result<IsoCandidate, IsoError> {
    let a = rep.params.a.clone().expect("inverse-parameter class binds a");
    let b = rep.params.b.clone().expect("inverse-parameter class binds b");
    let from = catalog_triple(rep.label, &rep.params)?;
    let to = catalog_triple(rep.label, &Params::with_ab(Rat::one() / a, b.clone()))?;
    // rows of C: the target basis in the source basis. The duality swap P
    // sends (X, X̃) to (X̃, X); the rescaling acts on the first pair.
    let mut c = Mat::zero(6, 6);
    c[(0, 3)] = Rat::one() / b.clone();
    c[(1, 4)] = Rat::one();
    c[(2, 5)] = Rat::one();
    c[(3, 0)] = b;
    c[(4, 1)] = Rat::one();
    c[(5, 2)] = Rat::one();
    Ok(IsoCandidate::new(from, to, c))
}

/// Witness from (6_a|1) to (6_{1/a}|1): the census of the source double
/// contains a maximal isotropic abelian subalgebra whose complement is a
/// subalgebra of type 6_{1/a}; normalizing the complement to the standard
/// basis and taking the paired basis in the abelian side is a Manin
/// decomposition with exactly the target's constants.
fn six_inverse_witness(a: &Rat) -> Result<IsoCandidate, IsoError> {
    let from = catalog_triple("(6_a|1)", &Params::with_a(a.clone()))?;
    let target_a = Rat::one() / a.clone();
    let to = catalog_triple("(6_a|1)", &Params::with_a(target_a.clone()))?;
    let d = build_double(&from)?;
    let census = mia_census(&d)?;
    let wanted = BianchiType::SixA(target_a.clone());
    let (abelian, complement) = census
        .families
        .iter()
        .find_map(|f| match &f.dual_partner {
            DualPartnerStatus::Found { basis, basis_type, .. } if *basis_type == wanted => {
                Some((f.witness_basis.clone(), basis.clone()))
            }
            _ => None,
        })
        .ok_or_else(|| {
            IsoError::Invariant(crate::invariants::InvariantError::Internal(format!(
                "census of (6_{}|1) has no complement of type 6_{}",
                fmt_rat(a),
                fmt_rat(&target_a)
            )))
        })?;
    let rows = normalize_six_basis(&d, &complement, &target_a).ok_or_else(|| {
        IsoError::Invariant(crate::invariants::InvariantError::Internal(
            "complement does not normalize to the standard 6_a basis".into(),
        ))
    })?;
    // dual rows inside the abelian side: ⟨row_i, dual_j⟩ = δ_ij
    let mut gram = Mat::zero(3, 3);
    for (i, w) in abelian.iter().enumerate() {
        for (j, y) in rows.iter().enumerate() {
            gram[(i, j)] = d.pair(w, y);
        }
    }
    // rows of the inverse give ỹ^i = Σ_j (G⁻¹)_{ij} w_j with ⟨ỹ^i, y_j⟩ = δ
    let inv = gram.inverse().ok_or(IsoError::Singular)?;
    let mut all_rows = rows;
    for i in 0..3 {
        let mut v = vec![Rat::zero(); 6];
        for (j, w) in abelian.iter().enumerate() {
            for (slot, entry) in v.iter_mut().zip(w) {
                *slot += inv[(i, j)].clone() * entry.clone();
            }
        }
        all_rows.push(v);
    }
    Ok(IsoCandidate::new(from, to, Mat::from_rows(all_rows)))
}

/// Basis of a type-6 subalgebra matching the standard structure constants
/// exactly: ad(e1) has eigenvalues −(a+1) and −(a−1) on the derived plane,
/// with e2, e3 the sum and difference of the eigenvectors.
fn normalize_six_basis(
    d: &DoubleAlgebra,
    span_basis: &[Vec<Rat>],
    a: &Rat,
) -> Option<Vec<Vec<Rat>>> {
    use crate::liecore::Subspace;
    let alg = d.algebra();
    let span = Subspace::span(6, span_basis);
    let derived = alg.bracket_span(&span, &span);
    if derived.dim() != 2 {
        return None;
    }
    let outside = span.basis_vectors().into_iter().find(|v| !derived.contains_vector(v))?;
    let dbasis = derived.basis_vectors();
    let mut ad = Mat::zero(2, 2);
    for (j, w) in dbasis.iter().enumerate() {
        let coords = derived.coordinates(&alg.bracket(&outside, w))?;
        for i in 0..2 {
            ad[(i, j)] = coords[i].clone();
        }
    }
    let tr = ad[(0, 0)].clone() + ad[(1, 1)].clone();
    let det = ad.det();
    let disc = tr.clone() * tr.clone() - rat(4, 1) * det;
    let root = crate::exactmath::rat_sqrt(&disc)?;
    let l1 = (tr.clone() + root.clone()) / rat(2, 1);
    let l2 = (tr - root) / rat(2, 1);
    let target_big = -(a.clone() + Rat::one());
    let target_small = -(a.clone() - Rat::one());
    for (lb, ls) in [(l1.clone(), l2.clone()), (l2, l1)] {
        if lb.is_zero() {
            continue;
        }
        let scale = target_big.clone() / lb.clone();
        if ls.clone() * scale.clone() != target_small {
            continue;
        }
        // eigenvectors of ad for lb and ls
        let eig = |lambda: &Rat| -> Option<Vec<Rat>> {
            let mut m = ad.clone();
            m[(0, 0)] = m[(0, 0)].clone() - lambda.clone();
            m[(1, 1)] = m[(1, 1)].clone() - lambda.clone();
            m.nullspace().into_iter().next()
        };
        let wb = eig(&lb)?;
        let ws = eig(&ls)?;
        let lift = |coords: &[Rat]| -> Vec<Rat> {
            let mut v = vec![Rat::zero(); 6];
            for (c, base) in coords.iter().zip(&dbasis) {
                for (slot, entry) in v.iter_mut().zip(base) {
                    *slot += c.clone() * entry.clone();
                }
            }
            v
        };
        let wb6 = lift(&wb);
        let ws6 = lift(&ws);
        let e1: Vec<Rat> = outside.iter().map(|x| x.clone() * scale.clone()).collect();
        let e2: Vec<Rat> = wb6.iter().zip(&ws6).map(|(x, y)| x.clone() + y.clone()).collect();
        let e3: Vec<Rat> = wb6.iter().zip(&ws6).map(|(x, y)| x.clone() - y.clone()).collect();
        // verify the standard constants before accepting
        let candidate = Subspace::span(6, &[e1.clone(), e2.clone(), e3.clone()]);
        let Ok(sub) = alg.restrict_to(&candidate) else { continue };
        let expected = crate::liecore::bianchi_algebra(&BianchiType::SixA(a.clone())).ok()?;
        // compare constants in the constructed ordered basis
        let ordered = [e1.clone(), e2.clone(), e3.clone()];
        let mut ok = sub.dim() == 3;
        for i in 0..3 {
            for j in 0..3 {
                if !ok {
                    break;
                }
                let w = alg.bracket(&ordered[i], &ordered[j]);
                let mut expect = vec![Rat::zero(); 6];
                for k in 0..3 {
                    let coef = expected.c(i, j, k);
                    for (slot, entry) in expect.iter_mut().zip(&ordered[k]) {
                        *slot += coef.clone() * entry.clone();
                    }
                }
                ok &= w == expect;
            }
        }
        if ok {
            return Some(vec![e1, e2, e3]);
        }
    }
    None
}

fn orientation_separator(
    li: &ClassInstance,
    ri: &ClassInstance,
) -> Result<Option<String>, IsoError> {
    let build = |instance: &ClassInstance| -> Result<_, IsoError> {
        let member = &instance.members[0];
        let t = catalog_triple(&member.label, &member.params)?;
        Ok(build_double(&t)?)
    };
    let left = decomposition_orientations(&build(li)?)?;
    let right = decomposition_orientations(&build(ri)?)?;
    if !left.orientations.is_empty()
        && !right.orientations.is_empty()
        && left.orientations.iter().all(|s| !right.orientations.contains(s))
    {
        return Ok(Some("decomposition-orientation".into()));
    }
    Ok(None)
}
