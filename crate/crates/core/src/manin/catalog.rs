//! The standard catalog: 44 six-dimensional Manin triples up to duality,
//! plus the eleven Bianchi algebras under both common naming schemes.
//!
//! Labels are stable identifiers, e.g. `(6_0|5.iii|b)`. A label names the
//! Bianchi type of 𝒢, the type of 𝒢̃, a roman numeral distinguishing
//! inequivalent pairings, and a scaling parameter where inequivalent scalings
//! exist. `(3|3.i)` carries a parameter b in its brackets even though the
//! label does not spell it. The classification literature also refers to the
//! entry `(8|5.iii)` as `(8|2.iii)`; the alias is accepted and resolves to
//! the same structure constants (the dual algebra classifies as Bianchi 5).

use num_traits::{One, Signed, Zero};

use crate::exactmath::{parse_rat, rat, Rat};
use crate::liecore::{bianchi_algebra, bianchi_classify, BianchiType, LieAlgebra};

use super::triple::{ManinTriple, Params};
use super::ManinError;

/// Domain of one rational parameter of a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamDomain {
    Unused,
    Positive,
    PositiveNotOne,
    NonZero,
}

impl ParamDomain {
    pub fn admits(&self, v: &Rat) -> bool {
        match self {
            ParamDomain::Unused => false,
            ParamDomain::Positive => v.is_positive(),
            ParamDomain::PositiveNotOne => v.is_positive() && !v.is_one(),
            ParamDomain::NonZero => !v.is_zero(),
        }
    }
}

impl std::fmt::Display for ParamDomain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParamDomain::Unused => write!(f, "(unused)"),
            ParamDomain::Positive => write!(f, "> 0"),
            ParamDomain::PositiveNotOne => write!(f, "> 0 and ≠ 1"),
            ParamDomain::NonZero => write!(f, "≠ 0"),
        }
    }
}

/// Catalog metadata for one label.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub label: &'static str,
    pub a: ParamDomain,
    pub b: ParamDomain,
}

impl CatalogEntry {
    pub fn needs_a(&self) -> bool {
        self.a != ParamDomain::Unused
    }
    pub fn needs_b(&self) -> bool {
        self.b != ParamDomain::Unused
    }
}

use ParamDomain::{NonZero, Positive, PositiveNotOne, Unused};

/// All 44 primary catalog entries, in catalog order.
pub fn catalog_entries() -> &'static [CatalogEntry] {
    const E: fn(&'static str, ParamDomain, ParamDomain) -> CatalogEntry =
        |label, a, b| CatalogEntry { label, a, b };
    static ENTRIES: std::sync::OnceLock<Vec<CatalogEntry>> = std::sync::OnceLock::new();
    ENTRIES.get_or_init(|| {
        vec![
            E("(9|1)", Unused, Unused),
            E("(9|5|b)", Unused, Positive),
            E("(8|1)", Unused, Unused),
            E("(8|5.i|b)", Unused, Positive),
            E("(8|5.ii|b)", Unused, Positive),
            E("(8|5.iii)", Unused, Unused),
            E("(7_a|1)", Positive, Unused),
            E("(7_a|2.i)", Positive, Unused),
            E("(7_a|2.ii)", Positive, Unused),
            E("(7_a|7_{1/a}|b)", Positive, NonZero),
            E("(7_0|1)", Unused, Unused),
            E("(7_0|2.i)", Unused, Unused),
            E("(7_0|2.ii)", Unused, Unused),
            E("(7_0|4|b)", Unused, NonZero),
            E("(7_0|5.i)", Unused, Unused),
            E("(7_0|5.ii|b)", Unused, Positive),
            E("(6_a|1)", PositiveNotOne, Unused),
            E("(6_a|2)", PositiveNotOne, Unused),
            E("(6_a|6_{1/a}.i|b)", PositiveNotOne, NonZero),
            E("(6_a|6_{1/a}.ii)", PositiveNotOne, Unused),
            E("(6_a|6_{1/a}.iii)", PositiveNotOne, Unused),
            E("(6_0|1)", Unused, Unused),
            E("(6_0|2)", Unused, Unused),
            E("(6_0|4.i|b)", Unused, NonZero),
            E("(6_0|4.ii)", Unused, Unused),
            E("(6_0|5.i)", Unused, Unused),
            E("(6_0|5.ii)", Unused, Unused),
            E("(6_0|5.iii|b)", Unused, Positive),
            E("(5|1)", Unused, Unused),
            E("(5|2.i)", Unused, Unused),
            E("(5|2.ii)", Unused, Unused),
            E("(4|1)", Unused, Unused),
            E("(4|2.i)", Unused, Unused),
            E("(4|2.ii)", Unused, Unused),
            E("(4|2.iii|b)", Unused, NonZero),
            E("(3|1)", Unused, Unused),
            E("(3|2)", Unused, Unused),
            E("(3|3.i)", Unused, NonZero),
            E("(3|3.ii)", Unused, Unused),
            E("(3|3.iii)", Unused, Unused),
            E("(2|1)", Unused, Unused),
            E("(2|2.i)", Unused, Unused),
            E("(2|2.ii)", Unused, Unused),
            E("(1|1)", Unused, Unused),
        ]
    })
}

/// Maps accepted alias labels onto catalog labels.
pub fn resolve_label_alias(label: &str) -> &str {
    match label {
        "(8|2.iii)" => "(8|5.iii)",
        other => other,
    }
}

pub fn catalog_entry(label: &str) -> Option<&'static CatalogEntry> {
    let label = resolve_label_alias(label);
    catalog_entries().iter().find(|e| e.label == label)
}

/// Instantiates a catalog triple at exact parameter values, validating the
/// parameter domains stated in the catalog.
pub fn catalog_triple(label: &str, params: &Params) -> Result<ManinTriple, ManinError> {
    let canonical = resolve_label_alias(label);
    let entry = catalog_entry(canonical)
        .ok_or_else(|| ManinError::UnknownLabel(label.to_string()))?;
    check_param(entry.label, 'a', entry.a, &params.a)?;
    check_param(entry.label, 'b', entry.b, &params.b)?;
    let a = params.a.clone().unwrap_or_else(Rat::zero);
    let b = params.b.clone().unwrap_or_else(Rat::zero);
    let one = Rat::one();

    let g_type = match entry.label {
        l if l.starts_with("(9") => BianchiType::Nine,
        l if l.starts_with("(8") => BianchiType::Eight,
        l if l.starts_with("(7_a") => BianchiType::SevenA(a.clone()),
        l if l.starts_with("(7_0") => BianchiType::Seven0,
        l if l.starts_with("(6_a") => BianchiType::SixA(a.clone()),
        l if l.starts_with("(6_0") => BianchiType::Six0,
        l if l.starts_with("(5") => BianchiType::Five,
        l if l.starts_with("(4") => BianchiType::Four,
        l if l.starts_with("(3") => BianchiType::Three,
        l if l.starts_with("(2") => BianchiType::Two,
        _ => BianchiType::One,
    };
    let g = bianchi_algebra(&g_type)?;

    type Br = Vec<((usize, usize), Vec<(Rat, usize)>)>;
    let gt_brackets: Br = match entry.label {
        "(9|1)" | "(8|1)" | "(7_a|1)" | "(7_0|1)" | "(6_a|1)" | "(6_0|1)" | "(5|1)" | "(4|1)"
        | "(3|1)" | "(2|1)" | "(1|1)" => vec![],
        // [ẽ1,ẽ2] = −b ẽ2, [ẽ3,ẽ1] = b ẽ3
        "(9|5|b)" | "(8|5.i|b)" => {
            vec![((0, 1), vec![(-b.clone(), 1)]), ((2, 0), vec![(b.clone(), 2)])]
        }
        // [ẽ2,ẽ3] = b ẽ2, [ẽ3,ẽ1] = −b ẽ1
        "(8|5.ii|b)" | "(7_0|5.ii|b)" => {
            vec![((1, 2), vec![(b.clone(), 1)]), ((2, 0), vec![(-b.clone(), 0)])]
        }
        // [ẽ1,ẽ2] = ẽ2, [ẽ2,ẽ3] = ẽ2, [ẽ3,ẽ1] = −(ẽ1+ẽ3)
        "(8|5.iii)" => vec![
            ((0, 1), vec![(one.clone(), 1)]),
            ((1, 2), vec![(one.clone(), 1)]),
            ((2, 0), vec![(-one.clone(), 0), (-one.clone(), 2)]),
        ],
        // [ẽ2,ẽ3] = ±ẽ1
        "(7_a|2.i)" | "(6_a|2)" | "(5|2.i)" | "(4|2.i)" | "(3|2)" => {
            vec![((1, 2), vec![(one.clone(), 0)])]
        }
        "(7_a|2.ii)" | "(4|2.ii)" => vec![((1, 2), vec![(-one.clone(), 0)])],
        // [ẽ1,ẽ2] = b(−(1/a)ẽ2 + ẽ3), [ẽ3,ẽ1] = b(ẽ2 + (1/a)ẽ3)
        "(7_a|7_{1/a}|b)" => vec![
            ((0, 1), vec![(-b.clone() / a.clone(), 1), (b.clone(), 2)]),
            ((2, 0), vec![(b.clone(), 1), (b.clone() / a.clone(), 2)]),
        ],
        // [ẽ1,ẽ2] = ±ẽ3
        "(7_0|2.i)" | "(6_0|2)" | "(5|2.ii)" | "(2|2.i)" => {
            vec![((0, 1), vec![(one.clone(), 2)])]
        }
        "(7_0|2.ii)" | "(2|2.ii)" => vec![((0, 1), vec![(-one.clone(), 2)])],
        // [ẽ1,ẽ2] = b(−ẽ2+ẽ3), [ẽ3,ẽ1] = b ẽ3
        "(7_0|4|b)" | "(6_0|4.i|b)" => vec![
            ((0, 1), vec![(-b.clone(), 1), (b.clone(), 2)]),
            ((2, 0), vec![(b.clone(), 2)]),
        ],
        // [ẽ1,ẽ2] = −ẽ2, [ẽ3,ẽ1] = ẽ3
        "(7_0|5.i)" | "(6_0|5.i)" => {
            vec![((0, 1), vec![(-one.clone(), 1)]), ((2, 0), vec![(one.clone(), 2)])]
        }
        // [ẽ1,ẽ2] = −b((1/a)ẽ2 + ẽ3), [ẽ3,ẽ1] = b(ẽ2 + (1/a)ẽ3)
        "(6_a|6_{1/a}.i|b)" => vec![
            ((0, 1), vec![(-b.clone() / a.clone(), 1), (-b.clone(), 2)]),
            ((2, 0), vec![(b.clone(), 1), (b.clone() / a.clone(), 2)]),
        ],
        // [ẽ1,ẽ2] = ẽ1, [ẽ2,ẽ3] = (a+1)/(a−1)(ẽ2+ẽ3), [ẽ3,ẽ1] = ẽ1
        "(6_a|6_{1/a}.ii)" => {
            let q = (a.clone() + one.clone()) / (a.clone() - one.clone());
            vec![
                ((0, 1), vec![(one.clone(), 0)]),
                ((1, 2), vec![(q.clone(), 1), (q, 2)]),
                ((2, 0), vec![(one.clone(), 0)]),
            ]
        }
        // [ẽ1,ẽ2] = ẽ1, [ẽ2,ẽ3] = (a−1)/(a+1)(−ẽ2+ẽ3), [ẽ3,ẽ1] = −ẽ1
        "(6_a|6_{1/a}.iii)" => {
            let q = (a.clone() - one.clone()) / (a.clone() + one.clone());
            vec![
                ((0, 1), vec![(one.clone(), 0)]),
                ((1, 2), vec![(-q.clone(), 1), (q, 2)]),
                ((2, 0), vec![(-one.clone(), 0)]),
            ]
        }
        // [ẽ1,ẽ2] = −ẽ1+ẽ2+ẽ3, [ẽ2,ẽ3] = ẽ3, [ẽ3,ẽ1] = −ẽ3
        "(6_0|4.ii)" => vec![
            ((0, 1), vec![(-one.clone(), 0), (one.clone(), 1), (one.clone(), 2)]),
            ((1, 2), vec![(one.clone(), 2)]),
            ((2, 0), vec![(-one.clone(), 2)]),
        ],
        // [ẽ1,ẽ2] = −ẽ1+ẽ2, [ẽ2,ẽ3] = ẽ3, [ẽ3,ẽ1] = −ẽ3
        "(6_0|5.ii)" => vec![
            ((0, 1), vec![(-one.clone(), 0), (one.clone(), 1)]),
            ((1, 2), vec![(one.clone(), 2)]),
            ((2, 0), vec![(-one.clone(), 2)]),
        ],
        // [ẽ2,ẽ3] = −b ẽ2, [ẽ3,ẽ1] = b ẽ1
        "(6_0|5.iii|b)" => {
            vec![((1, 2), vec![(-b.clone(), 1)]), ((2, 0), vec![(b.clone(), 0)])]
        }
        // [ẽ3,ẽ1] = b ẽ2
        "(4|2.iii|b)" => vec![((2, 0), vec![(b.clone(), 1)])],
        // [ẽ1,ẽ2] = −b(ẽ2+ẽ3), [ẽ3,ẽ1] = b(ẽ2+ẽ3)
        "(3|3.i)" => vec![
            ((0, 1), vec![(-b.clone(), 1), (-b.clone(), 2)]),
            ((2, 0), vec![(b.clone(), 1), (b.clone(), 2)]),
        ],
        // [ẽ2,ẽ3] = ẽ2+ẽ3
        "(3|3.ii)" => vec![((1, 2), vec![(one.clone(), 1), (one.clone(), 2)])],
        // [ẽ1,ẽ2] = ẽ1, [ẽ3,ẽ1] = −ẽ1
        "(3|3.iii)" => {
            vec![((0, 1), vec![(one.clone(), 0)]), ((2, 0), vec![(-one.clone(), 0)])]
        }
        other => unreachable!("catalog entry {other} has no bracket table"),
    };
    let gt = LieAlgebra::from_brackets(3, &gt_brackets);
    let bound = Params {
        a: entry.needs_a().then_some(a),
        b: entry.needs_b().then_some(b),
    };
    ManinTriple::new(entry.label, g, gt, bound)
}

fn check_param(
    label: &str,
    name: char,
    domain: ParamDomain,
    value: &Option<Rat>,
) -> Result<(), ManinError> {
    match (domain, value) {
        (ParamDomain::Unused, None) => Ok(()),
        (ParamDomain::Unused, Some(_)) => {
            Err(ManinError::UnexpectedParam { label: label.into(), param: name })
        }
        (_, None) => Err(ManinError::MissingParam { label: label.into(), param: name }),
        (d, Some(v)) => {
            if d.admits(v) {
                Ok(())
            } else {
                Err(ManinError::ParamOutOfDomain {
                    label: label.into(),
                    param: name,
                    value: crate::exactmath::fmt_rat(v),
                    domain: d.to_string(),
                })
            }
        }
    }
}

/// Names of the eleven Bianchi algebras plus the alternative scheme.
pub fn bianchi_labels() -> Vec<&'static str> {
    vec!["1", "2", "3", "4", "5", "6_a", "6_0", "7_a", "7_0", "8", "9"]
}

/// Looks up a 3-dimensional algebra by label in either naming scheme and
/// returns its structure constants together with the Bianchi identification.
///
/// Bianchi scheme: `1`..`5`, `6_0`, `7_0`, `8`, `9`, and parametrized `6_<a>`
/// and `7_<a>` (braces allowed, e.g. `6_{1/2}`). Alternative scheme: `R3`,
/// `n3`, `r3(rho)` for −1 ≤ ρ ≤ 1, `r3'(1)`, `s3(mu)` for μ ≥ 0, `sl(2,R)`,
/// `so(3)`. Alternative-scheme algebras are returned in their own basis; the
/// identification is computed by the classifier, which also normalizes the
/// parameter (e.g. `r3(1/3)` is type 6 with a = 2 after normalization).
pub fn catalog_bianchi(name: &str) -> Result<(LieAlgebra, BianchiType), ManinError> {
    let name = name.trim();
    let by_type = |t: BianchiType| -> Result<(LieAlgebra, BianchiType), ManinError> {
        let alg = bianchi_algebra(&t)?;
        Ok((alg, t))
    };
    match name {
        "1" | "R3" | "R^3" => by_type(BianchiType::One),
        "2" | "n3" => by_type(BianchiType::Two),
        "3" => by_type(BianchiType::Three),
        "4" | "r3'(1)" => by_type(BianchiType::Four),
        "5" => by_type(BianchiType::Five),
        "6_0" => by_type(BianchiType::Six0),
        "7_0" => by_type(BianchiType::Seven0),
        "8" | "sl(2,R)" | "sl2" => by_type(BianchiType::Eight),
        "9" | "so(3)" | "so3" => by_type(BianchiType::Nine),
        _ => {
            if let Some(rest) = name.strip_prefix("6_") {
                return by_type(BianchiType::SixA(parse_braced_rat(rest, name)?));
            }
            if let Some(rest) = name.strip_prefix("7_") {
                return by_type(BianchiType::SevenA(parse_braced_rat(rest, name)?));
            }
            if let Some(inner) = name.strip_prefix("r3(").and_then(|r| r.strip_suffix(')')) {
                let rho = parse_rat(inner).map_err(|_| ManinError::UnknownLabel(name.into()))?;
                if rho < rat(-1, 1) || rho > rat(1, 1) {
                    return Err(ManinError::ParamOutOfDomain {
                        label: "r3(rho)".into(),
                        param: 'r',
                        value: inner.into(),
                        domain: "−1 ≤ rho ≤ 1".into(),
                    });
                }
                // [e0,e1] = e1, [e0,e2] = ρ e2
                let alg = LieAlgebra::from_brackets(
                    3,
                    &[((0, 1), vec![(Rat::one(), 1)]), ((0, 2), vec![(rho, 2)])],
                );
                let t = bianchi_classify(&alg)?;
                return Ok((alg, t));
            }
            if let Some(inner) = name.strip_prefix("s3(").and_then(|r| r.strip_suffix(')')) {
                let mu = parse_rat(inner).map_err(|_| ManinError::UnknownLabel(name.into()))?;
                if mu.is_negative() {
                    return Err(ManinError::ParamOutOfDomain {
                        label: "s3(mu)".into(),
                        param: 'm',
                        value: inner.into(),
                        domain: "mu ≥ 0".into(),
                    });
                }
                // [e0,e1] = μe1 − e2, [e0,e2] = e1 + μe2
                let alg = LieAlgebra::from_brackets(
                    3,
                    &[
                        ((0, 1), vec![(mu.clone(), 1), (-Rat::one(), 2)]),
                        ((0, 2), vec![(Rat::one(), 1), (mu, 2)]),
                    ],
                );
                let t = bianchi_classify(&alg)?;
                return Ok((alg, t));
            }
            Err(ManinError::UnknownLabel(name.into()))
        }
    }
}

fn parse_braced_rat(text: &str, full: &str) -> Result<Rat, ManinError> {
    let inner = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(text);
    parse_rat(inner).map_err(|_| ManinError::UnknownLabel(full.into()))
}

#[cfg(test)]
mod tests {
    use super::super::double::build_double;
    use super::*;
    use crate::exactmath::rint;

    #[test]
    fn the_catalog_has_44_entries() {
        assert_eq!(catalog_entries().len(), 44);
    }

    #[test]
    fn six_a_dual_bracket_at_a_two() {
        // (6_a|6_{1/a}.ii) at a = 2: [ẽ2,ẽ3] = 3(ẽ2+ẽ3)
        let t = catalog_triple("(6_a|6_{1/a}.ii)", &Params::with_a(rint(2))).unwrap();
        assert_eq!(*t.gt().c(1, 2, 1), rint(3));
        assert_eq!(*t.gt().c(1, 2, 2), rint(3));
    }

    #[test]
    fn three_three_iii_brackets() {
        let t = catalog_triple("(3|3.iii)", &Params::none()).unwrap();
        assert_eq!(*t.gt().c(0, 1, 0), rint(1));
        assert_eq!(*t.gt().c(2, 0, 0), rint(-1));
    }

    #[test]
    fn domain_violations_are_rejected() {
        let err = catalog_triple("(9|5|b)", &Params::with_b(rint(-1))).unwrap_err();
        assert!(matches!(err, ManinError::ParamOutOfDomain { .. }));
        assert!(matches!(
            catalog_triple("(9|5|b)", &Params::none()),
            Err(ManinError::MissingParam { .. })
        ));
        assert!(matches!(
            catalog_triple("(9|1)", &Params::with_b(rint(1))),
            Err(ManinError::UnexpectedParam { .. })
        ));
        assert!(matches!(
            catalog_triple("(nope)", &Params::none()),
            Err(ManinError::UnknownLabel(_))
        ));
    }

    #[test]
    fn alias_resolves_to_the_same_triple() {
        let direct = catalog_triple("(8|5.iii)", &Params::none()).unwrap();
        let alias = catalog_triple("(8|2.iii)", &Params::none()).unwrap();
        assert_eq!(direct, alias);
        assert_eq!(alias.label(), "(8|5.iii)");
    }

    #[test]
    fn every_entry_builds_a_valid_double_at_sample_parameters() {
        for entry in catalog_entries() {
            let params = Params {
                a: entry.needs_a().then(|| rint(2)),
                b: entry.needs_b().then(|| rint(1)),
            };
            let t = catalog_triple(entry.label, &params)
                .unwrap_or_else(|e| panic!("{}: {e}", entry.label));
            let d = build_double(&t).unwrap_or_else(|e| panic!("{}: {e}", entry.label));
            assert!(d.form_is_ad_invariant(), "{} form not ad-invariant", entry.label);
            assert!(d.is_maximally_isotropic(&d.primal_span()));
            assert!(d.is_maximally_isotropic(&d.dual_span()));
        }
    }

    #[test]
    fn bianchi_lookup_both_schemes() {
        let (_, t) = catalog_bianchi("9").unwrap();
        assert_eq!(t, BianchiType::Nine);
        let (_, t) = catalog_bianchi("r3(1)").unwrap();
        assert_eq!(t, BianchiType::Five);
        let (_, t) = catalog_bianchi("r3(-1)").unwrap();
        assert_eq!(t, BianchiType::Six0);
        let (_, t) = catalog_bianchi("r3(1/3)").unwrap();
        assert_eq!(t, BianchiType::SixA(rint(2)));
        let (_, t) = catalog_bianchi("s3(0)").unwrap();
        assert_eq!(t, BianchiType::Seven0);
        let (_, t) = catalog_bianchi("s3(2)").unwrap();
        assert_eq!(t, BianchiType::SevenA(rint(2)));
        let (_, t) = catalog_bianchi("6_{1/2}").unwrap();
        assert_eq!(t, BianchiType::SixA(rat(1, 2)));
        assert!(catalog_bianchi("r3(2)").is_err());
        assert!(catalog_bianchi("frob").is_err());
    }
}
