//! Deterministic report emitters: text, CSV, JSON.

use num_traits::One;
use serde_json::{json, Value};

use crate::exactmath::{fmt_rat, Mat, Rat};
use crate::invariants::{DualPartnerStatus, InvariantProfile, LeviRestrictionClass, ParamSet};
use crate::isomorph::ClassificationReport;
use crate::manin::ManinTriple;

/// Output format selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected text, csv or json)")),
        }
    }
}

/// Emits a set of invariant profiles.
pub fn emit_profiles(profiles: &[InvariantProfile], format: Format) -> String {
    match format {
        Format::Csv => profiles_csv(profiles),
        Format::Json => pretty(&profiles_json(profiles)),
        Format::Text => profiles_text(profiles),
    }
}

fn profiles_csv(profiles: &[InvariantProfile]) -> String {
    let mut out = String::from(
        "triple,sig_p,sig_n,sig_z,dim_commutant,dim_D2,dim_D3,dim_Dl2,dim_Dl3\n",
    );
    for p in profiles {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            csv_quote(&p.label),
            p.killing.0,
            p.killing.1,
            p.killing.2,
            p.series.commutant,
            p.series.upper.0,
            p.series.upper.1,
            p.series.lower.0,
            p.series.lower.1
        ));
    }
    out
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn profiles_text(profiles: &[InvariantProfile]) -> String {
    // group rows with equal coarse data, in input order
    let mut groups: Vec<(String, Vec<&InvariantProfile>)> = Vec::new();
    for p in profiles {
        let key = format!(
            "({},{},{})   {}    {},{}    {},{}",
            p.killing.0,
            p.killing.1,
            p.killing.2,
            p.series.commutant,
            p.series.upper.0,
            p.series.upper.1,
            p.series.lower.0,
            p.series.lower.1
        );
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, list)) => list.push(p),
            None => groups.push((key, vec![p])),
        }
    }
    let mut out = String::new();
    out.push_str("signature  dim[D,D]  D^2,D^3  D_2,D_3  triples\n");
    out.push_str("-------------------------------------------------------------\n");
    for (key, list) in &groups {
        let labels: Vec<String> = list.iter().map(|p| p.label.clone()).collect();
        out.push_str(&format!("{key}    {}\n", labels.join(", ")));
    }
    out.push('\n');
    for p in profiles {
        let mut extras = Vec::new();
        if let Some(split) = &p.split {
            extras.push(format!("split quadratic {split}"));
        }
        if let Some(levi) = &p.levi {
            extras.push(format!("Levi restriction: {levi}"));
        }
        let (cp, cn, cz) = p.center_signature;
        extras.push(format!("center signature ({cp},{cn},{cz})"));
        if let Some(mia) = &p.mia {
            extras.push(format!(
                "isotropic abelian census: {} families{}",
                mia.family_count(),
                if mia.complete { "" } else { " (incomplete)" }
            ));
        }
        out.push_str(&format!("{}: {}\n", p.label, extras.join("; ")));
    }
    out
}

fn profiles_json(profiles: &[InvariantProfile]) -> Value {
    let items: Vec<Value> = profiles.iter().map(profile_json).collect();
    json!({
        "schema": "drinfeld-lab/1",
        "kind": "invariant-profiles",
        "profiles": items,
    })
}

fn profile_json(p: &InvariantProfile) -> Value {
    let split = p.split.as_ref().map(|s| {
        json!({ "s": fmt_rat(&s.s), "p": fmt_rat(&s.p) })
    });
    let levi = p.levi.as_ref().map(|l| match l {
        LeviRestrictionClass::Isotropic => json!("isotropic"),
        LeviRestrictionClass::Proportional(v) => json!({ "lambda": fmt_rat(v) }),
    });
    let mia = p.mia.as_ref().map(|census| {
        let families: Vec<Value> = census
            .families
            .iter()
            .map(|f| {
                let param = match &f.param {
                    ParamSet::NotParametric => Value::Null,
                    ParamSet::Value(v) => json!(fmt_rat(v)),
                    ParamSet::Free => json!("free"),
                };
                let dual = match &f.dual_partner {
                    DualPartnerStatus::Found { basis_type, types, .. } => json!({
                        "exists": true,
                        "witness_type": basis_type.to_string(),
                        "types": types.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    }),
                    DualPartnerStatus::NoneExists => json!({ "exists": false }),
                    DualPartnerStatus::Undecided => json!({ "exists": "undecided" }),
                };
                json!({
                    "form": f.form.to_string(),
                    "parameter": param,
                    "basis": basis_json(&f.witness_basis),
                    "dual_partner": dual,
                })
            })
            .collect();
        json!({
            "count": census.family_count(),
            "complete": census.complete,
            "families": families,
            "notes": census.notes,
        })
    });
    json!({
        "triple": p.label,
        "killing_signature": [p.killing.0, p.killing.1, p.killing.2],
        "series": {
            "commutant": p.series.commutant,
            "descending": [p.series.upper.0, p.series.upper.1],
            "derived": [p.series.lower.0, p.series.lower.1],
        },
        "split_quadratic": split,
        "levi_restriction": levi,
        "center_signature": [p.center_signature.0, p.center_signature.1, p.center_signature.2],
        "mia_census": mia,
    })
}

fn basis_json(basis: &[Vec<Rat>]) -> Value {
    Value::Array(
        basis
            .iter()
            .map(|v| Value::Array(v.iter().map(|x| json!(fmt_rat(x))).collect()))
            .collect(),
    )
}

fn matrix_json(m: &Mat<Rat>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array((0..m.cols()).map(|j| json!(fmt_rat(&m[(i, j)]))).collect())
            })
            .collect(),
    )
}

/// Emits a classification report.
pub fn emit_classification(report: &ClassificationReport, format: Format) -> String {
    match format {
        Format::Text => classification_text(report),
        Format::Csv => classification_csv(report),
        Format::Json => pretty(&classification_json(report)),
    }
}

fn classification_text(report: &ClassificationReport) -> String {
    let mut out = String::new();
    let grid_a: Vec<String> = report.grid.a_values.iter().map(fmt_rat).collect();
    let grid_b: Vec<String> = report.grid.b_values.iter().map(fmt_rat).collect();
    out.push_str(&format!(
        "classification of six-dimensional real Drinfeld doubles\ngrid: a in {{{}}}, b in {{{}}}\n\n",
        grid_a.join(", "),
        grid_b.join(", ")
    ));
    for class in &report.classes {
        out.push_str(&format!("class {:>2}: {}\n", class.index, class.title));
        for instance in &class.instances {
            let members: Vec<String> =
                instance.members.iter().map(|m| m.profile.label.clone()).collect();
            let binding = if instance.binding.is_empty() {
                String::new()
            } else {
                format!(" [{}]", instance.binding)
            };
            out.push_str(&format!("  members{}: {}\n", binding, members.join(", ")));
            let (p, n, z) = instance.profile.killing;
            out.push_str(&format!(
                "    profile: signature ({p},{n},{z}); dims {}; {},{}; {},{}\n",
                instance.profile.series.commutant,
                instance.profile.series.upper.0,
                instance.profile.series.upper.1,
                instance.profile.series.lower.0,
                instance.profile.series.lower.1
            ));
            for edge in &instance.edges {
                out.push_str(&format!(
                    "    witness ({}): {} -> {}\n",
                    edge.via, edge.from, edge.to
                ));
            }
        }
    }
    out.push_str(&format!("\nclasses: {}\n", report.class_count()));
    out.push_str(&format!(
        "separations: {} pairs of distinct doubles, each by a named invariant\n",
        report.separations.len()
    ));
    let mut by_invariant: Vec<(String, usize)> = Vec::new();
    for s in &report.separations {
        match by_invariant.iter_mut().find(|(name, _)| *name == s.invariant) {
            Some((_, count)) => *count += 1,
            None => by_invariant.push((s.invariant.clone(), 1)),
        }
    }
    by_invariant.sort();
    for (name, count) in by_invariant {
        out.push_str(&format!("  {name}: {count}\n"));
    }
    if !report.annotations.is_empty() {
        out.push_str("\nannotations:\n");
        for a in &report.annotations {
            out.push_str(&format!("  - {a}\n"));
        }
    }
    if report.failures.is_empty() {
        out.push_str("\nall witnesses verified; every pair separated\n");
    } else {
        out.push_str("\nFAILURES:\n");
        for f in &report.failures {
            out.push_str(&format!("  - {f}\n"));
        }
    }
    out
}

fn classification_csv(report: &ClassificationReport) -> String {
    let mut out = String::from("class,binding,member,sig_p,sig_n,sig_z,dim_commutant,dim_D2,dim_D3,dim_Dl2,dim_Dl3\n");
    for class in &report.classes {
        for instance in &class.instances {
            for m in &instance.members {
                let p = &m.profile;
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{}\n",
                    class.index,
                    csv_quote(&instance.binding),
                    csv_quote(&p.label),
                    p.killing.0,
                    p.killing.1,
                    p.killing.2,
                    p.series.commutant,
                    p.series.upper.0,
                    p.series.upper.1,
                    p.series.lower.0,
                    p.series.lower.1
                ));
            }
        }
    }
    out
}

fn classification_json(report: &ClassificationReport) -> Value {
    let classes: Vec<Value> = report
        .classes
        .iter()
        .map(|class| {
            let instances: Vec<Value> = class
                .instances
                .iter()
                .map(|instance| {
                    let members: Vec<Value> = instance
                        .members
                        .iter()
                        .map(|m| {
                            json!({
                                "label": m.label,
                                "params": params_json(&m.params),
                                "profile": profile_json(&m.profile),
                            })
                        })
                        .collect();
                    let edges: Vec<Value> = instance
                        .edges
                        .iter()
                        .map(|e| {
                            json!({
                                "from": e.from,
                                "to": e.to,
                                "via": e.via,
                                "matrix": matrix_json(&e.matrix),
                            })
                        })
                        .collect();
                    json!({
                        "binding": instance.binding,
                        "members": members,
                        "witnesses": edges,
                    })
                })
                .collect();
            json!({
                "index": class.index,
                "title": class.title,
                "instances": instances,
            })
        })
        .collect();
    let separations: Vec<Value> = report
        .separations
        .iter()
        .map(|s| json!({ "left": s.left, "right": s.right, "invariant": s.invariant }))
        .collect();
    json!({
        "schema": "drinfeld-lab/1",
        "kind": "classification",
        "grid": {
            "a": report.grid.a_values.iter().map(fmt_rat).collect::<Vec<_>>(),
            "b": report.grid.b_values.iter().map(fmt_rat).collect::<Vec<_>>(),
        },
        "class_count": report.class_count(),
        "classes": classes,
        "separations": separations,
        "annotations": report.annotations,
        "failures": report.failures,
        "all_verified": report.all_verified(),
    })
}

fn params_json(p: &crate::manin::Params) -> Value {
    let mut map = serde_json::Map::new();
    if let Some(a) = &p.a {
        map.insert("a".into(), json!(fmt_rat(a)));
    }
    if let Some(b) = &p.b {
        map.insert("b".into(), json!(fmt_rat(b)));
    }
    Value::Object(map)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialization cannot fail");
    s.push('\n');
    s
}

/// Serializes a triple's double as an `.lalg` document: six basis vectors,
/// the canonical pairing, and every nonzero bracket with exact coefficients.
pub fn triple_to_lalg(t: &ManinTriple) -> String {
    let d = crate::manin::assemble_bracket_table(t.g(), t.gt());
    let names = ["X1", "X2", "X3", "Xt1", "Xt2", "Xt3"];
    let mut out = format!("# {}\n", t.display_label());
    out.push_str("basis X1 X2 X3 Xt1 Xt2 Xt3;\n");
    for i in 0..3 {
        out.push_str(&format!("pairing {} {};\n", names[i], names[i + 3]));
    }
    for i in 0..6 {
        for j in i + 1..6 {
            let w = d.bracket_basis(i, j);
            if w.iter().all(num_traits::Zero::is_zero) {
                continue;
            }
            let mut terms = String::new();
            for (k, c) in w.iter().enumerate() {
                if num_traits::Zero::is_zero(c) {
                    continue;
                }
                let abs = if c < &Rat::from_integer(0.into()) { -c.clone() } else { c.clone() };
                let sign = if c < &Rat::from_integer(0.into()) { "-" } else { "+" };
                if terms.is_empty() {
                    if sign == "-" {
                        terms.push('-');
                    }
                } else {
                    terms.push_str(&format!(" {sign} "));
                }
                if abs.is_one() {
                    terms.push_str(names[k]);
                } else {
                    terms.push_str(&format!("{}*{}", fmt_rat(&abs), names[k]));
                }
            }
            out.push_str(&format!("[{},{}] = {};\n", names[i], names[j], terms));
        }
    }
    out
}
