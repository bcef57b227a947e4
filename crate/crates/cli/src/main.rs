//! Command-line front end: catalog listing, invariant profiles, isomorphism
//! verification and search, classification reproduction, and classification
//! of user-supplied algebras.
//!
//! Exit status: 0 when every requested check passed, 1 when a verification
//! failed, 2 on usage or input errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use drinfeld_lab::exactmath::{parse_rat, Rat};
use drinfeld_lab::invariants::{invariant_profile, profile_of_double, InvariantProfile};
use drinfeld_lab::isomorph::{
    catalog_iso, default_entries, search_iso, verify_matrix, verify_theorem, GridSpec,
    IsoCandidate, SearchOutcome,
};
use drinfeld_lab::liecore::bianchi_classify;
use drinfeld_lab::manin::{
    build_double, catalog_bianchi, catalog_entries, catalog_triple, Params,
};
use drinfeld_lab::specio::{
    emit_classification, emit_profiles, parse_algebra, Format,
};
use drinfeld_lab::Mat;

#[derive(Parser)]
#[command(
    name = "drinfeld-lab",
    about = "Exact construction and classification of 6-dimensional real Drinfeld doubles",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Number of worker threads for independent triples.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Lists the catalog: 44 Manin triples (up to duality) and the Bianchi
    /// algebras.
    Catalog {
        #[command(subcommand)]
        what: CatalogCommand,
    },
    /// Computes invariant profiles of catalog triples.
    Invariants(InvariantsArgs),
    /// Verifies an isomorphism witness between two catalog doubles.
    VerifyIso(VerifyIsoArgs),
    /// Searches for an isomorphism witness within a node budget.
    SearchIso(SearchIsoArgs),
    /// Reproduces the classification into 22 classes on a parameter grid.
    VerifyTheorem(VerifyTheoremArgs),
    /// Classifies an algebra from an .lalg file.
    Classify(ClassifyArgs),
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Prints all labels.
    List,
    /// Looks up a 3-dimensional algebra in either naming scheme, e.g.
    /// "9", "6_{1/2}", "r3(1/3)", "s3(0)".
    Bianchi { name: String },
}

#[derive(Args)]
struct InvariantsArgs {
    /// Catalog label, e.g. "(9|5|b)".
    #[arg(long, conflicts_with = "all")]
    triple: Option<String>,
    /// Parameter bindings, e.g. "a=2,b=1".
    #[arg(long, default_value = "")]
    params: String,
    /// Profile every catalog entry over the parameter grid.
    #[arg(long)]
    all: bool,
    /// Grid override, e.g. "a=2,3,1/2;b=1,2,-1".
    #[arg(long)]
    grid: Option<String>,
}

#[derive(Args)]
struct VerifyIsoArgs {
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    /// File with a 6×6 matrix (six rows of six rationals) to verify instead
    /// of the catalog transformation.
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Parameter bindings of the source triple, e.g. "b=1".
    #[arg(long, default_value = "")]
    params: String,
    /// Parameter bindings of the target triple (defaults to the source's,
    /// or the catalog correspondence for known pairs).
    #[arg(long)]
    to_params: Option<String>,
}

#[derive(Args)]
struct SearchIsoArgs {
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    /// Node budget for the backtracking search.
    #[arg(long, default_value_t = 200_000)]
    budget: usize,
    #[arg(long, default_value = "")]
    params: String,
    #[arg(long)]
    to_params: Option<String>,
    /// Comma-separated entry pool for branched rows, e.g. "1,-1,1/2".
    #[arg(long)]
    entries: Option<String>,
}

#[derive(Args)]
struct VerifyTheoremArgs {
    /// Grid override, e.g. "a=2,3,1/2;b=1,2,-1". The environment variable
    /// DRINFELD_LAB_GRID is used when the flag is absent.
    #[arg(long)]
    grid: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Path to an .lalg file.
    file: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format: Format = match cli.format.parse() {
        Ok(f) => f,
        Err(e) => return usage_error(&e),
    };
    let outcome = run(&cli, format);
    match outcome {
        Ok(Outcome { report, verified }) => {
            if let Err(e) = write_report(&cli.output, &report) {
                return usage_error(&format!("cannot write output: {e}"));
            }
            if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(RunError::Usage(msg)) => usage_error(&msg),
        Err(RunError::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

struct Outcome {
    report: String,
    verified: bool,
}

enum RunError {
    /// Bad invocation or unparsable input: exit status 2.
    Usage(String),
    /// A computation failed: exit status 1.
    Internal(String),
}

fn usage(e: impl std::fmt::Display) -> RunError {
    RunError::Usage(e.to_string())
}

fn run(cli: &Cli, format: Format) -> Result<Outcome, RunError> {
    match &cli.command {
        Command::Catalog { what: CatalogCommand::List } => Ok(catalog_list(format)),
        Command::Catalog { what: CatalogCommand::Bianchi { name } } => bianchi_lookup(name),
        Command::Invariants(args) => invariants_cmd(args, format, cli.jobs),
        Command::VerifyIso(args) => verify_iso_cmd(args, format),
        Command::SearchIso(args) => search_iso_cmd(args, format),
        Command::VerifyTheorem(args) => verify_theorem_cmd(args, format),
        Command::Classify(args) => classify_cmd(args, format),
    }
}

fn catalog_list(format: Format) -> Outcome {
    let triples: Vec<&str> = catalog_entries().iter().map(|e| e.label).collect();
    let bianchi = ["1", "2", "3", "4", "5", "6_a", "6_0", "7_a", "7_0", "8", "9"];
    let report = match format {
        Format::Json => serde_like_list(&triples, &bianchi),
        _ => {
            let mut out = String::from("Manin triples (44, up to duality):\n");
            for label in &triples {
                out.push_str(&format!("  {label}\n"));
            }
            out.push_str("\nBianchi algebras (11):\n");
            for label in &bianchi {
                out.push_str(&format!("  {label}\n"));
            }
            out
        }
    };
    Outcome { report, verified: true }
}

fn serde_like_list(triples: &[&str], bianchi: &[&str]) -> String {
    let mut out = String::from("{\n  \"schema\": \"drinfeld-lab/1\",\n  \"kind\": \"catalog\",\n  \"triples\": [\n");
    for (i, t) in triples.iter().enumerate() {
        out.push_str(&format!(
            "    \"{}\"{}\n",
            t,
            if i + 1 == triples.len() { "" } else { "," }
        ));
    }
    out.push_str("  ],\n  \"bianchi\": [\n");
    for (i, b) in bianchi.iter().enumerate() {
        out.push_str(&format!(
            "    \"{}\"{}\n",
            b,
            if i + 1 == bianchi.len() { "" } else { "," }
        ));
    }
    out.push_str("  ]\n}\n");
    out
}

fn bianchi_lookup(name: &str) -> Result<Outcome, RunError> {
    let (alg, bianchi) = catalog_bianchi(name).map_err(usage)?;
    let mut out = format!("{name}: Bianchi type {bianchi}\n");
    out.push_str(&format!("{alg:?}\n"));
    Ok(Outcome { report: out, verified: true })
}

fn parse_params(text: &str) -> Result<Params, RunError> {
    let mut params = Params::none();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| usage(format!("bad parameter binding `{part}`, expected name=value")))?;
        let value: Rat = parse_rat(value).map_err(usage)?;
        match name.trim() {
            "a" => params.a = Some(value),
            "b" => params.b = Some(value),
            other => return Err(usage(format!("unknown parameter `{other}`"))),
        }
    }
    Ok(params)
}

fn grid_from(flag: &Option<String>) -> Result<GridSpec, RunError> {
    if let Some(text) = flag {
        return GridSpec::parse(text).map_err(usage);
    }
    if let Ok(text) = std::env::var("DRINFELD_LAB_GRID") {
        if !text.trim().is_empty() {
            return GridSpec::parse(&text).map_err(usage);
        }
    }
    Ok(GridSpec::default())
}

fn grid_params_for(entry: &drinfeld_lab::manin::CatalogEntry, grid: &GridSpec) -> Vec<Params> {
    let a_choices: Vec<Option<Rat>> = if entry.needs_a() {
        grid.a_values.iter().filter(|a| entry.a.admits(a)).map(|a| Some(a.clone())).collect()
    } else {
        vec![None]
    };
    let b_choices: Vec<Option<Rat>> = if entry.needs_b() {
        grid.b_values.iter().filter(|b| entry.b.admits(b)).map(|b| Some(b.clone())).collect()
    } else {
        vec![None]
    };
    let mut out = Vec::new();
    for a in &a_choices {
        for b in &b_choices {
            out.push(Params { a: a.clone(), b: b.clone() });
        }
    }
    out
}

fn invariants_cmd(args: &InvariantsArgs, format: Format, jobs: usize) -> Result<Outcome, RunError> {
    if let Some(label) = &args.triple {
        let params = parse_params(&args.params)?;
        let triple = catalog_triple(label, &params).map_err(usage)?;
        let profile = invariant_profile(&triple).map_err(|e| RunError::Internal(e.to_string()))?;
        return Ok(Outcome { report: emit_profiles(&[profile], format), verified: true });
    }
    if !args.all {
        return Err(usage("pass --triple <label> or --all"));
    }
    let grid = grid_from(&args.grid)?;
    let mut tasks: Vec<(String, Params)> = Vec::new();
    for entry in catalog_entries() {
        for params in grid_params_for(entry, &grid) {
            tasks.push((entry.label.to_string(), params));
        }
    }
    let profiles = run_parallel(&tasks, jobs.max(1), |(label, params)| {
        let triple = catalog_triple(label, params).expect("catalog instantiation");
        invariant_profile(&triple).expect("profile computation")
    });
    Ok(Outcome { report: emit_profiles(&profiles, format), verified: true })
}

/// Evaluates pure tasks on worker threads, reassembling results in input
/// order so output stays deterministic.
fn run_parallel<T: Sync, R: Send>(
    tasks: &[T],
    jobs: usize,
    f: impl Fn(&T) -> R + Sync,
) -> Vec<R> {
    if jobs <= 1 || tasks.len() <= 1 {
        return tasks.iter().map(f).collect();
    }
    let mut results: Vec<Option<R>> = (0..tasks.len()).map(|_| None).collect();
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots: Vec<std::sync::Mutex<&mut Option<R>>> =
        results.iter_mut().map(std::sync::Mutex::new).collect();
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(tasks.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= tasks.len() {
                    break;
                }
                let value = f(&tasks[i]);
                **slots[i].lock().expect("result slot") = Some(value);
            });
        }
    });
    results.into_iter().map(|r| r.expect("all tasks completed")).collect()
}

fn resolve_pair(
    from: &str,
    to: &str,
    params: &Params,
    to_params: &Option<String>,
) -> Result<(drinfeld_lab::ManinTriple, drinfeld_lab::ManinTriple), RunError> {
    let from_triple = catalog_triple(from, params).map_err(usage)?;
    let to_params = match to_params {
        Some(text) => parse_params(text)?,
        None => match (to, &params.b) {
            // the catalog correspondence flips the sign of b for this pair
            ("(6_0|4.i|-b)", Some(b)) => Params { a: params.a.clone(), b: Some(-b.clone()) },
            _ => params.clone(),
        },
    };
    let to_label = if to == "(6_0|4.i|-b)" { "(6_0|4.i|b)" } else { to };
    let to_entry = drinfeld_lab::manin::catalog_entry(to_label)
        .ok_or_else(|| usage(format!("unknown catalog label `{to}`")))?;
    let to_bound = Params {
        a: to_entry.needs_a().then(|| to_params.a.clone()).flatten(),
        b: to_entry.needs_b().then(|| to_params.b.clone()).flatten(),
    };
    let to_triple = catalog_triple(to_label, &to_bound).map_err(usage)?;
    Ok((from_triple, to_triple))
}

fn verify_iso_cmd(args: &VerifyIsoArgs, format: Format) -> Result<Outcome, RunError> {
    let params = parse_params(&args.params)?;
    let candidate = match &args.matrix {
        None => catalog_iso(&args.from, &args.to, &params).map_err(usage)?,
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            let matrix = parse_matrix(&text)?;
            let (from_triple, to_triple) =
                resolve_pair(&args.from, &args.to, &params, &args.to_params)?;
            IsoCandidate::new(from_triple, to_triple, matrix)
        }
    };
    let report = candidate.verify().map_err(|e| RunError::Internal(e.to_string()))?;
    let verified = report.is_valid();
    let text = match format {
        Format::Json => {
            let form: Vec<String> =
                report.form_violations.iter().map(|(a, b)| format!("({a},{b})")).collect();
            let structure: Vec<String> = report
                .structure_violations
                .iter()
                .map(|(a, b, r)| format!("({a},{b},{r})"))
                .collect();
            format!(
                "{{\n  \"schema\": \"drinfeld-lab/1\",\n  \"kind\": \"verify-iso\",\n  \"from\": \"{}\",\n  \"to\": \"{}\",\n  \"valid\": {},\n  \"form_violations\": {:?},\n  \"structure_violations\": {:?}\n}}\n",
                candidate.from.display_label(),
                candidate.to.display_label(),
                verified,
                form,
                structure
            )
        }
        _ => {
            if verified {
                format!(
                    "valid: {} -> {} preserves the pairing and the bracket table\n",
                    candidate.from.display_label(),
                    candidate.to.display_label()
                )
            } else {
                format!(
                    "INVALID: {} -> {}\n  pairing violations at {:?}\n  bracket violations at {:?}\n",
                    candidate.from.display_label(),
                    candidate.to.display_label(),
                    report.form_violations,
                    report.structure_violations
                )
            }
        }
    };
    Ok(Outcome { report: text, verified })
}

fn parse_matrix(text: &str) -> Result<Mat<Rat>, RunError> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row: Result<Vec<Rat>, _> = line.split_whitespace().map(parse_rat).collect();
        rows.push(row.map_err(usage)?);
    }
    if rows.len() != 6 || rows.iter().any(|r| r.len() != 6) {
        return Err(usage("matrix file must contain six rows of six rationals"));
    }
    Ok(Mat::from_rows(rows))
}

fn search_iso_cmd(args: &SearchIsoArgs, format: Format) -> Result<Outcome, RunError> {
    if args.budget == 0 {
        return Err(usage("search budget must be positive"));
    }
    let params = parse_params(&args.params)?;
    let (from_triple, to_triple) = resolve_pair(&args.from, &args.to, &params, &args.to_params)?;
    let d = build_double(&from_triple).map_err(usage)?;
    let d2 = build_double(&to_triple).map_err(usage)?;
    let entries = match &args.entries {
        Some(text) => {
            let parsed: Result<Vec<Rat>, _> = text.split(',').map(parse_rat).collect();
            parsed.map_err(usage)?
        }
        None => default_entries(),
    };
    let outcome =
        search_iso(&d, &d2, args.budget, &entries).map_err(|e| RunError::Internal(e.to_string()))?;
    let (text, verified) = match outcome {
        SearchOutcome::Found(m) => {
            let check = verify_matrix(&m, &d, &d2).map_err(|e| RunError::Internal(e.to_string()))?;
            let rows: Vec<Vec<String>> = (0..6)
                .map(|i| {
                    (0..6).map(|j| drinfeld_lab::exactmath::fmt_rat(&m[(i, j)])).collect()
                })
                .collect();
            let out = match format {
                Format::Json => format!(
                    "{{\n  \"schema\": \"drinfeld-lab/1\",\n  \"kind\": \"search-iso\",\n  \"outcome\": \"witness\",\n  \"verified\": {},\n  \"matrix\": {:?}\n}}\n",
                    check.is_valid(),
                    rows
                ),
                _ => {
                    let mut out = String::from("witness found:\n");
                    for row in &rows {
                        out.push_str(&format!("  [{}]\n", row.join(", ")));
                    }
                    out.push_str(&format!("verified: {}\n", check.is_valid()));
                    out
                }
            };
            (out, check.is_valid())
        }
        SearchOutcome::Distinct(invariant) => (
            match format {
                Format::Json => format!(
                    "{{\n  \"schema\": \"drinfeld-lab/1\",\n  \"kind\": \"search-iso\",\n  \"outcome\": \"distinct\",\n  \"invariant\": \"{invariant}\"\n}}\n"
                ),
                _ => format!("non-isomorphic: certified by the {invariant} invariant\n"),
            },
            true,
        ),
        SearchOutcome::NotFoundWithinBudget => (
            match format {
                Format::Json => "{\n  \"schema\": \"drinfeld-lab/1\",\n  \"kind\": \"search-iso\",\n  \"outcome\": \"inconclusive\"\n}\n"
                    .to_string(),
                _ => "no witness found within the budget (inconclusive)\n".to_string(),
            },
            false,
        ),
    };
    Ok(Outcome { report: text, verified })
}

fn verify_theorem_cmd(args: &VerifyTheoremArgs, format: Format) -> Result<Outcome, RunError> {
    let grid = grid_from(&args.grid)?;
    let report = verify_theorem(&grid).map_err(|e| RunError::Internal(e.to_string()))?;
    let verified = report.all_verified() && report.class_count() == 22;
    Ok(Outcome { report: emit_classification(&report, format), verified })
}

fn classify_cmd(args: &ClassifyArgs, format: Format) -> Result<Outcome, RunError> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| usage(format!("cannot read {}: {e}", args.file.display())))?;
    let doc = parse_algebra(&text).map_err(usage)?;
    let alg = doc.to_lie_algebra();
    let jacobi = alg.check_jacobi();
    if !jacobi.is_valid() {
        return Ok(Outcome {
            report: format!(
                "not a Lie algebra: Jacobi identity fails at triples {:?}\n",
                jacobi.violations
            ),
            verified: false,
        });
    }
    match doc.dim() {
        3 => {
            let t = bianchi_classify(&alg).map_err(|e| RunError::Internal(e.to_string()))?;
            Ok(Outcome { report: format!("valid Lie algebra; Bianchi type {t}\n"), verified: true })
        }
        6 => {
            let Some(order) = doc.canonical_order() else {
                return Ok(Outcome {
                    report: "valid 6-dimensional Lie algebra; declare a pairing \
                             (three `pairing Xi Yi;` lines) to compute the double profile\n"
                        .to_string(),
                    verified: true,
                });
            };
            let profile = classify_double(&alg, &order)?;
            Ok(Outcome { report: emit_profiles(&[profile], format), verified: true })
        }
        other => Ok(Outcome {
            report: format!("valid Lie algebra of dimension {other}; no further classification\n"),
            verified: true,
        }),
    }
}

/// Rebuilds the document's algebra as a Manin triple in the declared
/// pairing's canonical order and computes the full profile.
fn classify_double(
    alg: &drinfeld_lab::LieAlgebra,
    order: &[usize],
) -> Result<InvariantProfile, RunError> {
    use drinfeld_lab::exactmath::rint;
    let nz = |x: &Rat| *x != rint(0);
    // permute into (primal, dual) order
    let mut perm = Mat::zero(6, 6);
    for (new, &old) in order.iter().enumerate() {
        perm[(old, new)] = rint(1);
    }
    let reordered = alg
        .change_basis(&perm)
        .map_err(|e| RunError::Internal(e.to_string()))?;
    // split into the two triples and rebuild through the validated path
    let mut g_brackets = Vec::new();
    let mut gt_brackets = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let w = reordered.bracket_basis(i, j);
            if w[3..].iter().any(nz) {
                return Err(RunError::Usage(
                    "the declared primal triple is not a subalgebra".into(),
                ));
            }
            let terms: Vec<(Rat, usize)> = w[..3]
                .iter()
                .enumerate()
                .filter(|(_, x)| nz(x))
                .map(|(k, x)| (x.clone(), k))
                .collect();
            g_brackets.push(((i, j), terms));
            let w = reordered.bracket_basis(3 + i, 3 + j);
            if w[..3].iter().any(nz) {
                return Err(RunError::Usage(
                    "the declared dual triple is not a subalgebra".into(),
                ));
            }
            let terms: Vec<(Rat, usize)> = w[3..]
                .iter()
                .enumerate()
                .filter(|(_, x)| nz(x))
                .map(|(k, x)| (x.clone(), k))
                .collect();
            gt_brackets.push(((i, j), terms));
        }
    }
    let g = drinfeld_lab::LieAlgebra::from_brackets(3, &g_brackets);
    let gt = drinfeld_lab::LieAlgebra::from_brackets(3, &gt_brackets);
    let triple = drinfeld_lab::ManinTriple::new("(user)", g, gt, Params::none())
        .map_err(|e| RunError::Usage(format!("not a Manin triple: {e}")))?;
    let d = build_double(&triple).map_err(|e| RunError::Usage(format!("not a double: {e}")))?;
    // the declared brackets must agree with the assembled double
    if d.algebra() != &reordered {
        return Err(RunError::Usage(
            "cross brackets are not compatible with the declared pairing".into(),
        ));
    }
    profile_of_double(&d).map_err(|e| RunError::Internal(e.to_string()))
}

fn write_report(output: &Option<PathBuf>, report: &str) -> std::io::Result<()> {
    match output {
        Some(path) => std::fs::write(path, report),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(report.as_bytes())
        }
    }
}
