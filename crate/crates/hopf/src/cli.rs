//! The `hopf` command line: `build`, `analyze`, `check-examples`, `diff`.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopf_core::analysis::{
    abelian_extension_obstruction, composition_series, example_hypothesis_check, group_like_group, isomorphism_search,
    jordan_holder_check, normal_candidates, quotient_hopf, subalgebra_hopf, triangularity_obstructions, verify_exact,
    CandidateOrder, CompositionSeries, Family, HypothesisStatus, IsoVerdict, JordanHolder, Verdict,
};
use hopf_core::groups::{order_statistics, PermGroup};
use hopf_core::hopf::{dual, verify_hopf, FinHopf, KIND_SECTION_IMAGE, KIND_SEQUENCE_KERNEL};
use hopf_core::{Conductor, Subspace};

use crate::report::{Report, Status};
use crate::{scene, store, CliError, EXIT_INPUT, EXIT_OK};

#[derive(Debug, Parser)]
#[command(name = "hopf", about = "Exact construction and analysis of finite-dimensional Hopf algebras", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build every node of a scene and write `.hstore` artifacts.
    Build {
        scene: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Run analyses on an artifact; all of them when no flag is given.
    Analyze(AnalyzeArgs),
    /// Check the generator-level hypotheses of the A_n / S_n families.
    CheckExamples {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare two artifacts structurally.
    Diff {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    artifact: PathBuf,
    #[arg(long)]
    composition_series: bool,
    #[arg(long)]
    obstructions: bool,
    #[arg(long)]
    group_likes: bool,
    #[arg(long)]
    exactness: bool,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    /// Also write the report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    #[value(name = "4.1")]
    Alternating,
    #[value(name = "4.2")]
    Symmetric,
}

/// Parses arguments, runs the command, prints its output and returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match run(args) {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a command and returns its printed output with the exit code.
pub fn run<I, T>(args: I) -> Result<(String, i32), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return Ok((e.to_string(), code));
        }
    };
    crate::apply_element_cap_from_env()?;
    match cli.command {
        Command::Build { scene, out } => build(&scene, &out),
        Command::Analyze(args) => analyze(&args),
        Command::CheckExamples { family, n, m, json } => {
            let report = check_examples(family, n, m)?;
            Ok((render(&report, json), report.exit_code()))
        }
        Command::Diff { a, b, json } => {
            let report = diff(&a, &b)?;
            Ok((render(&report, json), report.exit_code()))
        }
    }
}

fn render(report: &Report, json: bool) -> String {
    if json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    }
}

fn build(scene_path: &Path, out: &Path) -> Result<(String, i32), CliError> {
    let scene = scene::load(scene_path)?;
    let outcome = scene::build(&scene, out)?;
    Ok((outcome.log, EXIT_OK))
}

/// Loads an artifact and re-runs `verify_hopf` on it.
pub fn load_verified(path: &Path) -> Result<Arc<FinHopf>, CliError> {
    let h = store::load(path)?;
    let report = verify_hopf(&h);
    if let Some(f) = report.failures().next() {
        return Err(CliError::Verification { identity: f.name.clone(), witness: f.witness.clone() });
    }
    Ok(Arc::new(h))
}

fn analyze(args: &AnalyzeArgs) -> Result<(String, i32), CliError> {
    let h = load_verified(&args.artifact)?;
    let all = !(args.composition_series || args.obstructions || args.group_likes || args.exactness);
    let mut report = Report::new(format!("{} (dim {}, conductor {})", args.artifact.display(), h.dim(), h.field().n()));
    if all || args.group_likes {
        report.extend(group_likes_report(&h)?);
    }
    if all || args.exactness {
        report.extend(exactness_report(&h)?);
    }
    if all || args.obstructions {
        report.extend(obstructions_report(&h)?);
    }
    if all || args.composition_series {
        report.extend(composition_report(&h)?);
    }
    let text = render(&report, args.json);
    if let Some(path) = &args.report {
        std::fs::write(path, &text).map_err(|e| CliError::io(path, e))?;
    }
    Ok((text, report.exit_code()))
}

/// Z/n when cyclic, otherwise order and element-order statistics.
pub fn describe_group(g: &PermGroup) -> String {
    let n = g.order();
    if n == 1 {
        return String::from("1");
    }
    if (0..n).any(|x| g.elem_order(x) == n) {
        return format!("Z/{n}");
    }
    let stats = order_statistics(g);
    let kind = if g.is_abelian() { "abelian" } else { "nonabelian" };
    format!("{kind} group of order {n}, element orders {stats:?}")
}

/// kG when H is spanned by group-likes, k^G when H is commutative and H*
/// is spanned by group-likes, otherwise the basic invariants.
pub fn describe_hopf(h: &FinHopf) -> String {
    let n = h.dim();
    if n == 1 {
        return String::from("k");
    }
    let dual_g = if h.is_commutative() { group_like_group(&dual(h)).ok() } else { None };
    if let Some(g) = dual_g.filter(|g| g.likes.len() == n) {
        return format!("k^({})", describe_group(&g.group));
    }
    if let Some(g) = group_like_group(h).ok().filter(|g| g.likes.len() == n) {
        return format!("k[{}]", describe_group(&g.group));
    }
    format!(
        "dim {n}, {}commutative, {}cocommutative",
        if h.is_commutative() { "" } else { "non" },
        if h.is_cocommutative() { "" } else { "non" }
    )
}

pub fn group_likes_report(h: &FinHopf) -> Result<Report, CliError> {
    const SECTION: &str = "group-likes";
    let mut r = Report::new("group-likes");
    match group_like_group(h) {
        Ok(g) => {
            r.push(SECTION, "|G(H)|", Status::Info, g.likes.len().to_string());
            r.push(SECTION, "G(H)", Status::Info, describe_group(&g.group));
            for (k, v) in g.likes.iter().enumerate() {
                let terms: Vec<String> = v.iter().map(|(i, c)| format!("({})·{}", c.to_compact(), h.labels()[*i])).collect();
                r.push(SECTION, format!("g{k}"), Status::Info, terms.join(" + "));
            }
        }
        Err(e) => r.push(SECTION, "G(H)", Status::Inconclusive, e.to_string()),
    }
    Ok(r)
}

fn sequence_kernels(h: &FinHopf) -> Vec<(String, Subspace)> {
    h.provenance()
        .subobjects
        .iter()
        .filter(|s| s.kind == KIND_SEQUENCE_KERNEL)
        .map(|s| (s.name.clone(), Subspace::spanned_by(h.dim(), &s.basis)))
        .collect()
}

/// Certifies K ↪ H ↠ H//K for every recorded sequence kernel K.
pub fn exactness_report(h: &Arc<FinHopf>) -> Result<Report, CliError> {
    const SECTION: &str = "exactness";
    let mut r = Report::new("exactness");
    let kernels = sequence_kernels(h);
    if kernels.is_empty() {
        r.push(SECTION, "exact sequence", Status::Info, "no sequence recorded in provenance");
    }
    for (name, space) in kernels {
        let label = format!("{name} -> H -> H//{name}");
        let outcome = subalgebra_hopf(h, &space, &name)
            .and_then(|(_, iota)| Ok((iota, quotient_hopf(h, &space)?.1)))
            .and_then(|(iota, pi)| verify_exact(&iota, &pi));
        match outcome {
            Ok(cert) => {
                let (k, n, t) = cert.dims;
                r.pass_or_fail(SECTION, label, k * t == n, format!("certified, dims {k} · {t} = {n}"));
            }
            Err(e) => r.push(SECTION, label, Status::Fail, e.to_string()),
        }
    }
    Ok(r)
}

fn verdict_status(v: Verdict) -> Status {
    match v {
        Verdict::Established => Status::Pass,
        Verdict::Inconclusive => Status::Inconclusive,
    }
}

pub fn obstructions_report(h: &Arc<FinHopf>) -> Result<Report, CliError> {
    const SECTION: &str = "obstructions";
    let mut r = Report::new("obstructions");
    match triangularity_obstructions(h) {
        Ok(t) => {
            r.push(
                SECTION,
                "not quasitriangular",
                verdict_status(t.not_quasitriangular),
                format!("{} (|G(H*)| = {})", t.not_quasitriangular, t.dual_group_likes),
            );
            r.push(
                SECTION,
                "not coquasitriangular",
                verdict_status(t.not_coquasitriangular),
                format!("{} (|G(H)| = {})", t.not_coquasitriangular, t.group_likes),
            );
        }
        Err(e) => {
            r.push(SECTION, "not quasitriangular", Status::Inconclusive, e.to_string());
            r.push(SECTION, "not coquasitriangular", Status::Inconclusive, e.to_string());
        }
    }
    let ab = abelian_extension_obstruction(h)?;
    let scope = if ab.complete { "complete candidate class" } else { "searched candidates" };
    match &ab.witness {
        None => r.push(SECTION, "not an abelian extension over searched candidates", Status::Pass, format!("established ({scope})")),
        Some(w) => r.push(
            SECTION,
            "not an abelian extension over searched candidates",
            Status::Info,
            format!("refuted: B = {w} is commutative with cocommutative H//B"),
        ),
    }
    let described: Vec<(String, String)> = normal_candidates(h)?
        .candidates
        .iter()
        .filter(|c| c.normal)
        .map(|c| {
            let what = subalgebra_hopf(h, &c.space, &c.name).map(|(sub, _)| describe_hopf(&sub)).unwrap_or_default();
            (c.name.clone(), what)
        })
        .collect();
    for t in &ab.tested {
        let what = described.iter().find(|(name, _)| *name == t.name).map_or("", |(_, w)| w.as_str());
        let quotient = if t.commutative {
            format!(", H//B {}cocommutative", if t.quotient_cocommutative { "" } else { "non" })
        } else {
            String::new()
        };
        r.push(
            "normal candidates",
            format!("{} (dim {}) ≅ {what}", t.name, t.dim),
            Status::Info,
            format!("B {}commutative{quotient}", if t.commutative { "" } else { "non" }),
        );
    }
    let sections: Vec<&str> = h
        .provenance()
        .subobjects
        .iter()
        .filter(|s| s.kind == KIND_SECTION_IMAGE)
        .map(|s| s.name.as_str())
        .collect();
    if h.provenance().construction == "smash_coproduct" {
        r.push(
            "normal candidates",
            "R-section candidates",
            Status::Info,
            if sections.is_empty() { String::from("none satisfy the section condition") } else { sections.join(", ") },
        );
    }
    r.push("normal candidates", "normality test", Status::Info, "left adjoint action only; right adjoint not checked");
    Ok(r)
}

fn series_text(s: &CompositionSeries) -> String {
    let names: Vec<String> = s.factors.iter().map(|f| describe_hopf(f)).collect();
    format!("length {}: {{{}}}", s.length(), names.join(", "))
}

pub fn composition_report(h: &Arc<FinHopf>) -> Result<Report, CliError> {
    const SECTION: &str = "composition series";
    let mut r = Report::new("composition series");
    let first = composition_series(h, CandidateOrder::SmallestFirst)?;
    r.push(SECTION, "smallest-first series", Status::Info, series_text(&first));
    let completeness = if first.certified { Status::Pass } else { Status::Inconclusive };
    r.push(
        SECTION,
        "completeness",
        completeness,
        if first.certified {
            "certified: every factor is a group or dual group algebra with a complete normal subalgebra search"
        } else {
            "heuristic: some factor lies outside the certified search class"
        },
    );
    let second = composition_series(h, CandidateOrder::LargestFirst)?;
    r.push(SECTION, "largest-first series", Status::Info, series_text(&second));
    match jordan_holder_check(&first, &second) {
        JordanHolder::Matched(m) => r.push(SECTION, "Jordan–Hölder matching", Status::Pass, format!("{m:?}")),
        JordanHolder::Unmatched(why) => r.push(SECTION, "Jordan–Hölder matching", Status::Fail, why),
        JordanHolder::Inconclusive(why) => r.push(SECTION, "Jordan–Hölder matching", Status::Inconclusive, why),
    }
    Ok(r)
}

fn check_examples(family: FamilyArg, n: usize, m: usize) -> Result<Report, CliError> {
    let fam = match family {
        FamilyArg::Alternating => Family::AlternatingTwist,
        FamilyArg::Symmetric => Family::SymmetricTwist,
    };
    let field = Conductor::new(4)?;
    let rep = example_hypothesis_check(fam, n, m, &field).map_err(|e| CliError::Input(e.to_string()))?;
    let title = match fam {
        Family::AlternatingTwist => format!("A_n family, n = {n}, m = {m}"),
        Family::SymmetricTwist => format!("S_n family, n = {n}, m = {m}"),
    };
    let mut r = Report::new(title);
    for line in &rep.lines {
        let (status, detail) = match &line.status {
            HypothesisStatus::Pass => (Status::Pass, String::new()),
            HypothesisStatus::Fail(w) => (Status::Fail, w.clone()),
            HypothesisStatus::NotApplicable(w) => (Status::Info, format!("branch not applicable: {w}")),
            HypothesisStatus::Cited(c) => (Status::Info, format!("cited: {c}")),
        };
        r.push("hypotheses", line.name.clone(), status, detail);
    }
    Ok(r)
}

fn diff(a: &Path, b: &Path) -> Result<Report, CliError> {
    const SECTION: &str = "diff";
    let ha = load_verified(a)?;
    let hb = load_verified(b)?;
    if ha.dim() != hb.dim() || ha.field() != hb.field() {
        return Err(CliError::Input(format!(
            "dimension/conductor mismatch: {} over Q(ζ_{}) vs {} over Q(ζ_{})",
            ha.dim(),
            ha.field().n(),
            hb.dim(),
            hb.field().n()
        )));
    }
    let mut r = Report::new(format!("{} vs {}", a.display(), b.display()));
    if ha.structure_eq(&hb) {
        r.push(SECTION, "structure constants", Status::Pass, "identical");
        return Ok(r);
    }
    let first = ha.structure_difference(&hb).unwrap_or_default();
    r.push(SECTION, "structure constants", Status::Info, format!("differ: {first}"));
    match isomorphism_search(&ha, &hb) {
        IsoVerdict::Iso(map) => {
            let moved = map.columns.iter().enumerate().filter(|(i, c)| c.len() != 1 || c.entries()[0].0 != *i).count();
            r.push(SECTION, "isomorphism", Status::Pass, format!("certified Hopf isomorphism witnessed ({moved} basis vectors moved)"));
        }
        IsoVerdict::Distinct(inv) => r.push(SECTION, "isomorphism", Status::Fail, format!("distinct: invariant {inv} differs")),
        IsoVerdict::Unknown => r.push(SECTION, "isomorphism", Status::Inconclusive, "no isomorphism found within the search class"),
    }
    Ok(r)
}
