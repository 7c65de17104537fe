//! The `pid` command line: decompositions, lattices, domains, the rank
//! analysis and result checking.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use pid_core::concepts::{concept_lattice, domain_for_concept, parse_measure_file};
use pid_core::engine::{
    decompose, inclusion_exclusion_check, parse_result_json, proper_synergy_rank_analysis, verify_consistency,
    MeasureSource, ResultJson,
};
use pid_core::info::{load_joint, JointFormat};
use pid_core::lattice::redundancy_domain;
use pid_core::random::random_binary_distribution;
use pid_core::{BaseConcept, JointDistribution, PidError};

#[derive(Debug, Parser)]
#[command(
    name = "pid",
    version,
    about = "Partial information decomposition from base-concepts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose a distribution into information atoms.
    Decompose(DecomposeArgs),
    /// Emit a concept's (semi-)lattice as Graphviz DOT.
    Lattice(LatticeArgs),
    /// List the antichains of a concept's domain.
    Domains(LatticeArgs),
    /// Rank analysis of the proper-synergy equations.
    Rank(RankArgs),
    /// Check a result file against its distribution.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// Distribution file; without it a random binary distribution over
    /// `--n` sources is drawn from `--seed`.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_parser = parse_format)]
    pub format: Option<JointFormat>,
    #[arg(long, value_parser = parse_concept)]
    pub concept: BaseConcept,
    /// `reference` or a measure file.
    #[arg(long, default_value = "reference")]
    pub measure: String,
    /// Add every concept's values derived from the atoms.
    #[arg(long)]
    pub table: bool,
    /// Aligned text instead of JSON.
    #[arg(long)]
    pub text: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_concept)]
    pub concept: BaseConcept,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Result JSON written by `decompose`.
    #[arg(long)]
    pub input: PathBuf,
    /// The distribution the result claims to decompose.
    #[arg(long)]
    pub dist: PathBuf,
    #[arg(long, value_parser = parse_format)]
    pub format: Option<JointFormat>,
}

fn parse_concept(s: &str) -> Result<BaseConcept, String> {
    s.parse().map_err(|e: PidError| match e {
        PidError::Validation(msg) => msg,
        other => other.to_string(),
    })
}

fn parse_format(s: &str) -> Result<JointFormat, String> {
    s.parse().map_err(|e: PidError| e.to_string())
}

enum Failure {
    Usage(String),
    Validation(String),
}

impl From<PidError> for Failure {
    fn from(e: PidError) -> Self {
        Failure::Validation(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

/// Runs the CLI; returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("error: invalid arguments");
            let _ = writeln!(stderr, "{first}");
            return 2;
        }
    };
    let (result, out) = match &cli.command {
        Command::Decompose(a) => (cmd_decompose(a), a.out.as_deref()),
        Command::Lattice(a) => (cmd_lattice(a), a.out.as_deref()),
        Command::Domains(a) => (cmd_domains(a), a.out.as_deref()),
        Command::Rank(a) => (cmd_rank(a), a.out.as_deref()),
        Command::Check(a) => (cmd_check(a, stdout), None),
    };
    match result.and_then(|text| emit(&text, out, stdout)) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {}", one_line(&msg));
            2
        }
        Err(Failure::Validation(msg)) => {
            let _ = writeln!(stderr, "error: {}", one_line(&msg));
            1
        }
    }
}

fn one_line(msg: &str) -> String {
    msg.lines().collect::<Vec<_>>().join(" ")
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Validation(format!("cannot write {}: {e}", path.display())))
        }
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Validation(format!("cannot write output: {e}"))),
    }
}

fn load_dist(path: &Path, format: Option<JointFormat>) -> Result<JointDistribution, Failure> {
    let format = format.unwrap_or_else(|| JointFormat::from_path(path));
    Ok(load_joint(path, format)?)
}

fn cmd_decompose(a: &DecomposeArgs) -> CmdResult {
    let dist = match (&a.input, a.n) {
        (Some(path), _) => load_dist(path, a.format)?,
        (None, Some(n)) => random_binary_distribution(n, a.seed)?,
        (None, None) => return Err(Failure::Usage("decompose needs --input or --n".into())),
    };
    let measure = if a.measure == "reference" {
        MeasureSource::Reference
    } else {
        let path = Path::new(&a.measure);
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Validation(format!("cannot read {}: {e}", path.display())))?;
        let file = parse_measure_file(&text, dist.n_sources())?;
        let assignment = file.into_assignment(dist.n_sources(), Some(&dist))?;
        MeasureSource::Assignment {
            assignment,
            label: format!("file {}", a.measure),
        }
    };
    let result = decompose(&dist, a.concept, measure)?;
    if a.text {
        Ok(render_text(&result.to_json_value(a.table)?))
    } else {
        Ok(result.to_json(a.table)?)
    }
}

fn fmt_value(v: f64) -> String {
    let s = format!("{v:.9}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn render_text(doc: &ResultJson) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n        {}", doc.n);
    let _ = writeln!(out, "concept  {}", doc.concept);
    let _ = writeln!(out, "measure  {}", doc.measure);
    let _ = writeln!(out, "digest   {}", doc.digest);
    out.push('\n');
    let rows: Vec<[String; 3]> = doc
        .atoms
        .iter()
        .map(|r| [r.alpha.clone(), r.alpha_tilde.clone(), fmt_value(r.value)])
        .collect();
    table(&mut out, ["alpha", "alpha_tilde", "value"], &rows);
    if let Some(t) = &doc.table {
        out.push('\n');
        let rows: Vec<[String; 3]> = t
            .iter()
            .map(|r| [r.concept.clone(), r.alpha.clone(), fmt_value(r.value)])
            .collect();
        table(&mut out, ["concept", "alpha", "value"], &rows);
    }
    out
}

fn table(out: &mut String, header: [&str; 3], rows: &[[String; 3]]) {
    let mut width = header.map(|h| h.chars().count());
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |out: &mut String, cells: [&str; 3]| {
        let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));
        let _ = writeln!(
            out,
            "{}  {}  {}{}",
            pad(cells[0], width[0]),
            pad(cells[1], width[1]),
            " ".repeat(width[2] - cells[2].chars().count()),
            cells[2]
        );
    };
    line(out, header);
    for r in rows {
        line(out, [&r[0], &r[1], &r[2]]);
    }
}

fn cmd_lattice(a: &LatticeArgs) -> CmdResult {
    Ok(concept_lattice(a.concept, a.n)?.to_dot())
}

fn cmd_domains(a: &LatticeArgs) -> CmdResult {
    let mut out = String::new();
    for alpha in domain_for_concept(a.concept, a.n)? {
        let _ = writeln!(out, "{alpha}");
    }
    Ok(out)
}

fn cmd_rank(a: &RankArgs) -> CmdResult {
    let r = proper_synergy_rank_analysis(a.n)?;
    Ok(format!(
        "n={}\nunknowns={}\nconsistency_rank={}\ncombined_rank={}\nnovel_constraints={}\ndeficit={}\n",
        r.n, r.unknowns, r.consistency_rank, r.combined_rank, r.novel_constraints, r.deficit
    ))
}

fn cmd_check(a: &CheckArgs, stdout: &mut dyn Write) -> CmdResult {
    let text = fs::read_to_string(&a.input)
        .map_err(|e| Failure::Validation(format!("cannot read {}: {e}", a.input.display())))?;
    let imported = parse_result_json(&text)?;
    let dist = load_dist(&a.dist, a.format)?;
    let consistency = verify_consistency(&imported.atoms, &dist)?;
    let mut out = String::new();
    let digest = if imported.digest == dist.digest() {
        "match"
    } else {
        "mismatch"
    };
    let _ = writeln!(out, "digest               {digest}");
    let _ = writeln!(
        out,
        "consistency          {} (worst residual {:e} at {})",
        if consistency.passed { "pass" } else { "fail" },
        consistency.worst_residual,
        consistency.worst_subset
    );
    let mut ie_failures = Vec::new();
    let domain = redundancy_domain(imported.atoms.n())?;
    for alpha in &domain {
        if !inclusion_exclusion_check(&imported.atoms, alpha)?.passed {
            ie_failures.push(alpha.to_string());
        }
    }
    let _ = writeln!(
        out,
        "inclusion-exclusion  {} ({} of {} antichains)",
        if ie_failures.is_empty() { "pass" } else { "fail" },
        domain.len() - ie_failures.len(),
        domain.len()
    );
    let _ = stdout.write_all(out.as_bytes());
    if !consistency.passed {
        let subsets: Vec<String> = consistency.failing.iter().map(|s| s.to_string()).collect();
        return Err(Failure::Validation(format!(
            "consistency violated at {}",
            subsets.join(", ")
        )));
    }
    if !ie_failures.is_empty() {
        return Err(Failure::Validation(format!(
            "inclusion-exclusion violated at {}",
            ie_failures.join(", ")
        )));
    }
    Ok(String::new())
}

/// Convenience for tests: runs with captured streams.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(args, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 output"),
        String::from_utf8(err).expect("utf-8 output"),
    )
}
