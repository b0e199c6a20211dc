//! The `rpqlab` command line: evaluation, the match oracle, the property
//! matrix, the inclusion lattice and timings.
//!
//! Exit codes: [`EXIT_OK`], [`EXIT_FAILED`] when a check disagrees with its
//! expectation, [`EXIT_INPUT`] on bad input and [`EXIT_CAP`] when a result
//! cap is exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::graph::{Database, VertexId};
use crate::lab::bench::{self, Family};
use crate::lab::{self, Expectations, GenParams, Property};
use crate::matcher::{try_matches_upto, Endpoints};
use crate::problems::enumerate_flashlight;
use crate::rpq::Regex;
use crate::semantics::{default_cap, evaluate, stream_filter, CostTable, SemanticsId, SemanticsSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "rpqlab", version, about = "Regular path queries under finite-result semantics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a query under one semantics.
    Eval(EvalArgs),
    /// List every match up to a length bound.
    Oracle(OracleArgs),
    /// Search for counterexamples to the property matrix.
    Check(CheckArgs),
    /// Check the inclusions between semantics.
    Inclusions(LabArgs),
    /// Time evaluation on a scaling family.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Graph file (`V <vertex>` and `E <edge> <src> <tgt> <label>` lines).
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub query: String,
    #[arg(long)]
    pub semantics: SemanticsId,
    #[arg(long)]
    pub source: Option<VertexId>,
    #[arg(long)]
    pub target: Option<VertexId>,
    /// Result cap; defaults to RPQLAB_CAP or the built-in limit.
    #[arg(long)]
    pub cap: Option<usize>,
    /// Print walks as they are found: filter semantics stream straight from
    /// the search, the others go through the flashlight enumerator.
    #[arg(long)]
    pub stream: bool,
    /// Label costs (`<label> <cost>` lines) for cheapest-walk semantics;
    /// every label costs 1 otherwise.
    #[arg(long)]
    pub costs: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub query: String,
    #[arg(long)]
    pub max_len: usize,
    #[arg(long)]
    pub source: Option<VertexId>,
    #[arg(long)]
    pub target: Option<VertexId>,
}

#[derive(Debug, Clone, Args)]
pub struct LabArgs {
    #[arg(long, default_value_t = GenParams::default().seed)]
    pub seed: u64,
    /// Random trials; 1000 for `check`, 300 for `inclusions` by default.
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = GenParams::default().max_vertices)]
    pub max_v: usize,
    #[arg(long, default_value_t = GenParams::default().max_edges)]
    pub max_e: usize,
    #[arg(long, default_value_t = GenParams::default().alphabet)]
    pub alphabet: usize,
    #[arg(long, default_value_t = GenParams::default().depth)]
    pub depth: usize,
}

impl LabArgs {
    pub fn params(&self, default_trials: usize) -> GenParams {
        GenParams {
            seed: self.seed,
            max_vertices: self.max_v,
            max_edges: self.max_e,
            alphabet: self.alphabet,
            depth: self.depth,
            trials: self.trials.unwrap_or(default_trials),
        }
    }
}

/// Trials per cell used by `check` unless `--trials` says otherwise.
pub const CHECK_TRIALS: usize = 1000;

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub lab: LabArgs,
    /// Restrict to these properties (repeatable).
    #[arg(long)]
    pub property: Vec<Property>,
    /// Restrict to these semantics (repeatable).
    #[arg(long)]
    pub semantics: Vec<SemanticsId>,
    /// Print every counterexample, not just the summary lines.
    #[arg(long)]
    pub verbose: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_values_t = [SemanticsId::Shortest])]
    pub semantics: Vec<SemanticsId>,
    #[arg(long, default_value = "path")]
    pub family: Family,
    #[arg(long, value_delimiter = ',', default_values_t = [10, 100, 1000])]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = GenParams::default().seed)]
    pub seed: u64,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Database> {
    Database::parse(&read(path)?)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResultCap { .. } => EXIT_CAP,
        _ => EXIT_INPUT,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Input(format!("write failed: {e}"))
}

fn eval(a: &EvalArgs, out: &mut dyn Write) -> Result<i32> {
    let db = load_graph(&a.graph)?;
    let r = Regex::parse(&a.query)?;
    let mut spec = SemanticsSpec::new(a.semantics).with_cap(a.cap.unwrap_or_else(default_cap));
    if a.semantics == SemanticsId::Cheapest {
        let costs = match &a.costs {
            Some(p) => CostTable::parse(&read(p)?)?,
            None => CostTable::uniform(&db),
        };
        spec = spec.with_costs(costs);
    }
    let mut n = 0;
    if let (true, Some(f)) = (a.stream, a.semantics.filter()) {
        let ends = Endpoints { source: a.source.clone(), target: a.target.clone() };
        let mut failed = None;
        n = stream_filter(&db, &r, f, &ends, |w| {
            if failed.is_none() {
                failed = writeln!(out, "{w}").err();
            }
        })?;
        if let Some(e) = failed {
            return Err(io(e));
        }
    } else if a.stream {
        for w in enumerate_flashlight(&db, &r, a.source.as_ref(), a.target.as_ref(), &spec)? {
            writeln!(out, "{w}").map_err(io)?;
            n += 1;
        }
    } else {
        let ends = Endpoints { source: a.source.clone(), target: a.target.clone() };
        for w in evaluate(&db, &r, &spec, &ends)?.iter() {
            writeln!(out, "{w}").map_err(io)?;
            n += 1;
        }
    }
    writeln!(out, "COUNT {n}").map_err(io)?;
    Ok(EXIT_OK)
}

fn oracle(a: &OracleArgs, out: &mut dyn Write) -> Result<i32> {
    let db = load_graph(&a.graph)?;
    let r = Regex::parse(&a.query)?;
    let ends = Endpoints { source: a.source.clone(), target: a.target.clone() };
    let ms = try_matches_upto(&db, &r, a.max_len, &ends, default_cap())?;
    for w in ms.iter() {
        writeln!(out, "{w}").map_err(io)?;
    }
    writeln!(out, "COUNT {}", ms.len()).map_err(io)?;
    Ok(EXIT_OK)
}

fn check(a: &CheckArgs, out: &mut dyn Write) -> Result<i32> {
    let params = a.lab.params(CHECK_TRIALS);
    let props = if a.property.is_empty() { Property::ALL.to_vec() } else { a.property.clone() };
    let sems = if a.semantics.is_empty() { SemanticsId::ALL.to_vec() } else { a.semantics.clone() };
    let report = lab::run_matrix_for(&params, &props, &sems, &Expectations::builtin(), default_cap());
    write!(out, "{report}").map_err(io)?;
    if a.verbose {
        for r in report.reports.iter().filter(|r| r.verdict.counterexample().is_some()) {
            write!(out, "{r}").map_err(io)?;
        }
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn inclusions(a: &LabArgs, out: &mut dyn Write) -> Result<i32> {
    let report = lab::check_inclusions(&a.params(GenParams::default().trials), default_cap());
    write!(out, "{report}").map_err(io)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn run_bench(a: &BenchArgs, out: &mut dyn Write) -> Result<i32> {
    writeln!(out, "# bench family {}, seed {}", a.family, a.seed).map_err(io)?;
    for &sem in &a.semantics {
        for &n in &a.sizes {
            let spec = SemanticsSpec::new(sem).with_cap(default_cap());
            let (_, t) = bench::time_eval(a.family, n, &spec, a.seed)?;
            writeln!(out, "BENCH {} {n} {}", sem.short(), t.as_millis()).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

/// Runs a parsed command, writing its report to `out` and errors to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let res = match &cli.command {
        Command::Eval(a) => eval(a, out),
        Command::Oracle(a) => oracle(a, out),
        Command::Check(a) => check(a, out),
        Command::Inclusions(a) => inclusions(a, out),
        Command::Bench(a) => run_bench(a, out),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let _ = write!(err, "{e}");
            if e.use_stderr() {
                EXIT_INPUT
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            }
        }
    }
}
