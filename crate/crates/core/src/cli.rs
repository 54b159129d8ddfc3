//! Command-line front end. `run` parses arguments, writes to the given
//! streams and returns the process exit code.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::bvp::{self, BvpSolution};
use crate::error::Error;
use crate::resonance::{self, CatalogRow};
use crate::symexpr::{parse, Expr};
use crate::verify::{run_suite, Grid, Status, Subject, SuiteOptions, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_ERRORED: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "resokit", version, about = "Resonant and repeated-root solutions of linear ODEs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the operator families with their homogeneous and resonant solutions.
    Catalog {
        #[arg(long)]
        json: bool,
        /// Show a single row in detail.
        #[arg(long)]
        row: Option<String>,
    },
    /// Print the resonant solution (or k-th repeated root) and optionally sample it.
    Solve(SolveArgs),
    /// Print the homogeneous solution and repeated roots k = 1..=max of a member.
    Roots {
        #[arg(long)]
        row: String,
        #[arg(long)]
        member: String,
        #[arg(long, allow_negative_numbers = true)]
        mu: f64,
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// Solve one of the boundary value problems.
    Bvp(BvpArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// Evaluate an expression at a point or over a grid.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_negative_numbers = true, conflicts_with = "grid")]
        x: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub row: String,
    #[arg(long)]
    pub member: String,
    #[arg(long, allow_negative_numbers = true)]
    pub mu: f64,
    /// Repeated-root order; 1 is the resonant solution, 0 the member itself.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// start:stop:count (linear) or start:stop:countL (log).
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BvpProblem {
    Airy,
    Legendre,
}

#[derive(Debug, Args)]
pub struct BvpArgs {
    pub problem: BvpProblem,
    /// Legendre degree, 0..=8.
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub json: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Every row, both boundary value problems and the higher-order fixtures (default).
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub row: Vec<String>,
    #[arg(long)]
    pub bvp: Vec<String>,
    #[arg(long)]
    pub fixtures: bool,
    /// Replaces every residual tolerance.
    #[arg(long, env = "RESOKIT_TOL")]
    pub tol: Option<f64>,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print the JSON report instead of the summary.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Eval(_) => CliError::Domain(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

type CliResult = Result<i32, CliError>;

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn io_err(path: &str) -> impl Fn(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_string(), source }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match cmd {
        Command::Catalog { json, row } => cmd_catalog(json, row.as_deref(), out),
        Command::Solve(a) => cmd_solve(&a, out, err),
        Command::Roots { row, member, mu, max } => cmd_roots(&row, &member, mu, max, out),
        Command::Bvp(a) => cmd_bvp(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Eval { expr, x, grid, out: path } => cmd_eval(&expr, x, grid.as_deref(), path, out),
    }
    .and_then(|code| out.flush().map(|_| code).map_err(io_err("stdout")))
}

fn parse_grid(text: &str) -> Result<Grid, CliError> {
    text.parse::<Grid>().map_err(|e| CliError::Usage(e.to_string()))
}

/// `x,value` CSV with `.` decimals and `\n` line endings.
pub fn csv(xs: &[f64], values: &[f64]) -> String {
    let mut s = String::from("x,value\n");
    for (x, v) in xs.iter().zip(values) {
        s.push_str(&format!("{x},{v}\n"));
    }
    s
}

fn emit_csv(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let name = p.display().to_string();
            std::fs::write(p, text).map_err(io_err(&name))
        }
        None => out.write_all(text.as_bytes()).map_err(io_err("stdout")),
    }
}

fn sample(e: &Expr, xs: &[f64]) -> Result<Vec<f64>, CliError> {
    xs.iter().map(|&x| e.eval(x).map_err(|err| CliError::Domain(format!("at x = {x}: {err}")))).collect()
}

#[derive(Serialize)]
struct MemberView {
    label: &'static str,
    homogeneous: &'static str,
    resonant: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

#[derive(Serialize)]
struct RowView {
    id: &'static str,
    title: &'static str,
    operator: &'static str,
    lambda: &'static str,
    parameter_role: resonance::ParameterRole,
    members: Vec<MemberView>,
    max_repeated: usize,
    test_parameters: Vec<f64>,
}

fn row_view(r: &CatalogRow) -> RowView {
    RowView {
        id: r.id,
        title: r.title,
        operator: r.operator.m_text,
        lambda: r.operator.eigen_text,
        parameter_role: r.operator.role,
        members: r
            .homogeneous
            .members
            .iter()
            .map(|m| MemberView { label: m.label, homogeneous: m.display, resonant: m.resonant_display, note: m.note })
            .collect(),
        max_repeated: r.max_repeated,
        test_parameters: r.test_parameters.clone(),
    }
}

fn write_row(r: &CatalogRow, detail: bool, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{}: {}", r.id, r.title)?;
    writeln!(out, "  operator  M - lambda,  M = {},  lambda(mu) = {}", r.operator.m_text, r.operator.eigen_text)?;
    for m in &r.homogeneous.members {
        match m.resonant_display {
            Some(res) => writeln!(out, "  {:<4} u = {:<14} u_p = {}", m.label, m.display, res)?,
            None => writeln!(out, "  {:<4} u = {:<14} u_p = (none)", m.label, m.display)?,
        }
        if let (true, Some(note)) = (detail, m.note) {
            writeln!(out, "       note: {note}")?;
        }
    }
    if detail {
        writeln!(out, "  repeated roots with closed form: k <= {}", r.max_repeated)?;
        for &mu in &r.test_parameters {
            if let Ok(g) = r.probe_grid(mu) {
                writeln!(out, "  mu = {mu}: probe grid {g}")?;
            }
        }
    }
    Ok(())
}

fn cmd_catalog(json: bool, row: Option<&str>, out: &mut dyn Write) -> CliResult {
    let rows = match row {
        Some(id) => vec![resonance::row(id)?],
        None => resonance::catalog(),
    };
    let w = io_err("stdout");
    if json {
        let views: Vec<RowView> = rows.iter().map(row_view).collect();
        let text = if row.is_some() {
            serde_json::to_string_pretty(&views[0])
        } else {
            serde_json::to_string_pretty(&views)
        }
        .expect("catalog serializes");
        writeln!(out, "{text}").map_err(&w)?;
    } else {
        for (i, r) in rows.iter().enumerate() {
            if i > 0 {
                writeln!(out).map_err(&w)?;
            }
            write_row(r, row.is_some(), out).map_err(&w)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_solve(a: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let row = resonance::row(&a.row)?;
    row.member(&a.member)?;
    let grid = a.grid.as_deref().map(parse_grid).transpose()?;
    let closed = match a.k {
        0 => row.homogeneous_expr(&a.member, a.mu),
        k => resonance::repeated_root(&row, &a.member, a.mu, k),
    };
    let w = io_err("stdout");
    match (closed, grid) {
        (Ok(e), None) => {
            writeln!(out, "{e}").map_err(&w)?;
        }
        (Ok(e), Some(g)) => {
            let xs = g.points();
            let text = csv(&xs, &sample(&e, &xs)?);
            if a.out.is_some() {
                writeln!(out, "{e}").map_err(&w)?;
            } else {
                let _ = writeln!(err, "# {e}");
            }
            emit_csv(&text, a.out.as_ref(), out)?;
        }
        // no closed form: sample through finite-difference jets when possible
        (Err(Error::Unsupported(why)), Some(g)) if row.member(&a.member)?.value.is_some() && a.k <= crate::jets::MAX_ORDER => {
            let xs = g.points();
            let vals = resonance::generic_resonant(&row, &a.member, a.mu, &xs, a.k)?;
            let _ = writeln!(err, "# no closed form ({why}); sampled through finite-difference jets");
            emit_csv(&csv(&xs, &vals), a.out.as_ref(), out)?;
        }
        (Err(e), _) => return Err(e.into()),
    }
    Ok(EXIT_OK)
}

fn cmd_roots(row: &str, member: &str, mu: f64, max: usize, out: &mut dyn Write) -> CliResult {
    let r = resonance::row(row)?;
    r.member(member)?;
    r.check_parameter(mu)?;
    let w = io_err("stdout");
    writeln!(out, "k=0: {}", r.homogeneous_expr(member, mu)?).map_err(&w)?;
    for k in 1..=max.min(crate::jets::MAX_ORDER) {
        match resonance::repeated_root(&r, member, mu, k) {
            Ok(e) => writeln!(out, "k={k}: {e}").map_err(&w)?,
            Err(Error::Unsupported(_)) => {
                writeln!(out, "k={k}: no closed form (use `solve --k {k} --grid ...` for jet samples)").map_err(&w)?;
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(EXIT_OK)
}

fn write_bvp(s: &BvpSolution, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "problem: {}", s.problem)?;
    writeln!(out, "operator: {}", s.operator)?;
    writeln!(out, "forcing: {}", s.forcing)?;
    writeln!(out, "y = {}", s.display)?;
    if s.display != s.solution.to_string() {
        writeln!(out, "  = {}", s.solution)?;
    }
    for (name, v) in &s.constants {
        writeln!(out, "{name} = {v:.12}")?;
    }
    for b in &s.boundary {
        let mark = if b.satisfied { "ok" } else { "VIOLATED" };
        writeln!(out, "{}: achieved {:e}, residual {:e} (tol {:e}) {mark}", b.condition, b.achieved, (b.achieved - b.target).abs(), b.tolerance)?;
    }
    for n in &s.notes {
        writeln!(out, "note: {n}")?;
    }
    Ok(())
}

fn cmd_bvp(a: &BvpArgs, out: &mut dyn Write) -> CliResult {
    let s = match a.problem {
        BvpProblem::Airy => bvp::solve_airy_bvp()?,
        BvpProblem::Legendre => {
            let n = a.n.ok_or_else(|| CliError::Usage("bvp legendre requires --n <0..=8>".into()))?;
            bvp::solve_legendre_bvp(n)?
        }
    };
    let grid = a.grid.as_deref().map(parse_grid).transpose()?;
    let w = io_err("stdout");
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&s).expect("solution serializes")).map_err(&w)?;
    } else {
        write_bvp(&s, out).map_err(&w)?;
    }
    if let Some(g) = grid {
        let xs = g.points();
        emit_csv(&csv(&xs, &sample(&s.solution, &xs)?), a.out.as_ref(), out)?;
    }
    Ok(if s.all_satisfied() { EXIT_OK } else { EXIT_FAILED })
}

fn subjects(a: &VerifyArgs) -> Result<Vec<Subject>, CliError> {
    let mut out = Vec::new();
    for r in &a.row {
        out.push(r.parse::<Subject>().map_err(|e| CliError::Usage(e.to_string())).and_then(|s| match s {
            Subject::Row(_) => Ok(s),
            _ => Err(CliError::Usage(format!("'{r}' is not a catalog row"))),
        })?);
    }
    for b in &a.bvp {
        out.push(format!("bvp:{b}").parse::<Subject>().map_err(|e| CliError::Usage(e.to_string()))?);
    }
    if a.fixtures {
        out.push(Subject::Fixtures);
    }
    if a.all || out.is_empty() {
        out = Subject::all();
    }
    Ok(out)
}

/// Exit code for a finished suite: errored records dominate failures.
pub fn suite_exit_code(report: &SuiteReport) -> i32 {
    if report.summary.errored > 0 {
        EXIT_ERRORED
    } else if report.summary.failed > 0 {
        EXIT_FAILED
    } else {
        EXIT_OK
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    if let Some(t) = a.tol {
        if !(t > 0.0) {
            return Err(CliError::Usage(format!("tolerance must be positive (got {t})")));
        }
    }
    let subjects = subjects(a)?;
    let report = run_suite(&subjects, &SuiteOptions { tolerance: a.tol });
    let json = report.to_json();
    if let Some(p) = &a.out {
        let name = p.display().to_string();
        std::fs::write(p, &json).map_err(io_err(&name))?;
    }
    let w = io_err("stdout");
    if a.json {
        writeln!(out, "{json}").map_err(&w)?;
    } else {
        for r in &report.reports {
            let passed = r.statuses().filter(|s| *s == Status::Pass).count();
            writeln!(out, "{:<14} {passed}/{} pass", r.subject, r.record_count()).map_err(&w)?;
            for c in r.checks.iter().filter(|c| c.status != Status::Pass) {
                writeln!(out, "  {:?}: {} residual {:e} > {:e} {}", c.status, c.name, c.max_residual, c.tolerance, c.error.as_deref().unwrap_or("")).map_err(&w)?;
            }
            for o in r.oracles.iter().filter(|o| o.status != Status::Pass) {
                writeln!(out, "  {:?}: {} rel diff {:e} > {:e} {}", o.status, o.name, o.max_rel_diff, o.tolerance, o.error.as_deref().unwrap_or("")).map_err(&w)?;
            }
            for b in r.bounds.iter().filter(|b| b.status != Status::Pass) {
                writeln!(out, "  {:?}: {} value {:e} < {:e} {}", b.status, b.name, b.value, b.threshold, b.error.as_deref().unwrap_or("")).map_err(&w)?;
            }
        }
        let s = report.summary;
        writeln!(out, "{} records: {} passed, {} failed, {} errored", s.records, s.passed, s.failed, s.errored).map_err(&w)?;
    }
    Ok(suite_exit_code(&report))
}

fn cmd_eval(text: &str, x: Option<f64>, grid: Option<&str>, path: Option<PathBuf>, out: &mut dyn Write) -> CliResult {
    let e = parse(text).map_err(|e| CliError::Usage(e.to_string()))?;
    let w = io_err("stdout");
    match (x, grid) {
        (Some(x), _) => {
            let v = e.eval(x).map_err(|err| CliError::Domain(format!("at x = {x}: {err}")))?;
            writeln!(out, "{v}").map_err(&w)?;
        }
        (None, Some(g)) => {
            let g = parse_grid(g)?;
            let xs = g.points();
            emit_csv(&csv(&xs, &sample(&e, &xs)?), path.as_ref(), out)?;
        }
        (None, None) => {
            writeln!(out, "{e}").map_err(&w)?;
        }
    }
    Ok(EXIT_OK)
}
