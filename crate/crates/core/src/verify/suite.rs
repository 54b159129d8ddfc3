use std::fmt;
use std::str::FromStr;

use crate::bvp::{self, BvpSolution, MAX_LEGENDRE_DEGREE};
use crate::error::{Error, EvalError};
use crate::jets;
use crate::resonance::{
    self, bessel_sixth_order, modified_bessel_fourth_order, repeated_root, resonant_solution, CatalogRow, Fixture,
    ROW_IDS,
};
use crate::specfun::{self, hermite, QuadratureSpec};
use crate::symexpr::{EvalContext, Expr, FuncKind, LinearOperator};

use super::checks::{annihilation_check, independence_check, nontriviality_bound, reduction_of_order_oracle, residual_check};
use super::linalg::fit_residual;
use super::report::{BoundRecord, CheckRecord, OracleRecord, SuiteReport, VerificationReport};
use super::Grid;

/// Pinned decimal value of Ai(0).
pub const AI_ZERO: f64 = 0.3550280538878172;

pub const ROW_RESIDUAL_TOL: f64 = 1e-8;
pub const HERMITE_G_RESIDUAL_TOL: f64 = 1e-5;
pub const ANNIHILATION_TOL: f64 = 1e-7;
pub const NONTRIVIAL_THRESHOLD: f64 = 1e-2;
pub const INDEPENDENCE_THRESHOLD: f64 = 1e-6;
pub const JET_REL_TOL: f64 = 1e-6;
pub const HERMITE_G_JET_REL_TOL: f64 = 1e-4;
pub const SPAN_FIT_TOL: f64 = 1e-4;

/// A unit of the verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Row(String),
    Bvp(String),
    /// The fourth- and sixth-order problems built from repeated factors.
    Fixtures,
}

impl Subject {
    pub fn all() -> Vec<Subject> {
        let mut out: Vec<Subject> = ROW_IDS.iter().map(|r| Subject::Row(r.to_string())).collect();
        out.push(Subject::Bvp("airy".into()));
        out.push(Subject::Bvp("legendre".into()));
        out.push(Subject::Fixtures);
        out
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Row(r) => write!(f, "{r}"),
            Subject::Bvp(b) => write!(f, "bvp:{b}"),
            Subject::Fixtures => write!(f, "fixtures"),
        }
    }
}

impl FromStr for Subject {
    type Err = Error;

    fn from_str(s: &str) -> Result<Subject, Error> {
        if s == "fixtures" {
            return Ok(Subject::Fixtures);
        }
        if let Some(b) = s.strip_prefix("bvp:") {
            return match b {
                "airy" | "legendre" => Ok(Subject::Bvp(b.to_string())),
                _ => Err(Error::Unsupported(format!("unknown boundary value problem '{b}'"))),
            };
        }
        if ROW_IDS.contains(&s) {
            Ok(Subject::Row(s.to_string()))
        } else {
            Err(Error::UnknownRow(s.to_string()))
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SuiteOptions {
    /// Replaces the tolerance of every residual check.
    pub tolerance: Option<f64>,
}

/// Runs every registered check for the subjects. Subjects run on separate
/// threads; reports come back in the order given.
pub fn run_suite(subjects: &[Subject], opts: &SuiteOptions) -> SuiteReport {
    let reports = std::thread::scope(|s| {
        let handles: Vec<_> = subjects.iter().map(|sub| s.spawn(move || run_subject(sub))).collect();
        handles.into_iter().map(|h| h.join().expect("verification thread panicked")).collect::<Vec<_>>()
    });
    let reports = reports
        .into_iter()
        .map(|mut r| {
            if let Some(tol) = opts.tolerance {
                for c in &mut r.checks {
                    *c = match c.error.take() {
                        Some(e) => CheckRecord::errored(c.name.clone(), c.grid, tol, e),
                        None => CheckRecord::measured(c.name.clone(), c.grid, c.max_residual, tol),
                    };
                }
            }
            r
        })
        .collect();
    SuiteReport::from_reports(reports)
}

pub fn run_subject(subject: &Subject) -> VerificationReport {
    let mut report = VerificationReport::new(subject.to_string());
    match subject {
        Subject::Row(id) => match resonance::row(id) {
            Ok(row) => row_checks(&row, &mut report),
            Err(e) => report.checks.push(CheckRecord::errored(format!("{id}/lookup"), None, 0.0, e.to_string())),
        },
        Subject::Bvp(b) if b == "airy" => {
            airy_bvp_checks(&mut report);
        }
        Subject::Bvp(_) => legendre_bvp_checks(&mut report),
        Subject::Fixtures => {
            fixture_checks(&modified_bessel_fourth_order(1.3), Grid::linear(0.3, 6.0, 120), &mut report);
            fixture_checks(&bessel_sixth_order(), Grid::linear(0.5, 12.0, 80), &mut report);
        }
    }
    report
}

/// max |a - b| / max |b|: relative to the sup norm, so isolated zeros of the
/// reference do not dominate.
pub fn sup_relative_diff(a: &[f64], b: &[f64]) -> f64 {
    let scale = b.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let diff = a.iter().zip(b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

fn sample(e: &Expr, xs: &[f64], ctx: &EvalContext) -> Result<Vec<f64>, EvalError> {
    xs.iter().map(|&x| e.eval_with(x, ctx)).collect()
}

fn tight_context() -> EvalContext {
    EvalContext { quadrature: QuadratureSpec { abs_tol: 1e-12, rel_tol: 1e-12, ..QuadratureSpec::default() } }
}

fn oracle(name: String, tol: f64, r: Result<f64, Error>) -> OracleRecord {
    match r {
        Ok(v) if v.is_finite() => OracleRecord::measured(name, v, tol),
        Ok(v) => OracleRecord::errored(name, tol, format!("non-finite difference {v}")),
        Err(e) => OracleRecord::errored(name, tol, e.to_string()),
    }
}

fn row_checks(row: &CatalogRow, report: &mut VerificationReport) {
    let ctx = if row.id == "hermite" { tight_context() } else { EvalContext::default() };
    for &mu in &row.test_parameters {
        let tag = |rest: &str| format!("{}/mu={mu}/{rest}", row.id);
        let (op, grid) = match row.probe_grid(mu) {
            Ok(g) => (row.operator.operator(mu), g),
            Err(e) => {
                report.checks.push(CheckRecord::errored(tag("grid"), None, ROW_RESIDUAL_TOL, e.to_string()));
                continue;
            }
        };
        let xs = grid.points();
        let mut span = Vec::new();
        for m in &row.homogeneous.members {
            let is_g = m.label == "G";
            let u = match row.homogeneous_expr(m.label, mu) {
                Ok(u) => u,
                Err(e) => {
                    report.checks.push(CheckRecord::errored(tag(m.label), None, ROW_RESIDUAL_TOL, e.to_string()));
                    continue;
                }
            };
            report.checks.push(residual_check(&tag(&format!("{}/homogeneous", m.label)), &op, &u, None, &grid, ROW_RESIDUAL_TOL, &ctx));
            span.push(u.clone());
            let Ok(up) = resonant_solution(row, m.label, mu) else { continue };
            let tol = if is_g { HERMITE_G_RESIDUAL_TOL } else { ROW_RESIDUAL_TOL };
            report.checks.push(residual_check(&tag(&format!("{}/resonant", m.label)), &op, &up, Some(&u), &grid, tol, &ctx));
            span.push(up.clone());
            if m.value.is_some() {
                let tol = if is_g { HERMITE_G_JET_REL_TOL } else { JET_REL_TOL };
                let diff = resonance::generic_resonant(row, m.label, mu, &xs, 1).and_then(|jet| {
                    let closed = sample(&up, &xs, &ctx)?;
                    Ok(sup_relative_diff(&jet, &closed))
                });
                report.oracles.push(oracle(tag(&format!("{}/jets-vs-closed-form", m.label)), tol, diff));
            }
        }
        let name = tag("independence");
        report.bounds.push(match independence_check(&span, &grid, &ctx) {
            Ok(s) => BoundRecord::measured(name, s, INDEPENDENCE_THRESHOLD),
            Err(e) => BoundRecord::errored(name, INDEPENDENCE_THRESHOLD, e.to_string()),
        });
        repeated_root_checks(row, mu, &op, &grid, &ctx, report);
    }
    match row.id {
        "harmonic" => harmonic_oracle(report),
        "bessel0" => bessel_oracle(report),
        "hermite" => hermite_oracles(report),
        "airy" => airy_identities(report),
        "legendre" => legendre_identities(report),
        _ => {}
    }
}

/// (M - λ)^{k+1} annihilates the k-th root; (M - λ)^k does not.
fn repeated_root_checks(row: &CatalogRow, mu: f64, op: &LinearOperator, grid: &Grid, ctx: &EvalContext, report: &mut VerificationReport) {
    if row.max_repeated < 2 {
        return;
    }
    let ks = if row.id == "bessel0" { 0..=3 } else { 2..=3 };
    for m in &row.homogeneous.members {
        for k in ks.clone() {
            let name = format!("{}/mu={mu}/{}/root-k={k}", row.id, m.label);
            let root = if k == 0 { row.homogeneous_expr(m.label, mu) } else { repeated_root(row, m.label, mu, k) };
            let root = match root {
                Ok(r) => r,
                Err(e) => {
                    report.checks.push(CheckRecord::errored(format!("{name}/annihilated"), Some(*grid), ANNIHILATION_TOL, e.to_string()));
                    continue;
                }
            };
            report.checks.push(annihilation_check(&format!("{name}/annihilated"), op, &root, k + 1, grid, ANNIHILATION_TOL, ctx));
            if k > 0 {
                report.bounds.push(nontriviality_bound(&format!("{name}/nontrivial"), op, &root, k, grid, NONTRIVIAL_THRESHOLD, ctx));
            }
        }
    }
}

/// Fit the oracle output on span{u1, u2} and record the relative residual.
fn span_oracle(name: String, tol: f64, op: &LinearOperator, u1: &Expr, u2: &Expr, x0: f64, grid: &Grid, ctx: &EvalContext) -> (OracleRecord, Option<Vec<f64>>) {
    let xs = grid.points();
    let r = reduction_of_order_oracle(op, u1, x0, grid, &ctx.quadrature).and_then(|v| {
        let basis = vec![sample(u1, &xs, ctx)?, sample(u2, &xs, ctx)?];
        Ok((fit_residual(&basis, &v), v))
    });
    match r {
        Ok((fit, v)) => (oracle(name, tol, Ok(fit)), Some(v)),
        Err(e) => (oracle(name, tol, Err(e)), None),
    }
}

fn harmonic_oracle(report: &mut VerificationReport) {
    let op = LinearOperator::new(vec![Expr::Const(1.0), Expr::Const(0.0), Expr::Const(1.0)]);
    let (sin, cos) = (Expr::func(FuncKind::Sin, 1.0), Expr::func(FuncKind::Cos, 1.0));
    let grid = Grid::linear(0.2, 3.0, 60);
    let (rec, _) = span_oracle("harmonic/reduction-of-order/span{sin,cos}".into(), 1e-8, &op, &sin, &cos, 1.0, &grid, &EvalContext::default());
    report.oracles.push(rec);
}

fn bessel_oracle(report: &mut VerificationReport) {
    let op = LinearOperator::new(vec![Expr::Const(1.0), Expr::X.powi(-1), Expr::Const(1.0)]);
    let j0 = Expr::ordered(FuncKind::J, 0, 1.0);
    let y0 = Expr::ordered(FuncKind::Y, 0, 1.0);
    // J0 first vanishes at 2.4048
    let grid = Grid::linear(0.5, 2.3, 60);
    let (rec, _) = span_oracle("bessel0/reduction-of-order/span{J0,Y0}".into(), 1e-5, &op, &j0, &y0, 1.0, &grid, &EvalContext::default());
    report.oracles.push(rec);
}

fn hermite_oracles(report: &mut VerificationReport) {
    let ctx = tight_context();
    let q = ctx.quadrature;
    let op = LinearOperator::new(vec![Expr::Const(0.0), Expr::Const(-2.0) * Expr::X, Expr::Const(1.0)]);
    for n in 0..=3u32 {
        let (z, x0) = match hermite::g_domain(n, &q) {
            Ok(d) => d,
            Err(e) => {
                report.oracles.push(OracleRecord::errored(format!("hermite/n={n}/reduction-of-order"), SPAN_FIT_TOL, e.to_string()));
                continue;
            }
        };
        let grid = Grid::linear(z + 0.1, z + 4.0, 60);
        let h = Expr::ordered(FuncKind::H, n, 1.0);
        let g = Expr::ordered(FuncKind::G, n, 1.0);
        let (rec, v) = span_oracle(format!("hermite/n={n}/reduction-of-order/span{{H,G}}"), SPAN_FIT_TOL, &op, &h, &g, x0, &grid, &ctx);
        report.oracles.push(rec);
        let Some(v) = v else { continue };
        // exp(-∫a1) = exp(t² - x0²), so v2 = exp(-x0²) G_n
        let name = format!("hermite/n={n}/reduction-of-order/G");
        let scaled: Vec<f64> = v.iter().map(|v| v * (x0 * x0).exp()).collect();
        let diff = sample(&g, &grid.points(), &ctx).map(|gv| sup_relative_diff(&scaled, &gv)).map_err(Error::from);
        report.oracles.push(oracle(name, 1e-6, diff));
    }
}

fn airy_identities(report: &mut VerificationReport) {
    let ai0 = specfun::airy_ai(0.0).map(|(ai, _)| ai).map_err(Error::from);
    let via_gamma = specfun::gamma(1.0 / 3.0).map(|g| g / (2.0 * std::f64::consts::PI * 3f64.powf(1.0 / 6.0)));
    let d = ai0.clone().and_then(|a| Ok(((a - via_gamma?) / a).abs()));
    report.oracles.push(oracle("airy/Ai(0)-vs-gamma".into(), 1e-12, d));
    let d = ai0.map(|a| ((a - AI_ZERO) / AI_ZERO).abs());
    report.oracles.push(oracle("airy/Ai(0)-vs-pinned".into(), 1e-12, d));
}

fn legendre_identities(report: &mut VerificationReport) {
    for n in 0..=MAX_LEGENDRE_DEGREE {
        let name = format!("legendre/n={n}/Pd(1)=0");
        report.checks.push(match specfun::jolliffe_deg_deriv(n, 1.0) {
            Ok(v) => CheckRecord::measured(name, None, v.abs(), 1e-10),
            Err(e) => CheckRecord::errored(name, None, 1e-10, e.to_string()),
        });
    }
    let probes = [-0.7, -0.2, 0.4, 0.9];
    let family = |x: f64, nu: f64| specfun::legendre_p_real_degree(nu, x);
    for n in 0..=6u32 {
        let nu = n as f64;
        let diff = probes
            .iter()
            .map(|&x| {
                let fd = jets::mu_derivative(&family, x, nu, 1, jets::default_step(nu))?;
                let closed = specfun::jolliffe_deg_deriv(n, x)?;
                Ok((fd, closed))
            })
            .collect::<Result<Vec<_>, Error>>()
            .map(|pairs| {
                let (fd, cl): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
                sup_relative_diff(&fd, &cl)
            });
        report.oracles.push(oracle(format!("legendre/n={n}/Pd-vs-degree-fd"), 1e-6, diff));
    }
}

fn bvp_residual(report: &mut VerificationReport, s: &BvpSolution, grid: Grid, tol: f64) {
    let name = format!("{}/residual", s.problem);
    report.checks.push(residual_check(&name, &s.operator, &s.solution, Some(&s.forcing), &grid, tol, &EvalContext::default()));
    for b in &s.boundary {
        let name = format!("{}/boundary {}", s.problem, b.condition);
        report.checks.push(CheckRecord::measured(name, None, (b.achieved - b.target).abs(), b.tolerance));
    }
}

fn airy_bvp_checks(report: &mut VerificationReport) {
    match bvp::solve_airy_bvp() {
        Ok(s) => bvp_residual(report, &s, Grid::linear(0.1, 5.0, 200), 1e-9),
        Err(e) => report.checks.push(CheckRecord::errored("airy/solve", None, 1e-9, e.to_string())),
    }
}

fn legendre_bvp_checks(report: &mut VerificationReport) {
    for n in 0..=MAX_LEGENDRE_DEGREE {
        match bvp::solve_legendre_bvp(n) {
            Ok(s) => bvp_residual(report, &s, Grid::linear(-0.9, 0.999, 200), 1e-9),
            Err(e) => report.checks.push(CheckRecord::errored(format!("legendre(n={n})/solve"), None, 1e-9, e.to_string())),
        }
    }
}

fn fixture_checks(fx: &Fixture, independence_grid: Grid, report: &mut VerificationReport) {
    let ctx = EvalContext::default();
    for m in &fx.members {
        let name = format!("{}/{}", fx.name, m.label);
        report.checks.push(annihilation_check(&format!("{name}/annihilated"), &fx.factor, &m.expr, fx.power, &fx.grid, ANNIHILATION_TOL, &ctx));
        if m.root > 0 {
            report.checks.push(annihilation_check(
                &format!("{name}/root-k={}/annihilated", m.root),
                &fx.factor,
                &m.expr,
                m.root + 1,
                &fx.grid,
                ANNIHILATION_TOL,
                &ctx,
            ));
            report.bounds.push(nontriviality_bound(&format!("{name}/root-k={}/nontrivial", m.root), &fx.factor, &m.expr, m.root, &fx.grid, NONTRIVIAL_THRESHOLD, &ctx));
        }
    }
    let exprs: Vec<Expr> = fx.members.iter().map(|m| m.expr.clone()).collect();
    let name = format!("{}/independence", fx.name);
    report.bounds.push(match independence_check(&exprs, &independence_grid, &ctx) {
        Ok(s) => BoundRecord::measured(name, s, INDEPENDENCE_THRESHOLD),
        Err(e) => BoundRecord::errored(name, INDEPENDENCE_THRESHOLD, e.to_string()),
    });
}
