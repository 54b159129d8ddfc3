use crate::error::{Error, EvalError, Result};
use crate::specfun::{integrate, QuadratureSpec};
use crate::symexpr::{EvalContext, Expr, LinearOperator};

use super::linalg::{normalize_columns, singular_values};
use super::report::{BoundRecord, CheckRecord};
use super::Grid;

/// Largest scaled pointwise residual of `r = L[c] - f`:
/// max |r(x)| / max(1, |f(x)|, |c(x)|).
///
/// The scale keeps the metric absolute for O(1) solutions and relative for
/// rapidly growing ones.
pub fn scaled_residual(
    residual: &Expr,
    candidate: &Expr,
    forcing: Option<&Expr>,
    grid: &Grid,
    ctx: &EvalContext,
) -> std::result::Result<f64, EvalError> {
    let mut worst: f64 = 0.0;
    for x in grid.points() {
        let r = residual.eval_with(x, ctx)?;
        let c = candidate.eval_with(x, ctx)?;
        let f = match forcing {
            Some(f) => f.eval_with(x, ctx)?,
            None => 0.0,
        };
        let scale = 1f64.max(f.abs()).max(c.abs());
        worst = worst.max(r.abs() / scale);
    }
    Ok(worst)
}

fn record(name: &str, grid: &Grid, tol: f64, r: std::result::Result<f64, EvalError>) -> CheckRecord {
    match r {
        Ok(v) if v.is_finite() => CheckRecord::measured(name, Some(*grid), v, tol),
        Ok(v) => CheckRecord::errored(name, Some(*grid), tol, format!("non-finite residual {v}")),
        Err(e) => CheckRecord::errored(name, Some(*grid), tol, e.to_string()),
    }
}

/// Checks L[candidate] = forcing (or = 0) over the grid.
pub fn residual_check(
    name: &str,
    op: &LinearOperator,
    candidate: &Expr,
    forcing: Option<&Expr>,
    grid: &Grid,
    tol: f64,
    ctx: &EvalContext,
) -> CheckRecord {
    let applied = op.apply(candidate);
    let residual = match forcing {
        Some(f) => Expr::Sum(vec![applied, Expr::Const(-1.0) * f.clone()]).simplify(),
        None => applied,
    };
    record(name, grid, tol, scaled_residual(&residual, candidate, forcing, grid, ctx))
}

/// Checks factor^times [candidate] = 0 over the grid.
pub fn annihilation_check(
    name: &str,
    factor: &LinearOperator,
    candidate: &Expr,
    times: usize,
    grid: &Grid,
    tol: f64,
    ctx: &EvalContext,
) -> CheckRecord {
    let applied = factor.apply_repeated(candidate, times);
    record(name, grid, tol, scaled_residual(&applied, candidate, None, grid, ctx))
}

/// Max |factor^times [candidate]| over the grid must stay above `threshold`.
pub fn nontriviality_bound(
    name: &str,
    factor: &LinearOperator,
    candidate: &Expr,
    times: usize,
    grid: &Grid,
    threshold: f64,
    ctx: &EvalContext,
) -> BoundRecord {
    let applied = factor.apply_repeated(candidate, times);
    let mut worst: f64 = 0.0;
    for x in grid.points() {
        match applied.eval_with(x, ctx) {
            Ok(v) => worst = worst.max(v.abs()),
            Err(e) => return BoundRecord::errored(name, threshold, e.to_string()),
        }
    }
    BoundRecord::measured(name, worst, threshold)
}

/// Smallest singular value of the column-normalized sample matrix.
pub fn independence_check(members: &[Expr], grid: &Grid, ctx: &EvalContext) -> Result<f64> {
    if members.len() < 2 {
        return Err(Error::ParameterOutOfRange { value: members.len() as f64, reason: "need at least 2 members".into() });
    }
    if grid.count < 2 * members.len() {
        return Err(Error::ParameterOutOfRange {
            value: grid.count as f64,
            reason: format!("grid needs at least {} points", 2 * members.len()),
        });
    }
    let xs = grid.points();
    let cols = members
        .iter()
        .map(|m| xs.iter().map(|&x| m.eval_with(x, ctx)).collect::<std::result::Result<Vec<f64>, _>>())
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let sv = singular_values(&normalize_columns(&cols));
    Ok(*sv.last().expect("at least two columns"))
}

/// Second solution v2 = u1 ∫_{x0}^x exp(-∫_{x0}^t a1) / u1(t)² dt of
/// y'' + a1 y' + a0 y = 0, by nested quadrature, sampled on the grid.
pub fn reduction_of_order_oracle(
    op: &LinearOperator,
    u1: &Expr,
    x0: f64,
    grid: &Grid,
    q: &QuadratureSpec,
) -> Result<Vec<f64>> {
    if op.order() != 2 {
        return Err(Error::Unsupported(format!("reduction of order needs a second-order operator (got order {})", op.order())));
    }
    let ctx = EvalContext { quadrature: *q };
    let (c1, c2) = (&op.coeffs[1], &op.coeffs[2]);
    let a1 = |x: f64| -> std::result::Result<f64, EvalError> { Ok(c1.eval_with(x, &ctx)? / c2.eval_with(x, &ctx)?) };
    let u = |x: f64| u1.eval_with(x, &ctx);

    let xs = grid.points();
    let sign = u(x0)?.signum();
    let lo = xs[0].min(x0);
    let hi = xs[xs.len() - 1].max(x0);
    // dense scan for sign changes of u1 between the grid and x0
    let scan = 8 * xs.len();
    for i in 0..=scan {
        let x = lo + (hi - lo) * i as f64 / scan as f64;
        let v = u(x)?;
        if v == 0.0 || v.signum() != sign {
            return Err(Error::Eval(EvalError::Domain { function: "reduction of order: u1 vanishes".into(), x }));
        }
    }

    let mut out = vec![0.0; xs.len()];
    let mut idx: Vec<usize> = (0..xs.len()).collect();
    idx.sort_by(|&i, &j| xs[i].total_cmp(&xs[j]));
    let forward: Vec<usize> = idx.iter().copied().filter(|&i| xs[i] >= x0).collect();
    let backward: Vec<usize> = idx.iter().rev().copied().filter(|&i| xs[i] < x0).collect();
    for path in [forward, backward] {
        let (mut prev, mut inner, mut outer) = (x0, 0.0, 0.0);
        for i in path {
            let x = xs[i];
            let a = prev;
            let base = inner;
            let integrand = |t: f64| -> std::result::Result<f64, EvalError> {
                let w = base + integrate(a1, a, t, q)?;
                Ok((-w).exp() / u(t)?.powi(2))
            };
            outer += integrate(integrand, a, x, q)?;
            inner += integrate(a1, a, x, q)?;
            prev = x;
            out[i] = u(x)? * outer;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symexpr::{parse, FuncKind};
    use crate::verify::linalg::fit_residual;

    fn harmonic() -> LinearOperator {
        LinearOperator::new(vec![Expr::Const(1.0), Expr::Const(0.0), Expr::Const(1.0)])
    }

    #[test]
    fn harmonic_resonance_passes_and_wrong_candidate_fails() {
        let ctx = EvalContext::default();
        let g = Grid::linear(0.0, 10.0, 200);
        let sin = parse("sin(x)").unwrap();
        let r = residual_check("ok", &harmonic(), &parse("-x*cos(x)/2").unwrap(), Some(&sin), &g, 1e-9, &ctx);
        assert_eq!(r.status, super::super::Status::Pass);
        let r = residual_check("hom", &harmonic(), &sin, None, &g, 1e-12, &ctx);
        assert_eq!(r.status, super::super::Status::Pass);
        let r = residual_check("bad", &harmonic(), &parse("cos(2*x)").unwrap(), Some(&sin), &g, 1e-9, &ctx);
        assert_eq!(r.status, super::super::Status::Fail);
        // |-3cos 2x - sin x| / max(1, |sin x|, |cos 2x|) peaks near 4 / 1
        assert!(r.max_residual > 3.0 && r.max_residual < 4.0 + 1e-9, "{}", r.max_residual);
    }

    #[test]
    fn domain_exit_is_errored() {
        let ctx = EvalContext::default();
        let g = Grid::linear(-1.0, 1.0, 20);
        let r = residual_check("log", &harmonic(), &parse("log(x)").unwrap(), None, &g, 1.0, &ctx);
        assert_eq!(r.status, super::super::Status::Error);
        assert!(r.error.is_some());
    }

    #[test]
    fn independence_examples() {
        let ctx = EvalContext::default();
        let g = Grid::linear(0.0, 2.0 * std::f64::consts::PI, 64);
        let s = independence_check(&[parse("sin(x)").unwrap(), parse("cos(x)").unwrap()], &g, &ctx).unwrap();
        assert!(s > 0.5);
        let s = independence_check(&[parse("sin(x)").unwrap(), parse("2*sin(x)").unwrap()], &g, &ctx).unwrap();
        assert!(s < 1e-12);
        assert!(independence_check(&[parse("sin(x)").unwrap()], &g, &ctx).is_err());
        let few = Grid::linear(0.0, 1.0, 3);
        assert!(independence_check(&[parse("sin(x)").unwrap(), parse("cos(x)").unwrap()], &few, &ctx).is_err());
    }

    #[test]
    fn harmonic_oracle_spans_sin_cos() {
        let g = Grid::linear(0.2, 3.0, 60);
        let sin = parse("sin(x)").unwrap();
        let v = reduction_of_order_oracle(&harmonic(), &sin, 1.0, &g, &QuadratureSpec::default()).unwrap();
        let xs = g.points();
        // v2 = sin x (cot 1 - cot x) = sin x cot 1 - cos x
        for (x, v) in xs.iter().zip(&v) {
            let want = x.sin() / 1f64.tan() - x.cos();
            assert!((v - want).abs() < 1e-9, "x={x}: {v} vs {want}");
        }
        let basis = vec![xs.iter().map(|x| x.sin()).collect(), xs.iter().map(|x| x.cos()).collect()];
        assert!(fit_residual(&basis, &v) < 1e-8);
    }

    #[test]
    fn oracle_rejects_zero_crossing() {
        let g = Grid::linear(0.5, 5.0, 40);
        let op = LinearOperator::new(vec![Expr::Const(1.0), Expr::X.powi(-1), Expr::Const(1.0)]);
        let j0 = Expr::ordered(FuncKind::J, 0, 1.0);
        let r = reduction_of_order_oracle(&op, &j0, 1.0, &g, &QuadratureSpec::default());
        assert!(matches!(r, Err(Error::Eval(EvalError::Domain { .. }))));
    }
}
