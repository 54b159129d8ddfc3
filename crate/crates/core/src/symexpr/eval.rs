use super::{Basis, Expr, FuncKind};
use crate::error::EvalError;
use crate::specfun::{self, hermite, legendre, BesselKind, QuadratureSpec};

/// Settings for evaluating quadrature-backed basis functions (`G`, `Gd`).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EvalContext {
    pub quadrature: QuadratureSpec,
}

fn finite(v: f64, function: &str, x: f64) -> Result<f64, EvalError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(EvalError::Overflow { function: function.into(), x })
    }
}

fn derivative_unsupported(b: &Basis, u: f64) -> Result<f64, EvalError> {
    Err(EvalError::Domain { function: format!("{} (derivative count {})", b.kind.name(), b.deriv), x: u })
}

pub(crate) fn eval_basis(b: &Basis, x: f64, ctx: &EvalContext) -> Result<f64, EvalError> {
    let u = b.scale * x;
    if b.deriv > 0 && !b.kind.counts_derivatives() {
        return derivative_unsupported(b, u);
    }
    let k = b.order;
    let d = b.deriv as usize;
    let q = &ctx.quadrature;
    let v = match b.kind {
        FuncKind::Sin => u.sin(),
        FuncKind::Cos => u.cos(),
        FuncKind::Exp => finite(u.exp(), "exp", u)?,
        FuncKind::Log => {
            if !(u > 0.0) {
                return Err(EvalError::Domain { function: "log".into(), x: u });
            }
            u.ln()
        }
        FuncKind::Pow => {
            let p = b.param;
            if p.fract() == 0.0 && p.abs() < 1e9 {
                if u == 0.0 && p < 0.0 {
                    return Err(EvalError::Domain { function: "pow".into(), x: u });
                }
                u.powi(p as i32)
            } else if u > 0.0 {
                u.powf(p)
            } else if u == 0.0 && p > 0.0 {
                0.0
            } else {
                return Err(EvalError::Domain { function: "pow".into(), x: u });
            }
        }
        FuncKind::Ai => specfun::airy_ai(u)?.0,
        FuncKind::AiP => specfun::airy_ai(u)?.1,
        FuncKind::Bi => specfun::airy_bi(u)?.0,
        FuncKind::BiP => specfun::airy_bi(u)?.1,
        FuncKind::J => specfun::bessel(BesselKind::J, k, u)?,
        FuncKind::Y => specfun::bessel(BesselKind::Y, k, u)?,
        FuncKind::I => specfun::bessel(BesselKind::I, k, u)?,
        FuncKind::K => specfun::bessel(BesselKind::K, k, u)?,
        FuncKind::P => legendre::legendre_p(k, u)?,
        FuncKind::Q => legendre::legendre_q(k, u)?,
        FuncKind::Pd => legendre::legendre_p_deg_deriv_dx(k, d, u)?,
        FuncKind::H => hermite::hermite_h(k, u)?,
        FuncKind::G => hermite::hermite_g_dx(k, d, u, q)?,
        FuncKind::Hd => hermite::hermite_h_deg_deriv_dx(k, d, u)?,
        FuncKind::Gd => hermite::hermite_g_deg_deriv_dx(k, d, u, q)?,
    };
    finite(v, b.kind.name(), u)
}

pub(crate) fn evaluate(e: &Expr, x: f64, ctx: &EvalContext) -> Result<f64, EvalError> {
    match e {
        Expr::Const(c) => Ok(*c),
        Expr::X => Ok(x),
        Expr::Func(b) => eval_basis(b, x, ctx),
        Expr::Sum(v) => v.iter().try_fold(0.0, |acc, t| Ok(acc + evaluate(t, x, ctx)?)),
        Expr::Product(v) => {
            let mut acc = 1.0;
            for f in v {
                acc *= evaluate(f, x, ctx)?;
            }
            Ok(acc)
        }
        Expr::Pow(base, n) => {
            let b = evaluate(base, x, ctx)?;
            if b == 0.0 && *n < 0 {
                return Err(EvalError::Domain { function: "division".into(), x });
            }
            finite(b.powi(*n), "pow", x)
        }
    }
}
