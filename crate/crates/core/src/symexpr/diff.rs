//! Exact differentiation. Each basis node `f(s*x)` has a rule that stays in
//! the basis; Bessel-type and Hermite rules lower the order so repeated
//! differentiation never leaves the orders already present.

use super::simplify::normalize;
use super::{Basis, Expr, FuncKind};

fn c(v: f64) -> Expr {
    Expr::Const(v)
}

fn with_order(b: &Basis, order: u32) -> Expr {
    Expr::Func(Basis { order, ..*b })
}

fn with_kind(b: &Basis, kind: FuncKind) -> Expr {
    Expr::Func(Basis { kind, ..*b })
}

fn inv_x() -> Expr {
    Expr::X.powi(-1)
}

/// d/dx of the basis node f(s*x).
pub(crate) fn basis_derivative(b: &Basis) -> Expr {
    let s = b.scale;
    let k = b.order;
    match b.kind {
        FuncKind::Sin => s * with_kind(b, FuncKind::Cos),
        FuncKind::Cos => -s * with_kind(b, FuncKind::Sin),
        FuncKind::Exp => s * Expr::Func(*b),
        FuncKind::Log => inv_x(),
        FuncKind::Pow => (b.param * s) * Expr::Func(Basis { param: b.param - 1.0, ..*b }),
        FuncKind::Ai => s * with_kind(b, FuncKind::AiP),
        FuncKind::Bi => s * with_kind(b, FuncKind::BiP),
        FuncKind::AiP => (s * s) * Expr::X * with_kind(b, FuncKind::Ai),
        FuncKind::BiP => (s * s) * Expr::X * with_kind(b, FuncKind::Bi),
        // Z_k' = Z_{k-1} - (k/u) Z_k for J, Y; I_k' = I_{k-1} - (k/u) I_k;
        // K_k' = -K_{k-1} - (k/u) K_k. At k = 0: J0' = -J1, Y0' = -Y1, I0' = I1, K0' = -K1.
        FuncKind::J | FuncKind::Y | FuncKind::I | FuncKind::K => {
            let lower_sign = if b.kind == FuncKind::K { -1.0 } else { 1.0 };
            if k == 0 {
                let sign = if b.kind == FuncKind::I { 1.0 } else { -1.0 };
                (sign * s) * with_order(b, 1)
            } else {
                Expr::Sum(vec![
                    (lower_sign * s) * with_order(b, k - 1),
                    c(-(k as f64)) * inv_x() * Expr::Func(*b),
                ])
            }
        }
        // P_n' = sum over m = n-1, n-3, ... of (2m+1) P_m
        FuncKind::P => {
            let terms: Vec<Expr> = (0..k)
                .rev()
                .step_by(2)
                .map(|m| ((2 * m + 1) as f64 * s) * with_order(b, m))
                .collect();
            Expr::Sum(terms)
        }
        // (1-u²) Q_n' = n (Q_{n-1} - u Q_n), Q_0' = 1/(1-u²)
        FuncKind::Q => {
            let denom = (c(1.0) - (s * s) * Expr::X.powi(2)).powi(-1);
            if k == 0 {
                s * denom
            } else {
                let inner = Expr::Sum(vec![with_order(b, k - 1), (-s) * Expr::X * Expr::Func(*b)]);
                (s * k as f64) * inner * denom
            }
        }
        FuncKind::H => {
            if k == 0 {
                c(0.0)
            } else {
                (2.0 * k as f64 * s) * with_order(b, k - 1)
            }
        }
        FuncKind::Pd | FuncKind::G | FuncKind::Hd | FuncKind::Gd => s * Expr::Func(Basis { deriv: b.deriv + 1, ..*b }),
    }
}

fn raw(e: &Expr) -> Expr {
    match e {
        Expr::Const(_) => c(0.0),
        Expr::X => c(1.0),
        Expr::Func(b) => basis_derivative(b),
        Expr::Sum(v) => Expr::Sum(v.iter().map(raw).collect()),
        Expr::Product(v) => {
            let mut terms = Vec::with_capacity(v.len());
            for i in 0..v.len() {
                if matches!(v[i], Expr::Const(_)) {
                    continue;
                }
                let mut factors = v.clone();
                factors[i] = raw(&v[i]);
                terms.push(Expr::Product(factors));
            }
            Expr::Sum(terms)
        }
        Expr::Pow(base, n) => {
            if *n == 0 {
                return c(0.0);
            }
            Expr::Product(vec![c(*n as f64), (**base).clone().powi(n - 1), raw(base)])
        }
    }
}

pub(crate) fn differentiate(e: &Expr) -> Expr {
    normalize(&raw(e))
}
