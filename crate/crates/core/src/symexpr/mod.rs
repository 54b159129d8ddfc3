//! A small expression algebra over a fixed basis of special functions:
//! parse, print, simplify, differentiate exactly, and evaluate.
//!
//! Quotients are represented as negative integer powers, so `J(1,x)/x` is the
//! product of `J(1,x)` and `x^-1`. Every basis function carries an integer
//! order (or a real exponent for `pow`), an argument scale `s` so the node
//! stands for `f(s*x)`, and, for the functions without an in-basis derivative
//! identity (`Pd`, `G`, `Hd`, `Gd`), a derivative count.

mod diff;
mod eval;
mod operator;
mod parse;
mod print;
mod simplify;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

pub use eval::EvalContext;
pub use operator::LinearOperator;
pub use parse::parse;

/// Largest integer order accepted for the order-parameterized functions.
pub const MAX_ORDER: u32 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FuncKind {
    Sin,
    Cos,
    Exp,
    Log,
    Pow,
    Ai,
    Bi,
    AiP,
    BiP,
    J,
    Y,
    I,
    K,
    P,
    Q,
    Pd,
    H,
    G,
    Hd,
    Gd,
}

impl FuncKind {
    pub const ALL: [FuncKind; 20] = [
        FuncKind::Sin,
        FuncKind::Cos,
        FuncKind::Exp,
        FuncKind::Log,
        FuncKind::Pow,
        FuncKind::Ai,
        FuncKind::Bi,
        FuncKind::AiP,
        FuncKind::BiP,
        FuncKind::J,
        FuncKind::Y,
        FuncKind::I,
        FuncKind::K,
        FuncKind::P,
        FuncKind::Q,
        FuncKind::Pd,
        FuncKind::H,
        FuncKind::G,
        FuncKind::Hd,
        FuncKind::Gd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FuncKind::Sin => "sin",
            FuncKind::Cos => "cos",
            FuncKind::Exp => "exp",
            FuncKind::Log => "log",
            FuncKind::Pow => "pow",
            FuncKind::Ai => "Ai",
            FuncKind::Bi => "Bi",
            FuncKind::AiP => "AiP",
            FuncKind::BiP => "BiP",
            FuncKind::J => "J",
            FuncKind::Y => "Y",
            FuncKind::I => "I",
            FuncKind::K => "K",
            FuncKind::P => "P",
            FuncKind::Q => "Q",
            FuncKind::Pd => "Pd",
            FuncKind::H => "H",
            FuncKind::G => "G",
            FuncKind::Hd => "Hd",
            FuncKind::Gd => "Gd",
        }
    }

    pub fn from_name(name: &str) -> Option<FuncKind> {
        FuncKind::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Takes an integer order as first argument.
    pub fn has_order(self) -> bool {
        matches!(
            self,
            FuncKind::J
                | FuncKind::Y
                | FuncKind::I
                | FuncKind::K
                | FuncKind::P
                | FuncKind::Q
                | FuncKind::Pd
                | FuncKind::H
                | FuncKind::G
                | FuncKind::Hd
                | FuncKind::Gd
        )
    }

    /// Differentiated by bumping a derivative count rather than by an identity.
    pub fn counts_derivatives(self) -> bool {
        matches!(self, FuncKind::Pd | FuncKind::G | FuncKind::Hd | FuncKind::Gd)
    }
}

/// A basis function node `f(scale * x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Basis {
    pub kind: FuncKind,
    /// Integer order for J, Y, I, K, P, Q, Pd, H, G, Hd, Gd; zero otherwise.
    pub order: u32,
    /// Real exponent for `pow`; zero otherwise.
    pub param: f64,
    pub scale: f64,
    /// Number of x-derivatives applied (only for `counts_derivatives` kinds).
    pub deriv: u32,
}

impl Basis {
    pub fn new(kind: FuncKind, scale: f64) -> Self {
        Basis { kind, order: 0, param: 0.0, scale, deriv: 0 }
    }

    pub fn with_order(kind: FuncKind, order: u32, scale: f64) -> Self {
        Basis { kind, order, param: 0.0, scale, deriv: 0 }
    }

    pub fn power(exponent: f64, scale: f64) -> Self {
        Basis { kind: FuncKind::Pow, order: 0, param: exponent, scale, deriv: 0 }
    }

    fn cmp_key(&self, other: &Basis) -> Ordering {
        self.kind
            .cmp(&other.kind)
            .then(self.order.cmp(&other.order))
            .then(self.param.total_cmp(&other.param))
            .then(self.scale.total_cmp(&other.scale))
            .then(self.deriv.cmp(&other.deriv))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    X,
    Func(Basis),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    /// Integer power; negative exponents encode quotients.
    Pow(Box<Expr>, i32),
}

impl Expr {
    pub fn constant(v: f64) -> Expr {
        Expr::Const(v)
    }

    pub fn x() -> Expr {
        Expr::X
    }

    pub fn func(kind: FuncKind, scale: f64) -> Expr {
        Expr::Func(Basis::new(kind, scale))
    }

    pub fn ordered(kind: FuncKind, order: u32, scale: f64) -> Expr {
        Expr::Func(Basis::with_order(kind, order, scale))
    }

    /// `(scale*x)^exponent` with a real exponent.
    pub fn real_power(exponent: f64, scale: f64) -> Expr {
        Expr::Func(Basis::power(exponent, scale))
    }

    pub fn powi(self, n: i32) -> Expr {
        Expr::Pow(Box::new(self), n)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Expr::Const(c) if *c == 0.0)
    }

    /// Canonical form: expanded, like terms collected, deterministically ordered.
    pub fn simplify(&self) -> Expr {
        simplify::normalize(self)
    }

    /// Exact x-derivative, simplified.
    pub fn differentiate(&self) -> Expr {
        diff::differentiate(self)
    }

    /// n-th x-derivative.
    pub fn nth_derivative(&self, n: usize) -> Expr {
        let mut e = self.simplify();
        for _ in 0..n {
            e = e.differentiate();
        }
        e
    }

    pub fn eval(&self, x: f64) -> Result<f64, crate::EvalError> {
        eval::evaluate(self, x, &EvalContext::default())
    }

    pub fn eval_with(&self, x: f64, ctx: &EvalContext) -> Result<f64, crate::EvalError> {
        eval::evaluate(self, x, ctx)
    }

    /// Tree depth (leaves have depth 1).
    pub fn depth(&self) -> usize {
        match self {
            Expr::Const(_) | Expr::X | Expr::Func(_) => 1,
            Expr::Sum(v) | Expr::Product(v) => 1 + v.iter().map(Expr::depth).max().unwrap_or(0),
            Expr::Pow(b, _) => 1 + b.depth(),
        }
    }

    /// Every basis node in the tree.
    pub fn basis_nodes(&self) -> Vec<Basis> {
        let mut out = Vec::new();
        self.collect_basis(&mut out);
        out
    }

    fn collect_basis(&self, out: &mut Vec<Basis>) {
        match self {
            Expr::Func(b) => out.push(*b),
            Expr::Sum(v) | Expr::Product(v) => v.iter().for_each(|e| e.collect_basis(out)),
            Expr::Pow(b, _) => b.collect_basis(out),
            _ => {}
        }
    }
}

/// Total order used for canonical sorting.
pub(crate) fn cmp_expr(a: &Expr, b: &Expr) -> Ordering {
    fn rank(e: &Expr) -> u8 {
        match e {
            Expr::Const(_) => 0,
            Expr::X => 1,
            Expr::Func(_) => 2,
            Expr::Pow(..) => 3,
            Expr::Product(_) => 4,
            Expr::Sum(_) => 5,
        }
    }
    match (a, b) {
        (Expr::Const(x), Expr::Const(y)) => x.total_cmp(y),
        (Expr::Func(x), Expr::Func(y)) => x.cmp_key(y),
        (Expr::Pow(x, m), Expr::Pow(y, n)) => cmp_expr(x, y).then(m.cmp(n)),
        (Expr::Sum(x), Expr::Sum(y)) | (Expr::Product(x), Expr::Product(y)) => {
            for (p, q) in x.iter().zip(y) {
                let o = cmp_expr(p, q);
                if o != Ordering::Equal {
                    return o;
                }
            }
            x.len().cmp(&y.len())
        }
        _ => rank(a).cmp(&rank(b)),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print::print(self))
    }
}

impl std::str::FromStr for Expr {
    type Err = crate::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl Serialize for Expr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<f64> for Expr {
    fn from(v: f64) -> Self {
        Expr::Const(v)
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::Sum(vec![self, rhs])
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::Sum(vec![self, -rhs])
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Product(vec![self, rhs])
    }
}

impl Mul<Expr> for f64 {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Product(vec![Expr::Const(self), rhs])
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Product(vec![Expr::Const(-1.0), self])
    }
}
