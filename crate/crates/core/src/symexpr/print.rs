//! Printer for canonical expressions. Output is accepted by the parser and
//! re-parses to the same canonical tree.

use super::simplify::split_term;
use super::{Basis, Expr};

fn number(v: f64) -> String {
    format!("{v}")
}

fn argument(scale: f64) -> String {
    if scale == 1.0 {
        "x".to_string()
    } else if scale == -1.0 {
        "-x".to_string()
    } else {
        format!("{}*x", number(scale))
    }
}

pub(crate) fn basis(b: &Basis) -> String {
    let mut s = b.kind.name().to_string();
    for _ in 0..b.deriv {
        s.push('\'');
    }
    s.push('(');
    if b.kind.has_order() {
        s.push_str(&format!("{},", b.order));
    } else if b.kind == super::FuncKind::Pow {
        s.push_str(&format!("{},", number(b.param)));
    }
    s.push_str(&argument(b.scale));
    s.push(')');
    s
}

fn atom(e: &Expr) -> String {
    match e {
        Expr::X => "x".to_string(),
        Expr::Func(b) => basis(b),
        Expr::Const(c) => number(*c),
        other => format!("({})", print(other)),
    }
}

fn factor(a: &Expr, n: i32) -> String {
    if n == 1 {
        atom(a)
    } else {
        format!("{}^{}", atom(a), n)
    }
}

/// Reciprocal integer m with 1/m == a exactly, for printing `/m`.
fn reciprocal_integer(a: f64) -> Option<f64> {
    let m = 1.0 / a;
    (m.fract() == 0.0 && m > 1.0 && m < 1e15 && 1.0 / m == a).then_some(m)
}

/// Unsigned rendering of a term plus its sign.
fn term(e: &Expr) -> (bool, String) {
    let (coef, factors) = split_term(e);
    let negative = coef.is_sign_negative();
    let a = coef.abs();
    let mut numer: Vec<String> = Vec::new();
    let mut denom: Vec<String> = Vec::new();
    if a != 1.0 || factors.is_empty() {
        match reciprocal_integer(a) {
            Some(m) if !factors.is_empty() => denom.push(number(m)),
            _ => numer.push(number(a)),
        }
    }
    for (atom_expr, n) in &factors {
        match atom_expr {
            Expr::Sum(_) => numer.push(factor(atom_expr, *n)),
            // the parser rejects division by zero
            Expr::Const(c) if *c == 0.0 => numer.push(format!("0^{n}")),
            _ if *n < 0 => denom.push(factor(atom_expr, -n)),
            _ => numer.push(factor(atom_expr, *n)),
        }
    }
    // denominator constant goes last
    if let Some(pos) = denom.iter().position(|d| d.parse::<f64>().is_ok()) {
        let c = denom.remove(pos);
        denom.push(c);
    }
    let mut s = if numer.is_empty() { "1".to_string() } else { numer.join("*") };
    for d in denom {
        s.push('/');
        s.push_str(&d);
    }
    (negative, s)
}

pub(crate) fn print(e: &Expr) -> String {
    let terms: Vec<&Expr> = match e {
        Expr::Sum(v) => v.iter().collect(),
        other => vec![other],
    };
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let (neg, body) = term(t);
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}
