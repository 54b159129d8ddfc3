//! Canonical form: a sum of terms `c * a1^e1 * ... * an^en` where each atom is
//! `x`, a basis function, or an irreducible sum carrying a nonzero exponent.
//! Products of sums are expanded so identical monomials can be collected.

use std::cmp::Ordering;

use super::{cmp_expr, Basis, Expr, FuncKind};

#[derive(Debug, Clone)]
struct Term {
    coef: f64,
    factors: Vec<(Expr, i32)>,
}

fn cmp_factors(a: &[(Expr, i32)], b: &[(Expr, i32)]) -> Ordering {
    for ((x, m), (y, n)) in a.iter().zip(b) {
        let o = cmp_expr(x, y).then(m.cmp(n));
        if o != Ordering::Equal {
            return o;
        }
    }
    a.len().cmp(&b.len())
}

fn same_factors(a: &[(Expr, i32)], b: &[(Expr, i32)]) -> bool {
    cmp_factors(a, b) == Ordering::Equal
}

/// Merge equal atoms, drop zero exponents, sort.
fn tidy_factors(mut f: Vec<(Expr, i32)>) -> Vec<(Expr, i32)> {
    f.sort_by(|a, b| cmp_expr(&a.0, &b.0));
    let mut out: Vec<(Expr, i32)> = Vec::with_capacity(f.len());
    for (atom, e) in f {
        match out.last_mut() {
            Some(last) if cmp_expr(&last.0, &atom) == Ordering::Equal => last.1 += e,
            _ => out.push((atom, e)),
        }
    }
    out.retain(|(_, e)| *e != 0);
    // every negative power of zero is the same pole
    for (atom, e) in out.iter_mut() {
        if *e < 0 && atom.is_zero() {
            *e = -1;
        }
    }
    out
}

/// Fold `x^e` and repeated `pow(p, s*x)` factors into one real power per scale:
/// x^e * pow(p, s*x) = s^-e * pow(p + e, s*x).
fn merge_real_powers(t: &mut Term) {
    if !t.factors.iter().any(|(a, _)| matches!(a, Expr::Func(b) if b.kind == FuncKind::Pow)) {
        return;
    }
    let mut x_exp = 0;
    let mut groups: Vec<Basis> = Vec::new();
    let mut rest = Vec::with_capacity(t.factors.len());
    for (atom, e) in t.factors.drain(..) {
        match atom {
            Expr::X => x_exp += e,
            Expr::Func(b) if b.kind == FuncKind::Pow => {
                let add = b.param * e as f64;
                match groups.iter_mut().find(|g| g.scale == b.scale) {
                    Some(g) => g.param += add,
                    None => groups.push(Basis { param: add, ..b }),
                }
            }
            other => rest.push((other, e)),
        }
    }
    let first = &mut groups[0];
    first.param += x_exp as f64;
    t.coef *= first.scale.powi(-x_exp);
    for g in groups {
        if g.param != 0.0 {
            rest.push((Expr::Func(g), 1));
        }
    }
    t.factors = tidy_factors(rest);
}

fn collect(mut terms: Vec<Term>) -> Vec<Term> {
    for t in terms.iter_mut() {
        t.factors = tidy_factors(std::mem::take(&mut t.factors));
        merge_real_powers(t);
    }
    terms.sort_by(|a, b| cmp_factors(&a.factors, &b.factors));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if same_factors(&last.factors, &t.factors) => last.coef += t.coef,
            _ => out.push(t),
        }
    }
    out.retain(|t| t.coef != 0.0 && !t.factors.iter().any(|(a, e)| *e > 0 && a.is_zero()));
    out
}

fn multiply(a: &[Term], b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for p in a {
        for q in b {
            let mut factors = p.factors.clone();
            factors.extend(q.factors.iter().cloned());
            out.push(Term { coef: p.coef * q.coef, factors });
        }
    }
    collect(out)
}

fn atom_term(atom: Expr, e: i32) -> Vec<Term> {
    vec![Term { coef: 1.0, factors: vec![(atom, e)] }]
}

fn basis_terms(b: &Basis) -> Vec<Term> {
    // pow(0, s*x), P_0 and H_0 are identically one
    let unit_polynomial = matches!(b.kind, FuncKind::P | FuncKind::H) && b.order == 0;
    if (b.kind == FuncKind::Pow && b.param == 0.0) || unit_polynomial {
        return vec![Term { coef: 1.0, factors: Vec::new() }];
    }
    atom_term(Expr::Func(*b), 1)
}

fn to_terms(e: &Expr) -> Vec<Term> {
    match e {
        Expr::Const(c) => {
            if *c == 0.0 {
                Vec::new()
            } else {
                vec![Term { coef: *c, factors: Vec::new() }]
            }
        }
        Expr::X => atom_term(Expr::X, 1),
        Expr::Func(b) => basis_terms(b),
        Expr::Sum(v) => collect(v.iter().flat_map(to_terms).collect()),
        Expr::Product(v) => {
            let mut acc = vec![Term { coef: 1.0, factors: Vec::new() }];
            for child in v {
                acc = multiply(&acc, &to_terms(child));
                if acc.is_empty() {
                    break;
                }
            }
            acc
        }
        Expr::Pow(base, n) => power(to_terms(base), *n),
    }
}

fn power(base: Vec<Term>, n: i32) -> Vec<Term> {
    if n == 0 {
        return vec![Term { coef: 1.0, factors: Vec::new() }];
    }
    if base.len() == 1 {
        let t = &base[0];
        let (sums, factors): (Vec<_>, Vec<_>) =
            t.factors.iter().map(|(a, e)| (a.clone(), e * n)).partition(|(a, e)| *e > 0 && matches!(a, Expr::Sum(_)));
        let mut acc = collect(vec![Term { coef: t.coef.powi(n), factors }]);
        // a sum raised to a positive power is expanded, never kept as an atom
        for (sum, e) in sums {
            acc = multiply(&acc, &power(to_terms(&sum), e));
        }
        return acc;
    }
    if base.is_empty() {
        // 0^n, kept symbolic for n < 0 so it prints and re-parses
        return if n > 0 { Vec::new() } else { atom_term(Expr::Const(0.0), n) };
    }
    if n > 0 {
        let mut acc = base.clone();
        for _ in 1..n {
            acc = multiply(&acc, &base);
        }
        acc
    } else {
        atom_term(from_terms(base), n)
    }
}

fn term_expr(t: Term) -> Expr {
    let mut parts: Vec<Expr> = t
        .factors
        .into_iter()
        .map(|(a, e)| if e == 1 { a } else { Expr::Pow(Box::new(a), e) })
        .collect();
    if parts.is_empty() {
        return Expr::Const(t.coef);
    }
    if t.coef != 1.0 {
        parts.insert(0, Expr::Const(t.coef));
    }
    if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        Expr::Product(parts)
    }
}

fn from_terms(terms: Vec<Term>) -> Expr {
    match terms.len() {
        0 => Expr::Const(0.0),
        1 => term_expr(terms.into_iter().next().unwrap()),
        _ => Expr::Sum(terms.into_iter().map(term_expr).collect()),
    }
}

pub(crate) fn normalize(e: &Expr) -> Expr {
    from_terms(to_terms(e))
}

/// Split a canonical term into (coefficient, factors).
pub(crate) fn split_term(e: &Expr) -> (f64, Vec<(Expr, i32)>) {
    let factor = |f: &Expr| match f {
        Expr::Pow(a, n) => ((**a).clone(), *n),
        other => (other.clone(), 1),
    };
    match e {
        Expr::Const(c) => (*c, Vec::new()),
        Expr::Product(v) => {
            let (coef, rest) = match v.first() {
                Some(Expr::Const(c)) => (*c, &v[1..]),
                _ => (1.0, &v[..]),
            };
            (coef, rest.iter().map(factor).collect())
        }
        other => (1.0, vec![factor(other)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symexpr::FuncKind;

    #[test]
    fn like_terms_cancel() {
        let s = Expr::func(FuncKind::Sin, 1.0);
        let e = s.clone() + Expr::Const(-1.0) * s;
        assert_eq!(normalize(&e), Expr::Const(0.0));
    }

    #[test]
    fn powers_merge_and_vanish() {
        let e = Expr::X.powi(2) * Expr::X.powi(-2);
        assert_eq!(normalize(&e), Expr::Const(1.0));
        let e = Expr::X * Expr::X * Expr::Const(3.0);
        assert_eq!(normalize(&e), Expr::Product(vec![Expr::Const(3.0), Expr::X.powi(2)]));
    }

    #[test]
    fn products_distribute() {
        let e = Expr::X * (Expr::Const(1.0) + Expr::X);
        assert_eq!(normalize(&e), Expr::Sum(vec![Expr::X, Expr::X.powi(2)]));
    }

    #[test]
    fn inverse_of_sum_is_an_atom() {
        let s = Expr::Const(1.0) - Expr::X.powi(2);
        let e = s.clone().powi(-1) * s.clone().powi(-1);
        assert_eq!(normalize(&e), normalize(&s).powi(-2));
    }

    #[test]
    fn real_powers_absorb_x() {
        let e = Expr::X * Expr::real_power(-0.5, 2.0);
        assert_eq!(normalize(&e), Expr::Product(vec![Expr::Const(0.5), Expr::real_power(0.5, 2.0)]));
        let e = Expr::real_power(1.5, 1.0) * Expr::real_power(-1.5, 1.0);
        assert_eq!(normalize(&e), Expr::Const(1.0));
    }

    #[test]
    fn inverted_reciprocal_of_sum_expands() {
        let s = Expr::Const(0.5) + Expr::X;
        assert_eq!(normalize(&s.clone().powi(-1).powi(-2)), normalize(&(s.clone() * s)));
    }

    #[test]
    fn reciprocal_zero_stays_symbolic() {
        let inv = Expr::Const(0.0).powi(-2);
        let n = normalize(&(Expr::X + inv.clone()));
        assert_eq!(n.to_string(), "0^-1 + x");
        assert_eq!(normalize(&crate::parse("0^-1 + x").unwrap()), n);
        assert_eq!(normalize(&inv.powi(-1)), Expr::Const(0.0));
    }

    #[test]
    fn idempotent() {
        let e = (Expr::X + Expr::ordered(FuncKind::J, 1, 2.0)).powi(3) * Expr::func(FuncKind::Log, 1.0);
        let once = normalize(&e);
        assert_eq!(normalize(&once), once);
    }
}
