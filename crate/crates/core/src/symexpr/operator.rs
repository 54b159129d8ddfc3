use serde::Serialize;

use super::Expr;

/// L[y] = a_0(x) y + a_1(x) y' + ... + a_m(x) y^(m), coefficients as expressions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinearOperator {
    pub coeffs: Vec<Expr>,
}

impl LinearOperator {
    /// Coefficients listed from a_0 upward.
    pub fn new(coeffs: Vec<Expr>) -> Self {
        LinearOperator { coeffs: coeffs.into_iter().map(|c| c.simplify()).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// L - lambda.
    pub fn shifted(&self, lambda: f64) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(Expr::Const(0.0));
        }
        coeffs[0] = (coeffs[0].clone() - Expr::Const(lambda)).simplify();
        LinearOperator { coeffs }
    }

    /// L[e] in canonical form.
    pub fn apply(&self, e: &Expr) -> Expr {
        let mut deriv = e.simplify();
        let mut terms = Vec::with_capacity(self.coeffs.len());
        for (j, a) in self.coeffs.iter().enumerate() {
            if j > 0 {
                deriv = deriv.differentiate();
            }
            if !a.is_zero() {
                terms.push(a.clone() * deriv.clone());
            }
        }
        Expr::Sum(terms).simplify()
    }

    /// L applied `times` times in succession.
    pub fn apply_repeated(&self, e: &Expr, times: usize) -> Expr {
        let mut out = e.simplify();
        for _ in 0..times {
            out = self.apply(&out);
        }
        out
    }
}

impl std::fmt::Display for LinearOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (j, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let d = match j {
                0 => String::new(),
                1 => "d".to_string(),
                _ => format!("d^{j}"),
            };
            match (a, d.is_empty()) {
                (Expr::Const(c), false) if *c == 1.0 => write!(f, "{d}")?,
                (_, true) => write!(f, "({a})")?,
                _ => write!(f, "({a})*{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symexpr::parse;

    fn p(s: &str) -> Expr {
        parse(s).unwrap()
    }

    #[test]
    fn harmonic_annihilates_sine() {
        let op = LinearOperator::new(vec![p("1"), p("0"), p("1")]);
        assert_eq!(op.apply(&p("sin(x)")), Expr::Const(0.0));
        assert_eq!(op.apply(&p("-x*cos(x)/2")), p("sin(x)"));
    }

    #[test]
    fn equidimensional_log_power() {
        // (x d - b)[x^b log x] = x^b
        let b = 0.5;
        let op = LinearOperator::new(vec![Expr::Const(-b), p("x")]);
        let r = op.apply(&p("pow(0.5,x)*log(x)"));
        assert_eq!(r, p("pow(0.5,x)"));
    }

    #[test]
    fn bessel_resonance() {
        let op = LinearOperator::new(vec![p("1"), p("1/x"), p("1")]);
        let r = op.apply(&p("x*J(1,x)/2"));
        for x in [0.5, 2.0, 7.7] {
            let want = p("J(0,x)").eval(x).unwrap();
            assert!((r.eval(x).unwrap() - want).abs() < 1e-14);
        }
    }

    #[test]
    fn shifted_and_display() {
        let op = LinearOperator::new(vec![p("0"), p("0"), p("1")]).shifted(-4.0);
        assert_eq!(op.coeffs[0], Expr::Const(4.0));
        assert_eq!(op.to_string(), "d^2 + (4)");
    }
}
