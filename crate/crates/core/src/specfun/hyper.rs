//! Ascending series for ₁F₁ and ₂F₁ with explicit tail bounds.

use crate::error::EvalError;

const TAIL_EPS: f64 = 1e-17;

fn check_b(b: f64, name: &str) -> Result<(), EvalError> {
    if b <= 0.0 && b.fract() == 0.0 {
        Err(EvalError::Pole { function: name.into(), x: b })
    } else {
        Ok(())
    }
}

/// Kummer's M(a, b, z) = ₁F₁(a; b; z) for |z| <= 64.
pub fn hyp1f1(a: f64, b: f64, z: f64) -> Result<f64, EvalError> {
    hyp1f1_with_a_derivative(a, b, z).map(|(m, _)| m)
}

/// (₁F₁(a; b; z), ∂/∂a ₁F₁(a; b; z)) by the term-wise differentiated series.
///
/// The running product form stays exact when `a` is a non-positive integer,
/// where the value terminates but the a-derivative does not.
pub fn hyp1f1_with_a_derivative(a: f64, b: f64, z: f64) -> Result<(f64, f64), EvalError> {
    check_b(b, "1F1")?;
    if z.abs() > 64.0 || !z.is_finite() {
        return Err(EvalError::domain("1F1", z));
    }
    if z < 0.0 {
        // Kummer transformation avoids cancellation for negative z
        let (m, d) = hyp1f1_with_a_derivative(b - a, b, -z)?;
        let e = z.exp();
        return Ok((e * m, -e * d));
    }
    let (mut p, mut d) = (1.0, 0.0);
    let (mut sum, mut dsum) = (1.0, 0.0);
    for k in 0..4000 {
        let kf = k as f64;
        let rho = z / ((b + kf) * (kf + 1.0));
        let np = p * (a + kf) * rho;
        let nd = (d * (a + kf) + p) * rho;
        p = np;
        d = nd;
        sum += p;
        dsum += d;
        // ratio of successive terms is bounded by r once k exceeds |a|, |b|
        let r = ((a.abs() + kf + 2.0) * z.abs()) / ((b + kf + 1.0).abs() * (kf + 2.0));
        if kf > a.abs() + b.abs() && r < 0.5 {
            let scale = sum.abs().max(dsum.abs()).max(1e-300);
            let tail = (p.abs() + d.abs()) * r / (1.0 - r);
            if tail <= TAIL_EPS * scale {
                return Ok((sum, dsum));
            }
        }
        if p == 0.0 && d == 0.0 {
            return Ok((sum, dsum));
        }
    }
    Err(EvalError::no_convergence("1F1"))
}

/// Gauss ₂F₁(a, b; c; z) for |z| < 1 by direct summation, at most `max_terms` terms.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64, max_terms: usize) -> Result<f64, EvalError> {
    check_b(c, "2F1")?;
    if z.abs() >= 1.0 || !z.is_finite() {
        return Err(EvalError::domain("2F1", z));
    }
    let mut t = 1.0;
    let mut sum = 1.0;
    for k in 0..max_terms {
        let kf = k as f64;
        t *= (a + kf) * (b + kf) * z / ((c + kf) * (kf + 1.0));
        sum += t;
        if t == 0.0 {
            return Ok(sum);
        }
        let nk = kf + 1.0;
        if nk > a.abs() + b.abs() + c.abs() {
            // ratio bound for every later term
            let r = ((a.abs() + nk) * (b.abs() + nk) / ((c + nk).abs() * (nk + 1.0)) * z.abs()).max(z.abs());
            if r < 1.0 && t.abs() * r / (1.0 - r) <= TAIL_EPS * sum.abs().max(1e-300) {
                return Ok(sum);
            }
        }
    }
    Err(EvalError::no_convergence("2F1"))
}
