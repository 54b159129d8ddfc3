//! Legendre functions P_n, Q_n, the real-degree P_ν, and the degree derivative
//! P_{n,1} = ∂P_ν/∂ν at ν = n (Jolliffe's Rodrigues-like formula).

use super::gamma::rgamma;
use super::hyper::hyp2f1;
use crate::error::EvalError;

pub const MAX_DEGREE: u32 = 32;
/// Largest degree accepted by the degree-derivative kernel.
pub const MAX_DEG_DERIV_DEGREE: u32 = 12;

pub fn legendre_p(n: u32, x: f64) -> Result<f64, EvalError> {
    if n > MAX_DEGREE {
        return Err(EvalError::order("P", n as i64));
    }
    let (mut prev, mut cur) = (1.0, x);
    if n == 0 {
        return Ok(1.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Q_n(x) on -1 < x < 1.
pub fn legendre_q(n: u32, x: f64) -> Result<f64, EvalError> {
    if n > MAX_DEGREE {
        return Err(EvalError::order("Q", n as i64));
    }
    if !(x.abs() < 1.0) {
        return Err(EvalError::domain("Q", x));
    }
    let q0 = 0.5 * ((1.0 + x) / (1.0 - x)).ln();
    if n == 0 {
        return Ok(q0);
    }
    let (mut prev, mut cur) = (q0, x * q0 - 1.0);
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// P_ν(x) for real ν: ₂F₁(-ν, ν+1; 1; (1-x)/2) for x >= 0, and the even/odd
/// expansion about the origin in x² for x < 0, where (1-x)/2 approaches 1.
pub fn legendre_p_real_degree(nu: f64, x: f64) -> Result<f64, EvalError> {
    if nu.abs() > 13.0 {
        return Err(EvalError::Order { function: "P_real".into(), order: nu as i64 });
    }
    if !(x > -1.0 && x <= 1.0) {
        return Err(EvalError::domain("P_real", x));
    }
    if x >= 0.0 {
        return hyp2f1(-nu, nu + 1.0, 1.0, 0.5 * (1.0 - x), 500);
    }
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let p0 = sqrt_pi * rgamma(0.5 * nu + 1.0) * rgamma(0.5 * (1.0 - nu));
    let dp0 = -2.0 * sqrt_pi * rgamma(0.5 * (nu + 1.0)) * rgamma(-0.5 * nu);
    let even = hyp2f1(-0.5 * nu, 0.5 * (nu + 1.0), 0.5, x * x, 5000)?;
    let odd = x * hyp2f1(0.5 * (1.0 - nu), 0.5 * nu + 1.0, 1.5, x * x, 5000)?;
    Ok(p0 * even + dp0 * odd)
}

/// Coefficients (ascending powers) of (x² - 1)^n.
fn rodrigues_base(n: u32) -> Vec<f64> {
    let n = n as usize;
    let mut c = vec![0.0; 2 * n + 1];
    let mut binom = 1.0;
    for k in 0..=n {
        if k > 0 {
            binom = binom * (n - k + 1) as f64 / k as f64;
        }
        let sign = if (n - k) % 2 == 0 { 1.0 } else { -1.0 };
        c[2 * k] = sign * binom;
    }
    c
}

/// m-th derivative of the polynomial with coefficients `c`, evaluated at x.
fn poly_derivative_at(c: &[f64], m: usize, x: f64) -> f64 {
    if m >= c.len() {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in (m..c.len()).rev() {
        let falling: f64 = ((i - m + 1)..=i).map(|v| v as f64).product();
        acc = acc * x + c[i] * falling;
    }
    acc
}

/// i-th derivative of log((x+1)/2).
fn log_factor_derivative(i: usize, x: f64) -> f64 {
    if i == 0 {
        return (0.5 * (x + 1.0)).ln();
    }
    let fact: f64 = (1..i).map(|v| v as f64).product();
    let sign = if (i - 1) % 2 == 0 { 1.0 } else { -1.0 };
    sign * fact / (x + 1.0).powi(i as i32)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// j-th x-derivative of P_{n,1}(x) by Jolliffe's formula, through the Leibniz
/// expansion of 2^{1-n}/n! · D^n[(x²-1)^n log((x+1)/2)] - P_n(x) log((x+1)/2).
/// Loses digits toward x = -1, where the expansion cancels.
pub fn jolliffe_deg_deriv_dx(n: u32, j: usize, x: f64) -> Result<f64, EvalError> {
    if n > MAX_DEG_DERIV_DEGREE {
        return Err(EvalError::order("Pd", n as i64));
    }
    if !(x > -1.0) {
        return Err(EvalError::domain("Pd", x));
    }
    let base = rodrigues_base(n);
    let nn = n as usize;
    let n_fact: f64 = (1..=nn).map(|v| v as f64).product();
    let rodrigues_scale = 2f64.powi(1 - n as i32) / n_fact;
    let top = nn + j;
    let mut first = 0.0;
    for i in 0..=top {
        let poly = poly_derivative_at(&base, top - i, x);
        if poly != 0.0 {
            first += binomial(top, i) * poly * log_factor_derivative(i, x);
        }
    }
    // P_n^{(m)} = D^{n+m}[(x²-1)^n] / (2^n n!)
    let p_scale = 0.5 * rodrigues_scale;
    let mut second = 0.0;
    for i in 0..=j {
        let pn_deriv = p_scale * poly_derivative_at(&base, nn + j - i, x);
        second += binomial(j, i) * pn_deriv * log_factor_derivative(i, x);
    }
    let v = rodrigues_scale * first - second;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(EvalError::overflow("Pd", x))
    }
}

/// P_{n,1}(x) by Jolliffe's formula.
pub fn jolliffe_deg_deriv(n: u32, x: f64) -> Result<f64, EvalError> {
    jolliffe_deg_deriv_dx(n, 0, x)
}

/// Monomial coefficients of P_0..=P_n.
fn legendre_coefficients(n: usize) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = vec![vec![1.0]];
    if n >= 1 {
        out.push(vec![0.0, 1.0]);
    }
    for k in 1..n {
        let kf = k as f64;
        let mut next = vec![0.0; k + 2];
        for (i, c) in out[k].iter().enumerate() {
            next[i + 1] += (2.0 * kf + 1.0) * c / (kf + 1.0);
        }
        for (i, c) in out[k - 1].iter().enumerate() {
            next[i] -= kf * c / (kf + 1.0);
        }
        out.push(next);
    }
    out
}

/// j-th x-derivative of P_{n,1}(x) from the expansion
/// P_n(x) [log((x+1)/2) + 2(H_{2n} - H_n)] + 2 Σ_{k<n} (-1)^{n+k} (2k+1)/((n-k)(n+k+1)) P_k(x),
/// with H_m the harmonic numbers. Agrees with Jolliffe's formula and stays
/// accurate near x = -1.
pub fn legendre_p_deg_deriv_dx(n: u32, j: usize, x: f64) -> Result<f64, EvalError> {
    if n > MAX_DEG_DERIV_DEGREE {
        return Err(EvalError::order("Pd", n as i64));
    }
    if !(x > -1.0) {
        return Err(EvalError::domain("Pd", x));
    }
    let nn = n as usize;
    let coeffs = legendre_coefficients(nn);
    let harmonic_gap: f64 = (nn + 1..=2 * nn).map(|m| 1.0 / m as f64).sum();
    let mut poly = vec![0.0; nn + 1];
    for (i, c) in coeffs[nn].iter().enumerate() {
        poly[i] += 2.0 * harmonic_gap * c;
    }
    for (k, pk) in coeffs.iter().enumerate().take(nn) {
        let sign = if (nn + k) % 2 == 0 { 1.0 } else { -1.0 };
        let w = 2.0 * sign * (2 * k + 1) as f64 / ((nn - k) * (nn + k + 1)) as f64;
        for (i, c) in pk.iter().enumerate() {
            poly[i] += w * c;
        }
    }
    let mut v = poly_derivative_at(&poly, j, x);
    for i in 0..=j {
        v += binomial(j, i) * poly_derivative_at(&coeffs[nn], j - i, x) * log_factor_derivative(i, x);
    }
    if v.is_finite() {
        Ok(v)
    } else {
        Err(EvalError::overflow("Pd", x))
    }
}

/// P_{n,1}(x) = ∂P_ν(x)/∂ν at ν = n.
pub fn legendre_p_deg_deriv(n: u32, x: f64) -> Result<f64, EvalError> {
    legendre_p_deg_deriv_dx(n, 0, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_at_one_and_small_values() {
        for n in 0..=20 {
            assert!((legendre_p(n, 1.0).unwrap() - 1.0).abs() < 1e-14);
        }
        // (3x² - 1)/2 at x = 0.5
        assert!((legendre_p(2, 0.5).unwrap() + 0.125).abs() < 1e-15);
        assert_eq!(legendre_q(0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn q_domain() {
        assert!(matches!(legendre_q(2, 1.0), Err(EvalError::Domain { .. })));
        assert!(matches!(legendre_q(2, -1.2), Err(EvalError::Domain { .. })));
        // Q_1 = x Q_0 - 1
        let x = 0.4;
        let q0 = legendre_q(0, x).unwrap();
        assert!((legendre_q(1, x).unwrap() - (x * q0 - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn deg_deriv_vanishes_at_one() {
        for n in 0..=8 {
            assert!(legendre_p_deg_deriv(n, 1.0).unwrap().abs() < 1e-10, "n={n}");
        }
    }

    #[test]
    fn jolliffe_agrees_with_legendre_sum() {
        for n in 0..=MAX_DEG_DERIV_DEGREE {
            for x in [-0.5f64, 0.0, 0.4, 0.9, 1.0] {
                for j in 0..3 {
                    let a = jolliffe_deg_deriv_dx(n, j, x).unwrap();
                    let b = legendre_p_deg_deriv_dx(n, j, x).unwrap();
                    assert!((a - b).abs() < 1e-9 * (1.0 + b.abs()), "n={n} j={j} x={x}: {a} vs {b}");
                }
            }
            assert!(jolliffe_deg_deriv(n, 1.0).unwrap().abs() < 1e-10);
        }
    }

    #[test]
    fn sum_form_is_accurate_near_minus_one() {
        // mpmath: diff of legenp(ν, 0, x) in ν at ν = 8, x = -0.9
        assert!((legendre_p_deg_deriv(8, -0.9).unwrap() - 0.15942199826512509).abs() < 1e-13);
    }

    #[test]
    fn deg_deriv_n0_is_log() {
        for x in [-0.7f64, 0.0, 0.3, 0.95] {
            let want = (0.5 * (x + 1.0)).ln();
            assert!((legendre_p_deg_deriv(0, x).unwrap() - want).abs() < 1e-15);
        }
    }

    #[test]
    fn deg_deriv_reference_values() {
        // mpmath: diff of legenp(ν, 0, x) in ν
        let cases = [
            (0, 0.3, -0.43078291609245427),
            (1, 0.3, -0.82923487482773629),
            (3, 0.3, 0.31469113207203044),
            (3, -0.5, -0.32525378298995215),
            (6, 0.9, -0.16640563063149964),
            (2, 0.0, 0.096573590279972655),
        ];
        for (n, x, want) in cases {
            let got = legendre_p_deg_deriv(n, x).unwrap();
            assert!((got - want).abs() < 1e-12, "n={n} x={x}: {got} vs {want}");
        }
    }

    #[test]
    fn deg_deriv_domain() {
        assert!(matches!(legendre_p_deg_deriv(2, -1.0), Err(EvalError::Domain { .. })));
        assert!(matches!(legendre_p_deg_deriv(13, 0.0), Err(EvalError::Order { .. })));
    }

    #[test]
    fn real_degree_consistency() {
        assert!((legendre_p_real_degree(3.0, 0.3).unwrap() - legendre_p(3, 0.3).unwrap()).abs() < 1e-12);
        assert!((legendre_p_real_degree(0.0, -0.4).unwrap() - 1.0).abs() < 1e-15);
        for n in 0..=8u32 {
            for x in [-0.95f64, -0.5, -1e-3] {
                let d = legendre_p_real_degree(n as f64, x).unwrap() - legendre_p(n, x).unwrap();
                assert!(d.abs() < 1e-13, "n={n} x={x}: {d}");
            }
        }
        // mpmath legenp(nu, 0, x)
        for (nu, x, want) in [
            (2.5, 0.9, 0.59884423707592286),
            (2.5, -0.7, 0.53881927095462639),
            (0.3, -0.95, -0.1389686679199164),
            (4.7, -0.2, -0.19344924458608712),
        ] {
            assert!((legendre_p_real_degree(nu, x).unwrap() - want).abs() < 1e-13, "nu={nu} x={x}");
        }
    }

    #[test]
    fn x_derivatives_of_deg_deriv_match_finite_differences() {
        let h = 1e-4;
        for n in [0u32, 2, 5] {
            for &x in &[-0.6, 0.1, 0.8] {
                for j in 0..3 {
                    let f = |t: f64| legendre_p_deg_deriv_dx(n, j, t).unwrap();
                    let fd = (f(x + h) - f(x - h)) / (2.0 * h);
                    let d = legendre_p_deg_deriv_dx(n, j + 1, x).unwrap();
                    assert!((fd - d).abs() < 1e-6 * d.abs().max(1.0), "n={n} x={x} j={j}");
                }
            }
        }
    }
}
