//! Hermite polynomials H_n, the real-order Hermite function H_ν, the
//! second-kind function G_n = H_n ∫_{x₀}^x e^{t²}/H_n(t)² dt, and the degree
//! derivatives H_{n,1} = ∂H_ν/∂ν and G_{n,1} = ∂G_ν/∂ν at ν = n.
//!
//! H_ν is evaluated from the two-term Kummer representation for x <= 2. For
//! larger x that representation cancels catastrophically (both terms grow
//! like e^{x²}), so H_ν is taken from its large-x expansion at x >= 6.5 and
//! carried inward by Taylor re-expansion of H'' = 2x H' - 2ν H, a direction in
//! which the recessive solution dominates.

use std::f64::consts::PI;

use super::gamma::rgamma;
use super::hyper::{hyp1f1, hyp1f1_with_a_derivative};
use super::quad::{integrate, QuadratureSpec};
use crate::error::EvalError;
use crate::series;

pub const MAX_ORDER: u32 = 32;
/// Largest degree accepted by the degree-derivative kernels.
pub const MAX_DEG_DERIV_ORDER: u32 = 12;
/// Keep-out distance from the largest zero of H_n.
pub const ZERO_GUARD: f64 = 0.05;
/// Default base point offset from the largest zero.
pub const BASE_OFFSET: f64 = 0.5;
/// Default ν step for the order finite differences.
pub const ORDER_STEP: f64 = 1e-4;

const KUMMER_LIMIT: f64 = 2.0;
const ASYMPTOTIC_START: f64 = 6.5;

/// Physicists' Hermite polynomial H_n(x).
pub fn hermite_h(n: u32, x: f64) -> Result<f64, EvalError> {
    if n > MAX_ORDER {
        return Err(EvalError::order("H", n as i64));
    }
    let (mut prev, mut cur) = (1.0, 2.0 * x);
    if n == 0 {
        return Ok(1.0);
    }
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// i-th derivative of H_n: 2^i n!/(n-i)! H_{n-i}.
pub fn hermite_h_dx(n: u32, i: usize, x: f64) -> Result<f64, EvalError> {
    if i > n as usize {
        return Ok(0.0);
    }
    let factor: f64 = (0..i).map(|m| 2.0 * (n as usize - m) as f64).product();
    Ok(factor * hermite_h(n - i as u32, x)?)
}

/// Largest real zero of H_n, or 0 for n = 0 (no zeros; the base point
/// convention x₀ = 0.5 then matches the other orders).
pub fn largest_zero(n: u32) -> Result<f64, EvalError> {
    if n == 0 {
        return Ok(0.0);
    }
    let h = |x: f64| hermite_h(n, x);
    let mut hi = (2.0 * n as f64 + 1.0).sqrt() + 0.1;
    let sign_hi = h(hi)?.signum();
    let mut lo = hi;
    loop {
        lo -= 0.02;
        if h(lo)?.signum() != sign_hi {
            break;
        }
        hi = lo;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if h(mid)?.signum() == sign_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn kummer_form(nu: f64, x: f64) -> Result<f64, EvalError> {
    let z = x * x;
    let even = rgamma(0.5 * (1.0 - nu));
    let odd = rgamma(-0.5 * nu);
    let mut acc = 0.0;
    if even != 0.0 {
        acc += even * hyp1f1(-0.5 * nu, 0.5, z)?;
    }
    if odd != 0.0 {
        acc -= 2.0 * x * odd * hyp1f1(0.5 * (1.0 - nu), 1.5, z)?;
    }
    Ok(2f64.powf(nu) * PI.sqrt() * acc)
}

/// Large-x expansion H_ν(x) ~ (2x)^ν Σ (-ν/2)_k ((1-ν)/2)_k / k! (-1/x²)^k.
fn asymptotic_form(nu: f64, x: f64) -> Result<f64, EvalError> {
    let a = -0.5 * nu;
    let b = 0.5 * (1.0 - nu);
    let q = -1.0 / (x * x);
    let mut term = 1.0;
    let mut sum: f64 = 1.0;
    let mut prev_abs = f64::INFINITY;
    for k in 0..200 {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / (kf + 1.0) * q;
        if term == 0.0 {
            break;
        }
        if term.abs() > prev_abs && kf > a.abs() + b.abs() {
            // past the smallest term of a divergent expansion
            if prev_abs < 1e-14 * sum.abs() {
                break;
            }
            return Err(EvalError::no_convergence("H_real"));
        }
        sum += term;
        prev_abs = term.abs();
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    Ok((2.0 * x).powf(nu) * sum)
}

/// Taylor re-expansion of y'' = 2x y' - 2ν y from `start` to `x`.
fn march_hermite(nu: f64, start: f64, x: f64, mut y: f64, mut yp: f64) -> (f64, f64) {
    const STEP: f64 = 0.25;
    let mut c = start;
    let mut a = [0.0f64; 64];
    while c != x {
        let h = if (x - c).abs() <= STEP { x - c } else { STEP * (x - c).signum() };
        a[0] = y;
        a[1] = yp;
        let mut n = 2;
        while n < a.len() {
            let k = (n - 2) as f64;
            a[n] = (2.0 * c * (k + 1.0) * a[n - 1] + (2.0 * k - 2.0 * nu) * a[n - 2]) / ((k + 2.0) * (k + 1.0));
            n += 1;
            if n > 8 && (a[n - 1] * h.powi(n as i32 - 1)).abs() < 1e-19 * (y.abs() + yp.abs() * h.abs()) {
                break;
            }
        }
        let (mut ny, mut nyp) = (0.0, 0.0);
        for j in (0..n).rev() {
            ny = ny * h + a[j];
            if j > 0 {
                nyp = nyp * h + j as f64 * a[j];
            }
        }
        y = ny;
        yp = nyp;
        c = if (x - c).abs() <= STEP { x } else { c + h };
    }
    (y, yp)
}

/// The Hermite function H_ν(x) of real order ν (standard normalization,
/// reducing to the polynomials at non-negative integers).
pub fn hermite_real(nu: f64, x: f64) -> Result<f64, EvalError> {
    if !nu.is_finite() || !x.is_finite() {
        return Err(EvalError::domain("H_real", x));
    }
    if x <= KUMMER_LIMIT {
        if x < -8.0 {
            return Err(EvalError::domain("H_real", x));
        }
        return kummer_form(nu, x);
    }
    if x >= ASYMPTOTIC_START {
        return asymptotic_form(nu, x);
    }
    let y = asymptotic_form(nu, ASYMPTOTIC_START)?;
    let yp = 2.0 * nu * asymptotic_form(nu - 1.0, ASYMPTOTIC_START)?;
    Ok(march_hermite(nu, ASYMPTOTIC_START, x, y, yp).0)
}

/// Central difference in ν with one Richardson level.
fn order_derivative<F>(f: F, nu: f64, h: f64) -> Result<f64, EvalError>
where
    F: Fn(f64) -> Result<f64, EvalError>,
{
    let d1 = (f(nu + h)? - f(nu - h)?) / (2.0 * h);
    let h2 = 0.5 * h;
    let d2 = (f(nu + h2)? - f(nu - h2)?) / (2.0 * h2);
    Ok((4.0 * d2 - d1) / 3.0)
}

/// j-th x-derivative of H_ν: 2^j ν(ν-1)…(ν-j+1) H_{ν-j}(x).
pub fn hermite_real_dx(nu: f64, j: usize, x: f64) -> Result<f64, EvalError> {
    let factor: f64 = (0..j).map(|m| 2.0 * (nu - m as f64)).product();
    if factor == 0.0 {
        return Ok(0.0);
    }
    Ok(factor * hermite_real(nu - j as f64, x)?)
}

fn check_deg_deriv_args(n: u32, x: f64) -> Result<(), EvalError> {
    if n > MAX_DEG_DERIV_ORDER {
        return Err(EvalError::order("Hd", n as i64));
    }
    if !(x.abs() <= 8.0) {
        return Err(EvalError::domain("Hd", x));
    }
    Ok(())
}

/// j-th x-derivative of H_{n,1}, with ν step `h`.
pub fn hermite_h_deg_deriv_dx_with_step(n: u32, j: usize, x: f64, h: f64) -> Result<f64, EvalError> {
    check_deg_deriv_args(n, x)?;
    order_derivative(|nu| hermite_real_dx(nu, j, x), n as f64, h)
}

pub fn hermite_h_deg_deriv_dx(n: u32, j: usize, x: f64) -> Result<f64, EvalError> {
    hermite_h_deg_deriv_dx_with_step(n, j, x, ORDER_STEP)
}

/// H_{n,1}(x) = ∂H_ν(x)/∂ν at ν = n, |x| <= 8.
pub fn hermite_h_deg_deriv(n: u32, x: f64) -> Result<f64, EvalError> {
    hermite_h_deg_deriv_dx(n, 0, x)
}

/// The single-term form x · d/dξ ₁F₁(ξ; 3/2; x²) at ξ = (1-n)/2.
///
/// Kept as a cross-check only: it satisfies
/// L_n[y] = 4x ₁F₁((1-n)/2; 3/2; x²), which is a multiple of H_n only for odd n.
pub fn hermite_h_deg_deriv_single_term(n: u32, x: f64) -> Result<f64, EvalError> {
    check_deg_deriv_args(n, x)?;
    let xi = 0.5 * (1.0 - n as f64);
    let (_, d) = hyp1f1_with_a_derivative(xi, 1.5, x * x)?;
    Ok(x * d)
}

/// Domain bookkeeping for G_n: (largest zero, base point).
pub fn g_domain(n: u32, q: &QuadratureSpec) -> Result<(f64, f64), EvalError> {
    let z = largest_zero(n)?;
    Ok((z, q.base_point.unwrap_or(z + BASE_OFFSET)))
}

fn check_g_args(n: u32, x: f64, zmax: f64, name: &str) -> Result<(), EvalError> {
    if n > MAX_ORDER {
        return Err(EvalError::order(name, n as i64));
    }
    if !(x > zmax + ZERO_GUARD) {
        return Err(EvalError::domain(name, x));
    }
    Ok(())
}

/// Taylor coefficients of e^{t²} at t = x, length `len`.
fn exp_square_series(x: f64, len: usize) -> Vec<f64> {
    let mut arg = vec![0.0; len];
    arg[0] = x * x;
    if len > 1 {
        arg[1] = 2.0 * x;
    }
    if len > 2 {
        arg[2] = 1.0;
    }
    series::exp(&arg)
}

fn hermite_series(n: u32, x: f64, len: usize) -> Result<Vec<f64>, EvalError> {
    let d: Vec<f64> = (0..len).map(|i| hermite_h_dx(n, i, x)).collect::<Result<_, _>>()?;
    Ok(series::from_derivatives(&d))
}

fn hd_series(n: u32, x: f64, len: usize) -> Result<Vec<f64>, EvalError> {
    let d: Vec<f64> = (0..len).map(|i| hermite_h_deg_deriv_dx(n, i, x)).collect::<Result<_, _>>()?;
    Ok(series::from_derivatives(&d))
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn indefinite<F>(f: F, x: f64, x0: f64, q: &QuadratureSpec) -> Result<f64, EvalError>
where
    F: FnMut(f64) -> Result<f64, EvalError>,
{
    integrate(f, x0, x, q)
}

fn g_integral(n: u32, x: f64, x0: f64, q: &QuadratureSpec) -> Result<f64, EvalError> {
    indefinite(|t| {
        let h = hermite_h(n, t)?;
        Ok((t * t).exp() / (h * h))
    }, x, x0, q)
}

fn gd_integral(n: u32, x: f64, x0: f64, q: &QuadratureSpec) -> Result<f64, EvalError> {
    indefinite(|t| {
        let h = hermite_h(n, t)?;
        Ok((t * t).exp() * hermite_h_deg_deriv(n, t)? / (h * h * h))
    }, x, x0, q)
}

/// j-th x-derivative of G_n.
pub fn hermite_g_dx(n: u32, j: usize, x: f64, q: &QuadratureSpec) -> Result<f64, EvalError> {
    let (zmax, x0) = g_domain(n, q)?;
    check_g_args(n, x, zmax, "G")?;
    let f0 = g_integral(n, x, x0, q)?;
    if j == 0 {
        return Ok(hermite_h(n, x)? * f0);
    }
    // F' = e^{x²}/H², as a series of length j
    let hs = hermite_series(n, x, j)?;
    let weight = series::mul(&exp_square_series(x, j), &series::recip(&series::mul(&hs, &hs)).ok_or_else(|| EvalError::domain("G", x))?);
    let mut total = 0.0;
    for i in 0..=j {
        let m = j - i;
        let f_m = if m == 0 { f0 } else { series::derivative_value(&weight, m - 1) };
        total += binomial(j, i) * hermite_h_dx(n, i, x)? * f_m;
    }
    Ok(total)
}

/// G_n(x) = H_n(x) ∫_{x₀}^x e^{t²}/H_n(t)² dt, defined right of the largest zero.
pub fn hermite_g(n: u32, x: f64, q: &QuadratureSpec) -> Result<f64, EvalError> {
    hermite_g_dx(n, 0, x, q)
}

/// j-th x-derivative of G_{n,1}.
pub fn hermite_g_deg_deriv_dx(n: u32, j: usize, x: f64, q: &QuadratureSpec) -> Result<f64, EvalError> {
    if n > MAX_DEG_DERIV_ORDER {
        return Err(EvalError::order("Gd", n as i64));
    }
    let (zmax, x0) = g_domain(n, q)?;
    check_g_args(n, x, zmax, "Gd")?;
    let f0 = g_integral(n, x, x0, q)?;
    let f2 = gd_integral(n, x, x0, q)?;
    let (w1, w2) = if j > 0 {
        let hs = hermite_series(n, x, j)?;
        let e = exp_square_series(x, j);
        let inv_h = series::recip(&hs).ok_or_else(|| EvalError::domain("Gd", x))?;
        let inv_h2 = series::mul(&inv_h, &inv_h);
        let w1 = series::mul(&e, &inv_h2);
        let w2 = series::mul(&series::mul(&w1, &inv_h), &hd_series(n, x, j)?);
        (w1, w2)
    } else {
        (Vec::new(), Vec::new())
    };
    let mut total = 0.0;
    for i in 0..=j {
        let m = j - i;
        let (fm, f2m) = if m == 0 { (f0, f2) } else { (series::derivative_value(&w1, m - 1), series::derivative_value(&w2, m - 1)) };
        total += binomial(j, i) * (hermite_h_deg_deriv_dx(n, i, x)? * fm - 2.0 * hermite_h_dx(n, i, x)? * f2m);
    }
    Ok(total)
}

/// G_{n,1}(x) = H_{n,1} ∫ e^{t²}/H_n² - 2 H_n ∫ e^{t²} H_{n,1}/H_n³, both from x₀.
pub fn hermite_g_deg_deriv(n: u32, x: f64, q: &QuadratureSpec) -> Result<f64, EvalError> {
    hermite_g_deg_deriv_dx(n, 0, x, q)
}

/// Real-order G_ν(x) = H_ν(x) ∫_{x₀}^x e^{t²}/H_ν(t)² dt with the base point
/// of the integer order `base_order`. Used as the ν-family behind G_{n,1}.
pub fn hermite_g_real_order(nu: f64, base_order: u32, x: f64, q: &QuadratureSpec) -> Result<f64, EvalError> {
    let (zmax, x0) = g_domain(base_order, q)?;
    check_g_args(base_order, x, zmax, "G_real")?;
    let integral = integrate(
        |t| {
            let h = hermite_real(nu, t)?;
            Ok((t * t).exp() / (h * h))
        },
        x0,
        x,
        q,
    )?;
    Ok(hermite_real(nu, x)? * integral)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_term_satisfies_its_own_forcing() {
        // y'' - 2x y' + 2n y = 4x 1F1((1-n)/2; 3/2; x²)
        let h = 1e-4;
        for n in 0..=3u32 {
            let y = |x: f64| hermite_h_deg_deriv_single_term(n, x).unwrap();
            for x in [0.3f64, 1.1, 1.8] {
                let d2 = (y(x + h) - 2.0 * y(x) + y(x - h)) / (h * h);
                let d1 = (y(x + h) - y(x - h)) / (2.0 * h);
                let lhs = d2 - 2.0 * x * d1 + 2.0 * n as f64 * y(x);
                let rhs = 4.0 * x * hyp1f1(0.5 * (1.0 - n as f64), 1.5, x * x).unwrap();
                assert!((lhs - rhs).abs() < 1e-5 * rhs.abs().max(1.0), "n={n} x={x}: {lhs} vs {rhs}");
            }
        }
    }

    #[test]
    fn recurrence_seeds_and_values() {
        assert_eq!(hermite_h(0, 0.3).unwrap(), 1.0);
        assert_eq!(hermite_h(1, 0.3).unwrap(), 0.6);
        assert_eq!(hermite_h(3, 1.0).unwrap(), -4.0);
    }

    #[test]
    fn derivative_rule_by_central_difference() {
        let (n, x, h) = (4, 0.7, 1e-5);
        let fd = (hermite_h(n, x + h).unwrap() - hermite_h(n, x - h).unwrap()) / (2.0 * h);
        let exact = 2.0 * n as f64 * hermite_h(n - 1, x).unwrap();
        assert!((fd - exact).abs() < 1e-7);
    }

    #[test]
    fn real_order_matches_polynomials_and_reference() {
        for n in 0..=6u32 {
            for &x in &[-1.5, 0.0, 0.9, 2.7, 4.4, 7.0] {
                let p = hermite_h(n, x).unwrap();
                let r = hermite_real(n as f64, x).unwrap();
                assert!((p - r).abs() < 1e-11 * p.abs().max(1.0), "n={n} x={x}: {p} vs {r}");
            }
        }
        // mpmath hermite(2.5, x)
        assert!((hermite_real(2.5, 0.9).unwrap() + 0.83796100197033378).abs() < 1e-12);
        assert!((hermite_real(2.5, 4.2).unwrap() / 193.61484576621778 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn deg_deriv_reference_values() {
        let cases = [
            (0, 0.0, -0.28860783245076643),
            (1, 0.5, -0.68622612585286573),
            (2, 1.9, 13.54554774717529),
            (3, 0.9, -10.461681421155378),
            (3, 4.0, 925.23213712878354),
            (2, 6.5, 425.34069358638464),
        ];
        for (n, x, want) in cases {
            let got = hermite_h_deg_deriv(n, x).unwrap();
            assert!((got - want).abs() < 1e-8 * want.abs().max(1.0), "n={n} x={x}: {got} vs {want}");
        }
    }

    #[test]
    fn deg_deriv_step_self_consistency() {
        for &(n, x) in &[(1u32, 0.4), (3, 0.9), (2, 3.3), (4, 5.0)] {
            let a = hermite_h_deg_deriv_dx_with_step(n, 0, x, 1e-4).unwrap();
            let b = hermite_h_deg_deriv_dx_with_step(n, 0, x, 5e-5).unwrap();
            assert!((a - b).abs() <= 1e-6 * a.abs().max(1e-300), "n={n} x={x}");
        }
    }

    #[test]
    fn largest_zeros() {
        // H_2 = 4x² - 2, H_3 = 8x³ - 12x
        assert!((largest_zero(2).unwrap() - 0.5f64.sqrt()).abs() < 1e-12);
        assert!((largest_zero(3).unwrap() - 1.5f64.sqrt()).abs() < 1e-12);
        assert_eq!(largest_zero(0).unwrap(), 0.0);
    }

    #[test]
    fn g0_matches_trapezoid_oracle() {
        // ∫_{0.5}^{1} e^{t²} dt with 10^5 trapezoid panels
        let panels = 100_000;
        let h = 0.5 / panels as f64;
        let f = |t: f64| (t * t).exp();
        let mut acc = 0.5 * (f(0.5) + f(1.0));
        for i in 1..panels {
            acc += f(0.5 + i as f64 * h);
        }
        let oracle = acc * h;
        let got = hermite_g(0, 1.0, &QuadratureSpec::default()).unwrap();
        assert!((got - oracle).abs() < 1e-8);
        assert!((got - 0.91766464172355939).abs() < 1e-10);
    }

    #[test]
    fn g_domain_guard() {
        let q = QuadratureSpec::default();
        let z = largest_zero(2).unwrap();
        assert!(hermite_g(2, z + 0.06, &q).unwrap().is_finite());
        assert!(matches!(hermite_g(2, z, &q), Err(EvalError::Domain { .. })));
        assert!(matches!(hermite_g_deg_deriv(2, z + 0.01, &q), Err(EvalError::Domain { .. })));
    }

    #[test]
    fn g0_satisfies_hermite_equation() {
        let q = QuadratureSpec::default();
        let x = 1.2;
        let r = hermite_g_dx(0, 2, x, &q).unwrap() - 2.0 * x * hermite_g_dx(0, 1, x, &q).unwrap();
        assert!(r.abs() < 1e-8);
    }

    #[test]
    fn x_derivatives_of_g_functions_match_finite_differences() {
        let q = QuadratureSpec::default();
        let h = 1e-4;
        for n in [1u32, 2] {
            let x = largest_zero(n).unwrap() + 1.0;
            for j in 0..2 {
                let g = |t: f64| hermite_g_dx(n, j, t, &q).unwrap();
                let fd = (g(x + h) - g(x - h)) / (2.0 * h);
                let d = hermite_g_dx(n, j + 1, x, &q).unwrap();
                assert!((fd - d).abs() < 1e-6 * d.abs().max(1.0), "G n={n} j={j}");
                let gd = |t: f64| hermite_g_deg_deriv_dx(n, j, t, &q).unwrap();
                let fd = (gd(x + h) - gd(x - h)) / (2.0 * h);
                let d = hermite_g_deg_deriv_dx(n, j + 1, x, &q).unwrap();
                assert!((fd - d).abs() < 1e-5 * d.abs().max(1.0), "Gd n={n} j={j}: {fd} vs {d}");
            }
        }
    }
}
