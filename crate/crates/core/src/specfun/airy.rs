//! Airy functions Ai, Bi and their derivatives for real argument.
//!
//! Regions:
//! * `|x| <= 2`: Maclaurin series.
//! * `x > 2`: Ai, Ai' from K_{1/3}, K_{2/3} of ζ = (2/3)x^{3/2}; Bi, Bi' from the
//!   Maclaurin series (all terms positive) up to x = 12, asymptotic beyond.
//! * `x < -2`: Taylor re-expansion of y'' = x y marched from x = -2.

use std::f64::consts::PI;

use serde::Serialize;

use super::bessel::k_scaled_real_order;
use crate::error::EvalError;

/// Ai(0) = 1 / (3^{2/3} Γ(2/3)).
pub const AI0: f64 = 0.355_028_053_887_817_24;
/// -Ai'(0) = 1 / (3^{1/3} Γ(1/3)).
pub const AIP0: f64 = 0.258_819_403_792_806_8;

const SERIES_LIMIT: f64 = 2.0;
const BI_SERIES_LIMIT: f64 = 12.0;
const MIN_X: f64 = -100.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AiryValues {
    pub ai: f64,
    pub bi: f64,
    pub aip: f64,
    pub bip: f64,
}

/// Values (f, g, f', g') of the two Maclaurin solutions with f(0)=1, g'(0)=1.
fn maclaurin(x: f64) -> (f64, f64, f64, f64) {
    let x3 = x * x * x;
    let (mut f, mut g, mut fp, mut gp) = (1.0, x, 0.0, 1.0);
    let (mut tf, mut tg, mut tfp, mut tgp) = (1.0, x, 0.5 * x * x, 1.0);
    fp += tfp;
    for k in 1..400 {
        let kf = k as f64;
        tf *= x3 / ((3.0 * kf) * (3.0 * kf - 1.0));
        tg *= x3 / ((3.0 * kf + 1.0) * (3.0 * kf));
        if k > 1 {
            tfp *= x3 / (3.0 * (3.0 * kf - 1.0) * (kf - 1.0));
            fp += tfp;
        }
        tgp *= x3 / ((3.0 * kf) * (3.0 * kf - 2.0));
        f += tf;
        g += tg;
        gp += tgp;
        let small = |t: f64, s: f64| t.abs() <= 1e-17 * s.abs().max(1e-300);
        if small(tf, f) && small(tg, g) && small(tfp, fp) && small(tgp, gp) {
            break;
        }
    }
    (f, g, fp, gp)
}

fn from_maclaurin(x: f64) -> AiryValues {
    let (f, g, fp, gp) = maclaurin(x);
    let s3 = 3f64.sqrt();
    AiryValues {
        ai: AI0 * f - AIP0 * g,
        bi: s3 * (AI0 * f + AIP0 * g),
        aip: AI0 * fp - AIP0 * gp,
        bip: s3 * (AI0 * fp + AIP0 * gp),
    }
}

/// Ai and Ai' for x > 0 from modified Bessel functions of order 1/3, 2/3.
fn ai_via_bessel(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    let decay = (-zeta).exp();
    let k13 = k_scaled_real_order(1.0 / 3.0, zeta) * decay;
    let k23 = k_scaled_real_order(2.0 / 3.0, zeta) * decay;
    let ai = (x / 3.0).sqrt() * k13 / PI;
    let aip = -x * k23 / (PI * 3f64.sqrt());
    (ai, aip)
}

/// Asymptotic Bi, Bi' for large positive x.
fn bi_asymptotic(x: f64) -> Result<(f64, f64), EvalError> {
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    let (mut su, mut sv) = (1.0f64, 1.0f64);
    let mut u = 1.0;
    let mut zpow = 1.0;
    for k in 1..60 {
        let kf = k as f64;
        u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
        let v = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u;
        zpow *= zeta;
        let tu = u / zpow;
        let tv = v / zpow;
        if tu.abs() < 1e-17 * su.abs() && tv.abs() < 1e-17 * sv.abs() {
            break;
        }
        su += tu;
        sv += tv;
    }
    let grow = zeta.exp();
    let q = x.powf(0.25);
    let bi = grow / (PI.sqrt() * q) * su;
    let bip = q * grow / PI.sqrt() * sv;
    if bi.is_finite() && bip.is_finite() {
        Ok((bi, bip))
    } else {
        Err(EvalError::overflow("Bi", x))
    }
}

/// Marches y'' = x y from `start` to `x` by Taylor re-expansion.
/// Each state is (y, y') for Ai and Bi.
fn march(start: f64, x: f64, mut state: [(f64, f64); 2]) -> [(f64, f64); 2] {
    let mut c = start;
    let mut a = [0.0f64; 80];
    while c != x {
        let hmax = 0.5f64.min(1.5 / c.abs().sqrt());
        let h = if (x - c).abs() <= hmax { x - c } else { hmax * (x - c).signum() };
        for s in state.iter_mut() {
            a[0] = s.0;
            a[1] = s.1;
            a[2] = c * a[0] / 2.0;
            let mut n = 3;
            while n < a.len() {
                let k = (n - 2) as f64;
                a[n] = (c * a[n - 2] + a[n - 3]) / ((k + 2.0) * (k + 1.0));
                n += 1;
                if n > 12 && (a[n - 1] * h.powi(n as i32 - 1)).abs() < 1e-19 * (a[0].abs() + a[1].abs()) {
                    break;
                }
            }
            let (mut y, mut yp) = (0.0, 0.0);
            for j in (0..n).rev() {
                y = y * h + a[j];
                if j > 0 {
                    yp = yp * h + j as f64 * a[j];
                }
            }
            *s = (y, yp);
        }
        c = if (x - c).abs() <= hmax { x } else { c + h };
    }
    state
}

/// Ai(x) and Ai'(x).
pub fn airy_ai(x: f64) -> Result<(f64, f64), EvalError> {
    if x.is_nan() || x < MIN_X {
        return Err(EvalError::domain("Ai", x));
    }
    if x > SERIES_LIMIT {
        Ok(ai_via_bessel(x))
    } else {
        let v = airy(x)?;
        Ok((v.ai, v.aip))
    }
}

/// Bi(x) and Bi'(x); overflow beyond x ≈ 104.
pub fn airy_bi(x: f64) -> Result<(f64, f64), EvalError> {
    if x.is_nan() || x < MIN_X {
        return Err(EvalError::domain("Bi", x));
    }
    if x > BI_SERIES_LIMIT {
        bi_asymptotic(x)
    } else {
        let v = airy(x)?;
        Ok((v.bi, v.bip))
    }
}

/// All four Airy values at `x`, `-100 <= x`.
pub fn airy(x: f64) -> Result<AiryValues, EvalError> {
    if x.is_nan() || x < MIN_X {
        return Err(EvalError::domain("Airy", x));
    }
    if x.abs() <= SERIES_LIMIT {
        return Ok(from_maclaurin(x));
    }
    if x < 0.0 {
        let start = from_maclaurin(-SERIES_LIMIT);
        let [(ai, aip), (bi, bip)] = march(-SERIES_LIMIT, x, [(start.ai, start.aip), (start.bi, start.bip)]);
        return Ok(AiryValues { ai, bi, aip, bip });
    }
    let (ai, aip) = ai_via_bessel(x);
    let (bi, bip) = if x <= BI_SERIES_LIMIT {
        let v = from_maclaurin(x);
        (v.bi, v.bip)
    } else {
        bi_asymptotic(x)?
    };
    Ok(AiryValues { ai, bi, aip, bip })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma::gamma;

    // mpmath reference values: x, Ai, Bi, Ai', Bi'
    const TABLE: [[f64; 5]; 11] = [
        [-10.0, 0.040241238486443191, -0.31467982964383863, 0.99626504413279006, 0.11941411339990924],
        [-7.5, 0.32177571638064788, -0.11246348507649081, 0.3188095066985546, 0.87780228154576092],
        [-4.5, 0.29215278105595947, 0.25387265769693264, -0.5233625323157477, 0.63474476777366371],
        [-2.0, 0.22740742820168558, -0.41230258795639849, 0.61825902074169104, 0.27879516692116952],
        [-1.0, 0.53556088329235212, 0.10399738949694461, -0.010160567116645209, 0.59237562642279235],
        [0.5, 0.23169360648083349, 0.85427704310315549, -0.22491053266468389, 0.5445725641405923],
        [2.0, 0.034924130423274379, 3.2980949999782147, -0.053090384433653632, 4.1006820499328899],
        [3.3, 0.0037872884268267546, 23.248303262941572, -0.0071424877858847401, 40.202685120884529],
        [4.5, 0.00033025032351430898, 227.58808183559972, -0.00071786656755750889, 469.1350773279664],
        [7.0, 7.4921288639971671e-7, 80327.790709430247, -2.008150894738792e-6, 209552.67087397132],
        [10.0, 1.1047532552898686e-10, 455641153.54822514, -3.5206336767389236e-10, 1429236134.4828658],
    ];

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn matches_reference_table() {
        for row in TABLE {
            let v = airy(row[0]).unwrap();
            let tol = 1e-12;
            assert!(rel(v.ai, row[1]) < tol, "Ai({}) {} vs {}", row[0], v.ai, row[1]);
            assert!(rel(v.bi, row[2]) < tol, "Bi({}) {} vs {}", row[0], v.bi, row[2]);
            assert!(rel(v.aip, row[3]) < tol, "Ai'({}) {} vs {}", row[0], v.aip, row[3]);
            assert!(rel(v.bip, row[4]) < tol, "Bi'({}) {} vs {}", row[0], v.bip, row[4]);
        }
    }

    #[test]
    fn value_at_origin_matches_gamma_closed_form() {
        let closed = gamma(1.0 / 3.0).unwrap() / (2.0 * PI * 3f64.powf(1.0 / 6.0));
        assert!((airy(0.0).unwrap().ai - closed).abs() < 1e-15);
    }

    #[test]
    fn seams_agree() {
        // series vs Bessel route for Ai at the x = 2 seam
        let s = from_maclaurin(2.0);
        let (ai, aip) = ai_via_bessel(2.0);
        assert!(rel(ai, s.ai) < 1e-11 && rel(aip, s.aip) < 1e-11);
        // series vs asymptotic for Bi at x = 12
        let s = from_maclaurin(12.0);
        let (bi, bip) = bi_asymptotic(12.0).unwrap();
        assert!(rel(bi, s.bi) < 1e-11 && rel(bip, s.bip) < 1e-11);
    }

    #[test]
    fn wronskian_is_one_over_pi() {
        let mut x = -30.0;
        while x <= 30.0 {
            let v = airy(x).unwrap();
            let w = v.ai * v.bip - v.aip * v.bi;
            assert!((w - 1.0 / PI).abs() < 1e-10, "x={x} w={w}");
            x += 3.1;
        }
    }

    #[test]
    fn far_field_behaviour() {
        let v = airy(10.0).unwrap();
        assert!(v.ai < 1e-9 && v.bi > 1e3);
        assert!(matches!(airy(-150.0), Err(EvalError::Domain { .. })));
        assert!(matches!(airy_bi(110.0), Err(EvalError::Overflow { .. })));
        assert!(airy_ai(110.0).unwrap().0 >= 0.0);
    }
}
