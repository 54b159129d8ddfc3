//! Gamma function and its reciprocal.

use std::f64::consts::PI;

use crate::error::EvalError;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// sin(πx) with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0);
    if r == 0.0 || r == 1.0 {
        return 0.0;
    }
    if r == 0.5 {
        return 1.0;
    }
    if r == 1.5 {
        return -1.0;
    }
    (PI * r).sin()
}

fn lanczos_positive(x: f64) -> f64 {
    // x >= 0.5
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    // split the power so Γ(170) does not overflow at the intermediate step
    let half = t.powf((z + 0.5) / 2.0);
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * acc
}

/// Γ(x) for real x, failing at the poles 0, -1, -2, ...
pub fn gamma(x: f64) -> Result<f64, EvalError> {
    if x.is_nan() {
        return Err(EvalError::domain("gamma", x));
    }
    if x <= 0.0 && x.fract() == 0.0 {
        return Err(EvalError::Pole { function: "gamma".into(), x });
    }
    if x > 171.6 {
        return Err(EvalError::overflow("gamma", x));
    }
    let value = if x < 0.5 {
        PI / (sin_pi(x) * lanczos_positive(1.0 - x))
    } else if x.fract() == 0.0 && x <= 23.0 {
        // exact factorial for small integers
        (1..x as u64).fold(1.0, |acc, k| acc * k as f64)
    } else {
        lanczos_positive(x)
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(EvalError::overflow("gamma", x))
    }
}

/// 1/Γ(x), an entire function: exactly zero at the non-positive integers.
pub fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x.fract() == 0.0 {
        return 0.0;
    }
    if x < 0.5 {
        // 1/Γ(x) = sin(πx) Γ(1-x) / π
        sin_pi(x) * lanczos_positive(1.0 - x) / PI
    } else if x > 171.6 {
        0.0
    } else {
        1.0 / lanczos_positive(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_is_sqrt_pi() {
        assert!((gamma(0.5).unwrap() - PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn one_third_matches_pinned_value() {
        // mpmath, 40 digits (scripts/reference_values.py)
        let pinned = 2.678_938_534_707_747_6;
        assert!((gamma(1.0 / 3.0).unwrap() / pinned - 1.0).abs() < 1e-14);
    }

    #[test]
    fn recurrence_and_integers() {
        for &x in &[0.3, 1.7, 4.25, 12.5, 29.1] {
            let lhs = gamma(x + 1.0).unwrap();
            let rhs = x * gamma(x).unwrap();
            assert!((lhs / rhs - 1.0).abs() < 1e-13, "x={x}");
        }
        assert_eq!(gamma(5.0).unwrap(), 24.0);
        assert!((gamma(-0.5).unwrap() + 2.0 * PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn poles() {
        assert!(matches!(gamma(0.0), Err(EvalError::Pole { .. })));
        assert!(matches!(gamma(-3.0), Err(EvalError::Pole { .. })));
        assert_eq!(rgamma(-2.0), 0.0);
        assert!((rgamma(-2.0 + 1e-9) / 2e-9 - 1.0).abs() < 1e-6);
    }
}
