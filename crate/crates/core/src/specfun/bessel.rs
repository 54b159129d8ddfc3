//! Integer-order Bessel functions J, Y, I, K.
//!
//! J and I come from Miller's backward recurrence (power series below x = 1),
//! Y from Neumann series over the same J values plus upward recurrence, and K
//! from the trapezoid rule on K_ν(z) = ∫₀^∞ e^{-z cosh t} cosh νt dt, which
//! converges geometrically in the step size.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::EvalError;

pub const MAX_ORDER: u32 = 32;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BesselKind {
    J,
    Y,
    I,
    K,
}

impl BesselKind {
    pub fn name(self) -> &'static str {
        match self {
            BesselKind::J => "J",
            BesselKind::Y => "Y",
            BesselKind::I => "I",
            BesselKind::K => "K",
        }
    }
}

/// e^z K_ν(z) for z > 0 and real ν.
pub fn k_scaled_real_order(nu: f64, z: f64) -> f64 {
    const H: f64 = 0.05;
    let f = |t: f64| {
        let s = (0.5 * t).sinh();
        (-2.0 * z * s * s).exp() * (nu * t).cosh()
    };
    let mut sum = 0.5 * f(0.0);
    let mut k = 1;
    loop {
        let term = f(k as f64 * H);
        sum += term;
        if term < 1e-18 * sum || k > 20_000 {
            break;
        }
        k += 1;
    }
    sum * H
}

/// J_0..=J_n at x > 0 (plus enough extra orders for Neumann sums).
fn j_values(n: usize, x: f64) -> Vec<f64> {
    let top = n.max(x.ceil() as usize);
    let start = top + 20 + (40.0 * top as f64).sqrt() as usize;
    let start = start + start % 2;
    if x < 1.0 {
        return (0..=start).map(|k| j_series(k, x)).collect();
    }
    let mut j = vec![0.0; start + 2];
    j[start] = 1e-30;
    for m in (1..=start).rev() {
        j[m - 1] = 2.0 * m as f64 / x * j[m] - j[m + 1];
        if j[m - 1].abs() > 1e250 {
            for v in j.iter_mut().skip(m - 1) {
                *v *= 1e-250;
            }
        }
    }
    let norm = j[0] + 2.0 * j.iter().skip(2).step_by(2).sum::<f64>();
    j.truncate(start + 1);
    j.iter().map(|v| v / norm).collect()
}

fn j_series(k: usize, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut term = half.powi(k as i32) / (1..=k).map(|i| i as f64).product::<f64>();
    let mut sum = term;
    let q = -half * half;
    for m in 1..60 {
        term *= q / (m as f64 * (m + k) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

fn i_series(k: usize, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut term = half.powi(k as i32) / (1..=k).map(|i| i as f64).product::<f64>();
    let mut sum = term;
    let q = half * half;
    for m in 1..200 {
        term *= q / (m as f64 * (m + k) as f64);
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    sum
}

fn y_values(n: usize, x: f64) -> Vec<f64> {
    let j = j_values(n.max(1), x);
    let log_term = (0.5 * x).ln() + EULER_GAMMA;
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    let mut k = 1;
    while 2 * k + 1 < j.len() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        s0 += sign * j[2 * k] / k as f64;
        s1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / k as f64;
        k += 1;
    }
    let y0 = 2.0 / PI * log_term * j[0] - 4.0 / PI * s0;
    let y1 = -2.0 / PI * j[0] / x + 2.0 / PI * log_term * j[1] + 2.0 / PI * s1;
    let mut y = vec![y0, y1];
    for m in 1..n {
        let next = 2.0 * m as f64 / x * y[m] - y[m - 1];
        y.push(next);
    }
    y.truncate(n + 1);
    y
}

fn i_values(n: usize, x: f64) -> Vec<f64> {
    if x < 1.0 {
        return (0..=n).map(|k| i_series(k, x)).collect();
    }
    let top = n.max(x.ceil() as usize);
    let start = top + 40 + (80.0 * x).sqrt() as usize;
    let mut v = vec![0.0; start + 2];
    v[start] = 1e-30;
    for m in (1..=start).rev() {
        v[m - 1] = 2.0 * m as f64 / x * v[m] + v[m + 1];
        if v[m - 1] > 1e250 {
            for w in v.iter_mut().skip(m - 1) {
                *w *= 1e-250;
            }
        }
    }
    let norm = v[0] + 2.0 * v.iter().skip(1).sum::<f64>();
    let scale = x.exp() / norm;
    v.truncate(n + 1);
    v.iter().map(|w| w * scale).collect()
}

fn k_values(n: usize, x: f64) -> Vec<f64> {
    let decay = (-x).exp();
    let mut k = vec![k_scaled_real_order(0.0, x) * decay, k_scaled_real_order(1.0, x) * decay];
    for m in 1..n {
        let next = k[m - 1] + 2.0 * m as f64 / x * k[m];
        k.push(next);
    }
    k.truncate(n + 1);
    k
}

/// Bessel function of the given kind and integer order at `x`.
pub fn bessel(kind: BesselKind, order: u32, x: f64) -> Result<f64, EvalError> {
    let name = kind.name();
    if order > MAX_ORDER {
        return Err(EvalError::order(name, order as i64));
    }
    if x.is_nan() {
        return Err(EvalError::domain(name, x));
    }
    let n = order as usize;
    let parity = if order % 2 == 0 { 1.0 } else { -1.0 };
    let value = match kind {
        BesselKind::J => {
            if x == 0.0 {
                return Ok(if order == 0 { 1.0 } else { 0.0 });
            }
            let v = j_values(n, x.abs())[n];
            if x < 0.0 {
                parity * v
            } else {
                v
            }
        }
        BesselKind::I => {
            if x == 0.0 {
                return Ok(if order == 0 { 1.0 } else { 0.0 });
            }
            if x.abs() > 700.0 {
                return Err(EvalError::overflow(name, x));
            }
            let v = i_values(n, x.abs())[n];
            if x < 0.0 {
                parity * v
            } else {
                v
            }
        }
        BesselKind::Y => {
            if x <= 0.0 {
                return Err(EvalError::domain(name, x));
            }
            y_values(n, x)[n]
        }
        BesselKind::K => {
            if x <= 0.0 {
                return Err(EvalError::domain(name, x));
            }
            k_values(n, x)[n]
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(EvalError::overflow(name, x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // mpmath: x, k, J, Y, I, K
    const TABLE: [(f64, u32, f64, f64, f64, f64); 20] = [
        (0.5, 0, 0.9384698072408129, -0.44451873350670656, 1.0634833707413235, 0.92441907122766586),
        (0.5, 2, 0.030604023458682641, -5.4413708371742657, 0.031906149177738254, 7.5501835512408694),
        (0.5, 4, 0.0001607364763642876, -499.27256081951233, 0.00016480554985482354, 752.24509791040395),
        (1.0, 0, 0.76519768655796655, 0.088256964215676958, 1.2660658777520083, 0.42102443824070833),
        (1.0, 1, 0.44005058574493352, -0.78121282130028872, 0.56515910399248503, 0.60190723019723457),
        (1.0, 3, 0.019563353982668406, -5.8215176059647288, 0.022168424924331902, 7.1012628247379445),
        (2.5, 0, -0.048383776468197996, 0.49807035961523189, 3.289839144050123, 0.062347553200366186),
        (2.5, 1, 0.49709410246427404, 0.1459181379667858, 2.5167162452886984, 0.073890816347747064),
        (2.5, 2, 0.44605905843961723, -0.38133584924180325, 1.2764661478191643, 0.12146020627856384),
        (2.5, 4, 0.073781880054255233, -1.4331973429670071, 0.13797716675187887, 0.76520535762284192),
        (7.3, 0, 0.2882169476350144, 0.062773886374037598, 222.65879987301187, 0.0003083622130609318),
        (7.3, 1, 0.082570430493257831, -0.28459437186807211, 206.79167004622548, 0.00032884199678432632),
        (7.3, 2, -0.26559491188343691, -0.14074494715981078, 166.00354780555283, 0.0003984559108100623),
        (7.3, 3, -0.22810188905952463, 0.20747385287639497, 115.83082193359379, 0.00054717400270764813),
        (20.0, 0, 0.16702466434058315, 0.062640596809383831, 43558282.559553533, 5.7412378153365243e-10),
        (20.0, 2, -0.16034135192299815, -0.079191758245635961, 39312785.221040756, 6.3295436122922281e-10),
        (20.0, 4, 0.13067093355486325, 0.12409373705965419, 28935060.318764871, 8.4742336198968733e-10),
        (50.0, 0, 0.055812327669251815, -0.098064995470077079, 2.9325537838493363e+20, 3.4101677497894955e-23),
        (50.0, 1, -0.097511828125175138, -0.056795668562014768, 2.9030785901035568e+20, 3.4441022267175556e-23),
        (50.0, 3, 0.092734804061634432, 0.064459122060222487, 2.6777641388839413e+20, 3.7279367738262114e-23),
    ];

    #[test]
    fn matches_reference_table() {
        for (x, k, j, y, i, kk) in TABLE {
            for (kind, want) in [(BesselKind::J, j), (BesselKind::Y, y), (BesselKind::I, i), (BesselKind::K, kk)] {
                let got = bessel(kind, k, x).unwrap();
                let rel = (got - want).abs() / want.abs();
                assert!(rel < 1e-10, "{kind:?}_{k}({x}) = {got}, want {want} (rel {rel:e})");
            }
        }
    }

    #[test]
    fn i2_matches_ascending_series_oracle() {
        // Σ (x/2)^{2m+2} / (m! (m+2)!), 40 terms
        let x: f64 = 0.5;
        let mut oracle = 0.0;
        let mut fm = 1.0;
        for m in 0..40 {
            if m > 0 {
                fm *= m as f64;
            }
            let fm2 = fm * (m + 1) as f64 * (m + 2) as f64;
            oracle += (x / 2.0).powi(2 * m + 2) / (fm * fm2);
        }
        let got = bessel(BesselKind::I, 2, x).unwrap();
        assert!((got - oracle).abs() < 1e-12 * oracle);
    }

    #[test]
    fn special_points_and_errors() {
        assert_eq!(bessel(BesselKind::J, 0, 0.0).unwrap(), 1.0);
        assert!(matches!(bessel(BesselKind::Y, 0, 0.0), Err(EvalError::Domain { .. })));
        assert!(matches!(bessel(BesselKind::K, 1, -1.0), Err(EvalError::Domain { .. })));
        assert!(matches!(bessel(BesselKind::I, 0, 800.0), Err(EvalError::Overflow { .. })));
        assert!(matches!(bessel(BesselKind::J, 33, 1.0), Err(EvalError::Order { .. })));
        let j3 = bessel(BesselKind::J, 3, 1.7).unwrap();
        assert_eq!(bessel(BesselKind::J, 3, -1.7).unwrap(), -j3);
    }

    #[test]
    fn recurrences_hold() {
        let xs = [0.1, 0.37, 1.3, 2.9, 5.5, 8.8, 11.0, 14.2, 17.7, 19.9];
        for &x in &xs {
            for k in 1..=4u32 {
                let kf = k as f64;
                let f = |kind, m| bessel(kind, m, x).unwrap();
                let j = f(BesselKind::J, k - 1) + f(BesselKind::J, k + 1);
                let jr = 2.0 * kf / x * f(BesselKind::J, k);
                assert!((j - jr).abs() <= 1e-10 * jr.abs().max(j.abs()).max(1e-3), "J k={k} x={x}");
                let y = f(BesselKind::Y, k - 1) + f(BesselKind::Y, k + 1);
                let yr = 2.0 * kf / x * f(BesselKind::Y, k);
                assert!((y - yr).abs() <= 1e-10 * yr.abs().max(1e-3), "Y k={k} x={x}");
                let i = f(BesselKind::I, k - 1) - f(BesselKind::I, k + 1);
                let ir = 2.0 * kf / x * f(BesselKind::I, k);
                assert!((i - ir).abs() <= 1e-10 * ir.abs(), "I k={k} x={x}");
                let kk = f(BesselKind::K, k + 1) - f(BesselKind::K, k - 1);
                let kr = 2.0 * kf / x * f(BesselKind::K, k);
                assert!((kk - kr).abs() <= 1e-10 * kr.abs(), "K k={k} x={x}");
            }
        }
    }

    #[test]
    fn j0_y0_wronskian() {
        for i in 0..20 {
            let x = 0.2 + 1.37 * i as f64;
            let j0 = bessel(BesselKind::J, 0, x).unwrap();
            let y0 = bessel(BesselKind::Y, 0, x).unwrap();
            let j1 = bessel(BesselKind::J, 1, x).unwrap();
            let y1 = bessel(BesselKind::Y, 1, x).unwrap();
            // J0 Y0' - J0' Y0 with primes -J1, -Y1
            let w = -j0 * y1 + j1 * y0;
            assert!((w - 2.0 / (PI * x)).abs() < 1e-9, "x={x}");
        }
    }
}
