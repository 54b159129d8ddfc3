//! Adaptive Gauss-Kronrod (7/15) quadrature with bisection of the worst panel.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::EvalError;

/// Tolerances and subdivision budget for the adaptive integrator.
///
/// `base_point` is the lower limit used by indefinite integrals such as
/// the Hermite second-kind function; `None` lets the caller pick it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    pub base_point: Option<f64>,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { abs_tol: 1e-10, rel_tol: 1e-9, max_subdivisions: 2000, base_point: None }
    }
}

impl QuadratureSpec {
    pub fn is_valid(&self) -> bool {
        self.abs_tol > 0.0 && self.rel_tol > 0.0 && self.max_subdivisions >= 1
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod15<F>(f: &mut F, a: f64, b: f64) -> Result<Panel, EvalError>
where
    F: FnMut(f64) -> Result<f64, EvalError>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center)?;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx)? + f(center + dx)?;
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    if !value.is_finite() {
        return Err(EvalError::overflow("quadrature", center));
    }
    Ok(Panel { a, b, value, error })
}

/// Integrates `f` over `[a, b]` (either orientation) to the tolerances of `spec`.
pub fn integrate<F>(mut f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<f64, EvalError>
where
    F: FnMut(f64) -> Result<f64, EvalError>,
{
    if a == b {
        return Ok(0.0);
    }
    if b < a {
        return integrate(f, b, a, spec).map(|v| -v);
    }
    let first = kronrod15(&mut f, a, b)?;
    let mut total = first.value;
    let mut total_err = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let mut panels = 1;
    loop {
        let target = spec.abs_tol.max(spec.rel_tol * total.abs());
        if total_err <= target {
            return Ok(total);
        }
        if panels >= spec.max_subdivisions {
            return Err(EvalError::Quadrature { subdivisions: panels, error: total_err });
        }
        let worst = heap.pop().expect("heap holds every live panel");
        let mid = 0.5 * (worst.a + worst.b);
        let left = kronrod15(&mut f, worst.a, mid)?;
        let right = kronrod15(&mut f, mid, worst.b)?;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        panels += 1;
        if panels % 64 == 0 {
            // re-sum to shed accumulated cancellation in the running totals
            total = heap.iter().map(|p| p.value).sum();
            total_err = heap.iter().map(|p| p.error).sum();
        }
    }
}
