//! Closed-form solutions of two resonantly forced boundary value problems:
//!
//! * Airy: x⁻¹y'' - y = Ai(x), y(0) = 1, y → 0 as x → ∞.
//! * Legendre: ((1-x²)y')' + n(n+1)y = P_n(x), y(1) = 1, y finite on (-1, 1].

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun::gamma;
use crate::symexpr::{Expr, FuncKind, LinearOperator};

pub const MAX_LEGENDRE_DEGREE: u32 = 8;

/// Point where the Airy decay condition is checked.
pub const AIRY_DECAY_POINT: f64 = 8.0;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryResidual {
    pub condition: String,
    pub achieved: f64,
    pub target: f64,
    pub tolerance: f64,
    pub satisfied: bool,
}

impl BoundaryResidual {
    fn new(condition: &str, achieved: f64, target: f64, tolerance: f64) -> Self {
        BoundaryResidual {
            condition: condition.to_string(),
            achieved,
            target,
            tolerance,
            satisfied: (achieved - target).abs() <= tolerance,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BvpSolution {
    pub problem: String,
    pub solution: Expr,
    /// Alternative rendering where a basis function has an elementary form.
    pub display: String,
    /// The operator L with L[y] = forcing.
    pub operator: LinearOperator,
    pub forcing: Expr,
    pub constants: BTreeMap<String, f64>,
    pub boundary: Vec<BoundaryResidual>,
    pub notes: Vec<String>,
}

impl BvpSolution {
    pub fn all_satisfied(&self) -> bool {
        self.boundary.iter().all(|b| b.satisfied)
    }
}

/// Coefficient of Ai in the Airy solution: 2π 3^{1/6} / Γ(1/3).
pub fn airy_constant() -> f64 {
    let g = gamma(1.0 / 3.0).expect("Γ(1/3) is finite");
    2.0 * PI * 3f64.powf(1.0 / 6.0) / g
}

/// y = c1 Ai(x) + x Ai'(x)/3 with c1 = 2π 3^{1/6}/Γ(1/3) and no Bi component.
pub fn solve_airy_bvp() -> Result<BvpSolution> {
    let c1 = airy_constant();
    let solution = (c1 * Expr::func(FuncKind::Ai, 1.0) + (1.0 / 3.0) * Expr::X * Expr::func(FuncKind::AiP, 1.0)).simplify();
    let operator = LinearOperator::new(vec![Expr::Const(-1.0), Expr::Const(0.0), Expr::X.powi(-1)]);
    let y0 = solution.eval(0.0)?;
    let yinf = solution.eval(AIRY_DECAY_POINT)?;
    let mut constants = BTreeMap::new();
    constants.insert("c1".to_string(), c1);
    constants.insert("c2".to_string(), 0.0);
    Ok(BvpSolution {
        problem: "airy".into(),
        display: solution.to_string(),
        solution,
        operator,
        forcing: Expr::func(FuncKind::Ai, 1.0),
        constants,
        boundary: vec![
            BoundaryResidual::new("y(0) = 1", y0, 1.0, 1e-12),
            BoundaryResidual::new("y(8) ~ 0 (decay)", yinf, 0.0, 1e-5),
        ],
        notes: vec!["c2 multiplies Bi(x), which grows without bound, so decay forces c2 = 0".into()],
    })
}

/// y = P_n(x) - P_{n,1}(x)/(2n+1), 0 <= n <= 8; the Q_n coefficient vanishes
/// because Q_n is unbounded at x = 1.
pub fn solve_legendre_bvp(n: u32) -> Result<BvpSolution> {
    if n > MAX_LEGENDRE_DEGREE {
        return Err(Error::ParameterOutOfRange {
            value: n as f64,
            reason: format!("Legendre BVP degree must be in 0..={MAX_LEGENDRE_DEGREE}"),
        });
    }
    let nf = n as f64;
    let p = Expr::ordered(FuncKind::P, n, 1.0);
    let solution = (p.clone() + (-1.0 / (2.0 * nf + 1.0)) * Expr::ordered(FuncKind::Pd, n, 1.0)).simplify();
    let operator = LinearOperator::new(vec![
        Expr::Const(nf * (nf + 1.0)),
        Expr::Const(-2.0) * Expr::X,
        Expr::Const(1.0) - Expr::X.powi(2),
    ]);
    let y1 = solution.eval(1.0)?;
    let mut constants = BTreeMap::new();
    constants.insert("c1".to_string(), 1.0);
    constants.insert("c2".to_string(), 0.0);
    let mut notes = vec!["c2 multiplies Q_n(x), which diverges at x = 1, so finiteness forces c2 = 0".to_string()];
    let display = if n == 0 {
        notes.push("Pd(0,x) = log((x+1)/2)".into());
        "1 - log((x+1)/2)".to_string()
    } else {
        solution.to_string()
    };
    Ok(BvpSolution {
        problem: format!("legendre(n={n})"),
        solution,
        display,
        operator,
        forcing: p,
        constants,
        boundary: vec![BoundaryResidual::new("y(1) = 1", y1, 1.0, 1e-10)],
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_residual(s: &BvpSolution, a: f64, b: f64, n: usize) -> f64 {
        let r = Expr::Sum(vec![s.operator.apply(&s.solution), Expr::Const(-1.0) * s.forcing.clone()]).simplify();
        (0..n)
            .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
            .map(|x| r.eval(x).unwrap().abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn airy_boundary_and_residual() {
        let s = solve_airy_bvp().unwrap();
        assert!((s.solution.eval(0.0).unwrap() - 1.0).abs() < 1e-12);
        assert!(s.solution.eval(8.0).unwrap().abs() < 1e-5);
        assert!(s.all_satisfied());
        assert!(max_residual(&s, 0.1, 5.0, 200) < 1e-9);
    }

    #[test]
    fn legendre_boundary_and_residual() {
        for n in 0..=MAX_LEGENDRE_DEGREE {
            let s = solve_legendre_bvp(n).unwrap();
            assert!((s.solution.eval(1.0).unwrap() - 1.0).abs() < 1e-10, "n={n}");
            assert!(max_residual(&s, -0.9, 1.0, 200) < 1e-7, "n={n}");
        }
        assert!(matches!(solve_legendre_bvp(9), Err(Error::ParameterOutOfRange { .. })));
    }

    #[test]
    fn legendre_degree_zero_collapses_to_log() {
        let s = solve_legendre_bvp(0).unwrap();
        assert_eq!(s.solution.to_string(), "1 - Pd(0,x)");
        assert_eq!(s.display, "1 - log((x+1)/2)");
        for x in [-0.9f64, 0.0, 0.5] {
            let want = 1.0 - (0.5 * (x + 1.0)).ln();
            assert!((s.solution.eval(x).unwrap() - want).abs() < 1e-15);
        }
    }
}
