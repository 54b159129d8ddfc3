//! Double-precision kernels for the special functions used by the catalog.

pub mod airy;
pub mod bessel;
pub mod gamma;
pub mod hermite;
pub mod hyper;
pub mod legendre;
pub mod quad;

use serde::{Deserialize, Serialize};

pub use airy::{airy, airy_ai, airy_bi, AiryValues};
pub use bessel::{bessel, BesselKind};
pub use gamma::{gamma, rgamma};
pub use hermite::{
    hermite_g, hermite_g_deg_deriv, hermite_h, hermite_h_deg_deriv, hermite_h_deg_deriv_single_term, hermite_real,
    largest_zero,
};
pub use hyper::{hyp1f1, hyp1f1_with_a_derivative, hyp2f1};
pub use legendre::{jolliffe_deg_deriv, legendre_p, legendre_p_deg_deriv, legendre_p_real_degree, legendre_q};
pub use quad::{integrate, QuadratureSpec};

/// An open interval with isolated excluded points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionDomain {
    pub lower: f64,
    pub upper: f64,
    pub excluded: Vec<f64>,
}

impl FunctionDomain {
    pub fn new(lower: f64, upper: f64) -> Self {
        FunctionDomain { lower, upper, excluded: Vec::new() }
    }

    pub fn whole_line() -> Self {
        Self::new(f64::NEG_INFINITY, f64::INFINITY)
    }

    pub fn positive() -> Self {
        Self::new(0.0, f64::INFINITY)
    }

    pub fn with_excluded(mut self, points: impl IntoIterator<Item = f64>) -> Self {
        self.excluded.extend(points);
        self
    }

    pub fn is_valid(&self) -> bool {
        self.lower < self.upper && self.excluded.iter().all(|&p| p > self.lower && p < self.upper)
    }

    /// True when `x` lies strictly inside and at least `guard` away from every excluded point.
    pub fn contains(&self, x: f64, guard: f64) -> bool {
        x > self.lower && x < self.upper && self.excluded.iter().all(|&p| (x - p).abs() >= guard)
    }

    /// Intersection of two domains.
    pub fn intersect(&self, other: &FunctionDomain) -> FunctionDomain {
        let lower = self.lower.max(other.lower);
        let upper = self.upper.min(other.upper);
        let excluded = self
            .excluded
            .iter()
            .chain(&other.excluded)
            .copied()
            .filter(|&p| p > lower && p < upper)
            .collect();
        FunctionDomain { lower, upper, excluded }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_membership() {
        let d = FunctionDomain::new(-1.0, 1.0).with_excluded([0.0]);
        assert!(d.is_valid());
        assert!(d.contains(0.5, 0.05));
        assert!(!d.contains(0.01, 0.05));
        assert!(!d.contains(1.0, 0.0));
        let i = d.intersect(&FunctionDomain::positive());
        assert_eq!(i.lower, 0.0);
        assert!(i.excluded.is_empty());
    }
}
