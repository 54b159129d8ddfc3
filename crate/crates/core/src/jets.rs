//! Truncated Taylor series ("jets") in a continuation parameter ε, and
//! finite-difference jets of a parameterized solution family.
//!
//! A jet of order K at base point b stores c_0..c_K with
//! f(b + ε) = Σ c_k ε^k + O(ε^{K+1}).

use serde::Serialize;

use crate::error::{EvalError, JetError};
use crate::series;

pub const MAX_ORDER: usize = 4;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Jet {
    pub base: f64,
    pub coeffs: Vec<f64>,
}

/// Something evaluable at (x, μ): a one-parameter family of functions of x.
pub trait ParamFamily {
    fn value(&self, x: f64, mu: f64) -> Result<f64, EvalError>;
}

impl<F> ParamFamily for F
where
    F: Fn(f64, f64) -> Result<f64, EvalError>,
{
    fn value(&self, x: f64, mu: f64) -> Result<f64, EvalError> {
        self(x, mu)
    }
}

fn check_order(k: usize) -> Result<(), JetError> {
    if (1..=MAX_ORDER).contains(&k) {
        Ok(())
    } else {
        Err(JetError::Order(k))
    }
}

impl Jet {
    pub fn new(base: f64, coeffs: Vec<f64>) -> Result<Jet, JetError> {
        check_order(coeffs.len().wrapping_sub(1))?;
        Ok(Jet { base, coeffs })
    }

    /// The constant `c` as a jet.
    pub fn constant(base: f64, c: f64, order: usize) -> Result<Jet, JetError> {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = c;
        Jet::new(base, coeffs)
    }

    /// The identity map μ ↦ μ around `base`: coefficients [base, 1, 0, ...].
    pub fn variable(base: f64, order: usize) -> Result<Jet, JetError> {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = base;
        if order >= 1 {
            coeffs[1] = 1.0;
        }
        Jet::new(base, coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// k-th derivative at the base point: k! c_k.
    pub fn derivative(&self, k: usize) -> f64 {
        if k > self.order() {
            0.0
        } else {
            series::derivative_value(&self.coeffs, k)
        }
    }

    fn check_pair(&self, other: &Jet) -> Result<(), JetError> {
        if self.base != other.base || self.order() != other.order() {
            Err(JetError::Mismatch)
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Jet) -> Result<Jet, JetError> {
        self.check_pair(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Jet { base: self.base, coeffs })
    }

    pub fn mul(&self, other: &Jet) -> Result<Jet, JetError> {
        self.check_pair(other)?;
        Ok(Jet { base: self.base, coeffs: series::mul(&self.coeffs, &other.coeffs) })
    }

    pub fn scale(&self, s: f64) -> Jet {
        Jet { base: self.base, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn reciprocal(&self) -> Result<Jet, JetError> {
        let coeffs = series::recip(&self.coeffs).ok_or(JetError::SingularConstantTerm)?;
        Ok(Jet { base: self.base, coeffs })
    }

    /// Polynomial Σ p_i μ^i evaluated on this jet.
    pub fn polynomial(&self, p: &[f64]) -> Jet {
        let mut acc = vec![0.0; self.coeffs.len()];
        for &c in p.iter().rev() {
            acc = series::mul(&acc, &self.coeffs);
            acc[0] += c;
        }
        Jet { base: self.base, coeffs: acc }
    }

    /// Series reversion: given this jet as δ(ε) = Σ_{i>=1} c_i ε^i (c_0 ignored),
    /// returns ε(δ) with zero constant term.
    pub fn revert(&self) -> Result<Jet, JetError> {
        let n = self.coeffs.len();
        let l1 = self.coeffs[1];
        if l1 == 0.0 {
            return Err(JetError::SingularConstantTerm);
        }
        // ε = (δ - Σ_{i>=2} c_i ε^i) / c_1, iterated to a fixed point
        let mut eps = vec![0.0; n];
        eps[1] = 1.0 / l1;
        for _ in 1..n {
            let mut power = eps.clone();
            let mut higher = vec![0.0; n];
            for i in 2..n {
                power = series::mul(&power, &eps);
                for (h, p) in higher.iter_mut().zip(&power) {
                    *h += self.coeffs[i] * p;
                }
            }
            let mut next = vec![0.0; n];
            next[1] = 1.0 / l1;
            for k in 2..n {
                next[k] = -higher[k] / l1;
            }
            eps = next;
        }
        Ok(Jet { base: 0.0, coeffs: eps })
    }

    /// Composition f(g(δ)) where self = f in powers of ε and `inner` = ε(δ)
    /// has zero constant term.
    pub fn compose(&self, inner: &Jet) -> Result<Jet, JetError> {
        if inner.order() != self.order() {
            return Err(JetError::Mismatch);
        }
        let mut g = inner.coeffs.clone();
        g[0] = 0.0;
        let mut acc = vec![0.0; self.coeffs.len()];
        for &c in self.coeffs.iter().rev() {
            acc = series::mul(&acc, &g);
            acc[0] += c;
        }
        Ok(Jet { base: inner.base, coeffs: acc })
    }
}

/// Central-difference estimate of the k-th μ-derivative with stencil points
/// μ + (k/2 - j) h, j = 0..=k.
fn central_difference<F: ParamFamily + ?Sized>(fam: &F, x: f64, mu: f64, k: usize, h: f64) -> Result<f64, EvalError> {
    let mut acc = 0.0;
    let mut binom = 1.0;
    for j in 0..=k {
        if j > 0 {
            binom = binom * (k - j + 1) as f64 / j as f64;
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let point = mu + (k as f64 / 2.0 - j as f64) * h;
        acc += sign * binom * fam.value(x, point)?;
    }
    Ok(acc / h.powi(k as i32))
}

/// Default step 1e-3 max(1, |μ|).
pub fn default_step(mu: f64) -> f64 {
    1e-3 * mu.abs().max(1.0)
}

/// Order-dependent step: derivatives above the second use a tenfold larger
/// step, where roundoff (~ε/h^k) would otherwise dominate.
fn step_for(k: usize, h: f64) -> f64 {
    if k <= 2 {
        h
    } else {
        10.0 * h
    }
}

/// μ-derivative of order k by central differences with one Richardson level.
pub fn mu_derivative<F: ParamFamily + ?Sized>(fam: &F, x: f64, mu: f64, k: usize, h: f64) -> Result<f64, JetError> {
    if !(h > 0.0) {
        return Err(JetError::Step);
    }
    if k == 0 {
        return Ok(fam.value(x, mu)?);
    }
    let h = step_for(k, h);
    let coarse = central_difference(fam, x, mu, k, h)?;
    let fine = central_difference(fam, x, mu, k, 0.5 * h)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// Jet of u(x; μ + ε) in ε, order K: c_0 exact, c_k from finite differences.
pub fn jet_of_solution<F: ParamFamily + ?Sized>(fam: &F, x: f64, mu: f64, order: usize, h: f64) -> Result<Jet, JetError> {
    check_order(order)?;
    if !(h > 0.0) {
        return Err(JetError::Step);
    }
    let mut derivs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        derivs.push(mu_derivative(fam, x, mu, k, h)?);
    }
    Ok(Jet { base: mu, coeffs: series::from_derivatives(&derivs) })
}

/// Re-expand a jet in μ as a jet in λ, given λ(μ) as polynomial coefficients
/// (ascending powers). The result's k-th derivative is ∂^k u/∂λ^k.
pub fn to_eigenvalue_jet(mu_jet: &Jet, lambda_poly: &[f64]) -> Result<Jet, JetError> {
    let mu = Jet::variable(mu_jet.base, mu_jet.order())?;
    let lam = mu.polynomial(lambda_poly);
    let eps_of_delta = lam.revert()?;
    let mut out = mu_jet.compose(&eps_of_delta)?;
    out.base = lam.coeffs[0];
    Ok(out)
}

/// Coefficients a_{k,j}(μ) with ∂^k/∂λ^k = Σ_j a_{k,j} ∂^j/∂μ^j, j = 1..=k
/// (index 0 unused and zero).
pub fn chain_rule_coefficients(mu: f64, k: usize, lambda_poly: &[f64]) -> Result<Vec<f64>, JetError> {
    check_order(k)?;
    // The λ-jet is linear in the μ-derivatives; probe with unit derivative vectors.
    let mut out = vec![0.0; k + 1];
    for (j, slot) in out.iter_mut().enumerate().skip(1) {
        let mut derivs = vec![0.0; k + 1];
        derivs[j] = 1.0;
        let jet = Jet { base: mu, coeffs: series::from_derivatives(&derivs) };
        *slot = to_eigenvalue_jet(&jet, lambda_poly)?.derivative(k);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_one_plus_eps() {
        let a = Jet::new(0.0, vec![1.0, 1.0, 0.0]).unwrap();
        assert_eq!(a.mul(&a).unwrap().coeffs, vec![1.0, 2.0, 1.0]);
    }

    #[test]
    fn reciprocal_long_division() {
        let a = Jet::new(0.0, vec![2.0, 1.0, 0.0]).unwrap();
        assert_eq!(a.reciprocal().unwrap().coeffs, vec![0.5, -0.25, 0.125]);
        let z = Jet::new(0.0, vec![0.0, 2.0, 1.0]).unwrap();
        assert_eq!(z.reciprocal(), Err(JetError::SingularConstantTerm));
    }

    #[test]
    fn order_and_mismatch_errors() {
        assert_eq!(Jet::new(0.0, vec![1.0]), Err(JetError::Order(0)));
        assert_eq!(Jet::new(0.0, vec![1.0; 6]), Err(JetError::Order(5)));
        let a = Jet::new(0.0, vec![1.0, 1.0]).unwrap();
        let b = Jet::new(1.0, vec![1.0, 1.0]).unwrap();
        assert_eq!(a.add(&b), Err(JetError::Mismatch));
    }

    #[test]
    fn sine_family_first_coefficient() {
        let fam = |x: f64, mu: f64| Ok((mu * x).sin());
        let j = jet_of_solution(&fam, 1.0, 1.0, 1, default_step(1.0)).unwrap();
        assert_eq!(j.coeffs[0], 1f64.sin());
        assert!((j.coeffs[1] - 1f64.cos()).abs() < 1e-8);
    }

    #[test]
    fn power_family_log_derivative() {
        let e = std::f64::consts::E;
        let fam = |x: f64, mu: f64| Ok(x.powf(mu));
        let j = jet_of_solution(&fam, e, 2.0, 1, default_step(2.0)).unwrap();
        assert!((j.coeffs[1] / (e * e) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn step_self_consistency() {
        let fam = |x: f64, mu: f64| Ok((mu * x).cos() * x.powf(mu));
        let a = jet_of_solution(&fam, 1.7, 1.3, 1, 1e-3).unwrap();
        let b = jet_of_solution(&fam, 1.7, 1.3, 1, 5e-4).unwrap();
        assert!((a.coeffs[1] - b.coeffs[1]).abs() < 1e-7 * a.coeffs[1].abs());
    }

    #[test]
    fn higher_orders_of_exponential() {
        let fam = |x: f64, mu: f64| Ok((mu * x).exp());
        let j = jet_of_solution(&fam, 0.8, 0.5, 4, default_step(0.5)).unwrap();
        for k in 0..=4 {
            let want = 0.8f64.powi(k as i32) * 0.4f64.exp();
            assert!((j.derivative(k) - want).abs() < 1e-5 * want, "k={k}");
        }
    }

    #[test]
    fn eigenvalue_jet_matches_hand_chain_rule() {
        // λ = -μ²: ∂u/∂λ = -u_μ/(2μ), ∂²u/∂λ² = u_μμ/(4μ²) - u_μ/(4μ³)
        let mu = 1.7;
        let (d1, d2) = (0.3, -1.1);
        let jet = Jet::new(mu, vec![0.9, d1, d2 / 2.0]).unwrap();
        let lam = to_eigenvalue_jet(&jet, &[0.0, 0.0, -1.0]).unwrap();
        assert!((lam.base + mu * mu).abs() < 1e-15);
        assert!((lam.derivative(1) + d1 / (2.0 * mu)).abs() < 1e-14);
        let want = d2 / (4.0 * mu * mu) - d1 / (4.0 * mu.powi(3));
        assert!((lam.derivative(2) - want).abs() < 1e-14);
        let c = chain_rule_coefficients(mu, 2, &[0.0, 0.0, -1.0]).unwrap();
        assert!((c[1] + 1.0 / (4.0 * mu.powi(3))).abs() < 1e-14);
        assert!((c[2] - 1.0 / (4.0 * mu * mu)).abs() < 1e-14);
    }

    #[test]
    fn revert_then_compose_is_identity() {
        let f = Jet::new(0.0, vec![0.0, 2.0, 0.5, -0.3, 0.1]).unwrap();
        let g = f.revert().unwrap();
        let id = f.compose(&g).unwrap();
        let want = [0.0, 1.0, 0.0, 0.0, 0.0];
        for (a, b) in id.coeffs.iter().zip(want) {
            assert!((a - b).abs() < 1e-14);
        }
    }
}
