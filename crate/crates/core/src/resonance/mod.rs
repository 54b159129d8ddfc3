//! Resonant particular solutions u_p = ∂u/∂λ and repeated roots ∂^k u/∂λ^k
//! built from known homogeneous families of (M - λ(μ)) y = 0.

mod catalog;
mod fixtures;

use serde::Serialize;

use crate::error::{Error, EvalError, Result};
use crate::jets::{self, Jet};
use crate::specfun::FunctionDomain;
use crate::symexpr::{Expr, LinearOperator};
use crate::verify::Grid;

pub use catalog::{catalog, row, ROW_IDS};
pub use fixtures::{bessel_sixth_order, modified_bessel_fourth_order, Fixture, FixtureMember};

/// How μ enters the homogeneous solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParameterRole {
    /// u(μx)
    ArgumentScale,
    /// x^μ
    Exponent,
    /// order or degree of the function
    Degree,
}

/// A family of operators M - λ(μ), with λ a polynomial in μ.
#[derive(Debug, Clone, Serialize)]
pub struct OperatorFamily {
    pub name: &'static str,
    pub order: usize,
    /// M as a linear operator in x.
    pub m_hat: LinearOperator,
    /// Printable form of M.
    pub m_text: &'static str,
    /// λ(μ) coefficients, ascending powers of μ.
    pub eigen_poly: Vec<f64>,
    pub eigen_text: &'static str,
    pub role: ParameterRole,
}

impl OperatorFamily {
    pub fn lambda(&self, mu: f64) -> f64 {
        self.eigen_poly.iter().rev().fold(0.0, |acc, c| acc * mu + c)
    }

    pub fn dlambda_dmu(&self, mu: f64) -> f64 {
        self.eigen_poly.iter().enumerate().skip(1).rev().fold(0.0, |acc, (i, c)| acc * mu + i as f64 * c)
    }

    /// M - λ(μ).
    pub fn operator(&self, mu: f64) -> LinearOperator {
        self.m_hat.shifted(self.lambda(mu))
    }
}

pub type ExprFn = fn(f64) -> Expr;
pub type ValueFn = fn(f64, f64) -> std::result::Result<f64, EvalError>;
pub type RepeatedFn = fn(f64, usize) -> Option<Expr>;

/// One homogeneous solution u(x; μ) with its constructions.
#[derive(Debug, Clone)]
pub struct Member {
    pub label: &'static str,
    /// u(x; μ) in printable form with a symbolic μ.
    pub display: &'static str,
    pub homogeneous: ExprFn,
    /// Closed-form ∂u/∂λ, when known.
    pub resonant: Option<ExprFn>,
    pub resonant_display: Option<&'static str>,
    /// u(x; μ) for real μ, used by the generic finite-difference path.
    pub value: Option<ValueFn>,
    /// Closed-form k-th repeated root beyond what the chain rule provides.
    pub repeated: Option<RepeatedFn>,
    pub note: Option<&'static str>,
}

#[derive(Debug, Clone)]
pub struct SolutionFamily {
    pub members: Vec<Member>,
    pub domain: fn(f64) -> std::result::Result<FunctionDomain, EvalError>,
}

/// A row of the catalog: operator family, homogeneous solutions and the
/// resonant closed forms.
#[derive(Debug, Clone)]
pub struct CatalogRow {
    pub id: &'static str,
    pub title: &'static str,
    pub operator: OperatorFamily,
    pub homogeneous: SolutionFamily,
    /// Probe grid for a given μ.
    pub probe: fn(f64) -> std::result::Result<Grid, EvalError>,
    /// Parameters exercised by the verification suite.
    pub test_parameters: Vec<f64>,
    /// Largest repeated-root order with a closed form.
    pub max_repeated: usize,
}

impl CatalogRow {
    pub fn member(&self, label: &str) -> Result<&Member> {
        self.homogeneous
            .members
            .iter()
            .find(|m| m.label == label)
            .ok_or_else(|| Error::UnknownMember { row: self.id.to_string(), member: label.to_string() })
    }

    pub fn check_parameter(&self, mu: f64) -> Result<()> {
        let bad = |reason: &str| Err(Error::ParameterOutOfRange { value: mu, reason: reason.to_string() });
        if !mu.is_finite() {
            return bad("must be finite");
        }
        match self.operator.role {
            ParameterRole::ArgumentScale if mu <= 0.0 => bad("scale parameter must be positive"),
            ParameterRole::Degree if mu.fract() != 0.0 || !(0.0..=12.0).contains(&mu) => {
                bad("degree must be an integer in 0..=12")
            }
            _ => Ok(()),
        }
    }

    pub fn homogeneous_expr(&self, label: &str, mu: f64) -> Result<Expr> {
        self.check_parameter(mu)?;
        Ok((self.member(label)?.homogeneous)(mu).simplify())
    }

    pub fn domain(&self, mu: f64) -> Result<FunctionDomain> {
        self.check_parameter(mu)?;
        Ok((self.homogeneous.domain)(mu)?)
    }

    pub fn probe_grid(&self, mu: f64) -> Result<Grid> {
        self.check_parameter(mu)?;
        Ok((self.probe)(mu)?)
    }
}

/// Closed-form u_p = ∂u/∂λ for a member, with μ substituted.
pub fn resonant_solution(row: &CatalogRow, label: &str, mu: f64) -> Result<Expr> {
    row.check_parameter(mu)?;
    let m = row.member(label)?;
    match m.resonant {
        Some(f) => Ok(f(mu).simplify()),
        None => Err(Error::Unsupported(format!(
            "resonant form of {}/{}{}",
            row.id,
            label,
            m.note.map(|n| format!(" ({n})")).unwrap_or_default()
        ))),
    }
}

/// ∂^j/∂μ^j of u(μx) as an expression: x^j μ^-j D^j u.
fn scale_mu_derivative(u: &Expr, mu: f64, j: usize) -> Expr {
    let dj = u.nth_derivative(j);
    (mu.powi(-(j as i32)) * Expr::X.powi(j as i32) * dj).simplify()
}

/// k-th repeated root, 1 <= k <= 4.
pub fn repeated_root(row: &CatalogRow, label: &str, mu: f64, k: usize) -> Result<Expr> {
    row.check_parameter(mu)?;
    if !(1..=jets::MAX_ORDER).contains(&k) {
        return Err(Error::ParameterOutOfRange { value: k as f64, reason: "root order must be in 1..=4".into() });
    }
    let m = row.member(label)?;
    if k > row.max_repeated {
        return Err(Error::Unsupported(format!("repeated root k={k} for row {}", row.id)));
    }
    if let Some(f) = m.repeated {
        return f(mu, k).map(|e| e.simplify()).ok_or_else(|| Error::Unsupported(format!("repeated root k={k} for {}/{label}", row.id)));
    }
    if k == 1 {
        return resonant_solution(row, label, mu);
    }
    if row.operator.role != ParameterRole::ArgumentScale {
        return Err(Error::Unsupported(format!("repeated root k={k} for row {}", row.id)));
    }
    // ∂^k/∂λ^k = Σ_j a_{k,j} ∂^j/∂μ^j, with the μ-derivatives exact
    let coeffs = jets::chain_rule_coefficients(mu, k, &row.operator.eigen_poly)?;
    let u = (m.homogeneous)(mu);
    let terms = (1..=k).map(|j| coeffs[j] * scale_mu_derivative(&u, mu, j)).collect();
    Ok(Expr::Sum(terms).simplify())
}

/// Jet of the member in ε = μ - μ0 at one x.
pub fn member_jet(row: &CatalogRow, label: &str, x: f64, mu: f64, order: usize, h: f64) -> Result<Jet> {
    let m = row.member(label)?;
    let value = m
        .value
        .ok_or_else(|| Error::Unsupported(format!("real-parameter evaluation of {}/{label}", row.id)))?;
    Ok(jets::jet_of_solution(&value, x, mu, order, h)?)
}

/// ∂^k u/∂λ^k sampled at `xs` through finite-difference jets in μ and the
/// chain rule through λ(μ). k = 0 returns the member itself.
pub fn generic_resonant(row: &CatalogRow, label: &str, mu: f64, xs: &[f64], k: usize) -> Result<Vec<f64>> {
    row.check_parameter(mu)?;
    if k == 0 {
        let e = row.homogeneous_expr(label, mu)?;
        return xs.iter().map(|&x| Ok(e.eval(x)?)).collect();
    }
    let h = jets::default_step(mu);
    xs.iter()
        .map(|&x| {
            let jet = member_jet(row, label, x, mu, k, h)?;
            Ok(jets::to_eigenvalue_jet(&jet, &row.operator.eigen_poly)?.derivative(k))
        })
        .collect()
}

/// ∂^k u/∂μ^k sampled at `xs` by finite differences (no chain rule).
pub fn generic_mu_derivative(row: &CatalogRow, label: &str, mu: f64, xs: &[f64], k: usize) -> Result<Vec<f64>> {
    row.check_parameter(mu)?;
    let h = jets::default_step(mu);
    xs.iter().map(|&x| Ok(member_jet(row, label, x, mu, k.max(1), h)?.derivative(k))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symexpr::parse;

    #[test]
    fn table_closed_forms() {
        let h = row("harmonic").unwrap();
        assert_eq!(resonant_solution(&h, "sin", 1.0).unwrap().to_string(), "-x*cos(x)/2");
        let e = row("equidim").unwrap();
        assert_eq!(resonant_solution(&e, "pow", 2.0).unwrap().to_string(), "log(x)*pow(2,x)");
        let b = row("bessel0").unwrap();
        assert_eq!(resonant_solution(&b, "J", 1.0).unwrap().to_string(), "x*J(1,x)/2");
        let a = row("airy").unwrap();
        assert_eq!(resonant_solution(&a, "Ai", 1.0).unwrap().to_string(), "x*AiP(x)/3");
        let l = row("legendre").unwrap();
        assert_eq!(resonant_solution(&l, "P", 3.0).unwrap().to_string(), "-Pd(3,x)/7");
        assert!(matches!(resonant_solution(&l, "Q", 3.0), Err(Error::Unsupported(_))));
    }

    #[test]
    fn parameter_and_member_errors() {
        let l = row("legendre").unwrap();
        assert!(matches!(resonant_solution(&l, "P", 2.5), Err(Error::ParameterOutOfRange { .. })));
        let h = row("harmonic").unwrap();
        assert!(matches!(resonant_solution(&h, "tan", 1.0), Err(Error::UnknownMember { .. })));
        assert!(matches!(resonant_solution(&h, "sin", -1.0), Err(Error::ParameterOutOfRange { .. })));
        assert!(matches!(row("nope"), Err(Error::UnknownRow(_))));
        assert!(matches!(repeated_root(&h, "sin", 1.0, 5), Err(Error::ParameterOutOfRange { .. })));
        let hm = row("hermite").unwrap();
        assert!(matches!(repeated_root(&hm, "H", 2.0, 2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn bessel_repeated_roots() {
        let b = row("bessel0").unwrap();
        assert_eq!(repeated_root(&b, "J", 1.0, 2).unwrap().to_string(), "x^2*J(2,x)");
        assert_eq!(repeated_root(&b, "Y", 2.0, 3).unwrap(), parse("x^3*Y(3,2*x)").unwrap());
    }

    #[test]
    fn equidimensional_log_powers() {
        let e = row("equidim").unwrap();
        assert_eq!(repeated_root(&e, "pow", 0.5, 1).unwrap(), parse("pow(0.5,x)*log(x)").unwrap());
        assert_eq!(repeated_root(&e, "pow", -1.0, 3).unwrap(), parse("pow(-1,x)*log(x)^3").unwrap());
    }

    #[test]
    fn harmonic_second_root_matches_finite_differences() {
        let h = row("harmonic").unwrap();
        let mu = 1.0;
        let e = repeated_root(&h, "sin", mu, 2).unwrap();
        let xs = [0.5, 1.0, 2.0];
        let fd = generic_resonant(&h, "sin", mu, &xs, 2).unwrap();
        for (x, g) in xs.iter().zip(fd) {
            let v = e.eval(*x).unwrap();
            assert!((v - g).abs() < 1e-6 * v.abs().max(1.0), "x={x}: {v} vs {g}");
        }
    }

    #[test]
    fn generic_path_matches_table() {
        let h = row("harmonic").unwrap();
        let xs = [0.5, 1.0, 2.0];
        let g = generic_resonant(&h, "sin", 1.0, &xs, 1).unwrap();
        for (x, v) in xs.iter().zip(g) {
            assert!((v + x * x.cos() / 2.0).abs() < 1e-7);
        }
        let z = generic_resonant(&h, "sin", 1.0, &xs, 0).unwrap();
        assert_eq!(z, xs.iter().map(|x| x.sin()).collect::<Vec<_>>());
    }

    #[test]
    fn hermite_generic_degree_derivative() {
        let r = row("hermite").unwrap();
        let g = generic_resonant(&r, "H", 2.0, &[1.9], 1).unwrap()[0];
        let want = -crate::specfun::hermite_h_deg_deriv(2, 1.9).unwrap() / 2.0;
        assert!((g - want).abs() < 1e-5 * want.abs());
    }

    #[test]
    fn chain_rule_consistency() {
        let a = row("airy").unwrap();
        let xs = [0.3, 1.1, 2.9];
        let mu = 1.5;
        let lam = generic_resonant(&a, "Ai", mu, &xs, 1).unwrap();
        let dmu = generic_mu_derivative(&a, "Ai", mu, &xs, 1).unwrap();
        let factor = 1.0 / a.operator.dlambda_dmu(mu);
        for (l, d) in lam.iter().zip(dmu) {
            assert!((l - factor * d).abs() <= 1e-9 * l.abs().max(1e-300));
        }
    }

    #[test]
    fn eigen_maps() {
        let l = row("legendre").unwrap();
        assert_eq!(l.operator.lambda(3.0), -12.0);
        assert_eq!(l.operator.dlambda_dmu(3.0), -7.0);
        let a = row("airy").unwrap();
        assert_eq!(a.operator.lambda(2.0), 8.0);
        assert_eq!(a.operator.dlambda_dmu(2.0), 12.0);
    }
}
