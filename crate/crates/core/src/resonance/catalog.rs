//! The six operator families and their resonant closed forms.

use super::{CatalogRow, Member, OperatorFamily, ParameterRole, SolutionFamily};
use crate::error::{Error, EvalError, Result};
use crate::specfun::{self, hermite, BesselKind, FunctionDomain, QuadratureSpec};
use crate::symexpr::{Expr, FuncKind, LinearOperator};
use crate::verify::Grid;

pub const ROW_IDS: [&str; 6] = ["harmonic", "equidim", "airy", "bessel0", "legendre", "hermite"];

fn c(v: f64) -> Expr {
    Expr::Const(v)
}

fn f(kind: FuncKind, scale: f64) -> Expr {
    Expr::func(kind, scale)
}

fn fo(kind: FuncKind, order: u32, scale: f64) -> Expr {
    Expr::ordered(kind, order, scale)
}

fn degree(mu: f64) -> u32 {
    mu as u32
}

/// Tight quadrature for the real-order Hermite G family, whose order
/// differences amplify integration noise.
fn tight_quadrature() -> QuadratureSpec {
    QuadratureSpec { abs_tol: 1e-12, rel_tol: 1e-12, ..QuadratureSpec::default() }
}

fn whole_line(_: f64) -> std::result::Result<FunctionDomain, EvalError> {
    Ok(FunctionDomain::whole_line())
}

fn positive(_: f64) -> std::result::Result<FunctionDomain, EvalError> {
    Ok(FunctionDomain::positive())
}

fn harmonic() -> CatalogRow {
    CatalogRow {
        id: "harmonic",
        title: "harmonic oscillator",
        operator: OperatorFamily {
            name: "harmonic",
            order: 2,
            m_hat: LinearOperator::new(vec![c(0.0), c(0.0), c(1.0)]),
            m_text: "d^2",
            eigen_poly: vec![0.0, 0.0, -1.0],
            eigen_text: "-mu^2",
            role: ParameterRole::ArgumentScale,
        },
        homogeneous: SolutionFamily {
            members: vec![
                Member {
                    label: "sin",
                    display: "sin(mu*x)",
                    homogeneous: |mu| f(FuncKind::Sin, mu),
                    resonant: Some(|mu| (-1.0 / (2.0 * mu)) * Expr::X * f(FuncKind::Cos, mu)),
                    resonant_display: Some("-x*cos(mu*x)/(2*mu)"),
                    value: Some(|x, mu| Ok((mu * x).sin())),
                    repeated: None,
                    note: None,
                },
                Member {
                    label: "cos",
                    display: "cos(mu*x)",
                    homogeneous: |mu| f(FuncKind::Cos, mu),
                    resonant: Some(|mu| (1.0 / (2.0 * mu)) * Expr::X * f(FuncKind::Sin, mu)),
                    resonant_display: Some("x*sin(mu*x)/(2*mu)"),
                    value: Some(|x, mu| Ok((mu * x).cos())),
                    repeated: None,
                    note: None,
                },
            ],
            domain: whole_line,
        },
        probe: |_| Ok(Grid::linear(0.1, 10.0, 200)),
        test_parameters: vec![1.0, 2.5],
        max_repeated: 4,
    }
}

fn equidim() -> CatalogRow {
    CatalogRow {
        id: "equidim",
        title: "equidimensional (Euler) operator",
        operator: OperatorFamily {
            name: "equidim",
            order: 1,
            m_hat: LinearOperator::new(vec![c(0.0), Expr::X]),
            m_text: "x*d",
            eigen_poly: vec![0.0, 1.0],
            eigen_text: "mu",
            role: ParameterRole::Exponent,
        },
        homogeneous: SolutionFamily {
            members: vec![Member {
                label: "pow",
                display: "pow(mu,x)",
                homogeneous: |mu| Expr::real_power(mu, 1.0),
                resonant: Some(|mu| Expr::real_power(mu, 1.0) * f(FuncKind::Log, 1.0)),
                resonant_display: Some("pow(mu,x)*log(x)"),
                value: Some(|x, mu| {
                    if x > 0.0 {
                        Ok(x.powf(mu))
                    } else {
                        Err(EvalError::Domain { function: "pow".into(), x })
                    }
                }),
                repeated: Some(|mu, k| Some(Expr::real_power(mu, 1.0) * f(FuncKind::Log, 1.0).powi(k as i32))),
                note: None,
            }],
            domain: positive,
        },
        probe: |_| Ok(Grid::linear(0.1, 10.0, 200)),
        test_parameters: vec![-1.0, 0.5, 2.0],
        max_repeated: 4,
    }
}

fn airy() -> CatalogRow {
    CatalogRow {
        id: "airy",
        title: "Airy operator",
        operator: OperatorFamily {
            name: "airy",
            order: 2,
            m_hat: LinearOperator::new(vec![c(0.0), c(0.0), Expr::X.powi(-1)]),
            m_text: "x^-1*d^2",
            eigen_poly: vec![0.0, 0.0, 0.0, 1.0],
            eigen_text: "mu^3",
            role: ParameterRole::ArgumentScale,
        },
        homogeneous: SolutionFamily {
            members: vec![
                Member {
                    label: "Ai",
                    display: "Ai(mu*x)",
                    homogeneous: |mu| f(FuncKind::Ai, mu),
                    resonant: Some(|mu| (1.0 / (3.0 * mu * mu)) * Expr::X * f(FuncKind::AiP, mu)),
                    resonant_display: Some("x*AiP(mu*x)/(3*mu^2)"),
                    value: Some(|x, mu| Ok(specfun::airy_ai(mu * x)?.0)),
                    repeated: None,
                    note: None,
                },
                Member {
                    label: "Bi",
                    display: "Bi(mu*x)",
                    homogeneous: |mu| f(FuncKind::Bi, mu),
                    resonant: Some(|mu| (1.0 / (3.0 * mu * mu)) * Expr::X * f(FuncKind::BiP, mu)),
                    resonant_display: Some("x*BiP(mu*x)/(3*mu^2)"),
                    value: Some(|x, mu| Ok(specfun::airy_bi(mu * x)?.0)),
                    repeated: None,
                    note: None,
                },
            ],
            domain: |_| Ok(FunctionDomain::positive()),
        },
        probe: |_| Ok(Grid::linear(0.05, 5.0, 200)),
        test_parameters: vec![1.0, 1.5],
        max_repeated: 4,
    }
}

fn bessel_power_root(kind: FuncKind, mu: f64, k: usize) -> Option<Expr> {
    Some(Expr::X.powi(k as i32) * fo(kind, k as u32, mu))
}

fn bessel0() -> CatalogRow {
    CatalogRow {
        id: "bessel0",
        title: "Bessel operator of order zero",
        operator: OperatorFamily {
            name: "bessel0",
            order: 2,
            m_hat: LinearOperator::new(vec![c(0.0), Expr::X.powi(-1), c(1.0)]),
            m_text: "d^2 + x^-1*d",
            eigen_poly: vec![0.0, 0.0, -1.0],
            eigen_text: "-mu^2",
            role: ParameterRole::ArgumentScale,
        },
        homogeneous: SolutionFamily {
            members: vec![
                Member {
                    label: "J",
                    display: "J(0,mu*x)",
                    homogeneous: |mu| fo(FuncKind::J, 0, mu),
                    resonant: Some(|mu| (1.0 / (2.0 * mu)) * Expr::X * fo(FuncKind::J, 1, mu)),
                    resonant_display: Some("x*J(1,mu*x)/(2*mu)"),
                    value: Some(|x, mu| specfun::bessel(BesselKind::J, 0, mu * x)),
                    repeated: Some(|mu, k| bessel_power_root(FuncKind::J, mu, k)),
                    note: None,
                },
                Member {
                    label: "Y",
                    display: "Y(0,mu*x)",
                    homogeneous: |mu| fo(FuncKind::Y, 0, mu),
                    resonant: Some(|mu| (1.0 / (2.0 * mu)) * Expr::X * fo(FuncKind::Y, 1, mu)),
                    resonant_display: Some("x*Y(1,mu*x)/(2*mu)"),
                    value: Some(|x, mu| specfun::bessel(BesselKind::Y, 0, mu * x)),
                    repeated: Some(|mu, k| bessel_power_root(FuncKind::Y, mu, k)),
                    note: None,
                },
            ],
            domain: positive,
        },
        probe: |_| Ok(Grid::log(0.3, 12.0, 200)),
        test_parameters: vec![1.0, 2.0],
        max_repeated: 4,
    }
}

fn legendre() -> CatalogRow {
    CatalogRow {
        id: "legendre",
        title: "Legendre operator",
        operator: OperatorFamily {
            name: "legendre",
            order: 2,
            m_hat: LinearOperator::new(vec![c(0.0), c(-2.0) * Expr::X, c(1.0) - Expr::X.powi(2)]),
            m_text: "(1 - x^2)*d^2 - 2*x*d",
            eigen_poly: vec![0.0, -1.0, -1.0],
            eigen_text: "-mu*(mu + 1)",
            role: ParameterRole::Degree,
        },
        homogeneous: SolutionFamily {
            members: vec![
                Member {
                    label: "P",
                    display: "P(mu,x)",
                    homogeneous: |mu| fo(FuncKind::P, degree(mu), 1.0),
                    resonant: Some(|mu| (-1.0 / (2.0 * mu + 1.0)) * fo(FuncKind::Pd, degree(mu), 1.0)),
                    resonant_display: Some("-Pd(mu,x)/(2*mu + 1)"),
                    value: Some(|x, mu| specfun::legendre_p_real_degree(mu, x)),
                    repeated: None,
                    note: None,
                },
                Member {
                    label: "Q",
                    display: "Q(mu,x)",
                    homogeneous: |mu| fo(FuncKind::Q, degree(mu), 1.0),
                    resonant: None,
                    resonant_display: None,
                    value: None,
                    repeated: None,
                    note: Some("the degree derivative of Q is not constructed; excluded"),
                },
            ],
            domain: |_| Ok(FunctionDomain::new(-1.0, 1.0)),
        },
        probe: |_| Ok(Grid::linear(-0.9, 0.999, 200)),
        test_parameters: vec![0.0, 1.0, 2.0, 3.0, 5.0],
        max_repeated: 1,
    }
}

fn hermite_domain(mu: f64) -> std::result::Result<FunctionDomain, EvalError> {
    let z = hermite::largest_zero(degree(mu))?;
    Ok(FunctionDomain::new(z + hermite::ZERO_GUARD, f64::INFINITY))
}

fn hermite_row() -> CatalogRow {
    CatalogRow {
        id: "hermite",
        title: "Hermite operator",
        operator: OperatorFamily {
            name: "hermite",
            order: 2,
            m_hat: LinearOperator::new(vec![c(0.0), c(-2.0) * Expr::X, c(1.0)]),
            m_text: "d^2 - 2*x*d",
            eigen_poly: vec![0.0, -2.0],
            eigen_text: "-2*mu",
            role: ParameterRole::Degree,
        },
        homogeneous: SolutionFamily {
            members: vec![
                Member {
                    label: "H",
                    display: "H(mu,x)",
                    homogeneous: |mu| fo(FuncKind::H, degree(mu), 1.0),
                    resonant: Some(|mu| -0.5 * fo(FuncKind::Hd, degree(mu), 1.0)),
                    resonant_display: Some("-Hd(mu,x)/2"),
                    value: Some(|x, mu| hermite::hermite_real(mu, x)),
                    repeated: None,
                    note: None,
                },
                Member {
                    label: "G",
                    display: "G(mu,x)",
                    homogeneous: |mu| fo(FuncKind::G, degree(mu), 1.0),
                    resonant: Some(|mu| -0.5 * fo(FuncKind::Gd, degree(mu), 1.0)),
                    resonant_display: Some("-Gd(mu,x)/2"),
                    value: Some(|x, mu| {
                        hermite::hermite_g_real_order(mu, mu.round() as u32, x, &tight_quadrature())
                    }),
                    repeated: None,
                    note: Some("second kind by reduction of order; defined right of the largest zero of H"),
                },
            ],
            domain: hermite_domain,
        },
        probe: |mu| {
            let z = hermite::largest_zero(degree(mu))?;
            Ok(Grid::linear(z + 0.1, z + 4.0, 120))
        },
        test_parameters: vec![0.0, 1.0, 2.0, 3.0],
        max_repeated: 1,
    }
}

/// All rows, in a fixed order.
pub fn catalog() -> Vec<CatalogRow> {
    vec![harmonic(), equidim(), airy(), bessel0(), legendre(), hermite_row()]
}

/// Row by identifier.
pub fn row(id: &str) -> Result<CatalogRow> {
    catalog().into_iter().find(|r| r.id == id).ok_or_else(|| Error::UnknownRow(id.to_string()))
}
