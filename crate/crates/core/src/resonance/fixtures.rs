//! Higher-order problems built from a repeated second-order factor.

use serde::Serialize;

use crate::symexpr::{Expr, FuncKind, LinearOperator};
use crate::verify::Grid;

#[derive(Debug, Clone, Serialize)]
pub struct FixtureMember {
    pub label: String,
    pub expr: Expr,
    /// Repeated-root index: the factor applied `root + 1` times annihilates it.
    pub root: usize,
}

/// A factor operator D, the power `D^power` of the full problem, and its
/// claimed solution set.
#[derive(Debug, Clone, Serialize)]
pub struct Fixture {
    pub name: String,
    pub factor: LinearOperator,
    pub power: usize,
    pub members: Vec<FixtureMember>,
    pub grid: Grid,
}

fn member(expr: Expr, root: usize) -> FixtureMember {
    let expr = expr.simplify();
    FixtureMember { label: expr.to_string(), expr, root }
}

/// (d² - x⁻¹d - k²)² with solutions x I1(kx), x K1(kx), x² I2(kx), x² K2(kx).
pub fn modified_bessel_fourth_order(k: f64) -> Fixture {
    let factor = LinearOperator::new(vec![Expr::Const(-k * k), Expr::Const(-1.0) * Expr::X.powi(-1), Expr::Const(1.0)]);
    let members = vec![
        member(Expr::X * Expr::ordered(FuncKind::I, 1, k), 0),
        member(Expr::X * Expr::ordered(FuncKind::K, 1, k), 0),
        member(Expr::X.powi(2) * Expr::ordered(FuncKind::I, 2, k), 1),
        member(Expr::X.powi(2) * Expr::ordered(FuncKind::K, 2, k), 1),
    ];
    Fixture { name: format!("modified-bessel-fourth-order(k={k})"), factor, power: 2, members, grid: Grid::linear(0.3, 6.0, 120) }
}

/// (d² + x⁻¹d + 1)³ with solutions x^k J_k(x), x^k Y_k(x), k = 0, 1, 2.
pub fn bessel_sixth_order() -> Fixture {
    let factor = LinearOperator::new(vec![Expr::Const(1.0), Expr::X.powi(-1), Expr::Const(1.0)]);
    let mut members = Vec::new();
    for k in 0..3u32 {
        for kind in [FuncKind::J, FuncKind::Y] {
            members.push(member(Expr::X.powi(k as i32) * Expr::ordered(kind, k, 1.0), k as usize));
        }
    }
    Fixture { name: "bessel-sixth-order".into(), factor, power: 3, members, grid: Grid::linear(0.5, 10.0, 200) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_abs(e: &Expr, grid: &Grid) -> f64 {
        grid.points().iter().map(|&x| e.eval(x).unwrap().abs()).fold(0.0, f64::max)
    }

    #[test]
    fn modified_bessel_members_are_annihilated() {
        let fx = modified_bessel_fourth_order(1.3);
        for m in &fx.members {
            let r = fx.factor.apply_repeated(&m.expr, fx.power);
            assert!(max_abs(&r, &fx.grid) < 1e-7, "{}: {}", m.label, max_abs(&r, &fx.grid));
        }
    }

    #[test]
    fn sixth_order_roots_and_nontriviality() {
        let fx = bessel_sixth_order();
        for m in &fx.members {
            let full = fx.factor.apply_repeated(&m.expr, m.root + 1);
            assert!(max_abs(&full, &fx.grid) < 1e-7, "{}", m.label);
            if m.root > 0 {
                let partial = fx.factor.apply_repeated(&m.expr, m.root);
                assert!(max_abs(&partial, &fx.grid) > 1e-2, "{}", m.label);
            }
        }
    }
}
