//! Repeated roots of the Bessel operator: x^k J_k(x) is annihilated by
//! (d² + x⁻¹d + 1)^{k+1} but not by its k-th power.
//!
//! cargo run --example bessel_repeated_roots

use resokit::resonance::{repeated_root, row};
use resokit::verify::Grid;

fn max_abs(e: &resokit::Expr, grid: &Grid) -> resokit::Result<f64> {
    let mut m: f64 = 0.0;
    for x in grid.points() {
        m = m.max(e.eval(x)?.abs());
    }
    Ok(m)
}

fn main() -> resokit::Result<()> {
    let bessel = row("bessel0")?;
    let factor = bessel.operator.operator(1.0);
    let grid = Grid::linear(0.5, 10.0, 200);
    for label in ["J", "Y"] {
        for k in 0..=bessel.max_repeated {
            let u = if k == 0 { bessel.homogeneous_expr(label, 1.0)? } else { repeated_root(&bessel, label, 1.0, k)? };
            let killed = max_abs(&factor.apply_repeated(&u, k + 1), &grid)?;
            let survives = if k == 0 { max_abs(&u, &grid)? } else { max_abs(&factor.apply_repeated(&u, k), &grid)? };
            println!("k={k} {label}: {:<14} |L^(k+1) u| = {killed:.1e}  |L^k u| = {survives:.3}", u.to_string());
        }
    }
    Ok(())
}
