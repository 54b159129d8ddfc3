//! Resonant forcing of y'' + y = sin x: build u_p = ∂u/∂λ, apply the
//! operator symbolically, and sample the residual.
//!
//! cargo run --example harmonic_resonance

use resokit::resonance::{resonant_solution, row};
use resokit::verify::Grid;

fn main() -> resokit::Result<()> {
    let harmonic = row("harmonic")?;
    let mu = 1.0;
    let op = harmonic.operator.operator(mu);
    let u = harmonic.homogeneous_expr("sin", mu)?;
    let up = resonant_solution(&harmonic, "sin", mu)?;
    println!("L = d^2/dx^2 + {}, forcing u = {u}", -harmonic.operator.lambda(mu));
    println!("u_p = {up}");

    let applied = op.apply(&up).simplify();
    println!("L[u_p] = {applied}");

    let mut worst: f64 = 0.0;
    for x in Grid::linear(-10.0, 10.0, 201).points() {
        worst = worst.max((applied.eval(x)? - u.eval(x)?).abs());
    }
    println!("max |L[u_p] - u| on [-10, 10]: {worst:e}");

    // the secular growth that ordinary undetermined coefficients would miss
    for x in [10.0, 100.0, 1000.0] {
        println!("u_p({x}) = {:.6}", up.eval(x)?);
    }
    Ok(())
}
