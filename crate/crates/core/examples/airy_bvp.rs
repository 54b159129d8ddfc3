//! The resonantly forced Airy boundary value problem
//! x⁻¹y'' - y = Ai(x), y(0) = 1, y → 0 as x → ∞.
//!
//! cargo run --example airy_bvp

use resokit::bvp::{airy_constant, solve_airy_bvp};
use resokit::verify::Grid;

fn main() -> resokit::Result<()> {
    let sol = solve_airy_bvp()?;
    println!("y = {}", sol.solution);
    println!("c1 = {:.15} (closed form {:.15})", sol.constants["c1"], airy_constant());
    for b in &sol.boundary {
        println!("{:<12} achieved {:.3e} target {} ({})", b.condition, b.achieved, b.target, if b.satisfied { "ok" } else { "violated" });
    }

    let applied = sol.operator.apply(&sol.solution);
    let mut worst: f64 = 0.0;
    for x in Grid::linear(0.1, 5.0, 200).points() {
        worst = worst.max((applied.eval(x)? - sol.forcing.eval(x)?).abs());
    }
    println!("max |L[y] - Ai| on [0.1, 5]: {worst:e}");
    Ok(())
}
