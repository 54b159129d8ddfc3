//! ((1-x²)y')' + n(n+1)y = P_n(x), y(1) = 1, y bounded at x = -1 excluded,
//! for each supported degree.
//!
//! cargo run --example legendre_bvp

use resokit::bvp::{solve_legendre_bvp, MAX_LEGENDRE_DEGREE};
use resokit::verify::Grid;

fn main() -> resokit::Result<()> {
    for n in 0..=MAX_LEGENDRE_DEGREE {
        let sol = solve_legendre_bvp(n)?;
        let applied = sol.operator.apply(&sol.solution);
        let mut worst: f64 = 0.0;
        for x in Grid::linear(-0.9, 0.999, 200).points() {
            worst = worst.max((applied.eval(x)? - sol.forcing.eval(x)?).abs());
        }
        let y1 = sol.solution.eval(1.0)?;
        println!("n={n}  y = {:<36} y(1) = {y1:.15}  max residual {worst:.2e}", sol.display);
    }
    Ok(())
}
