//! Independent oracle for a second solution: reduction of order by nested
//! quadrature, compared with the known Bessel Y_0 up to a fitted combination.
//!
//! cargo run --example reduction_of_order

use resokit::specfun::QuadratureSpec;
use resokit::verify::{linalg, reduction_of_order_oracle, Grid};
use resokit::{Expr, FuncKind, LinearOperator};

fn main() -> resokit::Result<()> {
    let op = LinearOperator::new(vec![Expr::Const(1.0), Expr::X.powi(-1), Expr::Const(1.0)]);
    let j0 = Expr::ordered(FuncKind::J, 0, 1.0);
    let y0 = Expr::ordered(FuncKind::Y, 0, 1.0);
    // J_0 has its first zero near 2.405, so stay inside (0, 2.4)
    let grid = Grid::linear(0.5, 2.3, 40);
    let q = QuadratureSpec { abs_tol: 1e-12, rel_tol: 1e-12, ..QuadratureSpec::default() };
    let v2 = reduction_of_order_oracle(&op, &j0, 1.0, &grid, &q)?;

    let xs = grid.points();
    let mut cols = Vec::new();
    for e in [&j0, &y0] {
        cols.push(xs.iter().map(|&x| e.eval(x)).collect::<Result<Vec<f64>, _>>()?);
    }
    let rel = linalg::fit_residual(&cols, &v2);
    for (x, v) in xs.iter().zip(&v2).step_by(8) {
        println!("x = {x:.3}  v2 = {v:+.12}");
    }
    println!("relative residual of v2 fitted by span(J0, Y0): {rel:.2e}");

    // a second solution cannot be continued through a zero of u1
    let across = Grid::linear(0.5, 3.0, 40);
    match reduction_of_order_oracle(&op, &j0, 1.0, &across, &q) {
        Ok(_) => println!("unexpected: crossed a zero of J0"),
        Err(e) => println!("across the zero: {e}"),
    }
    Ok(())
}
