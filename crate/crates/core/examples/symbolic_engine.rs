//! Parse, simplify, differentiate and print expressions over the supported
//! special functions, then apply a variable-coefficient operator.
//!
//! cargo run --example symbolic_engine -- "x^2*J(2,x)"

use resokit::{parse, Expr, LinearOperator};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "x*J(1,x) + 2*x*J(1,x) - x^0*Ai(x)/2".to_string());
    let e = match parse(&text) {
        Ok(e) => e,
        Err(err) => {
            eprintln!("{err}");
            std::process::exit(2);
        }
    };
    let s = e.simplify();
    println!("input      {text}");
    println!("canonical  {s}");
    println!("d/dx       {}", s.differentiate());
    println!("d2/dx2     {}", s.nth_derivative(2));

    // Bessel operator of order 0: y'' + y'/x + y
    let bessel = LinearOperator::new(vec![Expr::Const(1.0), Expr::X.powi(-1), Expr::Const(1.0)]);
    let applied = bessel.apply(&s);
    println!("(d2 + d/x + 1)[e] = {applied}");
    for x in [0.5, 1.0, 2.0] {
        match (s.eval(x), applied.eval(x)) {
            (Ok(v), Ok(a)) => println!("  x = {x}: e = {v:.12}, applied = {a:.12}"),
            (Err(err), _) | (_, Err(err)) => println!("  x = {x}: {err}"),
        }
    }
}
