//! Degree derivatives of Hermite functions, compared against a central
//! difference in the real degree ν of H_ν(x).
//!
//! cargo run --example hermite_degree_derivatives

use resokit::specfun::{hermite_h, hermite_h_deg_deriv, hermite_h_deg_deriv_single_term, hermite_real};

fn main() -> Result<(), resokit::EvalError> {
    let h = 1e-5;
    println!("{:>2} {:>5} {:>22} {:>22} {:>10}", "n", "x", "dH_n/dn", "central difference", "rel diff");
    for n in 0..=5u32 {
        for x in [-1.5, 0.3, 2.0] {
            let d = hermite_h_deg_deriv(n, x)?;
            let fd = (hermite_real(n as f64 + h, x)? - hermite_real(n as f64 - h, x)?) / (2.0 * h);
            println!("{n:>2} {x:>5} {d:>22.14} {fd:>22.14} {:>10.1e}", (d - fd).abs() / d.abs().max(1.0));
        }
    }
    // the piece of the derivative that carries the resonant forcing
    let n = 3;
    println!("H_{n}(0.7) = {}, single term = {}", hermite_h(n, 0.7)?, hermite_h_deg_deriv_single_term(n, 0.7)?);
    Ok(())
}
