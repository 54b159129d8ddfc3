//! Walk the resonance catalog: each row's operator, eigenvalue, homogeneous
//! solutions and the closed-form resonant solution at a sample parameter.
//!
//! cargo run --example catalog_tour

use resokit::resonance::{catalog, resonant_solution};

fn main() -> resokit::Result<()> {
    for row in catalog() {
        let mu = row.test_parameters[0];
        println!("{} ({})", row.id, row.title);
        println!("  M = {}, lambda(mu) = {}", row.operator.m_text, row.operator.eigen_text);
        for m in &row.homogeneous.members {
            let up = match resonant_solution(&row, m.label, mu) {
                Ok(e) => e.to_string(),
                Err(e) => format!("<{e}>"),
            };
            println!("  {:<4} u = {:<28} mu = {mu}: u_p = {up}", m.label, m.display);
        }
    }
    Ok(())
}
