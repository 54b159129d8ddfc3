//! Jets in μ of a homogeneous solution, converted to jets in the
//! eigenvalue λ: the first coefficient is the resonant solution.
//!
//! cargo run --example jets_perturb_expand

use resokit::jets::{default_step, to_eigenvalue_jet};
use resokit::resonance::{member_jet, resonant_solution, row};

fn main() -> resokit::Result<()> {
    for (id, label, mu, x) in [("harmonic", "sin", 1.0, 2.0), ("bessel0", "J", 1.5, 1.2), ("airy", "Ai", 1.0, 0.8)] {
        let r = row(id)?;
        let mu_jet = member_jet(&r, label, x, mu, 3, default_step(mu))?;
        let lam_jet = to_eigenvalue_jet(&mu_jet, &r.operator.eigen_poly)?;
        let closed = resonant_solution(&r, label, mu)?.eval(x)?;
        println!("{id}/{label} mu={mu} x={x}");
        println!("  mu-jet     {:?}", mu_jet.coeffs);
        println!("  lambda-jet {:?}", lam_jet.coeffs);
        println!("  du/dlambda {:.12} vs closed form {closed:.12}", lam_jet.derivative(1));
    }
    Ok(())
}
