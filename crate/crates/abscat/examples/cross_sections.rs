//! Differential cross sections of the three extensions versus scattering
//! angle at an intermediate energy, where the boundary conditions separate
//! visibly (the k = 3/2 comparison).
//!
//! ```text
//! cargo run --release -p abscat --example cross_sections
//! ```

use abscat::amplitude::{cross_section, zero_radius_cross_section};
use abscat::phase_shift::BoundaryCondition;
use std::f64::consts::PI;

fn main() -> abscat::Result<()> {
    let k = 1.5;
    let alpha = 0.5;
    let a = 1.0;
    let tol = 1e-10;
    println!("# dsigma/dtheta at k = {k}, alpha = {alpha}, a = {a}");
    println!(
        "{:>8} {:>12} {:>12} {:>12} {:>12}",
        "theta", "dirichlet", "neumann", "robin:1", "zero-radius"
    );
    for i in 1..=24 {
        let theta = PI * i as f64 / 24.0;
        let d = cross_section(k, theta, alpha, a, &BoundaryCondition::Dirichlet, tol)?;
        let n = cross_section(k, theta, alpha, a, &BoundaryCondition::Neumann, tol)?;
        let r = cross_section(
            k,
            theta,
            alpha,
            a,
            &BoundaryCondition::Robin { lambda: 1.0 },
            tol,
        )?;
        let z = zero_radius_cross_section(k, theta, alpha)?;
        println!("{theta:>8.4} {d:>12.6} {n:>12.6} {r:>12.6} {z:>12.6}");
    }
    Ok(())
}
