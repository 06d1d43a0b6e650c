//! At low energy the positive-radius cross sections of all three
//! extensions collapse onto the zero-radius Aharonov-Bohm formula
//! (1/(2 pi k)) sin^2(pi alpha)/sin^2(theta/2).
//!
//! ```text
//! cargo run --release -p abscat --example low_energy_collapse
//! ```

use abscat::amplitude::{cross_section, zero_radius_cross_section};
use abscat::phase_shift::BoundaryCondition;
use std::f64::consts::PI;

fn main() -> abscat::Result<()> {
    let alpha = 0.5;
    let a = 1.0;
    let tol = 1e-10;
    for k in [0.5, 0.1, 0.02] {
        println!("\n# k = {k} (ka = {})  — ratios to the zero-radius formula", k * a);
        println!(
            "{:>8} {:>12} {:>10} {:>10} {:>10}",
            "theta", "zero-radius", "D/zr", "N/zr", "R(1)/zr"
        );
        for i in [3, 6, 9, 12] {
            let theta = PI * i as f64 / 12.0;
            let z = zero_radius_cross_section(k, theta, alpha)?;
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
            println!(
                "{theta:>8.4} {z:>12.6} {:>10.5} {:>10.5} {:>10.5}",
                d / z,
                n / z,
                r / z
            );
        }
    }
    println!("\nratios approach 1 as ka -> 0: the scattering no longer resolves the border condition");
    Ok(())
}
