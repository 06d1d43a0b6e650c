//! The Robin family interpolates between Dirichlet (lambda = 0) and
//! Neumann (lambda -> infinity); watch the cross section walk from one to
//! the other as lambda grows.
//!
//! ```text
//! cargo run --release -p abscat --example robin_interpolation
//! ```

use abscat::amplitude::cross_section;
use abscat::phase_shift::BoundaryCondition;
use std::f64::consts::PI;

fn main() -> abscat::Result<()> {
    let alpha = 0.5;
    let a = 1.0;
    let theta = PI / 2.0;
    let tol = 1e-10;
    for k in [1.0, 5.0] {
        let d = cross_section(k, theta, alpha, a, &BoundaryCondition::Dirichlet, tol)?;
        let n = cross_section(k, theta, alpha, a, &BoundaryCondition::Neumann, tol)?;
        println!("\n# k = {k}, theta = pi/2: dirichlet = {d:.6}, neumann = {n:.6}");
        println!("{:>10} {:>12} {:>12} {:>12}", "lambda", "dsigma", "rel to D", "rel to N");
        for lambda in [0.0, 0.01, 0.1, 0.5, 1.0, 5.0, 10.0, 100.0, 1000.0] {
            let x = cross_section(
                k,
                theta,
                alpha,
                a,
                &BoundaryCondition::Robin { lambda },
                tol,
            )?;
            println!(
                "{lambda:>10} {x:>12.6} {:>+12.4} {:>+12.4}",
                (x - d) / d,
                (x - n) / n
            );
        }
    }
    Ok(())
}
