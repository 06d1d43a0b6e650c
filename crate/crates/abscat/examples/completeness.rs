//! Spectral completeness: reconstruct a compactly supported bump from the
//! continuum eigenfunctions through the Stone-formula double integral, and
//! watch the truncation error fall as the spectral cutoff k_max grows.
//!
//! ```text
//! cargo run --release -p abscat --example completeness
//! ```

use abscat::oracle::{bump, completeness_check};
use abscat::phase_shift::BoundaryCondition;

fn main() -> abscat::Result<()> {
    let a = 1.0;
    let center = a + 1.5;
    let psi = bump(center, 1.0);
    let support = (a + 0.5, a + 2.5);
    let exact = psi(center);
    let bc = BoundaryCondition::Robin { lambda: 1.0 };

    println!("# bump reconstruction at r0 = {center}, nu = 1/2, robin lambda = 1");
    println!("{:>8} {:>16} {:>12}", "k_max", "reconstructed", "rel err");
    for k_max in [15.0, 30.0, 60.0] {
        let got = completeness_check(&psi, support, 0.5, &bc, a, center, k_max, 1e-5)?;
        println!("{k_max:>8} {got:>16.10} {:>12.2e}", (got - exact).abs() / exact);
    }
    println!("exact value  {exact:>16.10}");

    // outside the support the reconstruction returns (near) zero
    let r_out = a + 3.5;
    let got = completeness_check(&psi, support, 0.5, &bc, a, r_out, 60.0, 1e-5)?;
    println!("\nat r0 = {r_out} (outside the support): {got:.3e}");
    Ok(())
}
