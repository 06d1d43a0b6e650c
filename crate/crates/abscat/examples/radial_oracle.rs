//! Independent check of the closed-form phase shifts: integrate the radial
//! equation outward with Numerov, fit the asymptotic sinusoid, and compare
//! the extracted phase shift (mod pi) with the Bessel-kernel value.
//!
//! ```text
//! cargo run --release -p abscat --example radial_oracle
//! ```

use abscat::oracle::{extract_phase_shift, integrate_radial, mod_pi, suggested_grid};
use abscat::phase_shift::{phase_shift, BoundaryCondition, SectorParams};

fn main() -> abscat::Result<()> {
    let cases = [
        (0, 0.5, BoundaryCondition::Robin { lambda: 1.0 }, 1.0),
        (1, 0.25, BoundaryCondition::Dirichlet, 0.5),
        (-3, 0.7, BoundaryCondition::Neumann, 2.0),
        (2, 0.0, BoundaryCondition::Dirichlet, 12.0),
        (-1, 0.5, BoundaryCondition::Robin { lambda: 0.2 }, 5.0),
    ];
    let a = 1.0;
    println!(
        "{:>3} {:>6} {:>10} {:>6} {:>14} {:>14} {:>10}",
        "m", "alpha", "bc", "k", "ode (mod pi)", "closed form", "|diff|"
    );
    for (m, alpha, bc, k) in cases {
        let sector = SectorParams::new(m, alpha, a, bc)?;
        let nu = sector.nu();
        let (r_max, n_steps) = suggested_grid(nu, k, a, 1e-4);
        let sol = integrate_radial(nu, k, a, &bc, r_max, n_steps)?;
        let fit = extract_phase_shift(&sol, m, alpha)?;
        let exact = mod_pi(phase_shift(&sector, k)?);
        println!(
            "{m:>3} {alpha:>6} {:>10} {k:>6} {:>14.8} {:>14.8} {:>10.2e}",
            bc.to_string(),
            fit.delta_mod_pi,
            exact,
            mod_pi(fit.delta_mod_pi - exact).abs()
        );
    }
    Ok(())
}
