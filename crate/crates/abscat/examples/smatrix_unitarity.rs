//! Unitarity of the sector S-matrix across a broad parameter grid, plus the
//! consistency S = e^{2 i delta}.
//!
//! ```text
//! cargo run --release -p abscat --example smatrix_unitarity
//! ```

use abscat::phase_shift::{phase_shift, s_matrix, BoundaryCondition, SectorParams};
use num_complex::Complex64;

fn main() -> abscat::Result<()> {
    let lambdas = [
        BoundaryCondition::Robin { lambda: 0.0 },
        BoundaryCondition::Robin { lambda: 0.1 },
        BoundaryCondition::Robin { lambda: 1.0 },
        BoundaryCondition::Robin { lambda: 10.0 },
        BoundaryCondition::Neumann,
    ];
    let mut worst_unitarity = 0.0_f64;
    let mut worst_phase = 0.0_f64;
    let mut n = 0u32;
    for m in -10..=10 {
        for alpha in [0.0, 0.25, 0.5, 0.9] {
            for bc in &lambdas {
                let sector = SectorParams::new(m, alpha, 1.0, *bc)?;
                for i in 0..10 {
                    let ka = 1e-3 * 1e6_f64.powf(i as f64 / 9.0);
                    let s = s_matrix(&sector, ka)?;
                    worst_unitarity = worst_unitarity.max((s.norm() - 1.0).abs());
                    let d = phase_shift(&sector, ka)?;
                    worst_phase = worst_phase.max((s - Complex64::from_polar(1.0, 2.0 * d)).norm());
                    n += 1;
                }
            }
        }
    }
    println!("checked {n} (m, alpha, lambda, ka) points");
    println!("max | |S| - 1 |          = {worst_unitarity:.3e}");
    println!("max |S - e^(2i delta)|   = {worst_phase:.3e}");
    Ok(())
}
