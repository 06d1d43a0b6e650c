//! Phase shifts of the three boundary conditions across a k sweep.
//!
//! ```text
//! cargo run --release -p abscat --example phase_shifts
//! ```

use abscat::phase_shift::{phase_shift, BoundaryCondition, SectorParams};

fn main() -> abscat::Result<()> {
    let alpha = 0.5;
    let a = 1.0;
    let bcs = [
        ("dirichlet", BoundaryCondition::Dirichlet),
        ("neumann", BoundaryCondition::Neumann),
        ("robin:1", BoundaryCondition::Robin { lambda: 1.0 }),
    ];

    println!("# phase shifts, alpha = {alpha}, a = {a}");
    for m in 0..=2 {
        println!("\n# sector m = {m} (nu = {})", (m as f64 + alpha).abs());
        println!("{:>8} {:>14} {:>14} {:>14}", "k", "dirichlet", "neumann", "robin:1");
        let mut k = 0.25;
        while k <= 8.0 {
            let mut row = format!("{k:>8.3}");
            for (_, bc) in &bcs {
                let sector = SectorParams::new(m, alpha, a, *bc)?;
                row.push_str(&format!(" {:>14.8}", phase_shift(&sector, k)?));
            }
            println!("{row}");
            k *= 2.0;
        }
    }
    Ok(())
}
