//! The f64 Bessel kernel against the extended-precision series reference.
//!
//! ```text
//! cargo run --release -p abscat --example bessel_reference
//! ```

use abscat::bessel_quad;
use abscat::oracle::bessel_reference_f64;

fn main() -> abscat::Result<()> {
    let points = [
        (0.0, 1.0),
        (0.5, 2.5),
        (1.75, 3.2),
        (7.3, 0.04),
        (12.0, 25.0),
        (29.5, 80.0),
    ];
    println!(
        "{:>6} {:>8} {:>24} {:>24} {:>10}",
        "nu", "x", "J (kernel)", "J (reference, 30 digits)", "rel err"
    );
    for (nu, x) in points {
        let q = bessel_quad(nu, x)?;
        let (jr, yr) = bessel_reference_f64(nu, x, 30)?;
        println!(
            "{nu:>6} {x:>8} {:>24.16e} {jr:>24.16e} {:>10.2e}",
            q.j,
            ((q.j - jr) / jr).abs()
        );
        println!(
            "{:>6} {:>8} {:>24.16e} {yr:>24.16e} {:>10.2e}",
            "", "(Y)", q.y, ((q.y - yr) / yr).abs()
        );
    }
    Ok(())
}
