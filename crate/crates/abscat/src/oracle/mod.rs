//! Independent verification machinery: an extended-precision Bessel
//! reference, radial ODE integration with asymptotic phase-shift
//! extraction, and the Green's-function completeness check.  Everything
//! here deliberately avoids the closed-form scattering path it is used to
//! verify.

mod completeness;
pub(crate) mod quad;
mod radial;
mod reference;

pub use completeness::{bump, completeness_check};
pub use radial::{
    extract_phase_shift, integrate_radial, mod_pi, suggested_grid, PhaseShiftFit, RadialSolution,
};
pub use reference::{bessel_reference, bessel_reference_f64, to_f64, Reference};
