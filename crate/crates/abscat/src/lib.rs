//! Quantum scattering of a charged particle by a finite-radius
//! Aharonov-Bohm solenoid.
//!
//! The solenoid has radius `a` and carries flux parametrized by
//! `alpha` in [0, 1); the particle never enters it.  On the border the
//! wavefunction satisfies a Dirichlet, Neumann or Robin condition
//! `u(a) = lambda u'(a)`, each of which defines a self-adjoint Hamiltonian
//! and hence a unitary per-sector S-matrix.  The crate computes
//!
//! * phase shifts and S-matrix entries per angular-momentum sector
//!   ([`phase_shift`]),
//! * scattering amplitudes and differential cross sections as a
//!   zero-radius closed form plus a convergent radius-correction series
//!   ([`amplitude`]),
//! * closed-form low- and high-energy limits used as regime checks
//!   ([`asymptotics`]),
//! * independent verification machinery: an extended-precision Bessel
//!   reference, a Numerov integrator for the radial equation with
//!   phase-shift extraction, and a Green's-function completeness check
//!   ([`oracle`]).
//!
//! The `abscat` binary exposes batch sweeps and CSV emission; see the
//! `examples/` directory for library-level usage.

pub mod amplitude;
pub mod asymptotics;
pub mod bessel;
pub mod cli;
pub mod error;
pub mod gamma;
pub mod oracle;
pub mod phase_shift;

pub use amplitude::{
    amplitude, canonicalize_flux, cross_section, f_r_lambda, f_zero_radius,
    zero_radius_cross_section, AmplitudeSeries, CrossSectionTable,
};
pub use asymptotics::{low_energy_coeffs, s_high_energy, s_low_energy, LowEnergyCoeffs};
pub use bessel::{bessel_quad, hankel1, BesselQuad};
pub use error::{Error, Result};
pub use phase_shift::{
    delta_m, map_tilde_lambda, phase_shift, s_matrix, s_matrix_zero_radius, theta_lambda,
    BoundaryCondition, SectorParams,
};
