//! Per-sector phase shifts and S-matrix entries for Dirichlet, Neumann and
//! Robin boundary conditions on the solenoid border, plus the zero-radius
//! reference S-matrix.
//!
//! Conventions: `nu = |m + alpha|` is the effective order of the sector,
//! `Delta_m(alpha) = (pi/2)(|m| - |m + alpha|)` the flux-induced phase, and
//! primes in the boundary combinations are radial derivatives, so the Robin
//! mixing coefficients carry a factor `lambda * k` on the argument
//! derivatives of the kernel.

use crate::bessel::{bessel_quad, BesselQuad};
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Self-adjoint boundary condition on the solenoid border r = a.
///
/// Robin means `u(a) = lambda u'(a)` with `lambda >= 0` in units of length.
/// `lambda = 0` is Dirichlet; the Neumann case (`u'(a) = 0`) is the
/// `lambda = infinity` member of the family and is kept as its own variant,
/// never as a large finite `lambda`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryCondition {
    Dirichlet,
    Neumann,
    Robin { lambda: f64 },
}

impl BoundaryCondition {
    /// Robin condition with validated parameter; `lambda = inf` maps to the
    /// Neumann variant, negative or NaN values are rejected.
    pub fn robin(lambda: f64) -> Result<Self> {
        if lambda.is_nan() {
            return Err(Error::InvalidLambda { lambda });
        }
        if lambda < 0.0 {
            return Err(Error::NegativeLambda { lambda });
        }
        if lambda.is_infinite() {
            return Ok(BoundaryCondition::Neumann);
        }
        Ok(BoundaryCondition::Robin { lambda })
    }

    /// Boundary mixing coefficients (jc, yc) built from a kernel quad at
    /// x = k a:  jc = J - lambda k J',  yc = Y - lambda k Y' (radial
    /// derivative convention).  Dirichlet keeps the function values,
    /// Neumann keeps the pure derivative combination.
    pub fn mixing(&self, q: &BesselQuad, k: f64) -> (f64, f64) {
        match *self {
            BoundaryCondition::Dirichlet => (q.j, q.y),
            BoundaryCondition::Neumann => (q.jp, q.yp),
            BoundaryCondition::Robin { lambda } => {
                (q.j - lambda * k * q.jp, q.y - lambda * k * q.yp)
            }
        }
    }

    pub fn is_robin(&self) -> bool {
        matches!(self, BoundaryCondition::Robin { .. })
    }
}

impl std::fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundaryCondition::Dirichlet => write!(f, "dirichlet"),
            BoundaryCondition::Neumann => write!(f, "neumann"),
            BoundaryCondition::Robin { lambda } => write!(f, "robin:{lambda}"),
        }
    }
}

/// One angular-momentum scattering channel: sector index m, canonical flux
/// alpha in [0, 1), solenoid radius a and the boundary condition.
#[derive(Debug, Clone, Copy)]
pub struct SectorParams {
    pub m: i32,
    pub alpha: f64,
    pub a: f64,
    pub bc: BoundaryCondition,
}

impl SectorParams {
    pub fn new(m: i32, alpha: f64, a: f64, bc: BoundaryCondition) -> Result<Self> {
        if !(0.0..1.0).contains(&alpha) || !alpha.is_finite() {
            return Err(Error::AlphaOutOfRange { alpha });
        }
        if !a.is_finite() || a <= 0.0 {
            return Err(Error::InvalidRadius { a });
        }
        Ok(SectorParams { m, alpha, a, bc })
    }

    /// Effective Bessel order nu = |m + alpha|.
    pub fn nu(&self) -> f64 {
        (self.m as f64 + self.alpha).abs()
    }

    /// beta = pi (|m| - |m + alpha|) = 2 Delta_m(alpha).
    pub fn beta(&self) -> f64 {
        2.0 * delta_m(self.m, self.alpha)
    }
}

/// Flux-induced phase Delta_m(alpha) = (pi/2)(|m| - |m + alpha|).
///
/// Total in both arguments; callers normally pass alpha in [0, 1).
pub fn delta_m(m: i32, alpha: f64) -> f64 {
    let mf = m as f64;
    0.5 * PI * (mf.abs() - (mf + alpha).abs())
}

fn check_k(k: f64) -> Result<()> {
    if !k.is_finite() || k <= 0.0 {
        return Err(Error::InvalidWavenumber { k });
    }
    Ok(())
}

/// Boundary mixing coefficients (jc, yc) and the kernel quad at x = k a for
/// arbitrary real order nu; the building block shared by `theta_lambda`,
/// `s_matrix` and the amplitude series.
pub(crate) fn mixing_at(
    nu: f64,
    k: f64,
    a: f64,
    bc: &BoundaryCondition,
) -> Result<(f64, f64, BesselQuad)> {
    let q = bessel_quad(nu, k * a)?;
    let (jc, yc) = bc.mixing(&q, k);
    if jc == 0.0 && yc == 0.0 {
        return Err(Error::DegenerateMixing { nu, ka: k * a });
    }
    Ok((jc, yc, q))
}

/// Boundary phase theta_lambda with cos theta = yc/D, sin theta = jc/D,
/// returned in (-pi, pi] via the two-argument arctangent.
///
/// The branch is a convention: any consistent choice shifts the phase shift
/// by multiples of 2 pi and leaves the S-matrix unchanged.  The Neumann
/// branch uses (J', Y') directly, which differs from the lambda -> inf limit
/// of the Robin coefficients by an overall sign, i.e. by pi in theta.
pub fn theta_lambda(sector: &SectorParams, k: f64) -> Result<f64> {
    check_k(k)?;
    let (jc, yc, _) = mixing_at(sector.nu(), k, sector.a, &sector.bc)?;
    Ok(jc.atan2(yc))
}

/// Normalization D = sqrt(jc^2 + yc^2) of the sector radial solution.
/// Strictly positive by the Wronskian; exposed for diagnostics and tests.
pub fn normalization_d(sector: &SectorParams, k: f64) -> Result<f64> {
    check_k(k)?;
    let (jc, yc, _) = mixing_at(sector.nu(), k, sector.a, &sector.bc)?;
    Ok(jc.hypot(yc))
}

/// Phase shift delta_m^lambda(k, alpha) = Delta_m(alpha) + theta_lambda.
///
/// Reported raw (no modular reduction); S-matrix comparisons are the
/// branch-free contract, and mod-pi reduction is left to callers.
pub fn phase_shift(sector: &SectorParams, k: f64) -> Result<f64> {
    Ok(delta_m(sector.m, sector.alpha) + theta_lambda(sector, k)?)
}

/// Unit-modulus S-matrix entry
/// S = -e^{2i Delta_m} (H2 - lambda k H2') / (H1 - lambda k H1')
/// evaluated as -e^{2i Delta_m} conj(w)/w with w = jc + i yc.
pub fn s_matrix(sector: &SectorParams, k: f64) -> Result<Complex64> {
    check_k(k)?;
    let (jc, yc, _) = mixing_at(sector.nu(), k, sector.a, &sector.bc)?;
    let w = Complex64::new(jc, yc);
    if w.norm() < 1e-300 {
        return Err(Error::DegenerateMixing {
            nu: sector.nu(),
            ka: k * sector.a,
        });
    }
    let phase = Complex64::from_polar(1.0, 2.0 * delta_m(sector.m, sector.alpha));
    Ok(-phase * w.conj() / w)
}

/// Zero-radius S-matrix e^{2i Delta_m(alpha)}: e^{-i pi alpha} for
/// m >= -alpha and e^{+i pi alpha} for m <= -alpha.
pub fn s_matrix_zero_radius(m: i32, alpha: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * delta_m(m, alpha))
}

/// Map the half-line extension parameter to the Robin parameter,
/// lambda = 2 a lambda~ / (2a - lambda~).
///
/// The pole lambda~ = 2a is the Neumann member; results with lambda < 0
/// (e.g. lambda~ = inf, which gives lambda = -2a) are outside the supported
/// non-negative family and are reported as errors.
pub fn map_tilde_lambda(tilde: f64, a: f64) -> Result<BoundaryCondition> {
    if !a.is_finite() || a <= 0.0 {
        return Err(Error::InvalidRadius { a });
    }
    if tilde.is_nan() {
        return Err(Error::InvalidLambda { lambda: tilde });
    }
    if tilde.is_infinite() {
        // limit value -2a, negative: unsupported
        return Err(Error::NegativeLambda { lambda: -2.0 * a });
    }
    if tilde == 2.0 * a {
        return Ok(BoundaryCondition::Neumann);
    }
    let lambda = 2.0 * a * tilde / (2.0 * a - tilde);
    if lambda < 0.0 {
        return Err(Error::NegativeLambda { lambda });
    }
    BoundaryCondition::robin(lambda)
}
