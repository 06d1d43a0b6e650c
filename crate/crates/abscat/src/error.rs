//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("bessel domain: nu = {nu}, x = {x} (need finite nu >= 0 and finite x > 0)")]
    BesselDomain { nu: f64, x: f64 },

    #[error("Y_nu({x}) with nu = {nu} exceeds the representable range")]
    BesselOverflow { nu: f64, x: f64 },

    #[error("bessel continued fraction did not converge for nu = {nu}, x = {x}")]
    BesselNoConverge { nu: f64, x: f64 },

    #[error("negative Robin parameter lambda = {lambda} is outside the supported range (lambda >= 0)")]
    NegativeLambda { lambda: f64 },

    #[error("invalid Robin parameter lambda = {lambda}")]
    InvalidLambda { lambda: f64 },

    #[error("wavenumber k = {k} must be finite and positive")]
    InvalidWavenumber { k: f64 },

    #[error("solenoid radius a = {a} must be finite and positive")]
    InvalidRadius { a: f64 },

    #[error("flux parameter alpha = {alpha} must lie in [0, 1)")]
    AlphaOutOfRange { alpha: f64 },

    #[error("both boundary mixing coefficients vanished at nu = {nu}, ka = {ka}; this contradicts the Wronskian and indicates a kernel failure")]
    DegenerateMixing { nu: f64, ka: f64 },

    #[error("scattering angle theta = {theta} is outside the open interval (0, 2*pi)")]
    ThetaOutOfRange { theta: f64 },

    #[error("tolerance tol = {tol} must be finite and positive")]
    InvalidTolerance { tol: f64 },

    #[error("partial-wave series still above tol = {tol} at the truncation cap m_max = {cap}")]
    SeriesNotConverged { cap: i64, tol: f64 },

    #[error("low-energy coefficients are undefined at nu = 0 (logarithmic sector)")]
    NuZeroCoeffs,

    #[error("gamma function domain: x = {x}")]
    GammaDomain { x: f64 },

    #[error("reference evaluation outside the practical range: nu = {nu}, x = {x} (need nu <= 45, x <= 120)")]
    ReferenceRange { nu: f64, x: f64 },

    #[error("extended-precision arithmetic failed: {what}")]
    BigFloat { what: String },

    #[error("radial grid too coarse: {ppw:.1} points per wavelength (need >= 20)")]
    GridTooCoarse { ppw: f64 },

    #[error("invalid radial grid: r_max = {r_max}, n_steps = {n_steps}")]
    InvalidGrid { r_max: f64, n_steps: usize },

    #[error("fit window ends at k r_max = {kr_max:.1}; need k r_max >= 50 for asymptotic matching")]
    FitWindow { kr_max: f64 },

    #[error("phase-shift fit residual {residual:.3e} exceeds {limit:.3e} (amplitude {amplitude:.3e})")]
    FitQuality {
        residual: f64,
        limit: f64,
        amplitude: f64,
    },

    #[error("quadrature did not converge: estimated error {err:.3e} above tol {tol:.3e}")]
    QuadratureNoConverge { err: f64, tol: f64 },

    #[error("empty table: refusing to write CSV with no rows")]
    EmptyTable,

    #[error("invalid {what} specification: {spec}")]
    BadSpec { what: &'static str, spec: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
