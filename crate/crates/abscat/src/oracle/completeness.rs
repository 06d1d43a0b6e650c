//! Numerical verification of the Green's-function completeness relation:
//! a compactly supported test function is reconstructed from the continuum
//! generalized eigenfunctions,
//!
//!   psi(r0) = int_0^kmax (1/D^2) D_nu(ka, k r0) [ int D_nu(ka, k s) psi(s) s ds ] k dk,
//!
//! where D_nu(ka, y) = [Y_nu(ka) - lambda k Y_nu'(ka)] J_nu(y)
//!                   - [J_nu(ka) - lambda k J_nu'(ka)] Y_nu(y)
//! is the regular solution selected by the boundary condition and
//! D^2 = jc^2 + yc^2 its normalization.

use crate::bessel::bessel_quad;
use crate::error::{Error, Result};
use crate::oracle::quad::{integrate_adaptive, integrate_panels};
use crate::phase_shift::{mixing_at, BoundaryCondition};
use std::f64::consts::PI;

/// Smooth bump exp(-1/(1-t^2)) on |t| < 1, t = (r - center)/halfwidth.
pub fn bump(center: f64, halfwidth: f64) -> impl Fn(f64) -> f64 {
    move |r: f64| {
        let t = (r - center) / halfwidth;
        if t.abs() < 1.0 {
            (-1.0 / (1.0 - t * t)).exp()
        } else {
            0.0
        }
    }
}

/// Evaluate the truncated-in-k spectral reconstruction of `psi` at `r0`.
///
/// `psi` must be smooth and supported inside `support` = (s_lo, s_hi) with
/// s_lo > a; `quad_tol` is the absolute tolerance of the outer adaptive
/// quadrature.  Returns the reconstructed value, to be compared with
/// psi(r0) by the caller.
#[allow(clippy::too_many_arguments)]
pub fn completeness_check<F: Fn(f64) -> f64>(
    psi: F,
    support: (f64, f64),
    nu: f64,
    bc: &BoundaryCondition,
    a: f64,
    r0: f64,
    k_max: f64,
    quad_tol: f64,
) -> Result<f64> {
    let (s_lo, s_hi) = support;
    if k_max.is_nan() || k_max <= 1.0 || s_lo <= a || s_hi <= s_lo || quad_tol <= 0.0 {
        return Err(Error::InvalidGrid {
            r_max: s_hi,
            n_steps: 0,
        });
    }

    // regular solution D_nu(ka, k r) given the mixing pair at this k
    let d_fn = |jc: f64, yc: f64, k: f64, r: f64| -> Result<f64> {
        let q = bessel_quad(nu, k * r)?;
        Ok(yc * q.j - jc * q.y)
    };

    let mut outer = |k: f64| -> f64 {
        let (jc, yc, _) = match mixing_at(nu, k, a, bc) {
            Ok(v) => v,
            Err(_) => return 0.0, // k below the representable range contributes nothing
        };
        let d2 = jc * jc + yc * yc;
        let at_r0 = match d_fn(jc, yc, k, r0) {
            Ok(v) => v,
            Err(_) => return 0.0,
        };
        // inner s-integral: smooth bump times an oscillation of wavenumber k
        let panels = (((s_hi - s_lo) * k / 2.0).ceil() as usize).max(6);
        let mut inner = |s: f64| d_fn(jc, yc, k, s).unwrap_or(0.0) * psi(s) * s;
        let inner_val = integrate_panels(&mut inner, s_lo, s_hi, panels);
        at_r0 * inner_val * k / d2
    };

    // The k-integrand oscillates with period 2 pi / max(r0, s_hi); the
    // spectral weight for nu -> 0 concentrates logarithmically near k = 0,
    // so the first unit of k gets its own log-spaced panel set.
    let r_big = s_hi.max(r0);
    let k_eps = 1e-7;
    let split = 1.0_f64.min(0.5 * k_max);
    let log_panels = 48;
    let mut low = 0.0;
    let mut lo_edges = Vec::with_capacity(log_panels + 1);
    for i in 0..=log_panels {
        lo_edges.push(k_eps * (split / k_eps).powf(i as f64 / log_panels as f64));
    }
    for w in lo_edges.windows(2) {
        low += integrate_panels(&mut outer, w[0], w[1], 1);
    }
    let base_panels = (((k_max - split) * r_big * 4.0 / PI).ceil() as usize).max(8);
    let (high, err) = integrate_adaptive(
        &mut outer,
        split,
        k_max,
        base_panels,
        quad_tol,
        6,
    )?;
    let _ = err;
    Ok(low + high)
}
