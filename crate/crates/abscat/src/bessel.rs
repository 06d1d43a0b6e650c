//! Bessel functions J_nu, Y_nu of real non-negative order, their argument
//! derivatives, and Hankel combinations.  This is the numerical kernel every
//! scattering quantity in the crate is built on.
//!
//! Evaluation strategy by region:
//! * `x < 2`: ascending power series for J_nu and J_{nu+1}; Temme's uniform
//!   series for Y_mu, Y_{mu+1} at the reduced order |mu| <= 1/2 (the stable
//!   realization of the connection formula, including the integer-order
//!   limit), then upward recurrence in the order.
//! * `2 <= x`, moderate: Steed's method — CF1 for J'_nu/J_nu, downward
//!   recurrence to the reduced order, CF2 for the Hankel logarithmic
//!   derivative, Wronskian normalization, upward recurrence for Y.
//! * large `x` (beyond both thresholds below): Hankel asymptotic expansion
//!   in the P, Q modulus/phase form, with a fallback to Steed if the series
//!   stalls.
//!
//! Derivatives are always produced through the order recurrence
//! J'_nu = (nu/x) J_nu - J_{nu+1} (same for Y), never by differencing.

use crate::error::{Error, Result};
use crate::gamma::{gam1, gam2, gamma, recip_gamma_pair};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Values of J_nu, Y_nu and their argument derivatives at one (nu, x).
#[derive(Debug, Clone, Copy)]
pub struct BesselQuad {
    pub nu: f64,
    pub x: f64,
    /// J_nu(x)
    pub j: f64,
    /// Y_nu(x)
    pub y: f64,
    /// J'_nu(x), derivative in the argument
    pub jp: f64,
    /// Y'_nu(x)
    pub yp: f64,
}

const SMALL_X: f64 = 2.0;
const ASYM_MIN_X: f64 = 600.0;
const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-300;
const MAX_CF_ITER: usize = 400_000;

/// Evaluate the (J, Y, J', Y') bundle at real order `nu >= 0` and `x > 0`.
pub fn bessel_quad(nu: f64, x: f64) -> Result<BesselQuad> {
    if !nu.is_finite() || !x.is_finite() || nu < 0.0 || x <= 0.0 {
        return Err(Error::BesselDomain { nu, x });
    }
    let vals = if x < SMALL_X {
        small_x_quad(nu, x)
    } else if x >= ASYM_MIN_X && x >= 4.0 * (nu + 1.0) * (nu + 1.0) {
        match asymptotic_quad(nu, x) {
            Some(v) => Ok(v),
            None => steed_quad(nu, x),
        }
    } else {
        steed_quad(nu, x)
    }?;
    let (j, y, jp, yp) = vals;
    if !(j.is_finite() && y.is_finite() && jp.is_finite() && yp.is_finite()) {
        return Err(Error::BesselOverflow { nu, x });
    }
    Ok(BesselQuad { nu, x, j, y, jp, yp })
}

/// Hankel function H^(1)_nu = J + iY and its derivative from a quad.
/// H^(2) is the complex conjugate since j, y are real.
pub fn hankel1(q: &BesselQuad) -> (Complex64, Complex64) {
    (Complex64::new(q.j, q.y), Complex64::new(q.jp, q.yp))
}

/// Ascending power series for J_nu(x); good to ~1e-14 relative for x <= 2.5.
fn j_series(nu: f64, x: f64) -> f64 {
    let q = 0.5 * x;
    let mq2 = -q * q;
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 1..200 {
        term *= mq2 / (j as f64 * (nu + j as f64));
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    // the prefactor may underflow for large nu and tiny x; the sum is O(1)
    q.powf(nu) / gamma(nu + 1.0) * sum
}

/// Temme's series for Y_mu(x) and Y_{mu+1}(x), |mu| <= 1/2, 0 < x <= 2.
fn temme_y(mu: f64, x: f64) -> Result<(f64, f64)> {
    let x2 = 0.5 * x;
    let xi2 = 2.0 / x;
    let pimu = PI * mu;
    let fact = if pimu.abs() < 1e-290 {
        1.0
    } else {
        pimu / pimu.sin()
    };
    let d = -x2.ln();
    let e = mu * d;
    let fact2 = if e.abs() < 1e-290 { 1.0 } else { e.sinh() / e };
    let g1 = gam1(mu);
    let g2 = gam2(mu);
    let mut ff = 2.0 / PI * fact * (g1 * e.cosh() + g2 * fact2 * d);
    let ee = e.exp(); // (2/x)^mu
    let (rgp, rgm) = recip_gamma_pair(mu); // 1/Gamma(1+mu), 1/Gamma(1-mu)
    let mut p = ee / (PI * rgp); // Gamma(1+mu) (2/x)^mu / pi
    let mut q = 1.0 / (ee * PI * rgm); // Gamma(1-mu) (x/2)^mu / pi
    let pimu2 = 0.5 * pimu;
    let fact3 = if pimu2.abs() < 1e-290 {
        1.0
    } else {
        pimu2.sin() / pimu2
    };
    let r = PI * pimu2 * fact3 * fact3;
    let mut c = 1.0;
    let dd = -x2 * x2;
    let mut sum = ff + r * q;
    let mut sum1 = p;
    let mut converged = false;
    for i in 1..=1000 {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu * mu);
        c *= dd / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * (ff + r * q);
        sum += del;
        let del1 = c * p - fi * del;
        sum1 += del1;
        if del.abs() < (1.0 + sum.abs()) * EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::BesselNoConverge { nu: mu, x });
    }
    Ok((-sum, -sum1 * xi2))
}

/// Small-argument branch: series J, Temme Y, upward order recurrence.
fn small_x_quad(nu: f64, x: f64) -> Result<(f64, f64, f64, f64)> {
    let j = j_series(nu, x);
    let j1 = j_series(nu + 1.0, x);
    let jp = nu / x * j - j1;

    let nl = (nu + 0.5).floor() as i64; // nearest integer at or below nu+1/2
    let mu = nu - nl as f64;
    let (mut ym, mut ym1) = temme_y(mu, x)?;
    let xi2 = 2.0 / x;
    for i in 0..nl {
        let next = (mu + (i + 1) as f64) * xi2 * ym1 - ym;
        ym = ym1;
        ym1 = next;
        if ym1.is_infinite() {
            return Err(Error::BesselOverflow { nu, x });
        }
    }
    // loop ends with (ym, ym1) = (Y_nu, Y_{nu+1})
    let yp = nu / x * ym - ym1;
    Ok((j, ym, jp, yp))
}

/// Steed's method (CF1 + CF2 + Wronskian) for x >= 2.
fn steed_quad(nu: f64, x: f64) -> Result<(f64, f64, f64, f64)> {
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1: h = J'_nu/J_nu by modified Lentz; isign tracks sign flips of J.
    let mut isign = 1.0_f64;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let mut ok = false;
    for _ in 0..MAX_CF_ITER {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            ok = true;
            break;
        }
    }
    if !ok {
        return Err(Error::BesselNoConverge { nu, x });
    }

    // downward recurrence from nu to mu, |mu| within 1/2 of min(nu, ~x)
    let nl = ((nu - x + 1.5).floor() as i64).max(0);
    let mu = nu - nl as f64;
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl_seed = rjl;
    let rjpl_seed = rjpl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl; // J'_mu/J_mu

    // CF2: p + iq = (J'_mu + iY'_mu)/(J_mu + iY_mu), complex Lentz
    let mu2 = mu * mu;
    let mut a = 0.25 - mu2;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fct = a * xi / (p * p + q * q);
    let mut cr = br + q * fct;
    let mut ci = bi + p * fct;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    ok = false;
    for i in 2..=MAX_CF_ITER {
        a += 2.0 * (i - 1) as f64;
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fct = a / (cr * cr + ci * ci);
        cr = br + cr * fct;
        ci = bi - ci * fct;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() < EPS {
            ok = true;
            break;
        }
    }
    if !ok {
        return Err(Error::BesselNoConverge { nu, x });
    }

    let gam = (p - f) / q;
    let rjmu = (w / ((p - f) * gam + q)).sqrt().copysign(rjl);
    let rymu = rjmu * gam;
    let rymup = rymu * (p + q / gam);
    let mut ry1 = mu * xi * rymu - rymup;
    let mut rym = rymu;

    let scale = rjmu / rjl;
    let j = rjl_seed * scale;
    let jp = rjpl_seed * scale;

    for i in 1..=nl {
        let rytemp = (mu + i as f64) * xi2 * ry1 - rym;
        rym = ry1;
        ry1 = rytemp;
    }
    let y = rym;
    let yp = nu * xi * rym - ry1;
    Ok((j, y, jp, yp))
}

/// One (J_nu, Y_nu) pair from the Hankel P/Q asymptotic expansion.
/// Returns None if the series has not reached ~1e-16 before its terms
/// start growing (caller falls back to Steed).
fn hankel_asymptotic_jy(nu: f64, x: f64) -> Option<(f64, f64)> {
    let mu4 = 4.0 * nu * nu;
    let x8 = 8.0 * x;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0_f64;
    let mut prev = f64::INFINITY;
    let mut done = false;
    for k in 1..=40usize {
        let odd = (2 * k - 1) as f64;
        term *= (mu4 - odd * odd) / (k as f64 * x8);
        if k % 2 == 1 {
            let s = if ((k - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
            q += s * term;
        } else {
            let s = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            p += s * term;
        }
        let t = term.abs();
        if t < 1e-17 {
            done = true;
            break;
        }
        if t > prev && t > 1e-15 {
            return None;
        }
        prev = t;
    }
    if !done {
        return None;
    }
    let omega = x - (0.5 * nu + 0.25) * PI;
    let (s, c) = omega.sin_cos();
    let env = (2.0 / (PI * x)).sqrt();
    Some((env * (p * c - q * s), env * (p * s + q * c)))
}

fn asymptotic_quad(nu: f64, x: f64) -> Option<(f64, f64, f64, f64)> {
    let (j, y) = hankel_asymptotic_jy(nu, x)?;
    let (j1, y1) = hankel_asymptotic_jy(nu + 1.0, x)?;
    Some((j, y, nu / x * j - j1, nu / x * y - y1))
}


/// Branch internals exposed for cross-validation in examples/tests.
#[doc(hidden)]
pub mod test_hooks {
    use super::*;
    pub fn asymptotic(nu: f64, x: f64) -> Option<(f64, f64, f64, f64)> {
        asymptotic_quad(nu, x)
    }
    pub fn steed(nu: f64, x: f64) -> crate::error::Result<(f64, f64, f64, f64)> {
        steed_quad(nu, x)
    }
    pub fn small_x(nu: f64, x: f64) -> crate::error::Result<(f64, f64, f64, f64)> {
        small_x_quad(nu, x)
    }
}
