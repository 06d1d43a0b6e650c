//! Scattering amplitudes and differential cross sections.
//!
//! The amplitude splits into the closed-form zero-radius part f_alpha plus a
//! convergent radius-correction series
//!
//!   f_{r,lambda} = -(2/(pi i k))^{1/2} sum_m e^{2i Delta_m} jc_m / (jc_m + i yc_m) e^{i m theta},
//!
//! with (jc, yc) the boundary mixing coefficients at nu = |m + alpha|.  The
//! coefficients decay super-exponentially once nu > ka, which drives the
//! truncation rule.  The forward direction theta = 0 is a hard domain error:
//! the distributional part of f_alpha lives there and is out of scope.

use crate::error::{Error, Result};
use crate::phase_shift::{mixing_at, BoundaryCondition};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Truncated partial-wave sum with its truncation order and tail bound.
#[derive(Debug, Clone)]
pub struct AmplitudeSeries {
    pub k: f64,
    pub theta: f64,
    pub alpha: f64,
    pub a: f64,
    pub bc: BoundaryCondition,
    /// symmetric truncation order: the sum ran over m in [-m_max, m_max]
    pub m_max: i32,
    pub value: Complex64,
    /// bound on the dropped tail, same units as |value|
    pub tail_bound: f64,
}

/// Rows of (k, theta, dsigma/dtheta) ready for CSV emission.
#[derive(Debug, Clone)]
pub struct CrossSectionTable {
    pub rows: Vec<CrossSectionRow>,
    pub meta: TableMeta,
}

#[derive(Debug, Clone, Copy)]
pub struct CrossSectionRow {
    pub k: f64,
    pub theta: f64,
    pub dsigma: f64,
}

#[derive(Debug, Clone)]
pub struct TableMeta {
    pub alpha: f64,
    pub a: f64,
    pub bc: BoundaryCondition,
    pub m_max: i32,
    pub tol: f64,
}

impl CrossSectionTable {
    pub fn new(rows: Vec<CrossSectionRow>, meta: TableMeta) -> Result<Self> {
        for r in &rows {
            if !(r.theta > 0.0 && r.theta < 2.0 * PI) {
                return Err(Error::ThetaOutOfRange { theta: r.theta });
            }
            debug_assert!(r.dsigma >= 0.0);
        }
        Ok(CrossSectionTable { rows, meta })
    }
}

fn check_theta(theta: f64) -> Result<()> {
    if !theta.is_finite() || theta <= 0.0 || theta >= 2.0 * PI {
        return Err(Error::ThetaOutOfRange { theta });
    }
    Ok(())
}

fn check_k(k: f64) -> Result<()> {
    if !k.is_finite() || k <= 0.0 {
        return Err(Error::InvalidWavenumber { k });
    }
    Ok(())
}

/// (2 pi i k)^{-1/2} on the principal branch: (2 pi k)^{-1/2} e^{-i pi/4}.
fn inv_sqrt_2piik(k: f64) -> Complex64 {
    Complex64::from_polar(1.0 / (2.0 * PI * k).sqrt(), -PI / 4.0)
}

/// Zero-radius Aharonov-Bohm amplitude for canonical alpha in [0, 1):
/// f_alpha = sin(pi alpha) / (2 pi i k)^{1/2} e^{-i theta/2} / sin(theta/2).
/// Exactly zero at alpha = 0.
pub fn f_zero_radius(k: f64, theta: f64, alpha: f64) -> Result<Complex64> {
    check_k(k)?;
    check_theta(theta)?;
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::AlphaOutOfRange { alpha });
    }
    if alpha == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let pref = inv_sqrt_2piik(k) * (PI * alpha).sin() / (0.5 * theta).sin();
    Ok(pref * Complex64::from_polar(1.0, -0.5 * theta))
}

/// Zero-radius differential cross section (1/(2 pi k)) sin^2(pi alpha)/sin^2(theta/2).
pub fn zero_radius_cross_section(k: f64, theta: f64, alpha: f64) -> Result<f64> {
    Ok(f_zero_radius(k, theta, alpha)?.norm_sqr())
}

/// Zero-radius amplitude for arbitrary real flux, by Abel summation of the
/// defining Fourier series.  The sectors split into two geometric rays with
/// phases e^{-/+ i pi alpha} plus finitely many middle terms where m and
/// m + alpha have opposite signs; for alpha in [0, 1) this reduces to the
/// closed form above.  Used by the flux-shift identity paths.
fn f_zero_radius_general(k: f64, theta: f64, alpha: f64) -> Result<Complex64> {
    check_k(k)?;
    check_theta(theta)?;
    let hi_start = (-alpha).ceil().max(0.0) as i64; // m >= hi_start: m and m+alpha both >= 0
    let lo_end = (-alpha).floor().min(0.0) as i64; // m <= lo_end: both <= 0
    let eith = Complex64::from_polar(1.0, theta);
    let c_plus = Complex64::from_polar(1.0, -PI * alpha) - 1.0;
    let c_minus = Complex64::from_polar(1.0, PI * alpha) - 1.0;
    // sum_{m >= H} e^{im th} = e^{iH th}/(1 - e^{i th});  sum_{m <= L} = e^{iL th}/(1 - e^{-i th})
    let mut s = c_plus * Complex64::from_polar(1.0, hi_start as f64 * theta) / (1.0 - eith)
        + c_minus * Complex64::from_polar(1.0, lo_end as f64 * theta) / (1.0 - eith.conj());
    for m in (lo_end + 1)..hi_start {
        let d = delta_m_i64(m, alpha);
        s += (Complex64::from_polar(1.0, 2.0 * d) - 1.0)
            * Complex64::from_polar(1.0, m as f64 * theta);
    }
    Ok(inv_sqrt_2piik(k) * s)
}

fn delta_m_i64(m: i64, alpha: f64) -> f64 {
    let mf = m as f64;
    0.5 * PI * (mf.abs() - (mf + alpha).abs())
}

/// Partial-wave coefficients c_m = e^{2i Delta_m} jc_m / (jc_m + i yc_m)
/// for m in [-m_max, m_max], plus a bound on sum_{|m| > m_max} |c_m|.
/// Shared by the single-point series and the CLI sweeps (the coefficients
/// do not depend on theta).
pub(crate) struct PartialWaveCoeffs {
    pub m_max: i32,
    /// c_m stored at index (m + m_max)
    pub coeffs: Vec<Complex64>,
    /// bound on the absolute coefficient tail (prefactor excluded)
    pub coeff_tail: f64,
}

pub(crate) fn partial_wave_coeffs(
    k: f64,
    alpha: f64,
    a: f64,
    bc: &BoundaryCondition,
    coeff_tol: f64,
) -> Result<PartialWaveCoeffs> {
    let ka = k * a;
    let m_min = (ka.ceil() as i64) + 10;
    let m_cap = (10.0 * ka) as i64 + 200;
    let coeff = |m: i64| -> Result<Complex64> {
        let nu = (m as f64 + alpha).abs();
        let (jc, yc, _) = match mixing_at(nu, k, a, bc) {
            Ok(v) => v,
            // deep in the forbidden region Y_nu overflows while the
            // coefficient jc/(jc + i yc) has already fallen below any
            // representable magnitude
            Err(Error::BesselOverflow { .. }) => return Ok(Complex64::new(0.0, 0.0)),
            Err(e) => return Err(e),
        };
        let w = Complex64::new(jc, yc);
        let ratio = jc / w;
        // |S| = 1 forces every coefficient inside the unit circle
        debug_assert!(ratio.norm() <= 1.0 + 1e-12);
        Ok(Complex64::from_polar(1.0, 2.0 * delta_m_i64(m, alpha)) * ratio)
    };
    let c0 = coeff(0)?;
    let mut pos: Vec<Complex64> = Vec::new(); // m = 1..=M
    let mut neg: Vec<Complex64> = Vec::new(); // m = -1..=-M
    let mut m = 0_i64;
    let mut last_pair = f64::INFINITY;
    let mut prev_pair;
    let tail;
    loop {
        m += 1;
        if m > m_cap {
            return Err(Error::SeriesNotConverged {
                cap: m_cap,
                tol: coeff_tol,
            });
        }
        let cp = coeff(m)?;
        let cn = coeff(-m)?;
        pos.push(cp);
        neg.push(cn);
        prev_pair = last_pair;
        last_pair = cp.norm() + cn.norm();
        if m >= m_min && last_pair < coeff_tol && prev_pair < coeff_tol {
            // geometric majorant; the decay ratio only sharpens past here
            let r = if prev_pair > 0.0 {
                (last_pair / prev_pair).min(0.9)
            } else {
                0.5
            };
            tail = last_pair * r / (1.0 - r) + last_pair * f64::EPSILON;
            break;
        }
    }
    let m_max = m as i32;
    let mut coeffs = Vec::with_capacity(2 * m as usize + 1);
    for i in (0..neg.len()).rev() {
        coeffs.push(neg[i]);
    }
    coeffs.push(c0);
    coeffs.extend_from_slice(&pos);
    Ok(PartialWaveCoeffs {
        m_max,
        coeffs,
        coeff_tail: tail,
    })
}

impl PartialWaveCoeffs {
    /// Evaluate sum_m c_m e^{i m theta} with a rotating phasor.
    pub(crate) fn fourier_sum(&self, theta: f64) -> Complex64 {
        let m_max = self.m_max as f64;
        let rot = Complex64::from_polar(1.0, theta);
        let mut phase = Complex64::from_polar(1.0, -m_max * theta);
        let mut s = Complex64::new(0.0, 0.0);
        for c in &self.coeffs {
            s += c * phase;
            phase *= rot;
        }
        s
    }
}

/// Prefactor of the radius-correction series, -(2/(pi i k))^{1/2}.
pub(crate) fn series_prefactor(k: f64) -> Complex64 {
    -Complex64::from_polar((2.0 / (PI * k)).sqrt(), -PI / 4.0)
}

/// Radius-correction series f_{r,lambda}(k, theta).  `theta` is unrestricted
/// here (the series is smooth in theta); `alpha` may be any finite real,
/// with nu = |m + alpha| per term.
pub fn f_r_lambda(
    k: f64,
    theta: f64,
    alpha: f64,
    a: f64,
    bc: &BoundaryCondition,
    tol: f64,
) -> Result<AmplitudeSeries> {
    check_k(k)?;
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidTolerance { tol });
    }
    if !a.is_finite() || a <= 0.0 {
        return Err(Error::InvalidRadius { a });
    }
    let pref = series_prefactor(k);
    let pw = partial_wave_coeffs(k, alpha, a, bc, 0.5 * tol / pref.norm())?;
    let tail_bound = pw.coeff_tail * pref.norm();
    let value = pref * pw.fourier_sum(theta);
    Ok(AmplitudeSeries {
        k,
        theta,
        alpha,
        a,
        bc: *bc,
        m_max: pw.m_max,
        value,
        tail_bound,
    })
}

/// Full amplitude f_alpha^lambda = f_alpha + f_{r,lambda}.
///
/// `alpha` outside [0, 1) is accepted (the zero-radius part switches to the
/// Abel-summed general form), which is what the flux-shift identity tests
/// exercise; canonical callers pass alpha in [0, 1).
pub fn amplitude(
    k: f64,
    theta: f64,
    alpha: f64,
    a: f64,
    bc: &BoundaryCondition,
    tol: f64,
) -> Result<Complex64> {
    check_theta(theta)?;
    let zero = if (0.0..1.0).contains(&alpha) {
        f_zero_radius(k, theta, alpha)?
    } else {
        f_zero_radius_general(k, theta, alpha)?
    };
    Ok(zero + f_r_lambda(k, theta, alpha, a, bc, tol)?.value)
}

/// Differential cross section dsigma/dtheta = |f_alpha^lambda|^2.
pub fn cross_section(
    k: f64,
    theta: f64,
    alpha: f64,
    a: f64,
    bc: &BoundaryCondition,
    tol: f64,
) -> Result<f64> {
    Ok(amplitude(k, theta, alpha, a, bc, tol)?.norm_sqr())
}

/// Reduce an arbitrary real flux to the canonical range:
/// alpha_raw = alpha + n_shift with alpha in [0, 1).
pub fn canonicalize_flux(alpha_raw: f64) -> (f64, i64) {
    let mut n = alpha_raw.floor();
    let mut alpha = alpha_raw - n;
    if alpha >= 1.0 {
        // rounding at the upper edge (e.g. alpha_raw = -1e-17)
        alpha = 0.0;
        n += 1.0;
    }
    (alpha, n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-10;

    fn brute_force_series(
        k: f64,
        theta: f64,
        alpha: f64,
        a: f64,
        bc: &BoundaryCondition,
        m_big: i64,
    ) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for m in -m_big..=m_big {
            let nu = (m as f64 + alpha).abs();
            let q = match crate::bessel::bessel_quad(nu, k * a) {
                Ok(q) => q,
                Err(Error::BesselOverflow { .. }) => continue, // coefficient below underflow
                Err(e) => panic!("{e}"),
            };
            let (jc, yc) = bc.mixing(&q, k);
            let c = Complex64::from_polar(1.0, 2.0 * delta_m_i64(m, alpha)) * jc
                / Complex64::new(jc, yc);
            s += c * Complex64::from_polar(1.0, m as f64 * theta);
        }
        series_prefactor(k) * s
    }

    #[test]
    fn zero_radius_closed_form() {
        // k=1, theta=pi, alpha=1/2: modulus 1/sqrt(2 pi)
        let f = f_zero_radius(1.0, PI, 0.5).unwrap();
        assert!((f.norm() - 1.0 / (2.0 * PI).sqrt()).abs() < 1e-14);
        // alpha = 0 is exactly zero
        let f = f_zero_radius(1.0, PI / 2.0, 0.0).unwrap();
        assert_eq!(f, Complex64::new(0.0, 0.0));
        // 1/sqrt(2 pi k) scaling
        let f = f_zero_radius(4.0, PI, 0.5).unwrap();
        assert!((f.norm() - 1.0 / (8.0 * PI).sqrt()).abs() < 1e-14);
        // forward direction is a hard error
        assert!(matches!(
            f_zero_radius(1.0, 0.0, 0.5),
            Err(Error::ThetaOutOfRange { .. })
        ));
        assert!(matches!(
            f_zero_radius(1.0, 2.0 * PI, 0.5),
            Err(Error::ThetaOutOfRange { .. })
        ));
    }

    #[test]
    fn general_zero_radius_matches_closed_form() {
        for &alpha in &[0.1, 0.5, 0.9] {
            for &theta in &[0.3, PI / 2.0, PI, 5.0] {
                let a = f_zero_radius(1.3, theta, alpha).unwrap();
                let b = f_zero_radius_general(1.3, theta, alpha).unwrap();
                assert!((a - b).norm() < 1e-13, "alpha={alpha} theta={theta}");
            }
        }
    }

    #[test]
    fn zero_radius_cross_section_value() {
        // (1/(2 pi k)) sin^2(pi alpha)/sin^2(theta/2) at alpha=1/2, k=1, theta=pi
        let x = zero_radius_cross_section(1.0, PI, 0.5).unwrap();
        assert!((x - 1.0 / (2.0 * PI)).abs() < 1e-14);
    }

    #[test]
    fn series_matches_brute_force_reference() {
        // ka=1, alpha=1/2, lambda=1, theta=pi/2 against a fixed high-M sum
        let bc = BoundaryCondition::Robin { lambda: 1.0 };
        let f = f_r_lambda(1.0, PI / 2.0, 0.5, 1.0, &bc, TOL).unwrap();
        let brute = brute_force_series(1.0, PI / 2.0, 0.5, 1.0, &bc, 400);
        assert!(
            (f.value - brute).norm() < 1e-10,
            "diff={:.2e}",
            (f.value - brute).norm()
        );
        assert!(f.tail_bound <= TOL);
        assert!(f.m_max >= 11);
    }

    #[test]
    fn doubling_m_max_stays_within_tail_bound() {
        for bc in [
            BoundaryCondition::Dirichlet,
            BoundaryCondition::Neumann,
            BoundaryCondition::Robin { lambda: 0.3 },
        ] {
            let f = f_r_lambda(3.0, 1.1, 0.25, 1.0, &bc, 1e-9).unwrap();
            let wide = brute_force_series(3.0, 1.1, 0.25, 1.0, &bc, 2 * f.m_max as i64);
            assert!(
                (f.value - wide).norm() <= f.tail_bound.max(1e-14),
                "bc={bc} diff={:.2e} tail={:.2e}",
                (f.value - wide).norm(),
                f.tail_bound
            );
        }
    }

    #[test]
    fn alpha_zero_amplitude_is_series_alone() {
        let bc = BoundaryCondition::Dirichlet;
        let f = amplitude(2.0, 1.0, 0.0, 1.0, &bc, TOL).unwrap();
        let s = f_r_lambda(2.0, 1.0, 0.0, 1.0, &bc, TOL).unwrap();
        assert_eq!(f, s.value);
    }

    #[test]
    fn low_energy_amplitude_approaches_zero_radius() {
        // ka -> 0: |f_{r,lambda}| -> 0 so |f| ~ |f_alpha| within 1%
        let k = 1e-4;
        let bc = BoundaryCondition::Robin { lambda: 1.0 };
        let f = amplitude(k, PI / 2.0, 0.5, 1.0, &bc, TOL).unwrap();
        let f0 = f_zero_radius(k, PI / 2.0, 0.5).unwrap();
        assert!((f.norm() - f0.norm()).abs() / f0.norm() < 0.01);
    }

    #[test]
    fn shift_identity_equal_moduli() {
        // evaluating with alpha and alpha - 1 gives equal moduli at theta != 0
        let bc = BoundaryCondition::Robin { lambda: 0.7 };
        for &alpha in &[0.25, 0.5, 0.85] {
            let f1 = amplitude(1.7, PI / 2.0, alpha, 1.0, &bc, TOL).unwrap();
            let f2 = amplitude(1.7, PI / 2.0, alpha - 1.0, 1.0, &bc, TOL).unwrap();
            assert!(
                (f1.norm() - f2.norm()).abs() < 2.0 * TOL,
                "alpha={alpha}: {} vs {}",
                f1.norm(),
                f2.norm()
            );
        }
    }

    #[test]
    fn theta_symmetry_at_half_flux() {
        for bc in [
            BoundaryCondition::Dirichlet,
            BoundaryCondition::Neumann,
            BoundaryCondition::Robin { lambda: 1.0 },
        ] {
            for &alpha in &[0.0, 0.5] {
                for &theta in &[0.4, 1.3, 2.8] {
                    let x1 = cross_section(1.5, theta, alpha, 1.0, &bc, TOL).unwrap();
                    let x2 = cross_section(1.5, 2.0 * PI - theta, alpha, 1.0, &bc, TOL).unwrap();
                    assert!(
                        (x1 - x2).abs() <= 2.0 * TOL + 1e-12 * x1.abs(),
                        "bc={bc} alpha={alpha} theta={theta}"
                    );
                }
            }
        }
    }

    #[test]
    fn canonicalize_flux_cases() {
        assert_eq!(canonicalize_flux(1.25), (0.25, 1));
        assert_eq!(canonicalize_flux(-0.5), (0.5, -1));
        assert_eq!(canonicalize_flux(0.0), (0.0, 0));
        let (a, n) = canonicalize_flux(-1e-17);
        assert!((0.0..1.0).contains(&a));
        assert_eq!(a + n as f64, 0.0);
    }

    #[test]
    fn table_rejects_forward_angles() {
        let meta = TableMeta {
            alpha: 0.5,
            a: 1.0,
            bc: BoundaryCondition::Dirichlet,
            m_max: 10,
            tol: 1e-8,
        };
        let rows = vec![CrossSectionRow {
            k: 1.0,
            theta: 0.0,
            dsigma: 1.0,
        }];
        assert!(CrossSectionTable::new(rows, meta).is_err());
    }
}
