//! Panel-based Gauss-Legendre quadrature with refinement error control.
//! Nodes and weights are generated at startup by Newton iteration on the
//! Legendre recurrence, so no tabulated constants enter the crate.

use crate::error::{Error, Result};
use std::sync::OnceLock;

const GL_N: usize = 16;

/// Legendre P_n and P_n' at x by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Nodes and weights of n-point Gauss-Legendre on [-1, 1].
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..60 {
            let (p, dp) = legendre(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre(n, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn gl16() -> &'static (Vec<f64>, Vec<f64>) {
    static TABLE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    TABLE.get_or_init(|| gauss_legendre(GL_N))
}

/// Integrate f over [a, b] with `panels` equal GL16 panels.
pub(crate) fn integrate_panels<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64, panels: usize) -> f64 {
    let (nodes, weights) = gl16();
    let w = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + w * p as f64;
        let mid = lo + 0.5 * w;
        let half = 0.5 * w;
        let mut acc = 0.0;
        for i in 0..GL_N {
            acc += weights[i] * f(mid + half * nodes[i]);
        }
        total += acc * half;
    }
    total
}

/// Refine by doubling the panel count until two successive evaluations
/// agree within `tol` (absolute).  Returns (value, error estimate).
pub(crate) fn integrate_adaptive<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    base_panels: usize,
    tol: f64,
    max_doublings: usize,
) -> Result<(f64, f64)> {
    let mut panels = base_panels.max(1);
    let mut prev = integrate_panels(f, a, b, panels);
    for _ in 0..max_doublings {
        panels *= 2;
        let cur = integrate_panels(f, a, b, panels);
        let err = (cur - prev).abs();
        if err <= tol {
            return Ok((cur, err));
        }
        prev = cur;
    }
    Err(Error::QuadratureNoConverge {
        err: f64::NAN,
        tol,
    })
}
