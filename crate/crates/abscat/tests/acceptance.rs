//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them all).

use abscat::amplitude::{amplitude, cross_section, zero_radius_cross_section};
use abscat::oracle;
use abscat::phase_shift::{phase_shift, s_matrix, BoundaryCondition, SectorParams};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::time::Instant;

fn report(n: u32, pass: bool, detail: &str) {
    println!(
        "criterion {n:2} {}: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} failed: {detail}");
}

/// deterministic uniform stream for the randomized criteria
fn lcg(state: &mut u64) -> f64 {
    *state = state
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    ((*state >> 11) as f64) / ((1_u64 << 53) as f64)
}

fn bcs_with(lambda: f64) -> [BoundaryCondition; 3] {
    [
        BoundaryCondition::Dirichlet,
        BoundaryCondition::Neumann,
        BoundaryCondition::Robin { lambda },
    ]
}

#[test]
fn criterion_01_unitarity() {
    let t0 = Instant::now();
    let lambdas = [
        BoundaryCondition::Robin { lambda: 0.0 },
        BoundaryCondition::Robin { lambda: 0.1 },
        BoundaryCondition::Robin { lambda: 1.0 },
        BoundaryCondition::Robin { lambda: 10.0 },
        BoundaryCondition::Neumann,
    ];
    let alphas = [0.0, 0.25, 0.5, 0.9];
    let kas: Vec<f64> = (0..10)
        .map(|i| 1e-3 * (1e6_f64).powf(i as f64 / 9.0))
        .collect();
    let mut n_points = 0_u64;
    let mut worst = 0.0_f64;
    for m in -10..=10 {
        for &alpha in &alphas {
            for bc in &lambdas {
                let sector = SectorParams::new(m, alpha, 1.0, *bc).unwrap();
                for &ka in &kas {
                    let s = s_matrix(&sector, ka).unwrap();
                    worst = worst.max((s.norm() - 1.0).abs());
                    n_points += 1;
                }
            }
        }
    }
    let dt = t0.elapsed().as_secs_f64();
    report(
        1,
        n_points >= 4000 && worst <= 1e-12 && dt < 5.0,
        &format!("|S| - 1 max {worst:.2e} over {n_points} points (limit 1e-12), {dt:.2} s"),
    );
}

#[test]
fn criterion_02_special_functions() {
    // Wronskian on a 50x50 log grid
    let mut worst_w = 0.0_f64;
    for i in 0..50 {
        for j in 0..50 {
            let nu = 60.0 * i as f64 / 49.0;
            let x = 1e-3 * (1e6_f64).powf(j as f64 / 49.0);
            let q = abscat::bessel_quad(nu, x).unwrap();
            let w = q.j * q.yp - q.jp * q.y;
            let exact = 2.0 / (PI * x);
            worst_w = worst_w.max(((w - exact) / exact).abs());
        }
    }

    // half-integer closed forms, envelope-relative at the zeros
    let mut worst_h = 0.0_f64;
    let mut x = 0.05;
    while x < 90.0 {
        let q = abscat::bessel_quad(0.5, x).unwrap();
        let env = (2.0 / (PI * x)).sqrt();
        worst_h = worst_h.max((q.j - env * x.sin()).abs() / env);
        worst_h = worst_h.max((q.y + env * x.cos()).abs() / env);
        x += 0.45;
    }

    // 200 random points against the extended-precision reference
    let mut state = 0x9e37_79b9_7f4a_7c15_u64;
    let mut worst_r = 0.0_f64;
    for _ in 0..200 {
        let nu = 30.0 * lcg(&mut state);
        let x = 1e-2 * (1e4_f64).powf(lcg(&mut state));
        let q = abscat::bessel_quad(nu, x).unwrap();
        let (jr, yr) = oracle::bessel_reference_f64(nu, x, 25).unwrap();
        let env = jr.hypot(yr);
        let rel = |got: f64, want: f64| {
            let d = (got - want).abs();
            (d / want.abs().max(1e-300)).min(d / (1e-3 * env))
        };
        worst_r = worst_r.max(rel(q.j, jr)).max(rel(q.y, yr));
    }

    report(
        2,
        worst_w < 1e-10 && worst_h < 1e-12 && worst_r < 1e-10,
        &format!(
            "wronskian {worst_w:.2e} (1e-10), half-integer {worst_h:.2e} (1e-12), reference {worst_r:.2e} (1e-10)"
        ),
    );
}

#[test]
fn criterion_03_ode_oracle_equivalence() {
    let t0 = Instant::now();
    let mut state = 0x51a7_df25_u64;
    let draws: Vec<(i32, f64, f64, BoundaryCondition)> = (0..30)
        .map(|i| {
            let m = (lcg(&mut state) * 11.0) as i32 - 5;
            let alpha = lcg(&mut state);
            let ka = 0.5 * (40.0_f64).powf(lcg(&mut state));
            let bc = match i % 3 {
                0 => BoundaryCondition::Dirichlet,
                1 => BoundaryCondition::Neumann,
                _ => BoundaryCondition::Robin {
                    lambda: 10.0_f64.powf(2.0 * lcg(&mut state) - 1.0),
                },
            };
            (m, alpha, ka, bc)
        })
        .collect();

    // draws are independent; run them across threads
    let n_workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(4)
        .min(8);
    let worst = std::sync::Mutex::new(0.0_f64);
    std::thread::scope(|scope| {
        for chunk in draws.chunks(draws.len().div_ceil(n_workers)) {
            let worst = &worst;
            scope.spawn(move || {
                let mut local = 0.0_f64;
                for &(m, alpha, ka, bc) in chunk {
                    let a = 1.0;
                    let k = ka / a;
                    let sector = SectorParams::new(m, alpha, a, bc).unwrap();
                    let nu = sector.nu();
                    let (r_max, n_steps) = oracle::suggested_grid(nu, k, a, 1e-4);
                    let sol = oracle::integrate_radial(nu, k, a, &bc, r_max, n_steps).unwrap();
                    let fit = oracle::extract_phase_shift(&sol, m, alpha).unwrap();
                    let exact = oracle::mod_pi(phase_shift(&sector, k).unwrap());
                    local = local.max(oracle::mod_pi(fit.delta_mod_pi - exact).abs());
                }
                let mut w = worst.lock().unwrap();
                *w = w.max(local);
            });
        }
    });
    let worst = *worst.lock().unwrap();
    let dt = t0.elapsed().as_secs_f64();
    report(
        3,
        worst < 1e-4 && dt < 60.0,
        &format!("max |delta_ode - delta_closed| mod pi = {worst:.2e} over 30 draws (limit 1e-4), {dt:.1} s"),
    );
}

#[test]
fn criterion_04_high_energy_regime() {
    let k = 200.0;
    let mut worst_rn = 0.0_f64;
    let mut worst_dn = 0.0_f64;
    for &m in &[0, 1] {
        for &alpha in &[0.0, 0.5] {
            let s = |bc: BoundaryCondition| {
                s_matrix(&SectorParams::new(m, alpha, 1.0, bc).unwrap(), k).unwrap()
            };
            let sd = s(BoundaryCondition::Dirichlet);
            let sn = s(BoundaryCondition::Neumann);
            let sr = s(BoundaryCondition::Robin { lambda: 1.0 });
            worst_rn = worst_rn.max((sr - sn).norm());
            // S_N e^{-i pi} = -S_N
            worst_dn = worst_dn.max((sd + sn).norm());
        }
    }
    report(
        4,
        worst_rn <= 1e-2 && worst_dn <= 5e-2,
        &format!("ka=200: |S_R(1)-S_N| max {worst_rn:.4e} (1e-2), |S_D - S_N e^(-i pi)| max {worst_dn:.4e} (5e-2)"),
    );
}

#[test]
fn criterion_05_low_energy_regime() {
    let alpha = 0.5;
    let m = 0;
    let nu = 0.5;
    let bcs = bcs_with(1.0);

    // pairwise indistinguishability at ka = 1e-3
    let mut worst_pair = 0.0_f64;
    let at = |bc: BoundaryCondition, ka: f64| {
        s_matrix(&SectorParams::new(m, alpha, 1.0, bc).unwrap(), ka).unwrap()
    };
    for i in 0..3 {
        for j in (i + 1)..3 {
            worst_pair = worst_pair.max((at(bcs[i], 1e-3) - at(bcs[j], 1e-3)).norm());
        }
    }

    // |S - e^{i beta}| scales as (ka)^{2 nu}: exponent from a decade ratio
    let beta_phase = Complex64::from_polar(1.0, PI * (0.0 - nu));
    let mut exps = Vec::new();
    for bc in bcs {
        let e3 = (at(bc, 1e-3) - beta_phase).norm();
        let e4 = (at(bc, 1e-4) - beta_phase).norm();
        exps.push((e3 / e4).log10());
    }
    let target = 2.0 * nu;
    let exp_ok = exps
        .iter()
        .all(|e| (e - target).abs() <= 0.1 * target);

    report(
        5,
        worst_pair <= 1e-2 && exp_ok,
        &format!(
            "pairwise |S_l - S_l'| max {worst_pair:.2e} (1e-2); decay exponents {:.3?} vs 2nu = {target} (+-10%)",
            exps
        ),
    );
}

#[test]
fn criterion_06_zero_radius_cross_section() {
    let x = zero_radius_cross_section(1.0, PI, 0.5).unwrap();
    let exact = 1.0 / (2.0 * PI);
    let err = (x - exact).abs();
    report(
        6,
        err <= 1e-12,
        &format!("|f_alpha|^2 at (k=1, theta=pi, alpha=1/2) = {x:.15}, |err| = {err:.2e} (limit 1e-12)"),
    );
}

#[test]
fn criterion_07_low_energy_collapse() {
    let k = 0.1;
    let tol = 1e-10;
    let mut worst = 0.0_f64;
    for &theta in &[PI / 4.0, PI / 2.0, 3.0 * PI / 4.0, PI] {
        let reference = zero_radius_cross_section(k, theta, 0.5).unwrap();
        for bc in bcs_with(1.0) {
            let x = cross_section(k, theta, 0.5, 1.0, &bc, tol).unwrap();
            worst = worst.max((x - reference).abs() / reference);
        }
    }
    report(
        7,
        worst <= 0.10,
        &format!("max relative deviation from the zero-radius formula {worst:.3} (limit 0.10)"),
    );
}

#[test]
fn criterion_08_intermediate_energy_separation() {
    let k = 1.5;
    let tol = 1e-10;
    let mut best = 0.0_f64;
    let mut best_theta = 0.0;
    for i in 1..=120 {
        let theta = PI * i as f64 / 120.0;
        let d = cross_section(k, theta, 0.5, 1.0, &BoundaryCondition::Dirichlet, tol).unwrap();
        let n = cross_section(k, theta, 0.5, 1.0, &BoundaryCondition::Neumann, tol).unwrap();
        let rel = (d - n).abs() / d.max(n);
        if rel > best {
            best = rel;
            best_theta = theta;
        }
    }
    report(
        8,
        best >= 0.25,
        &format!("max Dirichlet/Neumann separation {best:.3} at theta = {best_theta:.3} (need >= 0.25)"),
    );
}

/// Known red: the true deviations at these parameters are 10.0-10.9%
/// (lambda = 1/10 vs Dirichlet) and 12.0% (lambda = 10 vs Neumann at k = 1),
/// confirmed against an independent implementation of the partial-wave sum,
/// so the 10% demand cannot be met.  The interpolation itself is real — the
/// same comparison on the amplitude scale is within 6.2%, and by
/// lambda = 100 the Neumann gap closes to 1.4% — but this check keeps the
/// stated cross-section bound rather than weakening it.
#[test]
fn criterion_09_robin_interpolation() {
    let tol = 1e-10;
    let theta = PI / 2.0;
    let mut worst_d = 0.0_f64;
    let mut worst_n = 0.0_f64;
    for &k in &[1.0, 5.0] {
        let d = cross_section(k, theta, 0.5, 1.0, &BoundaryCondition::Dirichlet, tol).unwrap();
        let n = cross_section(k, theta, 0.5, 1.0, &BoundaryCondition::Neumann, tol).unwrap();
        let r_small =
            cross_section(k, theta, 0.5, 1.0, &BoundaryCondition::Robin { lambda: 0.1 }, tol)
                .unwrap();
        let r_large =
            cross_section(k, theta, 0.5, 1.0, &BoundaryCondition::Robin { lambda: 10.0 }, tol)
                .unwrap();
        worst_d = worst_d.max((r_small - d).abs() / d);
        worst_n = worst_n.max((r_large - n).abs() / n);
    }
    report(
        9,
        worst_d <= 0.10 && worst_n <= 0.10,
        &format!("lambda=1/10 vs Dirichlet {worst_d:.3}, lambda=10 vs Neumann {worst_n:.3} (limits 0.10)"),
    );
}

#[test]
fn criterion_10_flux_shift_identity() {
    let tol = 1e-10;
    let mut state = 0xabcd_1234_u64;
    let mut worst_shift = 0.0_f64;
    let mut worst_period = 0.0_f64;
    for _ in 0..10 {
        let k = 0.3 * (20.0_f64).powf(lcg(&mut state));
        let theta = 0.2 + (PI - 0.3) * lcg(&mut state);
        let lambda = 10.0_f64.powf(2.0 * lcg(&mut state) - 1.0);
        let alpha = 0.05 + 0.9 * lcg(&mut state);
        let bc = BoundaryCondition::Robin { lambda };
        // alpha -> alpha - 1 leaves the modulus invariant (theta != 0)
        let f1 = amplitude(k, theta, alpha, 1.0, &bc, tol).unwrap();
        let f2 = amplitude(k, theta, alpha - 1.0, 1.0, &bc, tol).unwrap();
        worst_shift = worst_shift.max((f1.norm() - f2.norm()).abs());
        // and the cross section is 1-periodic in the flux
        let x1 = cross_section(k, theta, alpha, 1.0, &bc, tol).unwrap();
        let x2 = cross_section(k, theta, alpha + 1.0, 1.0, &bc, tol).unwrap();
        worst_period = worst_period.max((x1 - x2).abs());
    }
    report(
        10,
        worst_shift <= 2.0 * tol && worst_period <= 2.0 * tol,
        &format!("shift modulus gap {worst_shift:.2e}, periodicity gap {worst_period:.2e} (limits 2e-10)"),
    );
}

#[test]
fn criterion_11_completeness() {
    let t0 = Instant::now();
    let a = 1.0;
    let center = a + 1.5;
    let f = oracle::bump(center, 1.0);
    let exact = f(center);
    let mut details = Vec::new();
    let mut pass = true;
    for (nu, bc, tol) in [
        (0.5, BoundaryCondition::Robin { lambda: 0.0 }, 1e-3),
        (0.5, BoundaryCondition::Robin { lambda: 1.0 }, 1e-3),
        (0.0, BoundaryCondition::Robin { lambda: 1.0 }, 1e-2),
    ] {
        let got = oracle::completeness_check(&f, (a + 0.5, a + 2.5), nu, &bc, a, center, 60.0, 1e-5)
            .unwrap();
        let rel = (got - exact).abs() / exact;
        pass &= rel <= tol;
        details.push(format!("nu={nu} lambda={bc}: {rel:.2e} (limit {tol:.0e})"));
    }
    let dt = t0.elapsed().as_secs_f64();
    pass &= dt < 120.0;
    report(
        11,
        pass,
        &format!("bump reconstruction {} , {dt:.1} s", details.join("; ")),
    );
}

#[test]
fn criterion_12_csv_determinism() {
    let bin = env!("CARGO_BIN_EXE_abscat");
    let tmp = std::env::temp_dir();
    let mut pass = true;
    let mut detail = String::new();
    for id in 1..=5u32 {
        let mut outputs = Vec::new();
        for run in 0..2 {
            let path = tmp.join(format!("abscat_fig{id}_{run}.csv"));
            let status = std::process::Command::new(bin)
                .args([
                    "figure",
                    "--id",
                    &id.to_string(),
                    "--out",
                    path.to_str().unwrap(),
                ])
                .status()
                .unwrap();
            assert!(status.success(), "figure --id {id} failed");
            outputs.push(std::fs::read(&path).unwrap());
            let _ = std::fs::remove_file(&path);
        }
        let same = outputs[0] == outputs[1];
        pass &= same;
        detail.push_str(&format!("fig{id}:{} ", if same { "identical" } else { "DIFFERS" }));
    }
    report(12, pass, &format!("byte-identical repeated runs: {detail}"));
}
