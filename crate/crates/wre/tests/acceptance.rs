//! Acceptance gate: one test per release criterion, each printing a
//! single PASS/FAIL line with its measured numbers.

mod common;

use std::time::Instant;

use common::{gamma_for_lambda0, mean_absolute_error, open_grid, spectrum_targeting};
use wre::entropy::{
    crossover_flag, entropy_given_lambda0, gap_empirical, gap_given_lambda0, integral_a1,
    integral_a2, integral_a4, moment_coefficient, page_entropy, renyi, renyi1_analytic,
    renyi2_analytic, renyi_min, von_neumann, Beta, ClosedFormInput,
};
use wre::quad::integrate_sqrt_edges;
use wre::quantum::exact_cover::{adiabatic_experiment, default_s_grid, ExactCoverInstance};
use wre::quantum::grover::{grover_experiment, GroverConfig};
use wre::quantum::prime::prime_state;
use wre::quantum::{bipartition_sweep, qft, random_state, reduced_spectrum};
use wre::randmat::{
    random_reduced_density, sample_gaussian_matrix, sample_real_gaussian_matrix, stream_rng,
    wishart,
};
use wre::spectral::{hermitian_eigenvalues, ks_distance, MpdParams};
use wre::EnsembleSpec;

fn report(number: usize, label: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("criterion {number} ({label}): {verdict} - {detail}");
}

#[test]
fn criterion_01_page_law() {
    let started = Instant::now();
    let spec = EnsembleSpec {
        alpha: 128,
        beta: 256,
        gamma: 0.0,
        sigma: 1.0,
        seed: 2026_01,
        trials: 300,
    };
    let mut total = 0.0;
    for trial in 0..spec.trials as u64 {
        let rho = random_reduced_density(&spec, trial).unwrap();
        let spectrum = hermitian_eigenvalues(rho.matrix()).unwrap();
        total += von_neumann(&spectrum).unwrap();
    }
    let mean = total / spec.trials as f64;
    let page = page_entropy(spec.alpha, spec.beta).unwrap();
    let rel = (mean - page).abs() / page;
    let elapsed = started.elapsed().as_secs_f64();
    let pass = rel < 0.01 && elapsed <= 30.0;
    report(
        1,
        "Page mean entropy",
        pass,
        &format!("mean {mean:.6} vs {page:.6}, rel dev {rel:.2e}, {elapsed:.1}s"),
    );
    assert!(rel < 0.01, "relative deviation {rel}");
    assert!(elapsed <= 30.0, "runtime {elapsed}s exceeds 30s");
}

#[test]
fn criterion_02_mpd_weak_convergence() {
    let started = Instant::now();
    let alpha = 2000usize;
    let seeds = 20u64;
    let mut detail = String::new();
    let mut all_pass = true;
    for &beta in &[8000usize, 4000, 2000] {
        let params = MpdParams::from_ensemble(alpha, beta, 1.0).unwrap();
        let mut hits = 0usize;
        for seed in 0..seeds {
            let z = sample_gaussian_matrix::<f32>(alpha, beta, 0.0, 1.0, 2026_02 + seed).unwrap();
            let y = wishart(&z, beta).unwrap();
            let spectrum = hermitian_eigenvalues(&y).unwrap();
            if ks_distance(&spectrum, &params).unwrap() < 0.02 {
                hits += 1;
            }
        }
        let needed = (seeds as f64 * 0.95).ceil() as usize;
        if hits < needed {
            all_pass = false;
        }
        detail.push_str(&format!("beta {beta}: {hits}/{seeds} seeds; "));
    }
    let elapsed = started.elapsed().as_secs_f64();
    detail.push_str(&format!("{elapsed:.1}s"));
    let pass = all_pass && elapsed <= 120.0;
    report(2, "MPD weak convergence", pass, &detail);
    assert!(all_pass, "{detail}");
    assert!(elapsed <= 120.0, "runtime {elapsed}s exceeds 2min");
}

#[test]
fn criterion_03_dominant_eigenvalue_law() {
    let started = Instant::now();
    let alpha = 100usize;
    let beta = 200usize;
    let trials = 500u64;
    let lambda_plus = {
        let r = (alpha as f64 / beta as f64).sqrt();
        (1.0 + r) * (1.0 + r)
    };
    let mut violations = Vec::new();
    let mut gated = 0usize;
    for grid_idx in 0..21usize {
        let gamma = 2.0 * grid_idx as f64 / 20.0;
        let prediction = alpha as f64 * gamma * gamma;
        if prediction <= 2.0 * lambda_plus {
            continue;
        }
        gated += 1;
        let seed = 2026_03 + grid_idx as u64;
        let mut total = 0.0;
        for trial in 0..trials {
            let z = sample_real_gaussian_matrix::<f32>(
                alpha,
                beta,
                gamma as f32,
                1.0,
                &mut stream_rng(seed, trial),
            )
            .unwrap();
            let y = wishart(&z, beta).unwrap();
            total += hermitian_eigenvalues(&y).unwrap().lambda0();
        }
        let mean = total / trials as f64;
        let signed = (mean - prediction) / prediction;
        if signed.abs() >= 0.03 {
            violations.push(format!(
                "gamma {gamma:.1}: mean {mean:.3} vs {prediction:.1} ({pct:+.1}%)",
                pct = 100.0 * signed
            ));
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    let pass = violations.is_empty() && elapsed <= 120.0;
    let detail = if violations.is_empty() {
        format!("{gated} gated gamma values within 3%, {elapsed:.1}s")
    } else {
        format!(
            "{} of {gated} gated gamma values off: {}; {elapsed:.1}s",
            violations.len(),
            violations.join("; ")
        )
    };
    report(3, "dominant eigenvalue vs rank-one prediction", pass, &detail);
    assert!(
        violations.is_empty(),
        "trial means outside 3%: {}",
        violations.join("; ")
    );
    assert!(elapsed <= 120.0, "runtime {elapsed}s exceeds 2min");
}

#[test]
fn criterion_04_lambda0_entropy_relation() {
    let alpha = 128usize;
    let points = 300usize;
    let mut detail = String::new();
    let mut worst = 0.0_f64;
    for &beta in &[192usize, 256, 512, 8192] {
        let mut pairs = Vec::new();
        for (i, &target) in open_grid(0.05, 0.95, points).iter().enumerate() {
            let spectrum = spectrum_targeting(alpha, beta, target, 2026_04, i as u64);
            let l0 = spectrum.lambda0();
            if crossover_flag(alpha, Beta::Finite(beta), l0) {
                continue;
            }
            let analytic = entropy_given_lambda0(
                &ClosedFormInput::new(alpha, Beta::Finite(beta), l0).unwrap(),
            )
            .unwrap();
            pairs.push((von_neumann(&spectrum).unwrap(), analytic));
        }
        let mae = mean_absolute_error(&pairs);
        worst = worst.max(mae);
        detail.push_str(&format!("beta {beta}: mae {mae:.4} over {} pts; ", pairs.len()));

        let limit = entropy_given_lambda0(
            &ClosedFormInput::new(alpha, Beta::Finite(beta), 1e-8).unwrap(),
        )
        .unwrap();
        let page = page_entropy(alpha, beta).unwrap();
        assert!(
            (limit - page).abs() < 1e-5,
            "limit check failed for beta {beta}: {limit} vs {page}"
        );
    }
    let pass = worst < 0.05;
    detail.push_str("limit checks to 1e-5 ok");
    report(4, "dominant eigenvalue entropy closed form", pass, &detail);
    assert!(pass, "worst per-beta MAE {worst}");
}

#[test]
fn criterion_05_gap_relation() {
    let alpha = 128usize;
    let mut detail = String::new();
    let mut worst = 0.0_f64;
    for &(beta, points) in &[(192usize, 300usize), (256, 300), (512, 300), (65536, 200)] {
        let mut pairs = Vec::new();
        for (i, &target) in open_grid(0.1, 0.95, points).iter().enumerate() {
            let spectrum = spectrum_targeting(alpha, beta, target, 2026_05, i as u64);
            let l0 = spectrum.lambda0();
            let empirical = gap_empirical(&spectrum).unwrap();
            assert!(empirical >= 0.0, "negative gap {empirical}");
            if crossover_flag(alpha, Beta::Finite(beta), l0) {
                continue;
            }
            let analytic = gap_given_lambda0(
                &ClosedFormInput::new(alpha, Beta::Finite(beta), l0).unwrap(),
            );
            pairs.push((empirical, analytic));
        }
        let mae = mean_absolute_error(&pairs);
        worst = worst.max(mae);
        detail.push_str(&format!("beta {beta}: mae {mae:.4} over {} pts; ", pairs.len()));
    }

    let zero = gap_given_lambda0(
        &ClosedFormInput::new(alpha, Beta::Finite(alpha), 4.0 / (alpha as f64 + 4.0)).unwrap(),
    );
    detail.push_str(&format!("analytic zero residual {:.1e}", zero.abs()));
    let pass = worst < 0.1 && zero.abs() < 1e-10;
    report(5, "entanglement gap closed form", pass, &detail);
    assert!(worst < 0.1, "worst per-beta MAE {worst}");
    assert!(zero.abs() < 1e-10, "gap zero residual {zero}");
}

#[test]
fn criterion_06_renyi_suite() {
    let alpha = 128usize;
    let points = 100usize;
    let mut numeric1 = Vec::new();
    let mut numeric2 = Vec::new();
    let mut numeric_inf = Vec::new();
    for (i, &target) in open_grid(0.1, 0.9, points).iter().enumerate() {
        let spectrum = spectrum_targeting(alpha, alpha, target, 2026_06, i as u64);
        let l0 = spectrum.lambda0();
        if crossover_flag(alpha, Beta::Finite(alpha), l0) {
            continue;
        }
        numeric1.push((
            renyi(&spectrum, 1.001).unwrap(),
            renyi1_analytic(alpha, l0).unwrap(),
        ));
        numeric2.push((
            renyi(&spectrum, 2.0).unwrap(),
            renyi2_analytic(alpha, l0).unwrap(),
        ));
        numeric_inf.push((renyi(&spectrum, 100.0).unwrap(), renyi_min(&spectrum).unwrap()));
    }
    let mae1 = mean_absolute_error(&numeric1);
    let mae2 = mean_absolute_error(&numeric2);
    let mae_inf = mean_absolute_error(&numeric_inf);

    let mut quad_ok = true;
    for k in 0..20usize {
        let a = 0.07 + 0.13 * k as f64;
        let b = a + 0.25 + 0.11 * k as f64;
        let q1 = integrate_sqrt_edges(|x| ((b - x) * (x - a)).max(0.0).sqrt(), a, b, 1e-12)
            .unwrap();
        quad_ok &= (integral_a1(a, b).unwrap() - q1).abs() < 1e-9;
        let q2 = integrate_sqrt_edges(
            |x| x.ln() * ((b - x) * (x - a)).max(0.0).sqrt(),
            a,
            b,
            1e-12,
        )
        .unwrap();
        quad_ok &= (integral_a2(a, b).unwrap() - q2).abs() < 1e-9;

        let c = 0.3 + 0.29 * k as f64;
        let q4 = integrate_sqrt_edges(
            |x| {
                if x <= 0.0 {
                    0.0
                } else {
                    x.ln() * ((c - x) * x).max(0.0).sqrt()
                }
            },
            0.0,
            c,
            1e-12,
        )
        .unwrap();
        quad_ok &= (integral_a4(c).unwrap() - q4).abs() < 1e-9;

        let d = 2 + k % 5;
        let t = 0.4 + 0.05 * k as f64;
        let qm = integrate_sqrt_edges(
            |x| x.powi(d as i32 - 1) * ((t - x) * x).max(0.0).sqrt(),
            0.0,
            t,
            1e-12,
        )
        .unwrap();
        let closed = moment_coefficient(d).unwrap() * std::f64::consts::PI * t.powi(d as i32 + 1);
        quad_ok &= (qm - closed).abs() < 1e-9;
    }

    let coeffs_ok = moment_coefficient(2).unwrap() == 1.0 / 16.0
        && moment_coefficient(3).unwrap() == 5.0 / 128.0
        && moment_coefficient(4).unwrap() == 7.0 / 256.0
        && moment_coefficient(5).unwrap() == 21.0 / 1024.0
        && moment_coefficient(6).unwrap() == 33.0 / 2048.0;

    let pass = mae1 < 0.05 && mae2 < 0.05 && mae_inf < 0.05 && quad_ok && coeffs_ok;
    report(
        6,
        "Renyi suite",
        pass,
        &format!(
            "mae d=1.001: {mae1:.4}, d=2: {mae2:.4}, d=100: {mae_inf:.4} over {} pts; quadrature {}, coefficients {}",
            numeric1.len(),
            if quad_ok { "ok" } else { "off" },
            if coeffs_ok { "exact" } else { "off" },
        ),
    );
    assert!(mae1 < 0.05, "degree 1.001 MAE {mae1}");
    assert!(mae2 < 0.05, "degree 2 MAE {mae2}");
    assert!(mae_inf < 0.05, "degree 100 MAE {mae_inf}");
    assert!(quad_ok, "a closed-form integral strays from quadrature");
    assert!(coeffs_ok, "moment coefficients are not exact");
}

#[test]
fn criterion_07_qft_invariance() {
    let keep: Vec<usize> = (0..7).collect();
    let mut worst_e = 0.0_f64;
    let mut worst_l = 0.0_f64;
    let mut states = 0usize;
    for (b, &n_qubits) in [14usize, 15, 16].iter().enumerate() {
        for (i, &target) in open_grid(0.08, 0.92, 10).iter().enumerate() {
            let seed = 2026_07 + (b * 10 + i) as u64;
            let state = random_state(n_qubits, gamma_for_lambda0(target), seed).unwrap();
            let before = reduced_spectrum(&state, &keep).unwrap();
            let after = reduced_spectrum(&qft(&state).unwrap(), &keep).unwrap();
            let de = (von_neumann(&before).unwrap() - von_neumann(&after).unwrap()).abs();
            let dl = (before.lambda0() - after.lambda0()).abs();
            worst_e = worst_e.max(de);
            worst_l = worst_l.max(dl);
            states += 1;
        }
    }

    let probe = random_state(8, 0.3, 2026_77).unwrap();
    let mut cycled = probe.clone();
    for _ in 0..4 {
        cycled = qft(&cycled).unwrap();
    }
    let identity_dev = cycled
        .amplitudes()
        .iter()
        .zip(probe.amplitudes())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0_f64, f64::max);

    let pass = worst_e < 0.05 && worst_l < 0.05 && identity_dev < 1e-8;
    report(
        7,
        "QFT invariance",
        pass,
        &format!(
            "{states} states: worst |dE| {worst_e:.4}, worst |dlambda0| {worst_l:.4}, fourth power dev {identity_dev:.1e}"
        ),
    );
    assert!(worst_e < 0.05, "entropy shift {worst_e}");
    assert!(worst_l < 0.05, "lambda0 shift {worst_l}");
    assert!(identity_dev < 1e-8, "fourth power deviates {identity_dev}");
}

#[test]
fn criterion_08_grover_search() {
    let started = Instant::now();
    let config = GroverConfig::default();
    assert_eq!(
        GroverConfig::optimal_iterations(2),
        config.iterations,
        "angle formula iteration count"
    );
    let run = grover_experiment(&config).unwrap();
    assert_eq!(run.preimages.len(), 2);
    assert_eq!(run.records.len(), 32);

    let theta = (2.0_f64 / 256.0).sqrt().asin();
    let final_success = *run.success_by_iteration.last().unwrap();
    let predicted = ((2.0 * config.iterations as f64 + 1.0) * theta).sin().powi(2);
    let success_dev = (final_success - predicted).abs();

    let mut bound_ok = true;
    let mut worst_excess = f64::NEG_INFINITY;
    for record in &run.records {
        let l0 = record.lambda0.clamp(1e-12, 1.0 - 1e-12);
        let curve = entropy_given_lambda0(
            &ClosedFormInput::new(256, Beta::Finite(1024), l0).unwrap(),
        )
        .unwrap();
        let excess = record.entropy - curve;
        worst_excess = worst_excess.max(excess);
        if excess > 0.1 {
            bound_ok = false;
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    let pass =
        final_success > 0.99 && success_dev < 1e-6 && bound_ok && elapsed <= 300.0;
    report(
        8,
        "Grover toy-hash search",
        pass,
        &format!(
            "r=8 success {final_success:.6} (angle dev {success_dev:.1e}), worst curve excess {worst_excess:.3}, {elapsed:.1}s"
        ),
    );
    assert!(final_success > 0.99, "success {final_success}");
    assert!(success_dev < 1e-6, "angle mismatch {success_dev}");
    assert!(bound_ok, "checkpoint above the analytic curve by {worst_excess}");
    assert!(elapsed <= 300.0, "runtime {elapsed}s exceeds 5min");
}

#[test]
fn criterion_09_adiabatic_exact_cover() {
    let instance = ExactCoverInstance::shipped();
    let records = adiabatic_experiment(&instance, &default_s_grid()).unwrap();
    assert_eq!(records.len(), 51);

    let e_start = records.first().unwrap().entropy;
    let e_end = records.last().unwrap().entropy;
    let mut bound_ok = true;
    let mut worst_excess = f64::NEG_INFINITY;
    for record in &records {
        let curve = renyi1_analytic(64, record.lambda0.clamp(0.0, 1.0)).unwrap();
        let excess = record.entropy - curve;
        worst_excess = worst_excess.max(excess);
        if excess > 0.1 {
            bound_ok = false;
        }
    }
    let pass = e_start < 1e-8 && e_end < 1e-8 && bound_ok;
    report(
        9,
        "adiabatic Exact Cover sweep",
        pass,
        &format!(
            "E(0) {e_start:.1e}, E(1) {e_end:.1e}, worst curve excess {worst_excess:.3} over 51 points"
        ),
    );
    assert!(e_start < 1e-8, "E at s=0 is {e_start}");
    assert!(e_end < 1e-8, "E at s=1 is {e_end}");
    assert!(bound_ok, "a schedule point exceeds the curve by {worst_excess}");
}

#[test]
fn criterion_10_prime_state_rank() {
    let n = 12usize;
    let state = prime_state(n).unwrap();
    let reports = bipartition_sweep(&state, n / 2).unwrap();

    let expected_count = 462;
    let expected_rank = (1usize << (n / 2 - 1)) + 1;
    let count_ok = reports.len() == expected_count;
    let rank_ok = reports.iter().all(|r| r.schmidt_rank == expected_rank);
    let residual: f64 = reports
        .iter()
        .map(|r| {
            let curve = renyi1_analytic(expected_rank, r.lambda0.clamp(0.0, 1.0)).unwrap();
            (r.entropy - curve).abs()
        })
        .sum::<f64>()
        / reports.len() as f64;

    let pass = count_ok && rank_ok && residual < 0.15;
    report(
        10,
        "Prime state bipartitions",
        pass,
        &format!(
            "{} partitions, rank {expected_rank} everywhere: {}, mean residual {residual:.4}",
            reports.len(),
            if rank_ok { "yes" } else { "no" },
        ),
    );
    assert!(count_ok, "partition count {}", reports.len());
    assert!(rank_ok, "a bipartition has unexpected Schmidt rank");
    assert!(residual < 0.15, "mean residual {residual}");
}
