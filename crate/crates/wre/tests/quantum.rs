mod common;

use num_complex::Complex;
use wre::entropy::von_neumann;
use wre::quantum::exact_cover::{
    adiabatic_experiment, default_s_grid, exact_cover_hamiltonians, ExactCoverInstance,
};
use wre::quantum::grover::{
    preimages, toy_sponge_hash, GroverCheckpoint, GroverConfig, grover_experiment,
};
use wre::quantum::prime::{prime_state, primes_below};
use wre::quantum::{
    bipartition_sweep, partial_trace, qft, random_state, reduced_spectrum, schmidt_rank,
    StateVector,
};
use wre::scalar::sym_eigen_small;
use wre::Error;

type C = Complex<f64>;

const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn bell_pair() -> StateVector {
    let amps = vec![
        C::new(SQRT_HALF, 0.0),
        C::new(0.0, 0.0),
        C::new(0.0, 0.0),
        C::new(SQRT_HALF, 0.0),
    ];
    StateVector::new(2, amps).unwrap()
}

#[test]
fn state_vector_validation() {
    assert!(StateVector::new(2, vec![C::new(1.0, 0.0); 3]).is_err());
    assert!(StateVector::new(0, vec![C::new(1.0, 0.0)]).is_err());
    assert!(StateVector::new(25, vec![C::new(0.0, 0.0); 1 << 25]).is_err());

    let unnormalized = vec![C::new(1.0, 0.0), C::new(1.0, 0.0)];
    assert!(matches!(
        StateVector::new(1, unnormalized),
        Err(Error::Contract(_))
    ));

    let nan = vec![C::new(f64::NAN, 0.0), C::new(0.0, 0.0)];
    assert!(StateVector::new(1, nan).is_err());

    let basis = StateVector::basis(3, 5).unwrap();
    assert_eq!(basis.amplitudes()[5], C::new(1.0, 0.0));
    assert_eq!(basis.norm_sq(), 1.0);
    assert!(StateVector::basis(3, 8).is_err());
}

#[test]
fn qft_uses_the_positive_exponent_convention() {
    let state = StateVector::basis(2, 1).unwrap();
    let out = qft(&state).unwrap();
    let expected = [
        C::new(0.5, 0.0),
        C::new(0.0, 0.5),
        C::new(-0.5, 0.0),
        C::new(0.0, -0.5),
    ];
    for (a, e) in out.amplitudes().iter().zip(&expected) {
        assert!((a - e).norm() < 1e-12, "{a} vs {e}");
    }

    let zero = StateVector::basis(3, 0).unwrap();
    let flat = qft(&zero).unwrap();
    for a in flat.amplitudes() {
        assert!((a - C::new(1.0 / 8.0_f64.sqrt(), 0.0)).norm() < 1e-12);
    }
}

#[test]
fn qft_four_times_is_the_identity() {
    let state = random_state(8, 0.2, 9).unwrap();
    let mut cycled = state.clone();
    for _ in 0..4 {
        cycled = qft(&cycled).unwrap();
    }
    for (a, b) in cycled.amplitudes().iter().zip(state.amplitudes()) {
        assert!((a - b).norm() < 1e-8);
    }
}

#[test]
fn partial_trace_of_product_and_entangled_states() {
    // qubit 0 in |1>, qubit 1 in |0>
    let state = StateVector::basis(2, 1).unwrap();
    let rho = partial_trace(&state, &[0]).unwrap();
    assert!((rho.matrix().get(1, 1) - C::new(1.0, 0.0)).norm() < 1e-14);
    assert!(rho.matrix().get(0, 0).norm() < 1e-14);

    for keep in [[0usize], [1usize]] {
        let rho = partial_trace(&bell_pair(), &keep).unwrap();
        for i in 0..2 {
            assert!((rho.matrix().get(i, i) - C::new(0.5, 0.0)).norm() < 1e-14);
        }
        assert!(rho.matrix().get(0, 1).norm() < 1e-14);
    }

    let spectrum = reduced_spectrum(&bell_pair(), &[0]).unwrap();
    assert_eq!(schmidt_rank(&spectrum), 2);
    assert!((von_neumann(&spectrum).unwrap() - std::f64::consts::LN_2).abs() < 1e-12);
}

#[test]
fn partial_trace_validates_the_keep_set() {
    let state = bell_pair();
    assert!(partial_trace(&state, &[]).is_err());
    assert!(partial_trace(&state, &[0, 0]).is_err());
    assert!(partial_trace(&state, &[2]).is_err());
    assert!(partial_trace(&state, &[0, 1]).is_err());
}

#[test]
fn ghz_reduction_has_two_flat_levels() {
    let mut amps = vec![C::new(0.0, 0.0); 8];
    amps[0] = C::new(SQRT_HALF, 0.0);
    amps[7] = C::new(SQRT_HALF, 0.0);
    let ghz = StateVector::new(3, amps).unwrap();
    let spectrum = reduced_spectrum(&ghz, &[0, 1]).unwrap();
    assert_eq!(schmidt_rank(&spectrum), 2);
    assert!((spectrum.values()[0] - 0.5).abs() < 1e-14);
    assert!((spectrum.values()[1] - 0.5).abs() < 1e-14);
    assert!(spectrum.values()[2].abs() < 1e-14);
}

#[test]
fn complementary_subsets_share_their_spectrum() {
    let state = random_state(10, 0.3, 3).unwrap();
    let a = reduced_spectrum(&state, &[0, 1, 2, 3, 4]).unwrap();
    let b = reduced_spectrum(&state, &[5, 6, 7, 8, 9]).unwrap();
    for (x, y) in a.values().iter().zip(b.values()) {
        assert!((x - y).abs() < 1e-9);
    }

    // uneven split: the smaller side's spectrum is the non-trivial part
    let small = reduced_spectrum(&state, &[0, 1, 2]).unwrap();
    let large = reduced_spectrum(&state, &[3, 4, 5, 6, 7, 8, 9]).unwrap();
    for (x, y) in small.values().iter().zip(large.values()) {
        assert!((x - y).abs() < 1e-9);
    }
    for &v in &large.values()[small.len()..] {
        assert!(v.abs() < 1e-12);
    }

    let wide = random_state(14, 0.1, 8).unwrap();
    let a = reduced_spectrum(&wide, &[0, 2, 4, 6, 8, 10, 12]).unwrap();
    let b = reduced_spectrum(&wide, &[1, 3, 5, 7, 9, 11, 13]).unwrap();
    for (x, y) in a.values().iter().zip(b.values()) {
        assert!((x - y).abs() < 1e-9);
    }
}

#[test]
fn random_states_are_deterministic_and_gamma_polarizes() {
    let a = random_state(6, 0.4, 12).unwrap();
    let b = random_state(6, 0.4, 12).unwrap();
    assert_eq!(a.amplitudes(), b.amplitudes());
    let c = random_state(6, 0.4, 13).unwrap();
    assert_ne!(a.amplitudes(), c.amplitudes());
    assert!((a.norm_sq() - 1.0).abs() < 1e-12);

    let polarized = random_state(8, 50.0, 4).unwrap();
    let spectrum = reduced_spectrum(&polarized, &[0, 1, 2, 3]).unwrap();
    assert!(von_neumann(&spectrum).unwrap() < 0.01);
    assert!(spectrum.lambda0() > 0.99);
}

#[test]
fn unstructured_states_reach_the_page_mean() {
    let keep: Vec<usize> = (0..7).collect();
    let mut total = 0.0;
    let seeds = 20;
    for seed in 0..seeds {
        let state = random_state(14, 0.0, seed).unwrap();
        let spectrum = reduced_spectrum(&state, &keep).unwrap();
        total += von_neumann(&spectrum).unwrap();
    }
    let mean = total / seeds as f64;
    let page = 128.0_f64.ln() - 0.5;
    assert!(
        (mean - page).abs() < 0.02 * page,
        "mean {mean} vs page {page}"
    );
}

#[test]
fn hash_digests_match_the_recorded_vectors() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/toy_hash_vectors.txt");
    let text = std::fs::read_to_string(path).unwrap();
    let mut seen = 0usize;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let m: u8 = parts.next().unwrap().parse().unwrap();
        let digest: u8 = parts.next().unwrap().parse().unwrap();
        assert_eq!(
            toy_sponge_hash(m),
            digest,
            "digest mismatch at message {m}"
        );
        seen += 1;
    }
    assert_eq!(seen, 256);
}

#[test]
fn hash_structure_and_preimage_sets() {
    // H(m) xor m must be a bijection for the walk to be reversible
    let mut permuted: Vec<u8> = (0..=255u8).map(|m| toy_sponge_hash(m) ^ m).collect();
    permuted.sort_unstable();
    permuted.dedup();
    assert_eq!(permuted.len(), 256);

    let mut digests: Vec<u8> = (0..=255u8).map(toy_sponge_hash).collect();
    digests.sort_unstable();
    let mut distinct = 0usize;
    let mut largest_class = 0usize;
    let mut i = 0usize;
    while i < digests.len() {
        let j = digests[i..].iter().take_while(|&&d| d == digests[i]).count();
        distinct += 1;
        largest_class = largest_class.max(j);
        i += j;
    }
    assert_eq!(distinct, 158);
    assert_eq!(largest_class, 4);

    assert_eq!(preimages(0b1010_0011), vec![33, 49]);
    for &m in &[33u8, 49] {
        assert_eq!(toy_sponge_hash(m), 0b1010_0011);
    }
}

#[test]
fn grover_configuration_rules() {
    assert_eq!(GroverConfig::optimal_iterations(2), 8);
    assert_eq!(GroverConfig::optimal_iterations(4), 6);
    assert_eq!(GroverConfig::default().iterations, 8);
    assert_eq!(GroverConfig::default().ciphertext, 0b1010_0011);

    assert!(matches!(
        GroverConfig::new(0xA3, 0),
        Err(Error::Parameter(_))
    ));

    let unreached = (0..=255u8)
        .find(|&d| preimages(d).is_empty())
        .expect("the digest map is not surjective");
    assert!(matches!(
        GroverConfig::new(unreached, 3),
        Err(Error::Parameter(_))
    ));
}

#[test]
fn short_search_run_tracks_the_rotation_angle() {
    let config = GroverConfig::new(0xA3, 2).unwrap();
    let run = grover_experiment(&config).unwrap();
    assert_eq!(run.preimages, vec![33, 49]);
    assert_eq!(run.records.len(), 8);
    assert_eq!(run.success_by_iteration.len(), 2);

    let theta = (2.0_f64 / 256.0).sqrt().asin();
    for (idx, &p) in run.success_by_iteration.iter().enumerate() {
        let r = idx as f64 + 1.0;
        let predicted = ((2.0 * r + 1.0) * theta).sin().powi(2);
        assert!(
            (p - predicted).abs() < 1e-6,
            "iteration {}: {p} vs {predicted}",
            idx + 1
        );
    }

    for (k, record) in run.records.iter().enumerate() {
        assert_eq!(record.iteration, k / 4 + 1);
        assert_eq!(record.checkpoint, GroverCheckpoint::ALL[k % 4]);
    }

    for pair in run.records.chunks(4) {
        // the oracle phase flip cannot change the reduced spectrum
        assert!((pair[0].lambda0 - pair[1].lambda0).abs() < 1e-12);
        assert!((pair[0].entropy - pair[1].entropy).abs() < 1e-10);
        // the inverse hash restores a product state
        assert!(pair[2].entropy < 1e-8, "entropy {}", pair[2].entropy);
        assert!(pair[2].lambda0 > 1.0 - 1e-9);
    }
}

#[test]
fn exact_cover_instance_validation_and_shipped_solution() {
    let shipped = ExactCoverInstance::shipped();
    assert_eq!(shipped.n(), 12);
    assert_eq!(shipped.clauses().len(), 10);
    assert_eq!(shipped.solutions(), vec![2817]);
    assert_eq!(shipped.violations(2817), 0);
    assert_eq!(shipped.violations(0), 10);

    assert!(ExactCoverInstance::new(2, vec![[0, 1, 2]]).is_err());
    assert!(ExactCoverInstance::new(5, vec![[0, 1, 5]]).is_err());
    assert!(ExactCoverInstance::new(4, vec![[0, 1, 1]]).is_err());
    assert!(ExactCoverInstance::new(4, vec![]).is_err());
}

#[test]
fn generated_instances_have_a_unique_solution() {
    let (instance, solution) = ExactCoverInstance::generate(10, 1, 50_000).unwrap();
    assert_eq!(instance.n(), 10);
    assert_eq!(instance.solutions(), vec![solution]);
    assert_eq!(instance.violations(solution), 0);
}

#[test]
fn clause_penalty_vanishes_exactly_on_satisfying_states() {
    let instance = ExactCoverInstance::new(4, vec![[0, 1, 2]]).unwrap();
    let ham = exact_cover_hamiltonians(&instance);
    let dim = ham.dim();
    assert_eq!(dim, 16);
    let satisfying = [1usize, 2, 4, 9, 10, 12];
    for k in 0..dim {
        let mut basis = vec![0.0; dim];
        basis[k] = 1.0;
        let mut out = vec![0.0; dim];
        ham.hs_matvec(1.0, &basis, &mut out);
        let penalty = out[k];
        if satisfying.contains(&k) {
            assert_eq!(penalty, 0.0, "state {k}");
        } else {
            assert!(penalty >= 1.0, "state {k} has penalty {penalty}");
        }
    }
}

#[test]
fn transverse_term_annihilates_the_uniform_state() {
    let instance = ExactCoverInstance::shipped();
    let ham = exact_cover_hamiltonians(&instance);
    let dim = ham.dim();
    let x = vec![1.0 / (dim as f64).sqrt(); dim];
    let mut y = vec![0.0; dim];
    ham.hs_matvec(0.0, &x, &mut y);
    let norm: f64 = y.iter().map(|v| v * v).sum::<f64>().sqrt();
    assert!(norm < 1e-12, "residual {norm}");
}

#[test]
fn iterative_ground_state_matches_a_dense_eigensolve() {
    let instance =
        ExactCoverInstance::new(8, vec![[0, 1, 2], [1, 2, 3], [3, 4, 5], [5, 6, 7], [0, 4, 6]])
            .unwrap();
    let ham = exact_cover_hamiltonians(&instance);
    let dim = ham.dim();
    let s = 0.6;

    let mut dense = vec![0.0; dim * dim];
    let mut col = vec![0.0; dim];
    let mut out = vec![0.0; dim];
    for k in 0..dim {
        col.iter_mut().for_each(|v| *v = 0.0);
        col[k] = 1.0;
        ham.hs_matvec(s, &col, &mut out);
        for i in 0..dim {
            dense[i * dim + k] = out[i];
        }
    }
    let (values, vectors) = sym_eigen_small(dim, &dense).unwrap();
    assert!(values[1] - values[0] > 1e-8, "degenerate test instance");

    let ground: Vec<C> = (0..dim).map(|i| C::new(vectors[i * dim], 0.0)).collect();
    let dense_state = StateVector::new(8, ground).unwrap();
    let dense_spectrum = reduced_spectrum(&dense_state, &[0, 1, 2, 3]).unwrap();
    let dense_entropy = von_neumann(&dense_spectrum).unwrap();

    let record = &adiabatic_experiment(&instance, &[s]).unwrap()[0];
    assert!(!record.degenerate);
    assert!(
        (record.lambda0 - dense_spectrum.lambda0()).abs() < 1e-9,
        "lambda0 {} vs dense {}",
        record.lambda0,
        dense_spectrum.lambda0()
    );
    assert!(
        (record.entropy - dense_entropy).abs() < 1e-9,
        "entropy {} vs dense {}",
        record.entropy,
        dense_entropy
    );
}

#[test]
fn adiabatic_schedule_endpoints_are_product_states() {
    let instance = ExactCoverInstance::new(6, vec![[0, 1, 2], [2, 3, 4], [1, 4, 5]]).unwrap();
    let records = adiabatic_experiment(&instance, &[0.0, 0.5, 1.0]).unwrap();
    assert_eq!(records.len(), 3);
    assert!(records[0].entropy < 1e-8, "E(0) = {}", records[0].entropy);
    assert!(records[2].entropy < 1e-8, "E(1) = {}", records[2].entropy);
    assert!(records[1].entropy >= 0.0);
    assert!(records[1].entropy <= 8.0_f64.ln() + 1e-9);

    assert_eq!(default_s_grid().len(), 51);
    assert_eq!(default_s_grid()[0], 0.0);
    assert_eq!(default_s_grid()[50], 1.0);
}

#[test]
fn adiabatic_experiment_validates_inputs() {
    let odd = ExactCoverInstance::new(5, vec![[0, 1, 2]]).unwrap();
    assert!(adiabatic_experiment(&odd, &[0.5]).is_err());

    let wide = ExactCoverInstance::new(16, vec![[0, 1, 2]]).unwrap();
    assert!(adiabatic_experiment(&wide, &[0.5]).is_err());

    let ok = ExactCoverInstance::new(6, vec![[0, 1, 2]]).unwrap();
    assert!(adiabatic_experiment(&ok, &[]).is_err());
    assert!(adiabatic_experiment(&ok, &[1.5]).is_err());
}

#[test]
fn prime_sieve_matches_trial_division() {
    fn is_prime(k: usize) -> bool {
        if k < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= k {
            if k % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }
    let sieved = primes_below(4096);
    let direct: Vec<usize> = (0..4096).filter(|&k| is_prime(k)).collect();
    assert_eq!(sieved, direct);
    assert_eq!(sieved.len(), 564);
    assert!(primes_below(2).is_empty());
}

#[test]
fn prime_state_amplitudes() {
    let state = prime_state(4).unwrap();
    let primes = [2usize, 3, 5, 7, 11, 13];
    let amp = 1.0 / 6.0_f64.sqrt();
    for (idx, a) in state.amplitudes().iter().enumerate() {
        if primes.contains(&idx) {
            assert!((a - C::new(amp, 0.0)).norm() < 1e-14);
        } else {
            assert_eq!(*a, C::new(0.0, 0.0));
        }
    }
    assert!(prime_state(3).is_err());
    assert!(prime_state(25).is_err());
}

#[test]
fn prime_state_bipartitions_have_the_anomalous_rank() {
    let state = prime_state(10).unwrap();
    let reports = bipartition_sweep(&state, 5).unwrap();
    assert_eq!(reports.len(), 126);
    for report in &reports {
        assert_eq!(report.partition_id[0], 0);
        assert_eq!(report.partition_id.len(), 5);
        assert_eq!(report.schmidt_rank, 17, "subset {:?}", report.partition_id);
        assert!(report.entropy <= 17.0_f64.ln() + 1e-9);
        assert!(report.lambda0 > 0.0 && report.lambda0 <= 1.0 + 1e-12);
    }
}

#[test]
fn unstructured_state_bipartitions_have_full_rank() {
    let state = random_state(8, 0.0, 2).unwrap();
    let reports = bipartition_sweep(&state, 4).unwrap();
    assert_eq!(reports.len(), 35);
    for report in &reports {
        assert_eq!(report.schmidt_rank, 16);
    }

    assert!(bipartition_sweep(&state, 3).is_err());
    let odd = random_state(5, 0.0, 2).unwrap();
    assert!(bipartition_sweep(&odd, 2).is_err());
}

#[test]
fn qft_leaves_random_reduced_spectra_nearly_unchanged() {
    let state = random_state(12, common::gamma_for_lambda0(0.4), 21).unwrap();
    let keep: Vec<usize> = (0..6).collect();
    let before = reduced_spectrum(&state, &keep).unwrap();
    let after = reduced_spectrum(&qft(&state).unwrap(), &keep).unwrap();
    assert!(
        (before.lambda0() - after.lambda0()).abs() < 0.05,
        "lambda0 {} vs {}",
        before.lambda0(),
        after.lambda0()
    );
    let e_before = von_neumann(&before).unwrap();
    let e_after = von_neumann(&after).unwrap();
    assert!(
        (e_before - e_after).abs() < 0.05,
        "entropy {e_before} vs {e_after}"
    );
}
