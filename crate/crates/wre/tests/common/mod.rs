#![allow(dead_code)]

use wre::entropy::Beta;
use wre::randmat::{random_reduced_density, EnsembleSpec};
use wre::spectral::{hermitian_eigenvalues, Spectrum};

/// Entry mean (in sampling units, sigma = 1) that places the dominant
/// eigenvalue of the trace-normalized matrix near `lambda0`.
pub fn gamma_for_lambda0(lambda0: f64) -> f64 {
    (lambda0 / (1.0 - lambda0)).sqrt()
}

/// One trace-normalized sample steered toward the λ₀ target, returned
/// as its spectrum.
pub fn spectrum_targeting(
    alpha: usize,
    beta: usize,
    lambda0: f64,
    seed: u64,
    trial: u64,
) -> Spectrum {
    let spec = EnsembleSpec::<f64> {
        alpha,
        beta,
        gamma: gamma_for_lambda0(lambda0),
        sigma: 1.0,
        seed,
        trials: 1,
    };
    let rho = random_reduced_density(&spec, trial).expect("sampling failed");
    hermitian_eigenvalues(rho.matrix()).expect("eigensolve failed")
}

pub fn beta_finite(beta: usize) -> Beta {
    Beta::Finite(beta)
}

/// Uniform grid of `count` points strictly inside `(lo, hi)`.
pub fn open_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| lo + (hi - lo) * (i as f64 + 0.5) / count as f64)
        .collect()
}

/// Mean absolute difference between paired values.
pub fn mean_absolute_error(pairs: &[(f64, f64)]) -> f64 {
    assert!(!pairs.is_empty());
    pairs.iter().map(|(a, b)| (a - b).abs()).sum::<f64>() / pairs.len() as f64
}
