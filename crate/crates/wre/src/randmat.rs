//! Reproducible sampling of Gaussian matrices, Wishart matrices, and
//! trace-normalized random reduced density matrices.
//!
//! Randomness comes from ChaCha8 keyed by a SplitMix64 expansion of the
//! user seed, with the stream counter set to the trial index. Streams
//! are cryptographically independent, so trials may be evaluated in any
//! order or in parallel and still reproduce bit for bit.

use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::cmatrix::{ComplexMatrix, DensityMatrix};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Parameters of a decentralized Wishart ensemble.
///
/// `gamma` is the (real, non-negative) entry mean, `sigma` the complex
/// entry standard deviation. Scale is immaterial after trace
/// normalization, so experiments conventionally fix `sigma = 1` and
/// steer the dominant eigenvalue through `gamma` alone.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleSpec<T: Scalar> {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: T,
    pub sigma: T,
    pub seed: u64,
    pub trials: usize,
}

impl<T: Scalar> EnsembleSpec<T> {
    pub fn validate(&self) -> Result<()> {
        if self.alpha == 0 {
            return Err(Error::Parameter("alpha must be positive".into()));
        }
        if self.beta < self.alpha {
            return Err(Error::Parameter(format!(
                "beta {} must be at least alpha {}",
                self.beta, self.alpha
            )));
        }
        if !(self.sigma > T::zero()) {
            return Err(Error::Parameter("sigma must be positive".into()));
        }
        if self.gamma < T::zero() {
            return Err(Error::Parameter("gamma must be non-negative".into()));
        }
        if self.trials == 0 {
            return Err(Error::Parameter("trials must be positive".into()));
        }
        Ok(())
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Deterministic per-trial generator: ChaCha8 keyed by the expanded
/// seed, stream set to the trial index.
pub fn stream_rng(seed: u64, trial_index: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    let mut state = seed;
    for chunk in key.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(trial_index);
    rng
}

fn check_sample_params<T: Scalar>(rows: usize, cols: usize, stddev: T) -> Result<()> {
    if rows == 0 || cols == 0 {
        return Err(Error::Parameter(format!(
            "matrix dimensions must be positive, got {rows}x{cols}"
        )));
    }
    if !(stddev > T::zero()) {
        return Err(Error::Parameter("stddev must be positive".into()));
    }
    Ok(())
}

/// Complex Gaussian matrix with entries `(g1 + i g2)/sqrt(2) * stddev + mean`,
/// so each entry has complex variance `stddev^2` around the real mean.
pub fn sample_gaussian_matrix<T: Scalar>(
    rows: usize,
    cols: usize,
    mean: T,
    stddev: T,
    seed: u64,
) -> Result<ComplexMatrix<T>>
where
    StandardNormal: Distribution<T>,
{
    check_sample_params(rows, cols, stddev)?;
    sample_gaussian_with_rng(rows, cols, mean, stddev, &mut stream_rng(seed, 0))
}

/// Same entry law as [`sample_gaussian_matrix`], drawing from a caller
/// supplied trial stream.
pub fn sample_gaussian_with_rng<T: Scalar>(
    rows: usize,
    cols: usize,
    mean: T,
    stddev: T,
    rng: &mut ChaCha8Rng,
) -> Result<ComplexMatrix<T>>
where
    StandardNormal: Distribution<T>,
{
    check_sample_params(rows, cols, stddev)?;
    let half = T::from_f64(std::f64::consts::FRAC_1_SQRT_2).unwrap() * stddev;
    let sn = StandardNormal;
    let data = (0..rows * cols)
        .map(|_| {
            let g1: T = sn.sample(rng);
            let g2: T = sn.sample(rng);
            Complex::new(g1 * half + mean, g2 * half)
        })
        .collect();
    ComplexMatrix::new(rows, cols, data)
}

/// Real Gaussian matrix with entries `g * stddev + mean` and zero
/// imaginary parts. Used by the dominant-eigenvalue sweep, which
/// samples real entries; the bulk law is the same with `sigma^2 = stddev^2`.
pub fn sample_real_gaussian_matrix<T: Scalar>(
    rows: usize,
    cols: usize,
    mean: T,
    stddev: T,
    rng: &mut ChaCha8Rng,
) -> Result<ComplexMatrix<T>>
where
    StandardNormal: Distribution<T>,
{
    check_sample_params(rows, cols, stddev)?;
    let sn = StandardNormal;
    let data = (0..rows * cols)
        .map(|_| {
            let g: T = sn.sample(rng);
            Complex::new(g * stddev + mean, T::zero())
        })
        .collect();
    ComplexMatrix::new(rows, cols, data)
}

/// Wishart matrix `Y = X X^H / beta`.
pub fn wishart<T: Scalar>(x: &ComplexMatrix<T>, beta: usize) -> Result<ComplexMatrix<T>> {
    if beta != x.cols() {
        return Err(Error::Parameter(format!(
            "beta {} must equal the column count {}",
            beta,
            x.cols()
        )));
    }
    Ok(x.gram_scaled(T::from_usize(beta).unwrap()))
}

/// Trace-normalized reduced density matrix `Z Z^H / Tr(Z Z^H)`.
pub fn reduced_density<T: Scalar>(z: &ComplexMatrix<T>) -> Result<DensityMatrix<T>> {
    let tr = z.frobenius_sq();
    if tr <= 0.0 {
        return Err(Error::Degenerate(
            "cannot normalize an identically zero matrix".into(),
        ));
    }
    DensityMatrix::new(z.gram_scaled(T::from_f64(tr).unwrap()))
}

/// Samples trial `trial_index` of the ensemble and normalizes it.
pub fn random_reduced_density<T: Scalar>(
    spec: &EnsembleSpec<T>,
    trial_index: u64,
) -> Result<DensityMatrix<T>>
where
    StandardNormal: Distribution<T>,
{
    spec.validate()?;
    let mut rng = stream_rng(spec.seed, trial_index);
    let z = sample_gaussian_with_rng(spec.alpha, spec.beta, spec.gamma, spec.sigma, &mut rng)?;
    reduced_density(&z)
}
