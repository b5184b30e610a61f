//! Desk-scale statevector machinery and four entanglement case
//! studies: QFT invariance, Grover toy-hash search, adiabatic
//! Exact Cover, and the Prime state.

pub mod exact_cover;
pub mod grover;
pub mod prime;

use num_complex::Complex;
use rustfft::{FftDirection, FftPlanner};

use crate::cmatrix::{ComplexMatrix, DensityMatrix};
use crate::entropy::von_neumann;
use crate::error::{Error, Result};
use crate::randmat::{sample_gaussian_with_rng, stream_rng};
use crate::spectral::{hermitian_eigenvalues, Spectrum};

/// Largest register the plain statevector representation accepts.
pub const MAX_QUBITS: usize = 24;

/// Absolute eigenvalue cutoff for Schmidt rank counting.
pub const SCHMIDT_RANK_TOL: f64 = 1e-10;

/// Normalized amplitude vector over `2^n_qubits` basis states. Qubit 0
/// is the least significant bit of the basis index.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex<f64>>,
}

impl StateVector {
    pub fn new(n_qubits: usize, amplitudes: Vec<Complex<f64>>) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::Parameter(format!(
                "qubit count must lie in 1..={MAX_QUBITS}, got {n_qubits}"
            )));
        }
        if amplitudes.len() != 1 << n_qubits {
            return Err(Error::Parameter(format!(
                "amplitude count {} does not match 2^{n_qubits}",
                amplitudes.len()
            )));
        }
        if amplitudes.iter().any(|a| !(a.re.is_finite() && a.im.is_finite())) {
            return Err(Error::Numerical("amplitudes must be finite".into()));
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > 1e-10 {
            return Err(Error::Contract(format!(
                "state norm squared {norm_sq} deviates from 1 beyond 1e-10"
            )));
        }
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::Parameter(format!(
                "qubit count must lie in 1..={MAX_QUBITS}, got {n_qubits}"
            )));
        }
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::Parameter(format!(
                "basis index {index} out of range for {n_qubits} qubits"
            )));
        }
        let mut amplitudes = vec![Complex::new(0.0, 0.0); dim];
        amplitudes[index] = Complex::new(1.0, 0.0);
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex<f64>] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex<f64>> {
        self.amplitudes
    }

    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }
}

/// Quantum Fourier transform of the amplitude vector,
/// `b_k = (1/sqrt(N)) Σ_j e^{2πi jk/N} a_j`.
pub fn qft(state: &StateVector) -> Result<StateVector> {
    let mut buf = state.amplitudes().to_vec();
    let mut planner = FftPlanner::<f64>::new();
    let fft = planner.plan_fft(buf.len(), FftDirection::Inverse);
    fft.process(&mut buf);
    let scale = 1.0 / (buf.len() as f64).sqrt();
    for a in &mut buf {
        *a *= scale;
    }
    StateVector::new(state.n_qubits(), buf)
}

fn validate_keep(n_qubits: usize, keep: &[usize]) -> Result<Vec<usize>> {
    if keep.is_empty() {
        return Err(Error::Parameter("keep set must be non-empty".into()));
    }
    let mut sorted = keep.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Parameter("keep set contains duplicate qubits".into()));
    }
    if *sorted.last().unwrap() >= n_qubits {
        return Err(Error::Parameter(format!(
            "keep set references qubit {} outside 0..{n_qubits}",
            sorted.last().unwrap()
        )));
    }
    if sorted.len() == n_qubits {
        return Err(Error::Parameter(
            "keep set must be a proper subset of the register".into(),
        ));
    }
    Ok(sorted)
}

/// Reduced density matrix over the `keep` qubits, tracing out the rest.
pub fn partial_trace(state: &StateVector, keep: &[usize]) -> Result<DensityMatrix<f64>> {
    let n = state.n_qubits();
    let kept = validate_keep(n, keep)?;
    let traced: Vec<usize> = (0..n).filter(|q| !kept.contains(q)).collect();
    let a_dim = 1usize << kept.len();
    let b_dim = 1usize << traced.len();
    let mut z = vec![Complex::new(0.0, 0.0); a_dim * b_dim];
    for (idx, &amp) in state.amplitudes().iter().enumerate() {
        let mut a = 0usize;
        for (j, &q) in kept.iter().enumerate() {
            a |= ((idx >> q) & 1) << j;
        }
        let mut b = 0usize;
        for (j, &q) in traced.iter().enumerate() {
            b |= ((idx >> q) & 1) << j;
        }
        z[a * b_dim + b] = amp;
    }
    let zm = ComplexMatrix::new(a_dim, b_dim, z)?;
    crate::randmat::reduced_density(&zm)
}

/// Spectrum of the reduced density matrix over the `keep` qubits.
pub fn reduced_spectrum(state: &StateVector, keep: &[usize]) -> Result<Spectrum> {
    let rho = partial_trace(state, keep)?;
    hermitian_eigenvalues(rho.matrix())
}

/// Random state with i.i.d. complex Gaussian amplitudes of mean
/// `gamma` and unit variance, normalized. Deterministic per seed.
pub fn random_state(n_qubits: usize, gamma: f64, seed: u64) -> Result<StateVector> {
    if n_qubits < 2 {
        return Err(Error::Parameter(format!(
            "random state needs at least 2 qubits, got {n_qubits}"
        )));
    }
    if n_qubits > MAX_QUBITS {
        return Err(Error::Parameter(format!(
            "qubit count must lie in 1..={MAX_QUBITS}, got {n_qubits}"
        )));
    }
    if !gamma.is_finite() || gamma < 0.0 {
        return Err(Error::Parameter("gamma must be finite and non-negative".into()));
    }
    let dim = 1usize << n_qubits;
    let mut rng = stream_rng(seed, 0);
    let raw = sample_gaussian_with_rng(1, dim, gamma, 1.0, &mut rng)?;
    let norm = raw.frobenius_sq().sqrt();
    if norm <= 0.0 {
        return Err(Error::Degenerate("sampled amplitudes are identically zero".into()));
    }
    let amplitudes = raw
        .into_data()
        .into_iter()
        .map(|a| a / norm)
        .collect::<Vec<_>>();
    StateVector::new(n_qubits, amplitudes)
}

/// Number of eigenvalues above the Schmidt rank cutoff.
pub fn schmidt_rank(spectrum: &Spectrum) -> usize {
    spectrum
        .values()
        .iter()
        .filter(|&&v| v > SCHMIDT_RANK_TOL)
        .count()
}

/// One bipartition of a state: the canonical kept subset (the half
/// containing qubit 0), the dominant eigenvalue and entropy of its
/// reduced density matrix, and the Schmidt rank.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartitionReport {
    pub partition_id: Vec<usize>,
    pub lambda0: f64,
    pub entropy: f64,
    pub schmidt_rank: usize,
}

impl BipartitionReport {
    pub fn new(
        partition_id: Vec<usize>,
        lambda0: f64,
        entropy: f64,
        schmidt_rank: usize,
        complement_size: usize,
    ) -> Result<Self> {
        let cap = (1usize << partition_id.len()).min(1usize << complement_size);
        if schmidt_rank > cap {
            return Err(Error::Contract(format!(
                "Schmidt rank {schmidt_rank} exceeds the dimension bound {cap}"
            )));
        }
        if entropy > (schmidt_rank as f64).ln() + 1e-8 {
            return Err(Error::Contract(format!(
                "entropy {entropy} exceeds ln(rank) = {} beyond tolerance",
                (schmidt_rank as f64).ln()
            )));
        }
        Ok(Self {
            partition_id,
            lambda0,
            entropy,
            schmidt_rank,
        })
    }
}

fn canonical_half_subsets(n: usize, half: usize) -> Vec<Vec<usize>> {
    // every subset contains qubit 0, so each subset/complement pair is
    // enumerated exactly once
    let mut out = Vec::new();
    let mut pick = vec![0usize; half];
    fn rec(
        start: usize,
        depth: usize,
        n: usize,
        half: usize,
        pick: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == half {
            out.push(pick.clone());
            return;
        }
        for q in start..n {
            pick[depth] = q;
            rec(q + 1, depth + 1, n, half, pick, out);
        }
    }
    rec(1, 1, n, half, &mut pick, &mut out);
    out
}

/// Reduced-density reports for every bipartition into halves, one per
/// subset/complement pair (the canonical subset contains qubit 0).
pub fn bipartition_sweep(state: &StateVector, half_size: usize) -> Result<Vec<BipartitionReport>> {
    let n = state.n_qubits();
    if n % 2 != 0 {
        return Err(Error::Parameter(format!(
            "bipartition sweep needs an even qubit count, got {n}"
        )));
    }
    if half_size != n / 2 {
        return Err(Error::Parameter(format!(
            "half_size must be {} for {n} qubits, got {half_size}",
            n / 2
        )));
    }
    let mut reports = Vec::new();
    for subset in canonical_half_subsets(n, half_size) {
        let spectrum = reduced_spectrum(state, &subset)?;
        let entropy = von_neumann(&spectrum)?;
        let rank = schmidt_rank(&spectrum);
        reports.push(BipartitionReport::new(
            subset,
            spectrum.lambda0(),
            entropy,
            rank,
            n - half_size,
        )?);
    }
    Ok(reports)
}
