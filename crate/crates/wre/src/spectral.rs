//! Hermitian spectra, empirical spectral distributions, and the
//! Marchenko-Pastur law with its edges and point mass.

use std::f64::consts::PI;

use crate::cmatrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::quad::adaptive_simpson;
use crate::scalar::Scalar;

const CDF_TOL: f64 = 1e-10;

/// Eigenvalues of a Hermitian matrix, sorted descending, together with
/// the trace of the source matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    source_trace: f64,
}

impl Spectrum {
    /// Builds a spectrum, sorting descending and checking that the
    /// eigenvalue sum reproduces the source trace to 1e-10 relative.
    pub fn new(values: Vec<f64>, source_trace: f64) -> Result<Self> {
        Self::with_tolerance(values, source_trace, 1e-10)
    }

    /// Same as [`Spectrum::new`] with an explicit relative tolerance on
    /// the trace identity. Lower precision eigensolves (single
    /// precision inputs) cannot hold 1e-10 and pass a scaled bound.
    pub fn with_tolerance(mut values: Vec<f64>, source_trace: f64, rel_tol: f64) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Parameter("spectrum must be non-empty".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numerical("spectrum contains non-finite values".into()));
        }
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let sum: f64 = values.iter().sum();
        let scale = source_trace.abs().max(values.iter().map(|v| v.abs()).sum());
        if (sum - source_trace).abs() > rel_tol * scale.max(1.0) {
            return Err(Error::Contract(format!(
                "eigenvalue sum {sum} does not reproduce the trace {source_trace}"
            )));
        }
        Ok(Self {
            values,
            source_trace,
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn source_trace(&self) -> f64 {
        self.source_trace
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Dominant eigenvalue λ₀.
    pub fn lambda0(&self) -> f64 {
        self.values[0]
    }
}

/// Parameters of the Marchenko-Pastur law for `Y = X X^H / beta` with
/// aspect ratio `lambda_ratio = alpha / beta` and entry variance
/// `sigma_sq`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MpdParams {
    pub sigma_sq: f64,
    pub lambda_ratio: f64,
    pub lambda_minus: f64,
    pub lambda_plus: f64,
    /// Weight of the atom at zero, `max(0, 1 - 1/lambda_ratio)`;
    /// nonzero only for ratios above one.
    pub point_mass: f64,
}

impl MpdParams {
    pub fn new(sigma_sq: f64, lambda_ratio: f64) -> Result<Self> {
        if !(sigma_sq > 0.0) || !sigma_sq.is_finite() {
            return Err(Error::Parameter("sigma_sq must be positive".into()));
        }
        if !(lambda_ratio > 0.0) || !lambda_ratio.is_finite() {
            return Err(Error::Parameter("lambda_ratio must be positive".into()));
        }
        let (lambda_minus, lambda_plus) = mpd_edges(sigma_sq, lambda_ratio)?;
        Ok(Self {
            sigma_sq,
            lambda_ratio,
            lambda_minus,
            lambda_plus,
            point_mass: (1.0 - 1.0 / lambda_ratio).max(0.0),
        })
    }

    /// Law of the spectrum of `X X^H / beta` for an α×β matrix with
    /// entry standard deviation `sigma`.
    pub fn from_ensemble(alpha: usize, beta: usize, sigma: f64) -> Result<Self> {
        if alpha == 0 || beta == 0 {
            return Err(Error::Parameter("alpha and beta must be positive".into()));
        }
        Self::new(sigma * sigma, alpha as f64 / beta as f64)
    }
}

/// Density-normalized histogram: `sum(density * width) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub bin_edges: Vec<f64>,
    pub densities: Vec<f64>,
}

impl Histogram {
    pub fn new(bin_edges: Vec<f64>, densities: Vec<f64>) -> Result<Self> {
        if bin_edges.len() != densities.len() + 1 {
            return Err(Error::Parameter(
                "edge count must exceed density count by one".into(),
            ));
        }
        if bin_edges.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::Parameter("bin edges must be strictly ascending".into()));
        }
        if densities.iter().any(|d| !(*d >= 0.0)) {
            return Err(Error::Parameter("densities must be non-negative".into()));
        }
        let mass: f64 = densities
            .iter()
            .zip(bin_edges.windows(2))
            .map(|(d, w)| d * (w[1] - w[0]))
            .sum();
        if (mass - 1.0).abs() > 1e-12 {
            return Err(Error::Contract(format!(
                "histogram mass {mass} is not normalized"
            )));
        }
        Ok(Self {
            bin_edges,
            densities,
        })
    }
}

fn hermiticity_tol<T: Scalar>() -> f64 {
    1e-12_f64.max(8.0 * T::epsilon().to_f64().unwrap())
}

/// Eigenvalues of a Hermitian matrix as a descending [`Spectrum`].
///
/// The input must be Hermitian entrywise (1e-12 for double precision;
/// the bound scales with the scalar's epsilon). The eigenvalue sum is
/// checked against the trace.
pub fn hermitian_eigenvalues<T: Scalar>(m: &ComplexMatrix<T>) -> Result<Spectrum> {
    if m.rows() != m.cols() {
        return Err(Error::Parameter(format!(
            "matrix must be square, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let dev = m.adjoint_deviation()?.to_f64().unwrap();
    if dev > hermiticity_tol::<T>() {
        return Err(Error::Contract(format!(
            "matrix is not Hermitian: max entrywise deviation {dev:e}"
        )));
    }
    let n = m.rows();
    let trace = m.trace()?.re.to_f64().unwrap();
    let mut values = T::hermitian_eigenvalues_ascending(n, m.as_slice())?
        .into_iter()
        .map(|v| v.to_f64().unwrap())
        .collect::<Vec<_>>();
    values.reverse();
    let eps = T::epsilon().to_f64().unwrap();
    let rel = 1e-10_f64.max(32.0 * n as f64 * eps);
    Spectrum::with_tolerance(values, trace, rel)
}

/// Support edges `sigma_sq * (1 ± sqrt(lambda_ratio))^2`.
pub fn mpd_edges(sigma_sq: f64, lambda_ratio: f64) -> Result<(f64, f64)> {
    if !(sigma_sq > 0.0) {
        return Err(Error::Parameter("sigma_sq must be positive".into()));
    }
    if !(lambda_ratio > 0.0) {
        return Err(Error::Parameter("lambda_ratio must be positive".into()));
    }
    let r = lambda_ratio.sqrt();
    let minus = sigma_sq * (1.0 - r) * (1.0 - r);
    let plus = sigma_sq * (1.0 + r) * (1.0 + r);
    Ok((minus, plus))
}

/// Density of the continuous part of the Marchenko-Pastur law,
/// `sqrt((λ₊ - x)(x - λ₋)) / (2π σ² λ x)` on `[λ₋, λ₊]` and zero
/// elsewhere. The atom at zero is carried by `params.point_mass` and is
/// never folded into the density.
pub fn mpd_pdf(x: f64, params: &MpdParams) -> f64 {
    if x <= 0.0 || x < params.lambda_minus || x > params.lambda_plus {
        return 0.0;
    }
    let num = ((params.lambda_plus - x) * (x - params.lambda_minus)).max(0.0).sqrt();
    num / (2.0 * PI * params.sigma_sq * params.lambda_ratio * x)
}

/// Integrand of the continuous part after the edge substitution
/// `x = λ₋ + (λ₊ - λ₋) sin²θ`, which absorbs both square-root edges:
/// `sqrt((λ₊-x)(x-λ₋)) dx = (w/2) sin 2θ · w sin 2θ dθ`.
fn mpd_theta_integrand(theta: f64, params: &MpdParams) -> f64 {
    let w = params.lambda_plus - params.lambda_minus;
    let denom_const = 4.0 * PI * params.sigma_sq * params.lambda_ratio;
    let s = theta.sin();
    let x = params.lambda_minus + w * s * s;
    if x <= 0.0 {
        return w / (PI * params.sigma_sq * params.lambda_ratio);
    }
    let s2 = (2.0 * theta).sin();
    w * w * s2 * s2 / (denom_const * x)
}

/// Cumulative distribution of the full law: the atom at zero plus the
/// integrated density up to `x`.
pub fn mpd_cdf(x: f64, params: &MpdParams) -> Result<f64> {
    if x < 0.0 {
        return Ok(0.0);
    }
    if x < params.lambda_minus {
        return Ok(params.point_mass);
    }
    let w = params.lambda_plus - params.lambda_minus;
    let theta_hi = if x >= params.lambda_plus || w <= 0.0 {
        std::f64::consts::FRAC_PI_2
    } else {
        (((x - params.lambda_minus) / w).sqrt().min(1.0)).asin()
    };
    let continuous = adaptive_simpson(|t| mpd_theta_integrand(t, params), 0.0, theta_hi, CDF_TOL)?;
    Ok((params.point_mass + continuous).clamp(0.0, 1.0))
}

/// Default histogram bin count for an α-dimensional spectrum.
pub fn default_bins(alpha: usize) -> usize {
    (alpha as f64).sqrt().ceil().max(1.0) as usize
}

/// Density-normalized histogram of a spectrum.
pub fn esd(spectrum: &Spectrum, bins: usize) -> Result<Histogram> {
    if bins == 0 {
        return Err(Error::Parameter("bins must be at least 1".into()));
    }
    let values = spectrum.values();
    let n = values.len();
    let max = values[0];
    let min = values[n - 1];
    let (lo, hi) = if max > min {
        (min, max)
    } else {
        (min - 0.5, max + 0.5)
    };
    let width = (hi - lo) / bins as f64;
    let mut counts = vec![0usize; bins];
    for &v in values {
        let idx = (((v - lo) / width) as usize).min(bins - 1);
        counts[idx] += 1;
    }
    let edges = (0..=bins)
        .map(|i| {
            if i == bins {
                hi
            } else {
                lo + width * i as f64
            }
        })
        .collect::<Vec<_>>();
    let densities = counts
        .iter()
        .map(|&c| c as f64 / (n as f64 * width))
        .collect();
    Histogram::new(edges, densities)
}

/// Kolmogorov-Smirnov style sup distance between the empirical CDF of
/// a spectrum and the Marchenko-Pastur CDF. Descriptive only: the
/// eigenvalues are not independent, so no significance level attaches.
pub fn ks_distance(spectrum: &Spectrum, params: &MpdParams) -> Result<f64> {
    let mut sorted = spectrum.values().to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len() as f64;
    let mut dist = 0.0_f64;
    for (i, &x) in sorted.iter().enumerate() {
        let f = mpd_cdf(x, params)?;
        let below = i as f64 / n;
        let above = (i + 1) as f64 / n;
        dist = dist.max((f - below).abs()).max((above - f).abs());
    }
    Ok(dist)
}

/// Rank-one prediction for the dominant eigenvalue, `alpha * gamma^2`.
///
/// In trace-normalized units the entry mean and bulk variance satisfy
/// `gamma^2 + sigma_sq_gamma = 1/alpha`, so when the bulk variance is
/// supplied the same prediction is evaluated as `1 - alpha *
/// sigma_sq_gamma`. Valid only when the prediction dominates the bulk
/// edge.
pub fn dominant_eigenvalue_prediction(
    alpha: usize,
    gamma: f64,
    sigma_sq_gamma: Option<f64>,
) -> f64 {
    let a = alpha as f64;
    match sigma_sq_gamma {
        Some(s) => 1.0 - a * s,
        None => a * gamma * gamma,
    }
}
