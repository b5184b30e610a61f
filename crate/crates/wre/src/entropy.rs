//! Entropies of density-matrix spectra: numeric von Neumann and Renyi
//! evaluations, the closed forms tying each entropy to the dominant
//! eigenvalue, the entanglement gap, and the moment integrals behind
//! those closed forms.
//!
//! All entropies are in nats; [`nats_to_bits`] converts for display.

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::spectral::Spectrum;

/// Environment dimension: finite β, or the β → ∞ limit of the closed
/// forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Beta {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for Beta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Beta::Finite(b) => write!(f, "{b}"),
            Beta::Infinite => write!(f, "inf"),
        }
    }
}

/// Arguments of the dominant-eigenvalue closed forms. `lambda0` is
/// strictly inside (0, 1); the exact endpoints are served by the limit
/// branches of the single-argument formulas instead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormInput {
    pub alpha: usize,
    pub beta: Beta,
    pub lambda0: f64,
}

impl ClosedFormInput {
    pub fn new(alpha: usize, beta: Beta, lambda0: f64) -> Result<Self> {
        if alpha == 0 {
            return Err(Error::Parameter("alpha must be positive".into()));
        }
        if let Beta::Finite(b) = beta {
            if b < alpha {
                return Err(Error::Parameter(format!(
                    "beta {b} must be at least alpha {alpha}"
                )));
            }
        }
        if !(lambda0 > 0.0 && lambda0 < 1.0) {
            return Err(Error::Parameter(format!(
                "lambda0 must lie strictly in (0,1), got {lambda0}"
            )));
        }
        Ok(Self {
            alpha,
            beta,
            lambda0,
        })
    }
}

fn clamp_spectrum(spectrum: &Spectrum) -> Result<Vec<f64>> {
    let mut clamped = Vec::with_capacity(spectrum.len());
    for &v in spectrum.values() {
        if v < -1e-10 {
            return Err(Error::Contract(format!(
                "spectrum value {v} is negative beyond tolerance"
            )));
        }
        clamped.push(v.max(0.0));
    }
    let sum: f64 = clamped.iter().sum();
    if (sum - 1.0).abs() > 1e-8 {
        return Err(Error::Contract(format!(
            "spectrum sums to {sum}, not a unit trace"
        )));
    }
    Ok(clamped)
}

/// Von Neumann entropy `-Σ λ ln λ` with the `0 ln 0 := 0` convention.
pub fn von_neumann(spectrum: &Spectrum) -> Result<f64> {
    let values = clamp_spectrum(spectrum)?;
    Ok(values
        .iter()
        .map(|&v| if v > 0.0 { -v * v.ln() } else { 0.0 })
        .sum())
}

/// Renyi entropy `(1/(1-d)) ln Σ λ^d` for real degree `d > 0`, `d ≠ 1`.
pub fn renyi(spectrum: &Spectrum, d: f64) -> Result<f64> {
    if !(d > 0.0) {
        return Err(Error::Parameter("Renyi degree must be positive".into()));
    }
    if d == 1.0 {
        return Err(Error::Parameter(
            "degree 1 is the von Neumann entropy; call von_neumann".into(),
        ));
    }
    let values = clamp_spectrum(spectrum)?;
    let moment: f64 = values
        .iter()
        .map(|&v| if v > 0.0 { v.powf(d) } else { 0.0 })
        .sum();
    Ok(moment.ln() / (1.0 - d))
}

/// Minimal entropy `-ln λ₀`, the d → ∞ limit of the Renyi family.
pub fn renyi_min(spectrum: &Spectrum) -> Result<f64> {
    let l0 = spectrum.lambda0();
    if !(l0 > 0.0) {
        return Err(Error::Degenerate(format!(
            "dominant eigenvalue {l0} is not positive"
        )));
    }
    Ok(-l0.ln())
}

/// Mean entanglement entropy of an unstructured random state,
/// `ln α - α/(2β)`.
pub fn page_entropy(alpha: usize, beta: usize) -> Result<f64> {
    if alpha == 0 || beta < alpha {
        return Err(Error::Parameter(format!(
            "need 1 <= alpha <= beta, got alpha {alpha}, beta {beta}"
        )));
    }
    Ok((alpha as f64).ln() - alpha as f64 / (2.0 * beta as f64))
}

/// Von Neumann entropy as a function of the dominant eigenvalue.
///
/// Finite β evaluates the closed form exactly as printed, including
/// its compound logarithm argument; the β → ∞ flag selects the
/// simplified limit expression.
pub fn entropy_given_lambda0(input: &ClosedFormInput) -> Result<f64> {
    let l0 = input.lambda0;
    let a = input.alpha as f64;
    match input.beta {
        Beta::Infinite => {
            let arg = 4.0 - 4.0 * l0;
            if arg <= 0.0 {
                return Err(Error::Domain(format!(
                    "log argument {arg} is non-positive at lambda0 = {l0}"
                )));
            }
            Ok((-2.0 * LN_2 - a.ln() - l0.ln()) * l0 + (l0 - 1.0) * arg.ln() + 2.0 * LN_2
                + a.ln())
        }
        Beta::Finite(beta) => {
            let b = beta as f64;
            let rest = 1.0 - l0;
            let log_arg = -2.0 * ((a + b) * l0 - (b - a) * rest - a - b) / (a * b);
            if log_arg <= 0.0 {
                return Err(Error::Domain(format!(
                    "log argument {log_arg} is non-positive at lambda0 = {l0}, alpha = {a}, beta = {b}"
                )));
            }
            let total = -4.0 * a * b * l0 * l0.ln()
                + (8.0 * a * b * LN_2 - a * a - b * b) * rest
                - 4.0 * a * b * rest * log_arg.ln()
                + (a + b) * (b - a) * rest;
            Ok(total / (4.0 * a * b))
        }
    }
}

/// Entanglement gap as a function of the dominant eigenvalue, with the
/// first bulk level placed at the Marchenko-Pastur edge:
/// `ln λ₀ - ln[((1-λ₀)/α)(1+sqrt(α/β))²]`.
pub fn gap_given_lambda0(input: &ClosedFormInput) -> f64 {
    let l0 = input.lambda0;
    let edge = bulk_edge(input.alpha, input.beta, l0);
    l0.ln() - edge.ln()
}

/// The bulk (Marchenko-Pastur) edge of the trace-normalized spectrum,
/// `((1-λ₀)/α)(1+sqrt(α/β))²`.
pub fn bulk_edge(alpha: usize, beta: Beta, lambda0: f64) -> f64 {
    let a = alpha as f64;
    let factor = match beta {
        Beta::Finite(b) => {
            let r = (a / b as f64).sqrt();
            (1.0 + r) * (1.0 + r)
        }
        Beta::Infinite => 1.0,
    };
    (1.0 - lambda0) / a * factor
}

/// True when the dominant eigenvalue sits below 1.5 times the bulk
/// edge: the analytic λ₀ curves stop being meaningful there and the
/// point belongs to the crossover regime.
pub fn crossover_flag(alpha: usize, beta: Beta, lambda0: f64) -> bool {
    lambda0 < 1.5 * bulk_edge(alpha, beta, lambda0)
}

/// Empirical entanglement gap `ξ₁ - ξ₀ = ln λ₀ - ln λ₁`.
pub fn gap_empirical(spectrum: &Spectrum) -> Result<f64> {
    if spectrum.len() < 2 {
        return Err(Error::Parameter(
            "gap needs at least two eigenvalues".into(),
        ));
    }
    let l0 = spectrum.values()[0];
    let l1 = spectrum.values()[1];
    if !(l1 > 0.0) {
        return Err(Error::Degenerate(format!(
            "second eigenvalue {l1} is not positive"
        )));
    }
    Ok(l0.ln() - l1.ln())
}

/// Renyi entropy of degree 1 (the von Neumann entropy at β = α) as a
/// function of the dominant eigenvalue, with limit branches at the
/// endpoints: `ln α - 1/2` at λ₀ = 0 and `0` at λ₀ = 1.
pub fn renyi1_analytic(alpha: usize, lambda0: f64) -> Result<f64> {
    if alpha == 0 {
        return Err(Error::Parameter("alpha must be positive".into()));
    }
    if !(0.0..=1.0).contains(&lambda0) {
        return Err(Error::Parameter(format!(
            "lambda0 must lie in [0,1], got {lambda0}"
        )));
    }
    let a = alpha as f64;
    if lambda0 == 0.0 {
        return Ok(a.ln() - 0.5);
    }
    if lambda0 == 1.0 {
        return Ok(0.0);
    }
    let rest = 1.0 - lambda0;
    Ok(rest * (a / (4.0 * rest)).ln() - 0.5 * lambda0 * (4.0 * LN_2 - 1.0)
        - lambda0 * lambda0.ln()
        + 2.0 * LN_2
        - 0.5)
}

/// Renyi entropy of degree 2 at β = α as a function of the dominant
/// eigenvalue: `-ln[(λ₀²(α+2) - 4λ₀ + 2)/α]`.
pub fn renyi2_analytic(alpha: usize, lambda0: f64) -> Result<f64> {
    if alpha == 0 {
        return Err(Error::Parameter("alpha must be positive".into()));
    }
    if !(lambda0 > 0.0 && lambda0 <= 1.0) {
        return Err(Error::Parameter(format!(
            "lambda0 must lie in (0,1], got {lambda0}"
        )));
    }
    let a = alpha as f64;
    let arg = (lambda0 * lambda0 * (a + 2.0) - 4.0 * lambda0 + 2.0) / a;
    if arg <= 0.0 {
        return Err(Error::Domain(format!(
            "moment argument {arg} is non-positive at alpha = {alpha}, lambda0 = {lambda0}"
        )));
    }
    Ok(-arg.ln())
}

const CATALAN: [f64; 13] = [
    1.0, 1.0, 2.0, 5.0, 14.0, 42.0, 132.0, 429.0, 1430.0, 4862.0, 16796.0, 58786.0, 208012.0,
];

/// Moment coefficient `c_d = Catalan(d) / 2^(2d+1)` of the integral
/// `∫₀ᵗ x^(d-1) sqrt((t-x)x) dx = c_d π t^(d+1)`.
pub fn moment_coefficient(d: usize) -> Result<f64> {
    if !(2..=12).contains(&d) {
        return Err(Error::Parameter(format!(
            "moment coefficient is tabulated for 2 <= d <= 12, got {d}"
        )));
    }
    Ok(CATALAN[d] / f64::powi(2.0, 2 * d as i32 + 1))
}

/// Renyi entropy of integer degree `d >= 2` at β = α as a function of
/// the dominant eigenvalue, assembled from the moment integral:
/// `E_d = (1/(1-d)) ln[(α/(2π σ_γ²)) c_d π t^(d+1) + λ₀^d]` with
/// `t = 4σ_γ² = 4(1-λ₀)/α`. At λ₀ = 1 the bulk term vanishes and the
/// entropy is 0.
pub fn renyi_d_analytic(alpha: usize, lambda0: f64, d: usize) -> Result<f64> {
    if alpha == 0 {
        return Err(Error::Parameter("alpha must be positive".into()));
    }
    if !(lambda0 > 0.0 && lambda0 <= 1.0) {
        return Err(Error::Parameter(format!(
            "lambda0 must lie in (0,1], got {lambda0}"
        )));
    }
    let c = moment_coefficient(d)?;
    if lambda0 == 1.0 {
        return Ok(0.0);
    }
    let a = alpha as f64;
    let sigma_sq = (1.0 - lambda0) / a;
    let t = 4.0 * sigma_sq;
    let bulk = a / (2.0 * PI * sigma_sq) * c * PI * t.powi(d as i32 + 1);
    let arg = bulk + lambda0.powi(d as i32);
    if arg <= 0.0 {
        return Err(Error::Domain(format!(
            "moment argument {arg} is non-positive at alpha = {alpha}, lambda0 = {lambda0}, d = {d}"
        )));
    }
    Ok(arg.ln() / (1.0 - d as f64))
}

/// `∫ₐᵇ sqrt((b-x)(x-a)) dx = π (b-a)² / 8`.
pub fn integral_a1(a: f64, b: f64) -> Result<f64> {
    if !(b >= a) {
        return Err(Error::Parameter(format!("need b >= a, got a = {a}, b = {b}")));
    }
    Ok(PI * (b - a) * (b - a) / 8.0)
}

/// `∫ₐᵇ ln(x) sqrt((b-x)(x-a)) dx` in closed form, requiring `0 < a <= b`.
pub fn integral_a2(a: f64, b: f64) -> Result<f64> {
    if a <= 0.0 {
        return Err(Error::Domain(format!(
            "lower limit must be positive, got a = {a}"
        )));
    }
    if !(b >= a) {
        return Err(Error::Parameter(format!("need b >= a, got a = {a}, b = {b}")));
    }
    let sq = (a * b).sqrt();
    let diff = a - b;
    let val = a * a + 6.0 * a * b + b * b - 4.0 * sq * (a + b) - 4.0 * diff * diff * LN_2
        + 2.0 * diff * diff * (a + b + 2.0 * sq).ln();
    Ok(PI / 16.0 * val)
}

/// `∫₀ᵇ ln(x) sqrt(x(b-x)) dx = (π/16)(2b² ln b - b²(4 ln 2 - 1))`.
pub fn integral_a4(b: f64) -> Result<f64> {
    if !(b > 0.0) {
        return Err(Error::Parameter(format!("need b > 0, got {b}")));
    }
    Ok(PI / 16.0 * (2.0 * b * b * b.ln() - b * b * (4.0 * LN_2 - 1.0)))
}

/// Converts an entropy in nats to bits.
pub fn nats_to_bits(nats: f64) -> f64 {
    nats / LN_2
}

/// Entropies of one spectrum: the dominant eigenvalue, the von Neumann
/// entropy, Renyi entropies for the requested degrees (degree 1 maps
/// to the von Neumann value), and the entanglement gap.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyReport {
    pub alpha: usize,
    pub beta: Beta,
    pub lambda0: f64,
    pub von_neumann: f64,
    pub renyi: Vec<(f64, f64)>,
    pub gap: f64,
}

impl EntropyReport {
    pub fn from_spectrum(
        spectrum: &Spectrum,
        alpha: usize,
        beta: Beta,
        degrees: &[f64],
    ) -> Result<Self> {
        let vn = von_neumann(spectrum)?;
        let a = alpha as f64;
        if vn > a.ln() + 1e-9 {
            return Err(Error::Contract(format!(
                "von Neumann entropy {vn} exceeds ln(alpha) = {}",
                a.ln()
            )));
        }
        let mut pairs = Vec::with_capacity(degrees.len());
        for &d in degrees {
            let value = if d == 1.0 { vn } else { renyi(spectrum, d)? };
            pairs.push((d, value));
        }
        pairs.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        for w in pairs.windows(2) {
            if w[1].1 > w[0].1 + 1e-9 {
                return Err(Error::Contract(format!(
                    "Renyi entropy is not non-increasing: E_{} = {} < E_{} = {}",
                    w[0].0, w[0].1, w[1].0, w[1].1
                )));
            }
        }
        Ok(Self {
            alpha,
            beta,
            lambda0: spectrum.lambda0(),
            von_neumann: vn,
            renyi: pairs,
            gap: gap_empirical(spectrum)?,
        })
    }
}
