//! Exact relations between the dominant eigenvalue of random reduced
//! density matrices and their entanglement entropies, with the
//! Monte-Carlo and quantum-circuit machinery to validate them:
//!
//! - [`randmat`]: reproducible sampling of Gaussian, Wishart, and
//!   trace-normalized random density matrices;
//! - [`spectral`]: Hermitian spectra, empirical spectral
//!   distributions, and the Marchenko-Pastur law;
//! - [`entropy`]: numeric and closed-form von Neumann, Renyi, and
//!   entanglement-gap evaluations keyed to the dominant eigenvalue;
//! - [`quantum`]: statevector experiments (QFT invariance, Grover
//!   toy-hash search, adiabatic Exact Cover, Prime state);
//! - [`quad`]: the adaptive quadrature used as an oracle for every
//!   closed form.
//!
//! The matrix layer is generic over its floating-point [`Scalar`];
//! `f64` is the default and honours the documented tolerances, while
//! `f32` doubles throughput for the widest spectra. The aliases below
//! pin the common choices.

pub mod cmatrix;
pub mod entropy;
pub mod error;
pub mod quad;
pub mod quantum;
pub mod randmat;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Double-precision complex matrix, the default.
pub type ComplexMatrix = cmatrix::ComplexMatrix<f64>;
/// Single-precision complex matrix for throughput-bound spectra.
pub type ComplexMatrix32 = cmatrix::ComplexMatrix<f32>;
/// Double-precision density matrix, the default.
pub type DensityMatrix = cmatrix::DensityMatrix<f64>;
/// Single-precision density matrix for throughput-bound spectra.
pub type DensityMatrix32 = cmatrix::DensityMatrix<f32>;
/// Double-precision ensemble parameters, the default.
pub type EnsembleSpec = randmat::EnsembleSpec<f64>;
/// Single-precision ensemble parameters for throughput-bound spectra.
pub type EnsembleSpec32 = randmat::EnsembleSpec<f32>;
