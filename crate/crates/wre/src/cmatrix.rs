//! Dense rectangular complex matrices and reduced density matrices.
//!
//! Storage is row-major. The scalar type is generic; see [`crate::scalar`].

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense `rows x cols` complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    /// Builds a matrix from a row-major entry buffer.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Parameter(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::Parameter(format!(
                "entry count {} does not match {rows}x{cols}",
                data.len()
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Contract("matrix contains non-finite entries".into()));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix by evaluating `f(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::new(rows, cols, data)
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::from_fn(dim, dim, |i, j| {
            if i == j {
                Complex::new(T::one(), T::zero())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.cols + j]
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Complex<T>> {
        self.data
    }

    /// Sum of squared entry magnitudes, accumulated in `f64`.
    pub fn frobenius_sq(&self) -> f64 {
        self.data
            .iter()
            .map(|z| {
                let re = z.re.to_f64().unwrap();
                let im = z.im.to_f64().unwrap();
                re * re + im * im
            })
            .sum()
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Result<Complex<T>> {
        if self.rows != self.cols {
            return Err(Error::Parameter("trace requires a square matrix".into()));
        }
        let mut acc = Complex::new(T::zero(), T::zero());
        for i in 0..self.rows {
            acc = acc + self.data[i * self.cols + i];
        }
        Ok(acc)
    }

    /// Largest entrywise deviation from the adjoint, `max |m - m^H|`.
    pub fn adjoint_deviation(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::Parameter("hermiticity requires a square matrix".into()));
        }
        let n = self.rows;
        let mut worst = T::zero();
        for i in 0..n {
            for j in i..n {
                let d = self.data[i * n + j] - self.data[j * n + i].conj();
                let mag = (d.re * d.re + d.im * d.im).sqrt();
                if mag > worst {
                    worst = mag;
                }
            }
        }
        Ok(worst)
    }

    /// `self . self^H / divisor`, exactly Hermitian by construction.
    pub fn gram_scaled(&self, divisor: T) -> Self {
        let mut dst = vec![Complex::new(T::zero(), T::zero()); self.rows * self.rows];
        T::gram_adjoint_into(self.rows, self.cols, &self.data, divisor, &mut dst);
        Self {
            rows: self.rows,
            cols: self.rows,
            data: dst,
        }
    }
}

/// Hermitian, positive semi-definite, unit-trace square matrix.
#[derive(Debug, Clone)]
pub struct DensityMatrix<T: Scalar> {
    matrix: ComplexMatrix<T>,
}

impl<T: Scalar> DensityMatrix<T> {
    /// Wraps a matrix after checking hermiticity and unit trace.
    ///
    /// Positive semi-definiteness is a property of the construction
    /// (every density matrix here is a scaled Gram product); it is
    /// checked spectrally by [`DensityMatrix::validate_psd`] rather
    /// than on every wrap.
    pub fn new(matrix: ComplexMatrix<T>) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::Parameter("density matrix must be square".into()));
        }
        let dev = matrix.adjoint_deviation()?;
        if dev > T::from_f64(1e-12).unwrap().max(T::epsilon()) {
            return Err(Error::Contract(format!(
                "density matrix is not Hermitian: deviation {dev}"
            )));
        }
        let tr = matrix.trace()?;
        let tr_re = tr.re.to_f64().unwrap();
        let eps = T::epsilon().to_f64().unwrap();
        let tol = 1e-12_f64.max(8.0 * matrix.rows() as f64 * eps);
        if (tr_re - 1.0).abs() > tol {
            return Err(Error::Contract(format!(
                "density matrix trace {tr_re} is not 1"
            )));
        }
        Ok(Self { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    /// Spectral PSD check: smallest eigenvalue above `-1e-10`.
    pub fn validate_psd(&self) -> Result<()> {
        let ev = T::hermitian_eigenvalues_ascending(self.dim(), self.matrix.as_slice())?;
        let min = ev[0].to_f64().unwrap();
        if min < -1e-10 {
            return Err(Error::Contract(format!(
                "density matrix has eigenvalue {min} below -1e-10"
            )));
        }
        Ok(())
    }
}
