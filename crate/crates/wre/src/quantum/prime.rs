//! The Prime state: an equally weighted superposition of the primes
//! below `2^n`, encoded with qubit 0 as the least significant bit.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::quantum::{StateVector, MAX_QUBITS};

/// Primes below `limit` by sieve of Eratosthenes.
pub fn primes_below(limit: usize) -> Vec<usize> {
    if limit < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; limit];
    let mut primes = Vec::new();
    for p in 2..limit {
        if composite[p] {
            continue;
        }
        primes.push(p);
        let mut q = p * p;
        while q < limit {
            composite[q] = true;
            q += p;
        }
    }
    primes
}

/// Equal superposition of all prime basis states below `2^n_qubits`,
/// amplitude `1/sqrt(π(2^n))` each.
pub fn prime_state(n_qubits: usize) -> Result<StateVector> {
    if n_qubits < 4 || n_qubits > MAX_QUBITS {
        return Err(Error::Parameter(format!(
            "prime state needs 4..={MAX_QUBITS} qubits, got {n_qubits}"
        )));
    }
    let dim = 1usize << n_qubits;
    let primes = primes_below(dim);
    let amp = 1.0 / (primes.len() as f64).sqrt();
    let mut amplitudes = vec![Complex::new(0.0, 0.0); dim];
    for p in primes {
        amplitudes[p] = Complex::new(amp, 0.0);
    }
    StateVector::new(n_qubits, amplitudes)
}
