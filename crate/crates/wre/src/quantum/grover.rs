//! Grover search for pre-images of a toy 8-bit sponge hash on an
//! 18-qubit register: 8 search qubits, 8 work qubits holding the
//! digest, and 2 idle qubits. Entanglement of the search register is
//! sampled at four checkpoints per iteration.

use std::f64::consts::PI;

use num_complex::Complex;

use crate::entropy::von_neumann;
use crate::error::{Error, Result};
use crate::quantum::{reduced_spectrum, StateVector};

const ROUND_CONSTANTS: [u8; 3] = [3, 1, 4];
const ROTATIONS: [u32; 3] = [1, 2, 3];

fn rotl4(x: u8, r: u32) -> u8 {
    ((x << r) | (x >> (4 - r))) & 0xF
}

/// Toy sponge hash on 8 bits: a 3-round add-rotate-xor permutation of
/// the two nibbles, closed Davies-Meyer style by XORing the message
/// back in. Round constants 3, 1, 4 and rotations 1, 2, 3.
pub fn toy_sponge_hash(message: u8) -> u8 {
    let mut a = (message >> 4) & 0xF;
    let mut b = message & 0xF;
    for (&rc, &r) in ROUND_CONSTANTS.iter().zip(ROTATIONS.iter()) {
        a = a.wrapping_add(b).wrapping_add(rc) & 0xF;
        a = rotl4(a, r);
        b ^= a;
        std::mem::swap(&mut a, &mut b);
    }
    ((a << 4) | b) ^ message
}

/// Messages hashing to `digest`.
pub fn preimages(digest: u8) -> Vec<u8> {
    (0..=255u8).filter(|&m| toy_sponge_hash(m) == digest).collect()
}

/// Search configuration: the register is fixed at 18 qubits with the
/// low 8 searched; the ciphertext and iteration count vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroverConfig {
    pub ciphertext: u8,
    pub iterations: usize,
}

impl GroverConfig {
    pub const TOTAL_QUBITS: usize = 18;
    pub const SEARCH_QUBITS: usize = 8;

    pub fn new(ciphertext: u8, iterations: usize) -> Result<Self> {
        let config = Self {
            ciphertext,
            iterations,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.iterations == 0 {
            return Err(Error::Parameter("iteration count must be positive".into()));
        }
        if preimages(self.ciphertext).is_empty() {
            return Err(Error::Parameter(format!(
                "ciphertext {:08b} has no pre-images under the toy hash",
                self.ciphertext
            )));
        }
        Ok(())
    }

    /// Iteration count from the rotation angle,
    /// `round(π / (4 asin(sqrt(M/N))) - 1/2)`.
    pub fn optimal_iterations(preimage_count: usize) -> usize {
        let n = (1u32 << Self::SEARCH_QUBITS) as f64;
        let theta = (preimage_count as f64 / n).sqrt().asin();
        (PI / (4.0 * theta) - 0.5).round() as usize
    }
}

impl Default for GroverConfig {
    fn default() -> Self {
        Self {
            ciphertext: 0b1010_0011,
            iterations: 8,
        }
    }
}

/// The four per-iteration sampling points of the search circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroverCheckpoint {
    Hash,
    Oracle,
    InverseHash,
    Diffusion,
}

impl GroverCheckpoint {
    pub const ALL: [GroverCheckpoint; 4] = [
        GroverCheckpoint::Hash,
        GroverCheckpoint::Oracle,
        GroverCheckpoint::InverseHash,
        GroverCheckpoint::Diffusion,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            GroverCheckpoint::Hash => "hash",
            GroverCheckpoint::Oracle => "oracle",
            GroverCheckpoint::InverseHash => "inverse_hash",
            GroverCheckpoint::Diffusion => "diffusion",
        }
    }
}

/// Entanglement sample at one checkpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct GroverRecord {
    pub iteration: usize,
    pub checkpoint: GroverCheckpoint,
    pub lambda0: f64,
    pub entropy: f64,
}

/// Full run: 4 records per iteration plus the tracked success
/// probability and the pre-image set.
#[derive(Debug, Clone, PartialEq)]
pub struct GroverRun {
    pub records: Vec<GroverRecord>,
    pub success_by_iteration: Vec<f64>,
    pub preimages: Vec<u8>,
}

const SEARCH_DIM: usize = 256;
const REST_DIM: usize = 1 << 10;

fn index(m: usize, rest: usize) -> usize {
    m | (rest << 8)
}

fn apply_hash(amps: &mut [Complex<f64>], digests: &[u8; 256]) {
    // basis permutation |m, w, idle> -> |m, w ^ H(m), idle>, an
    // involution applied as pairwise swaps
    for m in 0..SEARCH_DIM {
        let h = digests[m] as usize;
        if h == 0 {
            continue;
        }
        for idle in 0..4usize {
            for w in 0..256usize {
                let w2 = w ^ h;
                if w < w2 {
                    let i = index(m, w | (idle << 8));
                    let j = index(m, w2 | (idle << 8));
                    amps.swap(i, j);
                }
            }
        }
    }
}

fn apply_oracle(amps: &mut [Complex<f64>], ciphertext: u8) {
    // multi-controlled phase flip on the work register
    let c = ciphertext as usize;
    for idle in 0..4usize {
        let rest = c | (idle << 8);
        for m in 0..SEARCH_DIM {
            let i = index(m, rest);
            amps[i] = -amps[i];
        }
    }
}

fn apply_diffusion(amps: &mut [Complex<f64>]) {
    // inversion about the mean on the search register, blockwise over
    // the contiguous 256 search states per work/idle configuration
    for rest in 0..REST_DIM {
        let base = index(0, rest);
        let block = &mut amps[base..base + SEARCH_DIM];
        let mean = block.iter().sum::<Complex<f64>>() / SEARCH_DIM as f64;
        for a in block.iter_mut() {
            *a = 2.0 * mean - *a;
        }
    }
}

fn success_probability(amps: &[Complex<f64>], marked: &[u8]) -> f64 {
    let mut p = 0.0;
    for &m in marked {
        for rest in 0..REST_DIM {
            p += amps[index(m as usize, rest)].norm_sqr();
        }
    }
    p
}

/// Runs the search, sampling (λ₀, E) of the 8 search qubits after the
/// hash unitary, the oracle phase flip, the inverse hash unitary, and
/// the diffusion operator of every iteration.
pub fn grover_experiment(config: &GroverConfig) -> Result<GroverRun> {
    config.validate()?;
    let marked = preimages(config.ciphertext);
    let mut digests = [0u8; 256];
    for m in 0..256usize {
        digests[m] = toy_sponge_hash(m as u8);
    }

    let dim = 1usize << GroverConfig::TOTAL_QUBITS;
    let mut amps = vec![Complex::new(0.0, 0.0); dim];
    let amp0 = 1.0 / (SEARCH_DIM as f64).sqrt();
    for m in 0..SEARCH_DIM {
        amps[index(m, 0)] = Complex::new(amp0, 0.0);
    }

    let keep: Vec<usize> = (0..GroverConfig::SEARCH_QUBITS).collect();
    let mut records = Vec::with_capacity(4 * config.iterations);
    let mut success = Vec::with_capacity(config.iterations);

    let sample = |amps: &[Complex<f64>],
                      iteration: usize,
                      checkpoint: GroverCheckpoint|
     -> Result<GroverRecord> {
        let state = StateVector::new(GroverConfig::TOTAL_QUBITS, amps.to_vec())?;
        let spectrum = reduced_spectrum(&state, &keep)?;
        Ok(GroverRecord {
            iteration,
            checkpoint,
            lambda0: spectrum.lambda0(),
            entropy: von_neumann(&spectrum)?,
        })
    };

    for iteration in 1..=config.iterations {
        apply_hash(&mut amps, &digests);
        records.push(sample(&amps, iteration, GroverCheckpoint::Hash)?);
        apply_oracle(&mut amps, config.ciphertext);
        records.push(sample(&amps, iteration, GroverCheckpoint::Oracle)?);
        apply_hash(&mut amps, &digests);
        records.push(sample(&amps, iteration, GroverCheckpoint::InverseHash)?);
        apply_diffusion(&mut amps);
        records.push(sample(&amps, iteration, GroverCheckpoint::Diffusion)?);
        success.push(success_probability(&amps, &marked));
    }

    Ok(GroverRun {
        records,
        success_by_iteration: success,
        preimages: marked,
    })
}
