//! Adiabatic Exact Cover: the clause instance, the interpolated
//! Hamiltonian `H_s = (1-s) H0 + s Hp`, and the entanglement of the
//! instantaneous ground state along the schedule.

use num_complex::Complex;
use rand::RngExt;

use crate::entropy::von_neumann;
use crate::error::{Error, Result};
use crate::quantum::{reduced_spectrum, StateVector};
use crate::randmat::stream_rng;
use crate::scalar::sym_eigen_small;

/// Exact Cover instance: clauses over `n` bits, each satisfied when
/// exactly one of its three bits is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCoverInstance {
    n: usize,
    clauses: Vec<[usize; 3]>,
}

impl ExactCoverInstance {
    pub fn new(n: usize, clauses: Vec<[usize; 3]>) -> Result<Self> {
        if n < 3 || n > 24 {
            return Err(Error::Parameter(format!(
                "bit count must lie in 3..=24, got {n}"
            )));
        }
        if clauses.is_empty() {
            return Err(Error::Parameter("instance needs at least one clause".into()));
        }
        let mut normalized = Vec::with_capacity(clauses.len());
        for mut clause in clauses {
            clause.sort_unstable();
            if clause[0] == clause[1] || clause[1] == clause[2] {
                return Err(Error::Parameter(format!(
                    "clause {clause:?} has repeated indices"
                )));
            }
            if clause[2] >= n {
                return Err(Error::Parameter(format!(
                    "clause {clause:?} references a bit outside 0..{n}"
                )));
            }
            normalized.push(clause);
        }
        Ok(Self {
            n,
            clauses: normalized,
        })
    }

    /// The n=12 instance shipped with the repo; exhaustive search shows
    /// its unique satisfying assignment is 2817 (bits 0, 8, 9, 11).
    pub fn shipped() -> Self {
        let clauses = vec![
            [0, 1, 2],
            [0, 1, 6],
            [0, 2, 6],
            [0, 3, 7],
            [0, 4, 5],
            [0, 6, 10],
            [1, 5, 9],
            [1, 5, 11],
            [5, 7, 8],
            [5, 10, 11],
        ];
        Self::new(12, clauses).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// Number of violated clauses under the given assignment.
    pub fn violations(&self, assignment: usize) -> usize {
        self.clauses
            .iter()
            .filter(|c| {
                let ones = ((assignment >> c[0]) & 1)
                    + ((assignment >> c[1]) & 1)
                    + ((assignment >> c[2]) & 1);
                ones != 1
            })
            .count()
    }

    /// All satisfying assignments, by exhaustive search.
    pub fn solutions(&self) -> Vec<usize> {
        (0..1usize << self.n)
            .filter(|&s| self.violations(s) == 0)
            .collect()
    }

    /// Draws random 3-subsets until an instance with a unique
    /// satisfying assignment appears; returns it with its solution.
    pub fn generate(n: usize, seed: u64, max_attempts: usize) -> Result<(Self, usize)> {
        if n < 4 || n > 16 {
            return Err(Error::Parameter(format!(
                "generator supports 4..=16 bits, got {n}"
            )));
        }
        let mut rng = stream_rng(seed, 0);
        for _ in 0..max_attempts {
            let clause_count = rng.random_range(8..=14);
            let mut set = std::collections::BTreeSet::new();
            while set.len() < clause_count {
                let mut triple = [0usize; 3];
                triple[0] = rng.random_range(0..n);
                loop {
                    triple[1] = rng.random_range(0..n);
                    if triple[1] != triple[0] {
                        break;
                    }
                }
                loop {
                    triple[2] = rng.random_range(0..n);
                    if triple[2] != triple[0] && triple[2] != triple[1] {
                        break;
                    }
                }
                triple.sort_unstable();
                set.insert(triple);
            }
            let instance = Self::new(n, set.into_iter().collect())?;
            let mut found = Vec::new();
            for s in 0..1usize << n {
                if instance.violations(s) == 0 {
                    found.push(s);
                    if found.len() > 1 {
                        break;
                    }
                }
            }
            if found.len() == 1 {
                return Ok((instance, found[0]));
            }
        }
        Err(Error::Degenerate(format!(
            "no unique-solution instance found in {max_attempts} attempts"
        )))
    }
}

/// The two Hamiltonians of the schedule. `H0 = Σ_i (1 - σx_i)/2` is
/// kept implicit: diagonal `n/2`, off-diagonal `-1/2` between basis
/// states differing in one bit, ground state the uniform superposition
/// at eigenvalue 0. `Hp` is diagonal, counting violated clauses.
#[derive(Debug, Clone, PartialEq)]
pub struct EcHamiltonians {
    pub n: usize,
    pub hp_diagonal: Vec<f64>,
}

impl EcHamiltonians {
    pub fn dim(&self) -> usize {
        1 << self.n
    }

    /// `y = ((1-s) H0 + s Hp) x`.
    pub fn hs_matvec(&self, s: f64, x: &[f64], y: &mut [f64]) {
        let diag0 = (1.0 - s) * self.n as f64 / 2.0;
        let hop = -(1.0 - s) / 2.0;
        for (idx, out) in y.iter_mut().enumerate() {
            let mut acc = (diag0 + s * self.hp_diagonal[idx]) * x[idx];
            for j in 0..self.n {
                acc += hop * x[idx ^ (1 << j)];
            }
            *out = acc;
        }
    }
}

pub fn exact_cover_hamiltonians(instance: &ExactCoverInstance) -> EcHamiltonians {
    let hp_diagonal = (0..1usize << instance.n())
        .map(|s| instance.violations(s) as f64)
        .collect();
    EcHamiltonians {
        n: instance.n(),
        hp_diagonal,
    }
}

/// Ground-state entanglement sample at one schedule point.
#[derive(Debug, Clone, PartialEq)]
pub struct AdiabaticRecord {
    pub s: f64,
    pub lambda0: f64,
    pub entropy: f64,
    /// Set when the two lowest levels of `H_s` sit within 1e-10; the
    /// reported state is then the iteration's tie-break, for the
    /// diagonal endpoint the lowest basis index.
    pub degenerate: bool,
}

/// 51 uniform schedule points in [0, 1].
pub fn default_s_grid() -> Vec<f64> {
    (0..51).map(|i| i as f64 / 50.0).collect()
}

const LANCZOS_MAX_ITER: usize = 350;
const LANCZOS_RESIDUAL_TOL: f64 = 1e-11;
const DEGENERACY_TOL: f64 = 1e-10;

struct GroundPair {
    gap: f64,
    vector: Vec<f64>,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn tridiag_ground(alphas: &[f64], betas: &[f64]) -> Result<(f64, f64, Vec<f64>)> {
    let k = alphas.len();
    let mut dense = vec![0.0; k * k];
    for i in 0..k {
        dense[i * k + i] = alphas[i];
        if i + 1 < k {
            dense[i * k + i + 1] = betas[i];
            dense[(i + 1) * k + i] = betas[i];
        }
    }
    let (values, vectors) = sym_eigen_small(k, &dense)?;
    let gap = if k > 1 {
        values[1] - values[0]
    } else {
        f64::INFINITY
    };
    let y = (0..k).map(|i| vectors[i * k]).collect();
    Ok((values[0], gap, y))
}

/// Lanczos with full reorthogonalization for the ground pair of `H_s`.
/// The uniform start vector has positive overlap with the ground state
/// for every s < 1 (the off-diagonal of `H_s` is non-positive and the
/// flip graph connected, so the ground state is strictly positive).
fn lanczos_ground(ham: &EcHamiltonians, s: f64) -> Result<GroundPair> {
    let dim = ham.dim();
    let mut basis: Vec<Vec<f64>> = Vec::new();
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let mut v = vec![1.0 / (dim as f64).sqrt(); dim];
    let mut w = vec![0.0; dim];

    for k in 0..LANCZOS_MAX_ITER {
        basis.push(v.clone());
        ham.hs_matvec(s, &v, &mut w);
        let alpha = dot(&w, &v);
        alphas.push(alpha);
        for (wi, vi) in w.iter_mut().zip(&v) {
            *wi -= alpha * vi;
        }
        if let Some(prev) = basis.get(k.wrapping_sub(1)) {
            let beta_prev = betas[k - 1];
            for (wi, pi) in w.iter_mut().zip(prev) {
                *wi -= beta_prev * pi;
            }
        }
        for _ in 0..2 {
            for b in &basis {
                let c = dot(&w, b);
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= c * bi;
                }
            }
        }
        let beta = dot(&w, &w).sqrt();
        if beta < 1e-13 {
            break;
        }
        let check = k + 1 == LANCZOS_MAX_ITER || (k >= 1 && (k + 1) % 10 == 0);
        if check {
            let (_, _, y) = tridiag_ground(&alphas, &betas)?;
            let residual = (beta * y[y.len() - 1]).abs();
            if residual <= LANCZOS_RESIDUAL_TOL {
                break;
            }
            if k + 1 == LANCZOS_MAX_ITER {
                return Err(Error::Numerical(format!(
                    "ground state iteration did not converge at s = {s}: residual {residual:e}"
                )));
            }
        }
        betas.push(beta);
        for (vi, wi) in v.iter_mut().zip(&w) {
            *vi = wi / beta;
        }
    }

    let (_, gap, y) = tridiag_ground(&alphas, &betas)?;
    let mut ground = vec![0.0; dim];
    for (coef, b) in y.iter().zip(&basis) {
        for (gi, bi) in ground.iter_mut().zip(b) {
            *gi += coef * bi;
        }
    }
    let norm = dot(&ground, &ground).sqrt();
    if !(norm > 0.0) {
        return Err(Error::Numerical("ground vector collapsed to zero".into()));
    }
    for g in &mut ground {
        *g /= norm;
    }
    Ok(GroundPair {
        gap,
        vector: ground,
    })
}

fn diagonal_ground(ham: &EcHamiltonians) -> GroundPair {
    let mut best = 0usize;
    let mut second = f64::INFINITY;
    for (idx, &v) in ham.hp_diagonal.iter().enumerate() {
        if v < ham.hp_diagonal[best] {
            second = ham.hp_diagonal[best];
            best = idx;
        } else if idx != best && v < second {
            second = v;
        }
    }
    let mut vector = vec![0.0; ham.dim()];
    vector[best] = 1.0;
    GroundPair {
        gap: second - ham.hp_diagonal[best],
        vector,
    }
}

/// Ground state of `H_s` across the schedule, with the entanglement of
/// the first-half/second-half bipartition at every point.
pub fn adiabatic_experiment(
    instance: &ExactCoverInstance,
    s_grid: &[f64],
) -> Result<Vec<AdiabaticRecord>> {
    let n = instance.n();
    if n % 2 != 0 {
        return Err(Error::Parameter(format!(
            "the natural bipartition needs an even bit count, got {n}"
        )));
    }
    if n > 14 {
        return Err(Error::Parameter(format!(
            "dense ground-state tracking is limited to n <= 14, got {n}"
        )));
    }
    if s_grid.is_empty() {
        return Err(Error::Parameter("schedule grid must be non-empty".into()));
    }
    if s_grid.iter().any(|&s| !(0.0..=1.0).contains(&s)) {
        return Err(Error::Parameter("schedule points must lie in [0, 1]".into()));
    }
    let ham = exact_cover_hamiltonians(instance);
    let keep: Vec<usize> = (0..n / 2).collect();
    let mut records = Vec::with_capacity(s_grid.len());
    for &s in s_grid {
        let pair = if s == 1.0 {
            diagonal_ground(&ham)
        } else {
            lanczos_ground(&ham, s)?
        };
        let amplitudes: Vec<Complex<f64>> =
            pair.vector.iter().map(|&x| Complex::new(x, 0.0)).collect();
        let state = StateVector::new(n, amplitudes)?;
        let spectrum = reduced_spectrum(&state, &keep)?;
        records.push(AdiabaticRecord {
            s,
            lambda0: spectrum.lambda0(),
            entropy: von_neumann(&spectrum)?,
            degenerate: pair.gap < DEGENERACY_TOL,
        });
    }
    Ok(records)
}
