//! Shared flags and small parsers used by every subcommand.

use wre::{Error, Result};

/// Flags common to all subcommands.
#[derive(Clone, Debug, clap::Args)]
pub struct CommonOpts {
    /// Seed for every stochastic stage
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Output directory, created if missing
    #[arg(long, default_value = "wre-out")]
    pub out: std::path::PathBuf,
    /// Worker threads; the WRE_THREADS env var overrides this flag
    #[arg(long)]
    pub threads: Option<usize>,
    /// Add base-2 display columns next to every entropy column
    #[arg(long)]
    pub log2: bool,
}

impl CommonOpts {
    /// Worker count: `WRE_THREADS`, then `--threads`, then all cores.
    pub fn resolve_threads(&self) -> Result<usize> {
        if let Ok(raw) = std::env::var("WRE_THREADS") {
            let n: usize = raw
                .trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("WRE_THREADS must be a count, got {raw:?}")))?;
            if n == 0 {
                return Err(Error::Parameter("WRE_THREADS must be at least 1".into()));
            }
            return Ok(n);
        }
        if let Some(n) = self.threads {
            if n == 0 {
                return Err(Error::Parameter("--threads must be at least 1".into()));
            }
            return Ok(n);
        }
        Ok(std::thread::available_parallelism().map_or(1, |n| n.get()))
    }
}

/// Inclusive linear grid parsed from `lo:hi:count`.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl Grid {
    pub fn new(lo: f64, hi: f64, count: usize) -> Self {
        Self { lo, hi, count }
    }

    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.lo];
        }
        let step = (self.hi - self.lo) / (self.count - 1) as f64;
        (0..self.count).map(|i| self.lo + step * i as f64).collect()
    }

    pub fn spec(&self) -> String {
        format!("{}:{}:{}", self.lo, self.hi, self.count)
    }
}

/// clap value parser for [`Grid`].
pub fn parse_grid(s: &str) -> std::result::Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected lo:hi:count, got {s:?}"));
    }
    let lo: f64 = parts[0].parse().map_err(|_| format!("bad grid start {:?}", parts[0]))?;
    let hi: f64 = parts[1].parse().map_err(|_| format!("bad grid end {:?}", parts[1]))?;
    let count: usize = parts[2].parse().map_err(|_| format!("bad grid count {:?}", parts[2]))?;
    if !(lo.is_finite() && hi.is_finite()) {
        return Err("grid endpoints must be finite".into());
    }
    if hi < lo {
        return Err(format!("grid end {hi} is below start {lo}"));
    }
    if count == 0 {
        return Err("grid needs at least one point".into());
    }
    if count == 1 && hi != lo {
        return Err("a single-point grid needs equal endpoints".into());
    }
    Ok(Grid::new(lo, hi, count))
}

/// clap value parser for a byte given as decimal or 0x-prefixed hex.
pub fn parse_byte(s: &str) -> std::result::Result<u8, String> {
    let t = s.trim();
    let parsed = if let Some(hex) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        u8::from_str_radix(hex, 16)
    } else {
        t.parse()
    };
    parsed.map_err(|_| format!("expected a byte (0-255 or 0xNN), got {s:?}"))
}

/// Dominant-eigenvalue target mapped to the sampling-unit entry mean.
pub fn gamma_for_lambda0(lambda0: f64) -> f64 {
    (lambda0 / (1.0 - lambda0)).sqrt()
}

/// The inverse map recorded in run metadata.
pub fn lambda0_for_gamma(gamma: f64) -> f64 {
    gamma * gamma / (1.0 + gamma * gamma)
}
