//! Reduced spectra of random states before and after the quantum
//! Fourier transform.

use serde_json::json;
use wre::entropy::von_neumann;
use wre::quantum::{qft, random_state, reduced_spectrum};

use crate::opts::{gamma_for_lambda0, CommonOpts};
use crate::out::{fcol, fmt_f, read_csv, with_bits, RunContext, Table};
use crate::plot::{Mark, Series};
use crate::pool::indexed_map;
use crate::{plot, CliResult};

const MAX_TOTAL_QUBITS: usize = 20;

#[derive(clap::Args)]
pub struct Args {
    /// Kept-subsystem dimension; must be a power of two
    #[arg(long, default_value_t = 128)]
    pub alpha: usize,
    /// Environment dimension; repeatable, powers of two. Default {128, 256, 512}
    #[arg(long = "beta")]
    pub betas: Vec<usize>,
    /// Random states per environment width
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[command(flatten)]
    pub common: CommonOpts,
}

struct Point {
    gamma: f64,
    lambda0_before: f64,
    entropy_before: f64,
    lambda0_after: f64,
    entropy_after: f64,
}

pub fn run(args: &Args) -> CliResult<()> {
    if args.trials == 0 {
        return Err(wre::Error::Parameter("trials must be at least 1".into()).into());
    }
    if !args.alpha.is_power_of_two() || args.alpha < 2 {
        return Err(wre::Error::Parameter(format!(
            "alpha must be a power of two at least 2, got {}",
            args.alpha
        ))
        .into());
    }
    let betas = if args.betas.is_empty() {
        vec![args.alpha, args.alpha * 2, args.alpha * 4]
    } else {
        args.betas.clone()
    };
    for &beta in &betas {
        if !beta.is_power_of_two() || beta < 2 {
            return Err(wre::Error::Parameter(format!(
                "beta must be a power of two at least 2, got {beta}"
            ))
            .into());
        }
        let n = (args.alpha.trailing_zeros() + beta.trailing_zeros()) as usize;
        if n > MAX_TOTAL_QUBITS {
            return Err(wre::Error::Parameter(format!(
                "alpha {} with beta {beta} needs {n} qubits, desk bound is {MAX_TOTAL_QUBITS}",
                args.alpha
            ))
            .into());
        }
    }

    let mut ctx = RunContext::new(
        &args.common,
        "qft",
        "wre.qft.v1",
        json!({
            "alpha": args.alpha,
            "betas": betas,
            "trials": args.trials,
            "log2": args.common.log2,
        }),
    )?;

    let keep: Vec<usize> = (0..args.alpha.trailing_zeros() as usize).collect();
    let targets: Vec<f64> = (0..args.trials)
        .map(|i| 0.08 + (0.92 - 0.08) * (i as f64 + 0.5) / args.trials as f64)
        .collect();

    let mut table = Table::new(&[
        "schema",
        "seed",
        "alpha",
        "beta",
        "state_id",
        "gamma",
        "lambda0_before",
        "entropy_before",
        "lambda0_after",
        "entropy_after",
    ]);
    for (b_idx, &beta) in betas.iter().enumerate() {
        let n_qubits = (args.alpha.trailing_zeros() + beta.trailing_zeros()) as usize;
        let (seed, trials, keep_ref, targets_ref) = (ctx.seed, args.trials, &keep, &targets);
        let points = indexed_map(trials, ctx.threads, |i| {
            let gamma = gamma_for_lambda0(targets_ref[i]);
            let state = random_state(
                n_qubits,
                gamma,
                seed.wrapping_add((b_idx * trials + i) as u64),
            )?;
            let before = reduced_spectrum(&state, keep_ref)?;
            let after = reduced_spectrum(&qft(&state)?, keep_ref)?;
            Ok(Point {
                gamma,
                lambda0_before: before.lambda0(),
                entropy_before: von_neumann(&before)?,
                lambda0_after: after.lambda0(),
                entropy_after: von_neumann(&after)?,
            })
        })?;
        for (i, p) in points.iter().enumerate() {
            table.push(vec![
                ctx.schema().to_string(),
                ctx.seed.to_string(),
                args.alpha.to_string(),
                beta.to_string(),
                i.to_string(),
                fmt_f(p.gamma),
                fmt_f(p.lambda0_before),
                fmt_f(p.entropy_before),
                fmt_f(p.lambda0_after),
                fmt_f(p.entropy_after),
            ]);
        }
    }
    if ctx.log2 {
        with_bits(&mut table, &["entropy_before", "entropy_after"]);
    }

    let csv_path = ctx.write_table("qft.csv", &table)?;
    let svg = render_from_csv(&csv_path, args.alpha)?;
    ctx.write_svg("qft.svg", &svg)?;
    ctx.finish()
}

fn render_from_csv(path: &std::path::Path, alpha: usize) -> CliResult<String> {
    let (header, rows) = read_csv(path)?;
    let lambda0_before = fcol(&header, &rows, "lambda0_before")?;
    let entropy_before = fcol(&header, &rows, "entropy_before")?;
    let lambda0_after = fcol(&header, &rows, "lambda0_after")?;
    let entropy_after = fcol(&header, &rows, "entropy_after")?;
    Ok(plot::render(
        &format!("Reduced spectra across the QFT, alpha {alpha}"),
        "lambda0",
        "entropy (nats)",
        &[
            Series::new("before", Mark::Points, lambda0_before, entropy_before),
            Series::new("after", Mark::Points, lambda0_after, entropy_after),
        ],
    ))
}
