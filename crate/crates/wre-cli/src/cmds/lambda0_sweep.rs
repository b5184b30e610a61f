//! Sampled (dominant eigenvalue, entropy) pairs for several
//! environment widths, against the closed form.

use serde_json::json;
use wre::entropy::{entropy_given_lambda0, crossover_flag, von_neumann, Beta, ClosedFormInput};
use wre::randmat::random_reduced_density;
use wre::spectral::hermitian_eigenvalues;
use wre::EnsembleSpec;

use crate::opts::{gamma_for_lambda0, lambda0_for_gamma, parse_grid, CommonOpts, Grid};
use crate::out::{fcol, fmt_f, read_csv, with_bits, RunContext, Table};
use crate::plot::{Mark, Series};
use crate::pool::indexed_map;
use crate::{plot, CliResult};

#[derive(clap::Args)]
pub struct Args {
    /// System dimension
    #[arg(long, default_value_t = 128)]
    pub alpha: usize,
    /// Environment dimension; repeatable. Default {192, 256, 512, 8192}
    #[arg(long = "beta")]
    pub betas: Vec<usize>,
    /// Sampled points per environment width
    #[arg(long, default_value_t = 300)]
    pub trials: usize,
    /// Entry-mean grid lo:hi:count; default spans lambda0 0.05..0.95
    #[arg(long = "gamma-grid", value_parser = parse_grid)]
    pub gamma_grid: Option<Grid>,
    #[command(flatten)]
    pub common: CommonOpts,
}

struct Point {
    gamma: f64,
    lambda0: f64,
    entropy: f64,
}

pub fn run(args: &Args) -> CliResult<()> {
    if args.trials == 0 {
        return Err(wre::Error::Parameter("trials must be at least 1".into()).into());
    }
    let betas = if args.betas.is_empty() {
        vec![192, 256, 512, 8192]
    } else {
        args.betas.clone()
    };
    let grid = args.gamma_grid.clone().unwrap_or_else(|| {
        Grid::new(gamma_for_lambda0(0.05), gamma_for_lambda0(0.95), args.trials)
    });

    let mut ctx = RunContext::new(
        &args.common,
        "lambda0-sweep",
        "wre.lambda0-sweep.v1",
        json!({
            "alpha": args.alpha,
            "betas": betas,
            "trials": args.trials,
            "gamma_grid": grid.spec(),
            "sigma": 1.0,
            "log2": args.common.log2,
        }),
    )?;
    ctx.deviation(
        "point spread: uniform gamma grid, dominant eigenvalue target lambda0 = gamma^2 / (1 + gamma^2)",
    );

    let gammas = grid.points();
    let page_reference = (args.alpha as f64).ln() - 0.5;
    let mut table = Table::new(&[
        "schema",
        "seed",
        "alpha",
        "beta",
        "gamma",
        "lambda0",
        "entropy",
        "entropy_analytic",
        "crossover",
        "page_reference",
    ]);

    for (b_idx, &beta) in betas.iter().enumerate() {
        let (alpha, seed) = (args.alpha, ctx.seed);
        let points = indexed_map(gammas.len(), ctx.threads, |i| {
            let spec = EnsembleSpec {
                alpha,
                beta,
                gamma: gammas[i],
                sigma: 1.0,
                seed,
                trials: 1,
            };
            let rho = random_reduced_density(&spec, (b_idx * gammas.len() + i) as u64)?;
            let spectrum = hermitian_eigenvalues(rho.matrix())?;
            Ok(Point {
                gamma: gammas[i],
                lambda0: spectrum.lambda0(),
                entropy: von_neumann(&spectrum)?,
            })
        })?;
        for p in points {
            let analytic = ClosedFormInput::new(args.alpha, Beta::Finite(beta), p.lambda0)
                .and_then(|input| entropy_given_lambda0(&input))
                .map(fmt_f)
                .unwrap_or_default();
            table.push(vec![
                ctx.schema().to_string(),
                ctx.seed.to_string(),
                args.alpha.to_string(),
                beta.to_string(),
                fmt_f(p.gamma),
                fmt_f(p.lambda0),
                fmt_f(p.entropy),
                analytic,
                crossover_flag(args.alpha, Beta::Finite(beta), p.lambda0).to_string(),
                fmt_f(page_reference),
            ]);
        }
    }
    if ctx.log2 {
        with_bits(&mut table, &["entropy", "entropy_analytic", "page_reference"]);
    }

    let csv_path = ctx.write_table("lambda0-sweep.csv", &table)?;
    let svg = render_from_csv(&csv_path, args.alpha, &betas)?;
    ctx.write_svg("lambda0-sweep.svg", &svg)?;
    ctx.metric("lambda0_of_min_gamma", json!(lambda0_for_gamma(grid.lo)));
    ctx.metric("lambda0_of_max_gamma", json!(lambda0_for_gamma(grid.hi)));
    ctx.finish()
}

fn render_from_csv(path: &std::path::Path, alpha: usize, betas: &[usize]) -> CliResult<String> {
    let (header, rows) = read_csv(path)?;
    let beta_col = fcol(&header, &rows, "beta")?;
    let lambda0 = fcol(&header, &rows, "lambda0")?;
    let entropy = fcol(&header, &rows, "entropy")?;
    let analytic = fcol(&header, &rows, "entropy_analytic")?;
    let reference = fcol(&header, &rows, "page_reference")?;

    let mut series = Vec::new();
    for &beta in betas {
        let select = |col: &[f64]| -> Vec<f64> {
            col.iter()
                .zip(&beta_col)
                .filter(|(_, &b)| b == beta as f64)
                .map(|(&v, _)| v)
                .collect()
        };
        let xs = select(&lambda0);
        series.push(Series::new(
            &format!("beta {beta}"),
            Mark::Points,
            xs.clone(),
            select(&entropy),
        ));
        series.push(Series::sorted_line(
            &format!("closed {beta}"),
            &xs,
            &select(&analytic),
        ));
    }
    series.push(Series::sorted_line("ln a - 1/2", &lambda0, &reference));
    Ok(plot::render(
        &format!("Entropy against dominant eigenvalue, alpha {alpha}"),
        "lambda0",
        "entropy (nats)",
        &series,
    ))
}
