//! Sampled entanglement gaps for several environment widths, against
//! the closed form.

use serde_json::json;
use wre::entropy::{crossover_flag, gap_empirical, gap_given_lambda0, Beta, ClosedFormInput};
use wre::randmat::random_reduced_density;
use wre::spectral::hermitian_eigenvalues;
use wre::EnsembleSpec;

use crate::opts::{gamma_for_lambda0, parse_grid, CommonOpts, Grid};
use crate::out::{fcol, fmt_f, read_csv, RunContext, Table};
use crate::plot::{Mark, Series};
use crate::pool::indexed_map;
use crate::{plot, CliResult};

#[derive(clap::Args)]
pub struct Args {
    /// System dimension
    #[arg(long, default_value_t = 128)]
    pub alpha: usize,
    /// Environment dimension; repeatable. Default {192, 256, 512, 65536}
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
    gap: f64,
}

pub fn run(args: &Args) -> CliResult<()> {
    if args.trials == 0 {
        return Err(wre::Error::Parameter("trials must be at least 1".into()).into());
    }
    let betas = if args.betas.is_empty() {
        vec![192, 256, 512, 65536]
    } else {
        args.betas.clone()
    };
    let grid = args.gamma_grid.clone().unwrap_or_else(|| {
        Grid::new(gamma_for_lambda0(0.05), gamma_for_lambda0(0.95), args.trials)
    });

    let mut ctx = RunContext::new(
        &args.common,
        "gap-sweep",
        "wre.gap-sweep.v1",
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
    let mut table = Table::new(&[
        "schema",
        "seed",
        "alpha",
        "beta",
        "gamma",
        "lambda0",
        "gap",
        "gap_analytic",
        "crossover",
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
                gap: gap_empirical(&spectrum)?,
            })
        })?;
        for p in points {
            let analytic = ClosedFormInput::new(args.alpha, Beta::Finite(beta), p.lambda0)
                .map(|input| fmt_f(gap_given_lambda0(&input)))
                .unwrap_or_default();
            table.push(vec![
                ctx.schema().to_string(),
                ctx.seed.to_string(),
                args.alpha.to_string(),
                beta.to_string(),
                fmt_f(p.gamma),
                fmt_f(p.lambda0),
                fmt_f(p.gap),
                analytic,
                crossover_flag(args.alpha, Beta::Finite(beta), p.lambda0).to_string(),
            ]);
        }
    }

    let csv_path = ctx.write_table("gap-sweep.csv", &table)?;
    let svg = render_from_csv(&csv_path, args.alpha, &betas)?;
    ctx.write_svg("gap-sweep.svg", &svg)?;
    ctx.finish()
}

fn render_from_csv(path: &std::path::Path, alpha: usize, betas: &[usize]) -> CliResult<String> {
    let (header, rows) = read_csv(path)?;
    let beta_col = fcol(&header, &rows, "beta")?;
    let lambda0 = fcol(&header, &rows, "lambda0")?;
    let gap = fcol(&header, &rows, "gap")?;
    let analytic = fcol(&header, &rows, "gap_analytic")?;

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
            select(&gap),
        ));
        series.push(Series::sorted_line(
            &format!("closed {beta}"),
            &xs,
            &select(&analytic),
        ));
    }
    Ok(plot::render(
        &format!("Entanglement gap against dominant eigenvalue, alpha {alpha}"),
        "lambda0",
        "gap (nats)",
        &series,
    ))
}
