//! Trial-mean dominant Wishart eigenvalue across an entry-mean grid,
//! against the rank-one prediction.

use serde_json::json;
use wre::randmat::{sample_gaussian_with_rng, stream_rng, wishart};
use wre::spectral::{dominant_eigenvalue_prediction, hermitian_eigenvalues};

use crate::opts::{parse_grid, CommonOpts, Grid};
use crate::out::{fcol, fmt_f, read_csv, RunContext, Table};
use crate::plot::{render, Mark, Series};
use crate::pool::indexed_map;
use crate::CliResult;

#[derive(clap::Args)]
pub struct Args {
    /// Matrix rows (system dimension)
    #[arg(long, default_value_t = 100)]
    pub alpha: usize,
    /// Matrix columns (environment dimension)
    #[arg(long, default_value_t = 200)]
    pub beta: usize,
    /// Entry-mean grid lo:hi:count
    #[arg(long = "gamma-grid", value_parser = parse_grid, default_value = "0:2:21")]
    pub gamma_grid: Grid,
    /// Matrices per grid point
    #[arg(long, default_value_t = 500)]
    pub trials: usize,
    #[command(flatten)]
    pub common: CommonOpts,
}

pub fn run(args: &Args) -> CliResult<()> {
    if args.trials == 0 {
        return Err(wre::Error::Parameter("trials must be at least 1".into()).into());
    }
    let gammas = args.gamma_grid.points();
    let mut ctx = RunContext::new(
        &args.common,
        "dominant",
        "wre.dominant.v1",
        json!({
            "alpha": args.alpha,
            "beta": args.beta,
            "gamma_grid": args.gamma_grid.spec(),
            "trials": args.trials,
            "sigma": 1.0,
            "log2": args.common.log2,
        }),
    )?;

    let lambda_plus = {
        let ratio = args.alpha as f64 / args.beta as f64;
        (1.0 + ratio.sqrt()).powi(2)
    };

    let mut table = Table::new(&[
        "schema",
        "seed",
        "alpha",
        "beta",
        "trials",
        "gamma",
        "mean_lambda_max",
        "prediction",
        "lambda_plus",
        "gated",
    ]);
    for (g_idx, &gamma) in gammas.iter().enumerate() {
        let seed = ctx.seed;
        let (alpha, beta, trials) = (args.alpha, args.beta, args.trials);
        let maxima = indexed_map(trials, ctx.threads, move |t| {
            let mut rng = stream_rng(seed, (g_idx * trials + t) as u64);
            let x = sample_gaussian_with_rng::<f64>(alpha, beta, gamma, 1.0, &mut rng)?;
            let y = wishart(&x, beta)?;
            Ok(hermitian_eigenvalues(&y)?.lambda0())
        })?;
        let mean = maxima.iter().sum::<f64>() / trials as f64;
        let prediction = dominant_eigenvalue_prediction(args.alpha, gamma, None);
        let gated = prediction > 2.0 * lambda_plus;
        table.push(vec![
            ctx.schema().to_string(),
            ctx.seed.to_string(),
            args.alpha.to_string(),
            args.beta.to_string(),
            args.trials.to_string(),
            fmt_f(gamma),
            fmt_f(mean),
            fmt_f(prediction),
            fmt_f(lambda_plus),
            gated.to_string(),
        ]);
    }

    let csv_path = ctx.write_table("dominant.csv", &table)?;
    let svg = render_from_csv(&csv_path, args.alpha, args.beta)?;
    ctx.write_svg("dominant.svg", &svg)?;
    ctx.finish()
}

fn render_from_csv(path: &std::path::Path, alpha: usize, beta: usize) -> CliResult<String> {
    let (header, rows) = read_csv(path)?;
    let gamma = fcol(&header, &rows, "gamma")?;
    let mean = fcol(&header, &rows, "mean_lambda_max")?;
    let prediction = fcol(&header, &rows, "prediction")?;
    let lambda_plus = fcol(&header, &rows, "lambda_plus")?;
    Ok(render(
        &format!("Dominant eigenvalue, alpha {alpha}, beta {beta}"),
        "gamma",
        "lambda_max",
        &[
            Series::new("trial mean", Mark::Points, gamma.clone(), mean),
            Series::sorted_line("alpha gamma^2", &gamma, &prediction),
            Series::sorted_line("bulk edge", &gamma, &lambda_plus),
        ],
    ))
}
