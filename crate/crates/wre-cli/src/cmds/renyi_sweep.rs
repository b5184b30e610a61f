//! Renyi entropies of one shared matrix set across a degree list,
//! against the closed forms keyed to the dominant eigenvalue.

use serde_json::json;
use wre::entropy::{renyi, renyi1_analytic, renyi_d_analytic};
use wre::randmat::random_reduced_density;
use wre::spectral::{hermitian_eigenvalues, Spectrum};
use wre::EnsembleSpec;

use crate::opts::{gamma_for_lambda0, parse_grid, CommonOpts, Grid};
use crate::out::{fcol, fmt_f, read_csv, with_bits, RunContext, Table};
use crate::plot::{Mark, Series};
use crate::pool::indexed_map;
use crate::{plot, CliResult};

// Degrees at or above this report the minimal entropy -ln(lambda0).
const MIN_ENTROPY_DEGREE: f64 = 50.0;

#[derive(clap::Args)]
pub struct Args {
    /// System dimension; the environment matches it (beta = alpha)
    #[arg(long, default_value_t = 128)]
    pub alpha: usize,
    /// Shared matrices evaluated at every degree
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Renyi degrees, comma separated
    #[arg(long, value_delimiter = ',', default_values_t = [1.001, 2.0, 100.0])]
    pub degrees: Vec<f64>,
    /// Entry-mean grid lo:hi:count; default spans lambda0 0.1..0.9
    #[arg(long = "gamma-grid", value_parser = parse_grid)]
    pub gamma_grid: Option<Grid>,
    #[command(flatten)]
    pub common: CommonOpts,
}

fn degree_analytic(alpha: usize, lambda0: f64, d: f64) -> Option<f64> {
    if d <= 1.01 {
        return renyi1_analytic(alpha, lambda0).ok();
    }
    if d >= MIN_ENTROPY_DEGREE {
        return Some(-lambda0.ln());
    }
    if d.fract() == 0.0 {
        return renyi_d_analytic(alpha, lambda0, d as usize).ok();
    }
    None
}

pub fn run(args: &Args) -> CliResult<()> {
    if args.trials == 0 {
        return Err(wre::Error::Parameter("trials must be at least 1".into()).into());
    }
    for &d in &args.degrees {
        if !(d > 0.0) || d == 1.0 {
            return Err(wre::Error::Parameter(format!(
                "degrees must be positive and distinct from 1, got {d}"
            ))
            .into());
        }
    }
    let grid = args.gamma_grid.clone().unwrap_or_else(|| {
        Grid::new(gamma_for_lambda0(0.1), gamma_for_lambda0(0.9), args.trials)
    });

    let mut ctx = RunContext::new(
        &args.common,
        "renyi-sweep",
        "wre.renyi-sweep.v1",
        json!({
            "alpha": args.alpha,
            "beta": args.alpha,
            "trials": args.trials,
            "degrees": args.degrees,
            "gamma_grid": grid.spec(),
            "sigma": 1.0,
            "log2": args.common.log2,
        }),
    )?;
    ctx.deviation(
        "point spread: uniform gamma grid, dominant eigenvalue target lambda0 = gamma^2 / (1 + gamma^2)",
    );

    let gammas = grid.points();
    let (alpha, seed) = (args.alpha, ctx.seed);
    let spectra: Vec<(f64, Spectrum)> = indexed_map(gammas.len(), ctx.threads, |i| {
        let spec = EnsembleSpec {
            alpha,
            beta: alpha,
            gamma: gammas[i],
            sigma: 1.0,
            seed,
            trials: 1,
        };
        let rho = random_reduced_density(&spec, i as u64)?;
        Ok((gammas[i], hermitian_eigenvalues(rho.matrix())?))
    })?;

    let degree_names: Vec<String> = args.degrees.iter().map(|&d| fmt_f(d)).collect();
    let mut columns = vec![
        "schema".to_string(),
        "seed".to_string(),
        "alpha".to_string(),
        "matrix_id".to_string(),
        "gamma".to_string(),
        "lambda0".to_string(),
    ];
    for name in &degree_names {
        columns.push(format!("renyi_{name}"));
        columns.push(format!("renyi_{name}_analytic"));
    }
    let column_refs: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut table = Table::new(&column_refs);

    for (id, (gamma, spectrum)) in spectra.iter().enumerate() {
        let lambda0 = spectrum.lambda0();
        let mut row = vec![
            ctx.schema().to_string(),
            ctx.seed.to_string(),
            args.alpha.to_string(),
            id.to_string(),
            fmt_f(*gamma),
            fmt_f(lambda0),
        ];
        for &d in &args.degrees {
            row.push(fmt_f(renyi(spectrum, d)?));
            row.push(
                degree_analytic(args.alpha, lambda0, d)
                    .map(fmt_f)
                    .unwrap_or_default(),
            );
        }
        table.push(row);
    }
    if ctx.log2 {
        let bit_sources: Vec<String> = degree_names
            .iter()
            .flat_map(|n| [format!("renyi_{n}"), format!("renyi_{n}_analytic")])
            .collect();
        let refs: Vec<&str> = bit_sources.iter().map(String::as_str).collect();
        with_bits(&mut table, &refs);
    }

    let csv_path = ctx.write_table("renyi-sweep.csv", &table)?;
    let svg = render_from_csv(&csv_path, args.alpha, &degree_names)?;
    ctx.write_svg("renyi-sweep.svg", &svg)?;
    ctx.finish()
}

fn render_from_csv(path: &std::path::Path, alpha: usize, degrees: &[String]) -> CliResult<String> {
    let (header, rows) = read_csv(path)?;
    let lambda0 = fcol(&header, &rows, "lambda0")?;
    let mut series = Vec::new();
    for name in degrees {
        let empirical = fcol(&header, &rows, &format!("renyi_{name}"))?;
        series.push(Series::new(
            &format!("d {name}"),
            Mark::Points,
            lambda0.clone(),
            empirical,
        ));
        let analytic = fcol(&header, &rows, &format!("renyi_{name}_analytic"))?;
        if analytic.iter().any(|v| v.is_finite()) {
            series.push(Series::sorted_line(
                &format!("closed {name}"),
                &lambda0,
                &analytic,
            ));
        }
    }
    Ok(plot::render(
        &format!("Renyi entropies, alpha = beta = {alpha}"),
        "lambda0",
        "entropy (nats)",
        &series,
    ))
}
