//! Empirical spectral density of one Wishart draw per environment
//! width, overlaid with the analytic law.

use serde_json::json;
use wre::randmat::{sample_gaussian_with_rng, stream_rng, wishart};
use wre::spectral::{default_bins, esd, hermitian_eigenvalues, ks_distance, mpd_pdf, MpdParams};

use crate::opts::CommonOpts;
use crate::out::{fcol, fmt_f, read_csv, RunContext, Table};
use crate::plot::{render, Mark, Series};
use crate::{CliResult, plot};

const DESK_ALPHA_BOUND: usize = 10_000;
const REFERENCE_ALPHA: usize = 10_000;

#[derive(clap::Args)]
pub struct Args {
    /// Matrix rows (system dimension)
    #[arg(long, default_value_t = 2000)]
    pub alpha: usize,
    /// Matrix columns; repeatable. Default: alpha/lambda for lambda in {1/4, 1/2, 1}
    #[arg(long = "beta")]
    pub betas: Vec<usize>,
    /// Histogram bins; default ceil(sqrt(alpha))
    #[arg(long)]
    pub bins: Option<usize>,
    #[command(flatten)]
    pub common: CommonOpts,
}

pub fn run(args: &Args) -> CliResult<()> {
    if args.alpha == 0 || args.alpha > DESK_ALPHA_BOUND {
        return Err(wre::Error::Parameter(format!(
            "alpha must lie in 1..={DESK_ALPHA_BOUND}, got {}",
            args.alpha
        ))
        .into());
    }
    let betas = if args.betas.is_empty() {
        vec![args.alpha * 4, args.alpha * 2, args.alpha]
    } else {
        args.betas.clone()
    };
    let bins = args.bins.unwrap_or_else(|| default_bins(args.alpha));

    let mut ctx = RunContext::new(
        &args.common,
        "mpd",
        "wre.mpd.v1",
        json!({
            "alpha": args.alpha,
            "betas": betas,
            "bins": bins,
            "sigma": 1.0,
            "log2": args.common.log2,
        }),
    )?;
    if args.alpha != REFERENCE_ALPHA {
        ctx.deviation(&format!(
            "alpha {} desk-scale stand-in for the reference dimension {}",
            args.alpha, REFERENCE_ALPHA
        ));
    }

    for (idx, &beta) in betas.iter().enumerate() {
        let mut rng = stream_rng(ctx.seed, idx as u64);
        let x = sample_gaussian_with_rng::<f64>(args.alpha, beta, 0.0, 1.0, &mut rng)?;
        let y = wishart(&x, beta)?;
        let spectrum = hermitian_eigenvalues(&y)?;
        let hist = esd(&spectrum, bins)?;
        let params = MpdParams::from_ensemble(args.alpha, beta, 1.0)?;
        let ks = ks_distance(&spectrum, &params)?;
        ctx.metric(&format!("ks_beta{beta}"), json!(ks));

        let mut table = Table::new(&[
            "schema",
            "seed",
            "alpha",
            "beta",
            "bin_lo",
            "bin_hi",
            "density",
            "mpd_density",
        ]);
        for (i, &d) in hist.densities.iter().enumerate() {
            let lo = hist.bin_edges[i];
            let hi = hist.bin_edges[i + 1];
            table.push(vec![
                ctx.schema().to_string(),
                ctx.seed.to_string(),
                args.alpha.to_string(),
                beta.to_string(),
                fmt_f(lo),
                fmt_f(hi),
                fmt_f(d),
                fmt_f(mpd_pdf(0.5 * (lo + hi), &params)),
            ]);
        }
        let csv_name = format!("mpd-beta{beta}.csv");
        let csv_path = ctx.write_table(&csv_name, &table)?;
        let svg = render_from_csv(&csv_path, args.alpha, beta)?;
        ctx.write_svg(&format!("mpd-beta{beta}.svg"), &svg)?;
    }
    ctx.finish()
}

fn render_from_csv(path: &std::path::Path, alpha: usize, beta: usize) -> CliResult<String> {
    let (header, rows) = read_csv(path)?;
    let lo = fcol(&header, &rows, "bin_lo")?;
    let hi = fcol(&header, &rows, "bin_hi")?;
    let density = fcol(&header, &rows, "density")?;
    let analytic = fcol(&header, &rows, "mpd_density")?;

    let mut step_x = Vec::with_capacity(2 * lo.len());
    let mut step_y = Vec::with_capacity(2 * lo.len());
    for i in 0..lo.len() {
        step_x.push(lo[i]);
        step_y.push(density[i]);
        step_x.push(hi[i]);
        step_y.push(density[i]);
    }
    let mids: Vec<f64> = lo.iter().zip(&hi).map(|(&a, &b)| 0.5 * (a + b)).collect();

    Ok(render(
        &format!("Wishart spectral density, alpha {alpha}, beta {beta}"),
        "eigenvalue",
        "density",
        &[
            Series::new("empirical", Mark::Line, step_x, step_y),
            plot::Series::sorted_line("analytic", &mids, &analytic),
        ],
    ))
}
