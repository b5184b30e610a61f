//! Entanglement checkpoints of the toy-hash search circuit, with the
//! tracked success probability and its rotation-angle prediction.

use serde_json::json;
use wre::entropy::{entropy_given_lambda0, Beta, ClosedFormInput};
use wre::quantum::grover::{grover_experiment, preimages, GroverCheckpoint, GroverConfig};

use crate::opts::{parse_byte, CommonOpts};
use crate::out::{fcol, fmt_f, read_csv, with_bits, RunContext, Table};
use crate::plot::{Mark, Series};
use crate::{plot, CliResult};

#[derive(clap::Args)]
pub struct Args {
    /// Digest whose preimages the oracle marks (decimal or 0xNN)
    #[arg(long, value_parser = parse_byte, default_value = "0xa3")]
    pub ciphertext: u8,
    /// Search iterations; default is the rotation-angle optimum
    #[arg(long)]
    pub iterations: Option<usize>,
    #[command(flatten)]
    pub common: CommonOpts,
}

pub fn run(args: &Args) -> CliResult<()> {
    let marked = preimages(args.ciphertext);
    let iterations = match args.iterations {
        Some(r) => r,
        None => GroverConfig::optimal_iterations(marked.len().max(1)),
    };
    let config = GroverConfig::new(args.ciphertext, iterations)?;

    let mut ctx = RunContext::new(
        &args.common,
        "grover",
        "wre.grover.v1",
        json!({
            "ciphertext": args.ciphertext,
            "iterations": iterations,
            "log2": args.common.log2,
        }),
    )?;

    let run = grover_experiment(&config)?;
    let search_dim = 1usize << GroverConfig::SEARCH_QUBITS;
    let rest_dim = 1usize << (GroverConfig::TOTAL_QUBITS - GroverConfig::SEARCH_QUBITS);
    let theta = ((run.preimages.len() as f64 / search_dim as f64).sqrt()).asin();

    let mut table = Table::new(&[
        "schema",
        "ciphertext",
        "record",
        "iteration",
        "checkpoint",
        "lambda0",
        "entropy",
        "entropy_curve",
        "success",
        "success_analytic",
    ]);
    for (idx, rec) in run.records.iter().enumerate() {
        let curve = ClosedFormInput::new(
            search_dim,
            Beta::Finite(rest_dim),
            rec.lambda0.clamp(1e-12, 1.0 - 1e-12),
        )
        .and_then(|input| entropy_given_lambda0(&input))
        .map(fmt_f)
        .unwrap_or_default();
        let (success, success_analytic) = if rec.checkpoint == GroverCheckpoint::Diffusion {
            let k = rec.iteration as f64;
            (
                fmt_f(run.success_by_iteration[rec.iteration - 1]),
                fmt_f(((2.0 * k + 1.0) * theta).sin().powi(2)),
            )
        } else {
            (String::new(), String::new())
        };
        table.push(vec![
            ctx.schema().to_string(),
            args.ciphertext.to_string(),
            (idx + 1).to_string(),
            rec.iteration.to_string(),
            rec.checkpoint.label().to_string(),
            fmt_f(rec.lambda0),
            fmt_f(rec.entropy),
            curve,
            success,
            success_analytic,
        ]);
    }
    if ctx.log2 {
        with_bits(&mut table, &["entropy", "entropy_curve"]);
    }

    ctx.metric("preimages", json!(run.preimages));
    ctx.metric(
        "optimal_iterations",
        json!(GroverConfig::optimal_iterations(run.preimages.len())),
    );
    ctx.metric("theta", json!(theta));
    ctx.metric(
        "final_success",
        json!(run.success_by_iteration.last().copied().unwrap_or(0.0)),
    );

    let csv_path = ctx.write_table("grover.csv", &table)?;
    let svg = render_from_csv(&csv_path)?;
    ctx.write_svg("grover.svg", &svg)?;
    ctx.finish()
}

fn render_from_csv(path: &std::path::Path) -> CliResult<String> {
    let (header, rows) = read_csv(path)?;
    let record = fcol(&header, &rows, "record")?;
    let entropy = fcol(&header, &rows, "entropy")?;
    let curve = fcol(&header, &rows, "entropy_curve")?;
    let success = fcol(&header, &rows, "success")?;
    Ok(plot::render(
        "Search-circuit entanglement checkpoints",
        "checkpoint record",
        "entropy (nats) / success",
        &[
            Series::new("entropy", Mark::Line, record.clone(), entropy),
            Series::sorted_line("closed form at lambda0", &record, &curve),
            Series::new("success", Mark::Points, record, success),
        ],
    ))
}
