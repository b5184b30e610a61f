//! Entanglement of every half-half bipartition of the Prime state.

use serde_json::json;
use wre::entropy::renyi1_analytic;
use wre::quantum::prime::{prime_state, primes_below};
use wre::quantum::bipartition_sweep;

use crate::opts::CommonOpts;
use crate::out::{fcol, fmt_f, read_csv, with_bits, RunContext, Table};
use crate::plot::{Mark, Series};
use crate::{plot, CliResult};

const DESK_QUBIT_BOUND: usize = 14;
const REFERENCE_QUBITS: usize = 14;

#[derive(clap::Args)]
pub struct Args {
    /// Register size; even, at most 14
    #[arg(long, default_value_t = 12)]
    pub n: usize,
    #[command(flatten)]
    pub common: CommonOpts,
}

pub fn run(args: &Args) -> CliResult<()> {
    if args.n > DESK_QUBIT_BOUND {
        return Err(wre::Error::Parameter(format!(
            "n must stay within the desk bound {DESK_QUBIT_BOUND}, got {}",
            args.n
        ))
        .into());
    }
    if args.n % 2 != 0 || args.n < 4 {
        return Err(wre::Error::Parameter(format!(
            "n must be even and at least 4, got {}",
            args.n
        ))
        .into());
    }

    let mut ctx = RunContext::new(
        &args.common,
        "prime",
        "wre.prime.v1",
        json!({
            "n": args.n,
            "log2": args.common.log2,
        }),
    )?;
    if args.n != REFERENCE_QUBITS {
        ctx.deviation(&format!(
            "n {} desk-scale stand-in for the reference register {}",
            args.n, REFERENCE_QUBITS
        ));
    }

    let state = prime_state(args.n)?;
    let reports = bipartition_sweep(&state, args.n / 2)?;
    let expected_rank = (1usize << (args.n / 2 - 1)) + 1;
    ctx.metric("primes_superposed", json!(primes_below(1usize << args.n).len()));
    ctx.metric("expected_rank", json!(expected_rank));
    ctx.metric("partitions", json!(reports.len()));

    let mut table = Table::new(&[
        "schema",
        "n",
        "partition",
        "kept_qubits",
        "lambda0",
        "entropy",
        "entropy_analytic",
        "schmidt_rank",
    ]);
    for (idx, rep) in reports.iter().enumerate() {
        let kept = rep
            .partition_id
            .iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join("-");
        let analytic = renyi1_analytic(rep.schmidt_rank, rep.lambda0.clamp(0.0, 1.0))
            .map(fmt_f)
            .unwrap_or_default();
        table.push(vec![
            ctx.schema().to_string(),
            args.n.to_string(),
            idx.to_string(),
            kept,
            fmt_f(rep.lambda0),
            fmt_f(rep.entropy),
            analytic,
            rep.schmidt_rank.to_string(),
        ]);
    }
    if ctx.log2 {
        with_bits(&mut table, &["entropy", "entropy_analytic"]);
    }

    let csv_path = ctx.write_table("prime.csv", &table)?;
    let svg = render_from_csv(&csv_path, args.n)?;
    ctx.write_svg("prime.svg", &svg)?;
    ctx.finish()
}

fn render_from_csv(path: &std::path::Path, n: usize) -> CliResult<String> {
    let (header, rows) = read_csv(path)?;
    let partition = fcol(&header, &rows, "partition")?;
    let entropy = fcol(&header, &rows, "entropy")?;
    let analytic = fcol(&header, &rows, "entropy_analytic")?;
    Ok(plot::render(
        &format!("Prime-state bipartition entropies, n = {n}"),
        "bipartition",
        "entropy (nats)",
        &[
            Series::new("measured", Mark::Points, partition.clone(), entropy),
            Series::new("closed form at lambda0", Mark::Points, partition, analytic),
        ],
    ))
}
