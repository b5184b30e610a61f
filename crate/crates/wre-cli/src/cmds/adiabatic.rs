//! Ground-state entanglement of the annealing Hamiltonian along its
//! schedule, for the shipped or a generated Exact Cover instance.

use serde_json::json;
use wre::entropy::renyi1_analytic;
use wre::quantum::exact_cover::{adiabatic_experiment, default_s_grid, ExactCoverInstance};

use crate::opts::{parse_grid, CommonOpts, Grid};
use crate::out::{fcol, fmt_f, read_csv, with_bits, RunContext, Table};
use crate::plot::{Mark, Series};
use crate::{plot, CliResult};

const DESK_QUBIT_BOUND: usize = 12;
const GENERATE_ATTEMPTS: usize = 200_000;

#[derive(clap::Args)]
pub struct Args {
    /// Problem qubits; 12 selects the shipped instance, smaller even
    /// sizes generate a unique-solution instance from the seed
    #[arg(long, default_value_t = 12)]
    pub n: usize,
    /// Schedule grid lo:hi:count inside [0, 1]; default 0:1:51
    #[arg(long = "s-grid", value_parser = parse_grid)]
    pub s_grid: Option<Grid>,
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
    let grid = args.s_grid.clone();
    let s_points = grid.as_ref().map_or_else(default_s_grid, Grid::points);

    let mut ctx = RunContext::new(
        &args.common,
        "adiabatic",
        "wre.adiabatic.v1",
        json!({
            "n": args.n,
            "s_grid": grid.as_ref().map_or_else(|| "0:1:51".to_string(), Grid::spec),
            "log2": args.common.log2,
        }),
    )?;

    let instance = if args.n == 12 {
        ExactCoverInstance::shipped()
    } else {
        let (instance, attempts) = ExactCoverInstance::generate(args.n, ctx.seed, GENERATE_ATTEMPTS)?;
        ctx.deviation(&format!(
            "generated {}-qubit unique-solution instance (seed {}, {attempts} attempts) instead of the shipped 12-qubit one",
            args.n, ctx.seed
        ));
        instance
    };
    ctx.metric("clauses", json!(instance.clauses().len()));
    ctx.metric("solutions", json!(instance.solutions()));

    let records = adiabatic_experiment(&instance, &s_points)?;
    let rank_bound = 1usize << (args.n / 2);

    let mut table = Table::new(&[
        "schema",
        "seed",
        "n",
        "s",
        "lambda0",
        "entropy",
        "entropy_ceiling",
        "degenerate",
    ]);
    for rec in &records {
        let ceiling = renyi1_analytic(rank_bound, rec.lambda0.clamp(0.0, 1.0))
            .map(fmt_f)
            .unwrap_or_default();
        table.push(vec![
            ctx.schema().to_string(),
            ctx.seed.to_string(),
            args.n.to_string(),
            fmt_f(rec.s),
            fmt_f(rec.lambda0),
            fmt_f(rec.entropy),
            ceiling,
            rec.degenerate.to_string(),
        ]);
    }
    if ctx.log2 {
        with_bits(&mut table, &["entropy", "entropy_ceiling"]);
    }

    let csv_path = ctx.write_table("adiabatic.csv", &table)?;
    let svg = render_from_csv(&csv_path, args.n)?;
    ctx.write_svg("adiabatic.svg", &svg)?;
    ctx.finish()
}

fn render_from_csv(path: &std::path::Path, n: usize) -> CliResult<String> {
    let (header, rows) = read_csv(path)?;
    let s = fcol(&header, &rows, "s")?;
    let entropy = fcol(&header, &rows, "entropy")?;
    let ceiling = fcol(&header, &rows, "entropy_ceiling")?;
    Ok(plot::render(
        &format!("Annealing ground-state entanglement, n = {n}"),
        "schedule s",
        "entropy (nats)",
        &[
            Series::sorted_line("ground state", &s, &entropy),
            Series::new("closed form at lambda0", Mark::Points, s, ceiling),
        ],
    ))
}
