//! `wre` command line: each subcommand writes its data as CSV rows,
//! JSON run metadata, and minimal SVG overlays rendered from the CSV.

mod cmds;
mod opts;
mod out;
mod plot;
mod pool;

use clap::Parser;

/// CLI-level error: library errors keep their exit-code class, IO
/// failures map to the generic code.
#[derive(Debug)]
pub enum CliError {
    Lib(wre::Error),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl From<wre::Error> for CliError {
    fn from(e: wre::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Lib(wre::Error::Parameter(_)) => 2,
        CliError::Lib(wre::Error::Domain(_)) => 3,
        _ => 1,
    }
}

#[derive(Parser)]
#[command(
    name = "wre",
    version,
    about = "Dominant-eigenvalue entropy relations: experiment runner",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Subcommand)]
enum Cmd {
    /// Empirical spectral density of a Wishart draw vs the analytic law
    Mpd(cmds::mpd::Args),
    /// Mean dominant Wishart eigenvalue across a gamma grid
    Dominant(cmds::dominant::Args),
    /// Sampled (lambda0, entropy) pairs against the closed form
    #[command(name = "lambda0-sweep")]
    Lambda0Sweep(cmds::lambda0_sweep::Args),
    /// Sampled entanglement gaps against the closed form
    GapSweep(cmds::gap_sweep::Args),
    /// Renyi entropies of shared matrices across a degree list
    RenyiSweep(cmds::renyi_sweep::Args),
    /// Reduced spectra before and after the quantum Fourier transform
    Qft(cmds::qft::Args),
    /// Entanglement checkpoints of the toy-hash search circuit
    Grover(cmds::grover::Args),
    /// Ground-state entanglement along the annealing schedule
    Adiabatic(cmds::adiabatic::Args),
    /// Entanglement of every half-half bipartition of the Prime state
    Prime(cmds::prime::Args),
}

fn dispatch(cli: Cli) -> CliResult<()> {
    match cli.cmd {
        Cmd::Mpd(a) => cmds::mpd::run(&a),
        Cmd::Dominant(a) => cmds::dominant::run(&a),
        Cmd::Lambda0Sweep(a) => cmds::lambda0_sweep::run(&a),
        Cmd::GapSweep(a) => cmds::gap_sweep::run(&a),
        Cmd::RenyiSweep(a) => cmds::renyi_sweep::run(&a),
        Cmd::Qft(a) => cmds::qft::run(&a),
        Cmd::Grover(a) => cmds::grover::run(&a),
        Cmd::Adiabatic(a) => cmds::adiabatic::run(&a),
        Cmd::Prime(a) => cmds::prime::run(&a),
    }
}

fn main() {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}
