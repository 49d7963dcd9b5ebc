//! Command-line front end for the handover-rate engine.
//!
//! Exit codes: 0 success, 1 tolerance violation (`compare`), 2 usage or
//! config error. Failures print one JSON line on stderr with `kind` and
//! `message` fields. Set `HETHO_THREADS` to bound the worker pool.

use std::env;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod cmd_analytic;
mod cmd_compare;
mod cmd_figure;
mod cmd_oracle;
mod cmd_simulate;
mod cmd_sweep;
mod common;
mod error;

use error::CliError;

/// Handover rates in N-tier cellular networks, twice: analytic integrals
/// with closed-form corollaries, and an independent Monte-Carlo mobility
/// simulator to check them against.
#[derive(Debug, Parser)]
#[command(name = "hetho", version, arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analytic rate matrix: pairwise rows plus the network total.
    Analytic(cmd_analytic::AnalyticArgs),
    /// Monte-Carlo rate matrix with CIs and optional raw observations.
    Simulate(cmd_simulate::SimulateArgs),
    /// Run both engines and gate on their agreement.
    Compare(cmd_compare::CompareArgs),
    /// Rate curves over one swept parameter.
    Sweep(cmd_sweep::SweepArgs),
    /// CSV datasets behind the standard plots (ids 4 through 9).
    Figure(cmd_figure::FigureArgs),
    /// Exact cell-boundary geometry probe for one serving/target pair.
    Oracle(cmd_oracle::OracleArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = init_threads().and_then(|()| match &cli.command {
        Command::Analytic(args) => cmd_analytic::run(args),
        Command::Simulate(args) => cmd_simulate::run(args),
        Command::Compare(args) => cmd_compare::run(args),
        Command::Sweep(args) => cmd_sweep::run(args),
        Command::Figure(args) => cmd_figure::run(args),
        Command::Oracle(args) => cmd_oracle::run(args),
    });
    match run {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn init_threads() -> Result<(), CliError> {
    let Ok(raw) = env::var("HETHO_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().map_err(|_| {
        CliError::usage(format!("HETHO_THREADS must be a positive integer, got {raw:?}"))
    })?;
    if threads == 0 {
        return Err(CliError::usage("HETHO_THREADS must be a positive integer, got 0"));
    }
    // A second global-pool build is fine to ignore: only tests construct the
    // CLI entry twice in one process.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}
