use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::Args;

use crate::common::{csv_sink, dump_config, fmt_f64, load_config, run_sim, SimFlags, SimRun};
use crate::error::CliError;

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Network config, JSON.
    pub config: PathBuf,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write raw per-replication observations, one JSON object per line.
    #[arg(long)]
    pub stats: Option<PathBuf>,
    #[command(flatten)]
    pub flags: SimFlags,
    /// Print the normalized config instead of running.
    #[arg(long)]
    pub dump_config: bool,
}

/// Simulated rate matrix with confidence halfwidths. `events` are pooled raw
/// counts and `ue_seconds` the pooled exposure inside the counting region;
/// `rate_hz` rescales their quotient by the tier's UE population, so rows are
/// directly comparable with the analytic command.
pub fn run(args: &SimulateArgs) -> Result<(), CliError> {
    let loaded = load_config(&args.config)?;
    if args.dump_config {
        return dump_config(&loaded);
    }
    let sim = args.flags.to_sim_config(&loaded.network);
    let run = run_sim(&loaded, &sim)?;
    if let Some(path) = &args.stats {
        write_stats(&run, path)?;
    }
    write_csv(&run, args.out.as_deref())
}

fn write_stats(run: &SimRun, path: &Path) -> Result<(), CliError> {
    let file = fs::File::create(path)
        .map_err(|e| CliError::io(format!("cannot create {}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    for stats in &run.stats {
        serde_json::to_writer(&mut w, stats)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

fn write_csv(run: &SimRun, out: Option<&Path>) -> Result<(), CliError> {
    let tiers = run.events.len();
    let ci = run.matrix.ci_halfwidth.as_ref();
    let mut w = csv_sink(out)?;
    w.write_record(["m", "n", "rate_hz", "ci_halfwidth", "events", "ue_seconds"])?;
    for m in 0..tiers {
        for n in 0..tiers {
            let half = ci.map_or(f64::NAN, |c| c[m][n]);
            w.write_record([
                (m + 1).to_string(),
                (n + 1).to_string(),
                fmt_f64(run.matrix.get(m, n)),
                fmt_f64(half),
                run.events[m][n].to_string(),
                fmt_f64(run.ue_seconds),
            ])?;
        }
    }
    let all_events: u64 = run.events.iter().flatten().sum();
    w.write_record([
        "total".to_string(),
        String::new(),
        fmt_f64(run.matrix.total),
        fmt_f64(run.total_summary.ci_halfwidth),
        all_events.to_string(),
        fmt_f64(run.ue_seconds),
    ])?;
    w.flush()?;
    Ok(())
}
