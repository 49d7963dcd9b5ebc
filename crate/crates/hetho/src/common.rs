use std::fs;
use std::io::{self, Write};
use std::path::Path;

use clap::{Args, ValueEnum};
use hetho_analytic::RateMatrix;
use hetho_core::{ConfigFile, NetworkConfig, SpeedModel, UserDensityModel};
use hetho_sim::{
    estimate_rate_matrix, replication_totals, run_replications, summarize, HandoverStats,
    SampleSummary, SimConfig, WalkingModel,
};

use crate::error::CliError;

/// Parsed and validated run inputs. The raw file form is kept alongside the
/// SI-unit network because sweeps edit file-unit fields and rebuild.
pub struct LoadedConfig {
    pub file: ConfigFile,
    pub network: NetworkConfig,
    pub speed: SpeedModel,
    pub users: UserDensityModel,
}

impl LoadedConfig {
    pub fn from_file(file: ConfigFile) -> Result<Self, CliError> {
        let (network, speed, users) = file.build()?;
        Ok(Self { file, network, speed, users })
    }
}

pub fn load_config(path: &Path) -> Result<LoadedConfig, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::io(format!("cannot read {}: {e}", path.display())))?;
    LoadedConfig::from_file(ConfigFile::from_json(&text)?)
}

/// `--dump-config`: print the normalized config and skip the run. The output
/// re-parses to an identical normalized form, which the CLI tests pin.
pub fn dump_config(loaded: &LoadedConfig) -> Result<(), CliError> {
    let mut stdout = io::stdout();
    stdout.write_all(loaded.file.to_json().as_bytes())?;
    stdout.write_all(b"\n")?;
    Ok(())
}

/// Scale preset for the simulator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Profile {
    /// 5 km disk, 2e3 s windows, 8 replications: minutes on one core at
    /// reference densities.
    Desk,
    /// 10 km disk, 1e4 s windows, 8 replications.
    Paper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    /// Heading drawn once per UE, never changed.
    Straight,
    /// Random-direction walk: fresh heading and hold time at each turn.
    Rwp,
}

/// Simulator knobs shared by every simulating subcommand. Explicit flags
/// override the profile preset.
#[derive(Debug, Args)]
pub struct SimFlags {
    #[arg(long, value_enum, default_value_t = Profile::Desk)]
    pub profile: Profile,
    /// Base RNG seed; every sample is a pure function of (seed, replication),
    /// so reruns with equal flags reproduce output byte for byte.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub replications: Option<usize>,
    /// Simulated window length per replication, seconds.
    #[arg(long)]
    pub duration: Option<f64>,
    /// Integrator time step override, seconds.
    #[arg(long)]
    pub dt: Option<f64>,
    #[arg(long, value_enum, default_value_t = ModelArg::Straight)]
    pub model: ModelArg,
    /// Motion disk radius override, meters.
    #[arg(long)]
    pub disk_radius: Option<f64>,
    /// Counting-region area override, m²; defaults to the configured
    /// reporting area so simulated rates share the analytic normalization.
    #[arg(long)]
    pub count_area: Option<f64>,
}

impl SimFlags {
    pub fn to_sim_config(&self, network: &NetworkConfig) -> SimConfig {
        let (disk_radius, duration, replications) = match self.profile {
            Profile::Desk => (5_000.0, 2_000.0, 8),
            Profile::Paper => (10_000.0, 10_000.0, 8),
        };
        SimConfig {
            disk_radius: self.disk_radius.unwrap_or(disk_radius),
            count_region_area: self.count_area.unwrap_or(network.region_area),
            duration: self.duration.unwrap_or(duration),
            time_step: self.dt,
            walking_model: match self.model {
                ModelArg::Straight => WalkingModel::StraightLine,
                ModelArg::Rwp => WalkingModel::Rwp,
            },
            replications: self.replications.unwrap_or(replications),
            base_seed: self.seed,
            ..SimConfig::default()
        }
    }
}

/// One simulator run with everything the commands report from it.
pub struct SimRun {
    pub stats: Vec<HandoverStats>,
    pub matrix: RateMatrix,
    /// Pooled event counts per ordered tier pair.
    pub events: Vec<Vec<u64>>,
    /// Pooled UE exposure inside the counting region, UE-seconds.
    pub ue_seconds: f64,
    /// Spread of the per-replication total rate.
    pub total_summary: SampleSummary,
}

pub fn run_sim(loaded: &LoadedConfig, sim: &SimConfig) -> Result<SimRun, CliError> {
    let (_plan, stats) = run_replications(&loaded.network, &loaded.speed, sim)?;
    let matrix =
        estimate_rate_matrix(&stats, &loaded.network, &loaded.users, sim.count_region_area)?;
    let tiers = loaded.network.tiers.len();
    let mut events = vec![vec![0u64; tiers]; tiers];
    let mut ue_seconds = 0.0;
    for s in &stats {
        ue_seconds += s.ue_seconds_in_region;
        for (pooled, rep) in events.iter_mut().zip(&s.counts) {
            for (p, c) in pooled.iter_mut().zip(rep) {
                *p += c;
            }
        }
    }
    let totals = replication_totals(&stats, &loaded.network, &loaded.users, sim.count_region_area);
    let total_summary = summarize(&totals);
    Ok(SimRun { stats, matrix, events, ue_seconds, total_summary })
}

/// CSV sink: the given file, stdout otherwise.
pub fn csv_sink(out: Option<&Path>) -> Result<csv::Writer<Box<dyn Write>>, CliError> {
    let raw: Box<dyn Write> = match out {
        Some(path) => Box::new(
            fs::File::create(path)
                .map_err(|e| CliError::io(format!("cannot create {}: {e}", path.display())))?,
        ),
        None => Box::new(io::stdout()),
    };
    Ok(csv::Writer::from_writer(raw))
}

/// Shortest decimal that round-trips, the same form across platforms; NaN
/// prints as `NaN` so zero-event confidence cells stay machine-parsable.
pub fn fmt_f64(v: f64) -> String {
    format!("{v}")
}
