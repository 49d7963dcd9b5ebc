use std::path::PathBuf;

use clap::{Args, ValueEnum};
use hetho_core::schema::SpeedFile;
use hetho_core::ConfigFile;

use crate::common::{csv_sink, dump_config, fmt_f64, load_config, run_sim, LoadedConfig, SimFlags};
use crate::error::CliError;

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Network config, JSON.
    pub config: PathBuf,
    /// Swept field: `tiers[I].density|power|alpha|bias` (0-based index, file
    /// units), `speed.mean`, or `user_density`.
    #[arg(long)]
    pub param: String,
    /// Comma-separated values the parameter takes.
    #[arg(long, value_delimiter = ',', required = true)]
    pub values: Vec<f64>,
    #[arg(long, value_enum, default_value_t = Record::Both)]
    pub record: Record,
    /// Also run the simulator at every point (same seed, so points share
    /// common random numbers).
    #[arg(long)]
    pub simulate: bool,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub flags: SimFlags,
    /// Print the normalized config instead of running.
    #[arg(long)]
    pub dump_config: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Record {
    Pairwise,
    Total,
    Both,
}

#[derive(Debug, PartialEq)]
enum SweepParam {
    Tier { index: usize, field: TierField },
    SpeedMean,
    UserDensity,
}

#[derive(Debug, PartialEq)]
enum TierField {
    Density,
    Power,
    Alpha,
    Bias,
}

/// Analytic rate rows over one swept parameter, optionally with simulated
/// columns. Long format: one row per (value, tier pair), plus a total row per
/// value unless `--record pairwise`.
pub fn run(args: &SweepArgs) -> Result<(), CliError> {
    let loaded = load_config(&args.config)?;
    if args.dump_config {
        return dump_config(&loaded);
    }
    let param = parse_param(&args.param)?;
    let spec = hetho_analytic::QuadratureSpec::default();

    let mut w = csv_sink(args.out.as_deref())?;
    let mut header = vec!["param", "value", "m", "n", "rate_hz"];
    if args.simulate {
        header.extend(["sim_hz", "sim_ci_halfwidth"]);
    }
    w.write_record(&header)?;

    for &value in &args.values {
        let file = apply(&loaded.file, &param, value)?;
        let point = LoadedConfig::from_file(file)?;
        let matrix =
            hetho_analytic::total_handover_rate(&point.network, &point.users, &point.speed, &spec)?;
        let sim = if args.simulate {
            Some(run_sim(&point, &args.flags.to_sim_config(&point.network))?)
        } else {
            None
        };
        let tiers = point.network.tiers.len();
        if args.record != Record::Total {
            for m in 0..tiers {
                for n in 0..tiers {
                    let mut row = vec![
                        args.param.clone(),
                        fmt_f64(value),
                        (m + 1).to_string(),
                        (n + 1).to_string(),
                        fmt_f64(matrix.get(m, n)),
                    ];
                    if let Some(run) = &sim {
                        let ci = run.matrix.ci_halfwidth.as_ref().map_or(f64::NAN, |c| c[m][n]);
                        row.push(fmt_f64(run.matrix.get(m, n)));
                        row.push(fmt_f64(ci));
                    }
                    w.write_record(&row)?;
                }
            }
        }
        if args.record != Record::Pairwise {
            let mut row = vec![
                args.param.clone(),
                fmt_f64(value),
                "total".to_string(),
                String::new(),
                fmt_f64(matrix.total),
            ];
            if let Some(run) = &sim {
                row.push(fmt_f64(run.matrix.total));
                row.push(fmt_f64(run.total_summary.ci_halfwidth));
            }
            w.write_record(&row)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn parse_param(path: &str) -> Result<SweepParam, CliError> {
    match path {
        "speed.mean" => return Ok(SweepParam::SpeedMean),
        "user_density" => return Ok(SweepParam::UserDensity),
        _ => {}
    }
    let bad = || {
        CliError::usage(format!(
            "unknown sweep parameter {path:?}; expected tiers[I].density|power|alpha|bias, \
             speed.mean, or user_density"
        ))
    };
    let rest = path.strip_prefix("tiers[").ok_or_else(bad)?;
    let close = rest.find(']').ok_or_else(bad)?;
    let index: usize = rest[..close].parse().map_err(|_| bad())?;
    let field = match &rest[close..] {
        "].density" => TierField::Density,
        "].power" => TierField::Power,
        "].alpha" => TierField::Alpha,
        "].bias" => TierField::Bias,
        _ => return Err(bad()),
    };
    Ok(SweepParam::Tier { index, field })
}

/// New file-unit config with the parameter set; validation happens when the
/// caller rebuilds it, so out-of-range sweep values fail like any bad config.
fn apply(file: &ConfigFile, param: &SweepParam, value: f64) -> Result<ConfigFile, CliError> {
    let mut file = file.clone();
    match param {
        SweepParam::Tier { index, field } => {
            let count = file.tiers.len();
            let tier = file.tiers.get_mut(*index).ok_or_else(|| {
                CliError::usage(format!(
                    "tier index {index} out of range for a {count}-tier config"
                ))
            })?;
            match field {
                TierField::Density => tier.density_per_km2 = value,
                TierField::Power => tier.power = value,
                TierField::Alpha => tier.alpha = value,
                TierField::Bias => tier.bias = value,
            }
        }
        SweepParam::SpeedMean => match &mut file.speed {
            SpeedFile::Constant { mean_mps } | SpeedFile::Uniform { mean_mps } => {
                *mean_mps = value;
            }
            SpeedFile::Table { .. } => {
                return Err(CliError::usage(
                    "speed.mean applies to constant or uniform speed laws, not a table",
                ));
            }
        },
        SweepParam::UserDensity => file.user_density_per_km2 = value,
    }
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_paths() {
        assert_eq!(
            parse_param("tiers[1].density").unwrap(),
            SweepParam::Tier { index: 1, field: TierField::Density }
        );
        assert_eq!(parse_param("speed.mean").unwrap(), SweepParam::SpeedMean);
        assert_eq!(parse_param("user_density").unwrap(), SweepParam::UserDensity);
        assert!(parse_param("tiers[0].nonsense").is_err());
        assert!(parse_param("tiers[x].bias").is_err());
        assert!(parse_param("speed.sigma").is_err());
    }

    #[test]
    fn apply_edits_file_units_in_place() {
        let base = ConfigFile::two_tier_reference();
        let field = SweepParam::Tier { index: 1, field: TierField::Density };
        let swept = apply(&base, &field, 4.0).unwrap();
        assert_eq!(swept.tiers[1].density_per_km2, 4.0);
        assert_eq!(swept.tiers[0].density_per_km2, base.tiers[0].density_per_km2);

        let swept = apply(&base, &SweepParam::SpeedMean, 7.5).unwrap();
        match swept.speed {
            SpeedFile::Uniform { mean_mps } => assert_eq!(mean_mps, 7.5),
            other => panic!("unexpected law {other:?}"),
        }

        assert!(apply(&base, &SweepParam::Tier { index: 5, field: TierField::Bias }, 1.0).is_err());
    }
}
