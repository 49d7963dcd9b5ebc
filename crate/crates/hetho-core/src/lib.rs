//! Shared domain model for the hetho handover-rate engine.
//!
//! The model is an N-tier cellular deployment where each tier is a
//! homogeneous Poisson point process of base stations with its own density,
//! transmit power, pathloss exponent and association bias. UEs attach to the
//! station with the strongest biased received power. This crate holds the
//! validated configuration types and unit conventions; the rate math lives in
//! `hetho-analytic`, exact cell-boundary geometry in `hetho-oracle`, and the
//! Monte-Carlo simulator in `hetho-sim`.
//!
//! Internal units are SI throughout (meters, seconds, per-m²); the on-disk
//! config format uses km-based densities and is converted on ingestion.

mod config;
mod error;
pub mod schema;
mod speed;

pub use config::{beta_factor, validate_config, NetworkConfig, PropagationConstants, TierParams};
pub use error::ConfigError;
pub use schema::ConfigFile;
pub use speed::{SpeedLaw, SpeedModel, UserDensityModel};
