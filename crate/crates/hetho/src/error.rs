use std::fmt;

use hetho_analytic::AnalyticError;
use hetho_core::ConfigError;
use hetho_oracle::OracleError;
use hetho_sim::SimError;

/// Failure class, mapped onto the process exit code: tolerance violations
/// exit 1 so scripts can branch on agreement, everything else exits 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Usage,
    Config,
    Analytic,
    Oracle,
    Io,
    Tolerance,
}

impl ErrorKind {
    fn label(self) -> &'static str {
        match self {
            ErrorKind::Usage => "usage",
            ErrorKind::Config => "config",
            ErrorKind::Analytic => "analytic",
            ErrorKind::Oracle => "oracle",
            ErrorKind::Io => "io",
            ErrorKind::Tolerance => "tolerance",
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { kind: ErrorKind::Usage, message: message.into() }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Self { kind: ErrorKind::Io, message: message.into() }
    }

    pub fn tolerance(message: impl Into<String>) -> Self {
        Self { kind: ErrorKind::Tolerance, message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            ErrorKind::Tolerance => 1,
            _ => 2,
        }
    }

    /// One-line machine-readable form, printed to stderr on failure.
    pub fn to_json(&self) -> String {
        serde_json::json!({ "kind": self.kind.label(), "message": self.message }).to_string()
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind.label(), self.message)
    }
}

impl std::error::Error for CliError {}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        Self { kind: ErrorKind::Config, message: e.to_string() }
    }
}

impl From<SimError> for CliError {
    fn from(e: SimError) -> Self {
        Self { kind: ErrorKind::Config, message: e.to_string() }
    }
}

impl From<AnalyticError> for CliError {
    fn from(e: AnalyticError) -> Self {
        Self { kind: ErrorKind::Analytic, message: e.to_string() }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        Self { kind: ErrorKind::Oracle, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self { kind: ErrorKind::Io, message: e.to_string() }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        Self { kind: ErrorKind::Io, message: e.to_string() }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self { kind: ErrorKind::Io, message: e.to_string() }
    }
}
