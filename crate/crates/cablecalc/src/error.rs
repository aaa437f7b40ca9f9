//! CLI-level errors and their process exit codes.

use std::process::ExitCode;

/// Everything that can go wrong between the command line and the library.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// An arithmetic or domain error from the library.
    #[error(transparent)]
    Core(#[from] cablecalc_core::Error),

    /// A knot descriptor that does not match the grammar.
    #[error("malformed knot descriptor: {reason} at token `{token}`")]
    Descriptor { reason: &'static str, token: String },

    /// A search target that does not match the grammar.
    #[error("malformed target: {reason} at token `{token}`")]
    Target { reason: &'static str, token: String },

    /// A parameter/range specification that does not parse.
    #[error("malformed parameter specification: {reason} at token `{token}`")]
    ParamSpec { reason: &'static str, token: String },

    /// A bad value in the CABLECALC_THREADS environment variable.
    #[error("invalid CABLECALC_THREADS value `{value}`: expected a positive integer")]
    Threads { value: String },

    /// An unusable grid bound.
    #[error("invalid grid: {reason}")]
    Grid { reason: &'static str },

    /// Output could not be written.
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),

    /// JSON could not be produced or consumed.
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    /// CSV could not be produced.
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

/// Exit codes: 0 success, 1 usage/parse error, 2 valid-but-inapplicable
/// input (a well-formed knot outside the admissible range), 3 verification
/// failure.
pub fn exit_code_for(error: &CliError) -> ExitCode {
    match error {
        CliError::Core(cablecalc_core::Error::NotAdmissible { .. }) => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

/// Exit code for a verification run that found violations.
pub const VERIFY_FAILURE: u8 = 3;

pub type Result<T> = std::result::Result<T, CliError>;
