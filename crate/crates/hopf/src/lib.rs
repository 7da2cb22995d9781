//! Scene files, `.hstore` artifacts, reports and the `hopf` command line
//! on top of [`hopf_core`].

pub mod cli;
pub mod report;
pub mod scene;
pub mod store;

pub use hopf_core as core;

use std::path::Path;

use hopf_core::Error;

/// Exit status for a run in which every check passed.
pub const EXIT_OK: i32 = 0;
/// Exit status when a verification (identity, axiom, exactness) fails.
pub const EXIT_VERIFICATION: i32 = 2;
/// Exit status when nothing failed but some result is inconclusive.
pub const EXIT_INCONCLUSIVE: i32 = 3;
/// Exit status for unreadable, malformed or invalid input.
pub const EXIT_INPUT: i32 = 4;

/// Environment variable overriding the group enumeration cap.
pub const ELEMENT_CAP_VAR: &str = "HOPF_ELEMENT_CAP";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("artifact corrupt: {0}")]
    Corrupt(String),
    #[error("scene parse error at {position}: {message}")]
    Parse { position: String, message: String },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("verification failed: {identity}{}", witness.as_ref().map(|w| format!(" (witness: {w})")).unwrap_or_default())]
    Verification { identity: String, witness: Option<String> },
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("{0}")]
    Core(#[from] Error),
}

impl CliError {
    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), message: e.to_string() }
    }

    pub fn corrupt(line: usize, message: &str) -> Self {
        CliError::Corrupt(format!("line {line}: {message}"))
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Corrupt(_) | CliError::Parse { .. } | CliError::Input(_) => EXIT_INPUT,
            CliError::Verification { .. } => EXIT_VERIFICATION,
            CliError::Inconclusive(_) => EXIT_INCONCLUSIVE,
            CliError::Core(e) => match e {
                Error::IdentityFails(_)
                | Error::HopfAxioms(_)
                | Error::IncompatibleCocyclePair(_)
                | Error::NotCertified(_)
                | Error::NotInvertible(_)
                | Error::NotNormal(_) => EXIT_VERIFICATION,
                Error::Inconclusive(_) | Error::EigenvalueSearchExhausted(_) => EXIT_INCONCLUSIVE,
                _ => EXIT_INPUT,
            },
        }
    }
}

/// Applies `HOPF_ELEMENT_CAP` when set to a positive integer.
pub fn apply_element_cap_from_env() -> Result<(), CliError> {
    match std::env::var(ELEMENT_CAP_VAR) {
        Ok(v) => {
            let cap: usize = v
                .trim()
                .parse()
                .ok()
                .filter(|&c| c > 0)
                .ok_or_else(|| CliError::Input(format!("{ELEMENT_CAP_VAR} must be a positive integer, got {v:?}")))?;
            hopf_core::groups::set_element_cap(cap);
            Ok(())
        }
        Err(_) => Ok(()),
    }
}
