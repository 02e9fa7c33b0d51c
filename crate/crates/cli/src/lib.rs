//! Library side of the `faddeyeva` command-line tool: grid sweeps against
//! the extended-precision oracle, region maps, timing, the canonical point
//! sets used by the acceptance suite, and the tuning calibration.

pub mod bench;
pub mod calib;
pub mod fixtures;
pub mod grid;
pub mod points;

use faddeyeva_oracle::OracleError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("I/O error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("oracle: {0}")]
    Oracle(#[from] OracleError),
    #[error("evaluator: {0}")]
    Eval(#[from] faddeyeva::Error),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

pub(crate) fn io_err(path: &std::path::Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.display().to_string(), source }
}

/// Shortest decimal string that reads back to the same double.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:?}")
}
