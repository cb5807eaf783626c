//! Error types shared across the crate.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the exact and numeric pipelines.
///
/// `Input` and `Domain` signal bad arguments (malformed data, dimension
/// mismatches, preconditions that the caller can check). `Genericity` and
/// `Degenerate` signal that randomized or generic-coefficient assumptions
/// failed; callers may resample. `Inconsistent` signals data that violates
/// an integrality constraint it promised to satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: dimension mismatch, bad syntax, unknown id.
    Input(String),
    /// Operation undefined for this value (empty polytope, degenerate hull).
    Domain(String),
    /// A genericity assumption is violated (zero restricted polynomial,
    /// overdetermined stratum flagged as error, exhausted resampling).
    Genericity(String),
    /// A numeric functional is degenerate; the caller should resample.
    Degenerate(String),
    /// Exact data failed an integrality or consistency check.
    Inconsistent(String),
    /// Parse error with 1-based line and column.
    Parse { line: usize, col: usize, msg: String },
}

impl Error {
    /// Process exit code for the CLI: 2 for input-shaped errors, 3 for
    /// genericity/degeneracy failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Domain(_) | Error::Inconsistent(_) | Error::Parse { .. } => 2,
            Error::Genericity(_) | Error::Degenerate(_) => 3,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(m) => write!(f, "input error: {m}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Genericity(m) => write!(f, "genericity violation: {m}"),
            Error::Degenerate(m) => write!(f, "degenerate data: {m}"),
            Error::Inconsistent(m) => write!(f, "inconsistent data: {m}"),
            Error::Parse { line, col, msg } => write!(f, "parse error at {line}:{col}: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
