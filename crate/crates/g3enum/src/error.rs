use thiserror::Error;

/// Errors surfaced by the engine.
///
/// `Domain` and `Validation` mean the caller asked for something outside the
/// supported range or handed in a malformed query/file; `Consistency` means
/// two derivations that must agree exactly did not, or a value that must be
/// an integer count was not.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain: {0}")]
    Domain(String),
    #[error("validation: {0}")]
    Validation(String),
    #[error("consistency: {0}")]
    Consistency(String),
    #[error("parse: {0}")]
    Parse(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
