use thiserror::Error;

/// Errors raised by the engine. Unsatisfiable searches are not errors; they
/// are reported through the result types of the individual operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit: {what} exceeds the configured ceiling {ceiling}")]
    ResourceLimit { what: String, ceiling: usize },
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
