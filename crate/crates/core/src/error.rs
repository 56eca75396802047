use thiserror::Error;

/// Failures raised by evaluators, quadrature, and the verification harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the documented domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The function has a pole at the requested argument.
    #[error("pole: {0}")]
    Pole(String),
    /// A grid, tolerance, or option set is malformed.
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn pole(msg: impl Into<String>) -> Error {
    Error::Pole(msg.into())
}
