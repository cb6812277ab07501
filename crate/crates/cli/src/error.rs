use surfreal_core::complex::ComplexError;
use surfreal_core::enumerate::EnumerationError;
use surfreal_core::numeric::NumericError;
use surfreal_core::GeometryError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Every error is a usage or parameter problem.
    pub fn exit_code(&self) -> u8 {
        2
    }
}
