use thiserror::Error;

/// Errors raised by the library. Every variant carries enough data to render
/// a machine-readable diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be prime ≥ 2 (got {0})")]
    NotPrime(u64),

    #[error("mismatched operands: {0}")]
    Mismatch(String),

    #[error("insufficient precision: need {needed} digits, have {available}")]
    Precision { needed: u32, available: u32 },

    #[error("value out of range: {0}")]
    Overflow(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
