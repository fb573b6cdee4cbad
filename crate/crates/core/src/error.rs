use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    Validation(String),

    /// The requested size exceeds the configured computation cap.
    #[error("{what} with n = {n} exceeds the cap of {cap}; raise it with --cap")]
    ResourceLimit {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("unsupported field: q = {q} is not prime (only prime fields are enumerated)")]
    UnsupportedField { q: u64 },

    #[error(
        "unsupported characteristic: {algebra} needs p > {class} so that exp/log are defined, got p = {p}"
    )]
    UnsupportedCharacteristic {
        algebra: &'static str,
        class: usize,
        p: u32,
    },

    /// An identity that must hold exactly was violated. Always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
