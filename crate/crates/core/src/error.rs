use thiserror::Error;

/// Errors raised by the numerical engine and the scenario front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operator `{what}` is not hermitian (asymmetry norm {asymmetry:.3e}, tolerance {tolerance:.3e})")]
    NotHermitian {
        what: String,
        asymmetry: f64,
        tolerance: f64,
    },

    #[error("operator is not unitary (deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("state vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("wave operator has zero norm; expectation values are undefined")]
    ZeroNorm,

    #[error("invalid initial density matrix: {0}")]
    InvalidState(String),

    #[error("time grid must be strictly increasing (index {index})")]
    NonIncreasingGrid { index: usize },

    #[error("closed form only available for alpha = beta = 0 (got alpha = {alpha}, beta = {beta})")]
    UnsupportedCase { alpha: f64, beta: f64 },

    #[error("non-finite entry in operator")]
    NonFinite,

    #[error("scenario field `{field}`: {reason}")]
    Schema { field: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
