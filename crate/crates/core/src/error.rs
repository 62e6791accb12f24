use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    Input(String),

    /// An iterative routine did not converge.
    #[error("{routine} did not converge after {iterations} sweeps")]
    NoConvergence {
        routine: &'static str,
        iterations: usize,
    },

    /// Data without the structure an operation needs (zero variance, zero field, ...).
    #[error("degenerate data: {0}")]
    Degenerate(String),

    /// An objective or gradient evaluator returned a non-finite value.
    #[error("evaluator {what} returned a non-finite value at p = {point:?}")]
    Evaluation { what: &'static str, point: Vec<f64> },

    /// A failure while evaluating sample point `index`.
    #[error("sample point {index}: {source}")]
    AtSample {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
