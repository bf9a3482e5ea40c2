use std::path::PathBuf;

/// Errors surfaced by the simulation library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input sequence has the wrong length or shape.
    #[error("input shape: {0}")]
    InputShape(String),

    /// A parameter is outside its valid range.
    #[error("configuration: {0}")]
    Config(String),

    /// PAPR is undefined for an all-zero signal.
    #[error("PAPR undefined: signal is all zeros")]
    UndefinedPapr,

    /// The threshold-estimate denominator came out non-positive, which
    /// means gamma is too small for the observed envelope statistics.
    #[error("degenerate threshold: beta = {beta} with gamma = {gamma}")]
    DegenerateThreshold { beta: f64, gamma: f64 },

    /// An operation that needs at least one sample got none.
    #[error("empty input")]
    EmptyInput,

    /// An SNR was queried before any samples were accumulated.
    #[error("empty measurement: no samples accumulated")]
    EmptyMeasurement,

    /// File I/O failure, with the offending path.
    #[error("io: {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
