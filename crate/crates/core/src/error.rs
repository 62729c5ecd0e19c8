use thiserror::Error;

/// Errors reported by contract checks across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range for {len} dimensions")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("indices must be distinct (got {0} twice)")]
    DuplicateIndex(usize),

    #[error("translation slope must be non-zero")]
    ZeroSlope,

    #[error("expected vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("archive holds no solutions")]
    EmptyArchive,

    #[error("requested {k} centroids from only {n} samples")]
    TooFewSamples { k: usize, n: usize },

    #[error("fitness values must be finite")]
    NonFiniteFitness,

    #[error("evaluations spent must be positive")]
    NonPositiveEvals,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
