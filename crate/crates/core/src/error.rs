use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("time series must have at least 2 points, got {0}")]
    TooShort(usize),

    #[error("time series contains a non-finite value at index {0}")]
    NonFinite(usize),

    #[error("series is constant (standard deviation {0:e}); cannot z-normalize")]
    ConstantSeries(f64),

    #[error("invalid segment count w={w} for series length n={n}")]
    InvalidW { w: usize, n: usize },

    #[error("alphabet size {0} is outside the supported range 2..=26")]
    InvalidAlpha(usize),

    #[error("trend alphabet size {0} is outside the supported range 2..=6")]
    UnsupportedTrendAlpha(usize),

    #[error("symbol index {index} out of range for alphabet of size {alpha}")]
    SymbolOutOfRange { index: usize, alpha: usize },

    #[error("series lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("representation parameters differ: {0}")]
    ParamMismatch(String),

    #[error("euclidean distance is zero; tightness of lower bound is undefined")]
    ZeroEuclidean,

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("{path}: row at line {line} has {got} values, expected {expected}")]
    RaggedRows {
        path: PathBuf,
        line: usize,
        expected: usize,
        got: usize,
    },

    #[error("invalid word text {text:?}: {msg}")]
    WordParse { text: String, msg: String },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("no results to report")]
    EmptyResults,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by the environment (files, encoding) rather than by the data or
    /// parameters themselves.
    pub fn is_io(&self) -> bool {
        matches!(
            self,
            Error::Io { .. } | Error::Csv(_) | Error::Parse { .. } | Error::RaggedRows { .. }
        )
    }
}
