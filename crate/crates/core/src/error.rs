//! Error taxonomy for the whole pipeline.
//!
//! Every failure class declared by an operation maps to one variant here,
//! and each variant carries a stable machine-readable code so the CLI can
//! translate it into a distinct exit status.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("io-failure: {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed-image: {0}")]
    MalformedImage(String),
    #[error("empty-corpus: scaler fitting requires at least one sample")]
    EmptyCorpus,
    #[error("degenerate-embedding: pre-normalization norm {norm:e} is below 1e-12")]
    DegenerateEmbedding { norm: f64 },
    #[error("non-finite-score: {0}")]
    NonFiniteScore(String),
    #[error("non-finite-loss: encountered in batch {batch}")]
    NonFiniteLoss { batch: usize },
    #[error("rank-deficient-design: {0}")]
    RankDeficientDesign(String),
    #[error("insufficient-observations: n={n} is not greater than p={p}")]
    InsufficientObservations { n: usize, p: usize },
    #[error("missing-field: {0}")]
    MissingField(String),
    #[error("no-curvature: {0}")]
    NoCurvature(String),
    #[error("corpus-too-small: corpus holds {size} usable entries but k={k}")]
    CorpusTooSmall { size: usize, k: usize },
    #[error("invalid-distribution: {0}")]
    InvalidDistribution(String),
    #[error("zero-marginal: {0}")]
    ZeroMarginal(String),
    #[error("index-out-of-range: {0}")]
    IndexOutOfRange(String),
    #[error("infeasible-target: {0}")]
    InfeasibleTarget(String),
    #[error("arity-mismatch: {0}")]
    ArityMismatch(String),
    #[error("invalid-config: {0}")]
    InvalidConfig(String),
}

impl Error {
    /// Wrap an I/O error with the path it happened on.
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Stable machine-readable code, one per declared failure class.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Io { .. } => "io-failure",
            Error::MalformedImage(_) => "malformed-image",
            Error::EmptyCorpus => "empty-corpus",
            Error::DegenerateEmbedding { .. } => "degenerate-embedding",
            Error::NonFiniteScore(_) => "non-finite-score",
            Error::NonFiniteLoss { .. } => "non-finite-loss",
            Error::RankDeficientDesign(_) => "rank-deficient-design",
            Error::InsufficientObservations { .. } => "insufficient-observations",
            Error::MissingField(_) => "missing-field",
            Error::NoCurvature(_) => "no-curvature",
            Error::CorpusTooSmall { .. } => "corpus-too-small",
            Error::InvalidDistribution(_) => "invalid-distribution",
            Error::ZeroMarginal(_) => "zero-marginal",
            Error::IndexOutOfRange(_) => "index-out-of-range",
            Error::InfeasibleTarget(_) => "infeasible-target",
            Error::ArityMismatch(_) => "arity-mismatch",
            Error::InvalidConfig(_) => "invalid-config",
        }
    }

    /// Distinct nonzero process exit code for the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } => 10,
            Error::MalformedImage(_) => 11,
            Error::EmptyCorpus => 12,
            Error::DegenerateEmbedding { .. } => 13,
            Error::NonFiniteScore(_) => 14,
            Error::NonFiniteLoss { .. } => 15,
            Error::RankDeficientDesign(_) => 16,
            Error::InsufficientObservations { .. } => 17,
            Error::MissingField(_) => 18,
            Error::NoCurvature(_) => 19,
            Error::CorpusTooSmall { .. } => 20,
            Error::InvalidDistribution(_) => 21,
            Error::ZeroMarginal(_) => 22,
            Error::IndexOutOfRange(_) => 23,
            Error::InfeasibleTarget(_) => 24,
            Error::ArityMismatch(_) => 25,
            Error::InvalidConfig(_) => 26,
        }
    }
}
