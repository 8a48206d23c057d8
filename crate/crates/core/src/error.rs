use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("weight must be positive")]
    ZeroWeight,
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error("invalid split of part {part} (size {size}) into ({a},{b})")]
    InvalidSplit {
        part: usize,
        size: usize,
        a: usize,
        b: usize,
    },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("resource guard: {0}")]
    LimitExceeded(String),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("containment violated: {0}")]
    NotContained(String),
    #[error("relation check failed: {0}")]
    RelationCheck(String),
    #[error("truncation overflow: term of y-degree {degree} exceeds bound {bound}")]
    TruncationOverflow { degree: u32, bound: u32 },
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("d∘d ≠ 0 at degree {0}")]
    NotAComplex(i64),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Resource-guard refusals are reported with a dedicated exit code by the CLI.
    pub fn is_resource_guard(&self) -> bool {
        matches!(self, Error::LimitExceeded(_))
    }
}
