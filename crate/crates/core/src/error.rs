use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("empty vertex subset")]
    EmptySubset,
    #[error("invalid rank {0} for family {1}")]
    InvalidRank(usize, char),
    #[error("degree cutoff {0} reached with new paths still appearing")]
    CutoffExceeded(usize),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("decomposition inconclusive after {0} samples")]
    DecompositionInconclusive(usize),
    #[error("dimension undetermined within bound {0}")]
    UndeterminedDimension(usize),
    #[error("approximation is not surjective")]
    ApproximationNotSurjective,
    #[error("algebra is not {0}-Gorenstein")]
    NotNGorenstein(usize),
    #[error("module is not cotilting")]
    NotCotilting,
    #[error("dominant dimension is below two")]
    DomDimTooSmall,
}

pub type Result<T> = std::result::Result<T, Error>;
