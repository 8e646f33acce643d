use thiserror::Error;

/// Failure of an approximate (tolerance-controlled) certification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToleranceFailure {
    /// A design residual exceeds the tolerance, so the hypothesis of the
    /// certifier is (approximately) violated.
    #[error("hypothesis approximately violated: residual at odd index {index} is {residual}")]
    HypothesisViolated { index: usize, residual: String },
    /// The design residuals are within tolerance but no zero point or
    /// negated partner could be matched within tolerance.
    #[error("pairing ambiguous: no partner within tolerance for point {index} ({value})")]
    PairingAmbiguous { index: usize, value: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    Empty,

    #[error("point {index} = {value} lies outside [-1, 1]")]
    OutOfInterval { index: usize, value: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypothesis violated: residual at odd index {index} is {residual}, not 0")]
    Hypothesis { index: usize, residual: String },

    #[error(transparent)]
    Tolerance(#[from] ToleranceFailure),

    #[error("polynomial is not squarefree; divide by gcd(p, p') first")]
    NotSquarefree,

    #[error("no valid epsilon after {0} halvings")]
    IterationCap(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point {0} is not a unit vector")]
    NotUnit(usize),

    #[error("point {0} duplicates an existing point")]
    DuplicatePoint(usize),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// An identity that holds by theorem failed in exact arithmetic.
    #[error("internal defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
