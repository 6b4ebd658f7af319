use thiserror::Error;

/// Errors raised by the exact and numeric layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("index {index} out of range 0..={len}")]
    IndexOutOfRange { index: i64, len: usize },

    #[error("degenerate polynomial: {0}")]
    DegeneratePolynomial(String),

    #[error("pole {0} is a root of Q")]
    PoleOnRoot(String),

    #[error("{0} is not a root of Q")]
    NotARoot(String),

    #[error("{0} is a multiple root of Q")]
    MultipleRoot(String),

    #[error("fewer than three distinct points in cross-ratio")]
    DegenerateCrossRatio,

    #[error("homography is singular (ad - bc = 0)")]
    SingularHomography,

    #[error("homography cannot be split: {0}")]
    NoSplit(&'static str),

    #[error("sequence is not cyclically monotonous")]
    NotMonotonous,

    #[error("point {0} coincides with a root")]
    PointOnRoot(String),

    #[error("expected an even number of roots >= 4, got {0}")]
    BadRootCount(usize),

    #[error("degree {degree} exceeds operator order {order}")]
    DegreeTooHigh { degree: usize, order: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("outside the domain of {func}: {reason}")]
    Domain { func: &'static str, reason: String },

    #[error("quadrature did not converge (estimate {estimate}, error {error})")]
    NoConvergence { estimate: f64, error: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(func: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            func,
            reason: reason.into(),
        }
    }
}
