use crate::scalar::ScalarError;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid bicharacter: {0}")]
    InvalidBicharacter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("element is not homogeneous")]
    NonHomogeneous,
    #[error("word {0} is not standard")]
    NotStandard(String),
    #[error("constitution mismatch: {0}")]
    ConstitutionMismatch(String),
    #[error("set {set:?} is not ({k},{m})-regular")]
    NotRegular { set: Vec<usize>, k: usize, m: usize },
    #[error("unexpected leading term: {0}")]
    LeadingTerm(String),
    #[error("element does not have the required shape: {0}")]
    Shape(String),
    #[error("degree bound {bound} exceeded by degree {degree}")]
    DegreeBound { bound: u32, degree: u32 },
    #[error("invalid root sequence: {0}")]
    InvalidTheta(String),
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub type Result<T> = std::result::Result<T, Error>;
