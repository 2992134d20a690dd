use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("generator {gen} is not legal in type {kind}")]
    IllegalGenerator { gen: String, kind: String },
    #[error("enumeration exceeded the bound of {0} items")]
    BoundExceeded(usize),
    #[error("element is not compatible with the flag sequences: {0}")]
    IncompatibleFlags(String),
    #[error("element {0} is not Grassmannian for the requested k")]
    NotGrassmannian(String),
    #[error("invalid flag sequence: {0}")]
    InvalidFlag(String),
    #[error("numerator is not divisible by the root")]
    NonDivisible,
    #[error("ring mismatch: {0}")]
    WrongRing(String),
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeOverflow { degree: u32, cap: u32 },
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("{0} is not a strict partition")]
    NotStrict(String),
    #[error("{0} is not k-strict")]
    NotKStrict(String),
    #[error("{0} is not a typed k-strict partition")]
    NotTypedKStrict(String),
    #[error("input is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("coefficient {0} is not an integer")]
    NonIntegralCoefficient(String),
    #[error("basis decomposition left a nonzero remainder: {0}")]
    NonTriangular(String),
    #[error("negative coefficient {0}")]
    NegativeCoefficient(String),
    #[error("element {0} is not increasing up to the requested rank")]
    NotIncreasing(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
