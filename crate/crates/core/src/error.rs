use thiserror::Error;

/// Errors raised by the algebra library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field specification: {0}")]
    InvalidField(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("mode mismatch: {0}")]
    ModeMismatch(String),
    #[error("operation undefined on the zero element")]
    ZeroElement,
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("negative exponent on {0} is not allowed in polynomial mode")]
    NegativeExponent(String),
    #[error("weight is not realized by any exponent in range")]
    WeightNotRealized,
    #[error("ideal generator is not central: {0}")]
    NonCentralGenerator(String),
    #[error("degree bound {bound} exceeded (needed {needed})")]
    DegreeBoundExceeded { bound: usize, needed: usize },
    #[error("central ideal meets the Ore monoid (contains {0})")]
    MeetsOreSet(String),
    #[error("shift term is not in the centralizer of x1 and x2: {0}")]
    CentralizerViolation(String),
    #[error("swap automorphism unavailable: {0}")]
    SwapNotAllowed(String),
    #[error("map is not surjective: {0}")]
    NotSurjective(String),
    #[error("frame degree {frame} too small, need at least {needed}")]
    FrameTooSmall { frame: usize, needed: usize },
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
