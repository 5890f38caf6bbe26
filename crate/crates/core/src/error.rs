use thiserror::Error;

/// Errors surfaced by code construction and decoding.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus is reducible: divisible by {0}")]
    Reducible(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("division by zero field element")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("generators are not a Groebner basis")]
    NotGroebner,
    #[error("standard monomials {0} and {1} share the same weight")]
    WeightCollision(String, String),
    #[error("generator {0} does not have exactly two monomials of maximal weight")]
    WrongTopShape(usize),
    #[error("series window exhausted in variable {0}")]
    WindowExhausted(usize),
    #[error("syndrome value for {0} is not known or derivable")]
    NeedSyndrome(String),
    #[error("no strict majority among syndrome votes at {0}")]
    NoMajority(String),
    #[error("linear system for locator candidate is rank deficient")]
    RankDeficient,
    #[error("denominator vanished in error value formula at point {0}")]
    ZeroDenominator(usize),
    #[error("variety size {found} does not match footprint size {expected}")]
    CardinalityMismatch { expected: usize, found: usize },
    #[error("decoding failed at stage {stage}: {detail}")]
    DecodeFailure { stage: &'static str, detail: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("config error at line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
