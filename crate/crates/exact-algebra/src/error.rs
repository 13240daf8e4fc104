use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("extended gcd of two zero polynomials")]
    BothZero,
    #[error("inexact division: remainder term {0}")]
    NotExact(String),
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("exponent vectors of different length ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("cannot substitute: {0}")]
    BadSubstitution(String),
}
