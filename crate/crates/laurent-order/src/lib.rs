//! Monomial orders on Laurent polynomials and constant terms of rational
//! functions that factor cleanly with respect to one variable.
//!
//! A denominator factor is PT when its initial term carries the lowest power of
//! the distinguished variable, so its reciprocal is a power series in that
//! variable, and NT when the initial term carries the highest power. For a
//! rational function whose factors are all PT or NT, the constant term is the
//! polynomial part at 0 plus the PT fractional parts at 0.

mod ct;
mod order;

pub use ct::{ct_classified, ct_rational, hadamard, to_bivariate, FactoredRational};
pub use order::{determinant, FactorClass, Tag, VariableOrder};

use exact_algebra::AlgebraError;
use ppfraction::PfdError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrderError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("variable {0} appears twice")]
    DuplicateVariable(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("bad rho matrix: {0}")]
    BadRho(String),
    #[error("rho matrix is singular")]
    SingularRho,
    #[error("zero input")]
    ZeroInput,
    #[error("not rho-factorable: factor {0} is neither PT nor NT")]
    NotFactorable(String),
    #[error("{0} has no power series expansion at 0")]
    NotExpandable(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Pfd(#[from] PfdError),
}
