//! MacMahon partition analysis over Elliott-rational functions.
//!
//! A linear Diophantine system becomes a crude generating function in extra
//! variables `l1..lr`; eliminating those by constant terms (or by Omega-geq)
//! leaves the generating function of the solutions. Every intermediate result
//! stays a Laurent polynomial over a product of binomials.

mod arith;
mod binomial;
mod ct;
mod elliott;
mod reduce;
mod substitute;
mod system;

pub use binomial::{normalize_difference, BinomialFactor, BinomialKey, Monomial, Normalized};
pub use ct::{ct_lambda, ct_lambda_summands, ct_lambdas, omega_geq};
pub use elliott::{cancel_common, ElliottRational};
pub use reduce::{elliott_reduce, elliott_reduce_with_budget, DEFAULT_STEP_BUDGET};
pub use substitute::{monomial_substitute_ct_check, SubstitutionCheck};
pub use system::{check_reciprocity, crude_gf, rank, solution_gf, DiophantineSystem, ReciprocityReport};

use exact_algebra::AlgebraError;
use laurent_order::OrderError;
use oracle::OracleError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OmegaError {
    #[error("expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("denominator factor is zero")]
    ZeroDenominator,
    #[error("not Elliott-rational: factor {0} has more than two terms")]
    NotElliott(String),
    #[error("a PT factor 1 - z with z = 1 diverges when the variable is set to 1")]
    DivergentAtOne,
    #[error("reduction step budget of {budget} exceeded with {pending} terms pending")]
    StepBudget { budget: usize, pending: usize },
    #[error("invalid system: {0}")]
    BadSystem(String),
    #[error("singular exponent matrix for monomial substitution")]
    SingularSubstitution,
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
