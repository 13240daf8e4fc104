//! Brute-force reference computations.
//!
//! Nothing here touches partial fractions or the constant-term engines; the
//! only shared code is exact arithmetic. Every routine is exponential in the
//! worst case and meant for small parameters.

mod binomials;
mod dedekind;
mod diophantine;
mod table;
mod truncated;
mod walks;

pub use binomials::{binomial_suite, IdentityCheck, IdentityId};
pub use dedekind::dedekind_float;
pub use diophantine::{enumerate_solutions, LinearSystem};
pub use table::CoefficientTable;
pub use truncated::{dyson_product, truncated_ct, GeometricProblem};
pub use walks::{count_walks, Constraint, Steps};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("an infinite step set needs an endpoint window")]
    WindowRequired,
    #[error("invalid input: {0}")]
    BadInput(String),
}
