//! Exact arithmetic shared by every other crate in the workspace.
//!
//! The algorithms downstream are written against the [`Field`] trait, so the
//! same partial-fraction code runs over the rationals, over a simple algebraic
//! extension `Q[a]/(p)`, and over univariate rational functions.

mod error;
mod field;
mod laurent;
mod poly;
mod quotient;
mod ratfunc;

pub use error::AlgebraError;
pub use field::{binomial, int, rat, Field};
pub use laurent::{cmp_graded_revlex, monomial_string, Exp, LaurentPoly};
pub use poly::UniPoly;
pub use quotient::{Modulus, QuotientElem};
pub use ratfunc::RatFunc;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// The base field of characteristic zero used throughout.
pub type Q = BigRational;
/// Univariate polynomials with rational coefficients.
pub type QPoly = UniPoly<Q>;
/// Sparse multivariate Laurent polynomials with rational coefficients.
pub type Laurent = LaurentPoly<Q>;
/// Univariate rational functions over the rationals, e.g. the field `Q(t)`.
pub type QRatFunc = RatFunc<Q>;
