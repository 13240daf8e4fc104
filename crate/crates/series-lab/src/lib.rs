//! Truncated power series with Elliott-rational coefficients, and the
//! lattice-path computations built on them.
//!
//! A [`TruncatedSeries`] is a power series in one variable (usually `t`)
//! whose coefficients are rational functions in the remaining variables.
//! Constant terms in those variables go through `omega-engine`. On top of
//! that sit root solving, constant terms by roots, divided differences and
//! the third decomposition. The same layer drives the walk pipelines:
//! slit plane, bounded Dyck paths, reflectable quarter plane and paths
//! below the diagonal.

mod decompose;
mod divided;
mod root;
mod series;
mod split;
mod walks;

pub use decompose::{has_sign, split_log, third_decomposition, ThirdDecomposition};
pub use divided::{complete_homogeneous, divided_difference, divided_difference_at, divided_difference_step, Point};
pub use root::{lagrange_ct, positive_root, positive_root_of, series_from_rational, series_quotient, BiPoly};
pub use series::TruncatedSeries;
pub use split::{coefficient, constant_part, positive_part, sign_split, SignSplit};
pub use walks::{
    bilateral_walks, catalan_paths, dyck_bounded, quarter_plane_symmetric, slit_plane, BoundedDyck, CatalanPaths,
    QuarterPlane, SlitPlane, StepSet,
};

use omega_engine::OmegaError;
use thiserror::Error;

/// Truncation used when a caller does not pick one.
pub const DEFAULT_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error(transparent)]
    Omega(#[from] OmegaError),
    #[error("incompatible series: {0}")]
    Mismatch(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("constant coefficient must be 1 (log) or 0 (exp): {0}")]
    NotUnit(String),
    #[error("not a polynomial in {0}: {1}")]
    NotPolynomialIn(String, String),
    #[error("negative powers of the series variable in {0}")]
    NotPowerSeries(String),
    #[error("step set is not symmetric in y: {0}")]
    Asymmetric(String),
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error("invalid input: {0}")]
    BadInput(String),
}

impl From<exact_algebra::AlgebraError> for SeriesError {
    fn from(e: exact_algebra::AlgebraError) -> Self {
        SeriesError::Omega(OmegaError::from(e))
    }
}
