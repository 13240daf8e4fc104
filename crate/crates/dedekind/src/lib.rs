//! Sums of a rational function over the nontrivial `n`-th roots of unity,
//! evaluated exactly as one fractional part at `1 + t + ... + t^(n-1)`.
//!
//! The higher-dimensional Dedekind sum `d(n; a_1..a_m)` is the case
//! `R = prod (t^a_i + 1)/(t^a_i - 1)`, and Zagier's reciprocity law becomes a
//! statement about the single pole of the symmetric product at `t = 1`.

use exact_algebra::{AlgebraError, QPoly, QRatFunc, UniPoly, Q};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use ppfraction::{frac_at, frac_at_origin, translate, PfdError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DedekindError {
    #[error("the rational function has a pole at a nontrivial {0}-th root of unity")]
    PoleAtRoot(u64),
    #[error("gcd({0}, {1}) != 1")]
    NotCoprime(u64, u64),
    #[error("order and arguments must be positive")]
    NonPositive,
    #[error(transparent)]
    Pfd(#[from] PfdError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `d(n; a_1, ..., a_m)` with `gcd(n, a_i) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DedekindInstance {
    pub n: u64,
    pub a: Vec<u64>,
}

impl DedekindInstance {
    pub fn new(n: u64, a: Vec<u64>) -> Result<Self, DedekindError> {
        if n == 0 || a.iter().any(|&x| x == 0) {
            return Err(DedekindError::NonPositive);
        }
        if let Some(&bad) = a.iter().find(|&&x| x.gcd(&n) != 1) {
            return Err(DedekindError::NotCoprime(n, bad));
        }
        Ok(DedekindInstance { n, a })
    }
}

fn t_pow_plus(a: u64, c: i64) -> QPoly {
    let mut p = UniPoly::monomial(Q::one(), a as usize);
    p = &p + &UniPoly::constant(Q::from_integer(c.into()));
    p
}

/// `1 + t + ... + t^(n-1)`.
fn cyclotomic_sum(n: u64) -> QPoly {
    UniPoly::new(vec![Q::one(); n as usize])
}

/// `sum over alpha^n = 1, alpha != 1 of R(alpha)`, computed as
/// `-n Frac(R/(t^n - 1), 1 + ... + t^(n-1))` at `t = 0`.
pub fn generalized_sum(r: &QRatFunc, n: u64) -> Result<Q, DedekindError> {
    if n == 0 {
        return Err(DedekindError::NonPositive);
    }
    if n == 1 {
        return Ok(Q::zero());
    }
    let p = cyclotomic_sum(n);
    if !UniPoly::gcd(r.den(), &p).is_one() {
        return Err(DedekindError::PoleAtRoot(n));
    }
    let d = r.den() * &t_pow_plus(n, -1);
    let part = frac_at(r.num(), &d, &p)?;
    let at0 = part.numerator.coeff(0) / p.coeff(0);
    Ok(-Q::from_integer(n.into()) * at0)
}

/// `prod (t^a_i + 1)/(t^a_i - 1)`.
pub fn dedekind_function(a: &[u64]) -> Result<QRatFunc, DedekindError> {
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for &ai in a {
        num = &num * &t_pow_plus(ai, 1);
        den = &den * &t_pow_plus(ai, -1);
    }
    Ok(QRatFunc::new(num, den)?)
}

pub fn dedekind_sum(inst: &DedekindInstance) -> Result<Q, DedekindError> {
    generalized_sum(&dedekind_function(&inst.a)?, inst.n)
}

/// Both sides of Zagier's reciprocity law for one argument list.
#[derive(Clone, Debug, PartialEq)]
pub struct ReciprocityReport {
    /// `sum_j d(a_j; a without a_j) / a_j`.
    pub lhs: Q,
    /// `(1/2) Frac(F, (t-1)^(m+1))` at `t = 0`.
    pub frac_term: Q,
    /// `(1 - F(0))/2`, which vanishes only for an even number of arguments.
    pub correction: Q,
    pub rhs: Q,
    pub equal: bool,
}

/// Checks the reciprocity law for pairwise coprime `a_0..a_m`.
///
/// Setting `t = 0` in `F = Poly(F) + Frac(F, (t-1)^(m+1)) + sum_i Frac(F, p_i)`
/// with `Poly(F) = 1` gives `F(0) = 1 + Frac(F,(t-1)^(m+1))(0) - 2 lhs`, and
/// `F(0) = (-1)^(m+1)`.
pub fn reciprocity_check(a: &[u64]) -> Result<ReciprocityReport, DedekindError> {
    if a.is_empty() || a.iter().any(|&x| x == 0) {
        return Err(DedekindError::NonPositive);
    }
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i].gcd(&a[j]) != 1 {
                return Err(DedekindError::NotCoprime(a[i], a[j]));
            }
        }
    }
    let mut lhs = Q::zero();
    for j in 0..a.len() {
        let rest: Vec<u64> = a.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, &v)| v).collect();
        let d = dedekind_sum(&DedekindInstance::new(a[j], rest)?)?;
        lhs = lhs + d / Q::from_integer(a[j].into());
    }
    let f = dedekind_function(a)?;
    let order = a.len();
    // move the pole at 1 to the origin, read off the block, move back, set t = 0
    let one = Q::one();
    let (tn, td) = translate(f.num(), f.den(), &one);
    let block = frac_at_origin(&tn, &td, order)?;
    let back = block.numerator.translate(&-one.clone());
    let sign = if order % 2 == 0 { Q::one() } else { -Q::one() };
    let at0 = back.coeff(0) * sign.clone();
    let half = Q::new(1.into(), 2.into());
    let frac_term = at0 * half.clone();
    let correction = (Q::one() - sign) * half;
    let rhs = frac_term.clone() + correction.clone();
    Ok(ReciprocityReport {
        equal: lhs == rhs,
        lhs,
        frac_term,
        correction,
        rhs,
    })
}

/// Exact value as a float, for comparisons with numerical evaluations.
pub fn to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
