//! Partial fractions without linear algebra.
//!
//! Every routine here computes the fractional part of `N/D` at one factor
//! `D1` directly: either from cofactors `s_i = (D_i)^{-1} mod D1` (one
//! extended gcd per pair of factors, reducing mod `D1` after each product),
//! or, when `D1` is a power of `t`, as a truncated power series. Translation
//! `p(t) -> p(t+b)` moves any linear factor to the origin.

use exact_algebra::{binomial, AlgebraError, Field, Modulus, QuotientElem, UniPoly, Q};
use num_traits::Zero;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PfdError {
    #[error("factors {i} and {j} are not coprime (common factor {gcd})")]
    NotCoprime { i: usize, j: usize, gcd: String },
    #[error("the factors do not multiply to the denominator")]
    ProductMismatch,
    #[error("factor {0} does not divide the denominator")]
    NotADivisor(String),
    #[error("denominator is not t^{m} times a unit at 0")]
    NotOriginPower { m: usize },
    #[error("repeated root {0} in the root list")]
    RepeatedRoot(String),
    #[error("modulus does not divide the denominator")]
    PrimeNotPresent,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `N/D = polynomial_part + sum numerator_i / factor_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct PPFraction<K> {
    pub polynomial_part: UniPoly<K>,
    pub parts: Vec<FracPart<K>>,
}

/// A proper fraction `numerator / factor`.
#[derive(Clone, Debug, PartialEq)]
pub struct FracPart<K> {
    pub numerator: UniPoly<K>,
    pub factor: UniPoly<K>,
}

impl<K: Field> FracPart<K> {
    pub fn zero(factor: UniPoly<K>) -> Self {
        FracPart {
            numerator: UniPoly::zero(),
            factor,
        }
    }

    /// Value of the fraction at `t = x` (the factor must not vanish there).
    pub fn eval(&self, x: &K) -> Result<K, PfdError> {
        let d = self.factor.eval(x);
        let inv = d
            .inv()
            .ok_or_else(|| AlgebraError::NotInvertible(format!("factor vanishes at {}", x)))?;
        Ok(self.numerator.eval(x) * inv)
    }
}

impl<K: Field> PPFraction<K> {
    /// Clears denominators: checks `P*D + sum r_i * D/D_i == N`.
    pub fn reassembles_to(&self, n: &UniPoly<K>, d: &UniPoly<K>) -> bool {
        let mut acc = &self.polynomial_part * d;
        for part in &self.parts {
            match d.exact_div(&part.factor) {
                Ok(co) => acc = &acc + &(&part.numerator * &co),
                Err(_) => return false,
            }
        }
        &acc == n
    }
}

fn check_coprime<K: Field>(factors: &[&UniPoly<K>]) -> Result<(), PfdError> {
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            let g = UniPoly::gcd(factors[i], factors[j]);
            if !g.is_one() {
                return Err(PfdError::NotCoprime {
                    i,
                    j,
                    gcd: g.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// `Frac(N / (D1 * others), D1)` from pairwise cofactors.
pub fn frac_at_cofactors<K: Field>(
    n: &UniPoly<K>,
    d1: &UniPoly<K>,
    others: &[UniPoly<K>],
) -> Result<FracPart<K>, PfdError> {
    if d1.degree() == Some(0) {
        return Ok(FracPart::zero(d1.clone()));
    }
    let mut r = n.rem(d1)?;
    for o in others {
        let s = o.inv_mod(d1).map_err(|_| PfdError::NotCoprime {
            i: 0,
            j: 1,
            gcd: UniPoly::gcd(o, d1).to_string(),
        })?;
        r = (&r * &s).rem(d1)?;
    }
    Ok(FracPart {
        numerator: r,
        factor: d1.clone(),
    })
}

/// The fractional part of `N/D` at the factor `D1`, where `D1 | D` and
/// `gcd(D1, D/D1) = 1`.
pub fn frac_at<K: Field>(n: &UniPoly<K>, d: &UniPoly<K>, d1: &UniPoly<K>) -> Result<FracPart<K>, PfdError> {
    let complement = d
        .exact_div(d1)
        .map_err(|_| PfdError::NotADivisor(d1.to_string()))?;
    check_coprime(&[d1, &complement])?;
    frac_at_cofactors(n, d1, &[complement])
}

/// `Frac(N/D, t^m)` where `D = t^m E`, `E(0) != 0`: the numerator is the
/// truncation of the power series `N/E` below `t^m`.
pub fn frac_at_origin<K: Field>(n: &UniPoly<K>, d: &UniPoly<K>, m: usize) -> Result<FracPart<K>, PfdError> {
    if d.valuation() != Some(m) {
        return Err(PfdError::NotOriginPower { m });
    }
    let e = UniPoly::new(d.coeffs()[m..].to_vec());
    let numerator = n.series_div(&e, m)?;
    Ok(FracPart {
        numerator,
        factor: UniPoly::monomial(K::one(), m),
    })
}

/// Translation `tau_b: f(t) -> f(t + b)` applied to a fraction.
pub fn translate<K: Field>(n: &UniPoly<K>, d: &UniPoly<K>, b: &K) -> (UniPoly<K>, UniPoly<K>) {
    (n.translate(b), d.translate(b))
}

/// `Frac(N/D, D1) = tau_{-b} Frac(tau_b N/D, tau_b D1)`. When `tau_b D1` is a
/// power of `t` the inner step is a series truncation.
pub fn conjugated_frac<K: Field>(
    n: &UniPoly<K>,
    d: &UniPoly<K>,
    d1: &UniPoly<K>,
    b: &K,
) -> Result<FracPart<K>, PfdError> {
    let (tn, td) = translate(n, d, b);
    let td1 = d1.translate(b);
    let inner = match td1.valuation() {
        Some(m) if td1.degree() == Some(m) && m > 0 => {
            let f = frac_at_origin(&tn, &td, m)?;
            // rescale if tau_b D1 = c t^m with c != 1
            let c = td1.lc();
            FracPart {
                numerator: f.numerator.scale(&c),
                factor: td1,
            }
        }
        _ => frac_at(&tn, &td, &td1)?,
    };
    let mb = -b.clone();
    Ok(FracPart {
        numerator: inner.numerator.translate(&mb),
        factor: inner.factor.translate(&mb),
    })
}

/// Splits `N/D` along pairwise coprime `factors` whose product is `D` up to
/// a nonzero constant.
pub fn ppfraction_split<K: Field>(
    n: &UniPoly<K>,
    d: &UniPoly<K>,
    factors: &[UniPoly<K>],
) -> Result<PPFraction<K>, PfdError> {
    let refs: Vec<&UniPoly<K>> = factors.iter().collect();
    check_coprime(&refs)?;
    let prod = factors.iter().fold(UniPoly::one(), |acc, f| &acc * f);
    let (c, r) = d.divmod(&prod)?;
    if !r.is_zero() || c.degree() != Some(0) {
        return Err(PfdError::ProductMismatch);
    }
    let c_inv = c.coeff(0).inv().expect("nonzero constant");
    let n = n.scale(&c_inv);
    let (poly, _) = n.divmod(&prod)?;
    let mut parts = Vec::with_capacity(factors.len());
    for (i, f) in factors.iter().enumerate() {
        let others: Vec<UniPoly<K>> = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        parts.push(frac_at_cofactors(&n, f, &others)?);
    }
    Ok(PPFraction {
        polynomial_part: poly,
        parts,
    })
}

/// Numerators `(A, B)` with `1/(p^m q^n) = A/p^m + B/q^n`, both proper.
///
/// With `1/(pq) = r/p + s/q`:
/// `A = sum_{l<m} C(n-1+l, l) r^n s^l p^l`, `B = sum_{j<n} C(m-1+j, j) r^j s^m q^j`.
pub fn power_split<K: Field>(
    p: &UniPoly<K>,
    q: &UniPoly<K>,
    m: u32,
    n: u32,
) -> Result<(UniPoly<K>, UniPoly<K>), PfdError> {
    let (g, u, v) = UniPoly::ext_gcd(p, q)?;
    if !g.is_one() {
        return Err(PfdError::NotCoprime {
            i: 0,
            j: 1,
            gcd: g.to_string(),
        });
    }
    // u p + v q = 1, so 1/(pq) = v/p + u/q
    let (r, s) = (v, u);
    let mut a = UniPoly::zero();
    for l in 0..m {
        let c = K::from_rational(&Q::from_integer(binomial((n - 1 + l) as i64, l as u64)));
        let term = &(&r.pow(n) * &s.pow(l)) * &p.pow(l);
        a = &a + &term.scale(&c);
    }
    let mut b = UniPoly::zero();
    for j in 0..n {
        let c = K::from_rational(&Q::from_integer(binomial((m - 1 + j) as i64, j as u64)));
        let term = &(&r.pow(j) * &s.pow(m)) * &q.pow(j);
        b = &b + &term.scale(&c);
    }
    Ok((a.rem(&p.pow(m))?, b.rem(&q.pow(n))?))
}

/// Full expansion over linear factors: `A[i][j-1]` is the coefficient of
/// `1/(t - a_i)^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearPfd<K> {
    pub polynomial_part: UniPoly<K>,
    pub blocks: Vec<(K, Vec<K>)>,
}

impl<K: Field> LinearPfd<K> {
    /// Rebuilds the numerator over `prod (t-a_i)^{m_i}` and compares.
    pub fn reassembles_to(&self, n: &UniPoly<K>) -> bool {
        let d = self
            .blocks
            .iter()
            .fold(UniPoly::one(), |acc, (a, cs)| &acc * &UniPoly::linear_root(a.clone()).pow(cs.len() as u32));
        let mut acc = &self.polynomial_part * &d;
        for (a, cs) in &self.blocks {
            let lin = UniPoly::linear_root(a.clone());
            let full = lin.pow(cs.len() as u32);
            let co = d.exact_div(&full).expect("factor of d");
            for (j, c) in cs.iter().enumerate() {
                let piece = &co * &lin.pow((cs.len() - 1 - j) as u32);
                acc = &acc + &piece.scale(c);
            }
        }
        &acc == n
    }
}

/// Denominator `prod (t - a_i)^{m_i}` from a root list.
pub fn denominator_from_roots<K: Field>(roots: &[(K, u32)]) -> UniPoly<K> {
    roots
        .iter()
        .fold(UniPoly::one(), |acc, (a, m)| &acc * &UniPoly::linear_root(a.clone()).pow(*m))
}

/// Full partial fractions of `N / prod (t-a_i)^{m_i}` via `G(t) = F(t + a_i)`
/// and one series truncation per root.
pub fn full_pfd_linear<K: Field>(n: &UniPoly<K>, roots: &[(K, u32)]) -> Result<LinearPfd<K>, PfdError> {
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            if roots[i].0 == roots[j].0 {
                return Err(PfdError::RepeatedRoot(roots[i].0.to_string()));
            }
        }
    }
    let d = denominator_from_roots(roots);
    let (poly, rem) = n.divmod(&d)?;
    let mut blocks = Vec::with_capacity(roots.len());
    for (a, m) in roots {
        let m = *m as usize;
        let (tn, td) = translate(&rem, &d, a);
        let f = frac_at_origin(&tn, &td, m)?;
        // numerator c_0 + ... + c_{m-1} t^{m-1} over t^m: c_{m-j} goes with t^{-j}
        let cs: Vec<K> = (1..=m).map(|j| f.numerator.coeff(m - j)).collect();
        blocks.push((a.clone(), cs));
    }
    Ok(LinearPfd {
        polynomial_part: poly,
        blocks,
    })
}

/// Polynomial part of `N/D` from the reversed fraction:
/// `t^{-1} P(t^{-1}) = Frac(t^{-1} R(t^{-1}), t^k)` with `k = deg N - deg D + 1`.
pub fn polynomial_part_by_reversal<K: Field>(n: &UniPoly<K>, d: &UniPoly<K>) -> Result<UniPoly<K>, PfdError> {
    let db = d.degree().ok_or(AlgebraError::DivisionByZero)?;
    let da = match n.degree() {
        None => return Ok(UniPoly::zero()),
        Some(a) => a,
    };
    if da < db {
        return Ok(UniPoly::zero());
    }
    let k = da - db + 1;
    let nrev = n.reverse(da);
    let drev = d.reverse(db).shift(k);
    let s = frac_at_origin(&nrev, &drev, k)?.numerator;
    Ok(s.reverse(k - 1))
}

/// The block `sum_{j=1}^{k} h_j(a) / (t - a)^j` of `N/D` at one root `a` of
/// the irreducible `p`, with `p^k` exactly dividing `D`.
#[derive(Clone, Debug)]
pub struct PrimeBlock {
    pub modulus: Arc<Modulus>,
    /// `coeffs[j-1] = h_j`
    pub coeffs: Vec<QuotientElem>,
}

impl PrimeBlock {
    pub fn multiplicity(&self) -> usize {
        self.coeffs.len()
    }

    /// Checks `(t-a)^k | (r - B q^k)` where `r/p^k = Frac(N/D, p^k)` over the
    /// rationals, `B/(t-a)^k` is this block and `q = p/(t-a)`.
    pub fn consistent_with(&self, r: &UniPoly<Q>) -> bool {
        let k = self.coeffs.len();
        let a = QuotientElem::root(&self.modulus);
        let lift = |p: &UniPoly<Q>| -> UniPoly<QuotientElem> {
            UniPoly::new(p.coeffs().iter().map(QuotientElem::from_rational).collect())
        };
        let lin = UniPoly::linear_root(a.clone());
        let q = lift(&self.modulus.poly).exact_div(&lin).expect("a is a root");
        let mut b = UniPoly::zero();
        for (j, h) in self.coeffs.iter().enumerate() {
            b = &b + &lin.pow((k - 1 - j) as u32).scale(h);
        }
        let diff = &lift(r) - &(&b * &q.pow(k as u32));
        diff.rem(&lin.pow(k as u32)).map(|x| x.is_zero()).unwrap_or(false)
    }
}

impl fmt::Display for PrimeBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = &self.modulus.root;
        let mut parts = Vec::new();
        for (j, h) in self.coeffs.iter().enumerate().rev() {
            if h.is_zero() {
                continue;
            }
            let pw = if j == 0 { String::new() } else { format!("^{}", j + 1) };
            parts.push(format!("({})/(t-{}){}", h, a, pw));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Fractional part at one root of a prime factor, computed in `Q[a]/(p)`.
pub fn frac_at_prime(n: &UniPoly<Q>, d: &UniPoly<Q>, p: &UniPoly<Q>, root: &str) -> Result<PrimeBlock, PfdError> {
    let modulus = Modulus::new(p.clone(), root)?;
    let pm = modulus.poly.clone();
    let mut k = 0usize;
    let mut rest = d.clone();
    while let Ok(q) = rest.exact_div(&pm) {
        rest = q;
        k += 1;
    }
    if k == 0 {
        return Err(PfdError::PrimeNotPresent);
    }
    let lift = |p: &UniPoly<Q>| -> UniPoly<QuotientElem> {
        UniPoly::new(p.coeffs().iter().map(|c| QuotientElem::new(&modulus, UniPoly::constant(c.clone()))).collect())
    };
    let a = QuotientElem::root(&modulus);
    let (tn, td) = translate(&lift(n), &lift(d), &a);
    let f = frac_at_origin(&tn, &td, k)?;
    let coeffs = (1..=k).map(|j| f.numerator.coeff(k - j)).collect();
    Ok(PrimeBlock { modulus, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::QPoly;

    #[test]
    fn split_with_single_factor() {
        let n = QPoly::from_i64s(&[4, -3, 2, 1]);
        let d = QPoly::from_i64s(&[2, -4, 1]);
        let pp = ppfraction_split(&n, &d, &[d.clone()]).unwrap();
        assert_eq!(pp.polynomial_part, QPoly::from_i64s(&[6, 1]));
        assert_eq!(pp.parts[0].numerator, QPoly::from_i64s(&[-8, 19]));
    }

    #[test]
    fn origin_truncation() {
        let n = QPoly::from_i64s(&[1, 2]);
        let d = QPoly::from_i64s(&[0, 0, 1, -4]);
        assert_eq!(frac_at_origin(&n, &d, 2).unwrap().numerator, QPoly::from_i64s(&[1, 6]));
        assert!(frac_at_origin(&n, &d, 1).is_err());
    }

    #[test]
    fn power_split_small() {
        let p = QPoly::x();
        let q = QPoly::from_i64s(&[1, -1]);
        let (a, b) = power_split(&p, &q, 2, 1).unwrap();
        assert_eq!(a, QPoly::from_i64s(&[1, 1]));
        assert_eq!(b, QPoly::one());
    }
}
