use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative field with exact, canonical elements.
///
/// `PartialEq` must be structural equality of canonical forms; every
/// implementation keeps its values normalized after each operation.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse, or `None` for zero (and for zero divisors in
    /// quotient rings whose modulus turned out not to be irreducible).
    fn inv(&self) -> Option<Self>;

    /// Embedding of the rationals.
    fn from_rational(q: &BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Binomial coefficient `C(n, k)` for any integer `n` (negative upper index
/// follows `C(n,k) = n(n-1)...(n-k+1)/k!`).
pub fn binomial(n: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    let q = num / den;
    debug_assert!(!q.is_negative() || n < 0);
    q
}
