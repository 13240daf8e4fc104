use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::field::Field;
use crate::poly::UniPoly;

/// A univariate rational function `num/den`, kept reduced by a univariate
/// gcd after every operation with a monic denominator.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<K> {
    num: UniPoly<K>,
    den: UniPoly<K>,
}

impl<K: Field> RatFunc<K> {
    pub fn new(num: UniPoly<K>, den: UniPoly<K>) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(p: UniPoly<K>) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::from_poly(UniPoly::x())
    }

    fn reduce(num: UniPoly<K>, den: UniPoly<K>) -> Self {
        if num.is_zero() {
            return RatFunc {
                num,
                den: UniPoly::one(),
            };
        }
        let g = UniPoly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lc = den.lc();
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &UniPoly<K> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<K> {
        &self.den
    }

    pub fn eval(&self, x: &K) -> Result<K, AlgebraError> {
        let d = self.den.eval(x);
        let dinv = d
            .inv()
            .ok_or_else(|| AlgebraError::NotInvertible(format!("pole at {}", x)))?;
        Ok(self.num.eval(x) * dinv)
    }

    /// Order of vanishing at `t = 0` (negative for a pole); `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        let vn = self.num.valuation()? as i64;
        let vd = self.den.valuation().expect("nonzero denominator") as i64;
        Some(vn - vd)
    }

    /// Power series coefficients `[t^0..t^m)`; requires `den(0) != 0`.
    pub fn series(&self, m: usize) -> Result<Vec<K>, AlgebraError> {
        let s = self.num.series_div(&self.den, m)?;
        Ok((0..m).map(|i| s.coeff(i)).collect())
    }

    /// Display with a chosen variable, scaling so the denominator's lowest
    /// coefficient is 1 (the natural form for generating functions).
    pub fn display(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.display(var);
        }
        let low = self.den.coeff(self.den.valuation().unwrap_or(0));
        let inv = low.inv().expect("nonzero");
        let num = self.num.scale(&inv);
        let den = self.den.scale(&inv);
        let ns = num.display(var);
        let ns = if num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            format!("({})", ns)
        } else {
            ns
        };
        format!("{}/({})", ns, den.display(var))
    }
}

impl<K: Field> fmt::Display for RatFunc<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("t"))
    }
}

impl<K: Field> Add for RatFunc<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::reduce(&self.num + &rhs.num, self.den);
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::reduce(num, &self.den * &rhs.den)
    }
}

impl<K: Field> Sub for RatFunc<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Field> Mul for RatFunc<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<K: Field> Neg for RatFunc<K> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl<K: Field> Zero for RatFunc<K> {
    fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<K: Field> One for RatFunc<K> {
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
}

impl<K: Field> Field for RatFunc<K> {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }

    fn from_rational(q: &BigRational) -> Self {
        Self::constant(K::from_rational(q))
    }
}
