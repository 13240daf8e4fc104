use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::AlgebraError;
use crate::field::Field;

/// Dense univariate polynomial `c[0] + c[1] t + ...` over a field.
///
/// Invariant: no trailing zero coefficients, so the zero polynomial has an
/// empty coefficient list and its degree is `None`. `None < Some(_)` under
/// `Option`'s ordering, which is exactly the "degree of zero is minus
/// infinity" convention.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> UniPoly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(K::one(), 1)
    }

    pub fn monomial(c: K, deg: usize) -> Self {
        let mut v = vec![K::zero(); deg + 1];
        v[deg] = c;
        Self::new(v)
    }

    /// `t - a`
    pub fn linear_root(a: K) -> Self {
        Self::new(vec![-a, K::one()])
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| K::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn lc(&self) -> K {
        self.coeffs.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![K::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * K::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn divmod(&self, d: &Self) -> Result<(Self, Self), AlgebraError> {
        let dd = d.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lc_inv = d
            .lc()
            .inv()
            .ok_or_else(|| AlgebraError::NotInvertible(d.lc().to_string()))?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![K::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].clone() * lc_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].clone() - c.clone() * dc.clone();
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self, AlgebraError> {
        Ok(self.divmod(d)?.1)
    }

    pub fn exact_div(&self, d: &Self) -> Result<Self, AlgebraError> {
        let (q, r) = self.divmod(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::NotExact(r.to_string()))
        }
    }

    /// Monic gcd (zero when both inputs vanish).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Returns `(g, u, v)` with `g` monic and `u a + v b = g`.
    pub fn ext_gcd(a: &Self, b: &Self) -> Result<(Self, Self, Self), AlgebraError> {
        if a.is_zero() && b.is_zero() {
            return Err(AlgebraError::BothZero);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0
            .lc()
            .inv()
            .ok_or_else(|| AlgebraError::NotInvertible(r0.lc().to_string()))?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Inverse of `self` modulo `m`, if they are coprime.
    pub fn inv_mod(&self, m: &Self) -> Result<Self, AlgebraError> {
        let (g, u, _) = Self::ext_gcd(&self.rem(m)?, m)?;
        if !g.is_one() {
            return Err(AlgebraError::NotInvertible(format!(
                "{} shares the factor {} with the modulus",
                self, g
            )));
        }
        u.rem(m)
    }

    /// Translation `p(t) -> p(t + b)`.
    pub fn translate(&self, b: &K) -> Self {
        // Horner in the shifted variable: p(t+b) = (...(c_n (t+b) + c_{n-1})(t+b) ...)
        let tb = Self::new(vec![b.clone(), K::one()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &tb) + &Self::constant(c.clone());
        }
        acc
    }

    /// `t^n p(1/t)`, requires `n >= deg p`.
    pub fn reverse(&self, n: usize) -> Self {
        let mut v = vec![K::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[n - i] = c.clone();
        }
        Self::new(v)
    }

    /// Reduction modulo `t^m`.
    pub fn truncate(&self, m: usize) -> Self {
        Self::new(self.coeffs.iter().take(m).cloned().collect())
    }

    pub fn mul_trunc(&self, other: &Self, m: usize) -> Self {
        let mut v = vec![K::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate().take(m) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(m - i) {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(v)
    }

    /// The power series `self / den` truncated mod `t^m`, by long division of
    /// truncated series. Requires `den(0) != 0`.
    pub fn series_div(&self, den: &Self, m: usize) -> Result<Self, AlgebraError> {
        let d0 = den.coeff(0);
        let d0_inv = d0
            .inv()
            .ok_or_else(|| AlgebraError::NotInvertible("denominator vanishes at 0".into()))?;
        let mut out: Vec<K> = Vec::with_capacity(m);
        for n in 0..m {
            let mut acc = self.coeff(n);
            for k in 1..=n.min(den.coeffs.len().saturating_sub(1)) {
                acc = acc - den.coeffs[k].clone() * out[n - k].clone();
            }
            out.push(acc * d0_inv.clone());
        }
        Ok(Self::new(out))
    }

    /// Exact `t`-adic valuation (index of the lowest nonzero coefficient).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Render with a chosen variable name, ascending powers.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, i),
            };
            parts.push(coeff_times(c, &mono));
        }
        join_signed(&parts)
    }
}

/// Format `c * mono`, omitting unit coefficients and parenthesizing compound
/// coefficients.
pub(crate) fn coeff_times<K: Field>(c: &K, mono: &str) -> String {
    let s = c.to_string();
    if mono.is_empty() {
        return if is_compound(&s) { format!("({})", s) } else { s };
    }
    if c.is_one() {
        return mono.to_string();
    }
    if (-c.clone()).is_one() {
        return format!("-{}", mono);
    }
    if is_compound(&s) {
        format!("({})*{}", s, mono)
    } else {
        format!("{}*{}", s, mono)
    }
}

fn is_compound(s: &str) -> bool {
    s.char_indices().skip(1).any(|(_, ch)| ch == '+' || ch == '-')
}

pub(crate) fn join_signed(parts: &[String]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 && !p.starts_with('-') {
            out.push('+');
        }
        out.push_str(p);
    }
    out
}

impl<K: Field> fmt::Display for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("t"))
    }
}

impl<'a, K: Field> Add<&'a UniPoly<K>> for &'a UniPoly<K> {
    type Output = UniPoly<K>;
    fn add(self, rhs: &'a UniPoly<K>) -> UniPoly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, K: Field> Sub<&'a UniPoly<K>> for &'a UniPoly<K> {
    type Output = UniPoly<K>;
    fn sub(self, rhs: &'a UniPoly<K>) -> UniPoly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, K: Field> Mul<&'a UniPoly<K>> for &'a UniPoly<K> {
    type Output = UniPoly<K>;
    fn mul(self, rhs: &'a UniPoly<K>) -> UniPoly<K> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(v)
    }
}

impl<K: Field> Neg for &UniPoly<K> {
    type Output = UniPoly<K>;
    fn neg(self) -> UniPoly<K> {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<K: Field> Add for UniPoly<K> {
    type Output = UniPoly<K>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<K: Field> Sub for UniPoly<K> {
    type Output = UniPoly<K>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<K: Field> Mul for UniPoly<K> {
    type Output = UniPoly<K>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<K: Field> Neg for UniPoly<K> {
    type Output = UniPoly<K>;
    fn neg(self) -> Self {
        -&self
    }
}
