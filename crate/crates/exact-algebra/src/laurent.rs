use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};


use crate::error::AlgebraError;
use crate::field::Field;
use crate::poly::{coeff_times, join_signed};

/// Exponent vector, one entry per ambient variable.
pub type Exp = Vec<i64>;

/// Graded order with reverse-lex tie break: total degree first, then the
/// entry at the highest differing index decides.
pub fn cmp_graded_revlex(a: &[i64], b: &[i64]) -> Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

/// Sparse multivariate Laurent polynomial.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly<K> {
    nvars: usize,
    terms: BTreeMap<Exp, K>,
}

impl<K: Field> LaurentPoly<K> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, K::one())
    }

    pub fn constant(nvars: usize, c: K) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exp: Exp, c: K) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// The `i`-th variable.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, K::one())
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Exp, K)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &K)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exp, K)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, e: &[i64]) -> K {
        self.terms.get(e).cloned().unwrap_or_else(K::zero)
    }

    /// The single term, if this is a monomial.
    pub fn as_monomial(&self) -> Option<(&Exp, &K)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&x| x == 0))
    }

    /// Constant coefficient (the coefficient of the zero exponent).
    pub fn constant_coeff(&self) -> K {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn add_term(&mut self, e: Exp, c: K) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiply by `c * x^e`.
    pub fn mul_monomial(&self, e: &[i64], c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (add_exp(k, e), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Componentwise minimum exponent over the support (zeros for zero).
    pub fn min_exponents(&self) -> Exp {
        let mut m: Option<Exp> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(mm) => mm.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.nvars])
    }

    pub fn max_exponents(&self) -> Exp {
        let mut m: Option<Exp> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(mm) => mm.iter().zip(e).map(|(a, b)| *a.max(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.nvars])
    }

    /// Whether variable `i` occurs with a nonzero exponent.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] != 0)
    }

    /// Exact quotient `self / d` in the Laurent ring.
    ///
    /// Both sides are shifted into the polynomial ring with no monomial
    /// content, then divided by repeated leading-term reduction under the
    /// graded reverse-lex order. Division by a single polynomial is exact iff
    /// that reduction leaves no remainder.
    pub fn exact_div(&self, d: &Self) -> Result<Self, AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.nvars != d.nvars {
            return Err(AlgebraError::DimensionMismatch(self.nvars, d.nvars));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let dmin = d.min_exponents();
        let nmin = self.min_exponents();
        let neg_d: Exp = dmin.iter().map(|x| -x).collect();
        let neg_n: Exp = nmin.iter().map(|x| -x).collect();
        let dd = d.mul_monomial(&neg_d, &K::one());
        let mut r = self.mul_monomial(&neg_n, &K::one());
        let (lead_e, lead_c) = dd
            .terms
            .iter()
            .max_by(|a, b| cmp_graded_revlex(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let lead_inv = lead_c.inv().expect("nonzero");
        let mut q = Self::zero(self.nvars);
        while let Some((e, c)) = r
            .terms
            .iter()
            .max_by(|a, b| cmp_graded_revlex(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            let shift: Exp = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            if shift.iter().any(|&s| s < 0) {
                return Err(AlgebraError::NotExact(Self::monomial(e, c).to_string()));
            }
            let f = c * lead_inv.clone();
            r = &r - &dd.mul_monomial(&shift, &f);
            q.add_term(shift, f);
        }
        let back: Exp = nmin.iter().zip(&dmin).map(|(a, b)| a - b).collect();
        Ok(q.mul_monomial(&back, &K::one()))
    }

    /// Replace every variable `x_i` by the monomial `x^{images[i]}` in a ring
    /// with `target_nvars` variables.
    pub fn substitute_monomials(&self, images: &[Exp], target_nvars: usize) -> Result<Self, AlgebraError> {
        if images.len() != self.nvars {
            return Err(AlgebraError::DimensionMismatch(images.len(), self.nvars));
        }
        if let Some(bad) = images.iter().find(|im| im.len() != target_nvars) {
            return Err(AlgebraError::DimensionMismatch(bad.len(), target_nvars));
        }
        let mut out = Self::zero(target_nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0i64; target_nvars];
            for (i, &k) in e.iter().enumerate() {
                if k != 0 {
                    for (j, &v) in images[i].iter().enumerate() {
                        ne[j] += k * v;
                    }
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Substitute the field value `v` for variable `i`; the variable keeps
    /// its slot with exponent zero.
    pub fn eval_var(&self, i: usize, v: &K) -> Result<Self, AlgebraError> {
        let inv = v.inv();
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[i];
            let factor = if k >= 0 {
                v.pow(k as u64)
            } else {
                inv.as_ref()
                    .ok_or_else(|| {
                        AlgebraError::BadSubstitution(format!(
                            "negative power of variable {} evaluated at 0",
                            i
                        ))
                    })?
                    .pow((-k) as u64)
            };
            let mut ne = e.clone();
            ne[i] = 0;
            out.add_term(ne, c.clone() * factor);
        }
        Ok(out)
    }

    /// Insert a new variable slot at position `at` (exponent zero everywhere).
    pub fn insert_var(&self, at: usize) -> Self {
        LaurentPoly {
            nvars: self.nvars + 1,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = e.clone();
                    ne.insert(at, 0);
                    (ne, c.clone())
                })
                .collect(),
        }
    }

    /// Remove variable slot `at`; every term must have exponent zero there.
    pub fn remove_var(&self, at: usize) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            if e[at] != 0 {
                return Err(AlgebraError::BadSubstitution(format!(
                    "variable {} still occurs",
                    at
                )));
            }
            let mut ne = e.clone();
            ne.remove(at);
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Terms in canonical (graded, then reverse-lex) ascending order.
    pub fn sorted_terms(&self) -> Vec<(&Exp, &K)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| cmp_graded_revlex(a.0, b.0));
        v
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| coeff_times(c, &monomial_string(e, names)))
            .collect();
        join_signed(&parts)
    }
}

pub(crate) fn add_exp(a: &[i64], b: &[i64]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `x^2*y^-1`-style rendering; empty string for the unit monomial.
pub fn monomial_string(e: &[i64], names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        let fallback = format!("x{}", i + 1);
        let name = names.get(i).unwrap_or(&fallback);
        match k {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{}^{}", name, k)),
        }
    }
    parts.join("*")
}

impl<K: Field> std::fmt::Display for LaurentPoly<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{}", i + 1)).collect();
        f.write_str(&self.display(&names))
    }
}

impl<'a, K: Field> Add<&'a LaurentPoly<K>> for &'a LaurentPoly<K> {
    type Output = LaurentPoly<K>;
    fn add(self, rhs: &'a LaurentPoly<K>) -> LaurentPoly<K> {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a, K: Field> Sub<&'a LaurentPoly<K>> for &'a LaurentPoly<K> {
    type Output = LaurentPoly<K>;
    fn sub(self, rhs: &'a LaurentPoly<K>) -> LaurentPoly<K> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a, K: Field> Mul<&'a LaurentPoly<K>> for &'a LaurentPoly<K> {
    type Output = LaurentPoly<K>;
    fn mul(self, rhs: &'a LaurentPoly<K>) -> LaurentPoly<K> {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(add_exp(e1, e2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<K: Field> Neg for &LaurentPoly<K> {
    type Output = LaurentPoly<K>;
    fn neg(self) -> LaurentPoly<K> {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl<K: Field> Add for LaurentPoly<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<K: Field> Sub for LaurentPoly<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<K: Field> Mul for LaurentPoly<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<K: Field> Neg for LaurentPoly<K> {
    type Output = Self;
    fn neg(self) -> Self {
        -&self
    }
}

impl<K: Field> LaurentPoly<K> {
    /// Sum of coefficients over exponents with `e[i] == k`, as a polynomial
    /// with that slot zeroed.
    pub fn coeff_of_var_power(&self, i: usize, k: i64) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == k {
                let mut ne = e.clone();
                ne[i] = 0;
                out.add_term(ne, c.clone());
            }
        }
        out
    }

    /// Keep only terms satisfying the predicate.
    pub fn filter(&self, mut keep: impl FnMut(&Exp) -> bool) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_zero_poly(&self) -> bool {
        self.terms.values().all(|c| c.is_zero())
    }
}
