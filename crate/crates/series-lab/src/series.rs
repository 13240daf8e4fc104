use crate::SeriesError;
use exact_algebra::{int, Laurent, Q};
use laurent_order::VariableOrder;
use num_traits::{One, Signed};
use omega_engine::{cancel_common, ElliottRational};
use serde_json::{json, Value};
use std::fmt;

/// A power series in one variable, cut after `t^order`, whose coefficients
/// are Elliott-rational functions over a common ring of other variables.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    pub variable: String,
    pub order: usize,
    pub coeffs: Vec<ElliottRational>,
    pub ring: VariableOrder,
}

impl TruncatedSeries {
    pub fn zero(variable: &str, ring: VariableOrder, order: usize) -> Self {
        TruncatedSeries {
            variable: variable.to_string(),
            order,
            coeffs: vec![ElliottRational::zero(ring.clone()); order + 1],
            ring,
        }
    }

    pub fn one(variable: &str, ring: VariableOrder, order: usize) -> Self {
        Self::constant(ElliottRational::one(ring.clone()), variable, order)
    }

    /// The coefficient `c` placed at `t^0`.
    pub fn constant(c: ElliottRational, variable: &str, order: usize) -> Self {
        let mut s = Self::zero(variable, c.order.clone(), order);
        s.coeffs[0] = c;
        s
    }

    /// `c * t^k` (zero when `k` exceeds the order).
    pub fn monomial(c: ElliottRational, k: usize, variable: &str, order: usize) -> Self {
        let mut s = Self::zero(variable, c.order.clone(), order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads with zeros or cuts to `order + 1` coefficients.
    pub fn from_coeffs(variable: &str, ring: VariableOrder, order: usize, coeffs: Vec<ElliottRational>) -> Self {
        let mut s = Self::zero(variable, ring, order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[k] = cancel_common(&c);
        }
        s
    }

    pub fn coeff(&self, k: usize) -> &ElliottRational {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Coefficients as rationals, when every one is constant.
    pub fn constants(&self) -> Option<Vec<Q>> {
        self.coeffs.iter().map(|c| c.as_constant()).collect()
    }

    /// Numerator coefficient of the monomial `exp` in `t^k`, for series
    /// with polynomial coefficients.
    pub fn count(&self, k: usize, exp: &[i64]) -> Option<Q> {
        let c = self.coeffs.get(k)?;
        if !c.is_polynomial() {
            return None;
        }
        Some(c.numerator.coeff(exp))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            variable: self.variable.clone(),
            order,
            coeffs: self.coeffs[..=order].to_vec(),
            ring: self.ring.clone(),
        }
    }

    fn check(&self, other: &TruncatedSeries) -> Result<(), SeriesError> {
        if self.variable != other.variable || self.ring.vars() != other.ring.vars() {
            return Err(SeriesError::Mismatch(format!(
                "series in {} over {:?} against {} over {:?}",
                self.variable,
                self.ring.vars(),
                other.variable,
                other.ring.vars()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<Self, SeriesError> {
        self.check(other)?;
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|k| self.coeffs[k].add(&other.coeffs[k])).collect();
        Ok(self.rebuild(order, coeffs))
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, q: &Q) -> Self {
        self.map(|c| c.scale(q))
    }

    /// Multiplies every coefficient by the same function.
    pub fn mul_coeff(&self, f: &ElliottRational) -> Self {
        self.map(|c| c.mul(f))
    }

    /// Multiplies by `t^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(&self.variable, self.ring.clone(), self.order);
        for j in 0..=self.order {
            if j + k <= self.order {
                out.coeffs[j + k] = self.coeffs[j].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<Self, SeriesError> {
        self.check(other)?;
        let order = self.order.min(other.order);
        let mut coeffs = vec![ElliottRational::zero(self.ring.clone()); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !other.coeffs[j].is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
                }
            }
        }
        Ok(self.rebuild(order, coeffs))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.variable, self.ring.clone(), self.order);
        for _ in 0..e {
            out = out.mul(self).expect("same ring");
        }
        out
    }

    /// `1/self`; the constant coefficient must have at most two terms in its
    /// numerator.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::NotInvertible(format!("{} has zero constant term", self.variable)));
        }
        let inv0 = c0.inverse().map_err(|_| SeriesError::NotInvertible(c0.display()))?;
        let mut out = vec![inv0.clone()];
        for n in 1..=self.order {
            let mut acc = ElliottRational::zero(self.ring.clone());
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&out[n - k]));
                }
            }
            out.push(acc.mul(&inv0).neg());
        }
        Ok(self.rebuild(self.order, out))
    }

    pub fn div(&self, other: &TruncatedSeries) -> Result<Self, SeriesError> {
        self.mul(&other.inverse()?)
    }

    /// Truncated logarithm of a series with constant term 1, from
    /// `n L_n = n h_n - sum_{k<n} k L_k h_{n-k}`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].as_constant() != Some(Q::one()) {
            return Err(SeriesError::NotUnit(self.coeffs[0].display()));
        }
        let mut l: Vec<ElliottRational> = vec![ElliottRational::zero(self.ring.clone())];
        for n in 1..=self.order {
            let mut acc = self.coeffs[n].scale(&int(n as i64));
            for k in 1..n {
                if !l[k].is_zero() && !self.coeffs[n - k].is_zero() {
                    acc = acc.sub(&l[k].mul(&self.coeffs[n - k]).scale(&int(k as i64)));
                }
            }
            l.push(acc.scale(&Q::new(1.into(), (n as i64).into())));
        }
        Ok(self.rebuild(self.order, l))
    }

    /// Truncated exponential of a series with zero constant term, from
    /// `n E_n = sum_{k<=n} k L_k E_{n-k}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NotUnit(format!("exp needs a zero constant term, got {}", self.coeffs[0])));
        }
        let mut e: Vec<ElliottRational> = vec![ElliottRational::one(self.ring.clone())];
        for n in 1..=self.order {
            let mut acc = ElliottRational::zero(self.ring.clone());
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&e[n - k]).scale(&int(k as i64)));
                }
            }
            e.push(acc.scale(&Q::new(1.into(), (n as i64).into())));
        }
        Ok(self.rebuild(self.order, e))
    }

    /// Substitutes the series `value` (same series variable and ring) for
    /// the ring variable `var`, in which every coefficient must be a
    /// polynomial: `sum_n t^n sum_k c_{n,k} var^k -> sum_n t^n sum_k c_{n,k} value^k`.
    pub fn substitute(&self, var: &str, value: &TruncatedSeries) -> Result<Self, SeriesError> {
        self.check(value)?;
        let i = self.ring.index_of(var).map_err(omega_engine::OmegaError::from)?;
        let order = self.order.min(value.order);
        let mut powers: Vec<TruncatedSeries> = vec![Self::one(&self.variable, self.ring.clone(), order)];
        let mut out = Self::zero(&self.variable, self.ring.clone(), order);
        for n in 0..=order {
            let c = &self.coeffs[n];
            if c.is_zero() {
                continue;
            }
            if c.denominator.iter().any(|f| f.lhs.exp[i] != 0 || f.rhs.exp[i] != 0) {
                return Err(SeriesError::NotPolynomialIn(var.to_string(), c.display()));
            }
            let mut by_power: std::collections::BTreeMap<i64, Laurent> = std::collections::BTreeMap::new();
            for (e, q) in c.numerator.terms() {
                if e[i] < 0 {
                    return Err(SeriesError::NotPolynomialIn(var.to_string(), c.display()));
                }
                let mut base = e.clone();
                base[i] = 0;
                by_power
                    .entry(e[i])
                    .or_insert_with(|| Laurent::zero(self.ring.len()))
                    .add_term(base, q.clone());
            }
            for (k, num) in by_power {
                while powers.len() <= k as usize {
                    let next = powers.last().expect("nonempty").mul(value)?;
                    powers.push(next.truncate(order));
                }
                let coeff = ElliottRational {
                    numerator: num,
                    denominator: c.denominator.clone(),
                    order: self.ring.clone(),
                };
                let term = powers[k as usize].mul_coeff(&coeff).shift(n);
                out = out.add(&term)?;
            }
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient.
    pub fn map(&self, f: impl Fn(&ElliottRational) -> ElliottRational) -> Self {
        let coeffs = self.coeffs.iter().map(f).collect();
        self.rebuild(self.order, coeffs)
    }

    /// Applies a fallible map to every coefficient; the results may live
    /// over a different ring, given as `ring`.
    pub fn try_map(
        &self,
        ring: VariableOrder,
        f: impl Fn(&ElliottRational) -> Result<ElliottRational, SeriesError>,
    ) -> Result<Self, SeriesError> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(&self.variable, ring, self.order, coeffs))
    }

    fn rebuild(&self, order: usize, coeffs: Vec<ElliottRational>) -> Self {
        TruncatedSeries {
            variable: self.variable.clone(),
            order,
            coeffs: coeffs.iter().map(cancel_common).collect(),
            ring: self.ring.clone(),
        }
    }

    /// Whether both series agree coefficientwise as rational functions.
    pub fn same_series(&self, other: &TruncatedSeries) -> bool {
        self.variable == other.variable
            && self.order == other.order
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a.same_function(b))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "variable": self.variable,
            "order": self.order,
            "ring": self.ring.vars(),
            "coefficients": self.coeffs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = match k {
                0 => String::new(),
                1 => self.variable.clone(),
                _ => format!("{}^{}", self.variable, k),
            };
            // a single monomial keeps its sign outside; anything longer is bracketed
            let (negative, body) = match c.as_constant() {
                Some(q) => (q.is_negative(), q.abs().to_string()),
                None if c.numerator.len() > 1 || !c.denominator.is_empty() => (false, format!("({})", c.display())),
                None => {
                    let d = c.display();
                    match d.strip_prefix('-') {
                        Some(rest) => (true, rest.to_string()),
                        None => (false, d),
                    }
                }
            };
            let term = match (body.as_str(), power.is_empty()) {
                (_, true) => body.clone(),
                ("1", false) => power,
                _ => format!("{}*{}", body, power),
            };
            out.push_str(match (out.is_empty(), negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            });
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{} + O({}^{})", out, self.variable, self.order + 1)
    }
}
