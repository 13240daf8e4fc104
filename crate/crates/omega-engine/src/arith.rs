use crate::binomial::Monomial;
use crate::elliott::{combine, Term};
use crate::{ElliottRational, OmegaError};
use exact_algebra::{Exp, Laurent, Q};
use laurent_order::VariableOrder;
use num_traits::{One, Zero};

impl ElliottRational {
    pub fn zero(order: VariableOrder) -> Self {
        let n = order.len();
        ElliottRational {
            numerator: Laurent::zero(n),
            denominator: Vec::new(),
            order,
        }
    }

    pub fn one(order: VariableOrder) -> Self {
        Self::constant(Q::one(), order)
    }

    pub fn constant(c: Q, order: VariableOrder) -> Self {
        let n = order.len();
        ElliottRational {
            numerator: Laurent::constant(n, c),
            denominator: Vec::new(),
            order,
        }
    }

    /// The single variable `name` as a function.
    pub fn variable(name: &str, order: VariableOrder) -> Result<Self, OmegaError> {
        let i = order.index_of(name)?;
        Ok(ElliottRational {
            numerator: Laurent::var(order.len(), i),
            denominator: Vec::new(),
            order,
        })
    }

    fn assert_same_ring(&self, other: &ElliottRational) {
        assert_eq!(self.order.vars(), other.order.vars(), "operands live over different variables");
    }

    pub fn add(&self, other: &ElliottRational) -> ElliottRational {
        self.assert_same_ring(other);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        Self::from_term(combine(&[self.to_term(), other.to_term()], self.nvars()), self.order.clone())
    }

    pub fn neg(&self) -> ElliottRational {
        ElliottRational {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
            order: self.order.clone(),
        }
    }

    pub fn sub(&self, other: &ElliottRational) -> ElliottRational {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Q) -> ElliottRational {
        if c.is_zero() {
            return Self::zero(self.order.clone());
        }
        ElliottRational {
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
            order: self.order.clone(),
        }
    }

    pub fn mul_monomial(&self, exp: &[i64], c: &Q) -> ElliottRational {
        ElliottRational {
            numerator: self.numerator.mul_monomial(exp, c),
            denominator: self.denominator.clone(),
            order: self.order.clone(),
        }
    }

    pub fn mul(&self, other: &ElliottRational) -> ElliottRational {
        self.assert_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.order.clone());
        }
        let (a, b) = (self.to_term(), other.to_term());
        let mut den = a.den;
        for (k, m) in b.den {
            *den.entry(k).or_insert(0) += m;
        }
        let mut t = Term {
            num: &a.num * &b.num,
            den,
        };
        t.cancel();
        Self::from_term(t, self.order.clone())
    }

    pub fn pow(&self, e: u32) -> ElliottRational {
        let mut out = Self::one(self.order.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// `1/self`, available when the numerator has at most two terms.
    pub fn inverse(&self) -> Result<ElliottRational, OmegaError> {
        let n = self.nvars();
        let mut terms = self.numerator.terms().map(|(e, c)| Monomial::new(c.clone(), e.clone()));
        let a = terms.next().ok_or(OmegaError::ZeroDenominator)?;
        let b = terms
            .next()
            .map(|m| m.scale(&-Q::one()))
            .unwrap_or_else(|| Monomial::new(Q::zero(), vec![0; n]));
        if terms.next().is_some() {
            return Err(OmegaError::NotElliott(self.numerator.display(self.order.vars())));
        }
        let mut t = Term::from_num(self.denominator_poly());
        t.divide_by_difference(&a, &b, 1)?;
        t.cancel();
        Ok(Self::from_term(t, self.order.clone()))
    }

    /// Replaces variable `i` by the monomial `images[i]` over `order`.
    pub fn substitute_monomials(&self, images: &[Exp], order: VariableOrder) -> Result<ElliottRational, OmegaError> {
        if images.len() != self.nvars() {
            return Err(OmegaError::DimensionMismatch {
                expected: self.nvars(),
                got: images.len(),
            });
        }
        let m = order.len();
        let map = |x: &Monomial| -> Monomial {
            let mut e = vec![0i64; m];
            for (k, img) in x.exp.iter().zip(images) {
                for (slot, v) in e.iter_mut().zip(img) {
                    *slot += k * v;
                }
            }
            Monomial::new(x.coeff.clone(), e)
        };
        let mut t = Term::from_num(self.numerator.substitute_monomials(images, m)?);
        for f in &self.denominator {
            t.divide_by_difference(&map(&f.lhs), &map(&f.rhs), f.mult)?;
        }
        t.cancel();
        Ok(Self::from_term(t, order))
    }

    /// Sets variable `name` to the value `v`; the variable stays in the ring.
    pub fn eval_var(&self, name: &str, v: &Q) -> Result<ElliottRational, OmegaError> {
        let i = self.order.index_of(name)?;
        let ev = |x: &Monomial| -> Result<Monomial, OmegaError> {
            let p = Laurent::monomial(x.exp.clone(), x.coeff.clone()).eval_var(i, v)?;
            Ok(match p.as_monomial() {
                Some((e, c)) => Monomial::new(c.clone(), e.clone()),
                None => Monomial::new(Q::zero(), vec![0; self.nvars()]),
            })
        };
        let mut t = Term::from_num(self.numerator.eval_var(i, v)?);
        for f in &self.denominator {
            t.divide_by_difference(&ev(&f.lhs)?, &ev(&f.rhs)?, f.mult)?;
        }
        t.cancel();
        Ok(Self::from_term(t, self.order.clone()))
    }

    /// Partial derivative in `name`.
    pub fn derivative(&self, name: &str) -> Result<ElliottRational, OmegaError> {
        let i = self.order.index_of(name)?;
        let d = |p: &Laurent| -> Laurent {
            let mut out = Laurent::zero(p.nvars());
            for (e, c) in p.terms() {
                if e[i] != 0 {
                    let mut ne = e.clone();
                    ne[i] -= 1;
                    out.add_term(ne, c.clone() * Q::from_integer(e[i].into()));
                }
            }
            out
        };
        // (N / prod B^m)' = (N' prod B - N sum m B' prod_{j != i} B) / (prod B^m * prod B)
        let bases: Vec<Laurent> = self.denominator.iter().map(|f| f.base()).collect();
        let n = self.nvars();
        let all = bases.iter().fold(Laurent::one(n), |acc, b| &acc * b);
        let mut num = &d(&self.numerator) * &all;
        for (k, f) in self.denominator.iter().enumerate() {
            let others = bases
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .fold(Laurent::one(n), |acc, (_, b)| &acc * b);
            let piece = &(&self.numerator * &d(&bases[k])) * &others;
            num = &num - &piece.scale(&Q::from_integer(f.mult.into()));
        }
        let mut t = self.to_term();
        t.num = num;
        for f in &self.denominator {
            *t.den.entry(f.key()).or_insert(0) += 1;
        }
        t.cancel();
        Ok(Self::from_term(t, self.order.clone()))
    }

    /// Adds a variable that does not occur at position `at` of the order.
    /// Only plain orders (no weight matrix) can be extended this way.
    pub fn insert_variable(&self, name: &str, at: usize) -> Result<ElliottRational, OmegaError> {
        if self.order.rho().is_some() {
            return Err(OmegaError::Internal("cannot insert a variable into a weighted order".into()));
        }
        let mut vars: Vec<String> = self.order.vars().to_vec();
        vars.insert(at, name.to_string());
        let order = VariableOrder::new(&vars)?;
        let t = self.to_term().insert_var(at);
        Ok(Self::from_term(t, order))
    }

    /// The same function viewed over a larger ring whose variables include
    /// every current one (same relative positions are not required).
    pub fn embed(&self, order: &VariableOrder) -> Result<ElliottRational, OmegaError> {
        let m = order.len();
        let images = self
            .order
            .vars()
            .iter()
            .map(|v| {
                let j = order.index_of(v)?;
                let mut e = vec![0; m];
                e[j] = 1;
                Ok(e)
            })
            .collect::<Result<Vec<Exp>, OmegaError>>()?;
        self.substitute_monomials(&images, order.clone())
    }

    /// Whether the function is a Laurent polynomial (empty denominator).
    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_empty()
    }

    /// The value as a rational number when the function is constant.
    pub fn as_constant(&self) -> Option<Q> {
        if !self.denominator.is_empty() {
            return None;
        }
        if self.numerator.is_zero() {
            return Some(Q::zero());
        }
        if self.numerator.is_constant() {
            Some(self.numerator.constant_coeff())
        } else {
            None
        }
    }
}
