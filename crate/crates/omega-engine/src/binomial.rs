use exact_algebra::{cmp_graded_revlex, BigInt, Exp, Field, Laurent, Q};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// A coefficient times a Laurent monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub coeff: Q,
    pub exp: Exp,
}

impl Monomial {
    pub fn new(coeff: Q, exp: Exp) -> Self {
        Monomial { coeff, exp }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(Q::one(), vec![0; nvars])
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.coeff.clone() * other.coeff.clone(),
            self.exp.iter().zip(&other.exp).map(|(a, b)| a + b).collect(),
        )
    }

    /// Integer power; negative exponents need a nonzero coefficient.
    pub fn pow(&self, k: i64) -> Monomial {
        let c = Field::pow(&self.coeff, k.unsigned_abs());
        let c = if k < 0 { c.inv().expect("power of a zero monomial") } else { c };
        Monomial::new(c, self.exp.iter().map(|e| e * k).collect())
    }

    pub fn scale(&self, c: &Q) -> Monomial {
        Monomial::new(self.coeff.clone() * c.clone(), self.exp.clone())
    }

    pub fn to_laurent(&self) -> Laurent {
        Laurent::monomial(self.exp.clone(), self.coeff.clone())
    }
}

/// `(lhs - rhs)^mult` with both sides nonzero monomials.
///
/// In canonical form the two exponent vectors share no monomial content, the
/// coefficients are a primitive integer pair, `lhs` precedes `rhs` in graded
/// reverse-lex order and `lhs` has a positive coefficient, so `1 - x^3*y^2`
/// and `1 + x` are canonical while `x - 1` and `2 - 2*x` are not.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinomialFactor {
    pub lhs: Monomial,
    pub rhs: Monomial,
    pub mult: u32,
}

/// The pair `(lhs, rhs)` of a canonical binomial, used as a multiset key.
pub type BinomialKey = (Monomial, Monomial);

/// Result of normalizing `a - b`.
pub enum Normalized {
    /// `a - b = unit * (lhs - rhs)`.
    Binomial(Monomial, BinomialKey),
    /// `a - b` is a single monomial (possibly zero).
    Monomial(Monomial),
}

fn lcm_of_denominators(a: &Q, b: &Q) -> BigInt {
    a.denom().lcm(b.denom())
}

/// Writes `a - b` as a unit monomial times a canonical binomial.
pub fn normalize_difference(a: &Monomial, b: &Monomial) -> Normalized {
    if b.is_zero() {
        return Normalized::Monomial(a.clone());
    }
    if a.is_zero() {
        return Normalized::Monomial(b.scale(&-Q::one()));
    }
    if a.exp == b.exp {
        return Normalized::Monomial(Monomial::new(a.coeff.clone() - b.coeff.clone(), a.exp.clone()));
    }
    let content: Exp = a.exp.iter().zip(&b.exp).map(|(x, y)| *x.min(y)).collect();
    let strip = |e: &Exp| -> Exp { e.iter().zip(&content).map(|(x, c)| x - c).collect() };
    // signed terms s1 x^e1 + s2 x^e2
    let (mut s1, e1, mut s2, e2) = (a.coeff.clone(), strip(&a.exp), -b.coeff.clone(), strip(&b.exp));
    let (e1, e2) = if cmp_graded_revlex(&e1, &e2) == Ordering::Greater {
        std::mem::swap(&mut s1, &mut s2);
        (e2, e1)
    } else {
        (e1, e2)
    };
    let l = lcm_of_denominators(&s1, &s2);
    let n1 = (s1.clone() * Q::from(l.clone())).to_integer();
    let n2 = (s2.clone() * Q::from(l.clone())).to_integer();
    let g = n1.gcd(&n2);
    let mut scale = Q::new(l, g);
    if s1.is_negative() {
        scale = -scale;
    }
    let lhs = Monomial::new(s1 * scale.clone(), e1);
    let rhs = Monomial::new(-(s2 * scale.clone()), e2);
    let unit = Monomial::new(scale.inv().expect("nonzero scale"), content);
    Normalized::Binomial(unit, (lhs, rhs))
}

impl BinomialFactor {
    pub fn key(&self) -> BinomialKey {
        (self.lhs.clone(), self.rhs.clone())
    }

    /// `lhs - rhs` as a Laurent polynomial (multiplicity ignored).
    pub fn base(&self) -> Laurent {
        key_to_laurent(&(self.lhs.clone(), self.rhs.clone()))
    }

    /// Total degree of the larger side, used to sort printed factors.
    pub fn degree(&self) -> i64 {
        let d = |e: &Exp| e.iter().sum::<i64>();
        d(&self.lhs.exp).max(d(&self.rhs.exp))
    }

    pub fn display(&self, names: &[String]) -> String {
        let inner = format!("({})", self.base().display(names));
        if self.mult == 1 {
            inner
        } else {
            format!("{}^{}", inner, self.mult)
        }
    }
}

pub(crate) fn key_to_laurent(k: &BinomialKey) -> Laurent {
    let mut p = k.0.to_laurent();
    p.add_term(k.1.exp.clone(), -k.1.coeff.clone());
    p
}
