use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::field::Field;
use crate::poly::UniPoly;
use crate::Q;

/// A monic irreducible modulus `p` together with the name of its root.
#[derive(Debug, PartialEq)]
pub struct Modulus {
    pub poly: UniPoly<Q>,
    pub root: String,
}

impl Modulus {
    /// Builds the modulus after normalizing to monic form and checking that
    /// `p` is squarefree. Irreducibility itself is the caller's promise; a
    /// reducible modulus surfaces later as a failed inversion.
    pub fn new(poly: UniPoly<Q>, root: &str) -> Result<Arc<Self>, AlgebraError> {
        if poly.degree().unwrap_or(0) == 0 {
            return Err(AlgebraError::BadSubstitution(
                "modulus must have positive degree".into(),
            ));
        }
        let poly = poly.monic();
        let g = UniPoly::gcd(&poly, &poly.derivative());
        if !g.is_one() {
            return Err(AlgebraError::NotInvertible(format!(
                "modulus {} is not squarefree (common factor {} with its derivative)",
                poly.display(root),
                g.display(root)
            )));
        }
        Ok(Arc::new(Modulus {
            poly,
            root: root.to_string(),
        }))
    }
}

/// An element of `Q[a]/(p)`.
///
/// Constants built through `Zero`/`One`/`from_rational` carry no modulus and
/// adopt the modulus of whatever they are combined with.
#[derive(Clone, Debug)]
pub struct QuotientElem {
    modulus: Option<Arc<Modulus>>,
    value: UniPoly<Q>,
}

impl QuotientElem {
    pub fn new(modulus: &Arc<Modulus>, value: UniPoly<Q>) -> Self {
        let value = value.rem(&modulus.poly).expect("modulus is nonzero");
        QuotientElem {
            modulus: Some(modulus.clone()),
            value,
        }
    }

    /// The adjoined root `a` itself.
    pub fn root(modulus: &Arc<Modulus>) -> Self {
        Self::new(modulus, UniPoly::x())
    }

    pub fn value(&self) -> &UniPoly<Q> {
        &self.value
    }

    pub fn modulus(&self) -> Option<&Arc<Modulus>> {
        self.modulus.as_ref()
    }

    fn constant(q: Q) -> Self {
        QuotientElem {
            modulus: None,
            value: UniPoly::constant(q),
        }
    }

    fn combine(a: &Self, b: &Self, value: UniPoly<Q>) -> Self {
        match a.modulus.as_ref().or(b.modulus.as_ref()) {
            Some(m) => Self::new(m, value),
            None => QuotientElem {
                modulus: None,
                value,
            },
        }
    }

    pub fn try_inv(&self) -> Result<Self, AlgebraError> {
        if self.value.is_zero() {
            return Err(AlgebraError::NotInvertible("0".into()));
        }
        match &self.modulus {
            None => Ok(Self::constant(
                self.value.coeff(0).inv().expect("nonzero constant"),
            )),
            Some(m) => {
                let inv = self.value.inv_mod(&m.poly).map_err(|_| {
                    AlgebraError::NotInvertible(format!(
                        "{} is a zero divisor modulo {}; the modulus is reducible",
                        self,
                        m.poly.display(&m.root)
                    ))
                })?;
                Ok(Self::new(m, inv))
            }
        }
    }
}

impl PartialEq for QuotientElem {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl fmt::Display for QuotientElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.modulus.as_ref().map(|m| m.root.as_str()).unwrap_or("a");
        f.write_str(&self.value.display(name))
    }
}

impl Add for QuotientElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let v = &self.value + &rhs.value;
        Self::combine(&self, &rhs, v)
    }
}

impl Sub for QuotientElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let v = &self.value - &rhs.value;
        Self::combine(&self, &rhs, v)
    }
}

impl Mul for QuotientElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let v = &self.value * &rhs.value;
        Self::combine(&self, &rhs, v)
    }
}

impl Neg for QuotientElem {
    type Output = Self;
    fn neg(self) -> Self {
        QuotientElem {
            value: -&self.value,
            modulus: self.modulus,
        }
    }
}

impl Zero for QuotientElem {
    fn zero() -> Self {
        Self::constant(Q::zero())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl One for QuotientElem {
    fn one() -> Self {
        Self::constant(Q::one())
    }
}

impl Field for QuotientElem {
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }

    fn from_rational(q: &BigRational) -> Self {
        Self::constant(q.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, QPoly};

    #[test]
    fn golden_ratio_field() {
        let m = Modulus::new(QPoly::from_i64s(&[-1, -1, 1]), "a").unwrap();
        let a = QuotientElem::root(&m);
        // a^2 = a + 1
        assert_eq!(a.clone() * a.clone(), a.clone() + QuotientElem::one());
        // a (a - 1) = 1
        let inv = a.inv().unwrap();
        assert_eq!(inv, a - QuotientElem::from_i64(1));
    }

    #[test]
    fn squarefree_check() {
        let p = QPoly::from_i64s(&[1, 2, 1]);
        assert!(Modulus::new(p, "a").is_err());
    }

    #[test]
    fn reducible_modulus_surfaces_on_inversion() {
        // t^2 - 1 is squarefree but reducible: a - 1 is a zero divisor.
        let m = Modulus::new(QPoly::from_i64s(&[-1, 0, 1]), "a").unwrap();
        let z = QuotientElem::root(&m) - QuotientElem::from_rational(&int(1));
        assert!(z.try_inv().is_err());
    }
}
