use crate::OrderError;
use exact_algebra::{Exp, Field, LaurentPoly, Q};
use num_traits::{One, Zero};
use std::cmp::Ordering;

/// A monomial total order on `Z^n`.
///
/// Exponent vectors are compared from the last variable backwards: the first
/// index (from the right) where they differ decides, and the vector with the
/// smaller entry is the smaller monomial. Later variables therefore dominate,
/// so in the order `(x, t)` every power of `x` is smaller than `t`. With a
/// matrix `rho` the comparison is applied to `rho * m` instead of `m`.
///
/// The smallest term of a polynomial under this order is its initial term,
/// and `1/f` is expanded as a geometric series around that term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableOrder {
    vars: Vec<String>,
    rho: Option<Vec<Vec<i64>>>,
}

/// How a denominator factor behaves when inverted with respect to one variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    /// `1/f` only has nonnegative powers of the variable (after the initial monomial is removed).
    PT,
    /// The initial term carries the top power, so proper fractions expand into negative powers.
    NT,
    /// Neither: the initial term sits strictly inside the degree range.
    Mixed,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactorClass<K> {
    pub tag: Tag,
    pub initial: (Exp, K),
}

impl VariableOrder {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Self, OrderError> {
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(OrderError::DuplicateVariable(v.clone()));
            }
        }
        Ok(VariableOrder { vars, rho: None })
    }

    pub fn with_rho<S: AsRef<str>>(vars: &[S], rho: Vec<Vec<i64>>) -> Result<Self, OrderError> {
        let mut o = Self::new(vars)?;
        let n = o.vars.len();
        if rho.len() != n || rho.iter().any(|r| r.len() != n) {
            return Err(OrderError::BadRho(format!("rho must be {n}x{n}")));
        }
        if determinant(&rho).is_zero() {
            return Err(OrderError::SingularRho);
        }
        o.rho = Some(rho);
        Ok(o)
    }

    /// The same order after the substitution `var -> var^{-1}`.
    pub fn reversed_in(&self, var: &str) -> Result<Self, OrderError> {
        let k = self.index_of(var)?;
        let n = self.vars.len();
        let mut rho = self.rho.clone().unwrap_or_else(|| identity(n));
        for row in rho.iter_mut() {
            row[k] = -row[k];
        }
        Ok(VariableOrder {
            vars: self.vars.clone(),
            rho: Some(rho),
        })
    }

    /// Adds a new variable in front, below every existing variable.
    pub fn with_front_var(&self, name: &str) -> Result<Self, OrderError> {
        if self.vars.iter().any(|v| v == name) {
            return Err(OrderError::DuplicateVariable(name.to_string()));
        }
        let mut vars = vec![name.to_string()];
        vars.extend(self.vars.iter().cloned());
        let rho = self.rho.as_ref().map(|r| {
            let n = r.len();
            let mut m = identity(n + 1);
            for i in 0..n {
                for j in 0..n {
                    m[i + 1][j + 1] = r[i][j];
                }
            }
            m
        });
        Ok(VariableOrder { vars, rho })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn rho(&self) -> Option<&Vec<Vec<i64>>> {
        self.rho.as_ref()
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn index_of(&self, var: &str) -> Result<usize, OrderError> {
        self.vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| OrderError::UnknownVariable(var.to_string()))
    }

    fn image(&self, m: &[i64]) -> Exp {
        match &self.rho {
            None => m.to_vec(),
            Some(r) => r
                .iter()
                .map(|row| row.iter().zip(m).map(|(a, b)| a * b).sum())
                .collect(),
        }
    }

    pub fn compare(&self, a: &[i64], b: &[i64]) -> Result<Ordering, OrderError> {
        for v in [a, b] {
            if v.len() != self.vars.len() {
                return Err(OrderError::DimensionMismatch {
                    expected: self.vars.len(),
                    got: v.len(),
                });
            }
        }
        Ok(self.cmp_exps(a, b))
    }

    /// Like [`compare`](Self::compare) but assumes matching lengths.
    pub fn cmp_exps(&self, a: &[i64], b: &[i64]) -> Ordering {
        let (a, b) = (self.image(a), self.image(b));
        for i in (0..a.len()).rev() {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn initial_term<K: Field>(&self, f: &LaurentPoly<K>) -> Result<(Exp, K), OrderError> {
        if f.nvars() != self.vars.len() {
            return Err(OrderError::DimensionMismatch {
                expected: self.vars.len(),
                got: f.nvars(),
            });
        }
        f.terms()
            .min_by(|a, b| self.cmp_exps(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or(OrderError::ZeroInput)
    }

    pub fn classify_factor<K: Field>(&self, f: &LaurentPoly<K>, var: &str) -> Result<FactorClass<K>, OrderError> {
        let k = self.index_of(var)?;
        let initial = self.initial_term(f)?;
        let e = initial.0[k];
        let tag = if e == f.min_exponents()[k] {
            Tag::PT
        } else if e == f.max_exponents()[k] {
            Tag::NT
        } else {
            Tag::Mixed
        };
        Ok(FactorClass { tag, initial })
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Determinant of a square integer matrix, computed over the rationals.
pub fn determinant(m: &[Vec<i64>]) -> Q {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| Q::from_i64(x)).collect()).collect();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = det * a[c][c].clone();
        let piv = a[c][c].clone();
        for r in c + 1..n {
            let f = a[r][c].clone() / piv.clone();
            for j in c..n {
                let s = f.clone() * a[c][j].clone();
                a[r][j] = a[r][j].clone() - s;
            }
        }
    }
    det
}
