use crate::binomial::{key_to_laurent, normalize_difference, BinomialFactor, BinomialKey, Monomial, Normalized};
use crate::OmegaError;
use exact_algebra::{binomial, cmp_graded_revlex, Exp, Field, Laurent, Q};
use laurent_order::VariableOrder;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Numerator over a multiset of canonical binomials; the working
/// representation shared by every elimination step.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Term {
    pub num: Laurent,
    pub den: BTreeMap<BinomialKey, u32>,
}

impl Term {
    pub fn from_num(num: Laurent) -> Self {
        Term { num, den: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn mul_monomial(&mut self, m: &Monomial) {
        self.num = self.num.mul_monomial(&m.exp, &m.coeff);
    }

    /// Divides by `(a - b)^mult`.
    pub fn divide_by_difference(&mut self, a: &Monomial, b: &Monomial, mult: u32) -> Result<(), OmegaError> {
        if mult == 0 {
            return Ok(());
        }
        match normalize_difference(a, b) {
            Normalized::Monomial(m) => {
                if m.is_zero() {
                    return Err(OmegaError::ZeroDenominator);
                }
                self.mul_monomial(&m.pow(-(mult as i64)));
            }
            Normalized::Binomial(unit, key) => {
                self.mul_monomial(&unit.pow(-(mult as i64)));
                *self.den.entry(key).or_insert(0) += mult;
            }
        }
        Ok(())
    }

    pub fn insert_var(&self, at: usize) -> Term {
        let ins = |m: &Monomial| {
            let mut e = m.exp.clone();
            e.insert(at, 0);
            Monomial::new(m.coeff.clone(), e)
        };
        Term {
            num: self.num.insert_var(at),
            den: self.den.iter().map(|((l, r), m)| ((ins(l), ins(r)), *m)).collect(),
        }
    }

    /// Cancels every denominator factor that divides the numerator exactly.
    pub fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let keys: Vec<BinomialKey> = self.den.keys().cloned().collect();
        for k in keys {
            let mut m = self.den[&k];
            while m > 0 {
                match divide_by_binomial(&self.num, &k) {
                    Some(q) => {
                        self.num = q;
                        m -= 1;
                    }
                    None => break,
                }
            }
            if m == 0 {
                self.den.remove(&k);
            } else {
                self.den.insert(k, m);
            }
        }
    }
}

/// `num / (lhs - rhs)` when the division is exact.
///
/// Writing the binomial as `c1 x^e1 (1 - c T)` with `T = x^(e2 - e1)`, the
/// numerator splits into classes of exponents modulo `e2 - e1`; each class is
/// a Laurent polynomial in `T` and is divided synthetically.
pub(crate) fn divide_by_binomial(num: &Laurent, key: &BinomialKey) -> Option<Laurent> {
    let (lhs, rhs) = key;
    let delta: Exp = rhs.exp.iter().zip(&lhs.exp).map(|(a, b)| a - b).collect();
    let i0 = delta.iter().position(|&d| d != 0)?;
    let c = rhs.coeff.clone() / lhs.coeff.clone();
    let mut classes: HashMap<Exp, BTreeMap<i64, Q>> = HashMap::new();
    for (e, a) in num.terms() {
        let k = e[i0].div_euclid(delta[i0]);
        let base: Exp = e.iter().zip(&delta).map(|(x, d)| x - k * d).collect();
        classes.entry(base).or_default().insert(k, a.clone());
    }
    let inv_lead = lhs.coeff.inv()?;
    let back: Exp = lhs.exp.iter().map(|x| -x).collect();
    let mut out = Laurent::zero(num.nvars());
    for (base, poly) in classes {
        let kmin = *poly.keys().next()?;
        let kmax = *poly.keys().next_back()?;
        let mut q = Q::zero();
        for k in kmin..=kmax {
            q = poly.get(&k).cloned().unwrap_or_else(Q::zero) + c.clone() * q;
            if k == kmax {
                if !q.is_zero() {
                    return None;
                }
            } else if !q.is_zero() {
                let e: Exp = base.iter().zip(&delta).zip(&back).map(|((b, d), s)| b + k * d + s).collect();
                out.add_term(e, q.clone() * inv_lead.clone());
            }
        }
    }
    Some(out)
}

/// Puts a list of terms over their least common binomial denominator.
pub(crate) fn combine(terms: &[Term], nvars: usize) -> Term {
    let mut den: BTreeMap<BinomialKey, u32> = BTreeMap::new();
    for t in terms {
        for (k, m) in &t.den {
            let slot = den.entry(k.clone()).or_insert(0);
            *slot = (*slot).max(*m);
        }
    }
    let mut num = Laurent::zero(nvars);
    for t in terms {
        let mut part = t.num.clone();
        for (k, m) in &den {
            let missing = m - t.den.get(k).copied().unwrap_or(0);
            if missing > 0 {
                part = &part * &key_to_laurent(k).pow(missing);
            }
        }
        num = &num + &part;
    }
    let mut out = Term { num, den };
    out.cancel();
    out
}

/// Sums terms that share a denominator.
pub(crate) fn merge_like(terms: Vec<Term>) -> Vec<Term> {
    let mut by_den: BTreeMap<Vec<(BinomialKey, u32)>, Laurent> = BTreeMap::new();
    for t in terms {
        let k: Vec<(BinomialKey, u32)> = t.den.into_iter().collect();
        match by_den.get_mut(&k) {
            Some(n) => *n = &*n + &t.num,
            None => {
                by_den.insert(k, t.num);
            }
        }
    }
    by_den
        .into_iter()
        .filter(|(_, n)| !n.is_zero())
        .map(|(k, num)| {
            let mut t = Term { num, den: k.into_iter().collect() };
            t.cancel();
            t
        })
        .collect()
}

/// Sets the variable in slot `idx` to 1 in a function known to be regular
/// there, then drops the slot.
///
/// Denominator factors vanishing at 1 are expanded to first order in
/// `eps = w - 1`; the numerator is expanded to the same total order and
/// all lower orders must cancel.
pub(crate) fn limit_at_one(t: &Term, idx: usize) -> Result<Term, OmegaError> {
    let n = t.nvars();
    let drop = |e: &Exp| -> Exp {
        let mut v = e.clone();
        v[idx] = 0;
        v
    };
    let mut order = 0u64;
    let mut lead = Monomial::one(n);
    let mut rest = Vec::new();
    for ((l, r), m) in &t.den {
        let (le, re) = (drop(&l.exp), drop(&r.exp));
        if le == re && l.coeff == r.coeff {
            order += *m as u64;
            let slope = Monomial::new(l.coeff.clone() * Q::from_integer((l.exp[idx] - r.exp[idx]).into()), le);
            lead = lead.mul(&slope.pow(*m as i64));
        } else {
            rest.push((Monomial::new(l.coeff.clone(), le), Monomial::new(r.coeff.clone(), re), *m));
        }
    }
    let mut coeffs = vec![Laurent::zero(n); order as usize + 1];
    for (e, c) in t.num.terms() {
        let base = drop(e);
        for (u, slot) in coeffs.iter_mut().enumerate() {
            let b = binomial(e[idx], u as u64);
            if !b.is_zero() {
                slot.add_term(base.clone(), c.clone() * Q::from_integer(b));
            }
        }
    }
    if coeffs[..order as usize].iter().any(|p| !p.is_zero()) {
        return Err(OmegaError::Internal("pole at a collision parameter".into()));
    }
    let mut out = Term::from_num(coeffs.pop().expect("nonempty"));
    out.mul_monomial(&lead.pow(-1));
    for (a, b, m) in rest {
        out.divide_by_difference(&a, &b, m)?;
    }
    let mut removed = Term::from_num(out.num.remove_var(idx)?);
    for ((l, r), m) in out.den {
        let rm = |x: &Monomial| {
            let mut e = x.exp.clone();
            e.remove(idx);
            Monomial::new(x.coeff.clone(), e)
        };
        removed.divide_by_difference(&rm(&l), &rm(&r), m)?;
    }
    removed.cancel();
    Ok(removed)
}

/// A rational function whose denominator is a product of binomials
/// `(monomial - monomial)^mult`, over the variables of a [`VariableOrder`].
#[derive(Clone, Debug, PartialEq)]
pub struct ElliottRational {
    pub numerator: Laurent,
    pub denominator: Vec<BinomialFactor>,
    pub order: VariableOrder,
}

impl ElliottRational {
    /// A Laurent polynomial with empty denominator.
    pub fn polynomial(numerator: Laurent, order: VariableOrder) -> Result<Self, OmegaError> {
        check_nvars(&numerator, &order)?;
        Ok(ElliottRational {
            numerator,
            denominator: Vec::new(),
            order,
        })
    }

    /// `numerator / prod factor^mult`, each factor a polynomial with at most
    /// two terms. Pure monomials move into the numerator.
    pub fn from_factors(numerator: Laurent, factors: &[(Laurent, u32)], order: VariableOrder) -> Result<Self, OmegaError> {
        check_nvars(&numerator, &order)?;
        let n = order.len();
        let mut t = Term::from_num(numerator);
        for (f, m) in factors {
            check_nvars(f, &order)?;
            let mut it = f.terms().map(|(e, c)| Monomial::new(c.clone(), e.clone()));
            let a = it.next().ok_or(OmegaError::ZeroDenominator)?;
            let b = it.next().map(|m| m.scale(&-Q::one())).unwrap_or_else(|| Monomial::new(Q::zero(), vec![0; n]));
            if it.next().is_some() {
                return Err(OmegaError::NotElliott(f.display(order.vars())));
            }
            t.divide_by_difference(&a, &b, *m)?;
        }
        Ok(Self::from_term(t, order))
    }

    pub(crate) fn from_term(t: Term, order: VariableOrder) -> Self {
        let mut denominator: Vec<BinomialFactor> = t
            .den
            .into_iter()
            .map(|((lhs, rhs), mult)| BinomialFactor { lhs, rhs, mult })
            .collect();
        denominator.sort_by(|a, b| {
            b.degree()
                .cmp(&a.degree())
                .then_with(|| cmp_graded_revlex(&b.rhs.exp, &a.rhs.exp))
                .then_with(|| a.cmp(b))
        });
        ElliottRational {
            numerator: t.num,
            denominator,
            order,
        }
    }

    pub(crate) fn to_term(&self) -> Term {
        Term {
            num: self.numerator.clone(),
            den: self.denominator.iter().map(|f| (f.key(), f.mult)).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.order.len()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The product of the denominator factors, expanded.
    pub fn denominator_poly(&self) -> Laurent {
        self.denominator
            .iter()
            .fold(Laurent::one(self.nvars()), |acc, f| &acc * &f.base().pow(f.mult))
    }

    /// Whether `self` and `other` are the same rational function (same
    /// variables, compared by cross-multiplication).
    pub fn same_function(&self, other: &ElliottRational) -> bool {
        if self.order.vars() != other.order.vars() {
            return false;
        }
        let mut neg = other.to_term();
        neg.num = -&neg.num;
        combine(&[self.to_term(), neg], self.nvars()).num.is_zero()
    }

    /// Sum of several functions over the same variables, normalized.
    pub fn sum(parts: &[ElliottRational], order: VariableOrder) -> ElliottRational {
        let terms: Vec<Term> = parts.iter().map(|p| p.to_term()).collect();
        Self::from_term(combine(&terms, order.len()), order)
    }

    /// Substitutes `x -> 1/x` in every variable.
    pub fn invert_variables(&self) -> Result<ElliottRational, OmegaError> {
        let neg = |m: &Monomial| Monomial::new(m.coeff.clone(), m.exp.iter().map(|e| -e).collect());
        let n = self.nvars();
        let images: Vec<Exp> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = -1;
                e
            })
            .collect();
        let mut t = Term::from_num(self.numerator.substitute_monomials(&images, n)?);
        for f in &self.denominator {
            t.divide_by_difference(&neg(&f.lhs), &neg(&f.rhs), f.mult)?;
        }
        Ok(Self::from_term(t, self.order.clone()))
    }

    /// Drops a variable that no longer occurs.
    pub fn remove_variable(&self, name: &str) -> Result<ElliottRational, OmegaError> {
        let idx = self.order.index_of(name)?;
        let keep: Vec<String> = self.order.vars().iter().filter(|v| *v != name).cloned().collect();
        let order = match self.order.rho() {
            None => VariableOrder::new(&keep)?,
            Some(rho) => {
                let r: Vec<Vec<i64>> = rho
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != idx)
                    .map(|(_, row)| row.iter().enumerate().filter(|(j, _)| *j != idx).map(|(_, v)| *v).collect())
                    .collect();
                VariableOrder::with_rho(&keep, r)?
            }
        };
        let rm = |m: &Monomial| -> Result<Monomial, OmegaError> {
            if m.exp[idx] != 0 {
                return Err(OmegaError::Internal(format!("{} still occurs", name)));
            }
            let mut e = m.exp.clone();
            e.remove(idx);
            Ok(Monomial::new(m.coeff.clone(), e))
        };
        let mut t = Term::from_num(self.numerator.remove_var(idx)?);
        for f in &self.denominator {
            t.divide_by_difference(&rm(&f.lhs)?, &rm(&f.rhs)?, f.mult)?;
        }
        Ok(Self::from_term(t, order))
    }

    /// Canonical one-line rendering, e.g. `(1+x^2*y)/((1-x^3*y^2)*(1-x))`.
    pub fn display(&self) -> String {
        let names = self.order.vars();
        let num = self.numerator.display(names);
        if self.denominator.is_empty() {
            return num;
        }
        let num = if self.numerator.len() > 1 { format!("({})", num) } else { num };
        let factors: Vec<String> = self.denominator.iter().map(|f| f.display(names)).collect();
        if factors.len() == 1 {
            format!("{}/{}", num, factors[0])
        } else {
            format!("{}/({})", num, factors.join("*"))
        }
    }

    /// Plain LaTeX rendering of the canonical form.
    pub fn latex(&self) -> String {
        let names = self.order.vars();
        let tex = |p: &Laurent| -> String {
            let s = p.display(names).replace('*', " ");
            let mut out = String::new();
            let mut chars = s.chars().peekable();
            while let Some(c) = chars.next() {
                if c == '^' {
                    let mut exp = String::new();
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_digit() || (exp.is_empty() && d == '-') {
                            exp.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    out.push_str(&format!("^{{{}}}", exp));
                } else {
                    out.push(c);
                }
            }
            out
        };
        if self.denominator.is_empty() {
            return tex(&self.numerator);
        }
        let den: Vec<String> = self
            .denominator
            .iter()
            .map(|f| {
                if f.mult == 1 {
                    format!("({})", tex(&f.base()))
                } else {
                    format!("({})^{{{}}}", tex(&f.base()), f.mult)
                }
            })
            .collect();
        format!("\\frac{{{}}}{{{}}}", tex(&self.numerator), den.join(" "))
    }

    /// `{variables, numerator: [[coeff, exps..]..], denominator: [{lhs, rhs, mult}..]}`
    /// with coefficients as exact strings and terms in canonical order.
    pub fn to_json(&self) -> Value {
        let mono = |c: &Q, e: &Exp| -> Value {
            let mut v = vec![json!(c.to_string())];
            v.extend(e.iter().map(|x| json!(x)));
            Value::Array(v)
        };
        let numerator: Vec<Value> = self.numerator.sorted_terms().into_iter().map(|(e, c)| mono(c, e)).collect();
        let denominator: Vec<Value> = self
            .denominator
            .iter()
            .map(|f| {
                json!({
                    "lhs": mono(&f.lhs.coeff, &f.lhs.exp),
                    "rhs": mono(&f.rhs.coeff, &f.rhs.exp),
                    "mult": f.mult,
                })
            })
            .collect();
        json!({
            "variables": self.order.vars(),
            "numerator": numerator,
            "denominator": denominator,
        })
    }

    /// Power-series coefficients up to total degree `degree`, expanding every
    /// factor around its initial term under the working order.
    pub fn series(&self, degree: i64) -> Result<oracle::CoefficientTable, OmegaError> {
        let factors: Vec<(Laurent, u32)> = self.denominator.iter().map(|f| (f.base(), f.mult)).collect();
        let mut problem = oracle::GeometricProblem::new(self.numerator.clone(), factors);
        problem.rho = self.order.rho().cloned();
        let k_max = degree.max(0) as usize + 1;
        let table = oracle::truncated_ct(&problem, &[], k_max, Some(degree))?;
        Ok(table)
    }
}

fn check_nvars(p: &Laurent, order: &VariableOrder) -> Result<(), OmegaError> {
    if p.nvars() != order.len() {
        return Err(OmegaError::DimensionMismatch {
            expected: order.len(),
            got: p.nvars(),
        });
    }
    Ok(())
}

impl fmt::Display for ElliottRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// Cancels common binomial factors and merges equal ones.
pub fn cancel_common(f: &ElliottRational) -> ElliottRational {
    let mut t = f.to_term();
    t.cancel();
    ElliottRational::from_term(t, f.order.clone())
}
