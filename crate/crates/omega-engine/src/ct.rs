//! Constant terms in one variable by partial fractions.
//!
//! In the variable `l`, every binomial factor is a unit times `l^j - z` with
//! `z` free of `l`. The factor is PT when `z` precedes `l^j` in the working
//! order (its reciprocal expands in nonnegative powers of `l`). The constant
//! term is the degree-zero part of the polynomial part plus, for each PT
//! factor, the value at `l = 0` of its proper fraction. Those fractions are
//! computed in `K[l]/(u^m)` with `u = l^j - a`, using the basis `l^r u^k`,
//! where every cofactor has an explicit inverse with a binomial denominator.

use crate::binomial::{BinomialKey, Monomial};
use crate::elliott::{combine, limit_at_one, merge_like, ElliottRational, Term};
use crate::OmegaError;
use exact_algebra::{binomial, Laurent, Q};
use laurent_order::VariableOrder;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Constant term in the variable.
    Ct,
    /// Nonnegative part, then the variable set to 1.
    Geq,
}

#[derive(Clone, Debug)]
struct LamFactor {
    j: i64,
    z: Monomial,
    mult: u32,
    pt: bool,
    key: BinomialKey,
}

/// Numerator, variable-free factors and normalized factors `(l^j - z)^m`.
struct Split {
    num: Laurent,
    free: BTreeMap<BinomialKey, u32>,
    lam: Vec<LamFactor>,
}

fn split(t: &Term, lam: usize, order: &VariableOrder) -> Split {
    let mut num = t.num.clone();
    let mut free = BTreeMap::new();
    let mut out: Vec<LamFactor> = Vec::new();
    for (key, &m) in &t.den {
        let (l, r) = key;
        if l.exp[lam] == r.exp[lam] {
            free.insert(key.clone(), m);
            continue;
        }
        // signed terms: lhs - rhs = l + (-r)
        let neg_r = r.scale(&-Q::one());
        let (hi, lo) = if l.exp[lam] > r.exp[lam] { (l.clone(), neg_r) } else { (neg_r, l.clone()) };
        let j = hi.exp[lam] - lo.exp[lam];
        let mut uexp = hi.exp.clone();
        uexp[lam] -= j;
        let unit = Monomial::new(hi.coeff.clone(), uexp);
        // factor = unit * (l^j - z)
        let zexp: Vec<i64> = lo.exp.iter().zip(&unit.exp).map(|(a, b)| a - b).collect();
        let z = Monomial::new(-(lo.coeff.clone() / hi.coeff.clone()), zexp);
        let u = unit.pow(-(m as i64));
        num = num.mul_monomial(&u.exp, &u.coeff);
        let mut lj = vec![0; t.nvars()];
        lj[lam] = j;
        let pt = order.cmp_exps(&z.exp, &lj) == Ordering::Less;
        match out.iter_mut().find(|f| f.j == j && f.z == z) {
            Some(f) => f.mult += m,
            None => out.push(LamFactor {
                j,
                z,
                mult: m,
                pt,
                key: key.clone(),
            }),
        }
    }
    Split { num, free, lam: out }
}

fn collide(p: &LamFactor, q: &LamFactor) -> bool {
    let g = p.j.gcd(&q.j);
    p.z.pow(q.j / g) == q.z.pow(p.j / g)
}

/// Factors to perturb so that no PT factor shares a root with another factor.
fn collisions(s: &Split) -> Vec<BinomialKey> {
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..s.lam.len() {
        for k in i + 1..s.lam.len() {
            let (p, q) = (&s.lam[i], &s.lam[k]);
            if (p.pt || q.pt) && !chosen.contains(&i) && !chosen.contains(&k) && collide(p, q) {
                chosen.push(k);
            }
        }
    }
    chosen.into_iter().map(|k| s.lam[k].key.clone()).collect()
}

/// Arithmetic in `K[l]/((l^j - a)^m)` on coefficient vectors indexed by
/// `k * j + r` for the basis element `l^r u^k`.
struct LocalRing {
    j: usize,
    m: usize,
    a: Monomial,
    nvars: usize,
}

type Elem = Vec<Laurent>;

impl LocalRing {
    fn zero(&self) -> Elem {
        vec![Laurent::zero(self.nvars); self.j * self.m]
    }

    fn one(&self) -> Elem {
        let mut e = self.zero();
        e[0] = Laurent::one(self.nvars);
        e
    }

    fn u_power(&self, l: usize) -> Elem {
        let mut e = self.zero();
        if l < self.m {
            e[l * self.j] = Laurent::one(self.nvars);
        }
        e
    }

    /// `c * l^e` via `l^e = l^r (u + a)^q`, valid for negative `q` too since
    /// `a` is a unit.
    fn add_power(&self, out: &mut Elem, e: i64, c: &Laurent) {
        let j = self.j as i64;
        let (q, r) = (e.div_euclid(j), e.rem_euclid(j) as usize);
        for k in 0..self.m {
            let b = binomial(q, k as u64);
            if b.is_zero() {
                continue;
            }
            let w = self.a.pow(q - k as i64).scale(&Q::from_integer(b));
            let slot = &mut out[k * self.j + r];
            *slot = &*slot + &c.mul_monomial(&w.exp, &w.coeff);
        }
    }

    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = self.zero();
        for (i1, p) in x.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let (k1, r1) = (i1 / self.j, i1 % self.j);
            for (i2, q) in y.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                let (k2, r2) = (i2 / self.j, i2 % self.j);
                let k = k1 + k2;
                if k >= self.m {
                    continue;
                }
                let pq = p * q;
                let r = r1 + r2;
                if r < self.j {
                    out[k * self.j + r] = &out[k * self.j + r] + &pq;
                } else {
                    // l^j = u + a
                    let r = r - self.j;
                    let scaled = pq.mul_monomial(&self.a.exp, &self.a.coeff);
                    out[k * self.j + r] = &out[k * self.j + r] + &scaled;
                    if k + 1 < self.m {
                        out[(k + 1) * self.j + r] = &out[(k + 1) * self.j + r] + &pq;
                    }
                }
            }
        }
        out
    }

    fn scale(&self, x: &Elem, s: &Laurent) -> Elem {
        x.iter().map(|p| p * s).collect()
    }

    fn add(&self, x: &Elem, y: &Elem) -> Elem {
        x.iter().zip(y).map(|(p, q)| p + q).collect()
    }

    fn pow(&self, x: &Elem, n: u32) -> Elem {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, x))
    }
}

/// Coefficients `h_0..=h_w` of `prod (1 - z T^j)^(-m)`.
fn complete_series(lam: &[LamFactor], w: i64, nvars: usize) -> Vec<Laurent> {
    let len = (w + 1).max(0) as usize;
    let mut h = vec![Laurent::zero(nvars); len];
    if len == 0 {
        return h;
    }
    h[0] = Laurent::one(nvars);
    for f in lam {
        let mut g = vec![Laurent::zero(nvars); len];
        let mut k = 0i64;
        while (k * f.j) < len as i64 {
            let c = binomial(f.mult as i64 - 1 + k, k as u64);
            let zk = f.z.pow(k).scale(&Q::from_integer(c));
            g[(k * f.j) as usize] = zk.to_laurent();
            k += 1;
        }
        let mut next = vec![Laurent::zero(nvars); len];
        for (a, p) in h.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (b, q) in g.iter().enumerate().take(len - a) {
                if !q.is_zero() {
                    next[a + b] = &next[a + b] + &(p * q);
                }
            }
        }
        h = next;
    }
    h
}

/// One term, no collisions allowed.
fn ct_split(s: &Split, lam: usize, mode: Mode, nvars: usize) -> Result<Vec<Term>, OmegaError> {
    let mut by_power: BTreeMap<i64, Laurent> = BTreeMap::new();
    for (e, c) in s.num.terms() {
        let mut base = e.clone();
        base[lam] = 0;
        by_power.entry(e[lam]).or_insert_with(|| Laurent::zero(nvars)).add_term(base, c.clone());
    }
    let total: i64 = s.lam.iter().map(|f| f.j * f.mult as i64).sum();
    let mut out = Vec::new();

    // polynomial part, read off the expansion at infinity
    if let Some(&dmax) = by_power.keys().next_back() {
        let h = complete_series(&s.lam, dmax - total, nvars);
        let mut poly = Laurent::zero(nvars);
        for (&d, nd) in by_power.range(total..) {
            let w = (d - total) as usize;
            let weight = match mode {
                Mode::Ct => h[w].clone(),
                Mode::Geq => h[..=w].iter().fold(Laurent::zero(nvars), |a, b| &a + b),
            };
            poly = &poly + &(nd * &weight);
        }
        if !poly.is_zero() {
            out.push(Term { num: poly, den: s.free.clone() });
        }
    }

    for (idx, f) in s.lam.iter().enumerate() {
        if !f.pt {
            continue;
        }
        let m = f.mult as usize;
        let ring = LocalRing {
            j: f.j as usize,
            m,
            a: f.z.clone(),
            nvars,
        };
        let mut p = ring.zero();
        for (&d, nd) in &by_power {
            ring.add_power(&mut p, d, nd);
        }
        let mut dens: Vec<(Monomial, Monomial, u32)> = Vec::new();
        for (o_idx, o) in s.lam.iter().enumerate() {
            if o_idx == idx {
                continue;
            }
            let g = f.j.gcd(&o.j);
            let (jp, kp) = (f.j / g, o.j / g);
            let (aa, bb) = (f.z.pow(kp), o.z.pow(jp));
            let mut d = aa.to_laurent();
            d.add_term(bb.exp.clone(), -bb.coeff.clone());
            // (l^j - a) P' - (l^k - b) Q' = b^j' - a^k'
            let mut qp = ring.zero();
            for i in 0..jp {
                ring.add_power(&mut qp, i * o.j, &o.z.pow(jp - 1 - i).to_laurent());
            }
            let mut pp = ring.zero();
            for i in 0..kp {
                ring.add_power(&mut pp, i * f.j, &f.z.pow(kp - 1 - i).to_laurent());
            }
            let neg_pp = ring.scale(&pp, &Laurent::constant(nvars, -Q::one()));
            let n = o.mult;
            let qn = ring.pow(&qp, n);
            let mut cof = ring.zero();
            let mut neg_pl = ring.one();
            for l in 0..m {
                let c = Q::from_integer(binomial(n as i64 - 1 + l as i64, l as u64));
                let scalar = d.pow((m - 1 - l) as u32).scale(&c);
                let piece = ring.mul(&ring.mul(&qn, &neg_pl), &ring.u_power(l));
                cof = ring.add(&cof, &ring.scale(&piece, &scalar));
                neg_pl = ring.mul(&neg_pl, &neg_pp);
            }
            p = ring.mul(&p, &cof);
            dens.push((aa, bb, n + f.mult - 1));
        }
        let mut val = Laurent::zero(nvars);
        match mode {
            Mode::Ct => {
                let minus_a = f.z.scale(&-Q::one());
                for k in 0..m {
                    let w = minus_a.pow(k as i64 - m as i64);
                    val = &val + &p[k * ring.j].mul_monomial(&w.exp, &w.coeff);
                }
            }
            Mode::Geq => {
                let mut one_minus_a = Laurent::one(nvars);
                one_minus_a.add_term(f.z.exp.clone(), -f.z.coeff.clone());
                let mut pw = Laurent::one(nvars);
                for k in 0..m {
                    for r in 0..ring.j {
                        val = &val + &(&p[k * ring.j + r] * &pw);
                    }
                    pw = &pw * &one_minus_a;
                }
                if f.z.exp.iter().all(|&e| e == 0) && f.z.coeff.is_one() {
                    return Err(OmegaError::DivergentAtOne);
                }
                dens.push((Monomial::one(nvars), f.z.clone(), f.mult));
            }
        }
        if val.is_zero() {
            continue;
        }
        let mut t = Term { num: val, den: s.free.clone() };
        for (a, b, e) in dens {
            t.divide_by_difference(&a, &b, e)?;
        }
        out.push(t);
    }
    Ok(out)
}

fn fresh_name(order: &VariableOrder, base: &str) -> String {
    let mut name = base.to_string();
    while order.vars().iter().any(|v| *v == name) {
        name.push('\'');
    }
    name
}

/// Constant term (or Omega-geq) in variable `lam` of one term.
fn eliminate_term(t: &Term, lam: usize, order: &VariableOrder, mode: Mode) -> Result<Vec<Term>, OmegaError> {
    let s = split(t, lam, order);
    let bad = collisions(&s);
    if bad.is_empty() {
        return ct_split(&s, lam, mode, t.nvars());
    }
    // Regard each chosen z as w_i z for fresh w_i placed lowest in the order,
    // eliminate, then let every w_i tend to 1.
    let lam_name = order.vars()[lam].clone();
    let mut ext_order = order.clone();
    let mut ext = t.clone();
    for i in 0..bad.len() {
        let name = fresh_name(&ext_order, &format!("{}_w{}", lam_name, bad.len() - 1 - i));
        ext_order = ext_order.with_front_var(&name)?;
        ext = ext.insert_var(0);
    }
    let shift = bad.len();
    let widen = |m: &Monomial| {
        let mut e = vec![0; shift];
        e.extend(m.exp.iter().copied());
        Monomial::new(m.coeff.clone(), e)
    };
    for (i, (l, r)) in bad.iter().enumerate() {
        let key = (widen(l), widen(r));
        let m = ext.den.remove(&key).ok_or_else(|| OmegaError::Internal("lost factor".into()))?;
        let (mut l2, mut r2) = key;
        if l2.exp[lam + shift] <= r2.exp[lam + shift] {
            l2.exp[i] += 1;
        } else {
            r2.exp[i] += 1;
        }
        ext.divide_by_difference(&l2, &r2, m)?;
    }
    let s2 = split(&ext, lam + shift, &ext_order);
    if !collisions(&s2).is_empty() {
        return Err(OmegaError::Internal("factor collision survived the variable split".into()));
    }
    let parts = ct_split(&s2, lam + shift, mode, ext.nvars())?;
    let mut whole = combine(&parts, ext.nvars());
    for _ in 0..shift {
        whole = limit_at_one(&whole, 0)?;
    }
    Ok(vec![whole])
}

pub(crate) fn eliminate_terms(terms: Vec<Term>, lam: usize, order: &VariableOrder, mode: Mode) -> Result<Vec<Term>, OmegaError> {
    let mut out = Vec::new();
    for t in &terms {
        for mut r in eliminate_term(t, lam, order, mode)? {
            r.cancel();
            if !r.num.is_zero() {
                out.push(r);
            }
        }
    }
    Ok(merge_like(out))
}

fn eliminate_all(f: &ElliottRational, lams: &[&str], mode: Mode) -> Result<ElliottRational, OmegaError> {
    let mut terms = vec![f.to_term()];
    for name in lams {
        let idx = f.order.index_of(name)?;
        terms = eliminate_terms(terms, idx, &f.order, mode)?;
    }
    let mut out = ElliottRational::from_term(combine(&terms, f.nvars()), f.order.clone());
    for name in lams {
        out = out.remove_variable(name)?;
    }
    Ok(out)
}

/// `CT_lam f`; the variable is dropped from the result.
pub fn ct_lambda(f: &ElliottRational, lam: &str) -> Result<ElliottRational, OmegaError> {
    eliminate_all(f, &[lam], Mode::Ct)
}

/// Iterated constant term, eliminating `lams` left to right.
pub fn ct_lambdas(f: &ElliottRational, lams: &[&str]) -> Result<ElliottRational, OmegaError> {
    eliminate_all(f, lams, Mode::Ct)
}

/// MacMahon's Omega-geq in each of `lams`: keep nonnegative powers, then set
/// the variable to 1.
pub fn omega_geq(f: &ElliottRational, lams: &[&str]) -> Result<ElliottRational, OmegaError> {
    eliminate_all(f, lams, Mode::Geq)
}

/// The constant term in `lam` left as a list of summands (each normalized
/// separately), e.g. to compare with a displayed intermediate.
pub fn ct_lambda_summands(f: &ElliottRational, lam: &str) -> Result<Vec<ElliottRational>, OmegaError> {
    let idx = f.order.index_of(lam)?;
    let terms = eliminate_terms(vec![f.to_term()], idx, &f.order, Mode::Ct)?;
    terms
        .into_iter()
        .map(|t| ElliottRational::from_term(t, f.order.clone()).remove_variable(lam))
        .collect()
}
