use crate::binomial::{BinomialKey, Monomial};
use crate::elliott::{combine, ElliottRational, Term};
use crate::OmegaError;
use exact_algebra::{Laurent, Q};
use num_traits::One;
use std::collections::BTreeMap;

pub const DEFAULT_STEP_BUDGET: usize = 200_000;

/// Numerator over `prod (1 - R_i)` (one entry per copy) and variable-free
/// binomials, where each `R_i` has positive order.
#[derive(Clone)]
struct State {
    num: Laurent,
    free: BTreeMap<BinomialKey, u32>,
    ratios: Vec<Monomial>,
}

impl State {
    fn with_ratio(&self, drop: &[usize], add: Monomial, lam: usize, negate: bool) -> Result<State, OmegaError> {
        let mut s = State {
            num: if negate { -&self.num } else { self.num.clone() },
            free: self.free.clone(),
            ratios: self.ratios.iter().enumerate().filter(|(i, _)| !drop.contains(i)).map(|(_, r)| r.clone()).collect(),
        };
        if add.exp[lam] == 0 {
            let mut t = Term { num: s.num, den: s.free };
            t.divide_by_difference(&Monomial::one(add.exp.len()), &add, 1)?;
            s.num = t.num;
            s.free = t.den;
        } else {
            s.ratios.push(add);
        }
        Ok(s)
    }
}

/// `CT_lam f` by Elliott's identity
/// `1/((1-A)(1-B)) = 1/((1-A)(1-AB)) + 1/((1-B)(1-AB)) - 1/(1-AB)`,
/// applied until no term mixes positive and negative powers of `lam`.
pub fn elliott_reduce(f: &ElliottRational, lam: &str) -> Result<ElliottRational, OmegaError> {
    elliott_reduce_with_budget(f, lam, DEFAULT_STEP_BUDGET)
}

pub fn elliott_reduce_with_budget(f: &ElliottRational, lam: &str, budget: usize) -> Result<ElliottRational, OmegaError> {
    let li = f.order.index_of(lam)?;
    let n = f.nvars();
    let mut start = State {
        num: f.numerator.clone(),
        free: BTreeMap::new(),
        ratios: Vec::new(),
    };
    for fac in &f.denominator {
        if fac.lhs.exp[li] == fac.rhs.exp[li] {
            start.free.insert(fac.key(), fac.mult);
            continue;
        }
        // initial term t0 and the other signed term t1: factor = t0 (1 - R)
        let t1 = fac.rhs.scale(&-Q::one());
        let (t0, t1) = if f.order.cmp_exps(&fac.lhs.exp, &t1.exp).is_lt() { (fac.lhs.clone(), t1) } else { (t1, fac.lhs.clone()) };
        let ratio = t1.mul(&t0.pow(-1)).scale(&-Q::one());
        let u = t0.pow(-(fac.mult as i64));
        start.num = start.num.mul_monomial(&u.exp, &u.coeff);
        for _ in 0..fac.mult {
            start.ratios.push(ratio.clone());
        }
    }

    let mut stack = vec![start];
    let mut done: Vec<Term> = Vec::new();
    let mut steps = 0usize;
    while let Some(s) = stack.pop() {
        let pos = s.ratios.iter().position(|r| r.exp[li] > 0);
        let neg = s.ratios.iter().position(|r| r.exp[li] < 0);
        match (pos, neg) {
            (Some(i), Some(k)) => {
                steps += 1;
                if steps > budget {
                    return Err(OmegaError::StepBudget {
                        budget,
                        pending: stack.len() + 1,
                    });
                }
                let ab = s.ratios[i].mul(&s.ratios[k]);
                stack.push(s.with_ratio(&[k], ab.clone(), li, false)?);
                stack.push(s.with_ratio(&[i], ab.clone(), li, false)?);
                stack.push(s.with_ratio(&[i, k], ab, li, true)?);
            }
            _ => done.push(one_signed_ct(&s, li, n)),
        }
    }
    let out = ElliottRational::from_term(combine(&done, n), f.order.clone());
    out.remove_variable(lam)
}

/// Constant term when every ratio has the same sign of `lam`-exponent:
/// `[lam^t] prod 1/(1 - M_i lam^{e_i})` is a finite knapsack sum.
fn one_signed_ct(s: &State, li: usize, n: usize) -> Term {
    let sign = s.ratios.first().map_or(0, |r| r.exp[li].signum());
    let mut by_power: BTreeMap<i64, Laurent> = BTreeMap::new();
    for (e, c) in s.num.terms() {
        let mut base = e.clone();
        base[li] = 0;
        by_power.entry(e[li]).or_insert_with(|| Laurent::zero(n)).add_term(base, c.clone());
    }
    // need lam^t with t = -d in the series, t * sign >= 0
    let wanted: Vec<(usize, &Laurent)> = by_power
        .iter()
        .filter(|(d, _)| if sign == 0 { **d == 0 } else { -**d * sign >= 0 })
        .map(|(d, p)| (d.unsigned_abs() as usize, p))
        .collect();
    let top = wanted.iter().map(|(t, _)| *t).max().unwrap_or(0);
    let mut dp = vec![Laurent::zero(n); top + 1];
    dp[0] = Laurent::one(n);
    for r in &s.ratios {
        let step = r.exp[li].unsigned_abs() as usize;
        let mut m = r.clone();
        m.exp[li] = 0;
        for t in step..=top {
            let add = dp[t - step].mul_monomial(&m.exp, &m.coeff);
            dp[t] = &dp[t] + &add;
        }
    }
    let mut num = Laurent::zero(n);
    for (t, p) in wanted {
        num = &num + &(p * &dp[t]);
    }
    let mut out = Term { num, den: s.free.clone() };
    out.cancel();
    out
}
