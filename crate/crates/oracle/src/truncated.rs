use crate::{CoefficientTable, OracleError};
use exact_algebra::{binomial, Exp, Field, Laurent, Q};
use num_traits::One;
use std::cmp::Ordering;

/// `numerator / prod factor^mult` over `nvars` variables, to be expanded by
/// geometric series around each factor's initial term.
///
/// The initial term is the smallest term under reverse-lex comparison of
/// `rho * exponent` (identity when `rho` is `None`): the last variable is
/// compared first.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometricProblem {
    pub nvars: usize,
    pub numerator: Laurent,
    pub factors: Vec<(Laurent, u32)>,
    pub rho: Option<Vec<Vec<i64>>>,
}

impl GeometricProblem {
    pub fn new(numerator: Laurent, factors: Vec<(Laurent, u32)>) -> Self {
        GeometricProblem {
            nvars: numerator.nvars(),
            numerator,
            factors,
            rho: None,
        }
    }

    fn cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        let img = |m: &[i64]| -> Vec<i64> {
            match &self.rho {
                None => m.to_vec(),
                Some(r) => r.iter().map(|row| row.iter().zip(m).map(|(x, y)| x * y).sum()).collect(),
            }
        };
        let (a, b) = (img(a), img(b));
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return a[i].cmp(&b[i]);
            }
        }
        Ordering::Equal
    }

    /// `1/f^m` expanded to `k_max + 1` terms of its geometric series.
    fn expand_inverse(&self, f: &Laurent, m: u32, k_max: usize) -> Result<Laurent, OracleError> {
        let (e, c) = f
            .terms()
            .min_by(|a, b| self.cmp(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or_else(|| OracleError::BadInput("zero denominator factor".into()))?;
        let neg: Exp = e.iter().map(|x| -x).collect();
        let cinv = c.inv().expect("nonzero coefficient");
        // f = cM (1 - r)
        let r = &Laurent::one(self.nvars) - &f.mul_monomial(&neg, &cinv);
        let mut out = Laurent::zero(self.nvars);
        let mut power = Laurent::one(self.nvars);
        for k in 0..=k_max {
            let w = Q::from(binomial(m as i64 - 1 + k as i64, k as u64));
            out = &out + &power.scale(&w);
            if k < k_max {
                power = &power * &r;
            }
        }
        let scale: Exp = neg.iter().map(|x| x * m as i64).collect();
        Ok(out.mul_monomial(&scale, &Field::pow(&cinv, m as u64)))
    }
}

/// Constant term in the variables `ct_vars`, keeping only monomials of total
/// degree at most `degree_bound` in the remaining variables (when given).
///
/// Every factor's geometric series is cut after `k_max + 1` terms, so the
/// answer is exact only when `k_max` exceeds the number of times any factor's
/// ratio can occur in a contributing product; callers pick it from the
/// problem (for crude generating functions the degree bound suffices).
/// Keys of the result omit the eliminated variables.
pub fn truncated_ct(
    problem: &GeometricProblem,
    ct_vars: &[usize],
    k_max: usize,
    degree_bound: Option<i64>,
) -> Result<CoefficientTable, OracleError> {
    let n = problem.nvars;
    if ct_vars.iter().any(|&v| v >= n) {
        return Err(OracleError::BadInput("variable index out of range".into()));
    }
    let free: Vec<usize> = (0..n).filter(|i| !ct_vars.contains(i)).collect();
    let free_deg = |e: &[i64]| -> i64 { free.iter().map(|&i| e[i]).sum() };

    let mut pieces = vec![problem.numerator.clone()];
    for (f, m) in &problem.factors {
        pieces.push(problem.expand_inverse(f, *m, k_max)?);
    }
    // suffix ranges of what later pieces can still contribute
    let s = pieces.len();
    let mut lo = vec![vec![0i64; n]; s + 1];
    let mut hi = vec![vec![0i64; n]; s + 1];
    let mut deg_lo = vec![0i64; s + 1];
    for j in (0..s).rev() {
        let p = &pieces[j];
        if p.is_zero() {
            return Ok(CoefficientTable::new());
        }
        let (mn, mx) = (p.min_exponents(), p.max_exponents());
        let dmin = p.terms().map(|(e, _)| free_deg(e)).min().unwrap_or(0);
        for i in 0..n {
            lo[j][i] = lo[j + 1][i] + mn[i];
            hi[j][i] = hi[j + 1][i] + mx[i];
        }
        deg_lo[j] = deg_lo[j + 1] + dmin;
    }
    let viable = |e: &[i64], j: usize| -> bool {
        ct_vars.iter().all(|&v| e[v] + lo[j][v] <= 0 && e[v] + hi[j][v] >= 0)
            && degree_bound.map_or(true, |b| free_deg(e) + deg_lo[j] <= b)
    };

    let mut acc = Laurent::one(n);
    for (j, p) in pieces.iter().enumerate() {
        let mut next = Laurent::zero(n);
        for (a, ca) in acc.terms() {
            for (b, cb) in p.terms() {
                let e: Exp = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if viable(&e, j + 1) {
                    next.add_term(e, ca.clone() * cb.clone());
                }
            }
        }
        acc = next;
    }
    Ok(acc
        .terms()
        .filter(|(e, _)| ct_vars.iter().all(|&v| e[v] == 0))
        .map(|(e, c)| (free.iter().map(|&i| e[i]).collect(), c.clone()))
        .collect())
}

/// `prod_{i != j} (1 - z_i/z_j)^{a_j}` as a Laurent polynomial in `z_1..z_n`.
pub fn dyson_product(a: &[u32]) -> Laurent {
    let n = a.len();
    let mut out = Laurent::one(n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut e = vec![0i64; n];
            e[i] = 1;
            e[j] = -1;
            let f = Laurent::from_terms(n, [(vec![0; n], Q::one()), (e, -Q::one())]);
            out = &out * &f.pow(a[j]);
        }
    }
    out
}
