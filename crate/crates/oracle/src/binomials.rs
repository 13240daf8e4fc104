use exact_algebra::{binomial, BigInt, Exp, Laurent, Q};
use num_traits::{One, Zero};
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `C(n,k) = CT_a (1+a)^n / a^k`, and zero when read in `Q((1/a))` with `n < 0`.
    BinomialCt,
    /// `sum_k C(n,k) = 2^n`, also against the coefficients of `1/(1-2x)`.
    PowerOfTwo,
    /// `sum_{k<n} C(n+k-1,k) 2^{-k} = 2^{n-1}`, the coefficients of `x/(1-2x)`.
    HalfPowerOfTwo,
    /// `sum_k C(n-k,k) = F_{n+1}`.
    Fibonacci,
    /// Saalschutz in constant-term form, for all parameters up to the bound.
    Saalschutz,
    /// `S(m,n) = (2m)!(2n)!/(m! n! (m+n)!)` against its generating function.
    SuperCatalan,
}

impl IdentityId {
    pub const ALL: [IdentityId; 6] = [
        IdentityId::BinomialCt,
        IdentityId::PowerOfTwo,
        IdentityId::HalfPowerOfTwo,
        IdentityId::Fibonacci,
        IdentityId::Saalschutz,
        IdentityId::SuperCatalan,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityId::BinomialCt => "binomial-ct",
            IdentityId::PowerOfTwo => "power-of-two",
            IdentityId::HalfPowerOfTwo => "half-power-of-two",
            IdentityId::Fibonacci => "fibonacci",
            IdentityId::Saalschutz => "saalschutz",
            IdentityId::SuperCatalan => "super-catalan",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|i| i.name() == s)
    }
}

/// One evaluated instance: `lhs` by direct summation, `rhs` from a closed
/// form or a series coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub id: IdentityId,
    pub params: Vec<i64>,
    pub lhs: Q,
    pub rhs: Q,
}

impl IdentityCheck {
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn c(n: i64, k: i64) -> Q {
    if k < 0 {
        Q::zero()
    } else {
        Q::from(binomial(n, k as u64))
    }
}

fn pow2(e: i64) -> Q {
    let p = Q::from(BigInt::from(2)).pow(e.unsigned_abs() as i32);
    if e < 0 {
        Q::one() / p
    } else {
        p
    }
}

fn factorial(n: i64) -> Q {
    (1..=n).fold(Q::one(), |acc, i| acc * Q::from(BigInt::from(i)))
}

/// Coefficients of `1/(1 - r x)` times `x^shift`.
fn geometric(r: i64, shift: usize, len: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    let mut p = Q::one();
    for slot in out.iter_mut().skip(shift) {
        *slot = p.clone();
        p = p * Q::from(BigInt::from(r));
    }
    out
}

/// Evaluates one identity over all parameters up to `max` (inclusive).
pub fn binomial_suite(id: IdentityId, max: i64) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    let mut push = |params: Vec<i64>, lhs: Q, rhs: Q| out.push(IdentityCheck { id, params, lhs, rhs });
    match id {
        IdentityId::BinomialCt => {
            for n in -max..=max {
                for k in 0..=max {
                    // expand (1+a)^n around a = infinity: a^n (1 + 1/a)^n
                    let around_inf = if n - k >= 0 { c(n, n - k) } else { Q::zero() };
                    if n >= 0 {
                        let one_plus = Laurent::from_terms(1, [(vec![0], Q::one()), (vec![1], Q::one())]);
                        let direct = one_plus.pow(n as u32).coeff(&[k]);
                        push(vec![n, k, 0], direct, c(n, k));
                        push(vec![n, k, 1], around_inf, c(n, k));
                    } else {
                        push(vec![n, k, 1], around_inf, Q::zero());
                    }
                }
            }
        }
        IdentityId::PowerOfTwo => {
            let g = geometric(2, 0, max as usize + 1);
            for n in 0..=max {
                let lhs = (0..=n).fold(Q::zero(), |a, k| a + c(n, k));
                push(vec![n, 0], lhs.clone(), pow2(n));
                push(vec![n, 1], lhs, g[n as usize].clone());
            }
        }
        IdentityId::HalfPowerOfTwo => {
            let g = geometric(2, 1, max as usize + 1);
            for n in 0..=max {
                let lhs = (0..n).fold(Q::zero(), |a, k| a + c(n + k - 1, k) * pow2(-k));
                push(vec![n], lhs, g[n as usize].clone());
            }
        }
        IdentityId::Fibonacci => {
            let mut fib = vec![Q::zero(), Q::one()];
            while fib.len() < max as usize + 2 {
                let l = fib.len();
                fib.push(fib[l - 1].clone() + fib[l - 2].clone());
            }
            for n in 0..=max {
                let lhs = (0..=n / 2).fold(Q::zero(), |a, k| a + c(n - k, k));
                push(vec![n], lhs, fib[n as usize + 1].clone());
            }
        }
        IdentityId::Saalschutz => {
            let g = saalschutz_series(max);
            for a in 0..=max {
                for d in 0..=max {
                    for e in 0..=max {
                        for n in 0..=max {
                            let lhs = (0..=n).fold(Q::zero(), |acc, k| {
                                let s = if k % 2 == 0 { Q::one() } else { -Q::one() };
                                acc + s * c(a + k - 1, k) * c(a + e, n - k) * c(d + e + k - 1, e)
                            });
                            let key = vec![a, d, e, n];
                            let coeff = g.get(&key).cloned().unwrap_or_else(Q::zero);
                            let closed = c(d - a + n - 1, n) * c(d + e - 1, e - n);
                            push(vec![a, d, e, n, 0], lhs.clone(), coeff);
                            push(vec![a, d, e, n, 1], lhs, closed);
                        }
                    }
                }
            }
        }
        IdentityId::SuperCatalan => {
            let s = super_catalan_series(max as usize);
            for m in 0..=max {
                for n in 0..=max - m {
                    let closed = factorial(2 * m) * factorial(2 * n) / (factorial(m) * factorial(n) * factorial(m + n));
                    push(vec![m, n], closed, s[m as usize][n as usize].clone());
                }
            }
        }
    }
    out
}

type Sparse = HashMap<Exp, Q>;

fn sparse_mul(p: &Sparse, q: &Sparse, bound: i64) -> Sparse {
    let mut r: Sparse = HashMap::new();
    for (a, x) in p {
        for (b, y) in q {
            let e: Exp = a.iter().zip(b).map(|(i, j)| i + j).collect();
            if e.iter().any(|&v| v > bound) {
                continue;
            }
            let slot = r.entry(e).or_insert_with(Q::zero);
            *slot = slot.clone() + x.clone() * y.clone();
        }
    }
    r.retain(|_, v| !v.is_zero());
    r
}

fn sparse(terms: &[([i64; 4], i64)]) -> Sparse {
    terms.iter().map(|(e, c)| (e.to_vec(), Q::from(BigInt::from(*c)))).collect()
}

/// `1/(1 - p)` for `p` without constant term, each exponent at most `bound`.
fn inverse_one_minus(p: &Sparse, bound: i64) -> Sparse {
    let one = sparse(&[([0, 0, 0, 0], 1)]);
    let mut out = one.clone();
    let mut power = one;
    for _ in 0..4 * bound {
        power = sparse_mul(&power, p, bound);
        for (k, v) in &power {
            let slot = out.entry(k.clone()).or_insert_with(Q::zero);
            *slot = slot.clone() + v.clone();
        }
    }
    out
}

/// Coefficients of `(1-x3)(1-x3-x3x4) / ((1-x1-x3+x1x3+x1x3x4)(1-x2-x3-x3x4))`.
fn saalschutz_series(bound: i64) -> Sparse {
    let num = sparse_mul(
        &sparse(&[([0, 0, 0, 0], 1), ([0, 0, 1, 0], -1)]),
        &sparse(&[([0, 0, 0, 0], 1), ([0, 0, 1, 0], -1), ([0, 0, 1, 1], -1)]),
        bound,
    );
    let p1 = sparse(&[([1, 0, 0, 0], 1), ([0, 0, 1, 0], 1), ([1, 0, 1, 0], -1), ([1, 0, 1, 1], -1)]);
    let p2 = sparse(&[([0, 1, 0, 0], 1), ([0, 0, 1, 0], 1), ([0, 0, 1, 1], 1)]);
    let g = sparse_mul(&num, &inverse_one_minus(&p1, bound), bound);
    sparse_mul(&g, &inverse_one_minus(&p2, bound), bound)
}

/// Coefficients `s[m][n]` of `(x/sqrt(1-4x) + y/sqrt(1-4y)) / (x + y - 4xy)`
/// for `m + n <= bound`, solved from `s * (x + y - 4xy) = numerator`.
fn super_catalan_series(bound: usize) -> Vec<Vec<Q>> {
    let central = |k: usize| c(2 * k as i64, k as i64);
    let num = |m: usize, n: usize| -> Q {
        match (m, n) {
            (0, 0) => Q::zero(),
            (m, 0) => central(m - 1),
            (0, n) => central(n - 1),
            _ => Q::zero(),
        }
    };
    let mut s = vec![vec![Q::zero(); bound + 1]; bound + 1];
    let get = |s: &Vec<Vec<Q>>, m: i64, n: i64| -> Q {
        if m < 0 || n < 0 {
            Q::zero()
        } else {
            s[m as usize][n as usize].clone()
        }
    };
    // [x^m y^(d-m)] gives s[m-1][d-m] + s[m][d-m-1] - 4 s[m-1][d-m-1]
    for d in 1..=bound + 1 {
        for m in 0..d {
            let n = d - m;
            let known = get(&s, m as i64 - 1, n as i64) - Q::from(BigInt::from(4)) * get(&s, m as i64 - 1, n as i64 - 1);
            s[m][n - 1] = num(m, n) - known;
        }
    }
    s
}
