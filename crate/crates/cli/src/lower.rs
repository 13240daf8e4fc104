//! Turning a parsed expression into a factored rational function over a
//! declared list of variables.

use crate::expr::Expr;
use crate::CliError;
use exact_algebra::{Laurent, QPoly, QRatFunc, UniPoly, Q};
use laurent_order::VariableOrder;
use num_traits::{One, Zero};
use omega_engine::ElliottRational;

/// `prod num_i^m_i / prod den_j^n_j`, with factors kept as written so that
/// binomial denominators survive lowering.
#[derive(Clone, Debug, PartialEq)]
pub struct Factored {
    pub nvars: usize,
    pub num: Vec<(Laurent, u32)>,
    pub den: Vec<(Laurent, u32)>,
}

fn product(nvars: usize, fs: &[(Laurent, u32)]) -> Laurent {
    fs.iter().fold(Laurent::one(nvars), |acc, (f, m)| &acc * &f.pow(*m))
}

/// Adds `(f, m)` to a factor list, merging equal factors.
fn push_factor(list: &mut Vec<(Laurent, u32)>, f: Laurent, m: u32) {
    if m == 0 {
        return;
    }
    match list.iter_mut().find(|(g, _)| *g == f) {
        Some(slot) => slot.1 += m,
        None => list.push((f, m)),
    }
}

impl Factored {
    fn poly(p: Laurent) -> Self {
        Factored {
            nvars: p.nvars(),
            num: vec![(p, 1)],
            den: Vec::new(),
        }
    }

    pub fn numerator(&self) -> Laurent {
        product(self.nvars, &self.num)
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().any(|(f, _)| f.is_zero())
    }

    fn mul(mut self, other: Factored) -> Factored {
        for (f, m) in other.num {
            push_factor(&mut self.num, f, m);
        }
        for (f, m) in other.den {
            push_factor(&mut self.den, f, m);
        }
        self
    }

    fn inverse(self) -> Result<Factored, CliError> {
        if self.is_zero() {
            return Err(CliError::Domain("division by zero".into()));
        }
        Ok(Factored {
            nvars: self.nvars,
            num: self.den,
            den: self.num,
        })
    }

    fn pow(self, k: i64) -> Result<Factored, CliError> {
        let base = if k < 0 { self.inverse()? } else { self };
        let e = u32::try_from(k.unsigned_abs()).map_err(|_| CliError::Domain("exponent too large".into()))?;
        if e == 0 {
            return Ok(Factored::poly(Laurent::one(base.nvars)));
        }
        let scale = |fs: Vec<(Laurent, u32)>| fs.into_iter().map(|(f, m)| (f, m * e)).collect();
        Ok(Factored {
            nvars: base.nvars,
            num: scale(base.num),
            den: scale(base.den),
        })
    }

    /// `a/D1 + b/D2` over the smallest common multiple of the two factor lists
    /// (factors compared exactly as written).
    fn add(self, other: Factored) -> Factored {
        let n = self.nvars;
        let mut common: Vec<(Laurent, u32)> = self.den.clone();
        for (f, m) in &other.den {
            match common.iter_mut().find(|(g, _)| g == f) {
                Some(slot) => slot.1 = slot.1.max(*m),
                None => common.push((f.clone(), *m)),
            }
        }
        let missing = |den: &[(Laurent, u32)]| -> Laurent {
            let mut acc = Laurent::one(n);
            for (f, m) in &common {
                let have = den.iter().find(|(g, _)| g == f).map_or(0, |(_, k)| *k);
                acc = &acc * &f.pow(m - have);
            }
            acc
        };
        let a = &self.numerator() * &missing(&self.den);
        let b = &other.numerator() * &missing(&other.den);
        let sum = &a + &b;
        if sum.is_zero() {
            return Factored::poly(sum);
        }
        Factored {
            nvars: n,
            num: vec![(sum, 1)],
            den: common,
        }
    }

    fn neg(mut self) -> Factored {
        push_factor(&mut self.num, Laurent::constant(self.nvars, -Q::one()), 1);
        self
    }

    /// The Elliott-rational form; a denominator factor with more than two
    /// terms is an error naming the factor.
    pub fn to_elliott(&self, order: &VariableOrder) -> Result<ElliottRational, CliError> {
        if self.is_zero() {
            return Ok(ElliottRational::zero(order.clone()));
        }
        for (f, _) in &self.den {
            if f.len() > 2 {
                return Err(CliError::Domain(format!(
                    "denominator factor {} has more than two terms; expected a product of binomials",
                    f.display(order.vars())
                )));
            }
        }
        Ok(ElliottRational::from_factors(self.numerator(), &self.den, order.clone())?)
    }

    /// `N / prod D_i^m_i` as univariate polynomials (one variable only); the
    /// factor list has distinct entries, monomial factors moved into `t^k`.
    pub fn to_univariate(&self) -> Result<(QPoly, Vec<(QPoly, u32)>), CliError> {
        if self.nvars != 1 {
            return Err(CliError::Usage("expected a function of one variable".into()));
        }
        let (mut num, mut shift) = split_power(&self.numerator());
        let mut factors: Vec<(QPoly, u32)> = Vec::new();
        let mut constant = Q::one();
        for (f, m) in &self.den {
            let (p, low) = split_power(f);
            shift -= low * *m as i64;
            if p.degree() == Some(0) {
                constant = constant * exact_algebra::Field::pow(&p.coeff(0), *m as u64);
                continue;
            }
            match factors.iter_mut().find(|(g, _)| *g == p) {
                Some(slot) => slot.1 += m,
                None => factors.push((p, *m)),
            }
        }
        num = num.scale(&(Q::one() / constant));
        if shift > 0 {
            num = num.shift(shift as usize);
        } else if shift < 0 {
            let t = QPoly::x();
            match factors.iter_mut().find(|(g, _)| *g == t) {
                Some(slot) => slot.1 += (-shift) as u32,
                None => factors.push((t, (-shift) as u32)),
            }
        }
        Ok((num, factors))
    }

    pub fn to_ratfunc(&self) -> Result<QRatFunc, CliError> {
        let (n, fs) = self.to_univariate()?;
        let d = fs.iter().fold(QPoly::one(), |acc, (f, m)| &acc * &f.pow(*m));
        Ok(QRatFunc::new(n, d)?)
    }
}

/// `p = t^low * q` with `q(0) != 0` (for nonzero `p`).
fn split_power(p: &Laurent) -> (QPoly, i64) {
    let low = p.terms().map(|(e, _)| e[0]).min().unwrap_or(0);
    let deg = p.terms().map(|(e, _)| e[0] - low).max().unwrap_or(0) as usize;
    let mut cs = vec![Q::zero(); deg + 1];
    for (e, c) in p.terms() {
        cs[(e[0] - low) as usize] = c.clone();
    }
    (UniPoly::new(cs), low)
}

/// Lowers `e` over the variables `vars` (in order).
pub fn lower(e: &Expr, vars: &[String]) -> Result<Factored, CliError> {
    let n = vars.len();
    Ok(match e {
        Expr::Int(k) => Factored::poly(Laurent::constant(n, Q::from(k.clone()))),
        Expr::Var(v) => {
            let i = vars
                .iter()
                .position(|w| w == v)
                .ok_or_else(|| CliError::Usage(format!("unknown variable '{}' (declared: {})", v, vars.join(","))))?;
            Factored::poly(Laurent::var(n, i))
        }
        Expr::Neg(a) => lower(a, vars)?.neg(),
        Expr::Add(a, b) => lower(a, vars)?.add(lower(b, vars)?),
        Expr::Sub(a, b) => lower(a, vars)?.add(lower(b, vars)?.neg()),
        Expr::Mul(a, b) => lower(a, vars)?.mul(lower(b, vars)?),
        Expr::Div(a, b) => lower(a, vars)?.mul(lower(b, vars)?.inverse()?),
        Expr::Pow(a, k) => lower(a, vars)?.pow(*k)?,
    })
}
