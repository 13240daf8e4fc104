use crate::{SeriesError, TruncatedSeries};
use exact_algebra::{binomial, Laurent, Q};
use laurent_order::VariableOrder;
use num_traits::One;
use omega_engine::{cancel_common, ElliottRational};
use std::collections::BTreeMap;

/// A polynomial in a root variable `y` and the series variable `t` whose
/// coefficients are Elliott-rational in the remaining variables.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly {
    pub var: String,
    pub t: String,
    /// `(power of var, power of t) -> coefficient`
    pub coeffs: BTreeMap<(u32, u32), ElliottRational>,
    pub ring: VariableOrder,
}

impl BiPoly {
    /// Reads `f` as a polynomial in `var` and `t`; its denominator must not
    /// involve either variable.
    pub fn from_rational(f: &ElliottRational, var: &str, t: &str) -> Result<Self, SeriesError> {
        let (iv, it) = (
            f.order.index_of(var).map_err(omega_engine::OmegaError::from)?,
            f.order.index_of(t).map_err(omega_engine::OmegaError::from)?,
        );
        for d in &f.denominator {
            if d.lhs.exp[iv] != 0 || d.rhs.exp[iv] != 0 || d.lhs.exp[it] != 0 || d.rhs.exp[it] != 0 {
                return Err(SeriesError::NotPolynomialIn(format!("{} and {}", var, t), f.display()));
            }
        }
        let mut groups: BTreeMap<(u32, u32), Laurent> = BTreeMap::new();
        for (e, c) in f.numerator.terms() {
            if e[iv] < 0 || e[it] < 0 {
                return Err(SeriesError::NotPolynomialIn(format!("{} and {}", var, t), f.display()));
            }
            let mut base = e.clone();
            base[iv] = 0;
            base[it] = 0;
            groups
                .entry((e[iv] as u32, e[it] as u32))
                .or_insert_with(|| Laurent::zero(f.nvars()))
                .add_term(base, c.clone());
        }
        let mut coeffs = BTreeMap::new();
        let mut ring = None;
        for (k, num) in groups {
            let part = ElliottRational {
                numerator: num,
                denominator: f.denominator.clone(),
                order: f.order.clone(),
            };
            let c = cancel_common(&part.remove_variable(var)?.remove_variable(t)?);
            ring = Some(c.order.clone());
            coeffs.insert(k, c);
        }
        let ring = match ring {
            Some(r) => r,
            None => ElliottRational::zero(f.order.clone()).remove_variable(var)?.remove_variable(t)?.order,
        };
        Ok(BiPoly {
            var: var.to_string(),
            t: t.to_string(),
            coeffs,
            ring,
        })
    }

    pub fn coeff(&self, i: u32, k: u32) -> ElliottRational {
        self.coeffs
            .get(&(i, k))
            .cloned()
            .unwrap_or_else(|| ElliottRational::zero(self.ring.clone()))
    }

    pub fn degree_in_var(&self) -> u32 {
        self.coeffs.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// `d/dvar`.
    pub fn derivative(&self) -> BiPoly {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|((i, _), _)| *i > 0)
            .map(|((i, k), c)| ((i - 1, *k), c.scale(&Q::from_integer((*i).into()))))
            .collect();
        BiPoly {
            coeffs,
            ..self.clone()
        }
    }

    /// `sum_i (sum_k c_{i,k} t^k) * y^i` truncated at `order`.
    pub fn eval(&self, y: &TruncatedSeries, order: usize) -> Result<TruncatedSeries, SeriesError> {
        let y = y.truncate(order);
        let mut out = TruncatedSeries::zero(&self.t, self.ring.clone(), order);
        let mut power = TruncatedSeries::one(&self.t, self.ring.clone(), order);
        for i in 0..=self.degree_in_var() {
            if i > 0 {
                power = power.mul(&y)?;
            }
            let mut row = TruncatedSeries::zero(&self.t, self.ring.clone(), order);
            for ((_, k), c) in self.coeffs.range((i, 0)..=(i, u32::MAX)) {
                if (*k as usize) <= order {
                    row.coeffs[*k as usize] = c.clone();
                }
            }
            if !row.is_zero() {
                out = out.add(&row.mul(&power)?)?;
            }
        }
        Ok(out)
    }
}

/// The unique root `Y(t)` in `t K[[t]]` of `G(y, t)`, found one coefficient
/// at a time: with `G = a y + (higher)` the coefficient `c_n` solves
/// `a c_n + [t^n] G(c_1 t + ... + c_{n-1} t^{n-1}, t) = 0`.
pub fn positive_root(g: &ElliottRational, var: &str, t: &str, order: usize) -> Result<TruncatedSeries, SeriesError> {
    let bp = BiPoly::from_rational(g, var, t)?;
    positive_root_of(&bp, order)
}

pub fn positive_root_of(bp: &BiPoly, order: usize) -> Result<TruncatedSeries, SeriesError> {
    if !bp.coeff(0, 0).is_zero() {
        return Err(SeriesError::BadInput(format!("G({}, 0) must vanish at {} = 0", bp.var, bp.var)));
    }
    let a = bp.coeff(1, 0);
    if a.is_zero() {
        return Err(SeriesError::NotInvertible(format!("the {} coefficient of G at {} = 0 is zero", bp.var, bp.t)));
    }
    let a_inv = a.inverse().map_err(|_| SeriesError::NotInvertible(a.display()))?;
    let mut y = TruncatedSeries::zero(&bp.t, bp.ring.clone(), order);
    for n in 1..=order {
        let residual = bp.eval(&y, n)?;
        y.coeffs[n] = cancel_common(&residual.coeffs[n].mul(&a_inv).neg());
    }
    Ok(y)
}

/// `CT_var var F / G` through the root of `G`: `F(Y) / G_var(Y)`.
///
/// `F` and `G` are read as polynomials in `var` and `t` (see [`BiPoly`]).
pub fn lagrange_ct(
    f: &ElliottRational,
    g: &ElliottRational,
    var: &str,
    t: &str,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let gp = BiPoly::from_rational(g, var, t)?;
    if f.is_zero() {
        return Ok(TruncatedSeries::zero(t, gp.ring.clone(), order));
    }
    let fp = BiPoly::from_rational(f, var, t)?;
    let y = positive_root_of(&gp, order)?;
    let top = fp.eval(&y, order)?;
    let bottom = gp.derivative().eval(&y, order)?;
    top.div(&bottom)
}

/// Expands an Elliott-rational function of `t` (and the ring variables) as a
/// power series in `t`: every binomial factor is written as a monomial times
/// `1 - r` with `r` of positive `t`-degree and expanded geometrically.
pub fn series_from_rational(f: &ElliottRational, t: &str, order: usize) -> Result<TruncatedSeries, SeriesError> {
    let it = f.order.index_of(t).map_err(omega_engine::OmegaError::from)?;
    let n = f.nvars();
    let ring = ElliottRational::zero(f.order.clone()).remove_variable(t)?.order;
    // canonical binomials carry no monomial content, so a factor whose two
    // sides have equal t-degree is free of t and stays in every coefficient
    let mut kept = Vec::new();
    let mut prefactor = f.numerator.clone();
    let mut expansions: Vec<(Laurent, i64, u32)> = Vec::new();
    for d in &f.denominator {
        let (el, er) = (d.lhs.exp[it], d.rhs.exp[it]);
        if el == er {
            kept.push(d.clone());
            continue;
        }
        // lhs - rhs = lead * (1 - r) with lead the side of lower t-degree
        let (lead, other, sign) = if el < er { (&d.lhs, &d.rhs, Q::one()) } else { (&d.rhs, &d.lhs, -Q::one()) };
        let r_exp: Vec<i64> = other.exp.iter().zip(&lead.exp).map(|(a, b)| a - b).collect();
        let r = Laurent::monomial(r_exp.clone(), other.coeff.clone() / lead.coeff.clone());
        let inv_exp: Vec<i64> = lead.exp.iter().map(|e| -e * d.mult as i64).collect();
        let lead_c = lead.coeff.clone() * sign;
        let c = Q::one() / (0..d.mult).fold(Q::one(), |acc, _| acc * lead_c.clone());
        prefactor = prefactor.mul_monomial(&inv_exp, &c);
        expansions.push((r, r_exp[it], d.mult));
    }
    let lowest = prefactor.terms().map(|(e, _)| e[it]).min().unwrap_or(0);
    let need = order as i64 - lowest;
    let mut acc = Laurent::one(n);
    for (r, deg, m) in &expansions {
        let mut part = Laurent::zero(n);
        let mut power = Laurent::one(n);
        let mut k = 0i64;
        while k * deg <= need {
            part = &part + &power.scale(&Q::from(binomial(*m as i64 - 1 + k, k as u64)));
            power = &power * r;
            k += 1;
        }
        acc = (&acc * &part).filter(|e| e[it] <= need);
    }
    let mut coeffs = vec![Laurent::zero(n); order + 1];
    for (e, c) in (&acc * &prefactor).terms() {
        if e[it] < 0 {
            return Err(SeriesError::NotPowerSeries(f.display()));
        }
        if (e[it] as usize) <= order {
            let mut base = e.clone();
            base[it] = 0;
            coeffs[e[it] as usize].add_term(base, c.clone());
        }
    }
    let out = coeffs
        .into_iter()
        .map(|num| {
            let e = ElliottRational {
                numerator: num,
                denominator: kept.clone(),
                order: f.order.clone(),
            };
            e.remove_variable(t).map(|x| cancel_common(&x))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TruncatedSeries::from_coeffs(t, ring, order, out))
}

/// `num / den` as a power series in `t`; the constant coefficient of `den`
/// must be invertible.
pub fn series_quotient(
    num: &ElliottRational,
    den: &ElliottRational,
    t: &str,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    series_from_rational(num, t, order)?.div(&series_from_rational(den, t, order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::int;

    #[test]
    fn geometric_in_t() {
        let order = VariableOrder::new(&["x", "t"]).unwrap();
        let f = ElliottRational::from_factors(
            Laurent::one(2),
            &[(Laurent::from_terms(2, [(vec![0, 0], int(1)), (vec![2, 1], int(-3))]), 2)],
            order,
        )
        .unwrap();
        let s = series_from_rational(&f, "t", 3).unwrap();
        // 1/(1-3x^2 t)^2 = sum (k+1) 3^k x^(2k) t^k
        for k in 0..=3usize {
            let want = Q::from_integer(((k as i64 + 1) * 3i64.pow(k as u32)).into());
            assert_eq!(s.count(k, &[2 * k as i64]), Some(want));
        }
    }
}
