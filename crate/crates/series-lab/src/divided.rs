use crate::{SeriesError, TruncatedSeries};
use exact_algebra::{Exp, Laurent, Q};
use omega_engine::{cancel_common, ElliottRational};

/// Where a divided difference `d_u f(x) = (f(x) - f(u)) / (x - u)` is taken.
#[derive(Clone, Debug, PartialEq)]
pub enum Point {
    /// Another variable of the ring.
    Var(String),
    /// A field element.
    Value(Q),
    /// `u = x`, where the difference quotient becomes the derivative.
    Same,
}

fn substitute_var(f: &ElliottRational, x: &str, u: &str) -> Result<ElliottRational, SeriesError> {
    let (ix, iu) = (
        f.order.index_of(x).map_err(omega_engine::OmegaError::from)?,
        f.order.index_of(u).map_err(omega_engine::OmegaError::from)?,
    );
    let n = f.nvars();
    let images: Vec<Exp> = (0..n)
        .map(|k| {
            let mut e = vec![0; n];
            e[if k == ix { iu } else { k }] = 1;
            e
        })
        .collect();
    Ok(f.substitute_monomials(&images, f.order.clone())?)
}

/// One divided difference in the variable `x`.
pub fn divided_difference_step(f: &ElliottRational, x: &str, at: &Point) -> Result<ElliottRational, SeriesError> {
    let n = f.nvars();
    let ix = f.order.index_of(x).map_err(omega_engine::OmegaError::from)?;
    let (shifted, u_poly) = match at {
        Point::Same => return Ok(f.derivative(x)?),
        Point::Var(u) => {
            let iu = f.order.index_of(u).map_err(omega_engine::OmegaError::from)?;
            (substitute_var(f, x, u)?, Laurent::var(n, iu))
        }
        Point::Value(c) => (f.eval_var(x, c)?, Laurent::constant(n, c.clone())),
    };
    let diff = f.sub(&shifted);
    let gap = &Laurent::var(n, ix) - &u_poly;
    let inv = ElliottRational::from_factors(Laurent::one(n), &[(gap, 1)], f.order.clone())?;
    Ok(cancel_common(&diff.mul(&inv)))
}

/// `d_{u_n} ... d_{u_1} f`, applying `points[0]` first.
pub fn divided_difference(f: &ElliottRational, x: &str, points: &[Point]) -> Result<ElliottRational, SeriesError> {
    let mut out = f.clone();
    for p in points {
        out = divided_difference_step(&out, x, p)?;
    }
    Ok(out)
}

/// The complete homogeneous symmetric function `h_m` of the given series.
pub fn complete_homogeneous(values: &[TruncatedSeries], m: usize) -> Result<TruncatedSeries, SeriesError> {
    let first = values
        .first()
        .ok_or_else(|| SeriesError::BadInput("h_m needs at least one argument".into()))?;
    let zero = TruncatedSeries::zero(&first.variable, first.ring.clone(), first.order);
    // h[k] over the arguments seen so far, extended one argument at a time:
    // h'_k = sum_j u^j h_{k-j}
    let mut h = vec![zero.clone(); m + 1];
    h[0] = TruncatedSeries::one(&first.variable, first.ring.clone(), first.order);
    for u in values {
        let mut next = vec![zero.clone(); m + 1];
        for k in 0..=m {
            let mut acc = h[k].clone();
            let mut power = u.clone();
            for j in 1..=k {
                acc = acc.add(&power.mul(&h[k - j])?)?;
                power = power.mul(u)?;
            }
            next[k] = acc;
        }
        h = next;
    }
    Ok(h.swap_remove(m))
}

/// `d_{u_n} ... d_{u_1} Q` evaluated at `x = u_0` for a polynomial
/// `Q = sum_k q_k x^k`, with `points = [u_0, u_1, .., u_n]` arbitrary
/// series (coincident points allowed): `sum_k q_k h_{k-n}(u_0, .., u_n)`.
pub fn divided_difference_at(q: &[ElliottRational], points: &[TruncatedSeries]) -> Result<TruncatedSeries, SeriesError> {
    let first = points
        .first()
        .ok_or_else(|| SeriesError::BadInput("need the evaluation point u_0".into()))?;
    let n = points.len() - 1;
    let mut out = TruncatedSeries::zero(&first.variable, first.ring.clone(), first.order);
    for (k, qk) in q.iter().enumerate() {
        if k < n || qk.is_zero() {
            continue;
        }
        out = out.add(&complete_homogeneous(points, k - n)?.mul_coeff(qk))?;
    }
    Ok(out)
}
