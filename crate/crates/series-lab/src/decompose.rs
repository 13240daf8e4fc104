use crate::split::sign_split;
use crate::{SeriesError, TruncatedSeries};
use omega_engine::ElliottRational;

/// `h = minus * zero * plus` with `minus - 1` carrying only negative powers
/// of the split variable, `zero` free of it, and `plus - 1` only positive
/// powers; each part has constant coefficient 1 in the series variable.
#[derive(Clone, Debug, PartialEq)]
pub struct ThirdDecomposition {
    pub minus: TruncatedSeries,
    pub zero: TruncatedSeries,
    pub plus: TruncatedSeries,
}

impl ThirdDecomposition {
    pub fn product(&self) -> Result<TruncatedSeries, SeriesError> {
        self.minus.mul(&self.zero)?.mul(&self.plus)
    }
}

/// The logarithm of `h` split coefficientwise by the sign of the power of
/// `x`: `(negative, zero, positive)`.
pub fn split_log(h: &TruncatedSeries, x: &str) -> Result<[TruncatedSeries; 3], SeriesError> {
    let l = h.log()?;
    let mut parts = [l.clone(), l.clone(), l.clone()];
    for (k, c) in l.coeffs.iter().enumerate() {
        let s = sign_split(c, x)?;
        parts[0].coeffs[k] = s.negative;
        parts[1].coeffs[k] = s.zero;
        parts[2].coeffs[k] = s.positive;
    }
    Ok(parts)
}

/// Unique factorization by truncated log, sign split, truncated exp.
pub fn third_decomposition(h: &TruncatedSeries, x: &str, order: usize) -> Result<ThirdDecomposition, SeriesError> {
    let h = h.truncate(order);
    let [neg, zero, pos] = split_log(&h, x)?;
    Ok(ThirdDecomposition {
        minus: neg.exp()?,
        zero: zero.exp()?,
        plus: pos.exp()?,
    })
}

/// Whether every coefficient past `t^0` has only powers of `x` of the given
/// sign (`-1`, `0`, `1`), with the constant coefficient equal to 1.
pub fn has_sign(s: &TruncatedSeries, x: &str, sign: i64) -> Result<bool, SeriesError> {
    if s.coeffs[0].as_constant() != Some(num_traits::One::one()) {
        return Ok(false);
    }
    for c in &s.coeffs[1..] {
        if c.is_zero() {
            continue;
        }
        let parts = sign_split(c, x)?;
        let others: [&ElliottRational; 2] = match sign {
            -1 => [&parts.zero, &parts.positive],
            0 => [&parts.negative, &parts.positive],
            _ => [&parts.negative, &parts.zero],
        };
        if others.iter().any(|p| !p.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}
