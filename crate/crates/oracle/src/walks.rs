use crate::{CoefficientTable, OracleError};
use exact_algebra::{BigInt, Q};
use num_traits::Zero;
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Steps {
    /// An explicit list of steps; repeats count as separate steps.
    Finite(Vec<(i64, i64)>),
    /// Every step `(dx0 + i, dy0 + j)` with `i, j >= 0`, i.e. weight
    /// `x^dx0 y^dy0 / ((1-x)(1-y))`.
    Quadrant { dx0: i64, dy0: i64 },
}

impl Steps {
    fn min_step(&self) -> (i64, i64) {
        match self {
            Steps::Finite(v) => (
                v.iter().map(|s| s.0).min().unwrap_or(0),
                v.iter().map(|s| s.1).min().unwrap_or(0),
            ),
            Steps::Quadrant { dx0, dy0 } => (*dx0, *dy0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    None,
    /// Never revisit the half line `{(-k, 0) : k >= 0}` after the start.
    Slit,
    /// Stay on or below `y = x`.
    NotAboveDiagonal,
    /// Keep `lo <= y <= hi`.
    HeightBand(i64, i64),
    /// Keep `x > 0` and `y > 0`.
    Quarter,
}

impl Constraint {
    fn allows(&self, x: i64, y: i64) -> bool {
        match *self {
            Constraint::None => true,
            Constraint::Slit => !(y == 0 && x <= 0),
            Constraint::NotAboveDiagonal => y <= x,
            Constraint::HeightBand(lo, hi) => lo <= y && y <= hi,
            Constraint::Quarter => x > 0 && y > 0,
        }
    }
}

/// Number of walks of each length `0..=length` from `start`, keyed by
/// `[length, x, y]`.
///
/// With `window = Some((xmax, ymax))` only endpoints with `x <= xmax` and
/// `y <= ymax` are reported, and the search is pruned to positions that can
/// still reach that window; an infinite step set requires a window.
pub fn count_walks(
    steps: &Steps,
    constraint: Constraint,
    length: usize,
    start: (i64, i64),
    window: Option<(i64, i64)>,
) -> Result<CoefficientTable, OracleError> {
    if matches!(steps, Steps::Quadrant { .. }) && window.is_none() {
        return Err(OracleError::WindowRequired);
    }
    let (mx, my) = steps.min_step();
    // the cheapest way a position at step k can still move down/left
    let slack = |k: usize, m: i64| -> i64 { (length - k) as i64 * m.min(0) };
    let fits = |x: i64, y: i64, k: usize| -> bool {
        window.map_or(true, |(wx, wy)| x + slack(k, mx) <= wx && y + slack(k, my) <= wy)
    };

    let mut out = CoefficientTable::new();
    let mut layer: HashMap<(i64, i64), BigInt> = HashMap::new();
    layer.insert(start, BigInt::from(1));
    for k in 0..=length {
        for (&(x, y), c) in &layer {
            if window.map_or(true, |(wx, wy)| x <= wx && y <= wy) {
                out.add(vec![k as i64, x, y], Q::from(c.clone()));
            }
        }
        if k == length {
            break;
        }
        let mut next: HashMap<(i64, i64), BigInt> = HashMap::new();
        for (&(x, y), c) in &layer {
            let mut push = |dx: i64, dy: i64| {
                let (nx, ny) = (x + dx, y + dy);
                if constraint.allows(nx, ny) && fits(nx, ny, k + 1) {
                    let slot = next.entry((nx, ny)).or_insert_with(BigInt::zero);
                    *slot += c;
                }
            };
            match steps {
                Steps::Finite(v) => v.iter().for_each(|&(dx, dy)| push(dx, dy)),
                Steps::Quadrant { dx0, dy0 } => {
                    let (wx, wy) = window.expect("checked above");
                    let cap_x = wx - x - slack(k + 1, mx);
                    let cap_y = wy - y - slack(k + 1, my);
                    for dx in *dx0..=cap_x {
                        for dy in *dy0..=cap_y {
                            push(dx, dy);
                        }
                    }
                }
            }
        }
        layer = next;
    }
    Ok(out)
}
