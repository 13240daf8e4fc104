use crate::decompose::split_log;
use crate::root::{positive_root, positive_root_of, BiPoly};
use crate::split::{coefficient, sign_split};
use crate::{SeriesError, TruncatedSeries};
use exact_algebra::{int, Exp, Laurent, Q};
use laurent_order::VariableOrder;
use num_traits::{One, Zero};
use omega_engine::{ct_lambda, ElliottRational};
use std::collections::BTreeMap;

fn ring(vars: &[&str]) -> VariableOrder {
    VariableOrder::new(vars).expect("distinct names")
}

fn mono(ring: &VariableOrder, exp: Exp) -> ElliottRational {
    ElliottRational::polynomial(Laurent::monomial(exp, Q::one()), ring.clone()).expect("sizes agree")
}

/// A set of planar steps through its weight `Gamma(S) = t * gamma` with
/// `gamma` over the variables `x, y`.
#[derive(Clone, Debug, PartialEq)]
pub struct StepSet {
    pub gamma: ElliottRational,
    /// `(dx, dy, weight)` when the set is finite.
    pub finite_steps: Option<Vec<(i64, i64, Q)>>,
}

impl StepSet {
    pub fn xy() -> VariableOrder {
        ring(&["x", "y"])
    }

    /// Unit-weight steps; repeated steps add up.
    pub fn finite(steps: &[(i64, i64)]) -> Self {
        let mut merged: BTreeMap<(i64, i64), Q> = BTreeMap::new();
        for &s in steps {
            *merged.entry(s).or_insert_with(Q::zero) += Q::one();
        }
        let num = Laurent::from_terms(2, merged.iter().map(|(&(a, b), w)| (vec![a, b], w.clone())));
        StepSet {
            gamma: ElliottRational::polynomial(num, Self::xy()).expect("two variables"),
            finite_steps: Some(merged.into_iter().map(|((a, b), w)| (a, b, w)).collect()),
        }
    }

    /// Steps given by a rational weight over `x, y`.
    pub fn rational(gamma: ElliottRational) -> Result<Self, SeriesError> {
        if gamma.order.vars() != Self::xy().vars() || gamma.order.rho().is_some() {
            return Err(SeriesError::BadInput("step weights live over the plain order x, y".into()));
        }
        let finite_steps = if gamma.is_polynomial() {
            Some(gamma.numerator.terms().map(|(e, c)| (e[0], e[1], c.clone())).collect())
        } else {
            None
        };
        Ok(StepSet { gamma, finite_steps })
    }

    /// The four unit steps north, south, east, west.
    pub fn ordinary() -> Self {
        Self::finite(&[(1, 0), (-1, 0), (0, 1), (0, -1)])
    }

    pub fn empty() -> Self {
        Self::finite(&[])
    }

    /// Whether `gamma` is unchanged by `var -> 1/var`.
    pub fn is_symmetric_in(&self, var: &str) -> Result<bool, SeriesError> {
        let i = self.gamma.order.index_of(var).map_err(omega_engine::OmegaError::from)?;
        let images: Vec<Exp> = (0..2).map(|k| if k == i { unit(2, k, -1) } else { unit(2, k, 1) }).collect();
        let flipped = self.gamma.substitute_monomials(&images, self.gamma.order.clone())?;
        Ok(flipped.same_function(&self.gamma))
    }

    /// `sum_n t^n gamma^n` as a series over `x, y`.
    pub fn walk_series(&self, order: usize) -> TruncatedSeries {
        let mut coeffs = vec![ElliottRational::one(Self::xy())];
        for n in 1..=order {
            coeffs.push(coeffs[n - 1].mul(&self.gamma));
        }
        TruncatedSeries::from_coeffs("t", Self::xy(), order, coeffs)
    }
}

fn unit(n: usize, k: usize, v: i64) -> Exp {
    let mut e = vec![0; n];
    e[k] = v;
    e
}

/// Everything the slit-plane pipeline produces.
#[derive(Clone, Debug, PartialEq)]
pub struct SlitPlane {
    /// Bilateral walks `S_x = CT_y 1/(1 - Gamma)`, over `x`.
    pub s_x: TruncatedSeries,
    pub log_s_x: TruncatedSeries,
    /// `PT_x log S_x`.
    pub log_s0: TruncatedSeries,
    /// Walks on the slit plane ending on the positive x-axis.
    pub s0: TruncatedSeries,
    /// Bridge walks: `1/(1 - B) = (S_x)_0 (S_x)_-`.
    pub b: TruncatedSeries,
    /// Smallest `p > 0` with a walk ending at `(p, 0)` within the order.
    pub p: Option<i64>,
    /// `[x^p] log S_x`, the walks ending at `(p, 0)`.
    pub s_p0: Option<TruncatedSeries>,
    /// All slit-plane walks `S(x, y; t) = (1 - B) / (1 - Gamma)`, over `x, y`.
    pub walks: TruncatedSeries,
}

impl SlitPlane {
    /// `[x^p] log S_x` as a series with constant coefficients.
    pub fn x_power(&self, p: i64) -> Result<TruncatedSeries, SeriesError> {
        let empty = ring(&[]);
        self.log_s_x.try_map(empty, |c| Ok(coefficient(c, "x", p)?.remove_variable("x")?))
    }
}

/// Bilateral walks: the coefficient of `t^n` is `CT_y gamma^n`.
pub fn bilateral_walks(steps: &StepSet, order: usize) -> Result<TruncatedSeries, SeriesError> {
    let mut power = ElliottRational::one(StepSet::xy());
    let mut coeffs = Vec::new();
    for n in 0..=order {
        if n > 0 {
            power = power.mul(&steps.gamma);
        }
        coeffs.push(ct_lambda(&power, "y")?);
    }
    Ok(TruncatedSeries::from_coeffs("t", ring(&["x"]), order, coeffs))
}

pub fn slit_plane(steps: &StepSet, order: usize) -> Result<SlitPlane, SeriesError> {
    let s_x = bilateral_walks(steps, order)?;
    let log_s_x = s_x.log()?;
    let [neg, zero, pos] = split_log(&s_x, "x")?;
    let s0 = pos.exp()?;
    let b = TruncatedSeries::one("t", ring(&["x"]), order).sub(&neg.add(&zero)?.neg().exp()?)?;
    let mut out = SlitPlane {
        s_x,
        log_s_x,
        log_s0: pos,
        s0,
        b: b.clone(),
        p: None,
        s_p0: None,
        walks: TruncatedSeries::zero("t", StepSet::xy(), order),
    };
    let reach = match &steps.finite_steps {
        Some(v) => v.iter().map(|s| s.0).max().unwrap_or(0).max(0) * order as i64,
        None => order as i64 + 1,
    };
    for p in 1..=reach {
        let s = out.x_power(p)?;
        if !s.is_zero() {
            out.p = Some(p);
            out.s_p0 = Some(s);
            break;
        }
    }
    let xy = StepSet::xy();
    let b_xy = b.try_map(xy.clone(), |c| Ok(c.embed(&xy)?))?;
    let one = TruncatedSeries::one("t", xy, order);
    out.walks = one.sub(&b_xy)?.mul(&steps.walk_series(order))?;
    Ok(out)
}

/// The bounded Dyck example: paths with steps `(1, 1)`, `(1, -1)` that stay
/// in `0 <= y <= m - 1` (`m = None`: no upper line).
#[derive(Clone, Debug, PartialEq)]
pub struct BoundedDyck {
    /// `Y = t C(t^2)`, the root of `y - t(1 + y^2)`.
    pub y_root: TruncatedSeries,
    /// Bridges ending on `y = -1`.
    pub b: TruncatedSeries,
    /// Bridges ending on `y = m`.
    pub top: TruncatedSeries,
    /// `H_m(y, t)` over `y`.
    pub h: TruncatedSeries,
}

pub fn dyck_bounded(m: Option<u32>, order: usize) -> Result<BoundedDyck, SeriesError> {
    if m == Some(0) {
        return Err(SeriesError::BadInput("the height bound m must be at least 1".into()));
    }
    let yt = ring(&["y", "t"]);
    let g = ElliottRational::polynomial(
        Laurent::from_terms(2, [(vec![1, 0], int(1)), (vec![0, 1], int(-1)), (vec![2, 1], int(-1))]),
        yt,
    )?;
    let y_root = positive_root(&g, "y", "t", order)?;
    let one = TruncatedSeries::one("t", y_root.ring.clone(), order);
    let (b, top) = match m {
        None => (y_root.clone(), TruncatedSeries::zero("t", y_root.ring.clone(), order)),
        Some(m) => {
            let den = one.sub(&y_root.pow(2 * m + 2))?;
            let b = y_root.mul(&one.sub(&y_root.pow(2 * m))?)?.div(&den)?;
            let top = y_root.pow(m).sub(&y_root.pow(m + 2))?.div(&den)?;
            (b, top)
        }
    };
    let ry = ring(&["y"]);
    let lift = |s: &TruncatedSeries| s.try_map(ry.clone(), |c| Ok(c.embed(&ry)?));
    let (b_y, top_y) = (lift(&b)?, lift(&top)?);
    let mut numerator = TruncatedSeries::one("t", ry.clone(), order).sub(&b_y.mul_coeff(&mono(&ry, vec![-1])))?;
    if let Some(m) = m {
        numerator = numerator.sub(&top_y.mul_coeff(&mono(&ry, vec![m as i64])))?;
    }
    let step = ElliottRational::polynomial(Laurent::from_terms(1, [(vec![1], int(1)), (vec![-1], int(1))]), ry.clone())?;
    let mut free = vec![ElliottRational::one(ry.clone())];
    for n in 1..=order {
        free.push(free[n - 1].mul(&step));
    }
    let free = TruncatedSeries::from_coeffs("t", ry, order, free);
    Ok(BoundedDyck {
        y_root,
        b,
        top,
        h: numerator.mul(&free)?,
    })
}

/// Walks from `(1, 1)` confined to `x > 0, y > 0`, through
/// `Q = (xy - H(x) - V(y) - O) / (1 - Gamma)`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarterPlane {
    /// Root in `x` of `x - x Gamma`, over `x, y`.
    pub x_root: TruncatedSeries,
    /// Root in `y` of `y - y Gamma`, over `x, y`.
    pub y_root: TruncatedSeries,
    pub v: TruncatedSeries,
    pub h: TruncatedSeries,
    pub o: TruncatedSeries,
    pub q: TruncatedSeries,
}

fn root_in(steps: &StepSet, var: &str, order: usize) -> Result<TruncatedSeries, SeriesError> {
    let xyt = ring(&["x", "y", "t"]);
    let gamma = steps.gamma.embed(&xyt)?;
    let v = ElliottRational::variable(var, xyt.clone())?;
    let t = ElliottRational::variable("t", xyt.clone())?;
    let g = v.sub(&t.mul(&v).mul(&gamma));
    let bp = BiPoly::from_rational(&g, var, "t")?;
    let root = positive_root_of(&bp, order)?;
    let xy = StepSet::xy();
    root.try_map(xy.clone(), |c| Ok(c.embed(&xy)?))
}

pub fn quarter_plane_symmetric(steps: &StepSet, order: usize) -> Result<QuarterPlane, SeriesError> {
    let small = steps
        .finite_steps
        .as_ref()
        .map_or(false, |v| v.iter().all(|s| s.0.abs() <= 1 && s.1.abs() <= 1));
    if !small {
        return Err(SeriesError::BadInput("quarter-plane walks need finitely many steps with |dx|, |dy| <= 1".into()));
    }
    if !steps.is_symmetric_in("y")? {
        return Err(SeriesError::Asymmetric(steps.gamma.display()));
    }
    let xy = StepSet::xy();
    let x_root = root_in(steps, "x", order)?;
    let y_root = root_in(steps, "y", order)?;
    let (y, y_inv, x) = (mono(&xy, vec![0, 1]), mono(&xy, vec![0, -1]), mono(&xy, vec![1, 0]));
    // V(y) - V(1/y) = X y - X/y and V has only positive powers of y
    let diff = x_root.mul_coeff(&y).sub(&x_root.mul_coeff(&y_inv))?;
    let v = diff.try_map(xy.clone(), |c| Ok(sign_split(c, "y")?.positive))?;
    // x Y - V(Y) = H(x) + O(t), split by powers of x
    let rest = y_root.mul_coeff(&x).sub(&v.substitute("y", &y_root)?)?;
    let mut h = TruncatedSeries::zero("t", xy.clone(), order);
    let mut o = TruncatedSeries::zero("t", xy.clone(), order);
    for (k, c) in rest.coeffs.iter().enumerate() {
        let s = sign_split(c, "x")?;
        if !s.negative.is_zero() {
            return Err(SeriesError::Inconsistent(format!("H + O has negative powers of x at t^{}", k)));
        }
        h.coeffs[k] = s.positive;
        o.coeffs[k] = s.zero;
    }
    // the other boundary equation: X y - H(X) - V(y) - O = 0
    let check = x_root.mul_coeff(&y).sub(&h.substitute("x", &x_root)?)?.sub(&v)?.sub(&o)?;
    if !check.is_zero() {
        return Err(SeriesError::Inconsistent("the two boundary equations disagree".into()));
    }
    let start = TruncatedSeries::constant(mono(&xy, vec![1, 1]), "t", order);
    let numerator = start.sub(&h)?.sub(&v)?.sub(&o)?;
    let q = numerator.mul(&steps.walk_series(order))?;
    Ok(QuarterPlane {
        x_root,
        y_root,
        v,
        h,
        o,
        q,
    })
}

/// Paths with steps `(1, 0)`, `(0, 1)` from the origin that never go above
/// `y = x`, through the bridge lemma: `p(x, y) = (1 - B(xy)/x) / (1 - x - y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CatalanPaths {
    /// `B(z)`, the root in `x` of `x - x^2 - z`.
    pub b: TruncatedSeries,
    /// `p(xt, yt)`: `t` counts length, `x, y` the endpoint.
    pub p: TruncatedSeries,
    /// `p(t, t)`: paths by length only.
    pub by_length: TruncatedSeries,
}

pub fn catalan_paths(order: usize) -> Result<CatalanPaths, SeriesError> {
    let xz = ring(&["x", "z"]);
    let g = ElliottRational::polynomial(
        Laurent::from_terms(2, [(vec![1, 0], int(1)), (vec![2, 0], int(-1)), (vec![0, 1], int(-1))]),
        xz,
    )?;
    let b = positive_root(&g, "x", "z", order)?;
    let xy = StepSet::xy();
    // B(xy t^2) / (x t) = sum_n b_n x^(n-1) y^n t^(2n-1)
    let mut bridge = TruncatedSeries::zero("t", xy.clone(), order);
    for n in 1..=order {
        let c = b.coeffs[n].as_constant().ok_or_else(|| SeriesError::Inconsistent("B has non-constant coefficients".into()))?;
        if 2 * n - 1 <= order && !c.is_zero() {
            bridge.coeffs[2 * n - 1] =
                ElliottRational::polynomial(Laurent::monomial(vec![n as i64 - 1, n as i64], c), xy.clone())?;
        }
    }
    let step = ElliottRational::polynomial(Laurent::from_terms(2, [(vec![1, 0], int(1)), (vec![0, 1], int(1))]), xy.clone())?;
    let mut free = vec![ElliottRational::one(xy.clone())];
    for n in 1..=order {
        free.push(free[n - 1].mul(&step));
    }
    let free = TruncatedSeries::from_coeffs("t", xy.clone(), order, free);
    let p = TruncatedSeries::one("t", xy, order).sub(&bridge)?.mul(&free)?;
    let by_length = p.try_map(ring(&[]), |c| {
        Ok(c.eval_var("x", &Q::one())?
            .eval_var("y", &Q::one())?
            .remove_variable("x")?
            .remove_variable("y")?)
    })?;
    Ok(CatalanPaths { b, p, by_length })
}
