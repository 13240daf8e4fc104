use crate::{OrderError, Tag, VariableOrder};
use exact_algebra::{Field, Laurent, QRatFunc, UniPoly, Q};
use num_traits::Zero;
use ppfraction::frac_at_cofactors;

/// `var^shift * numerator / prod factor^mult`, each factor a polynomial in one
/// distinguished variable with coefficients in `K`.
#[derive(Clone, Debug, PartialEq)]
pub struct FactoredRational<K> {
    pub numerator: UniPoly<K>,
    pub shift: i64,
    pub factors: Vec<(UniPoly<K>, u32)>,
}

impl<K: Field> FactoredRational<K> {
    pub fn new(numerator: UniPoly<K>, factors: Vec<(UniPoly<K>, u32)>) -> Self {
        FactoredRational {
            numerator,
            shift: 0,
            factors,
        }
    }
}

/// Constant term in the variable, given a PT/NT tag for every factor.
///
/// The answer is the polynomial part at 0 plus the fractional parts of the
/// PT factors at 0. A negative shift acts as an extra NT factor `var^k`.
pub fn ct_classified<K: Field>(f: &FactoredRational<K>, tags: &[Tag]) -> Result<K, OrderError> {
    if tags.len() != f.factors.len() {
        return Err(OrderError::DimensionMismatch {
            expected: f.factors.len(),
            got: tags.len(),
        });
    }
    if let Some(i) = tags.iter().position(|t| *t == Tag::Mixed) {
        return Err(OrderError::NotFactorable(f.factors[i].0.to_string()));
    }
    // Powers of the variable move into the shift, constants into the
    // numerator, and equal monic factors are merged.
    let mut num = f.numerator.clone();
    let mut shift = f.shift;
    let mut tagged: Vec<(UniPoly<K>, u32, Tag)> = Vec::new();
    for ((p, m), t) in f.factors.iter().zip(tags) {
        let v = p.valuation().ok_or(OrderError::ZeroInput)?;
        shift -= (v as i64) * (*m as i64);
        let g = UniPoly::new(p.coeffs()[v..].to_vec());
        let lc_inv = g.lc().pow(*m as u64).inv().ok_or(OrderError::ZeroInput)?;
        num = num.scale(&lc_inv);
        if g.degree() == Some(0) {
            continue;
        }
        let q = g.monic();
        match tagged.iter_mut().find(|(h, _, _)| *h == q) {
            Some(slot) if slot.2 == *t => slot.1 += m,
            Some(_) => return Err(OrderError::NotFactorable(q.to_string())),
            None => tagged.push((q, *m, *t)),
        }
    }
    let mut blocks: Vec<(UniPoly<K>, Tag)> = tagged.iter().map(|(p, m, t)| (p.pow(*m), *t)).collect();
    if shift >= 0 {
        num = num.shift(shift as usize);
    } else {
        blocks.push((UniPoly::monomial(K::one(), (-shift) as usize), Tag::NT));
    }

    let den = blocks.iter().fold(UniPoly::one(), |acc, (b, _)| &acc * b);
    let (poly_part, _) = num.divmod(&den)?;
    let mut total = poly_part.coeff(0);
    for (i, (b, tag)) in blocks.iter().enumerate() {
        if *tag != Tag::PT {
            continue;
        }
        let others: Vec<UniPoly<K>> = blocks
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, (o, _))| o.clone())
            .collect();
        let part = frac_at_cofactors(&num, b, &others)?;
        let at0 = b.coeff(0).inv().ok_or(OrderError::ZeroInput)?;
        total = total + part.numerator.coeff(0) * at0;
    }
    Ok(total)
}

/// Writes a polynomial in `var` over `Q(c)` as a Laurent polynomial in the
/// two variables of `order`, after clearing coefficient denominators.
pub fn to_bivariate(
    f: &UniPoly<QRatFunc>,
    order: &VariableOrder,
    var: usize,
    coef: usize,
) -> Result<Laurent, OrderError> {
    if order.len() != 2 || var == coef || var > 1 || coef > 1 {
        return Err(OrderError::DimensionMismatch {
            expected: 2,
            got: order.len(),
        });
    }
    let mut l = UniPoly::<Q>::one();
    for c in f.coeffs() {
        let g = UniPoly::gcd(&l, c.den());
        l = (&l * c.den()).exact_div(&g)?;
    }
    let mut out = Laurent::zero(2);
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let p = &c.num().clone() * &l.exact_div(c.den())?;
        for (k, a) in p.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut e = vec![0i64; 2];
            e[var] = i as i64;
            e[coef] = k as i64;
            out.add_term(e, a.clone());
        }
    }
    Ok(out)
}

/// `CT_var f` for a factored rational function over `Q(c)`, classifying each
/// factor under a two-variable order on `(var, c)`.
pub fn ct_rational(
    f: &FactoredRational<QRatFunc>,
    order: &VariableOrder,
    var: &str,
) -> Result<QRatFunc, OrderError> {
    let v = order.index_of(var)?;
    let c = 1 - v;
    let mut tags = Vec::with_capacity(f.factors.len());
    for (p, _) in &f.factors {
        let l = to_bivariate(p, order, v, c)?;
        let class = order.classify_factor(&l, var)?;
        if class.tag == Tag::Mixed {
            return Err(OrderError::NotFactorable(l.display(order.vars())));
        }
        tags.push(class.tag);
    }
    ct_classified(f, &tags)
}

/// The Hadamard product of two power series given as rational functions of `t`,
/// computed as `CT_x f(t/x) g(x)` over the coefficient field `Q(t)`.
pub fn hadamard(f: &QRatFunc, g: &QRatFunc) -> Result<QRatFunc, OrderError> {
    for h in [f, g] {
        if h.den().coeff(0).is_zero() {
            return Err(OrderError::NotExpandable(h.display("t")));
        }
    }
    let lift = |p: &UniPoly<Q>, d: usize| -> UniPoly<QRatFunc> {
        // x^d p(t/x) as a polynomial in x over Q(t)
        let mut cs = vec![QRatFunc::zero(); d + 1];
        for (i, a) in p.coeffs().iter().enumerate() {
            cs[d - i] = QRatFunc::from_poly(UniPoly::monomial(a.clone(), i));
        }
        UniPoly::new(cs)
    };
    let constants = |p: &UniPoly<Q>| -> UniPoly<QRatFunc> {
        UniPoly::new(p.coeffs().iter().map(|a| QRatFunc::constant(a.clone())).collect())
    };
    let a = f.num().degree().unwrap_or(0);
    let b = f.den().degree().unwrap_or(0);
    let d = a.max(b);
    let numerator = &lift(f.num(), d) * &constants(g.num());
    let rat = FactoredRational {
        numerator,
        shift: b as i64 - d as i64,
        factors: vec![(lift(f.den(), b), 1), (constants(g.den()), 1)],
    };
    let order = VariableOrder::new(&["x", "t"])?;
    ct_rational(&rat, &order, "x")
}
