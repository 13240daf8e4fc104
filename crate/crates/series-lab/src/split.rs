use crate::SeriesError;
use exact_algebra::{Exp, Laurent, Q};
use laurent_order::VariableOrder;
use num_traits::One;
use omega_engine::{cancel_common, ct_lambda, ElliottRational};

/// The three parts of a function expanded in one variable: only negative
/// powers, the constant term, only positive powers.
#[derive(Clone, Debug, PartialEq)]
pub struct SignSplit {
    pub negative: ElliottRational,
    pub zero: ElliottRational,
    pub positive: ElliottRational,
}

fn fresh(order: &VariableOrder, base: &str) -> String {
    let mut name = format!("{}_pt", base);
    while order.vars().iter().any(|v| *v == name) {
        name.push('\'');
    }
    name
}

/// `CT_var f`, kept over the same ring (the variable no longer occurs).
pub fn constant_part(f: &ElliottRational, var: &str) -> Result<ElliottRational, SeriesError> {
    let i = f.order.index_of(var).map_err(omega_engine::OmegaError::from)?;
    if f.is_polynomial() {
        let num = f.numerator.filter(|e| e[i] == 0);
        return Ok(ElliottRational::polynomial(num, f.order.clone())?);
    }
    let ct = ct_lambda(f, var)?;
    Ok(ct.insert_variable(var, i)?)
}

/// `PT_var f`: the part with positive powers of `var`.
///
/// For rational input this is `CT_l f(l) * (var/l) / (1 - var/l)` with a
/// fresh `l` placed directly below `var`, so that `f(l)` expands exactly as
/// `f(var)` did while every power of `var` outranks every power of `l`.
pub fn positive_part(f: &ElliottRational, var: &str) -> Result<ElliottRational, SeriesError> {
    let i = f.order.index_of(var).map_err(omega_engine::OmegaError::from)?;
    if f.is_polynomial() {
        let num = f.numerator.filter(|e| e[i] > 0);
        return Ok(ElliottRational::polynomial(num, f.order.clone())?);
    }
    if f.order.rho().is_some() {
        return Err(SeriesError::BadInput("positive parts need an unweighted variable order".into()));
    }
    let lam = fresh(&f.order, var);
    let mut vars = f.order.vars().to_vec();
    vars.insert(i, lam.clone());
    let ext = VariableOrder::new(&vars).map_err(omega_engine::OmegaError::from)?;
    let n = ext.len();
    let unit = |j: usize| -> Exp {
        let mut e = vec![0; n];
        e[j] = 1;
        e
    };
    // old slot k sits at k (k < i) or k + 1 (k >= i) of the extended ring
    let images: Vec<Exp> = (0..f.nvars())
        .map(|k| if k == i { unit(i) } else if k < i { unit(k) } else { unit(k + 1) })
        .collect();
    let moved = f.substitute_monomials(&images, ext.clone())?;
    let mut ratio = vec![0; n];
    ratio[i] = -1;
    ratio[i + 1] = 1;
    let kernel = ElliottRational::from_factors(
        Laurent::monomial(ratio.clone(), Q::one()),
        &[(&Laurent::one(n) - &Laurent::monomial(ratio, Q::one()), 1)],
        ext,
    )?;
    Ok(cancel_common(&ct_lambda(&moved.mul(&kernel), &lam)?))
}

pub fn sign_split(f: &ElliottRational, var: &str) -> Result<SignSplit, SeriesError> {
    let zero = constant_part(f, var)?;
    let positive = positive_part(f, var)?;
    let negative = f.sub(&zero).sub(&positive);
    Ok(SignSplit {
        negative: cancel_common(&negative),
        zero,
        positive,
    })
}

/// `[var^p] f`, over the same ring.
pub fn coefficient(f: &ElliottRational, var: &str, p: i64) -> Result<ElliottRational, SeriesError> {
    let i = f.order.index_of(var).map_err(omega_engine::OmegaError::from)?;
    let mut e = vec![0; f.nvars()];
    e[i] = -p;
    constant_part(&f.mul_monomial(&e, &Q::one()), var)
}
