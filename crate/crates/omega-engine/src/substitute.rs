use crate::binomial::Monomial;
use crate::elliott::{ElliottRational, Term};
use crate::{ct_lambdas, OmegaError};
use exact_algebra::{Exp, Q};
use laurent_order::{determinant, VariableOrder};
use num_traits::Zero;

/// Both sides of a monomial change of variables under the constant term.
#[derive(Clone, Debug, PartialEq)]
pub struct SubstitutionCheck {
    /// `CT` of the function in its own variables, ordered by the images.
    pub before: Q,
    /// `CT` after substituting the images, in the target variables.
    pub after: Q,
    pub determinant: Q,
}

impl SubstitutionCheck {
    pub fn equal(&self) -> bool {
        self.before == self.after
    }
}

/// Substitutes `u_i -> x^{images[i]}` and takes the full constant term on
/// both sides.
///
/// The source side is expanded in the order pulled back along the images
/// (`rho` = exponent matrix with the images as columns), which is the order in
/// which the substituted series is read. With a nonsingular matrix only the
/// constant monomial maps to a constant, so the two values agree.
pub fn monomial_substitute_ct_check(
    phi: &ElliottRational,
    images: &[Exp],
    target_vars: &[String],
) -> Result<SubstitutionCheck, OmegaError> {
    let n = phi.nvars();
    if images.len() != n || target_vars.len() != n || images.iter().any(|e| e.len() != n) {
        return Err(OmegaError::DimensionMismatch {
            expected: n,
            got: images.len(),
        });
    }
    let rho: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| images[j][i]).collect()).collect();
    let det = determinant(&rho);
    if det.is_zero() {
        return Err(OmegaError::SingularSubstitution);
    }
    let pulled = ElliottRational {
        order: VariableOrder::with_rho(phi.order.vars(), rho)?,
        ..phi.clone()
    };
    let names: Vec<&str> = phi.order.vars().iter().map(|s| s.as_str()).collect();
    let before = constant_of(&ct_lambdas(&pulled, &names)?)?;

    let map = |m: &Monomial| -> Monomial {
        let mut e = vec![0i64; n];
        for (i, &k) in m.exp.iter().enumerate() {
            for (j, slot) in e.iter_mut().enumerate() {
                *slot += k * images[i][j];
            }
        }
        Monomial::new(m.coeff.clone(), e)
    };
    let mut t = Term::from_num(phi.numerator.substitute_monomials(images, n)?);
    for f in &phi.denominator {
        t.divide_by_difference(&map(&f.lhs), &map(&f.rhs), f.mult)?;
    }
    let target = ElliottRational::from_term(t, VariableOrder::new(target_vars)?);
    let tnames: Vec<&str> = target_vars.iter().map(|s| s.as_str()).collect();
    let after = constant_of(&ct_lambdas(&target, &tnames)?)?;
    Ok(SubstitutionCheck {
        before,
        after,
        determinant: det,
    })
}

fn constant_of(f: &ElliottRational) -> Result<Q, OmegaError> {
    if !f.denominator.is_empty() || f.nvars() != 0 {
        return Err(OmegaError::Internal("full constant term is not a constant".into()));
    }
    Ok(f.numerator.constant_coeff())
}
