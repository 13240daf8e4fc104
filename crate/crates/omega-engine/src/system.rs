use crate::binomial::Monomial;
use crate::elliott::{ElliottRational, Term};
use crate::{ct_lambdas, OmegaError};
use exact_algebra::{Field, Laurent, Q};
use laurent_order::VariableOrder;
use num_traits::{One, Zero};

/// `A alpha + b = 0` over the nonnegative integers, or the positive integers
/// when `strict`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophantineSystem {
    pub matrix: Vec<Vec<i64>>,
    pub ncols: usize,
    pub shift: Vec<i64>,
    pub strict: bool,
}

impl DiophantineSystem {
    pub fn new(matrix: Vec<Vec<i64>>, ncols: usize, shift: Vec<i64>, strict: bool) -> Result<Self, OmegaError> {
        if ncols == 0 {
            return Err(OmegaError::BadSystem("no unknowns".into()));
        }
        if matrix.iter().any(|row| row.len() != ncols) {
            return Err(OmegaError::BadSystem("ragged matrix".into()));
        }
        if shift.len() != matrix.len() {
            return Err(OmegaError::BadSystem("shift length differs from row count".into()));
        }
        Ok(DiophantineSystem {
            matrix,
            ncols,
            shift,
            strict,
        })
    }

    pub fn homogeneous(matrix: Vec<Vec<i64>>, ncols: usize) -> Result<Self, OmegaError> {
        let r = matrix.len();
        Self::new(matrix, ncols, vec![0; r], false)
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn lambda_names(&self) -> Vec<String> {
        (1..=self.rows()).map(|i| format!("l{}", i)).collect()
    }

    pub fn x_names(&self) -> Vec<String> {
        (1..=self.ncols).map(|i| format!("x{}", i)).collect()
    }

    pub fn with_strict(&self, strict: bool) -> Self {
        DiophantineSystem { strict, ..self.clone() }
    }

    pub fn to_oracle(&self) -> oracle::LinearSystem {
        oracle::LinearSystem {
            matrix: self.matrix.clone(),
            ncols: self.ncols,
            shift: self.shift.clone(),
            strict: self.strict,
        }
    }
}

/// `L^b prod 1/(1 - L^{C_i} x_i)` (times `prod L^{C_i} x_i` when strict) over
/// the variables `l1..lr, x1..xn`.
pub fn crude_gf(system: &DiophantineSystem) -> Result<ElliottRational, OmegaError> {
    let r = system.rows();
    let n = r + system.ncols;
    let mut names = system.lambda_names();
    names.extend(system.x_names());
    let order = VariableOrder::new(&names)?;
    let column = |i: usize| -> Vec<i64> {
        let mut e: Vec<i64> = system.matrix.iter().map(|row| row[i]).collect();
        e.extend((0..system.ncols).map(|k| i64::from(k == i)));
        e
    };
    let mut shift = system.shift.clone();
    shift.extend(std::iter::repeat(0).take(system.ncols));
    let mut num = Laurent::monomial(shift, Q::one());
    if system.strict {
        for i in 0..system.ncols {
            num = num.mul_monomial(&column(i), &Q::one());
        }
    }
    let mut t = Term::from_num(num);
    for i in 0..system.ncols {
        t.divide_by_difference(&Monomial::one(n), &Monomial::new(Q::one(), column(i)), 1)?;
    }
    Ok(ElliottRational::from_term(t, order))
}

/// The solution generating function `CT_L crude_gf`, in `x1..xn`.
pub fn solution_gf(system: &DiophantineSystem) -> Result<ElliottRational, OmegaError> {
    let f = crude_gf(system)?;
    let names = system.lambda_names();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    ct_lambdas(&f, &refs)
}

/// Rank over the rationals.
pub fn rank(matrix: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Q>> = matrix.iter().map(|r| r.iter().map(|&v| Q::from_integer(v.into())).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].inv().expect("nonzero pivot");
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c].clone() * inv.clone();
                for k in c..cols {
                    let v = m[rank][k].clone() * f.clone();
                    m[i][k] = m[i][k].clone() - v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Outcome of checking `E(x) = (-1)^(n-r) Ebar(1/x)`.
#[derive(Clone, Debug)]
pub struct ReciprocityReport {
    pub rank: usize,
    pub rows: usize,
    pub ncols: usize,
    /// `None` when the hypotheses hold; otherwise why the check was skipped.
    pub hypothesis_violated: Option<String>,
    pub e: Option<ElliottRational>,
    pub e_bar: Option<ElliottRational>,
    pub degree: i64,
    /// Monomials where a coefficient table disagrees, with a label.
    pub mismatches: Vec<(String, Vec<i64>)>,
}

impl ReciprocityReport {
    pub fn holds(&self) -> bool {
        self.hypothesis_violated.is_none() && self.mismatches.is_empty()
    }
}

/// Computes `E` and `Ebar` for the homogeneous system and compares
/// `E`, `(-1)^(n-r) Ebar(1/x)` and the brute-force solution counts
/// coefficientwise up to total degree `degree`.
pub fn check_reciprocity(system: &DiophantineSystem, degree: i64) -> Result<ReciprocityReport, OmegaError> {
    let hom = DiophantineSystem::homogeneous(system.matrix.clone(), system.ncols)?;
    let r = rank(&hom.matrix);
    let mut report = ReciprocityReport {
        rank: r,
        rows: hom.rows(),
        ncols: hom.ncols,
        hypothesis_violated: None,
        e: None,
        e_bar: None,
        degree,
        mismatches: Vec::new(),
    };
    if r != hom.rows() {
        report.hypothesis_violated = Some(format!("rank {} is less than the row count {}", r, hom.rows()));
        return Ok(report);
    }
    let bound = degree.max(0) as u32;
    let strict = hom.with_strict(true);
    let positive = oracle::enumerate_solutions(&strict.to_oracle(), bound.max(hom.ncols as u32 * 4));
    if positive.is_empty() {
        report.hypothesis_violated = Some("no solution in positive integers".into());
        return Ok(report);
    }
    let e = solution_gf(&hom)?;
    let e_bar = solution_gf(&strict)?;
    let mut rhs = e_bar.invert_variables()?;
    if (hom.ncols - r) % 2 == 1 {
        rhs.numerator = -&rhs.numerator;
    }
    let se = e.series(degree)?;
    let srhs = rhs.series(degree)?;
    let sbar = e_bar.series(degree)?;
    let counts = oracle::enumerate_solutions(&hom.to_oracle(), bound);
    let counts_bar = oracle::enumerate_solutions(&strict.to_oracle(), bound);
    let mut check = |label: &str, a: &oracle::CoefficientTable, b: &oracle::CoefficientTable| {
        let keys: std::collections::BTreeSet<&Vec<i64>> = a.iter().map(|(k, _)| k).chain(b.iter().map(|(k, _)| k)).collect();
        for k in keys {
            if a.get(k) != b.get(k) {
                report.mismatches.push((label.to_string(), k.clone()));
            }
        }
    };
    check("E vs reflected Ebar", &se, &srhs);
    check("E vs enumeration", &se, &counts);
    check("Ebar vs enumeration", &sbar, &counts_bar);
    report.e = Some(e);
    report.e_bar = Some(e_bar);
    Ok(report)
}
