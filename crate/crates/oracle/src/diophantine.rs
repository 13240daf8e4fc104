use crate::CoefficientTable;
use exact_algebra::Q;
use num_traits::One;

/// `A alpha + b = 0` over the nonnegative integers (positive ones when `strict`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub matrix: Vec<Vec<i64>>,
    pub ncols: usize,
    pub shift: Vec<i64>,
    pub strict: bool,
}

impl LinearSystem {
    pub fn homogeneous(matrix: Vec<Vec<i64>>, ncols: usize) -> Self {
        let shift = vec![0; matrix.len()];
        LinearSystem {
            matrix,
            ncols,
            shift,
            strict: false,
        }
    }
}

/// Every solution of total degree at most `bound`, each with count 1.
pub fn enumerate_solutions(system: &LinearSystem, bound: u32) -> CoefficientTable {
    let mut out = CoefficientTable::new();
    let mut alpha = vec![0i64; system.ncols];
    let lo = i64::from(system.strict);
    fill(system, lo, bound as i64, 0, &mut alpha, &mut out);
    out
}

fn fill(system: &LinearSystem, lo: i64, budget: i64, i: usize, alpha: &mut Vec<i64>, out: &mut CoefficientTable) {
    if i == alpha.len() {
        let ok = system.matrix.iter().zip(&system.shift).all(|(row, b)| {
            row.iter().zip(alpha.iter()).map(|(a, x)| a * x).sum::<i64>() + b == 0
        });
        if ok {
            out.add(alpha.clone(), Q::one());
        }
        return;
    }
    let rest = (alpha.len() - i - 1) as i64 * lo;
    let mut v = lo;
    while v + rest <= budget {
        alpha[i] = v;
        fill(system, lo, budget - v, i + 1, alpha, out);
        v += 1;
    }
    alpha[i] = 0;
}
