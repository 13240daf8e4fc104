use num_complex::Complex64;
use std::f64::consts::PI;

/// `sum over n-th roots of unity a != 1 of prod (a^{a_i} + 1)/(a^{a_i} - 1)`
/// in double precision. The imaginary parts cancel; the real part is returned.
pub fn dedekind_float(n: u64, a: &[u64]) -> f64 {
    let mut total = Complex64::new(0.0, 0.0);
    for k in 1..n {
        let mut term = Complex64::new(1.0, 0.0);
        for &ai in a {
            let z = Complex64::from_polar(1.0, 2.0 * PI * ((k * ai) % n) as f64 / n as f64);
            term *= (z + 1.0) / (z - 1.0);
        }
        total += term;
    }
    total.re
}
