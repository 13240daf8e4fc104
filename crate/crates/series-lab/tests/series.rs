use exact_algebra::{binomial, int, Laurent, Q};
use laurent_order::VariableOrder;
use num_traits::{One, Zero};
use omega_engine::ElliottRational;
use series_lab::*;

fn ring(vars: &[&str]) -> VariableOrder {
    VariableOrder::new(vars).unwrap()
}

fn lp(n: usize, terms: &[(&[i64], i64)]) -> Laurent {
    Laurent::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), int(*c))))
}

fn poly(order: &VariableOrder, terms: &[(&[i64], i64)]) -> ElliottRational {
    ElliottRational::polynomial(lp(order.len(), terms), order.clone()).unwrap()
}

fn constants(s: &TruncatedSeries) -> Vec<i64> {
    s.constants()
        .expect("constant coefficients")
        .iter()
        .map(|q| {
            assert!(q.is_integer(), "{} is not an integer", q);
            i64::try_from(q.to_integer()).unwrap()
        })
        .collect()
}

#[test]
fn rational_functions_expand_in_t() {
    let xt = ring(&["x", "t"]);
    let one = ElliottRational::one(xt.clone());
    let den = poly(&xt, &[(&[0, 0], 1), (&[1, 1], -1), (&[-1, 1], -1)]);
    let s = series_quotient(&one, &den, "t", 2).unwrap();
    let step = poly(&ring(&["x"]), &[(&[1], 1), (&[-1], 1)]);
    for n in 0..=2u32 {
        assert!(s.coeff(n as usize).same_function(&step.pow(n)), "t^{}", n);
    }
    // multiplying back by the denominator gives the numerator
    let back = s.mul(&series_from_rational(&den, "t", 2).unwrap()).unwrap();
    assert!(back.same_series(&TruncatedSeries::one("t", ring(&["x"]), 2)));

    // a polynomial comes back padded with zeros
    let p = poly(&xt, &[(&[0, 0], 1), (&[1, 1], 2)]);
    let s = series_from_rational(&p, "t", 4).unwrap();
    assert_eq!(s.coeffs.len(), 5);
    assert!(s.coeff(1).same_function(&poly(&ring(&["x"]), &[(&[1], 2)])));
    assert!(s.coeffs[2..].iter().all(|c| c.is_zero()));

    // negative powers of t are rejected
    let bad = poly(&xt, &[(&[1, -1], 1)]);
    assert!(matches!(series_from_rational(&bad, "t", 3), Err(SeriesError::NotPowerSeries(_))));
}

#[test]
fn rational_step_weight_expands_to_powers() {
    // 1/(1 - t/(xy(1-x)(1-y))) has coefficients (xy(1-x)(1-y))^(-n)
    let xyt = ring(&["x", "y", "t"]);
    let num = lp(3, &[(&[0, 0, 0], 1), (&[1, 0, 0], -1), (&[0, 1, 0], -1), (&[1, 1, 0], 1), (&[-1, -1, 1], -1)]);
    let den = ElliottRational::from_factors(
        num,
        &[(lp(3, &[(&[0, 0, 0], 1), (&[1, 0, 0], -1)]), 1), (lp(3, &[(&[0, 0, 0], 1), (&[0, 1, 0], -1)]), 1)],
        xyt.clone(),
    )
    .unwrap();
    let s = series_quotient(&ElliottRational::one(xyt), &den, "t", 3).unwrap();
    let xy = ring(&["x", "y"]);
    for n in 0..=3u32 {
        let want = ElliottRational::from_factors(
            lp(2, &[(&[-(n as i64), -(n as i64)], 1)]),
            &[(lp(2, &[(&[0, 0], 1), (&[1, 0], -1)]), n), (lp(2, &[(&[0, 0], 1), (&[0, 1], -1)]), n)],
            xy.clone(),
        )
        .unwrap();
        assert!(s.coeff(n as usize).same_function(&want), "t^{}: {}", n, s.coeff(n as usize));
    }
}

#[test]
fn roots_by_coefficient_solving() {
    let yt = ring(&["y", "t"]);
    // y - t(1 + y^2): Y = t C(t^2)
    let g = poly(&yt, &[(&[1, 0], 1), (&[0, 1], -1), (&[2, 1], -1)]);
    let y = positive_root(&g, "y", "t", 8).unwrap();
    assert_eq!(constants(&y), vec![0, 1, 0, 1, 0, 2, 0, 5, 0]);
    let bp = BiPoly::from_rational(&g, "y", "t").unwrap();
    assert!(bp.eval(&y, 8).unwrap().is_zero());

    let g = poly(&yt, &[(&[1, 0], 1), (&[0, 1], -1)]);
    assert_eq!(constants(&positive_root(&g, "y", "t", 5).unwrap()), vec![0, 1, 0, 0, 0, 0]);

    // alpha - x(1 + alpha) gives alpha = x/(1-x)
    let ax = ring(&["a", "x"]);
    let g = poly(&ax, &[(&[1, 0], 1), (&[0, 1], -1), (&[1, 1], -1)]);
    assert_eq!(constants(&positive_root(&g, "a", "x", 6).unwrap()), vec![0, 1, 1, 1, 1, 1, 1]);

    // no linear term: nothing to solve with
    let g = poly(&yt, &[(&[2, 0], 1), (&[0, 1], -1)]);
    assert!(matches!(positive_root(&g, "y", "t", 4), Err(SeriesError::NotInvertible(_))));
}

#[test]
fn roots_with_coefficients_in_other_variables() {
    // y - t (x + 1/x)(1 + y^2) over x: residual vanishes and c_1 = x + 1/x
    let xyt = ring(&["x", "y", "t"]);
    let g = poly(
        &xyt,
        &[(&[0, 1, 0], 1), (&[1, 0, 1], -1), (&[-1, 0, 1], -1), (&[1, 2, 1], -1), (&[-1, 2, 1], -1)],
    );
    let y = positive_root(&g, "y", "t", 6).unwrap();
    let bp = BiPoly::from_rational(&g, "y", "t").unwrap();
    assert!(bp.eval(&y, 6).unwrap().is_zero());
    assert!(y.coeff(1).same_function(&poly(&ring(&["x"]), &[(&[1], 1), (&[-1], 1)])));
}

/// `CT_y (x + 1/x + y + 1/y)^n`, read off the expanded polynomial.
fn lattice_ct_y(n: u32) -> Laurent {
    let p = lp(2, &[(&[1, 0], 1), (&[-1, 0], 1), (&[0, 1], 1), (&[0, -1], 1)]).pow(n);
    let mut out = Laurent::zero(1);
    for (e, c) in p.terms() {
        if e[1] == 0 {
            out.add_term(vec![e[0]], c.clone());
        }
    }
    out
}

#[test]
fn constant_term_through_the_root() {
    let xyt = ring(&["x", "y", "t"]);
    // CT_y y / (y - t(x + 1/x) y - t y^2 - t)
    let g = poly(
        &xyt,
        &[(&[0, 1, 0], 1), (&[1, 1, 1], -1), (&[-1, 1, 1], -1), (&[0, 2, 1], -1), (&[0, 0, 1], -1)],
    );
    let one = ElliottRational::one(xyt.clone());
    let s = lagrange_ct(&one, &g, "y", "t", 6).unwrap();
    assert_eq!(s.count(2, &[0]), Some(int(4)));
    for n in 0..=6u32 {
        let want = ElliottRational::polynomial(lattice_ct_y(n), ring(&["x"])).unwrap();
        assert!(s.coeff(n as usize).same_function(&want), "t^{}", n);
    }
    // the same numbers from the truncated geometric expansion
    let factor = lp(3, &[(&[0, 0, 0], 1), (&[1, 0, 1], -1), (&[-1, 0, 1], -1), (&[0, 1, 1], -1), (&[0, -1, 1], -1)]);
    let problem = oracle::GeometricProblem::new(Laurent::one(3), vec![(factor, 1)]);
    let table = oracle::truncated_ct(&problem, &[1], 6, None).unwrap();
    for (k, c) in table.iter() {
        if k[1] <= 6 {
            assert_eq!(s.count(k[1] as usize, &[k[0]]), Some(c.clone()), "x^{} t^{}", k[0], k[1]);
        }
    }

    let zero = ElliottRational::zero(xyt);
    assert!(lagrange_ct(&zero, &g, "y", "t", 4).unwrap().is_zero());
}

fn bilateral_kernel() -> (ElliottRational, ElliottRational) {
    // y(1-y) - t/(x(1-x)) and 1 - y, so that CT_y y F / G = CT_y 1/(1 - t/(xy(1-x)(1-y)))
    let xyt = ring(&["x", "y", "t"]);
    let g = ElliottRational::from_factors(
        lp(3, &[(&[0, 1, 0], 1), (&[0, 2, 0], -1), (&[1, 1, 0], -1), (&[1, 2, 0], 1), (&[-1, 0, 1], -1)]),
        &[(lp(3, &[(&[0, 0, 0], 1), (&[1, 0, 0], -1)]), 1)],
        xyt.clone(),
    )
    .unwrap();
    let f = poly(&xyt, &[(&[0, 0, 0], 1), (&[0, 1, 0], -1)]);
    (f, g)
}

fn rational_gamma() -> ElliottRational {
    ElliottRational::from_factors(
        lp(2, &[(&[-1, -1], 1)]),
        &[(lp(2, &[(&[0, 0], 1), (&[1, 0], -1)]), 1), (lp(2, &[(&[0, 0], 1), (&[0, 1], -1)]), 1)],
        ring(&["x", "y"]),
    )
    .unwrap()
}

#[test]
fn bilateral_walks_by_the_root_and_by_elimination() {
    let (f, g) = bilateral_kernel();
    let order = 5;
    let by_root = lagrange_ct(&f, &g, "y", "t", order).unwrap();
    let steps = StepSet::rational(rational_gamma()).unwrap();
    let by_ct = bilateral_walks(&steps, order).unwrap();
    assert!(by_root.same_series(&by_ct));
    // returns to the origin: C(2n-1, n-1)^2
    for n in 0..=order {
        let c = constant_part(by_root.coeff(n), "x").unwrap();
        let want = if n == 0 {
            Q::one()
        } else {
            Q::from(binomial(2 * n as i64 - 1, n as u64 - 1).pow(2))
        };
        assert_eq!(c.as_constant(), Some(want), "t^{}", n);
    }
    // and every endpoint (k, 0) against walk enumeration
    let window = 4;
    let walks = oracle::count_walks(
        &oracle::Steps::Quadrant { dx0: -1, dy0: -1 },
        oracle::Constraint::None,
        order,
        (0, 0),
        Some((window, 0)),
    )
    .unwrap();
    for n in 1..=order {
        let table = by_root.coeff(n).series(window + n as i64).unwrap();
        for k in -(n as i64)..=window {
            assert_eq!(table.get(&[k]), walks.get(&[n as i64, k, 0]), "n={} k={}", n, k);
        }
    }
}

#[test]
fn divided_differences() {
    let r = ring(&["x", "u1", "u2", "u3"]);
    let x3 = poly(&r, &[(&[3, 0, 0, 0], 1)]);
    let d = divided_difference(&x3, "x", &[Point::Var("u1".into()), Point::Var("u2".into())]).unwrap();
    assert!(d.same_function(&poly(&r, &[(&[1, 0, 0, 0], 1), (&[0, 1, 0, 0], 1), (&[0, 0, 1, 0], 1)])));

    // x^(m+n) gives h_m(x, u1, .., un)
    for n in 0..=3usize {
        for m in 0..=3usize {
            let f = ElliottRational::polynomial(Laurent::monomial(vec![(m + n) as i64, 0, 0, 0], Q::one()), r.clone()).unwrap();
            let points: Vec<Point> = (1..=n).map(|i| Point::Var(format!("u{}", i))).collect();
            let got = divided_difference(&f, "x", &points).unwrap();
            let mut h = Laurent::zero(4);
            for e in weak_compositions(m, n + 1) {
                let mut exp = vec![0i64; 4];
                exp[..=n].copy_from_slice(&e);
                h.add_term(exp, Q::one());
            }
            assert!(got.same_function(&ElliottRational::polynomial(h, r.clone()).unwrap()), "m={} n={}", m, n);
        }
    }

    // u = x is the derivative; a field element is an ordinary difference quotient
    let x2 = poly(&r, &[(&[2, 0, 0, 0], 1)]);
    let d = divided_difference(&x2, "x", &[Point::Same]).unwrap();
    assert!(d.same_function(&poly(&r, &[(&[1, 0, 0, 0], 2)])));
    let d = divided_difference(&x2, "x", &[Point::Value(int(3))]).unwrap();
    assert!(d.same_function(&poly(&r, &[(&[1, 0, 0, 0], 1), (&[0, 0, 0, 0], 3)])));

    // 1/(1 - xz) picks up z^n / ((1 - xz)(1 - u1 z)..(1 - un z))
    let rz = ring(&["x", "u1", "u2", "z"]);
    let kernel = |xs: &[usize], zpow: i64| {
        let factors: Vec<(Laurent, u32)> = xs
            .iter()
            .map(|&i| {
                let mut e = vec![0i64; 4];
                e[i] = 1;
                e[3] = 1;
                (lp(4, &[(&[0, 0, 0, 0], 1), (&e, -1)]), 1)
            })
            .collect();
        ElliottRational::from_factors(Laurent::monomial(vec![0, 0, 0, zpow], Q::one()), &factors, rz.clone()).unwrap()
    };
    let f = kernel(&[0], 0);
    let d1 = divided_difference(&f, "x", &[Point::Var("u1".into())]).unwrap();
    assert!(d1.same_function(&kernel(&[0, 1], 1)), "{}", d1);
    let d2 = divided_difference(&f, "x", &[Point::Var("u1".into()), Point::Var("u2".into())]).unwrap();
    assert!(d2.same_function(&kernel(&[0, 1, 2], 2)), "{}", d2);
}

fn weak_compositions(m: usize, parts: usize) -> Vec<Vec<i64>> {
    if parts == 1 {
        return vec![vec![m as i64]];
    }
    let mut out = Vec::new();
    for first in 0..=m {
        for mut rest in weak_compositions(m - first, parts - 1) {
            rest.insert(0, first as i64);
            out.push(rest);
        }
    }
    out
}

#[test]
fn divided_differences_at_series_points() {
    let empty = ring(&[]);
    let c = |v: &[i64]| {
        TruncatedSeries::from_coeffs(
            "t",
            empty.clone(),
            4,
            v.iter().map(|k| ElliottRational::constant(int(*k), empty.clone())).collect(),
        )
    };
    let q: Vec<ElliottRational> = [0, 0, 1].iter().map(|k| ElliottRational::constant(int(*k), empty.clone())).collect();
    // coincident points: d_u x^2 at x = u is 2u
    let u = c(&[0, 1, 3]);
    let d = divided_difference_at(&q, &[u.clone(), u.clone()]).unwrap();
    assert!(d.same_series(&u.scale(&int(2))));
    // x^3 at (u0, u1, u2) with distinct constant points agrees with the sum
    // of f(u_i) / prod_{j != i} (u_i - u_j)
    let cube: Vec<ElliottRational> = [0, 0, 0, 1].iter().map(|k| ElliottRational::constant(int(*k), empty.clone())).collect();
    let pts = [2i64, 5, -1];
    let d = divided_difference_at(&cube, &pts.map(|p| c(&[p]))).unwrap();
    let mut want = Q::zero();
    for i in 0..3 {
        let mut den = Q::one();
        for j in 0..3 {
            if i != j {
                den = den * int(pts[i] - pts[j]);
            }
        }
        want = want + int(pts[i].pow(3)) / den;
    }
    assert_eq!(d.coeff(0).as_constant(), Some(want));
}

fn series_of(order: usize, x: &VariableOrder, terms: &[(usize, &[(&[i64], i64)])]) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero("t", x.clone(), order);
    for (k, t) in terms {
        s.coeffs[*k] = poly(x, t);
    }
    s
}

#[test]
fn third_decomposition_of_split_products() {
    let x = ring(&["x"]);
    let n = 6;
    let plus = series_of(n, &x, &[(0, &[(&[0], 1)]), (1, &[(&[1], -1)])]);
    let zero = series_of(n, &x, &[(0, &[(&[0], 1)]), (1, &[(&[0], -2)])]);
    let minus = series_of(n, &x, &[(0, &[(&[0], 1)]), (1, &[(&[-1], -1)])]);
    let h = plus.mul(&zero).unwrap().mul(&minus).unwrap();
    let d = third_decomposition(&h, "x", n).unwrap();
    assert!(d.plus.same_series(&plus));
    assert!(d.zero.same_series(&zero));
    assert!(d.minus.same_series(&minus));
    assert!(d.product().unwrap().same_series(&h));

    let one = TruncatedSeries::one("t", x.clone(), n);
    let d = third_decomposition(&one, "x", n).unwrap();
    assert!(d.plus.same_series(&one) && d.zero.same_series(&one) && d.minus.same_series(&one));
}

#[test]
fn third_decomposition_with_rational_coefficients() {
    // plus = 1 - t x/(1-x), zero = 1 + 5t, minus = 1 + 3t/x + t^2/x^2
    let x = ring(&["x"]);
    let n = 5;
    let mut plus = TruncatedSeries::one("t", x.clone(), n);
    plus.coeffs[1] = ElliottRational::from_factors(lp(1, &[(&[1], -1)]), &[(lp(1, &[(&[0], 1), (&[1], -1)]), 1)], x.clone()).unwrap();
    let zero = series_of(n, &x, &[(0, &[(&[0], 1)]), (1, &[(&[0], 5)])]);
    let minus = series_of(n, &x, &[(0, &[(&[0], 1)]), (1, &[(&[-1], 3)]), (2, &[(&[-2], 1)])]);
    let h = plus.mul(&zero).unwrap().mul(&minus).unwrap();
    let d = third_decomposition(&h, "x", n).unwrap();
    assert!(d.plus.same_series(&plus), "{}", d.plus);
    assert!(d.zero.same_series(&zero), "{}", d.zero);
    assert!(d.minus.same_series(&minus), "{}", d.minus);
    assert!(has_sign(&d.plus, "x", 1).unwrap());
    assert!(has_sign(&d.zero, "x", 0).unwrap());
    assert!(has_sign(&d.minus, "x", -1).unwrap());
}

#[test]
fn ordinary_lattice_discriminant() {
    // Delta = (1 - t(x + 1/x))^2 - 4t^2 = 1/S_x^2
    let x = ring(&["x"]);
    let n = 6;
    let a0 = series_of(n, &x, &[(1, &[(&[1], 1), (&[-1], 1)])]);
    let one = TruncatedSeries::one("t", x.clone(), n);
    let delta = one.sub(&a0).unwrap().pow(2).sub(&series_of(n, &x, &[(2, &[(&[0], 4)])])).unwrap();
    let d = third_decomposition(&delta, "x", n).unwrap();
    assert!(d.product().unwrap().same_series(&delta));
    assert!(has_sign(&d.plus, "x", 1).unwrap());
    assert!(has_sign(&d.zero, "x", 0).unwrap());
    assert!(has_sign(&d.minus, "x", -1).unwrap());
    // the parts are the inverse squares of the slit-plane factors
    let slit = slit_plane(&StepSet::ordinary(), n).unwrap();
    assert!(d.plus.mul(&slit.s0.pow(2)).unwrap().same_series(&one));
    let bridge = one.sub(&slit.b).unwrap();
    assert!(d.zero.mul(&d.minus).unwrap().same_series(&bridge.pow(2)));
}

#[test]
fn log_and_exp_are_inverse() {
    let xy = ring(&["x", "y"]);
    let n = 5;
    let h = series_of(
        n,
        &xy,
        &[(0, &[(&[0, 0], 1)]), (1, &[(&[1, -1], 2), (&[0, 0], -1)]), (3, &[(&[-2, 1], 7)]), (4, &[(&[0, 3], -1)])],
    );
    assert!(h.log().unwrap().exp().unwrap().same_series(&h));
    let inv = h.inverse().unwrap();
    assert!(inv.mul(&h).unwrap().same_series(&TruncatedSeries::one("t", xy, n)));
    let two = h.scale(&int(2));
    assert!(matches!(two.log(), Err(SeriesError::NotUnit(_))));
}
