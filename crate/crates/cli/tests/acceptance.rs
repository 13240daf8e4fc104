//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits with status 1 if any of them fails.

use dedekind::{dedekind_sum, reciprocity_check, to_f64, DedekindInstance};
use exact_algebra::{binomial, int, rat, BigInt, Field, Laurent, QPoly, QRatFunc, QuotientElem, Q};
use laurent_order::{hadamard, VariableOrder};
use num_traits::{One, Zero};
use omega_engine::{check_reciprocity, ct_lambda, ct_lambdas, elliott_reduce, solution_gf, DiophantineSystem, ElliottRational};
use oracle::{
    binomial_suite, count_walks, dedekind_float, dyson_product, enumerate_solutions, truncated_ct, Constraint,
    GeometricProblem, IdentityId, Steps,
};
use ppfraction::{conjugated_frac, denominator_from_roots, frac_at, frac_at_prime, full_pfd_linear, polynomial_part_by_reversal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use series_lab::{catalan_paths, dyck_bounded, quarter_plane_symmetric, slit_plane, StepSet, TruncatedSeries};
use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn poly(n: usize, terms: &[(Vec<i64>, i64)]) -> Laurent {
    Laurent::from_terms(n, terms.iter().map(|(e, c)| (e.clone(), int(*c))))
}

fn one_minus(n: usize, e: Vec<i64>) -> Laurent {
    poly(n, &[(vec![0; n], 1), (e, -1)])
}

fn tables_agree(a: &oracle::CoefficientTable, b: &oracle::CoefficientTable) -> Result<(), String> {
    let keys: BTreeSet<&Vec<i64>> = a.iter().map(|(k, _)| k).chain(b.iter().map(|(k, _)| k)).collect();
    for k in keys {
        if a.get(k) != b.get(k) {
            return Err(format!("at {:?}: {} vs {}", k, a.get(k), b.get(k)));
        }
    }
    Ok(())
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn fact(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// The Laurent polynomial coefficient of `t^n` as a map from exponents.
fn terms_of(s: &TruncatedSeries, n: usize) -> Result<BTreeMap<Vec<i64>, Q>, String> {
    let c = s.coeff(n);
    ensure!(c.is_polynomial(), "t^{} coefficient is not a polynomial: {}", n, c);
    Ok(c.numerator.terms().map(|(e, q)| (e.clone(), q.clone())).collect())
}

/// Oracle endpoints of walks of length `n`, keyed by the endpoint.
fn endpoints(table: &oracle::CoefficientTable, n: usize, keep: &[usize]) -> BTreeMap<Vec<i64>, Q> {
    table
        .iter()
        .filter(|(k, _)| k[0] == n as i64)
        .map(|(k, q)| (keep.iter().map(|&i| k[i]).collect(), q.clone()))
        .collect()
}

fn random_system(rng: &mut ChaCha8Rng) -> DiophantineSystem {
    let r = rng.gen_range(1..=2);
    let n = rng.gen_range(2..=4);
    let matrix: Vec<Vec<i64>> = (0..r).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    DiophantineSystem::homogeneous(matrix, n).unwrap()
}

fn omega_geq_cli() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_omegact"))
        .args(["omega", "geq", "1/((1-l^2*x)*(1-y/l^3))", "--vars", "l,x,y", "--eliminate", "l"])
        .env_remove("OMEGACT_TRUNCATE")
        .output()
        .map_err(err)?;
    let elapsed = start.elapsed();
    ensure!(out.status.success(), "exit status {:?}: {}", out.status, String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout).trim_end().to_string();
    ensure!(text == "(1+x^2*y)/((1-x^3*y^2)*(1-x))", "printed {}", text);
    ensure!(elapsed < Duration::from_secs(1), "took {:?}", elapsed);
    Ok(format!("{} in {:?}", text, elapsed))
}

fn six_factor() -> Outcome {
    let start = Instant::now();
    let o = VariableOrder::new(&["l1", "l2", "l3", "x"]).map_err(err)?;
    let factors: Vec<(Laurent, u32)> = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]
        .iter()
        .map(|&(i, j)| {
            let mut e = vec![0i64; 4];
            e[i] -= 2;
            e[j] += 1;
            e[3] = 1;
            (one_minus(4, e), 1)
        })
        .collect();
    let f = ElliottRational::from_factors(Laurent::one(4), &factors, o).map_err(err)?;
    let names = ["l1", "l2", "l3"];
    for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        let order: Vec<&str> = p.iter().map(|&i| names[i]).collect();
        let g = ct_lambdas(&f, &order).map_err(err)?;
        ensure!(g.display() == "1", "order {:?} gave {}", order, g);
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(5), "took {:?}", elapsed);
    Ok(format!("CT = 1 for all 6 orders in {:?}", elapsed))
}

fn zeilberger_ct(n: usize) -> Result<Q, String> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{}", i)).collect();
    let o = VariableOrder::new(&names).map_err(err)?;
    let zero = vec![0i64; n];
    let mut factors = Vec::new();
    for i in 0..n {
        let mut e = zero.clone();
        e[i] = 1;
        factors.push((one_minus(n, e.clone()), 1));
        for j in i + 1..n {
            let mut f = zero.clone();
            f[j] = 1;
            factors.push((poly(n, &[(e.clone(), 1), (f, -1)]), 1));
        }
    }
    let f = ElliottRational::from_factors(Laurent::one(n), &factors, o).map_err(err)?;
    let elim: Vec<&str> = names.iter().rev().map(String::as_str).collect();
    let g = ct_lambdas(&f, &elim).map_err(err)?;
    ensure!(g.denominator.is_empty(), "not a constant: {}", g);
    Ok(g.numerator.constant_coeff())
}

fn zeilberger() -> Outcome {
    let start = Instant::now();
    let got: Vec<Q> = (2..=4).map(zeilberger_ct).collect::<Result<_, _>>()?;
    ensure!(got == vec![int(1), int(2), int(10)], "got {:?}", got);
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(10), "took {:?}", elapsed);
    Ok(format!("1, 2, 10 in {:?}", elapsed))
}

fn random_enumeration() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let count = 24;
    for _ in 0..count {
        let s = random_system(&mut rng);
        let e = solution_gf(&s).map_err(err)?;
        let series = e.series(10).map_err(err)?;
        tables_agree(&series, &enumerate_solutions(&s.to_oracle(), 10)).map_err(|m| format!("{:?}: {}", s.matrix, m))?;
    }
    Ok(format!("{} random systems agree to degree 10", count))
}

fn random_reciprocity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut checked = 0;
    for _ in 0..40 {
        let s = random_system(&mut rng);
        let rep = check_reciprocity(&s, 10).map_err(err)?;
        if rep.hypothesis_violated.is_none() {
            ensure!(rep.mismatches.is_empty(), "{:?}: {:?}", s.matrix, &rep.mismatches[..rep.mismatches.len().min(3)]);
            checked += 1;
        }
    }
    ensure!(checked >= 5, "only {} systems met the hypotheses", checked);
    Ok(format!("{} eligible systems of 40", checked))
}

fn lin(a: i64) -> QPoly {
    QPoly::from_i64s(&[-a, 1])
}

fn partial_fractions() -> Outcome {
    // t / ((t+1)^2 (t-1)^3 (t-2)^5)
    let n = QPoly::x();
    let d = &(&lin(-1).pow(2) * &lin(1).pow(3)) * &lin(2).pow(5);
    let at_minus_one = frac_at(&n, &d, &lin(-1).pow(2)).map_err(err)?.numerator;
    let want = &QPoly::constant(rat(-1, 8 * 243)) + &lin(-1).scale(&rat(-13, 16 * 729));
    ensure!(at_minus_one == want, "block at -1: {}", at_minus_one.display("t"));
    let at_one = frac_at(&n, &d, &lin(1).pow(3)).map_err(err)?.numerator;
    let want = &(&QPoly::constant(rat(-1, 4)) + &lin(1).scale(&rat(-5, 4))) + &lin(1).pow(2).scale(&rat(-59, 16));
    ensure!(at_one == want, "block at 1: {}", at_one.display("t"));

    let pp = polynomial_part_by_reversal(&QPoly::from_i64s(&[4, -3, 2, 1]), &QPoly::from_i64s(&[2, -4, 1])).map_err(err)?;
    ensure!(pp == QPoly::from_i64s(&[6, 1]), "polynomial part {}", pp.display("t"));

    // t / ((t^2-t-1)^2 (t^2-t+2))
    let p1 = QPoly::from_i64s(&[-1, -1, 1]);
    let p2 = QPoly::from_i64s(&[2, -1, 1]);
    let d = &p1.pow(2) * &p2;
    let c = |q: Q| QuotientElem::from_rational(&q);
    let b1 = frac_at_prime(&n, &d, &p1, "a").map_err(err)?;
    let a = QuotientElem::root(&b1.modulus);
    ensure!(b1.coeffs[1] == a.clone() * c(rat(1, 15)), "leading coefficient {}", b1.coeffs[1]);
    let corrected = -(c(int(7)) + c(int(11)) * a.clone()) * c(rat(1, 225));
    ensure!(b1.coeffs[0] == corrected, "second coefficient {}", b1.coeffs[0]);
    let r1 = frac_at(&n, &d, &p1.pow(2)).map_err(err)?.numerator;
    ensure!(b1.consistent_with(&r1), "block at a does not reassemble");
    let mut printed = b1.clone();
    printed.coeffs[0] = (c(int(7)) - c(int(11)) * a) * c(rat(1, 225));
    ensure!(!printed.consistent_with(&r1), "the sign-flipped coefficient unexpectedly reassembles");
    let b2 = frac_at_prime(&n, &d, &p2, "b").map_err(err)?;
    let b = QuotientElem::root(&b2.modulus);
    ensure!(b2.coeffs == vec![(c(int(4)) - b) * c(rat(1, 63))], "block at b: {:?}", b2.coeffs);
    let r2 = frac_at(&n, &d, &p2).map_err(err)?.numerator;
    ensure!(b2.consistent_with(&r2), "block at b does not reassemble");
    Ok("linear blocks, t+6, a/15, (4-b)/63; documented correction: coefficient -(7+11a)/225 \
        replaces the commonly quoted (7-11a)/225, which fails reassembly"
        .into())
}

fn random_linear_instance(rng: &mut ChaCha8Rng) -> (QPoly, Vec<(Q, u32)>) {
    let k = rng.gen_range(1..=3);
    let mut roots: Vec<(Q, u32)> = Vec::new();
    let mut total = 0;
    while roots.len() < k {
        let a = int(rng.gen_range(-4..=4));
        if roots.iter().any(|(b, _)| *b == a) {
            continue;
        }
        let m = rng.gen_range(1..=4u32).min(12 - total);
        if m == 0 {
            break;
        }
        total += m;
        roots.push((a, m));
    }
    let deg = rng.gen_range(0..=12);
    let n = QPoly::new((0..=deg).map(|_| int(rng.gen_range(-5..=5))).collect());
    (n, roots)
}

fn random_elliott(rng: &mut ChaCha8Rng) -> ElliottRational {
    let o = VariableOrder::new(&["l", "x", "y"]).unwrap();
    let mut exps = vec![rng.gen_range(1..=3), -rng.gen_range(1..=3)];
    let mut third = 0;
    while third == 0 {
        third = rng.gen_range(-3..=3);
    }
    exps.push(third);
    let factors: Vec<(Laurent, u32)> = exps
        .iter()
        .map(|&e| {
            let (a, b) = loop {
                let a: i64 = rng.gen_range(0..=2);
                let b: i64 = rng.gen_range(0..=2);
                if a + b > 0 {
                    break (a, b);
                }
            };
            (one_minus(3, vec![e, a, b]), 1)
        })
        .collect();
    let d = rng.gen_range(-2..=2);
    ElliottRational::from_factors(poly(3, &[(vec![d, 0, 0], 1)]), &factors, o).unwrap()
}

fn route_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let (n, roots) = random_linear_instance(&mut rng);
        let d = denominator_from_roots(&roots);
        let full = full_pfd_linear(&n, &roots).map_err(err)?;
        ensure!(full.reassembles_to(&n), "full expansion does not reassemble for {}", n.display("t"));
        for (i, (a, m)) in roots.iter().enumerate() {
            let d1 = QPoly::linear_root(a.clone()).pow(*m);
            let direct = frac_at(&n, &d, &d1).map_err(err)?;
            let routed = conjugated_frac(&n, &d, &d1, a).map_err(err)?;
            ensure!(direct.numerator == routed.numerator, "translation route differs at {}", a);
            let base = QPoly::linear_root(a.clone());
            let mut from_full = QPoly::zero();
            for (j, c) in full.blocks[i].1.iter().enumerate() {
                from_full = &from_full + &base.pow(*m - 1 - j as u32).scale(c);
            }
            ensure!(direct.numerator == from_full, "complete expansion differs at {}", a);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let f = random_elliott(&mut rng);
        let a = ct_lambda(&f, "l").map_err(err)?;
        let b = elliott_reduce(&f, "l").map_err(err)?;
        ensure!(a.same_function(&b), "{}: {} vs {}", f, a, b);
    }
    Ok("50 linear instances by three routes, 20 Elliott reductions".into())
}

fn fibonacci_square() -> Outcome {
    let f = QRatFunc::new(QPoly::one(), QPoly::from_i64s(&[1, -1, -1])).map_err(err)?;
    let h = hadamard(&f, &f).map_err(err)?;
    ensure!(h.display("t") == "(1-t)/(1-2*t-2*t^2+t^3)", "got {}", h.display("t"));
    let coeffs = h.series(12).map_err(err)?;
    let mut fib = vec![BigInt::one(), BigInt::one()];
    while fib.len() < 13 {
        let k = fib.len();
        fib.push(&fib[k - 1] + &fib[k - 2]);
    }
    for (n, c) in coeffs.iter().enumerate() {
        let want = Q::from(&fib[n] * &fib[n]);
        ensure!(*c == want, "coefficient {}: {} vs {}", n, c, want);
    }
    Ok(format!("{}, first 12 coefficients are squared Fibonacci numbers", h.display("t")))
}

fn multisets(m: usize, max: u64) -> Vec<Vec<u64>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for v in multisets(m - 1, max) {
        let lo = v.last().copied().unwrap_or(1);
        for x in lo..=max {
            let mut w = v.clone();
            w.push(x);
            out.push(w);
        }
    }
    out
}

fn dedekind_sums() -> Outcome {
    let mut checked = 0;
    for n in 1..=12u64 {
        for m in 1..=3 {
            for a in multisets(m, 12) {
                if a.iter().any(|&x| gcd(x, n) != 1) {
                    continue;
                }
                let exact = dedekind_sum(&DedekindInstance::new(n, a.clone()).map_err(err)?).map_err(err)?;
                let float = dedekind_float(n, &a);
                ensure!((to_f64(&exact) - float).abs() < 1e-9, "d({}; {:?}) = {} vs {}", n, a, exact, float);
                checked += 1;
            }
        }
    }
    let mut triples = 0;
    for a in multisets(3, 12) {
        if gcd(a[0], a[1]) != 1 || gcd(a[0], a[2]) != 1 || gcd(a[1], a[2]) != 1 {
            continue;
        }
        let rep = reciprocity_check(&a).map_err(err)?;
        ensure!(rep.equal, "{:?}: {} vs {}", a, rep.lhs, rep.rhs);
        triples += 1;
    }
    Ok(format!("{} sums against floats, reciprocity on {} coprime triples", checked, triples))
}

fn dyson() -> Outcome {
    let mut checked = 0;
    for n in 2..=3usize {
        for a in multisets(n, 4) {
            // entries 0..=3, stored shifted by one
            let a: Vec<u32> = a.iter().map(|&x| x as u32 - 1).collect();
            let p = dyson_product(&a);
            let names: Vec<String> = (1..=n).map(|i| format!("x{}", i)).collect();
            let o = VariableOrder::new(&names).map_err(err)?;
            let f = ElliottRational::polynomial(p.clone(), o).map_err(err)?;
            let elim: Vec<&str> = names.iter().map(String::as_str).collect();
            let g = ct_lambdas(&f, &elim).map_err(err)?;
            ensure!(g.denominator.is_empty(), "not a constant: {}", g);
            let ct = g.numerator.constant_coeff();
            let total: u64 = a.iter().map(|&x| x as u64).sum();
            let want = a.iter().fold(Q::from(fact(total)), |acc, &x| acc / Q::from(fact(x as u64)));
            ensure!(ct == want, "a = {:?}: CT {} vs {}", a, ct, want);
            let reference = truncated_ct(&GeometricProblem::new(p, vec![]), &(0..n).collect::<Vec<_>>(), 0, None)
                .map_err(err)?
                .get(&[]);
            ensure!(reference == want, "a = {:?}: oracle {} vs {}", a, reference, want);
            checked += 1;
        }
    }
    Ok(format!("{} exponent vectors", checked))
}

const ORDINARY: [(i64, i64); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

fn diagonal_formula(i: i64, n: i64) -> Q {
    Q::new(i.into(), (2 * n).into())
        * Q::from(binomial(2 * i, i as u64))
        * Q::from(binomial(n + i, 2 * i as u64))
        * Q::from(binomial(4 * n, 2 * n as u64))
        / Q::from(binomial(2 * n + 2 * i, 2 * i as u64))
}

fn slit_walks() -> Outcome {
    let start = Instant::now();
    let gamma = ElliottRational::from_factors(
        poly(2, &[(vec![-1, -1], 1)]),
        &[(one_minus(2, vec![1, 0]), 1), (one_minus(2, vec![0, 1]), 1)],
        StepSet::xy(),
    )
    .map_err(err)?;
    let slit = slit_plane(&StepSet::rational(gamma).map_err(err)?, 6).map_err(err)?;
    ensure!(slit.p == Some(1), "p = {:?}", slit.p);
    let s = slit.s_p0.as_ref().ok_or("no S_{1,0}")?;
    let shown = s.to_string();
    let want = [0, 1, 10, 110, 1302, 16212, 209352];
    for (k, w) in want.iter().enumerate() {
        ensure!(s.coeff(k).as_constant() == Some(int(*w)), "t^{} of S_(1,0) = {}", k, shown);
    }
    let walks = count_walks(&Steps::Quadrant { dx0: -1, dy0: -1 }, Constraint::Slit, 6, (0, 0), Some((1, 0))).map_err(err)?;
    for (k, w) in want.iter().enumerate().skip(1) {
        ensure!(walks.get(&[k as i64, 1, 0]) == int(*w), "enumeration at t^{}", k);
    }

    let slit = slit_plane(&StepSet::ordinary(), 8).map_err(err)?;
    let oracle = count_walks(&Steps::Finite(ORDINARY.to_vec()), Constraint::Slit, 8, (0, 0), None).map_err(err)?;
    for i in 1..=2i64 {
        for half in 1..=4i64 {
            let len = 2 * half as usize;
            let ours = terms_of(&slit.walks, len)?.get(&vec![-i, -i]).cloned().unwrap_or_else(Q::zero);
            ensure!(ours == diagonal_formula(i, half), "a_(-{0},-{0})({1}) = {2} vs closed form", i, len, ours);
            ensure!(ours == oracle.get(&[len as i64, -i, -i]), "a_(-{0},-{0})({1}) = {2} vs enumeration", i, len, ours);
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {:?}", elapsed);
    Ok(format!("S_(1,0) = {}, diagonal counts for i <= 2, n <= 4, in {:?}", shown, elapsed))
}

fn catalan_and_dyck() -> Outcome {
    let n = 10;
    let c = catalan_paths(n).map_err(err)?;
    let by_length = c.by_length.constants().ok_or("non-constant coefficients")?;
    for k in 0..=n as i64 {
        let half = (k + 1) / 2;
        let want = if k % 2 == 0 { binomial(k, half as u64) } else { binomial(2 * half, half as u64) / 2 };
        ensure!(by_length[k as usize] == Q::from(want.clone()), "length {}: {} vs {}", k, by_length[k as usize], want);
    }
    let len = 16;
    for m in 1..=3u32 {
        let d = dyck_bounded(Some(m), len).map_err(err)?;
        let oracle = count_walks(&Steps::Finite(vec![(1, 1), (1, -1)]), Constraint::HeightBand(0, m as i64 - 1), len, (0, 0), None)
            .map_err(err)?;
        for k in 0..=len {
            ensure!(terms_of(&d.h, k)? == endpoints(&oracle, k, &[2]), "H_{} at t^{}", m, k);
        }
    }
    Ok(format!("lengths 0..={}, bounded Dyck paths to length {}", n, len))
}

fn quarter_plane() -> Outcome {
    let n = 8;
    let q = quarter_plane_symmetric(&StepSet::finite(&ORDINARY), n).map_err(err)?;
    let oracle = count_walks(&Steps::Finite(ORDINARY.to_vec()), Constraint::Quarter, n, (1, 1), None).map_err(err)?;
    for k in 0..=n {
        ensure!(terms_of(&q.q, k)? == endpoints(&oracle, k, &[1, 2]), "length {}", k);
    }
    Ok(format!("Q matches enumeration to length {}", n))
}

fn binomials() -> Outcome {
    let mut lines = Vec::new();
    for (id, max) in [
        (IdentityId::BinomialCt, 6),
        (IdentityId::PowerOfTwo, 12),
        (IdentityId::HalfPowerOfTwo, 12),
        (IdentityId::Fibonacci, 15),
        (IdentityId::Saalschutz, 4),
        (IdentityId::SuperCatalan, 8),
    ] {
        let checks = binomial_suite(id, max);
        ensure!(!checks.is_empty(), "{} produced no instances", id.name());
        for c in &checks {
            ensure!(c.pass(), "{} {:?}: {} vs {}", id.name(), c.params, c.lhs, c.rhs);
        }
        if id == IdentityId::SuperCatalan {
            ensure!(checks.iter().all(|c| c.params.iter().sum::<i64>() <= 8), "super Catalan beyond m+n <= 8");
        }
        lines.push(format!("{} {}", id.name(), checks.len()));
    }
    ensure!(lines.len() == IdentityId::ALL.len(), "suite covers {} of {} identities", lines.len(), IdentityId::ALL.len());
    Ok(lines.join(", "))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("omega geq on the two-factor example", omega_geq_cli),
        ("six-factor constant term in every order", six_factor),
        ("Zeilberger kernel constant terms", zeilberger),
        ("solution series against enumeration", random_enumeration),
        ("reciprocity on random systems", random_reciprocity),
        ("partial fraction worked values", partial_fractions),
        ("partial fraction routes and Elliott reduction", route_equivalence),
        ("Hadamard square of Fibonacci", fibonacci_square),
        ("Dedekind sums and reciprocity", dedekind_sums),
        ("Dyson constant terms", dyson),
        ("slit plane walks", slit_walks),
        ("paths below the diagonal and bounded Dyck paths", catalan_and_dyck),
        ("quarter plane walks", quarter_plane),
        ("binomial identity suite", binomials),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(msg)
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {}: {}", i + 1, name, detail),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {}: {}", i + 1, name, why);
            }
        }
    }
    println!("{} of {} criteria passed in {:?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
