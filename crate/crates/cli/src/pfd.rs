use crate::args::PfdArgs;
use crate::util::{parse_over, single_variable};
use crate::{CliError, Report};
use crate::Config;
use exact_algebra::{QPoly, UniPoly, Q};
use num_traits::{One, Zero};
use ppfraction::{frac_at, frac_at_origin, frac_at_prime, full_pfd_linear, ppfraction_split, FracPart};
use serde_json::{json, Value};

/// `t - a` as text.
fn linear(var: &str, a: &Q) -> String {
    if a.is_zero() {
        var.to_string()
    } else if *a < Q::zero() {
        format!("{}+{}", var, -a.clone())
    } else {
        format!("{}-{}", var, a)
    }
}

fn power(base: &str, j: usize) -> String {
    if j == 1 {
        format!("({})", base)
    } else {
        format!("({})^{}", base, j)
    }
}

pub fn run(args: &PfdArgs, cfg: &Config) -> Result<Report, CliError> {
    let var = single_variable(&[&args.expr], args.var.as_deref())?;
    let (f, _) = parse_over(&args.expr, std::slice::from_ref(&var))?;
    let (num, factors) = f.to_univariate()?;
    let den = factors.iter().fold(QPoly::one(), |acc, (p, m)| &acc * &p.pow(*m));
    if let Some(p) = &args.prime {
        return prime(&num, &den, p, &var, cfg);
    }
    if args.at_origin {
        return origin(&num, &den, &factors, &var);
    }
    if factors.iter().all(|(p, _)| p.degree() == Some(1)) {
        linear_blocks(&num, &factors, &den, &var, cfg)
    } else {
        general(&num, &den, &factors, &var, cfg)
    }
}

/// Every denominator factor is linear: the complete expansion into
/// `c / (t - a)^j`.
fn linear_blocks(num: &QPoly, factors: &[(QPoly, u32)], den: &QPoly, var: &str, cfg: &Config) -> Result<Report, CliError> {
    // den = lead * prod (t - a)^m
    let lead = factors.iter().fold(Q::one(), |acc, (p, m)| acc * exact_algebra::Field::pow(&p.coeff(1), *m as u64));
    let roots: Vec<(Q, u32)> = factors.iter().map(|(p, m)| (-p.coeff(0) / p.coeff(1), *m)).collect();
    let scaled = num.scale(&(Q::one() / lead));
    let pfd = full_pfd_linear(&scaled, &roots)?;
    if !pfd.reassembles_to(&scaled) {
        return Err(CliError::Domain("internal error: the expansion does not reassemble".into()));
    }
    if cfg.cross_check {
        // the block at each root against frac_at on (t - a)^m
        for (a, cs) in &pfd.blocks {
            let m = cs.len();
            let lin = UniPoly::linear_root(a.clone());
            let expected = frac_at(num, den, &lin.pow(m as u32))?;
            let mut ours = QPoly::zero();
            for (j, c) in cs.iter().enumerate() {
                ours = &ours + &lin.pow((m - 1 - j) as u32).scale(c);
            }
            if ours != expected.numerator {
                return Err(CliError::Domain(format!(
                    "cross-check against frac_at failed at {}: computed {}, oracle {}",
                    linear(var, a),
                    ours.display(var),
                    expected.numerator.display(var)
                )));
            }
        }
    }
    let mut lines = Vec::new();
    if !pfd.polynomial_part.is_zero() {
        lines.push(format!("polynomial part: {}", pfd.polynomial_part.display(var)));
    }
    let mut blocks = Vec::new();
    for (a, cs) in &pfd.blocks {
        let base = linear(var, a);
        let terms: Vec<String> = cs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| format!("({})/{}", c, power(&base, j + 1)))
            .collect();
        let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        lines.push(format!("{}: {}", power(&base, cs.len()), body));
        blocks.push(json!({
            "factor": base,
            "multiplicity": cs.len(),
            "coefficients": cs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        }));
    }
    Ok(Report::new(
        lines.join("\n"),
        json!({
            "variable": var,
            "polynomial_part": pfd.polynomial_part.display(var),
            "blocks": blocks,
        }),
    ))
}

fn part_json(part: &FracPart<Q>, m: u32, base: &QPoly, var: &str) -> Value {
    json!({
        "factor": base.display(var),
        "multiplicity": m,
        "numerator": part.numerator.display(var),
    })
}

/// Fractional parts at the powers of the given factors.
fn general(num: &QPoly, den: &QPoly, factors: &[(QPoly, u32)], var: &str, cfg: &Config) -> Result<Report, CliError> {
    let powers: Vec<QPoly> = factors.iter().map(|(p, m)| p.pow(*m)).collect();
    let split = ppfraction_split(num, den, &powers)?;
    if !split.reassembles_to(num, den) {
        return Err(CliError::Domain("internal error: the expansion does not reassemble".into()));
    }
    if cfg.cross_check {
        for (part, d1) in split.parts.iter().zip(&powers) {
            let expected = frac_at(num, den, d1)?;
            if expected.numerator != part.numerator {
                return Err(CliError::Domain(format!(
                    "cross-check against frac_at failed at {}: computed {}, oracle {}",
                    d1.display(var),
                    part.numerator.display(var),
                    expected.numerator.display(var)
                )));
            }
        }
    }
    let mut lines = Vec::new();
    if !split.polynomial_part.is_zero() {
        lines.push(format!("polynomial part: {}", split.polynomial_part.display(var)));
    }
    let mut parts = Vec::new();
    for (part, (p, m)) in split.parts.iter().zip(factors) {
        let base = p.display(var);
        lines.push(format!("{}: ({})/{}", power(&base, *m as usize), part.numerator.display(var), power(&base, *m as usize)));
        parts.push(part_json(part, *m, p, var));
    }
    Ok(Report::new(
        lines.join("\n"),
        json!({
            "variable": var,
            "polynomial_part": split.polynomial_part.display(var),
            "parts": parts,
        }),
    ))
}

fn origin(num: &QPoly, den: &QPoly, factors: &[(QPoly, u32)], var: &str) -> Result<Report, CliError> {
    let m = factors.iter().find(|(p, _)| *p == QPoly::x()).map_or(0, |(_, m)| *m as usize);
    let part = frac_at_origin(num, den, m)?;
    let text = if m == 0 || part.numerator.is_zero() {
        "0".to_string()
    } else {
        format!("({})/{}", part.numerator.display(var), power(var, m))
    };
    Ok(Report::new(text, part_json(&part, m as u32, &QPoly::x(), var)))
}

fn prime(num: &QPoly, den: &QPoly, text: &str, var: &str, cfg: &Config) -> Result<Report, CliError> {
    let (p, _) = parse_over(text, &[var.to_string()])?;
    let (p, rest) = p.to_univariate()?;
    if !rest.is_empty() {
        return Err(CliError::Usage(format!("--prime expects a polynomial, got {}", text)));
    }
    let block = frac_at_prime(num, den, &p, "a")?;
    if cfg.cross_check {
        let k = block.multiplicity() as u32;
        let r = frac_at(num, den, &block.modulus.poly.pow(k))?;
        if !block.consistent_with(&r.numerator) {
            return Err(CliError::Domain(
                "cross-check failed: the block disagrees with the rational fractional part".into(),
            ));
        }
    }
    let shown = block.to_string().replace("(t-", &format!("({}-", var));
    Ok(Report::new(
        format!("root a of {}:\n{}", block.modulus.poly.display(var), shown),
        json!({
            "variable": var,
            "modulus": block.modulus.poly.display(var),
            "multiplicity": block.multiplicity(),
            "coefficients": block.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        }),
    ))
}
