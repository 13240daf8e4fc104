use crate::args::OracleCmd;
use crate::util::{parse_over, table_json, table_text};
use crate::walks::{oracle_steps, parse_steps};
use crate::{read_system, CliError, Config, Report};
use exact_algebra::{BigInt, Q};
use num_traits::One;
use oracle::{
    binomial_suite, count_walks, dedekind_float, dyson_product, enumerate_solutions, truncated_ct, Constraint,
    GeometricProblem, IdentityId,
};
use serde_json::json;

fn table_report(t: &oracle::CoefficientTable, extra: serde_json::Value) -> Report {
    Report::new(table_text(t), json!({"query": extra, "coefficients": table_json(t)}))
}

fn parse_constraint(text: &str) -> Result<Constraint, CliError> {
    let bad = || CliError::Usage(format!("unknown constraint '{}'; expected none, slit, diagonal, band:LO:HI or quarter", text));
    Ok(match text {
        "none" => Constraint::None,
        "slit" => Constraint::Slit,
        "diagonal" => Constraint::NotAboveDiagonal,
        "quarter" => Constraint::Quarter,
        _ => {
            let rest = text.strip_prefix("band:").ok_or_else(bad)?;
            let (lo, hi) = rest.split_once(':').ok_or_else(bad)?;
            Constraint::HeightBand(lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?)
        }
    })
}

fn pair(v: &[i64], what: &str) -> Result<(i64, i64), CliError> {
    match v {
        [a, b] => Ok((*a, *b)),
        _ => Err(CliError::Usage(format!("{} takes two integers X,Y", what))),
    }
}

pub fn run(op: &OracleCmd, cfg: &Config) -> Result<Report, CliError> {
    let n = cfg.truncate;
    match op {
        OracleCmd::Solutions { system, strict } => {
            let sys = read_system(system)?.with_strict(*strict);
            let t = enumerate_solutions(&sys.to_oracle(), n as u32);
            Ok(table_report(&t, json!({"strict": strict, "degree": n})))
        }
        OracleCmd::Walks { steps, constraint, start, window } => {
            let steps = oracle_steps(&parse_steps(steps.as_deref())?)?;
            let window = if window.is_empty() { None } else { Some(pair(window, "--window")?) };
            let t = count_walks(&steps, parse_constraint(constraint)?, n, pair(start, "--start")?, window)?;
            Ok(table_report(&t, json!({"constraint": constraint, "length": n, "start": start})))
        }
        OracleCmd::Ct { expr, vars, eliminate, k_max } => {
            let (f, vars) = parse_over(expr, vars)?;
            let idx: Vec<usize> = eliminate
                .iter()
                .map(|v| {
                    vars.iter()
                        .position(|w| w == v)
                        .ok_or_else(|| CliError::Usage(format!("unknown variable '{}' in --eliminate", v)))
                })
                .collect::<Result<_, _>>()?;
            let problem = GeometricProblem::new(f.numerator(), f.den.clone());
            let t = truncated_ct(&problem, &idx, k_max.unwrap_or(2 * n + 2), Some(n as i64))?;
            Ok(table_report(&t, json!({"eliminate": eliminate, "degree": n})))
        }
        OracleCmd::Dedekind { n, a } => {
            let v = dedekind_float(*n, a);
            Ok(Report::new(format!("{}", v), json!({"n": n, "a": a, "value": v})))
        }
        OracleCmd::Binomial { identity, max } => {
            let ids: Vec<IdentityId> = if identity == "all" {
                IdentityId::ALL.to_vec()
            } else {
                vec![IdentityId::from_name(identity)
                    .ok_or_else(|| CliError::Usage(format!("unknown identity '{}'", identity)))?]
            };
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            let mut failed = 0;
            for id in ids {
                let checks = binomial_suite(id, *max);
                let bad: Vec<_> = checks.iter().filter(|c| !c.pass()).collect();
                failed += bad.len();
                lines.push(format!("{}: {} instances, {} failed", id.name(), checks.len(), bad.len()));
                for c in &bad {
                    lines.push(format!("  {:?}: lhs {} rhs {}", c.params, c.lhs, c.rhs));
                }
                rows.push(json!({"identity": id.name(), "instances": checks.len(), "failed": bad.len()}));
            }
            if failed > 0 {
                return Err(CliError::Domain(lines.join("\n")));
            }
            Ok(Report::new(lines.join("\n"), json!({"max": max, "identities": rows})))
        }
        OracleCmd::Dyson { a } => {
            let ct = dyson_product(a).constant_coeff();
            let fact = |k: u64| (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
            let total: u64 = a.iter().map(|&x| x as u64).sum();
            let multinomial = a.iter().fold(Q::from(fact(total)), |acc, &x| acc / Q::from(fact(x as u64)));
            Ok(Report::new(
                format!("CT = {}\nmultinomial = {}\nequal: {}", ct, multinomial, ct == multinomial),
                json!({"a": a, "ct": ct.to_string(), "multinomial": multinomial.to_string(), "equal": ct == multinomial}),
            ))
        }
    }
}
