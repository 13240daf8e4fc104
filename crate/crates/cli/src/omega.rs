use crate::args::{OmegaArgs, OmegaOp};
use crate::util::{check_diff, order_from, parse_over, table_diff};
use crate::{read_system, CliError, Config, Report};
use exact_algebra::{Laurent, Q};
use num_traits::One;
use omega_engine::{crude_gf, ct_lambdas, omega_geq, ElliottRational};
use oracle::{truncated_ct, GeometricProblem};
use serde_json::json;

pub fn run(op: &OmegaOp, cfg: &Config) -> Result<Report, CliError> {
    let (args, geq) = match op {
        OmegaOp::Ct(a) => (a, false),
        OmegaOp::Geq(a) => (a, true),
    };
    let (f, default_elim) = input(args)?;
    let elim = elimination_order(args, default_elim)?;
    let names: Vec<&str> = elim.iter().map(String::as_str).collect();
    let result = if geq { omega_geq(&f, &names)? } else { ct_lambdas(&f, &names)? };
    if cfg.cross_check {
        cross_check(&f, &result, &elim, geq, cfg.truncate)?;
    }
    let mut report = Report::new(
        result.display(),
        json!({
            "operation": if geq { "geq" } else { "ct" },
            "input": f.display(),
            "eliminated": elim,
            "result": result.display(),
            "form": result.to_json(),
        }),
    );
    report.latex = Some(result.latex());
    Ok(report)
}

fn input(args: &OmegaArgs) -> Result<(ElliottRational, Vec<String>), CliError> {
    if let Some(path) = &args.system {
        let sys = read_system(path)?;
        return Ok((crude_gf(&sys)?, sys.lambda_names()));
    }
    let text = args
        .expr
        .as_deref()
        .ok_or_else(|| CliError::Usage("give an expression or --system FILE".into()))?;
    if args.eliminate.is_empty() && args.elim_order.is_empty() {
        return Err(CliError::Usage("name the variables to eliminate with --eliminate".into()));
    }
    let (lowered, vars) = parse_over(text, &args.vars)?;
    let order = order_from(&vars, args.rho.as_deref())?;
    Ok((lowered.to_elliott(&order)?, args.eliminate.clone()))
}

fn elimination_order(args: &OmegaArgs, default: Vec<String>) -> Result<Vec<String>, CliError> {
    let base = if args.system.is_some() && !args.eliminate.is_empty() { args.eliminate.clone() } else { default };
    if args.elim_order.is_empty() {
        return Ok(base);
    }
    let mut a = args.elim_order.clone();
    let mut b = if base.is_empty() { args.elim_order.clone() } else { base };
    a.sort();
    b.sort();
    if a != b {
        return Err(CliError::Usage(format!(
            "--elim-order {} is not a permutation of the eliminated variables {}",
            args.elim_order.join(","),
            b.join(",")
        )));
    }
    Ok(args.elim_order.clone())
}

fn max_abs(p: &Laurent, i: usize) -> i64 {
    p.terms().map(|(e, _)| e[i].abs()).max().unwrap_or(0)
}

/// Compares the result with the truncated geometric expansion of the input,
/// up to total degree `n` in the remaining variables.
fn cross_check(f: &ElliottRational, result: &ElliottRational, elim: &[String], geq: bool, n: usize) -> Result<(), CliError> {
    let idx: Vec<usize> = elim
        .iter()
        .map(|v| f.order.index_of(v))
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let factors: Vec<(Laurent, u32)> = f.denominator.iter().map(|d| (d.base(), d.mult)).collect();
    let k_max = 2 * n + 2;
    let mut numerator = f.numerator.clone();
    if geq {
        // Omega>= is the constant term after multiplying by sum_{k>=0} l^-k;
        // the sum is cut beyond the largest power of l the expansion can reach
        for &i in &idx {
            let reach = max_abs(&f.numerator, i)
                + factors
                    .iter()
                    .map(|(p, m)| max_abs(p, i) * (*m as i64 + 2 * k_max as i64))
                    .sum::<i64>();
            let mut tail = Laurent::zero(f.nvars());
            for k in 0..=reach {
                let mut e = vec![0i64; f.nvars()];
                e[i] = -k;
                tail.add_term(e, Q::one());
            }
            numerator = &numerator * &tail;
        }
    }
    let mut problem = GeometricProblem::new(numerator, factors);
    problem.rho = f.order.rho().cloned();
    let expected = truncated_ct(&problem, &idx, k_max, Some(n as i64))?;
    let ours = result.series(n as i64)?;
    check_diff("truncated expansion", table_diff(&ours, &expected))
}
