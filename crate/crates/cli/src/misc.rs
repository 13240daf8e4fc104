use crate::args::{CountArgs, DedekindArgs, HadamardArgs};
use crate::util::{check_diff, parse_over, single_variable, table_diff};
use crate::{read_system, CliError, Config, Report};
use dedekind::{dedekind_sum, reciprocity_check, to_f64, DedekindInstance};
use laurent_order::hadamard as hadamard_product;
use omega_engine::{check_reciprocity, solution_gf};
use oracle::{dedekind_float, enumerate_solutions};
use serde_json::json;

pub fn count(args: &CountArgs, cfg: &Config) -> Result<Report, CliError> {
    let sys = read_system(&args.system)?;
    let strict = sys.with_strict(true);
    let e = solution_gf(&sys)?;
    let e_bar = solution_gf(&strict)?;
    let n = cfg.truncate as i64;
    if cfg.cross_check {
        let bound = cfg.truncate as u32;
        check_diff("solution enumeration", table_diff(&e.series(n)?, &enumerate_solutions(&sys.to_oracle(), bound)))?;
        check_diff(
            "positive solution enumeration",
            table_diff(&e_bar.series(n)?, &enumerate_solutions(&strict.to_oracle(), bound)),
        )?;
    }
    let report = check_reciprocity(&sys, n)?;
    let mismatches: Vec<String> = report
        .mismatches
        .iter()
        .map(|(label, k)| format!("{}: {:?}", label, k))
        .collect();
    check_diff("reciprocity", mismatches)?;
    let status = match &report.hypothesis_violated {
        Some(why) => format!("not applicable ({})", why),
        None => format!("E(x) = (-1)^{} Ebar(1/x) holds up to degree {}", sys.ncols - report.rank, n),
    };
    let text = format!("E(x) = {}\nEbar(x) = {}\nreciprocity: {}", e.display(), e_bar.display(), status);
    Ok(Report::new(
        text,
        json!({
            "variables": sys.x_names(),
            "e": e.display(),
            "e_bar": e_bar.display(),
            "e_form": e.to_json(),
            "e_bar_form": e_bar.to_json(),
            "reciprocity": {
                "rank": report.rank,
                "rows": report.rows,
                "ncols": report.ncols,
                "degree": n,
                "applicable": report.hypothesis_violated.is_none(),
                "reason": report.hypothesis_violated,
                "holds": report.holds(),
            },
        }),
    ))
}

fn close(exact: f64, float: f64) -> bool {
    (exact - float).abs() <= 1e-9 * exact.abs().max(1.0)
}

pub fn dedekind(args: &DedekindArgs, cfg: &Config) -> Result<Report, CliError> {
    let v = &args.values;
    if args.reciprocity {
        let r = reciprocity_check(v)?;
        if cfg.cross_check {
            let mut lhs = 0.0;
            for j in 0..v.len() {
                let rest: Vec<u64> = v.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, &x)| x).collect();
                lhs += dedekind_float(v[j], &rest) / v[j] as f64;
            }
            if !close(to_f64(&r.lhs), lhs) {
                return Err(CliError::Domain(format!(
                    "cross-check against the floating-point oracle failed: lhs {} vs {}",
                    r.lhs, lhs
                )));
            }
        }
        let text = format!(
            "lhs: {}\nrhs: {} = {} + {}\nequal: {}",
            r.lhs, r.rhs, r.frac_term, r.correction, r.equal
        );
        return Ok(Report::new(
            text,
            json!({
                "a": v,
                "lhs": r.lhs.to_string(),
                "frac_term": r.frac_term.to_string(),
                "correction": r.correction.to_string(),
                "rhs": r.rhs.to_string(),
                "equal": r.equal,
            }),
        ));
    }
    if v.len() < 2 {
        return Err(CliError::Usage("dedekind needs n followed by at least one a_i".into()));
    }
    let inst = DedekindInstance::new(v[0], v[1..].to_vec())?;
    let d = dedekind_sum(&inst)?;
    if cfg.cross_check {
        let float = dedekind_float(inst.n, &inst.a);
        if !close(to_f64(&d), float) {
            return Err(CliError::Domain(format!(
                "cross-check against the floating-point oracle failed: {} vs {}",
                d, float
            )));
        }
    }
    let args_text: Vec<String> = inst.a.iter().map(|x| x.to_string()).collect();
    Ok(Report::new(
        format!("d({}; {}) = {}", inst.n, args_text.join(", "), d),
        json!({"n": inst.n, "a": inst.a, "value": d.to_string()}),
    ))
}

pub fn hadamard(args: &HadamardArgs, cfg: &Config) -> Result<Report, CliError> {
    let var = single_variable(&[&args.f, &args.g], args.var.as_deref())?;
    let vars = [var.clone()];
    let f = parse_over(&args.f, &vars)?.0.to_ratfunc()?;
    let g = parse_over(&args.g, &vars)?.0.to_ratfunc()?;
    let h = hadamard_product(&f, &g)?;
    if cfg.cross_check {
        let n = cfg.truncate + 1;
        let (a, b, c) = (f.series(n)?, g.series(n)?, h.series(n)?);
        let diff: Vec<String> = (0..n)
            .filter(|&k| a[k].clone() * b[k].clone() != c[k])
            .map(|k| format!("[{}]: computed {}, oracle {}", k, c[k], a[k].clone() * b[k].clone()))
            .collect();
        check_diff("coefficientwise product", diff)?;
    }
    Ok(Report::new(
        h.display(&var),
        json!({
            "variable": var,
            "f": f.display(&var),
            "g": g.display(&var),
            "result": h.display(&var),
            "numerator": h.num().display(&var),
            "denominator": h.den().display(&var),
        }),
    ))
}
