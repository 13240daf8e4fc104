use crate::args::{StepArgs, WalksCmd};
use crate::util::{check_diff, parse_over, series_table, table_diff};
use crate::{CliError, Config, Report};
use exact_algebra::{Laurent, Q};
use num_traits::One;
use oracle::{count_walks, CoefficientTable, Constraint, Steps};
use serde_json::json;
use series_lab::{catalan_paths, dyck_bounded, quarter_plane_symmetric, slit_plane, StepSet, TruncatedSeries};

const DEFAULT_STEPS: &str = "x+1/x+y+1/y";

fn xy() -> Vec<String> {
    vec!["x".into(), "y".into()]
}

pub fn parse_steps(text: Option<&str>) -> Result<StepSet, CliError> {
    let (f, _) = parse_over(text.unwrap_or(DEFAULT_STEPS), &xy())?;
    Ok(StepSet::rational(f.to_elliott(&StepSet::xy())?)?)
}

/// The enumerable form of a step set: finitely many steps with positive
/// integer weights, or the weight `x^a y^b / ((1-x)(1-y))`.
pub fn oracle_steps(steps: &StepSet) -> Result<Steps, CliError> {
    let unsupported = || {
        CliError::Usage(
            "the walk oracle takes a Laurent polynomial with positive integer coefficients or x^a*y^b/((1-x)*(1-y))"
                .into(),
        )
    };
    if let Some(finite) = &steps.finite_steps {
        let mut out = Vec::new();
        for (dx, dy, w) in finite {
            if !w.is_integer() || *w < Q::one() {
                return Err(unsupported());
            }
            let k = w.to_integer().to_string().parse::<usize>().map_err(|_| unsupported())?;
            out.extend(std::iter::repeat((*dx, *dy)).take(k));
        }
        return Ok(Steps::Finite(out));
    }
    let gamma = &steps.gamma;
    let one = Laurent::one(2);
    let mut sign = Q::one();
    let mut seen = [false; 2];
    for f in &gamma.denominator {
        let base = f.base();
        let v = (0..2).find(|&i| base == &one - &Laurent::var(2, i) || base == &Laurent::var(2, i) - &one);
        match v {
            Some(i) if f.mult == 1 && !seen[i] => {
                seen[i] = true;
                if base != &one - &Laurent::var(2, i) {
                    sign = -sign;
                }
            }
            _ => return Err(unsupported()),
        }
    }
    match gamma.numerator.as_monomial() {
        Some((e, c)) if seen == [true, true] && c.clone() * sign == Q::one() => Ok(Steps::Quadrant { dx0: e[0], dy0: e[1] }),
        _ => Err(unsupported()),
    }
}

/// Keys `[k, exponents...]` filtered to one variable's position.
fn project(table: &CoefficientTable, keep: &[usize]) -> CoefficientTable {
    table
        .iter()
        .map(|(k, q)| (keep.iter().map(|&i| k[i]).collect(), q.clone()))
        .collect()
}

fn series_json(s: &TruncatedSeries) -> serde_json::Value {
    s.to_json()
}

pub fn run(kind: &WalksCmd, cfg: &Config) -> Result<Report, CliError> {
    match kind {
        WalksCmd::Slit(a) => slit(a, cfg),
        WalksCmd::Dyck(a) => {
            let n = cfg.truncate;
            let d = dyck_bounded(a.height, n)?;
            if cfg.cross_check {
                let hi = a.height.map_or(n as i64, |m| m as i64 - 1);
                let oracle = count_walks(&Steps::Finite(vec![(1, 1), (1, -1)]), Constraint::HeightBand(0, hi), n, (0, 0), None)?;
                check_diff("walk enumeration", table_diff(&series_table(&d.h)?, &project(&oracle, &[0, 2])))?;
            }
            let text = format!("H(y; t) = {}\nB(t) = {}\ntop(t) = {}", d.h, d.b, d.top);
            Ok(Report::new(
                text,
                json!({"height": a.height, "h": series_json(&d.h), "b": series_json(&d.b), "top": series_json(&d.top)}),
            ))
        }
        WalksCmd::Quarter(a) => {
            let n = cfg.truncate;
            let steps = parse_steps(a.steps.as_deref())?;
            let q = quarter_plane_symmetric(&steps, n)?;
            if cfg.cross_check {
                let oracle = count_walks(&oracle_steps(&steps)?, Constraint::Quarter, n, (1, 1), None)?;
                check_diff("walk enumeration", table_diff(&series_table(&q.q)?, &oracle))?;
            }
            let text = format!("Q(x, y; t) = {}\nH(x; t) = {}\nV(y; t) = {}\nO(t) = {}", q.q, q.h, q.v, q.o);
            Ok(Report::new(
                text,
                json!({
                    "steps": steps.gamma.display(),
                    "q": series_json(&q.q),
                    "h": series_json(&q.h),
                    "v": series_json(&q.v),
                    "o": series_json(&q.o),
                }),
            ))
        }
        WalksCmd::Catalan => {
            let n = cfg.truncate;
            let c = catalan_paths(n)?;
            if cfg.cross_check {
                let oracle = count_walks(&Steps::Finite(vec![(1, 0), (0, 1)]), Constraint::NotAboveDiagonal, n, (0, 0), None)?;
                check_diff("walk enumeration", table_diff(&series_table(&c.p)?, &oracle))?;
            }
            let text = format!("by length: {}\nB(z) = {}\np(x, y; t) = {}", c.by_length, c.b, c.p);
            Ok(Report::new(
                text,
                json!({"by_length": series_json(&c.by_length), "b": series_json(&c.b), "p": series_json(&c.p)}),
            ))
        }
    }
}

fn slit(a: &StepArgs, cfg: &Config) -> Result<Report, CliError> {
    let n = cfg.truncate;
    let steps = parse_steps(a.steps.as_deref())?;
    let s = slit_plane(&steps, n)?;
    if cfg.cross_check {
        let oracle_steps = oracle_steps(&steps)?;
        if let (Some(p), Some(sp)) = (s.p, &s.s_p0) {
            let oracle = count_walks(&oracle_steps, Constraint::Slit, n, (0, 0), Some((p, 0)))?;
            let on_point: CoefficientTable = oracle.iter().filter(|(k, _)| k[1] == p && k[2] == 0).map(|(k, q)| (vec![k[0]], q.clone())).collect();
            check_diff("walk enumeration", table_diff(&series_table(sp)?, &on_point))?;
        }
        if matches!(oracle_steps, Steps::Finite(_)) {
            let oracle = count_walks(&oracle_steps, Constraint::Slit, n, (0, 0), None)?;
            check_diff("walk enumeration", table_diff(&series_table(&s.walks)?, &oracle))?;
        }
    }
    let mut lines = Vec::new();
    match (s.p, &s.s_p0) {
        (Some(p), Some(sp)) => lines.push(format!("p = {}\nS_{{{},0}}(t) = {}", p, p, sp)),
        _ => lines.push("no walk returns to the positive x-axis within the truncation".into()),
    }
    lines.push(format!("B(x; t) = {}", s.b));
    lines.push(format!("S0(x; t) = {}", s.s0));
    Ok(Report::new(
        lines.join("\n"),
        json!({
            "steps": steps.gamma.display(),
            "p": s.p,
            "s_p0": s.s_p0.as_ref().map(series_json),
            "b": series_json(&s.b),
            "s0": series_json(&s.s0),
            "s_x": series_json(&s.s_x),
        }),
    ))
}
