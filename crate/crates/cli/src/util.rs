use crate::expr::parse_expression;
use crate::lower::{lower, Factored};
use crate::CliError;
use laurent_order::VariableOrder;
use oracle::CoefficientTable;
use serde_json::{json, Value};
use std::collections::BTreeSet;

/// Parses `text` and lowers it over `vars`, or over its own identifiers in
/// order of appearance when `vars` is empty.
pub fn parse_over(text: &str, vars: &[String]) -> Result<(Factored, Vec<String>), CliError> {
    let e = parse_expression(text)?;
    let vars = if vars.is_empty() { e.variables() } else { vars.to_vec() };
    Ok((lower(&e, &vars)?, vars))
}

/// `"1,0;0,1"` as a matrix.
pub fn parse_rho(text: &str) -> Result<Vec<Vec<i64>>, CliError> {
    text.split(';')
        .map(|row| {
            row.split(',')
                .map(|w| {
                    w.trim()
                        .parse::<i64>()
                        .map_err(|_| CliError::Usage(format!("rho entry '{}' is not an integer", w.trim())))
                })
                .collect()
        })
        .collect()
}

pub fn order_from(vars: &[String], rho: Option<&str>) -> Result<VariableOrder, CliError> {
    let usage = |e: laurent_order::OrderError| CliError::Usage(e.to_string());
    match rho {
        None => VariableOrder::new(vars).map_err(usage),
        Some(r) => VariableOrder::with_rho(vars, parse_rho(r)?).map_err(usage),
    }
}

pub fn table_text(t: &CoefficientTable) -> String {
    if t.is_empty() {
        return "(no nonzero coefficients)".into();
    }
    t.iter()
        .map(|(k, v)| format!("{:?} {}", k, v))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn table_json(t: &CoefficientTable) -> Value {
    Value::Array(t.iter().map(|(k, v)| json!({"key": k, "value": v.to_string()})).collect())
}

/// Keys where the two tables differ, rendered for an error message.
pub fn table_diff(ours: &CoefficientTable, oracle: &CoefficientTable) -> Vec<String> {
    let keys: BTreeSet<&Vec<i64>> = ours.iter().map(|(k, _)| k).chain(oracle.iter().map(|(k, _)| k)).collect();
    keys.into_iter()
        .filter(|k| ours.get(k) != oracle.get(k))
        .map(|k| format!("{:?}: computed {}, oracle {}", k, ours.get(k), oracle.get(k)))
        .collect()
}

/// Turns a nonempty diff into the cross-check failure.
pub fn check_diff(what: &str, diff: Vec<String>) -> Result<(), CliError> {
    if diff.is_empty() {
        return Ok(());
    }
    let shown: Vec<String> = diff.iter().take(20).cloned().collect();
    let more = if diff.len() > 20 { format!("\n... and {} more", diff.len() - 20) } else { String::new() };
    Err(CliError::Domain(format!(
        "cross-check against the {} oracle failed:\n{}{}",
        what,
        shown.join("\n"),
        more
    )))
}

/// The one variable of a univariate command: `--var`, else the single
/// identifier in the inputs, else `t`.
pub fn single_variable(texts: &[&str], var: Option<&str>) -> Result<String, CliError> {
    if let Some(v) = var {
        return Ok(v.to_string());
    }
    let mut seen: Vec<String> = Vec::new();
    for t in texts {
        for v in parse_expression(t)?.variables() {
            if !seen.contains(&v) {
                seen.push(v);
            }
        }
    }
    match seen.len() {
        0 => Ok("t".into()),
        1 => Ok(seen.remove(0)),
        _ => Err(CliError::Usage(format!(
            "expected a function of one variable, found {}",
            seen.join(",")
        ))),
    }
}

/// The coefficients of a series with polynomial coefficients, keyed by
/// `[power of the series variable, exponents...]`.
pub fn series_table(s: &series_lab::TruncatedSeries) -> Result<CoefficientTable, CliError> {
    let mut table = CoefficientTable::new();
    for k in 0..=s.order {
        let c = s.coeff(k);
        if !c.is_polynomial() {
            return Err(CliError::Domain(format!(
                "coefficient of t^{} is not a polynomial, so it has no walk counts: {}",
                k,
                c.display()
            )));
        }
        for (e, q) in c.numerator.terms() {
            let mut key = vec![k as i64];
            key.extend(e);
            table.add(key, q.clone());
        }
    }
    Ok(table)
}
