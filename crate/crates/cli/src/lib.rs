//! The `omegact` command line: an expression parser for rational functions
//! and subcommands for constant terms, Diophantine counting, partial
//! fractions, Dedekind sums, lattice walks, Hadamard products and the
//! brute-force oracles.

pub mod args;
pub mod expr;
pub mod lower;
mod misc;
mod omega;
mod oracle_cmd;
mod pfd;
mod util;
mod walks;

use args::{Cli, Command};
use clap::Parser;
use omega_engine::DiophantineSystem;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::Path;
use thiserror::Error;

pub use expr::{parse_expression, Expr, ParseError};
pub use lower::{lower, Factored};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    /// Bad input on the command line or in an input file (exit code 2).
    #[error("{0}")]
    Usage(String),
    /// The computation itself failed (exit code 1).
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

macro_rules! domain_errors {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain(e.to_string())
            }
        }
    )*};
}

domain_errors!(
    omega_engine::OmegaError,
    series_lab::SeriesError,
    ppfraction::PfdError,
    dedekind::DedekindError,
    laurent_order::OrderError,
    exact_algebra::AlgebraError,
    oracle::OracleError
);

/// What a subcommand produced, in every output format.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub latex: Option<String>,
}

impl Report {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
            latex: None,
        }
    }
}

/// Settings shared by every subcommand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub truncate: usize,
    pub cross_check: bool,
}

pub fn run(command: &Command, cfg: &Config) -> Result<Report, CliError> {
    match command {
        Command::Omega { op } => omega::run(op, cfg),
        Command::Count(a) => misc::count(a, cfg),
        Command::Pfd(a) => pfd::run(a, cfg),
        Command::Dedekind(a) => misc::dedekind(a, cfg),
        Command::Walks { kind } => walks::run(kind, cfg),
        Command::Hadamard(a) => misc::hadamard(a, cfg),
        Command::Oracle { op } => oracle_cmd::run(op, cfg),
    }
}

/// Reads a system `A alpha + b = 0`: one matrix row per line as whitespace
/// separated integers, an optional `b:` line, `#` starting a comment.
pub fn parse_system(text: &str) -> Result<DiophantineSystem, CliError> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut shift: Option<Vec<i64>> = None;
    let ints = |s: &str, line: usize| -> Result<Vec<i64>, CliError> {
        s.split_whitespace()
            .map(|w| {
                w.parse::<i64>()
                    .map_err(|_| CliError::Usage(format!("line {}: '{}' is not an integer", line, w)))
            })
            .collect()
    };
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("b:") {
            if shift.is_some() {
                return Err(CliError::Usage(format!("line {}: second b: line", i + 1)));
            }
            shift = Some(ints(rest, i + 1)?);
        } else {
            rows.push(ints(line, i + 1)?);
        }
    }
    let ncols = rows.first().map(|r| r.len()).ok_or_else(|| CliError::Usage("the system has no rows".into()))?;
    let shift = shift.unwrap_or_else(|| vec![0; rows.len()]);
    DiophantineSystem::new(rows, ncols, shift, false).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn read_system(path: &Path) -> Result<DiophantineSystem, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {}", path.display(), e)))?;
    parse_system(&text)
}

/// Splits a batch line into arguments; double quotes group words.
fn split_line(line: &str) -> Result<Vec<String>, CliError> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut any = false;
    for c in line.chars() {
        match c {
            '"' => {
                quoted = !quoted;
                any = true;
            }
            c if c.is_whitespace() && !quoted => {
                if any {
                    out.push(std::mem::take(&mut cur));
                    any = false;
                }
            }
            c => {
                cur.push(c);
                any = true;
            }
        }
    }
    if quoted {
        return Err(CliError::Usage(format!("unbalanced quote in batch line: {}", line)));
    }
    if any {
        out.push(cur);
    }
    Ok(out)
}

fn render(report: &Report, json: bool, latex: bool) -> String {
    if json {
        serde_json::to_string_pretty(&report.json).expect("serializable")
    } else if latex {
        report.latex.clone().unwrap_or_else(|| report.text.clone())
    } else {
        report.text.clone()
    }
}

/// One batch line: `(output, exit code)`.
fn run_batch_line(line: &str, base: &Cli) -> (String, Value, i32) {
    let words = match split_line(line) {
        Ok(w) => w,
        Err(e) => return (format!("error: {}", e), json!({"command": line, "error": e.to_string()}), 2),
    };
    let argv = std::iter::once("omegact".to_string()).chain(words);
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let msg = e.to_string();
            return (msg.clone(), json!({"command": line, "error": msg}), 2);
        }
    };
    let Some(command) = cli.command.as_ref() else {
        return ("error: no subcommand".into(), json!({"command": line, "error": "no subcommand"}), 2);
    };
    let cfg = Config {
        truncate: cli.truncate.or(base.truncate).unwrap_or(series_lab::DEFAULT_ORDER),
        cross_check: cli.cross_check || base.cross_check,
    };
    match run(command, &cfg) {
        Ok(r) => {
            let text = render(&r, false, cli.latex || base.latex);
            (text, json!({"command": line, "result": r.json}), 0)
        }
        Err(e) => (format!("error: {}", e), json!({"command": line, "error": e.to_string()}), e.exit_code()),
    }
}

fn run_batch(path: &Path, cli: &Cli) -> (String, i32) {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return (format!("error: {}: {}", path.display(), e), 2),
    };
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    // every engine is pure, so the lines run concurrently; output keeps file order
    let results: Vec<(String, Value, i32)> = std::thread::scope(|s| {
        let handles: Vec<_> = lines.iter().map(|l| s.spawn(|| run_batch_line(l, cli))).collect();
        handles.into_iter().map(|h| h.join().expect("batch worker panicked")).collect()
    });
    let code = results.iter().map(|r| r.2).max().unwrap_or(0);
    let out = if cli.json {
        serde_json::to_string_pretty(&Value::Array(results.into_iter().map(|r| r.1).collect())).expect("serializable")
    } else {
        lines
            .iter()
            .zip(results)
            .map(|(l, r)| format!("> {}\n{}", l, r.0))
            .collect::<Vec<_>>()
            .join("\n")
    };
    (out, code)
}

fn emit(out: &str, to: Option<&Path>) -> Result<(), CliError> {
    match to {
        Some(p) => std::fs::write(p, format!("{}\n", out)).map_err(|e| CliError::Usage(format!("{}: {}", p.display(), e))),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{}", out) {
                // a closed pipe (e.g. `| head`) just ends the output
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    Err(CliError::Domain(format!("writing output: {}", e)))
                }
                _ => Ok(()),
            }
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    if cli.batch.is_some() && cli.command.is_some() {
        eprintln!("error: --batch cannot be combined with a subcommand");
        return 2;
    }
    let (out, code) = if let Some(batch) = &cli.batch {
        run_batch(batch, &cli)
    } else if let Some(command) = &cli.command {
        let cfg = Config {
            truncate: cli.truncate.unwrap_or(series_lab::DEFAULT_ORDER),
            cross_check: cli.cross_check,
        };
        match run(command, &cfg) {
            Ok(r) => (render(&r, cli.json, cli.latex), 0),
            Err(e) => {
                eprintln!("error: {}", e);
                return e.exit_code();
            }
        }
    } else {
        eprintln!("error: a subcommand or --batch FILE is required (see --help)");
        return 2;
    };
    if let Err(e) = emit(&out, cli.out.as_deref()) {
        eprintln!("error: {}", e);
        return e.exit_code();
    }
    code
}
