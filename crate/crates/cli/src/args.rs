use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "omegact",
    version,
    about = "Constant terms, MacMahon's Omega, partial fractions, Dedekind sums and lattice walks, all in exact arithmetic"
)]
pub struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print a plain LaTeX rendering where one exists.
    #[arg(long, global = true)]
    pub latex: bool,
    /// Truncation order for series and degree bounds for coefficient checks.
    #[arg(long, global = true, env = "OMEGACT_TRUNCATE", value_name = "N")]
    pub truncate: Option<usize>,
    /// Compare against the matching brute-force oracle and fail on any difference.
    #[arg(long, global = true)]
    pub cross_check: bool,
    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Run one command line per line of FILE.
    #[arg(long, value_name = "FILE")]
    pub batch: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Constant terms and Omega>= of Elliott-rational functions.
    Omega {
        #[command(subcommand)]
        op: OmegaOp,
    },
    /// E(x) and Ebar(x) for a system A alpha + b = 0, with the reciprocity report.
    Count(CountArgs),
    /// Partial fractions of a univariate rational function.
    Pfd(PfdArgs),
    /// Higher-dimensional Dedekind sums d(n; a1..am) and the reciprocity law.
    Dedekind(DedekindArgs),
    /// Lattice walk generating functions.
    Walks {
        #[command(subcommand)]
        kind: WalksCmd,
    },
    /// Hadamard product of two rational power series in one variable.
    Hadamard(HadamardArgs),
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        op: OracleCmd,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum OmegaOp {
    /// Constant term in the eliminated variables.
    Ct(OmegaArgs),
    /// Sum of the coefficients of nonnegative powers of the eliminated variables.
    Geq(OmegaArgs),
}

#[derive(Args, Debug, Clone)]
pub struct OmegaArgs {
    /// Rational function with binomial denominator factors, e.g. "1/((1-l^2*x)*(1-y*l^-3))".
    #[arg(required_unless_present = "system", conflicts_with = "system")]
    pub expr: Option<String>,
    /// Matrix file of a system A alpha + b; eliminates l1..lr from its crude generating function.
    #[arg(long, value_name = "FILE")]
    pub system: Option<PathBuf>,
    /// Variable order, lowest priority first (default: order of appearance).
    #[arg(long, value_delimiter = ',')]
    pub vars: Vec<String>,
    /// Weight matrix rho, rows separated by ';' and entries by ','.
    #[arg(long)]
    pub rho: Option<String>,
    /// Variables to eliminate.
    #[arg(long, value_delimiter = ',')]
    pub eliminate: Vec<String>,
    /// Order in which to eliminate (a permutation of the eliminated variables).
    #[arg(long, value_delimiter = ',')]
    pub elim_order: Vec<String>,
}

#[derive(Args, Debug, Clone)]
pub struct CountArgs {
    /// Matrix file: one row per line, optional "b:" line.
    pub system: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct PfdArgs {
    /// Rational function in one variable, e.g. "t/((t+1)^2*(t-1)^3*(t-2)^5)".
    pub expr: String,
    /// The variable (default: the one in the expression, else t).
    #[arg(long)]
    pub var: Option<String>,
    /// Only the fractional part at the power of the variable dividing the denominator.
    #[arg(long, conflicts_with = "prime")]
    pub at_origin: bool,
    /// Only the block at one root a of this irreducible factor, over Q[a]/(p).
    #[arg(long, value_name = "POLY")]
    pub prime: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct DedekindArgs {
    /// Check the reciprocity law for the pairwise coprime VALUES.
    #[arg(long)]
    pub reciprocity: bool,
    /// n a1 .. am (or a0 .. am with --reciprocity).
    #[arg(required = true)]
    pub values: Vec<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct HadamardArgs {
    pub f: String,
    pub g: String,
    #[arg(long)]
    pub var: Option<String>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum WalksCmd {
    /// Walks avoiding the half line {(-k, 0) : k >= 0}.
    Slit(StepArgs),
    /// Paths with steps up and down between heights 0 and m - 1.
    Dyck(DyckArgs),
    /// Walks from (1, 1) in the open quarter plane, step set symmetric in y.
    Quarter(StepArgs),
    /// Paths with east and north steps never above the diagonal.
    Catalan,
}

#[derive(Args, Debug, Clone)]
pub struct StepArgs {
    /// Step weight gamma in x and y (default: x+1/x+y+1/y).
    #[arg(long)]
    pub steps: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct DyckArgs {
    /// The band 0 <= y <= m - 1 (no upper bound when absent).
    #[arg(long)]
    pub height: Option<u32>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum OracleCmd {
    /// Enumerate solutions of a system up to total degree --truncate.
    Solutions {
        system: PathBuf,
        /// Positive integer solutions only.
        #[arg(long)]
        strict: bool,
    },
    /// Count walks by length and endpoint.
    Walks {
        /// Step weight in x and y: a polynomial with positive integer coefficients,
        /// or x^a*y^b/((1-x)*(1-y)).
        #[arg(long)]
        steps: Option<String>,
        /// none, slit, diagonal, band:LO:HI or quarter.
        #[arg(long, default_value = "none")]
        constraint: String,
        #[arg(long, value_delimiter = ',', default_value = "0,0")]
        start: Vec<i64>,
        /// Only report endpoints with x <= X and y <= Y.
        #[arg(long, value_delimiter = ',', value_name = "X,Y")]
        window: Vec<i64>,
    },
    /// Constant term by truncated geometric expansion.
    Ct {
        expr: String,
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        eliminate: Vec<String>,
        /// Terms kept from each geometric series (default: 2 * truncate + 2).
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Floating-point Dedekind sum.
    Dedekind {
        n: u64,
        a: Vec<u64>,
    },
    /// Check a summation identity by direct summation.
    Binomial {
        /// binomial-ct, power-of-two, half-power-of-two, fibonacci, saalschutz, super-catalan or all.
        identity: String,
        #[arg(long, default_value_t = 4)]
        max: i64,
    },
    /// Constant term of prod_{i != j} (1 - z_i/z_j)^{a_j}.
    Dyson {
        #[arg(required = true)]
        a: Vec<u32>,
    },
}
