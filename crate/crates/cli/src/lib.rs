//! Argument handling and command execution for the `ferrers` binary.
//!
//! Exit codes: 0 success, 1 numerical or check failure, 2 usage error.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ferrers_core::ferrers::{ferrers_p_value, ferrers_q_value, legendre_q};
use ferrers_core::harness::run_suite;
use ferrers_core::poly::{
    chebyshev_t, chebyshev_u, gegenbauer_c, hermite_h, jacobi_p, legendre_p, meixner_m,
};
use ferrers_core::special::{bessel_j, gauss_2f1, DEFAULT_TOL};
use ferrers_core::{Error, LegendreQArgs, Suite, SuiteConfig};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Inward offset applied to grid points on or beyond an open-interval endpoint.
pub const ENDPOINT_CLAMP: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(
    name = "ferrers",
    version,
    about = "Evaluate Ferrers functions and classical polynomials, and run identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Tabulate a function over an x grid.
    Table(TableArgs),
    /// Run a verification suite and print the JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctionName {
    #[value(name = "ferrers_p")]
    FerrersP,
    #[value(name = "ferrers_q")]
    FerrersQ,
    #[value(name = "legendre_q")]
    LegendreQ,
    #[value(name = "gegenbauer")]
    Gegenbauer,
    #[value(name = "jacobi")]
    Jacobi,
    #[value(name = "hermite")]
    Hermite,
    #[value(name = "meixner")]
    Meixner,
    #[value(name = "chebyshev_t")]
    ChebyshevT,
    #[value(name = "chebyshev_u")]
    ChebyshevU,
    #[value(name = "legendre_p")]
    LegendreP,
    #[value(name = "bessel_j")]
    BesselJ,
    #[value(name = "gauss_2f1")]
    Gauss2f1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    #[default]
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum NormalizationArg {
    #[default]
    Olver,
    Hobson,
}

/// Function parameters shared by `eval` and `table`.
#[derive(Debug, Clone, Args)]
pub struct FnParams {
    #[arg(long = "fn", value_enum)]
    pub function: FunctionName,
    #[arg(long, allow_negative_numbers = true)]
    pub nu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub mu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Hypergeometric numerator a.
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Hypergeometric numerator b.
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    /// Hypergeometric denominator, or the Meixner parameter c.
    #[arg(long, allow_negative_numbers = true)]
    pub c: Option<f64>,
    #[arg(long, value_enum, default_value_t)]
    pub normalization: NormalizationArg,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub params: FnParams,
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<f64>,
    /// Argument of legendre_q, bessel_j and gauss_2f1 (alias of --x).
    #[arg(long, allow_negative_numbers = true)]
    pub z: Option<f64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub params: FnParams,
    /// start:stop:step, inclusive of stop.
    #[arg(long = "x-grid", allow_hyphen_values = true)]
    pub x_grid: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub suite: String,
    /// Override the precision tolerance of every non-ratio check.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Reduced grids.
    #[arg(long)]
    pub smoke: bool,
}

/// Failure of a command, mapped onto the exit-code contract.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numeric(Error),
    Checks { passed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Numeric(_) | CliError::Checks { .. } => EXIT_FAILURE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Numeric(e) => write!(f, "{e}"),
            CliError::Checks { passed, total } => {
                write!(f, "{} of {total} checks failed", total - passed)
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Numeric(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Lower-case scientific notation with 16 significant digits.
pub fn format_value(v: f64) -> String {
    format!("{v:.15e}")
}

fn need<T: Copy>(v: Option<T>, flag: &str, function: FunctionName) -> CliResult<T> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for --fn {}", function.name())))
}

impl FunctionName {
    pub fn name(self) -> &'static str {
        match self {
            FunctionName::FerrersP => "ferrers_p",
            FunctionName::FerrersQ => "ferrers_q",
            FunctionName::LegendreQ => "legendre_q",
            FunctionName::Gegenbauer => "gegenbauer",
            FunctionName::Jacobi => "jacobi",
            FunctionName::Hermite => "hermite",
            FunctionName::Meixner => "meixner",
            FunctionName::ChebyshevT => "chebyshev_t",
            FunctionName::ChebyshevU => "chebyshev_u",
            FunctionName::LegendreP => "legendre_p",
            FunctionName::BesselJ => "bessel_j",
            FunctionName::Gauss2f1 => "gauss_2f1",
        }
    }

    /// Open interval of the tabulation variable, if bounded.
    fn open_domain(self) -> Option<(f64, f64)> {
        match self {
            FunctionName::FerrersP
            | FunctionName::FerrersQ
            | FunctionName::Gegenbauer
            | FunctionName::Jacobi
            | FunctionName::ChebyshevT
            | FunctionName::ChebyshevU
            | FunctionName::LegendreP => Some((-1.0, 1.0)),
            FunctionName::LegendreQ => Some((1.0, f64::INFINITY)),
            _ => None,
        }
    }
}

impl FnParams {
    /// Evaluates the selected function at `x`.
    pub fn eval(&self, x: f64) -> CliResult<f64> {
        let f = self.function;
        let v = match f {
            FunctionName::FerrersP => {
                ferrers_p_value(need(self.nu, "nu", f)?, need(self.mu, "mu", f)?, x)?
            }
            FunctionName::FerrersQ => {
                ferrers_q_value(need(self.nu, "nu", f)?, need(self.mu, "mu", f)?, x)?
            }
            FunctionName::LegendreQ => {
                let (nu, mu) = (need(self.nu, "nu", f)?, self.mu.unwrap_or(0.0));
                let args = match self.normalization {
                    NormalizationArg::Olver => LegendreQArgs::olver(nu, mu, x),
                    NormalizationArg::Hobson => LegendreQArgs::hobson(nu, mu, x),
                };
                legendre_q(args, DEFAULT_TOL)?.value
            }
            FunctionName::Gegenbauer => {
                gegenbauer_c(need(self.n, "n", f)?, need(self.lambda, "lambda", f)?, x)
            }
            FunctionName::Jacobi => jacobi_p(
                need(self.n, "n", f)?,
                need(self.alpha, "alpha", f)?,
                need(self.beta, "beta", f)?,
                x,
            )?,
            FunctionName::Hermite => hermite_h(need(self.n, "n", f)?, x),
            FunctionName::Meixner => meixner_m(
                need(self.n, "n", f)?,
                x,
                need(self.beta, "beta", f)?,
                need(self.c, "c", f)?,
            )?,
            FunctionName::ChebyshevT => chebyshev_t(need(self.n, "n", f)?, x),
            FunctionName::ChebyshevU => chebyshev_u(need(self.n, "n", f)?, x),
            FunctionName::LegendreP => legendre_p(need(self.n, "n", f)?, x),
            FunctionName::BesselJ => {
                let order = self.nu.or(self.lambda);
                bessel_j(need(order, "nu", f)?, x, DEFAULT_TOL)?.value
            }
            FunctionName::Gauss2f1 => {
                gauss_2f1(
                    need(self.a, "a", f)?,
                    need(self.b, "b", f)?,
                    need(self.c, "c", f)?,
                    x,
                    DEFAULT_TOL,
                )?
                .value
            }
        };
        Ok(v)
    }
}

/// Parsed `start:stop:step` grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid '{s}' must be start:stop:step"));
        }
        let num = |p: &str| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| format!("'{p}' is not a number in grid '{s}'"))
        };
        let g = Grid {
            start: num(parts[0])?,
            stop: num(parts[1])?,
            step: num(parts[2])?,
        };
        if !(g.start.is_finite() && g.stop.is_finite() && g.step.is_finite()) {
            return Err(format!("grid '{s}' has non-finite entries"));
        }
        if !(g.step > 0.0) || !(g.start < g.stop) {
            return Err(format!("grid '{s}' needs step > 0 and start < stop"));
        }
        Ok(g)
    }
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|i| self.start + i as f64 * self.step)
            .collect()
    }
}

fn clamp_into(x: f64, domain: Option<(f64, f64)>) -> f64 {
    match domain {
        Some((lo, _)) if x <= lo => lo + ENDPOINT_CLAMP,
        Some((_, hi)) if x >= hi => hi - ENDPOINT_CLAMP,
        _ => x,
    }
}

pub fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> CliResult<()> {
    let x = match (args.x, args.z) {
        (Some(x), None) | (None, Some(x)) => x,
        (Some(_), Some(_)) => return Err(CliError::Usage("give only one of --x and --z".into())),
        (None, None) => return Err(CliError::Usage("--x (or --z) is required".into())),
    };
    let v = args.params.eval(x)?;
    match args.format {
        Format::Json => writeln!(out, "{}", json!({ "x": x, "value": v })),
        _ => writeln!(out, "{}", format_value(v)),
    }
    .map_err(io_error)
}

pub fn cmd_table(args: &TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let grid: Grid = args.x_grid.parse().map_err(CliError::Usage)?;
    let domain = args.params.function.open_domain();
    let mut rows = Vec::new();
    for x in grid.points() {
        let xc = clamp_into(x, domain);
        if xc != x {
            writeln!(
                err,
                "warning: x = {x:?} lies outside the open domain; clamped to {xc:?}"
            )
            .map_err(io_error)?;
        }
        rows.push((xc, args.params.eval(xc)?));
    }
    let res = match args.format {
        Format::Json => {
            let arr: Vec<_> = rows
                .iter()
                .map(|&(x, v)| json!({ "x": x, "value": v }))
                .collect();
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&arr).expect("finite rows serialize")
            )
        }
        Format::Csv => {
            let mut s = String::from("x,value\n");
            for (x, v) in &rows {
                s.push_str(&format!("{x:?},{}\n", format_value(*v)));
            }
            write!(out, "{s}")
        }
        Format::Text => {
            let mut s = String::new();
            for (x, v) in &rows {
                s.push_str(&format!(
                    "{:>24} {:>24}\n",
                    format!("{x:?}"),
                    format_value(*v)
                ));
            }
            write!(out, "{s}")
        }
    };
    res.map_err(io_error)
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let suite: Suite = args
        .suite
        .parse()
        .map_err(|e: Error| CliError::Usage(e.to_string()))?;
    if let Some(t) = args.tol {
        if !(t > 0.0) {
            return Err(CliError::Usage(format!("--tol must be positive, got {t}")));
        }
    }
    let reports = run_suite(
        suite,
        &SuiteConfig {
            smoke: args.smoke,
            tol: args.tol,
        },
    );
    let passed = reports.iter().filter(|r| r.passed).count();
    let total = reports.len();
    // NaN fields of errored checks serialize as null
    let body = serde_json::to_string_pretty(&reports).expect("reports serialize");
    writeln!(out, "{body}").map_err(io_error)?;
    writeln!(err, "passed {passed}/{total}").map_err(io_error)?;
    if passed == total {
        Ok(())
    } else {
        Err(CliError::Checks { passed, total })
    }
}

fn io_error(e: std::io::Error) -> CliError {
    CliError::Usage(format!("write failed: {e}"))
}

/// Parses `argv` and runs the command, returning the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let res = match &cli.command {
        Command::Eval(a) => cmd_eval(a, out),
        Command::Table(a) => cmd_table(a, out, err),
        Command::Verify(a) => cmd_verify(a, out, err),
    };
    match res {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}
