//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric
//! budget exceeded.

mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::quadrature::MIN_TOL;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Largest `--N` accepted by `telescope`.
pub const MAX_TRACE_N: u64 = 10_000_000;
/// Largest `--m` accepted by `aux`.
pub const MAX_AUX_M: u32 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CliConfig {
    pub digits: u32,
    pub tol: f64,
    pub format: Format,
    pub seed: u64,
    pub max_k: u32,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig { digits: 12, tol: 1e-8, format: Format::Text, seed: 42, max_k: 50 }
    }
}

#[derive(Debug, Parser)]
#[command(name = "betakit", version, about = "Special values of the Dirichlet beta function")]
struct Cli {
    /// Decimal places for rendered values (at most 1000).
    #[arg(long, global = true, env = "BETAKIT_DIGITS", default_value_t = 12)]
    digits: u32,

    /// Absolute tolerance for quadrature (at least 1e-13).
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for the random points of `verify`.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Guard on k (and on n through 2k+1).
    #[arg(long = "max-k", global = true, default_value_t = 50)]
    max_k: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Values of beta at odd or even integers.
    Beta {
        #[command(subcommand)]
        parity: Parity,
    },
    /// Euler number E_n or polynomial E_n(x).
    Euler {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        poly: bool,
    },
    /// Bernoulli number, polynomial, or B_{n,chi4}.
    Bernoulli {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "chi4")]
        poly: bool,
        #[arg(long)]
        chi4: bool,
    },
    /// Randomized check of the Euler and Bernoulli identities.
    Verify {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        trials: usize,
    },
    /// Partial sums of a telescoping family.
    Telescope {
        #[arg(long, value_enum)]
        family: TraceFamily,
        #[arg(long)]
        k: u32,
        #[arg(long = "N")]
        n: u64,
    },
    /// Auxiliary integrals I(k,m), J(k,m): closed form and quadrature.
    Aux {
        #[arg(long, value_enum)]
        family: AuxFamily,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
    },
}

#[derive(Debug, Subcommand)]
enum Parity {
    /// Exact beta(2k+1) as a rational multiple of pi^(2k+1).
    Odd(OddArgs),
    /// beta(2k) by quadrature, checked against the series.
    Even(EvenArgs),
}

#[derive(Debug, Args)]
struct OddArgs {
    #[arg(long)]
    k: u32,
    /// Recompute through the Euler numbers and compare.
    #[arg(long)]
    cross_check: bool,
}

#[derive(Debug, Args)]
struct EvenArgs {
    #[arg(long)]
    k: u32,
    /// Also show the value under the opposite sign convention.
    #[arg(long)]
    show_erratum: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TraceFamily {
    Istar,
    J,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AuxFamily {
    I,
    J,
}

/// Outcome of a subcommand before it is written out.
pub(crate) struct Output {
    pub body: String,
    pub code: i32,
}

impl Output {
    pub(crate) fn ok(body: String) -> Self {
        Output { body, code: EXIT_OK }
    }

    pub(crate) fn checked(body: String, passed: bool) -> Self {
        Output { body, code: if passed { EXIT_OK } else { EXIT_VERIFY } }
    }
}

fn usage(msg: String) -> Error {
    Error::InvalidArgument(msg)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget(_) => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn config(cli: &Cli) -> crate::Result<CliConfig> {
    if cli.digits == 0 || cli.digits > 1000 {
        return Err(usage(format!("--digits must be in 1..=1000, got {}", cli.digits)));
    }
    if !(cli.tol.is_finite() && cli.tol >= MIN_TOL) {
        return Err(usage(format!("--tol must be at least {MIN_TOL:e}, got {:e}", cli.tol)));
    }
    Ok(CliConfig { digits: cli.digits, tol: cli.tol, format: cli.format, seed: cli.seed, max_k: cli.max_k })
}

fn guard_k(k: u32, cfg: &CliConfig) -> crate::Result<()> {
    if k > cfg.max_k {
        return Err(usage(format!("k = {k} exceeds --max-k {}", cfg.max_k)));
    }
    Ok(())
}

fn guard_n(n: usize, cfg: &CliConfig) -> crate::Result<()> {
    let limit = 2 * cfg.max_k as usize + 1;
    if n > limit {
        return Err(usage(format!("n = {n} exceeds 2*max-k+1 = {limit}")));
    }
    Ok(())
}

fn dispatch(cmd: &Command, cfg: &CliConfig) -> crate::Result<Output> {
    match cmd {
        Command::Beta { parity: Parity::Odd(a) } => {
            guard_k(a.k, cfg)?;
            Ok(render::beta_odd(a.k, a.cross_check, cfg))
        }
        Command::Beta { parity: Parity::Even(a) } => {
            if a.k == 0 {
                return Err(usage("beta even needs k >= 1".into()));
            }
            guard_k(a.k, cfg)?;
            render::beta_even(a.k, a.show_erratum, cfg)
        }
        Command::Euler { n, poly } => {
            guard_n(*n, cfg)?;
            Ok(render::euler(*n, *poly, cfg))
        }
        Command::Bernoulli { n, poly, chi4 } => {
            guard_n(*n, cfg)?;
            render::bernoulli(*n, *poly, *chi4, cfg)
        }
        Command::Verify { nmax, trials } => {
            guard_n(*nmax, cfg)?;
            Ok(render::verify(*nmax, *trials, cfg))
        }
        Command::Telescope { family, k, n } => {
            guard_k(*k, cfg)?;
            if *n > MAX_TRACE_N {
                return Err(usage(format!("N = {n} exceeds {MAX_TRACE_N}")));
            }
            match family {
                TraceFamily::Istar => Ok(render::trace(&crate::telescope::partial_sum_i_star(*k, *n), cfg)),
                TraceFamily::J => {
                    if *k == 0 {
                        return Err(usage("the J family needs k >= 1".into()));
                    }
                    let t = crate::telescope::partial_sum_j(*k, *n, cfg.tol)?;
                    Ok(render::trace(&t, cfg))
                }
            }
        }
        Command::Aux { family, k, m } => {
            guard_k(*k, cfg)?;
            if *m > MAX_AUX_M {
                return Err(usage(format!("m = {m} exceeds {MAX_AUX_M}")));
            }
            render::aux(*family == AuxFamily::J, *k, *m, cfg)
        }
    }
}

/// Parses `argv` (program name first), runs the subcommand, and returns the
/// exit code. Results go to `out`, diagnostics to `err`.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = config(&cli).and_then(|cfg| dispatch(&cli.command, &cfg));
    match result {
        Ok(o) => {
            let _ = out.write_all(o.body.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
