//! `shalika` — exact tables, evaluations, and verification runs for the
//! spherical function in the Shalika model of GL(2n).
//!
//! Exit codes: 0 success; 1 verification check failure; 2 guard or usage
//! violation; 3 internal consistency failure (e.g. a division that must be
//! exact was not); 4 a rational-function denominator vanished at the
//! requested evaluation point.

mod render;

use clap::{Parser, Subcommand, ValueEnum};
use shalika_core::formula::{self, OmegaPath};
use shalika_core::roots::{dominant_lambdas, DominantLambda};
use shalika_core::verify::{run_suite, Suite};
use shalika_core::{arith, Error, ModelContext, Rational};

const EXIT_CHECK_FAILURE: i32 = 1;
const EXIT_GUARD: i32 = 2;
const EXIT_INTERNAL: i32 = 3;
const EXIT_DENOMINATOR: i32 = 4;

#[derive(Parser)]
#[command(
    name = "shalika",
    version,
    about = "Exact symbolic engine for the spherical Shalika function of GL(2n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Mode {
    /// Closed alternator form (always a Laurent polynomial).
    Closed,
    /// Sum over the Weyl group of Sp(2n).
    Gamma,
    /// Casselman-basis assembly from Iwahori data.
    Hecke,
}

impl Mode {
    fn path(self) -> OmegaPath {
        match self {
            Mode::Closed => OmegaPath::Closed,
            Mode::Gamma => OmegaPath::GammaSum,
            Mode::Hecke => OmegaPath::Hecke,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Mode::Closed => "closed",
            Mode::Gamma => "gamma",
            Mode::Hecke => "hecke",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate Ω(g_λ) for every dominant λ ≥ 0 with λ_1 ≤ the budget.
    Table {
        /// Rank n (the group is GL(2n)).
        #[arg(long)]
        n: usize,
        /// Largest allowed part λ_1.
        #[arg(long = "lambda-max")]
        lambda_max: i32,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Evaluate Ω(g_λ) exactly at a rational point.
    Eval {
        #[arg(long)]
        n: usize,
        /// Comma-separated integer parts, e.g. `2,1,0`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i32>,
        /// Comma-separated rational values for x_1..x_n, e.g. `2,1/3`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Vec<String>,
        /// Rational value for u = q^{-1/2}.
        #[arg(long, conflicts_with = "q")]
        u: Option<String>,
        /// Rational value for q; accepted only when q is a perfect square.
        #[arg(long)]
        q: Option<String>,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "n-max", default_value_t = 3)]
        n_max: usize,
        #[arg(long = "lambda-budget", default_value_t = 3)]
        lambda_budget: i32,
    },
}

fn main() {
    configure_threads();
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Table {
            n,
            lambda_max,
            mode,
            format,
        } => run_table(n, lambda_max, mode, format),
        Command::Eval {
            n,
            lambda,
            x,
            u,
            q,
            mode,
        } => run_eval(n, lambda, x, u, q, mode),
        Command::Verify {
            suite,
            n_max,
            lambda_budget,
        } => run_verify(&suite, n_max, lambda_budget),
    };
    std::process::exit(code);
}

/// `CS_THREADS` caps parallelism; default is machine parallelism.
fn configure_threads() {
    if let Ok(value) = std::env::var("CS_THREADS") {
        match value.parse::<usize>() {
            Ok(k) if k > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
            _ => {
                eprintln!("warning: ignoring invalid CS_THREADS={value:?}");
            }
        }
    }
}

fn guard_violation(message: &str) -> i32 {
    eprintln!("guard violation: {message}");
    EXIT_GUARD
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::RankTooLarge(..)
        | Error::NotDominant(_)
        | Error::RankMismatch(..)
        | Error::ZeroBase => EXIT_GUARD,
        Error::DenominatorVanishes => EXIT_DENOMINATOR,
        Error::NotDivisible | Error::DivisionByZeroPoly => EXIT_INTERNAL,
    }
}

fn report_error(err: &Error) -> i32 {
    eprintln!("error: {err}");
    exit_code_for(err)
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

fn run_table(n: usize, lambda_max: i32, mode: Mode, format: Format) -> i32 {
    let rank_guard = match mode {
        Mode::Hecke => formula::MAX_RANK_HECKE,
        _ => formula::MAX_RANK_TABLE,
    };
    if n == 0 || n > rank_guard {
        return guard_violation(&format!(
            "rank n = {n} outside 1..={rank_guard} for mode {}",
            mode.name()
        ));
    }
    if !(0..=6).contains(&lambda_max) {
        return guard_violation(&format!("lambda-max = {lambda_max} outside 0..=6"));
    }

    let ctx = match ModelContext::new(n) {
        Ok(ctx) => ctx,
        Err(e) => return report_error(&e),
    };
    let lambdas = dominant_lambdas(n, lambda_max);

    // Parallel across λ; collect preserves the deterministic λ order.
    use rayon::prelude::*;
    let values: Result<Vec<_>, Error> = lambdas
        .par_iter()
        .map(|lambda| formula::omega(&ctx, lambda, mode.path()))
        .collect();
    let values = match values {
        Ok(v) => v,
        Err(e) => return report_error(&e),
    };

    let records: Vec<render::TableRecord> = values
        .into_iter()
        .map(|v| render::TableRecord {
            lambda: v.lambda.parts().to_vec(),
            mode: mode.name().to_string(),
            value: v.value,
        })
        .collect();

    let rendered = match format {
        Format::Json => render::to_json(&records),
        Format::Csv => render::to_csv(&records),
        Format::Latex => Ok(render::to_latex(&records)),
    };
    match rendered {
        Ok(text) => {
            println!("{text}");
            0
        }
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_INTERNAL
        }
    }
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| format!("cannot parse rational {s:?}: {e}"))
}

fn run_eval(
    n: usize,
    lambda: Vec<i32>,
    x: Vec<String>,
    u: Option<String>,
    q: Option<String>,
    mode: Mode,
) -> i32 {
    if n == 0 || n > formula::MAX_RANK_TABLE {
        return guard_violation(&format!("rank n = {n} outside 1..=4"));
    }
    if lambda.len() != n {
        return guard_violation(&format!("lambda has {} parts, expected {n}", lambda.len()));
    }
    if x.len() != n {
        return guard_violation(&format!("x has {} values, expected {n}", x.len()));
    }
    let lambda = match DominantLambda::new(lambda) {
        Ok(l) => l,
        Err(e) => return report_error(&e),
    };
    let x_values = match x.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>() {
        Ok(v) => v,
        Err(message) => return guard_violation(&message),
    };
    let u_value = match (u, q) {
        (Some(u), None) => match parse_rational(&u) {
            Ok(v) => v,
            Err(message) => return guard_violation(&message),
        },
        (None, Some(q)) => {
            // u = q^{-1/2}; accepted only when 1/q is a perfect rational square.
            let q_value = match parse_rational(&q) {
                Ok(v) => v,
                Err(message) => return guard_violation(&message),
            };
            if q_value <= Rational::from_integer(0.into()) {
                return guard_violation("--q must be positive");
            }
            let inverse = Rational::from_integer(1.into()) / q_value;
            match arith::rational_sqrt(&inverse) {
                Some(root) => root,
                None => {
                    return guard_violation("--q is not a perfect square of a rational; pass --u instead")
                }
            }
        }
        (None, None) => return guard_violation("one of --u or --q is required"),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };

    let ctx = match ModelContext::new(n) {
        Ok(ctx) => ctx,
        Err(e) => return report_error(&e),
    };
    let value = match mode {
        Mode::Closed => formula::omega_closed(&ctx, &lambda)
            .and_then(|p| p.eval_numeric(&x_values, &u_value)),
        Mode::Gamma => formula::omega_gamma_sum(&ctx, &lambda)
            .and_then(|f| f.eval_numeric(&x_values, &u_value)),
        Mode::Hecke => formula::omega_hecke(&ctx, &lambda)
            .and_then(|f| f.eval_numeric(&x_values, &u_value)),
    };
    match value {
        Ok(v) => {
            println!("{v}");
            0
        }
        Err(e) => report_error(&e),
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn run_verify(suite: &str, n_max: usize, lambda_budget: i32) -> i32 {
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(message) => return guard_violation(&message),
    };
    if n_max == 0 || n_max > 6 {
        return guard_violation(&format!("n-max = {n_max} outside 1..=6"));
    }
    if !(0..=6).contains(&lambda_budget) {
        return guard_violation(&format!("lambda-budget = {lambda_budget} outside 0..=6"));
    }
    let report = run_suite(suite, n_max, lambda_budget);
    match serde_json::to_string_pretty(&report) {
        Ok(text) => println!("{text}"),
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INTERNAL;
        }
    }
    if report.passed {
        0
    } else {
        EXIT_CHECK_FAILURE
    }
}
