//! Command-line front end: `denest`, `factor-sextic` and `solve-cubic`.
//!
//! Exit codes: 0 when a result was computed (a "not denestable" verdict
//! included), 2 for malformed input or usage, 3 when the input is well formed
//! but outside an operation's domain, 1 if an internal self-check fails.

pub mod expr;
pub mod surd;

use std::io::Write;

use clap::{Parser, Subcommand};
use denest_core::{classify_sextic, denest, parse_rational, rational_cube_root, solve_cubic, Error as CoreError, Rational};

pub use expr::{parse_expression, ParseError, RadicalExpr};
pub use surd::{normalize_to_surd, CubeRadicand, ShapeError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "denest", version, about = "Exact denesting of cubic radicals over the rationals")]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Denest cbrt(a + b*sqrt(p)) into A + B*sqrt(p) when possible.
    ///
    /// Grammar: numbers are integers or fractions n/d; `+`, `-`, `*`,
    /// parentheses, sqrt(...) and cbrt(...). Unary minus applies to the next
    /// factor only, so -5*sqrt(2) means (-5)*sqrt(2).
    Denest {
        /// For example "cbrt(7+5*sqrt(2))".
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Factor x^6 + c*x^3 + d into primes over the rationals.
    FactorSextic {
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        c: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        d: Rational,
    },
    /// Solve a3*x^3 + a2*x^2 + a1*x + a0 = 0.
    SolveCubic {
        #[arg(allow_hyphen_values = true, value_parser = rational_arg)]
        a3: Rational,
        #[arg(allow_hyphen_values = true, value_parser = rational_arg)]
        a2: Rational,
        #[arg(allow_hyphen_values = true, value_parser = rational_arg)]
        a1: Rational,
        #[arg(allow_hyphen_values = true, value_parser = rational_arg)]
        a0: Rational,
        /// Bits of precision for irrational roots (at least 64).
        #[arg(long, default_value_t = 128)]
        precision: u32,
    },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Failure of a single command, mapped to an exit code.
#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Shape(ShapeError),
    #[error("{0}")]
    Core(#[from] CoreError),
}

impl From<ShapeError> for Failure {
    fn from(e: ShapeError) -> Self {
        match e {
            ShapeError::Core(c) => Failure::Core(c),
            other => Failure::Shape(other),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Parse(_) | Failure::Shape(_) => EXIT_USAGE,
            Failure::Core(e) if e.is_precondition() => EXIT_PRECONDITION,
            Failure::Core(_) => EXIT_INTERNAL,
        }
    }
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.exit_code()
        }
    }
}

fn emit(out: &mut dyn Write, json: bool, value: serde_json::Value, text: &str) {
    let _ = if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"))
    } else {
        writeln!(out, "{text}")
    };
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Denest { expr } => {
            let tree = parse_expression(expr)?;
            match normalize_to_surd(&tree)? {
                CubeRadicand::Surd { a, b, p } => {
                    let verdict = denest(a, b, Rational::from_integer(p))?;
                    emit(out, cli.json, verdict.to_json(), &verdict.to_string());
                }
                CubeRadicand::Rational(a) => {
                    let _ = writeln!(err, "note: the radicand {a} is rational; taking its cube root directly");
                    let root = rational_cube_root(&a);
                    let text = match &root {
                        Some(t) => t.to_string(),
                        None => format!("not denestable: {a} is not a rational cube"),
                    };
                    let value = serde_json::json!({
                        "denestable": root.is_some(),
                        "A": root.as_ref().map(|t| t.to_string()),
                        "B": root.as_ref().map(|_| "0"),
                        "p": null,
                        "N": null,
                        "r": null,
                        "min_poly": null,
                        "reason": if root.is_some() { None } else { Some(format!("{a} is not a rational cube")) },
                    });
                    emit(out, cli.json, value, &text);
                }
            }
        }
        Command::FactorSextic { c, d } => {
            let f = classify_sextic(c, d)?;
            emit(out, cli.json, f.to_json(), &f.to_string());
        }
        Command::SolveCubic { a3, a2, a1, a0, precision } => {
            let roots = solve_cubic(a3, a2, a1, a0, *precision)?;
            emit(out, cli.json, roots.to_json(), roots.to_text().trim_end());
        }
    }
    Ok(())
}
