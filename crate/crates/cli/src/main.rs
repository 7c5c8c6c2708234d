//! `tt` — tangent-circle triangle toolkit.
//!
//! Subcommands expose generation, classification, exact lengths,
//! enumeration, diophantine search, oracle verification, and SVG figure
//! emission. Exit codes are a stable contract: 0 success, 1 invalid
//! input or I/O failure, 2 verification failure.

mod render;
mod svg;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use tangent_triangles::generator::{enumerate_configs, generate};
use tangent_triangles::integrality::classify;
use tangent_triangles::lengths::{compute_lengths, RadiiPair};
use tangent_triangles::oracle::{check_angles, cross_check, Scene, DEFAULT_TOL};
use tangent_triangles::triples::TripleParams;
use tangent_triangles::{diophantine, Error, Int, Rational};

#[derive(Parser)]
#[command(
    name = "tt",
    version,
    about = "Pythagorean triangles of two externally tangent circles",
    after_help = "Exit codes: 0 success, 1 invalid input or I/O failure, 2 verification failure."
)]
struct Cli {
    /// Output format; the TT_FORMAT environment variable overrides the default
    #[arg(long, global = true, value_enum, env = "TT_FORMAT", default_value_t = Format::Human)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Equation {
    /// x^4 + 14x^2y^2 + y^4 = z^2 (expected: no solutions)
    #[value(name = "plus14")]
    Plus14,
    /// x^4 - x^2y^2 + y^4 = z^2 (expected: only x = y = z = 1)
    #[value(name = "minus")]
    Minus,
}

#[derive(Subcommand)]
enum Command {
    /// Build the fully integral configuration for generator pair (m, n) and scale t
    Generate {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// Classify integer radii by which of the sixteen lengths are integers
    Classify {
        #[arg(long)]
        r1: String,
        #[arg(long)]
        r2: String,
    },
    /// Exact surd lengths for rational radii R1 > R2 > 0 (accepts "p/q")
    Lengths {
        #[arg(long)]
        r1: String,
        #[arg(long)]
        r2: String,
    },
    /// Enumerate every fully integral configuration with R1 <= max-r1
    Enumerate {
        #[arg(long = "max-r1")]
        max_r1: u64,
    },
    /// Exhaustive search of a quartic diophantine equation up to a bound
    Search {
        #[arg(long, value_enum)]
        equation: Equation,
        #[arg(long)]
        bound: u32,
        /// Drop the opposite-parity filter on the plus14 equation
        #[arg(long)]
        allow_both_odd: bool,
    },
    /// Cross-check the exact engine against the coordinate oracle
    Verify {
        #[arg(long)]
        r1: String,
        #[arg(long)]
        r2: String,
        /// Relative tolerance for the oracle comparison
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Write an SVG drawing of the configuration for (m, n, t)
    Figure {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        t: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::VerificationFailure(_) => 2,
            _ => 1,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError {
            code: 1,
            message: err.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> CliError {
    CliError {
        code: 1,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    // die quietly on closed pipes (e.g. `tt enumerate ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help/version are successes; anything else is invalid input
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = err.print();
                    ExitCode::SUCCESS
                }
                _ => {
                    let _ = err.print();
                    ExitCode::from(1)
                }
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn parse_rational(text: &str, flag: &str) -> Result<Rational, CliError> {
    Rational::from_str(text.trim())
        .map_err(|_| invalid(format!("--{flag}: expected an integer or p/q rational, got {text:?}")))
}

fn parse_integer(text: &str, flag: &str) -> Result<Int, CliError> {
    Int::from_str(text.trim())
        .map_err(|_| invalid(format!("--{flag}: expected an integer, got {text:?}")))
}

fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    match cli.command {
        Command::Generate { m, n, t } => {
            let params = TripleParams::new(Int::from(m), Int::from(n))?;
            let config = generate(&params, &Int::from(t))?;
            render::generate(&config, format)
        }
        Command::Classify { r1, r2 } => {
            let r1 = parse_integer(&r1, "r1")?;
            let r2 = parse_integer(&r2, "r2")?;
            let report = classify(&r1, &r2)?;
            render::classify(&report, format)
        }
        Command::Lengths { r1, r2 } => {
            let radii = RadiiPair::new(parse_rational(&r1, "r1")?, parse_rational(&r2, "r2")?)?;
            let lengths = compute_lengths(&radii);
            render::lengths(&lengths, format)
        }
        Command::Enumerate { max_r1 } => {
            let configs = enumerate_configs(&Int::from(max_r1));
            render::enumerate(&configs, max_r1, format)
        }
        Command::Search {
            equation,
            bound,
            allow_both_odd,
        } => {
            let bound = i128::from(bound);
            let hits = match (equation, allow_both_odd) {
                (Equation::Plus14, false) => diophantine::search_plus14(&bound),
                (Equation::Plus14, true) => diophantine::search_plus14_any_parity(&bound),
                (Equation::Minus, _) => diophantine::search_minus_mixed(&bound),
            };
            render::search(&hits, bound, format)
        }
        Command::Verify { r1, r2, tol } => {
            let radii = RadiiPair::new(parse_rational(&r1, "r1")?, parse_rational(&r2, "r2")?)?;
            let cross = cross_check(&radii, tol)?;
            let scene = Scene::from_radii(&radii)?;
            let angles = check_angles(&scene, tol)?;
            render::verify(&radii, &cross, &angles, tol, format)
        }
        Command::Figure { m, n, t, out } => {
            let params = TripleParams::new(Int::from(m), Int::from(n))?;
            let config = generate(&params, &Int::from(t))?;
            let scene = Scene::from_radii(&config.radii())?;
            let document = svg::figure(&scene, &svg::annotations(&config));
            std::fs::write(&out, document)?;
            println!("wrote {}", out.display());
            Ok(())
        }
    }
}
