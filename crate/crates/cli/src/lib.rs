//! Command-line front end: `eval`, `constants`, `verify`, `integrate`,
//! `bench`.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or domain
//! error. JSON is the machine interface; text is aligned for reading.

pub mod bench;
pub mod constants;
pub mod eval;
pub mod integrate;
pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "geomfree", version, about = "Trigonometry from the series of f'' + f = 0")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Also write the JSON result to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate sin, cos or arcsin with a certified error bound.
    Eval(eval::EvalArgs),
    /// Derive Q and π and print the table at multiples of Q.
    Constants(constants::ConstantsArgs),
    /// Run the exact and numeric verification suites.
    Verify(verify::VerifyArgs),
    /// Quarter-circle area, the arcsin integral, or arc length.
    Integrate(integrate::IntegrateArgs),
    /// Accuracy and speed against the platform math library.
    Bench(bench::BenchArgs),
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Kernel(geomfree::Error),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Kernel(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o: {e}"),
        }
    }
}

impl From<geomfree::Error> for CliError {
    fn from(e: geomfree::Error) -> Self {
        CliError::Kernel(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Rendered result of a subcommand.
pub struct Outcome {
    pub text: String,
    pub json: serde_json::Value,
    pub code: i32,
}

impl Outcome {
    pub fn ok(text: String, json: serde_json::Value) -> Self {
        Self {
            text,
            json,
            code: EXIT_OK,
        }
    }
}

pub fn execute(cli: &Cli, style: output::Style) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Eval(a) => eval::run(a),
        Command::Constants(a) => constants::run(a),
        Command::Verify(a) => verify::run(a, style),
        Command::Integrate(a) => integrate::run(a),
        Command::Bench(a) => bench::run(a),
    }
}

/// Parse `args` (program name first), run, print, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let style = output::Style::detect();
    match execute(&cli, style) {
        Ok(outcome) => {
            if let Some(path) = &cli.out {
                let body = serde_json::to_string_pretty(&outcome.json).expect("serializable") + "\n";
                if let Err(e) = std::fs::write(path, body) {
                    eprintln!("{}: writing {}: {e}", style.fail("error"), path.display());
                    return EXIT_USAGE;
                }
            }
            match cli.format {
                Format::Text => print!("{}", outcome.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("serializable")
                ),
            }
            outcome.code
        }
        Err(e) => {
            eprintln!("{}: {e}", style.fail("error"));
            EXIT_USAGE
        }
    }
}

pub(crate) fn tol_arg(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(format!("tolerance must be positive and finite, got {s}"))
    }
}
