use clap::{Args, ValueEnum};
use serde_json::json;

use crate::{tol_arg, CliError, Outcome};
use geomfree::analysis::{arc_length, arcsin_quadrature, quarter_circle_area};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// ∫_0^1 sqrt(1 - x^2) dx
    QuarterCircle,
    /// ∫_0^x dt / sqrt(1 - t^2); one argument
    Arcsin,
    /// Arc length of the upper unit semicircle over [a, b]; two arguments
    Arclength,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct IntegrateArgs {
    pub target: Target,
    pub args: Vec<f64>,
    #[arg(long, default_value_t = 1e-10, value_parser = tol_arg)]
    pub tol: f64,
}

fn arity(a: &IntegrateArgs, n: usize, what: &str) -> Result<(), CliError> {
    if a.args.len() == n {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "{what} takes {n} argument(s), got {}",
            a.args.len()
        )))
    }
}

pub fn run(a: &IntegrateArgs) -> Result<Outcome, CliError> {
    let (name, r) = match a.target {
        Target::QuarterCircle => {
            arity(a, 0, "quarter-circle")?;
            ("quarter-circle", quarter_circle_area(a.tol)?)
        }
        Target::Arcsin => {
            arity(a, 1, "arcsin")?;
            ("arcsin", arcsin_quadrature(a.args[0], a.tol)?)
        }
        Target::Arclength => {
            arity(a, 2, "arclength")?;
            ("arclength", arc_length(a.args[0], a.args[1], a.tol)?)
        }
    };
    let text = format!(
        "{}\n  est. error {:.1e}, {} evaluations\n",
        r.value, r.est_error, r.evaluations
    );
    let json = json!({
        "target": name,
        "args": a.args,
        "tol": a.tol,
        "value": r.value,
        "est_error": r.est_error,
        "evaluations": r.evaluations,
    });
    Ok(Outcome::ok(text, json))
}
