use clap::{Args, ValueEnum};
use serde_json::json;

use crate::{output, tol_arg, CliError, Outcome};
use geomfree::analysis::arcsin_newton;
use geomfree::{cos_eval, sin_eval};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Sin,
    Cos,
    Arcsin,
}

impl Function {
    pub fn name(self) -> &'static str {
        match self {
            Function::Sin => "sin",
            Function::Cos => "cos",
            Function::Arcsin => "arcsin",
        }
    }
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct EvalArgs {
    pub function: Function,
    pub x: f64,
    /// Requested absolute error.
    #[arg(long, default_value_t = 1e-15, value_parser = tol_arg)]
    pub tol: f64,
}

pub fn run(a: &EvalArgs) -> Result<Outcome, CliError> {
    let v = match a.function {
        Function::Sin => sin_eval(a.x, a.tol)?,
        Function::Cos => cos_eval(a.x, a.tol)?,
        Function::Arcsin => arcsin_newton(a.x, a.tol)?,
    };
    let text = format!(
        "{} ± {}\n",
        output::value(v.value, a.tol),
        output::bound(v.abs_error_bound)
    );
    let json = json!({
        "function": a.function.name(),
        "x": a.x,
        "tol": a.tol,
        "value": v.value,
        "abs_error_bound": v.abs_error_bound,
    });
    Ok(Outcome::ok(text, json))
}
