use clap::Args;
use serde_json::json;

use crate::{tol_arg, CliError, Outcome};
use geomfree::constants::{find_q, q_multiples_table, table, DEFAULT_TOL};

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    /// Decimal places shown for Q and π, 1 to 15.
    #[arg(long, default_value_t = 15)]
    pub digits: u32,
    /// Bisection tolerance for Q.
    #[arg(long, default_value_t = DEFAULT_TOL, value_parser = tol_arg)]
    pub tol: f64,
}

pub fn run(a: &ConstantsArgs) -> Result<Outcome, CliError> {
    if !(1..=15).contains(&a.digits) {
        return Err(CliError::Usage(format!("--digits must lie in 1..=15, got {}", a.digits)));
    }
    let owned;
    let t = if a.tol == DEFAULT_TOL {
        table()
    } else {
        owned = find_q(a.tol)?;
        &owned
    };
    let d = a.digits as usize;
    let rows = q_multiples_table();
    let mut text = format!(
        "Q              = {:.d$}\n\
         π = 2Q         = {:.d$}\n\
         bracket radius = {:.3e}\n\
         bracket        = [{:?}, {:?}]\n\
         iterations     = {}\n\n\
         k   sin kQ   cos kQ\n",
        t.q, t.pi, t.certified_bound, t.bracket.0, t.bracket.1, t.iterations
    );
    for r in &rows {
        text += &format!("{:<3} {:>6}   {:>6}\n", r.k, r.sin, r.cos);
    }
    let json = json!({
        "q": t.q,
        "q_lo": t.q_lo,
        "pi": t.pi,
        "digits": a.digits,
        "q_text": format!("{:.d$}", t.q),
        "pi_text": format!("{:.d$}", t.pi),
        "certified_bound": t.certified_bound,
        "bracket": [t.bracket.0, t.bracket.1],
        "iterations": t.iterations,
        "q_multiples": rows,
    });
    Ok(Outcome::ok(text, json))
}
