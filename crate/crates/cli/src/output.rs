//! Rendering helpers shared by the subcommands.

use std::io::IsTerminal;

/// Environment variable that turns ANSI styling off when set to anything.
pub const NO_COLOR_ENV: &str = "GEOMFREE_NO_COLOR";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Style {
    pub color: bool,
}

impl Style {
    /// Colour only on a terminal and only without [`NO_COLOR_ENV`].
    pub fn detect() -> Self {
        Self {
            color: std::env::var_os(NO_COLOR_ENV).is_none() && std::io::stdout().is_terminal(),
        }
    }

    pub fn plain() -> Self {
        Self { color: false }
    }

    fn paint(self, text: &str, code: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    pub fn pass(self, text: &str) -> String {
        self.paint(text, "32")
    }

    pub fn fail(self, text: &str) -> String {
        self.paint(text, "31")
    }

    pub fn bold(self, text: &str) -> String {
        self.paint(text, "1")
    }
}

/// Round a non-negative bound up to one significant digit: `3.2e-13` prints
/// as `4e-13`, zero as `0e0`.
pub fn bound(b: f64) -> String {
    if b == 0.0 {
        return "0e0".into();
    }
    if !b.is_finite() {
        return b.to_string();
    }
    let mut exp = b.log10().floor() as i32;
    let mut mantissa = (b / 10f64.powi(exp)).ceil();
    if mantissa >= 10.0 {
        mantissa = 1.0;
        exp += 1;
    }
    // The division can land just under an integer.
    if mantissa * 10f64.powi(exp) < b {
        mantissa += 1.0;
    }
    format!("{}e{}", mantissa as u32, exp)
}

/// Shortest round-trip form for tolerances at binary64 resolution, otherwise
/// rounded to the decimals the tolerance resolves, trailing zeros removed.
pub fn value(v: f64, tol: f64) -> String {
    if tol <= 1e-15 || !v.is_finite() {
        return v.to_string();
    }
    let decimals = (-tol.log10()).ceil().clamp(0.0, 17.0) as usize;
    let s = format!("{v:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}
