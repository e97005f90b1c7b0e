//! Inverse sine two ways, the improper integrals that define it, the
//! quarter-circle area, arc length, and an RK4 cross-check of the defining ODE.
//!
//! Every integrand singular at `±1` is split at `sqrt(2)/2` and the outer part
//! rewritten with `u = sqrt(1 - t^2)`, which leaves only bounded integrands on
//! `[0, sqrt(2)/2]`.

mod arcsin;
mod ode;
mod quadrature;

pub use arcsin::{
    arc_length, arcsin_derivative_check, arcsin_newton, arcsin_quadrature, arcsin_split_halves,
    unit_circle_point, UnitCirclePoint,
};
pub use ode::{ode_oracle, OdePoint, OdeTrajectory, MAX_STEP, MAX_T_END};
pub use quadrature::{QuadratureResult, MAX_DEPTH};

use crate::error::{check_tol, Result};
use quadrature::adaptive_simpson;

/// `sqrt(2)/2` rounded to binary64. The substituted tails run up to
/// `sqrt(1 - SPLIT^2)`, one ulp below.
pub const SPLIT: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// `∫_0^1 sqrt(1 - x^2) dx` as `∫_0^s sqrt(1 - x^2) dx + ∫_0^{sqrt(1-s^2)} u^2 / sqrt(1 - u^2) du`
/// with `s` the binary64 `sqrt(2)/2`. Equals `Q/2`.
pub fn quarter_circle_area(tol: f64) -> Result<QuadratureResult> {
    check_tol(tol)?;
    let head = adaptive_simpson(arcsin::complement, 0.0, SPLIT, tol / 2.0);
    let upper = arcsin::complement(SPLIT);
    let tail = adaptive_simpson(|u| u * u / arcsin::complement(u), 0.0, upper, tol / 2.0);
    Ok(head.plus(tail))
}

/// The quarter-circle integrand `sqrt(1 - x^2)`.
pub fn quarter_circle_integrand(x: f64) -> f64 {
    arcsin::complement(x)
}
