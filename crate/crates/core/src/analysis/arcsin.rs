use serde::{Deserialize, Serialize};

use super::quadrature::{adaptive_simpson, QuadratureResult};
use super::SPLIT;
use crate::constants;
use crate::dd::U;
use crate::error::{check_tol, Error, Result};
use crate::series_kernel::{cos_eval, sin_eval, CertifiedValue};

const MAX_NEWTON_STEPS: usize = 60;
/// Lower bound for `cos y` on `[0, SPLIT + 0.015]`.
const MIN_COS: f64 = 0.69;
const KERNEL_TOL: f64 = 1e-15;

pub(crate) fn check_unit(x: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain(format!("argument {x} outside [-1, 1]")))
    }
}

/// `sqrt(1 - x^2)`, with the factored form keeping relative error near 2 ulp.
pub(crate) fn complement(x: f64) -> f64 {
    ((1.0 - x) * (1.0 + x)).sqrt()
}

/// Newton on `sin y = x` for `0 <= x <= SPLIT`; returns `(y, |y - arcsin x| bound)`.
fn newton_core(x: f64) -> Result<(f64, f64)> {
    if x == 0.0 {
        return Ok((0.0, 0.0));
    }
    let mut y = x;
    let mut residual = sin_eval(y, KERNEL_TOL)?;
    for _ in 0..MAX_NEWTON_STEPS {
        let c = cos_eval(y, KERNEL_TOL)?;
        let next = y - (residual.value - x) / c.value;
        if next == y {
            break;
        }
        let step = (next - y).abs();
        y = next;
        residual = sin_eval(y, KERNEL_TOL)?;
        if step <= 4.0 * U * y {
            // One more pass can only move by a rounding; keep the better residual.
            let c = cos_eval(y, KERNEL_TOL)?;
            let last = y - (residual.value - x) / c.value;
            let r = sin_eval(last, KERNEL_TOL)?;
            if (r.value - x).abs() < (residual.value - x).abs() {
                y = last;
                residual = r;
            }
            break;
        }
    }
    // Mean value theorem: |y - y*| <= |sin y - x| / min cos on the segment.
    let bound = ((residual.value - x).abs() + residual.abs_error_bound) / MIN_COS;
    Ok((y, bound * (1.0 + 4.0 * f64::EPSILON)))
}

/// Inverse sine by Newton's method on the series sine, reflected through the
/// cofunction rule `arcsin x = Q - arcsin sqrt(1 - x^2)` beyond `sqrt(2)/2`.
pub fn arcsin_newton(x: f64, tol: f64) -> Result<CertifiedValue> {
    check_tol(tol)?;
    check_unit(x)?;
    let a = x.abs();
    let (value, bound) = if a <= SPLIT {
        newton_core(a)?
    } else {
        let table = constants::table();
        let t = complement(a);
        let (yt, bt) = newton_core(t)?;
        // arcsin' <= sqrt(2) on [0, SPLIT]; t carries about 2.1 ulp.
        let t_err = std::f64::consts::SQRT_2 * 2.1 * U * t;
        let value = (table.q - yt) + table.q_lo;
        let bound = bt + t_err + table.q_dd_error + 2.0 * U * value.abs();
        (value, bound * (1.0 + 4.0 * f64::EPSILON))
    };
    if bound > tol {
        return Err(Error::ToleranceTooTight {
            tol,
            budget: MAX_NEWTON_STEPS,
        });
    }
    let value = if x.is_sign_negative() { -value } else { value };
    Ok(CertifiedValue::new(value, bound))
}

fn integrand(t: f64) -> f64 {
    1.0 / complement(t)
}

/// `arcsin x = ∫_0^x dt / sqrt(1 - t^2)`. Beyond `sqrt(2)/2` the tail is
/// rewritten with `u = sqrt(1 - t^2)` as `∫_{sqrt(1-x^2)}^{sqrt(1-s^2)} du / sqrt(1 - u^2)`,
/// whose integrand is bounded by `sqrt(2)`.
pub fn arcsin_quadrature(x: f64, tol: f64) -> Result<QuadratureResult> {
    check_tol(tol)?;
    check_unit(x)?;
    let a = x.abs();
    let r = if a <= SPLIT {
        adaptive_simpson(integrand, 0.0, a, tol)
    } else {
        let head = adaptive_simpson(integrand, 0.0, SPLIT, tol / 2.0);
        let tail = adaptive_simpson(integrand, complement(a), complement(SPLIT), tol / 2.0);
        head.plus(tail)
    };
    Ok(if x.is_sign_negative() { r.negated() } else { r })
}

/// `∫_0^{sqrt(2)/2}` and `∫_{sqrt(2)/2}^1` of `1 / sqrt(1 - t^2)`, the second
/// through the substitution. Both equal `π/4`.
pub fn arcsin_split_halves(tol: f64) -> Result<(QuadratureResult, QuadratureResult)> {
    check_tol(tol)?;
    let head = adaptive_simpson(integrand, 0.0, SPLIT, tol);
    let tail = adaptive_simpson(integrand, complement(1.0), complement(SPLIT), tol);
    Ok((head, tail))
}

/// Maximum of `|central difference of arcsin_newton - 1/sqrt(1 - x^2)|` over
/// the grid.
pub fn arcsin_derivative_check(grid: &[f64], h: f64) -> Result<f64> {
    if !h.is_finite() || h <= 0.0 {
        return Err(Error::InvalidArgument(format!("step h must be positive, got {h}")));
    }
    let mut worst = 0.0f64;
    for &x in grid {
        if !(x - h > -1.0 && x + h < 1.0) {
            return Err(Error::Domain(format!("grid point {x} not inside (-1 + h, 1 - h)")));
        }
        let (xp, xm) = (x + h, x - h);
        let yp = arcsin_newton(xp, 1e-13)?.value;
        let ym = arcsin_newton(xm, 1e-13)?.value;
        let diff = (yp - ym) / (xp - xm);
        worst = worst.max((diff - integrand(x)).abs());
    }
    Ok(worst)
}

/// Length of the arc of `y = sqrt(1 - x^2)` over `[a, b]`.
pub fn arc_length(a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    check_tol(tol)?;
    check_unit(a)?;
    check_unit(b)?;
    if a > b {
        return Err(Error::Domain(format!("arc endpoints out of order: {a} > {b}")));
    }
    if a == b {
        return Ok(QuadratureResult::zero());
    }
    let gb = arcsin_quadrature(b, tol / 2.0)?;
    let ga = arcsin_quadrature(a, tol / 2.0)?;
    Ok(gb.plus(ga.negated()))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitCirclePoint {
    /// Arc length from `(1, 0)`.
    pub s: CertifiedValue,
    pub cos: CertifiedValue,
    pub sin: CertifiedValue,
}

/// The point of the upper unit semicircle with abscissa `a`, located by the arc
/// length `s = Q - arcsin a` and reconstructed as `(cos s, sin s)`.
pub fn unit_circle_point(a: f64) -> Result<UnitCirclePoint> {
    check_unit(a)?;
    let table = constants::table();
    let g = arcsin_newton(a, 1e-13)?;
    let s_value = (table.q - g.value) + table.q_lo;
    let s_bound = (g.abs_error_bound + table.q_dd_error + 2.0 * U * s_value.abs()) * (1.0 + 4.0 * f64::EPSILON);
    let s = CertifiedValue::new(s_value, s_bound);
    // |d/ds| of both is at most 1.
    let c = cos_eval(s_value, KERNEL_TOL)?;
    let sn = sin_eval(s_value, KERNEL_TOL)?;
    let cos = CertifiedValue::new(c.value, c.abs_error_bound + s_bound);
    let sin = CertifiedValue::new(sn.value, sn.abs_error_bound + s_bound);

    let height = complement(a);
    let slack = 4.0 * f64::EPSILON;
    if (cos.value - a).abs() > cos.abs_error_bound + slack {
        return Err(Error::Certification(format!("cos s = {} differs from a = {a}", cos.value)));
    }
    if (sin.value - height).abs() > sin.abs_error_bound + slack {
        return Err(Error::Certification(format!(
            "sin s = {} differs from sqrt(1 - a^2) = {height}",
            sin.value
        )));
    }
    Ok(UnitCirclePoint { s, cos, sin })
}
