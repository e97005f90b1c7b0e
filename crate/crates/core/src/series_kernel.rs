//! Floating-point sine and cosine evaluated from their defining power series.
//!
//! An argument is first replaced by its absolute value, then reduced by the
//! nearest multiple `nQ` using the double-double copy of `Q` held by
//! [`crate::constants`]. The quadrant `n mod 4` picks sine or cosine of the
//! reduced argument `r` (`|r| <= Q/2` up to rounding) together with a sign,
//! exactly as the table of values at multiples of `Q` dictates. The series is
//! then summed by Horner's scheme in double-double arithmetic.
//!
//! The reported bound is the sum of
//!
//! - the first omitted series term (alternating-series remainder),
//! - the Horner rounding budget,
//! - the final rounding of the double-double result to binary64,
//! - the argument reduction error (`|sin'|, |cos'| <= 1`).

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::constants;
use crate::dd::{DoubleDouble, OP_REL_ERROR, U};
use crate::error::{check_tol, Error, Result};
use crate::ExactRational;

/// Largest `|x|` accepted by [`sin_eval`] and [`cos_eval`].
pub const MAX_ARGUMENT: f64 = 1e8;

/// Largest `|x|` accepted by the exact partial-sum evaluators.
pub const MAX_EXACT_ARGUMENT: i64 = 4;

/// Maximum number of nonzero series terms summed in floating point.
const MAX_TERMS: usize = 40;

/// Upper-bound inflation for term magnitudes computed in binary64.
const TERM_INFLATION: f64 = 1.0 + 1e-13;

/// A binary64 value with a proven bound on its distance from the true value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertifiedValue {
    pub value: f64,
    pub abs_error_bound: f64,
}

impl CertifiedValue {
    pub fn new(value: f64, abs_error_bound: f64) -> Self {
        debug_assert!(
            abs_error_bound >= 0.0 && abs_error_bound.is_finite(),
            "bad bound {abs_error_bound}"
        );
        Self {
            value,
            abs_error_bound,
        }
    }

    pub fn lower(&self) -> f64 {
        self.value - self.abs_error_bound
    }

    pub fn upper(&self) -> f64 {
        self.value + self.abs_error_bound
    }

    /// Whether `x` lies inside `[value - bound, value + bound]`.
    pub fn contains(&self, x: f64) -> bool {
        (x - self.value).abs() <= self.abs_error_bound
    }
}

/// Coefficients `c_n` of the power-series solution of `f'' + f = 0`,
/// `f(0) = 0`, `f'(0) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesCoefficients {
    coeffs: Vec<ExactRational>,
}

impl SeriesCoefficients {
    pub fn as_slice(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&ExactRational> {
        self.coeffs.get(n)
    }

    pub fn into_vec(self) -> Vec<ExactRational> {
        self.coeffs
    }

    /// `(n+2)(n+1) c_{n+2} + c_n`, which vanishes for a genuine solution.
    pub fn recursion_residual(&self, n: usize) -> Option<ExactRational> {
        let lhs = self.coeffs.get(n + 2)? * BigInt::from((n + 2) * (n + 1));
        Some(lhs + &self.coeffs[n])
    }
}

/// The first `count` coefficients generated by `c_{n+2} = -c_n / ((n+2)(n+1))`
/// from `c_0 = 0`, `c_1 = 1`.
pub fn ode_coefficients(count: usize) -> SeriesCoefficients {
    let mut coeffs: Vec<ExactRational> = Vec::with_capacity(count);
    for n in 0..count {
        let c = match n {
            0 => ExactRational::zero(),
            1 => ExactRational::one(),
            _ => -(&coeffs[n - 2] / BigInt::from(n * (n - 1))),
        };
        coeffs.push(c);
    }
    SeriesCoefficients { coeffs }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Parity {
    /// `sum (-1)^k x^(2k+1) / (2k+1)!`
    Odd,
    /// `sum (-1)^k x^(2k) / (2k)!`
    Even,
}

impl Parity {
    fn first_exponent(self) -> usize {
        match self {
            Parity::Odd => 1,
            Parity::Even => 0,
        }
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn dd_coefficients(parity: Parity) -> &'static [DoubleDouble] {
    static ODD: OnceLock<Vec<DoubleDouble>> = OnceLock::new();
    static EVEN: OnceLock<Vec<DoubleDouble>> = OnceLock::new();
    let cell = match parity {
        Parity::Odd => &ODD,
        Parity::Even => &EVEN,
    };
    cell.get_or_init(|| {
        (0..MAX_TERMS)
            .map(|k| {
                let m = 2 * k + parity.first_exponent();
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let c = ExactRational::new(BigInt::from(sign), factorial(m));
                DoubleDouble::from_rational(&c)
            })
            .collect()
    })
}

/// Sum the series at a reduced argument. Returns the double-double value and
/// the truncation plus Horner rounding bound.
fn eval_reduced(r: DoubleDouble, parity: Parity, tol: f64) -> (DoubleDouble, f64) {
    let a = (r.hi.abs() + r.lo.abs()) * (1.0 + 2.0 * U);
    debug_assert!(a < 2.0, "reduced argument {a} too large");

    let mut term = match parity {
        Parity::Odd => a,
        Parity::Even => 1.0,
    };
    let mut exponent = parity.first_exponent();
    let mut sum_abs = term;
    let mut kept = 1;
    let omitted = loop {
        let next = term * a * a / ((exponent + 1) * (exponent + 2)) as f64;
        exponent += 2;
        let decreasing = next <= term;
        if (decreasing && next * TERM_INFLATION <= tol / 2.0) || kept == MAX_TERMS {
            break next * TERM_INFLATION;
        }
        term = next;
        sum_abs += next;
        kept += 1;
    };
    // Underflowed terms are still positive.
    let omitted = if a > 0.0 {
        omitted.max(f64::from_bits(1))
    } else {
        0.0
    };

    let coeffs = &dd_coefficients(parity)[..kept];
    let z = r.mul(r);
    let mut acc = coeffs[kept - 1];
    for c in coeffs[..kept - 1].iter().rev() {
        acc = acc.mul(z).add(*c);
    }
    if parity == Parity::Odd {
        acc = acc.mul(r);
    }

    let ops = (2 * kept + 3) as f64;
    let rounding = ops * OP_REL_ERROR * sum_abs * TERM_INFLATION;
    (acc, omitted + rounding)
}

/// Reduce `a >= 0` to `r = a - nQ`. Returns `(r, n mod 4, reduction error)`.
fn reduce(a: f64) -> (DoubleDouble, u8, f64) {
    let table = constants::table();
    let n = (a / table.q).round();
    if n == 0.0 {
        return (DoubleDouble::from_f64(a), 0, 0.0);
    }
    let nq = DoubleDouble::product(n, table.q).add(DoubleDouble::product(n, table.q_lo));
    let r = DoubleDouble::from_f64(a).sub(nq);
    let err = n * table.q_dd_error + 4.0 * OP_REL_ERROR * (a + n * table.q);
    (r, (n as u64 % 4) as u8, err)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Func {
    Sin,
    Cos,
}

fn eval(x: f64, tol: f64, func: Func) -> Result<CertifiedValue> {
    check_tol(tol)?;
    if x.is_nan() || x.abs() > MAX_ARGUMENT {
        return Err(Error::Domain(format!(
            "|x| = {x:e} exceeds the certified reduction range {MAX_ARGUMENT:e}"
        )));
    }
    let a = x.abs();
    let (r, quadrant, reduction_error) = reduce(a);
    // sin(r + nQ) and cos(r + nQ) from the values of sin nQ, cos nQ.
    let (parity, negate) = match (func, quadrant) {
        (Func::Sin, 0) => (Parity::Odd, false),
        (Func::Sin, 1) => (Parity::Even, false),
        (Func::Sin, 2) => (Parity::Odd, true),
        (Func::Sin, _) => (Parity::Even, true),
        (Func::Cos, 0) => (Parity::Even, false),
        (Func::Cos, 1) => (Parity::Odd, true),
        (Func::Cos, 2) => (Parity::Even, true),
        (Func::Cos, _) => (Parity::Odd, false),
    };
    let (v, series_bound) = eval_reduced(r, parity, tol);
    let mut value = v.to_f64();
    if negate {
        value = -value;
    }
    if func == Func::Sin && x.is_sign_negative() {
        value = -value;
    }
    let bound = (series_bound + reduction_error + U * value.abs()) * (1.0 + 4.0 * f64::EPSILON);
    Ok(CertifiedValue::new(value, bound))
}

/// Sine from its power series, with a certified absolute error bound.
///
/// Terms are added until the next one is at most `tol / 2`. Requests below a
/// few ulp of the result are honoured on a best-effort basis and the larger,
/// achieved bound is reported.
pub fn sin_eval(x: f64, tol: f64) -> Result<CertifiedValue> {
    eval(x, tol, Func::Sin)
}

/// Cosine from its power series; same contract as [`sin_eval`].
pub fn cos_eval(x: f64, tol: f64) -> Result<CertifiedValue> {
    eval(x, tol, Func::Cos)
}

/// Exact partial sum of the alternating series plus the absolute value of the
/// first omitted term. Extra terms are taken until the omitted tail is
/// monotonically decreasing, so the bound is a valid remainder bound.
pub(crate) fn exact_alternating(
    x: &ExactRational,
    terms: usize,
    parity: Parity,
) -> (ExactRational, ExactRational) {
    let x2 = x * x;
    let mut term = match parity {
        Parity::Odd => x.clone(),
        Parity::Even => ExactRational::one(),
    };
    let mut exponent = parity.first_exponent();
    let mut sum = ExactRational::zero();
    let mut kept = 0;
    loop {
        sum += &term;
        kept += 1;
        let next = -(&term * &x2) / BigInt::from((exponent + 1) * (exponent + 2));
        exponent += 2;
        // Ratio of the term after `next` to `next` is x^2 / ((e+1)(e+2)),
        // non-increasing in e; once <= 1 the whole tail decreases.
        let tail_decreasing = x2 <= ExactRational::from(BigInt::from((exponent + 1) * (exponent + 2)));
        if kept >= terms && tail_decreasing {
            return (sum, next.abs());
        }
        term = next;
    }
}

fn check_exact_args(x: &ExactRational, terms: usize) -> Result<()> {
    if x.abs() > ExactRational::from(BigInt::from(MAX_EXACT_ARGUMENT)) {
        return Err(Error::Domain(format!(
            "|x| = {x} exceeds {MAX_EXACT_ARGUMENT} for exact evaluation"
        )));
    }
    if terms == 0 {
        return Err(Error::InvalidArgument("terms must be at least 1".into()));
    }
    Ok(())
}

/// Exact partial sum of `terms` nonzero sine-series terms and the first
/// omitted term's magnitude, which bounds the remainder.
pub fn sin_eval_exact(x: &ExactRational, terms: usize) -> Result<(ExactRational, ExactRational)> {
    check_exact_args(x, terms)?;
    Ok(exact_alternating(x, terms, Parity::Odd))
}

/// Cosine counterpart of [`sin_eval_exact`].
pub fn cos_eval_exact(x: &ExactRational, terms: usize) -> Result<(ExactRational, ExactRational)> {
    check_exact_args(x, terms)?;
    Ok(exact_alternating(x, terms, Parity::Even))
}
