//! Constructive `Q`, the least positive zero of cosine, and with it `π = 2Q`.
//!
//! Bisection runs on `[0, 2]` over dyadic rationals. Every sign decision is
//! made by [`cos_eval_exact`](crate::series_kernel::cos_eval_exact)-style
//! partial sums: a sign is accepted only when the exact partial sum is farther
//! from zero than the alternating remainder bound, and the number of terms is
//! doubled otherwise. Cosine is decreasing wherever sine is positive, so
//! positivity of sine is checked at every left endpoint the bisection visits;
//! together with `cos > 0` there, the zero found is the least one.
//!
//! After bisection a few Newton steps in exact arithmetic refine `Q` far past
//! binary64, giving the double-double copy used for argument reduction.

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::CheckEntry;
use crate::series_kernel::{cos_eval_exact, exact_alternating, Parity};
use crate::ExactRational;

/// Tolerance used for the process-wide table.
pub const DEFAULT_TOL: f64 = 1e-15;

/// Smallest bracket width `find_q` accepts.
pub const MIN_TOL: f64 = 1e-15;

/// Highest series degree the sign certification may use.
pub const DEGREE_BUDGET: usize = 200;

/// Dyadic precision (bits) kept during the exact Newton refinement.
const NEWTON_BITS: usize = 160;
/// Half-width (as a power of two) of the bracket certifying the double-double.
const DD_BRACKET_BITS: usize = 110;
const NEWTON_STEPS: usize = 4;
const NEWTON_TERMS: usize = 30;

/// Exact values of `sin kQ` and `cos kQ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QMultiple {
    pub k: u32,
    pub sin: i32,
    pub cos: i32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstantsTable {
    /// `Q` rounded to binary64.
    pub q: f64,
    /// Low word: `q + q_lo` is a double-double approximation of `Q`.
    pub q_lo: f64,
    /// Certified bound on `|Q - (q + q_lo)|`.
    pub q_dd_error: f64,
    pub pi: f64,
    pub q_multiples: Vec<QMultiple>,
    /// Half-width of the final bisection bracket; cosine is certified to
    /// change sign across `[q - certified_bound, q + certified_bound]`.
    pub certified_bound: f64,
    /// Final bisection bracket `(left, right)`: `cos(left) > 0 > cos(right)`.
    pub bracket: (f64, f64),
    /// Midpoint of the final bracket, before the Newton polish.
    pub midpoint: f64,
    pub iterations: u32,
}

impl ConstantsTable {
    /// Bound on `|Q - q|` for the binary64 value alone.
    pub fn q_error(&self) -> f64 {
        (self.q_lo.abs() + self.q_dd_error) * (1.0 + f64::EPSILON)
    }
}

fn rational(x: f64) -> ExactRational {
    ExactRational::from_float(x).expect("finite")
}

fn pow2(bits: usize) -> BigInt {
    BigInt::one() << bits
}

fn series_degree(terms: usize, parity: Parity) -> usize {
    match parity {
        Parity::Odd => 2 * terms - 1,
        Parity::Even => 2 * (terms - 1),
    }
}

fn certified_sign(x: &ExactRational, parity: Parity) -> Result<Ordering> {
    let max_terms = match parity {
        Parity::Odd => DEGREE_BUDGET.div_ceil(2),
        Parity::Even => DEGREE_BUDGET / 2 + 1,
    };
    let mut terms = 4;
    loop {
        let (sum, bound) = exact_alternating(x, terms, parity);
        if sum.abs() > bound {
            return Ok(if sum.is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            });
        }
        if terms >= max_terms {
            return Err(Error::ToleranceTooTight {
                tol: (x.to_f64().unwrap_or(f64::NAN)),
                budget: series_degree(terms, parity),
            });
        }
        terms = (terms * 2).min(max_terms);
    }
}

/// Sign of `cos x`, decided from an exact partial sum whose distance from
/// zero exceeds its remainder bound.
pub fn certified_cos_sign(x: &ExactRational) -> Result<Ordering> {
    certified_sign(x, Parity::Even)
}

/// Sign of `sin x`; see [`certified_cos_sign`].
pub fn certified_sin_sign(x: &ExactRational) -> Result<Ordering> {
    certified_sign(x, Parity::Odd)
}

fn round_dyadic(x: &ExactRational, bits: usize) -> ExactRational {
    let scale = ExactRational::from(pow2(bits));
    ExactRational::new((x * &scale).round().to_integer(), pow2(bits))
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Certification(what()))
    }
}

/// Bisect `[0, 2]` for the least positive zero of cosine until the bracket is
/// no wider than `tol`, then polish.
pub fn find_q(tol: f64) -> Result<ConstantsTable> {
    if !(tol >= MIN_TOL && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let width_limit = rational(tol);
    let mut left = ExactRational::zero();
    let mut right = ExactRational::from(BigInt::from(2));

    require(certified_cos_sign(&left)? == Ordering::Greater, || {
        "cos 0 is not positive".into()
    })?;
    require(certified_cos_sign(&right)? == Ordering::Less, || {
        "cos 2 is not negative".into()
    })?;
    require(certified_sin_sign(&right)? == Ordering::Greater, || {
        "sin 2 is not positive".into()
    })?;

    let mut iterations = 0u32;
    while &right - &left > width_limit {
        let mid = (&left + &right) / BigInt::from(2);
        match certified_cos_sign(&mid).map_err(|e| relabel(e, tol))? {
            Ordering::Greater => {
                require(certified_sin_sign(&mid)? == Ordering::Greater, || {
                    format!("sin is not positive at {mid}")
                })?;
                left = mid;
            }
            _ => right = mid,
        }
        iterations += 1;
    }
    let midpoint = (&left + &right) / BigInt::from(2);
    let half_width = (&right - &left) / BigInt::from(2);

    // Newton: Q <- Q + cos Q / sin Q, in exact dyadic arithmetic.
    let mut q = midpoint.clone();
    for _ in 0..NEWTON_STEPS {
        let (c, _) = exact_alternating(&q, NEWTON_TERMS, Parity::Even);
        let (s, _) = exact_alternating(&q, NEWTON_TERMS, Parity::Odd);
        q = round_dyadic(&(&q + c / s), NEWTON_BITS);
    }
    let delta = ExactRational::new(BigInt::one(), pow2(DD_BRACKET_BITS));
    require(
        certified_cos_sign(&(&q - &delta))? == Ordering::Greater
            && certified_cos_sign(&(&q + &delta))? == Ordering::Less,
        || "refined Q is not bracketed".into(),
    )?;

    let q_hi = q.to_f64().expect("finite");
    let q_lo = (&q - rational(q_hi)).to_f64().expect("finite");
    let dd_gap = (&q - rational(q_hi) - rational(q_lo)).abs() + &delta;
    let q_dd_error = dd_gap.to_f64().expect("finite") * 2.0;

    let q_exact = rational(q_hi);
    require(q_exact >= left && q_exact <= right, || {
        format!("polished Q {q_hi} left the bracket")
    })?;
    let certified_bound = half_width.to_f64().expect("finite");
    let cb = rational(certified_bound);
    require(
        certified_cos_sign(&(&q_exact - &cb))? == Ordering::Greater
            && certified_cos_sign(&(&q_exact + &cb))? == Ordering::Less,
        || "cosine does not change sign around Q".into(),
    )?;

    Ok(ConstantsTable {
        q: q_hi,
        q_lo,
        q_dd_error,
        pi: 2.0 * q_hi,
        q_multiples: q_multiples_table(),
        certified_bound,
        bracket: (
            left.to_f64().expect("finite"),
            right.to_f64().expect("finite"),
        ),
        midpoint: midpoint.to_f64().expect("finite"),
        iterations,
    })
}

fn relabel(e: Error, tol: f64) -> Error {
    match e {
        Error::ToleranceTooTight { budget, .. } => Error::ToleranceTooTight { tol, budget },
        other => other,
    }
}

/// `sin kQ` and `cos kQ` for `k = 0..=4`, derived with the sum and
/// cofunction rules from `sin Q = 1`, `cos Q = 0`. No evaluation involved.
pub fn q_multiples_table() -> Vec<QMultiple> {
    // Constant terms of the two series.
    let (sin0, cos0) = (0, 1);
    // cos Q = 0 by definition; sin^2 Q + cos^2 Q = 1 with sin Q > 0.
    let cos1 = 0;
    let sin1 = positive_root(1 - cos1 * cos1);
    // sin 2Q = 2 sin Q cos Q
    let sin2 = 2 * sin1 * cos1;
    // cos 2Q = sin(Q - 2Q) = sin(-Q) = -sin Q
    let cos2 = -sin1;
    // sin 3Q = sin(Q + 2Q) = sin Q cos 2Q + cos Q sin 2Q
    let sin3 = sin1 * cos2 + cos1 * sin2;
    // cos 3Q = sin(Q - 3Q) = -sin 2Q
    let cos3 = -sin2;
    // sin 4Q = 2 sin 2Q cos 2Q
    let sin4 = 2 * sin2 * cos2;
    // cos 4Q = sin(Q - 4Q) = -sin 3Q
    let cos4 = -sin3;

    [
        (sin0, cos0),
        (sin1, cos1),
        (sin2, cos2),
        (sin3, cos3),
        (sin4, cos4),
    ]
    .into_iter()
    .enumerate()
    .map(|(k, (sin, cos))| QMultiple {
        k: k as u32,
        sin,
        cos,
    })
    .collect()
}

/// Exact comparison of [`q_multiples_table`] with
/// `(0, 1), (1, 0), (0, -1), (-1, 0), (0, 1)`.
pub fn verify_q_multiples() -> CheckEntry {
    const EXPECTED: [(i32, i32); 5] = [(0, 1), (1, 0), (0, -1), (-1, 0), (0, 1)];
    let table = q_multiples_table();
    let residual: Vec<ExactRational> = table
        .iter()
        .zip(EXPECTED)
        .flat_map(|(row, (s, c))| [row.sin - s, row.cos - c])
        .map(|d| ExactRational::from(BigInt::from(d)))
        .collect();
    CheckEntry::exact("q_multiples_exact", &residual, table.len())
}

/// The four-term cosine partial sum at 2 is `-19/45` with remainder bound
/// `2/315`, so `cos 2 <= -131/315 < 0`: the sign change that brackets `Q`.
pub fn verify_cos2_bound() -> CheckEntry {
    let two = ExactRational::from(BigInt::from(2));
    let rat = |n: i64, d: i64| ExactRational::new(BigInt::from(n), BigInt::from(d));
    let (sum, bound) = cos_eval_exact(&two, 4).expect("x = 2 is in range");
    let residual = [
        &sum - rat(-19, 45),
        &bound - rat(2, 315),
        (&sum + &bound) - rat(-131, 315),
    ];
    CheckEntry::exact("cos2_bound_exact", &residual, 1)
}

fn positive_root(square: i32) -> i32 {
    (0..=square)
        .find(|r| r * r == square)
        .expect("perfect square")
}

/// Process-wide table, computed once with [`DEFAULT_TOL`].
pub fn table() -> &'static ConstantsTable {
    static TABLE: OnceLock<ConstantsTable> = OnceLock::new();
    TABLE.get_or_init(|| find_q(DEFAULT_TOL).expect("Q certification at the default tolerance"))
}

/// `π = 2Q`.
pub fn pi_value() -> f64 {
    table().pi
}
