//! A trigonometric kernel built from the initial value problem
//! `f'' + f = 0, f(0) = 0, f'(0) = 1` and nothing else.
//!
//! Sine and cosine are evaluated from their power series with certified
//! alternating-series remainder bounds, the constant `Q` (and so `π = 2Q`) is
//! located by bisection with exact-rational sign checks, and the classical
//! identities are replayed both exactly (truncated polynomial algebra over the
//! rationals) and numerically (sampled checks against certified bounds).
//!
//! No function in this crate calls a platform trigonometric routine.
//!
//! Modules:
//!
//! - [`series_kernel`]: floating-point `sin`/`cos` with certified bounds, plus
//!   the exact ODE coefficient recursion.
//! - [`exact_series`]: truncated univariate and bivariate polynomials over the
//!   rationals; the Pythagorean and sine-sum identities at coefficient level.
//! - [`constants`]: constructive `Q`, `π`, and the table at multiples of `Q`.
//! - [`identities`]: sampled identity checks, periodicity, special angles.
//! - [`analysis`]: arcsin (Newton and quadrature), quarter-circle area, arc
//!   length, and the RK4 cross-check of the defining ODE.

pub mod analysis;
pub mod constants;
mod dd;
pub mod error;
pub mod exact_series;
pub mod identities;
pub mod report;
pub mod series_kernel;

pub use error::{Error, Result};
pub use series_kernel::{cos_eval, sin_eval, CertifiedValue};

/// Arbitrary-precision signed rational, always kept in lowest terms with a
/// positive denominator.
pub type ExactRational = num_rational::BigRational;
