//! Exact truncated polynomial algebra over the rationals.
//!
//! Products discard every term above the truncation cap, so identities between
//! power series become finite coefficient comparisons: at any cap the residual
//! of `sin^2 + cos^2 - 1` and of `sin(x+y) - (sin x cos y + cos x sin y)` must
//! be identically zero. Bivariate truncation is by total degree, which keeps
//! the homogeneous `n`-th term of `sin(x+y)` (degree `2n+1`) intact.

mod bi;
mod uni;

pub use bi::BiPoly;
pub use uni::UniPoly;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::report::CheckEntry;
use crate::series_kernel::ode_coefficients;
use crate::ExactRational;

/// Polynomials that can be multiplied with truncation.
pub trait TruncatedSeries: Sized {
    fn cap(&self) -> usize;
    fn cauchy_product(&self, other: &Self, cap: usize) -> Self;
}

impl TruncatedSeries for UniPoly {
    fn cap(&self) -> usize {
        UniPoly::cap(self)
    }
    fn cauchy_product(&self, other: &Self, cap: usize) -> Self {
        self.mul_truncated(other, cap)
    }
}

impl TruncatedSeries for BiPoly {
    fn cap(&self) -> usize {
        BiPoly::cap(self)
    }
    fn cauchy_product(&self, other: &Self, cap: usize) -> Self {
        self.mul_truncated(other, cap)
    }
}

/// Exact product of `p` and `q` truncated at (total) degree `cap`.
pub fn cauchy_product<P: TruncatedSeries>(p: &P, q: &P, cap: usize) -> P {
    p.cauchy_product(q, cap)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn signed_inverse_factorial(k: usize, m: usize) -> ExactRational {
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    ExactRational::new(BigInt::from(sign), factorial(m))
}

/// Rows `0..=max` of Pascal's triangle.
fn pascal_rows(max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
    rows.push(vec![BigInt::one()]);
    for n in 1..=max {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigInt::one());
        for i in 1..n {
            row.push(&prev[i - 1] + &prev[i]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows
}

/// Every term of the sine series of degree at most `d`.
pub fn truncated_sin(d: usize) -> UniPoly {
    let mut coeffs = vec![ExactRational::zero(); d + 1];
    for (k, m) in (1..=d).step_by(2).enumerate() {
        coeffs[m] = signed_inverse_factorial(k, m);
    }
    UniPoly::from_coeffs(coeffs, d)
}

/// Every term of the cosine series of degree at most `d`.
pub fn truncated_cos(d: usize) -> UniPoly {
    let mut coeffs = vec![ExactRational::zero(); d + 1];
    for (k, m) in (0..=d).step_by(2).enumerate() {
        coeffs[m] = signed_inverse_factorial(k, m);
    }
    UniPoly::from_coeffs(coeffs, d)
}

/// Substitute `x <- x + y` into `s`, expanding each power binomially, and
/// truncate at total degree `d`.
pub fn substitute_sum(s: &UniPoly, d: usize) -> BiPoly {
    let rows = pascal_rows(d);
    let mut out = BiPoly::zero(d);
    for (n, c) in s.coeffs().iter().enumerate().take(d + 1) {
        if c.is_zero() {
            continue;
        }
        for (i, binom) in rows[n].iter().enumerate() {
            out.add_term(n - i, i, c * binom);
        }
    }
    out
}

/// The `n`-th term of `sin(x + y)`, split into the part with odd powers of `x`
/// and the part with even powers of `x`:
///
/// ```text
/// odd  = (-1)^n/(2n+1)! * sum_i C(2n+1, 2i+1) x^(2i+1) y^(2n-2i)
/// even = (-1)^n/(2n+1)! * sum_i C(2n+1, 2i+1) x^(2n-2i) y^(2i+1)
/// ```
pub fn sine_sum_split(n: usize) -> (BiPoly, BiPoly) {
    let m = 2 * n + 1;
    let rows = pascal_rows(m);
    let scale = signed_inverse_factorial(n, m);
    let mut part1 = BiPoly::zero(m);
    let mut part2 = BiPoly::zero(m);
    for i in 0..=n {
        let c = &scale * &rows[m][2 * i + 1];
        part1.add_term(2 * i + 1, 2 * n - 2 * i, c.clone());
        part2.add_term(2 * n - 2 * i, 2 * i + 1, c);
    }
    (part1, part2)
}

/// `c_n = sum_i a_i b_(n-i)`: the `n`-th Cauchy term of `sin x * cos y`,
/// built term by term from the two series.
pub fn sin_cos_cauchy_term(n: usize) -> BiPoly {
    let m = 2 * n + 1;
    let mut out = BiPoly::zero(m);
    for i in 0..=n {
        let a = signed_inverse_factorial(i, 2 * i + 1);
        let b = signed_inverse_factorial(n - i, 2 * n - 2 * i);
        out.add_term(2 * i + 1, 2 * n - 2 * i, a * b);
    }
    out
}

/// Coefficients of `sin^2 + cos^2 - 1` at cap `d`; passes iff all vanish.
pub fn verify_pythagorean(d: usize) -> CheckEntry {
    let s = truncated_sin(d);
    let c = truncated_cos(d);
    let sum = &cauchy_product(&s, &s, d) + &cauchy_product(&c, &c, d);
    let residual = &sum - &UniPoly::constant(ExactRational::one(), d);
    CheckEntry::exact("pythagorean_exact", residual.coeffs(), d + 1)
}

/// Coefficient-wise `sin(x+y) - (sin x cos y + cos x sin y)` at total
/// degree `d`.
pub fn verify_sine_sum(d: usize) -> CheckEntry {
    let (lhs, rhs) = sine_sum_sides(d);
    let residual = &lhs - &rhs;
    let monomials = (d + 1) * (d + 2) / 2;
    CheckEntry::exact("sine_sum_exact", residual.coefficients(), monomials)
}

/// Both sides of the sine-sum identity as truncated bivariate polynomials.
pub fn sine_sum_sides(d: usize) -> (BiPoly, BiPoly) {
    let lhs = substitute_sum(&truncated_sin(d), d);
    let sin_x = BiPoly::in_x(&truncated_sin(d));
    let cos_x = BiPoly::in_x(&truncated_cos(d));
    let sin_y = BiPoly::in_y(&truncated_sin(d));
    let cos_y = BiPoly::in_y(&truncated_cos(d));
    let rhs = &cauchy_product(&sin_x, &cos_y, d) + &cauchy_product(&cos_x, &sin_y, d);
    (lhs, rhs)
}

/// For each `n <= n_max`: `odd + even = a_n`, `odd = c_n` (from `sin x cos y`)
/// and `even = d_n` (from `cos x sin y`), with `c_n` computed both as a
/// homogeneous slice of the truncated product and term by term.
pub fn verify_sine_sum_split(n_max: usize) -> CheckEntry {
    let mut residuals: Vec<ExactRational> = Vec::new();
    for n in 0..=n_max {
        let m = 2 * n + 1;
        let (part1, part2) = sine_sum_split(n);
        let a_n = substitute_sum(&truncated_sin(m), m).homogeneous_part(m);
        let c_n = cauchy_product(
            &BiPoly::in_x(&truncated_sin(m)),
            &BiPoly::in_y(&truncated_cos(m)),
            m,
        )
        .homogeneous_part(m);
        let d_n = cauchy_product(
            &BiPoly::in_x(&truncated_cos(m)),
            &BiPoly::in_y(&truncated_sin(m)),
            m,
        )
        .homogeneous_part(m);
        let direct = sin_cos_cauchy_term(n);
        for diff in [
            &(&part1 + &part2) - &a_n,
            &part1 - &c_n,
            &part2 - &d_n,
            &direct - &c_n,
            &direct.swap_vars() - &d_n,
        ] {
            residuals.extend(diff.coefficients().cloned());
        }
    }
    CheckEntry::exact("sine_sum_split_exact", residuals.iter(), n_max + 1)
}

/// The ODE recursion reproduces the sine series coefficients up to degree `n`.
pub fn verify_ode_coefficients(n: usize) -> CheckEntry {
    let ode = ode_coefficients(n + 1);
    let sin = truncated_sin(n);
    let residual: Vec<ExactRational> = (0..=n).map(|k| &ode.as_slice()[k] - sin.coeff(k)).collect();
    CheckEntry::exact("ode_coefficients_exact", residual.iter(), n + 1)
}
