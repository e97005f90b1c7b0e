//! Exact sine and cosine at 0, Q/3, Q/2, 2Q/3 and Q (that is 0, π/6, π/4,
//! π/3, π/2), derived from the identities alone.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::constants;
use crate::dd::U;
use crate::report::CheckEntry;
use crate::series_kernel::{cos_eval, sin_eval};
use crate::ExactRational;

/// `coeff * sqrt(radicand)` with `radicand` square-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub coeff: ExactRational,
    pub radicand: u64,
}

impl Surd {
    pub fn rational(r: ExactRational) -> Self {
        Self {
            coeff: r,
            radicand: 1,
        }
    }

    /// Non-negative square root of a non-negative rational.
    pub fn sqrt_of(r: &ExactRational) -> Self {
        assert!(!r.is_negative(), "square root of negative {r}");
        // sqrt(p/q) = sqrt(p q) / q
        let n = (r.numer() * r.denom())
            .to_u64()
            .expect("radicand fits in u64");
        let (outside, inside) = split_square(n);
        Self {
            coeff: ExactRational::new(BigInt::from(outside), r.denom().clone()),
            radicand: inside,
        }
    }

    pub fn square(&self) -> ExactRational {
        &self.coeff * &self.coeff * BigInt::from(self.radicand)
    }

    pub fn to_f64(&self) -> f64 {
        let c = self.coeff.to_f64().expect("finite");
        if self.radicand == 1 {
            c
        } else {
            c * (self.radicand as f64).sqrt()
        }
    }
}

/// `n = outside^2 * inside` with `inside` square-free.
fn split_square(mut n: u64) -> (u64, u64) {
    if n == 0 {
        return (0, 1);
    }
    let mut outside = 1;
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p * p) {
            n /= p * p;
            outside *= p;
        }
        p += 1;
    }
    (outside, n)
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 1 || self.coeff.is_zero() {
            return write!(f, "{}", self.coeff);
        }
        let numer = self.coeff.numer();
        let denom = self.coeff.denom();
        if numer.is_one() {
            write!(f, "√{}", self.radicand)?;
        } else {
            write!(f, "{numer}√{}", self.radicand)?;
        }
        if !denom.is_one() {
            write!(f, "/{denom}")?;
        }
        Ok(())
    }
}

impl Serialize for Surd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpecialAngle {
    pub label: &'static str,
    /// The angle as a rational multiple of `Q`.
    pub q_multiple: (u32, u32),
    pub angle: f64,
    pub sin: Surd,
    pub cos: Surd,
    pub sin_value: f64,
    pub cos_value: f64,
}

impl SpecialAngle {
    fn new(label: &'static str, q_multiple: (u32, u32), sin: Surd, cos: Surd) -> Self {
        let q = constants::table().q;
        let angle = q * q_multiple.0 as f64 / q_multiple.1 as f64;
        Self {
            label,
            q_multiple,
            angle,
            sin_value: sin.to_f64(),
            cos_value: cos.to_f64(),
            sin,
            cos,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpecialAngleTable {
    pub entries: Vec<SpecialAngle>,
}

impl SpecialAngleTable {
    pub fn get(&self, label: &str) -> Option<&SpecialAngle> {
        self.entries.iter().find(|e| e.label == label)
    }
}

/// `4s^3 - 3s + 1`, ascending coefficients: `sin 3θ = 3 sin θ - 4 sin^3 θ`
/// at `θ = π/6`, where `sin 3θ = sin Q = 1`.
pub fn sine_cubic() -> Vec<BigInt> {
    [1, -3, 0, 4].into_iter().map(BigInt::from).collect()
}

/// Rational roots of the sine cubic with multiplicities: `1/2` twice and
/// `-1` once.
pub fn solve_sine_cubic() -> Vec<(ExactRational, usize)> {
    rational_roots(&sine_cubic())
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let limit = n.sqrt();
    let mut d = BigInt::one();
    while d <= limit {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out
}

fn eval(poly: &[ExactRational], x: &ExactRational) -> ExactRational {
    poly.iter().rev().fold(ExactRational::zero(), |acc, c| acc * x + c)
}

/// Divide by `(s - root)`; the remainder must be zero.
fn deflate(poly: &[ExactRational], root: &ExactRational) -> Vec<ExactRational> {
    let n = poly.len() - 1;
    let mut out = vec![ExactRational::zero(); n];
    let mut carry = ExactRational::zero();
    for k in (0..n).rev() {
        carry = &poly[k + 1] + carry * root;
        out[k] = carry.clone();
    }
    out
}

/// All rational roots of an integer polynomial (ascending coefficients) with
/// multiplicities, by the rational root theorem. Sorted by decreasing root.
pub fn rational_roots(coeffs: &[BigInt]) -> Vec<(ExactRational, usize)> {
    let mut poly: Vec<ExactRational> = coeffs.iter().cloned().map(ExactRational::from).collect();
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    let mut roots = Vec::new();
    let mut zero_mult = 0;
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((ExactRational::zero(), zero_mult));
    }
    if poly.len() <= 1 {
        return roots;
    }

    let lead = poly.last().expect("non-constant").to_integer();
    let constant = poly[0].to_integer();
    let mut candidates = BTreeSet::new();
    for p in divisors(&constant) {
        for q in divisors(&lead) {
            let c = ExactRational::new(p.clone(), q);
            candidates.insert(-c.clone());
            candidates.insert(c);
        }
    }
    for c in candidates {
        let mut mult = 0;
        while poly.len() > 1 && eval(&poly, &c).is_zero() {
            poly = deflate(&poly, &c);
            mult += 1;
        }
        if mult > 0 {
            roots.push((c, mult));
        }
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0));
    roots
}

/// The special-angle table: `π/4` from `1 = 2 sin^2(π/4)`, `π/6` from the
/// sine cubic, `π/3` by the cofunction rule, cosines from the Pythagorean
/// identity with positive sign in the first quadrant.
pub fn special_angles() -> SpecialAngleTable {
    let table = constants::q_multiples_table();
    let int = |v: i32| Surd::rational(ExactRational::from(BigInt::from(v)));
    let one = ExactRational::one();

    // sin(π/4) = cos(Q - π/4) = cos(π/4), so 1 = 2 sin^2(π/4).
    let quarter = Surd::sqrt_of(&(&one / BigInt::from(2)));

    // sin(π/6): the root of the sine cubic lying in (0, 1).
    let sixth = solve_sine_cubic()
        .into_iter()
        .map(|(r, _)| r)
        .find(|r| r.is_positive() && *r < one)
        .expect("a root in (0, 1)");
    let sixth_cos = Surd::sqrt_of(&(&one - &sixth * &sixth));
    let sixth = Surd::rational(sixth);

    SpecialAngleTable {
        entries: vec![
            SpecialAngle::new("0", (0, 1), int(table[0].sin), int(table[0].cos)),
            SpecialAngle::new("π/6", (1, 3), sixth.clone(), sixth_cos.clone()),
            SpecialAngle::new("π/4", (1, 2), quarter.clone(), quarter),
            // sin(π/3) = cos(Q - π/3) = cos(π/6) and vice versa.
            SpecialAngle::new("π/3", (2, 3), sixth_cos, sixth),
            SpecialAngle::new("π/2", (1, 1), int(table[1].sin), int(table[1].cos)),
        ],
    }
}

/// Exact check that the sine cubic has roots exactly `{1/2 (double), -1}`.
pub fn verify_sine_cubic() -> CheckEntry {
    let one = ExactRational::one();
    let expected = [(&one / BigInt::from(2), 2usize), (-one.clone(), 1)];
    let found = solve_sine_cubic();
    let poly: Vec<ExactRational> = sine_cubic().into_iter().map(ExactRational::from).collect();
    let mut residual = Vec::new();
    if found.len() != expected.len() {
        residual.push(ExactRational::from(BigInt::from(found.len() as i64 - expected.len() as i64)));
    }
    for ((r, m), (er, em)) in found.iter().zip(&expected) {
        residual.push(r - er);
        residual.push(ExactRational::from(BigInt::from(*m as i64 - *em as i64)));
        residual.push(eval(&poly, r));
    }
    CheckEntry::exact("sine_cubic_exact", &residual, expected.len())
}

/// Series values at the special angles against the derived table. Allowed
/// gap: 2 ulp of the table value plus the effect of rounding the angle.
pub fn check_special_angles() -> CheckEntry {
    let q = constants::table();
    let mut pass = true;
    let mut worst = 0.0f64;
    let mut worst_allow = 0.0f64;
    let table = special_angles();
    for e in &table.entries {
        let (num, den) = (e.q_multiple.0 as f64, e.q_multiple.1 as f64);
        let angle_err = q.q_error() * num / den + 2.0 * U * e.angle;
        for (got, want) in [
            (sin_eval(e.angle, 1e-15), e.sin_value),
            (cos_eval(e.angle, 1e-15), e.cos_value),
        ] {
            let got = got.expect("angles lie in [0, Q]").value;
            let allow = 2.0 * f64::EPSILON * want.abs() + angle_err;
            let gap = (got - want).abs();
            pass &= gap <= allow;
            if gap >= worst {
                worst = gap;
                worst_allow = allow;
            }
        }
    }
    CheckEntry::numeric("special_angles", pass, worst, worst_allow, table.entries.len())
}
