//! Double-double arithmetic: a value stored as the unevaluated sum `hi + lo`
//! with `|lo| <= ulp(hi) / 2`.
//!
//! Each operation below has relative error at most a small multiple of
//! `u^2` (`u = 2^-53`); callers budget [`OP_REL_ERROR`] per operation.

use num_traits::ToPrimitive;

use crate::ExactRational;

/// Unit roundoff of binary64.
pub(crate) const U: f64 = f64::EPSILON / 2.0;

/// Per-operation relative error budget for the routines in this module.
pub(crate) const OP_REL_ERROR: f64 = 16.0 * U * U;

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl DoubleDouble {
    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Self { hi, lo }
    }

    pub fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    /// Exact product of two binary64 values.
    pub fn product(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Self { hi, lo }
    }

    /// Nearest double-double to a rational.
    pub fn from_rational(r: &ExactRational) -> Self {
        let hi = r.to_f64().unwrap_or(f64::NAN);
        let rest = r - ExactRational::from_float(hi).expect("finite");
        let lo = rest.to_f64().unwrap_or(0.0);
        Self::new(hi, lo)
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, o: Self) -> Self {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let e = e + t;
        let (s, e) = quick_two_sum(s, e);
        let e = e + f;
        let (hi, lo) = quick_two_sum(s, e);
        Self { hi, lo }
    }

    pub fn sub(self, o: Self) -> Self {
        self.add(-o)
    }

    pub fn mul(self, o: Self) -> Self {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }
}

impl std::ops::Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        Self { hi: -self.hi, lo: -self.lo }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn exact(x: DoubleDouble) -> ExactRational {
        ExactRational::from_float(x.hi).unwrap() + ExactRational::from_float(x.lo).unwrap()
    }

    #[test]
    fn product_is_exact() {
        let a = 1.0 + f64::EPSILON;
        let b = 1.0 - f64::EPSILON;
        let p = DoubleDouble::product(a, b);
        let want = ExactRational::from_float(a).unwrap() * ExactRational::from_float(b).unwrap();
        assert_eq!(exact(p), want);
    }

    #[test]
    fn rational_round_trip_is_tight() {
        let third = ExactRational::new(BigInt::from(1), BigInt::from(3));
        let d = DoubleDouble::from_rational(&third);
        let err = (exact(d) - &third) / &third;
        let err = err.to_f64().unwrap().abs();
        assert!(err < 4.0 * U * U, "relative error {err:e}");
    }

    #[test]
    fn add_and_mul_stay_within_budget() {
        let a = DoubleDouble::from_rational(&ExactRational::new(BigInt::from(2), BigInt::from(7)));
        let b = DoubleDouble::from_rational(&ExactRational::new(BigInt::from(-5), BigInt::from(11)));
        for (got, want) in [
            (a.add(b), exact(a) + exact(b)),
            (a.mul(b), exact(a) * exact(b)),
            (a.sub(b), exact(a) - exact(b)),
        ] {
            let rel = ((exact(got) - &want) / &want).to_f64().unwrap().abs();
            assert!(rel <= OP_REL_ERROR, "relative error {rel:e}");
        }
    }
}
