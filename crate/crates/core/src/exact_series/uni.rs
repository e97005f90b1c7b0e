use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ExactRational;

/// Univariate polynomial over the rationals, truncated at degree `cap`.
///
/// Coefficients above `cap` are never stored and trailing zeros are trimmed,
/// so equality is structural on the coefficient list.
#[derive(Clone, Debug)]
pub struct UniPoly {
    cap: usize,
    coeffs: Vec<ExactRational>,
}

impl UniPoly {
    pub fn zero(cap: usize) -> Self {
        Self {
            cap,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: ExactRational, cap: usize) -> Self {
        Self::from_coeffs(vec![c], cap)
    }

    /// Build from `coeffs[n]` = coefficient of `x^n`; entries past `cap` drop.
    pub fn from_coeffs(mut coeffs: Vec<ExactRational>, cap: usize) -> Self {
        coeffs.truncate(cap + 1);
        let mut p = Self { cap, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> ExactRational {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, cap: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), cap)
    }

    /// Term-by-term derivative; the cap drops by one.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * BigInt::from(n))
            .collect();
        Self::from_coeffs(coeffs, self.cap.saturating_sub(1))
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    /// Product with every term of degree above `cap` discarded.
    pub fn mul_truncated(&self, other: &Self, cap: usize) -> Self {
        let mut out = vec![ExactRational::zero(); cap + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(cap + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(cap + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(out, cap)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&ExactRational, &ExactRational) -> ExactRational) -> Self {
        let cap = self.cap.min(other.cap);
        let len = self.coeffs.len().max(other.coeffs.len()).min(cap + 1);
        let coeffs = (0..len)
            .map(|n| f(&self.coeff(n), &other.coeff(n)))
            .collect();
        Self::from_coeffs(coeffs, cap)
    }
}

impl PartialEq for UniPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for UniPoly {}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
