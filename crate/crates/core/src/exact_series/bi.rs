use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use super::UniPoly;
use crate::ExactRational;

/// Bivariate polynomial in `x`, `y` over the rationals, truncated at total
/// degree `cap`. Keys are `(i, j)` for the monomial `x^i y^j`; zero
/// coefficients are never stored.
#[derive(Clone, Debug)]
pub struct BiPoly {
    cap: usize,
    terms: BTreeMap<(usize, usize), ExactRational>,
}

impl BiPoly {
    pub fn zero(cap: usize) -> Self {
        Self {
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(i: usize, j: usize, c: ExactRational, cap: usize) -> Self {
        let mut p = Self::zero(cap);
        p.add_term(i, j, c);
        p
    }

    /// Embed `p(x)`.
    pub fn in_x(p: &UniPoly) -> Self {
        let mut out = Self::zero(p.cap());
        for (n, c) in p.coeffs().iter().enumerate() {
            out.add_term(n, 0, c.clone());
        }
        out
    }

    /// Embed `p(y)`.
    pub fn in_y(p: &UniPoly) -> Self {
        let mut out = Self::zero(p.cap());
        for (n, c) in p.coeffs().iter().enumerate() {
            out.add_term(0, n, c.clone());
        }
        out
    }

    /// Add `c x^i y^j`, dropping it when `i + j` exceeds the cap.
    pub fn add_term(&mut self, i: usize, j: usize, c: ExactRational) {
        if i + j > self.cap || c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn coeff(&self, i: usize, j: usize) -> ExactRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &ExactRational)> {
        self.terms.iter()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &ExactRational> {
        self.terms.values()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_abs_coeff(&self) -> ExactRational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn truncate(&self, cap: usize) -> Self {
        Self {
            cap,
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| i + j <= cap)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// The terms of total degree exactly `degree`.
    pub fn homogeneous_part(&self, degree: usize) -> Self {
        Self {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| i + j == degree)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Product with every term of total degree above `cap` discarded.
    pub fn mul_truncated(&self, other: &Self, cap: usize) -> Self {
        let mut out = Self::zero(cap);
        for (&(i, j), a) in &self.terms {
            if i + j > cap {
                continue;
            }
            for (&(k, l), b) in &other.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }

    /// Swap the roles of `x` and `y`.
    pub fn swap_vars(&self) -> Self {
        Self {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), v)| ((j, i), v.clone()))
                .collect(),
        }
    }

    fn combine(&self, other: &Self, negate_other: bool) -> Self {
        let cap = self.cap.min(other.cap);
        let mut out = self.truncate(cap);
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, if negate_other { -c } else { c.clone() });
        }
        out
    }
}

impl PartialEq for BiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for BiPoly {}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        self.combine(rhs, false)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self.combine(rhs, true)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            cap: self.cap,
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, ((i, j), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})x^{i}y^{j}")?;
        }
        Ok(())
    }
}
