use serde::{Deserialize, Serialize};

/// Maximum bisection depth of the adaptive Simpson recursion.
pub const MAX_DEPTH: u32 = 40;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    /// Sum of the per-panel Richardson estimates `|S2 - S1| / 15`; always `>= 0`.
    pub est_error: f64,
    /// Integrand evaluations, at least 1.
    pub evaluations: u64,
}

impl QuadratureResult {
    pub(crate) fn zero() -> Self {
        Self {
            value: 0.0,
            est_error: 0.0,
            evaluations: 1,
        }
    }

    pub(crate) fn plus(self, other: Self) -> Self {
        Self {
            value: self.value + other.value,
            est_error: self.est_error + other.est_error,
            evaluations: self.evaluations + other.evaluations,
        }
    }

    pub(crate) fn negated(self) -> Self {
        Self {
            value: -self.value,
            ..self
        }
    }
}

struct Simpson<'a, F> {
    f: &'a F,
    evaluations: u64,
    est_error: f64,
}

impl<F: Fn(f64) -> f64> Simpson<'_, F> {
    #[allow(clippy::too_many_arguments)]
    fn panel(&mut self, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = (self.f)(lm);
        let frm = (self.f)(rm);
        self.evaluations += 2;
        let h = (b - a) / 12.0;
        let left = h * (fa + 4.0 * flm + fm);
        let right = h * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth >= MAX_DEPTH || delta.abs() <= 15.0 * tol {
            self.est_error += delta.abs() / 15.0;
            return left + right + delta / 15.0;
        }
        self.panel(a, m, fa, flm, fm, left, tol / 2.0, depth + 1)
            + self.panel(m, b, fm, frm, fb, right, tol / 2.0, depth + 1)
    }
}

/// Adaptive Simpson quadrature of a smooth integrand on `[a, b]`, `a <= b`.
pub(crate) fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> QuadratureResult {
    if a == b {
        return QuadratureResult::zero();
    }
    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let mut s = Simpson {
        f: &f,
        evaluations: 3,
        est_error: 0.0,
    };
    let value = s.panel(a, b, fa, fm, fb, whole, tol, 0);
    QuadratureResult {
        value,
        est_error: s.est_error,
        evaluations: s.evaluations,
    }
}
