//! Sampled numeric checks of the trigonometric identities, periodicity and the
//! period-minimality witness, plus the special-angle derivations.
//!
//! Each side of an identity is assembled from certified evaluations, and its
//! error bound is propagated through the checker's own arithmetic. A check
//! passes when `|lhs - rhs| <= combined_bound + slack`, where `slack` is
//! [`SLACK_ULPS`] ulp of the largest magnitude the checker combined.

mod special_angles;

pub use special_angles::{
    check_special_angles, rational_roots, sine_cubic, solve_sine_cubic, special_angles, verify_sine_cubic,
    SpecialAngle, SpecialAngleTable, Surd,
};

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constants;
use crate::error::{check_tol, Error, Result};
use crate::report::CheckEntry;
use crate::series_kernel::{cos_eval, sin_eval};

/// Checker slack in units of `f64::EPSILON` times the operand scale.
pub const SLACK_ULPS: f64 = 4.0;

const U: f64 = f64::EPSILON / 2.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    /// Sum of the certified bounds propagated to both sides.
    pub combined_bound: f64,
    /// Allowance for the checker's own rounding.
    pub slack: f64,
    pub pass: bool,
    pub sample_points: Vec<f64>,
}

impl IdentityCheck {
    fn new(name: &str, lhs: Approx, rhs: Approx, sample_points: Vec<f64>) -> Self {
        let combined_bound = lhs.err + rhs.err;
        let slack = SLACK_ULPS * f64::EPSILON * lhs.scale.max(rhs.scale);
        let pass = (lhs.value - rhs.value).abs() <= combined_bound + slack;
        Self {
            name: name.to_string(),
            lhs: lhs.value,
            rhs: rhs.value,
            combined_bound,
            slack,
            pass,
            sample_points,
        }
    }

    pub fn discrepancy(&self) -> f64 {
        (self.lhs - self.rhs).abs()
    }
}

/// A value with a propagated error bound and the magnitude of the largest
/// quantity that went into it.
#[derive(Clone, Copy, Debug)]
struct Approx {
    value: f64,
    err: f64,
    scale: f64,
}

impl Approx {
    fn exact(value: f64) -> Self {
        Self {
            value,
            err: 0.0,
            scale: value.abs(),
        }
    }

    fn add(self, o: Self) -> Self {
        let value = self.value + o.value;
        Self {
            value,
            err: self.err + o.err,
            scale: self.scale.max(o.scale).max(value.abs()),
        }
    }

    fn sub(self, o: Self) -> Self {
        self.add(o.scale_by(-1.0))
    }

    fn mul(self, o: Self) -> Self {
        let value = self.value * o.value;
        Self {
            value,
            err: self.value.abs() * o.err + o.value.abs() * self.err + self.err * o.err,
            scale: self.scale.max(o.scale).max(value.abs()),
        }
    }

    fn scale_by(self, c: f64) -> Self {
        Self {
            value: c * self.value,
            err: c.abs() * self.err,
            scale: (c.abs() * self.scale).max(self.scale),
        }
    }
}

/// Certified sine at an argument known only to within `arg_err`.
fn sin_at(x: f64, arg_err: f64, tol: f64) -> Result<Approx> {
    let v = sin_eval(x, tol)?;
    Ok(Approx {
        value: v.value,
        err: v.abs_error_bound + arg_err,
        scale: v.value.abs(),
    })
}

fn cos_at(x: f64, arg_err: f64, tol: f64) -> Result<Approx> {
    let v = cos_eval(x, tol)?;
    Ok(Approx {
        value: v.value,
        err: v.abs_error_bound + arg_err,
        scale: v.value.abs(),
    })
}

/// Rounding error of a single binary64 operation producing `r`.
fn rounding(r: f64) -> f64 {
    U * r.abs()
}

/// Registered identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    Pythagorean,
    SineSum,
    SineDifference,
    SineDouble,
    CofunctionSin,
    CofunctionCos,
    CosineSum,
    CosineDifference,
    CosineDouble,
    CosineSquared,
    TripleAngle,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::Pythagorean,
        IdentityId::SineSum,
        IdentityId::SineDifference,
        IdentityId::SineDouble,
        IdentityId::CofunctionSin,
        IdentityId::CofunctionCos,
        IdentityId::CosineSum,
        IdentityId::CosineDifference,
        IdentityId::CosineDouble,
        IdentityId::CosineSquared,
        IdentityId::TripleAngle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Pythagorean => "pythagorean",
            IdentityId::SineSum => "sine_sum",
            IdentityId::SineDifference => "sine_difference",
            IdentityId::SineDouble => "sine_double",
            IdentityId::CofunctionSin => "cofunction_sin",
            IdentityId::CofunctionCos => "cofunction_cos",
            IdentityId::CosineSum => "cosine_sum",
            IdentityId::CosineDifference => "cosine_difference",
            IdentityId::CosineDouble => "cosine_double",
            IdentityId::CosineSquared => "cosine_squared",
            IdentityId::TripleAngle => "triple_angle",
        }
    }

    /// Whether the identity uses the second coordinate of a sample.
    pub fn is_binary(self) -> bool {
        matches!(
            self,
            IdentityId::SineSum | IdentityId::SineDifference | IdentityId::CosineSum | IdentityId::CosineDifference
        )
    }

    /// `(lhs, rhs)` at one sample.
    fn sides(self, x: f64, y: f64, tol: f64) -> Result<(Approx, Approx)> {
        let q = constants::table();
        let q_err = q.q_error();
        let sx = sin_at(x, 0.0, tol)?;
        let cx = cos_at(x, 0.0, tol)?;
        let sy = sin_at(y, 0.0, tol)?;
        let cy = cos_at(y, 0.0, tol)?;
        let two = Approx::exact(2.0);
        Ok(match self {
            IdentityId::Pythagorean => (sx.mul(sx).add(cx.mul(cx)), Approx::exact(1.0)),
            IdentityId::SineSum => {
                let s = x + y;
                (sin_at(s, rounding(s), tol)?, sx.mul(cy).add(cx.mul(sy)))
            }
            IdentityId::SineDifference => {
                let s = x - y;
                (sin_at(s, rounding(s), tol)?, sx.mul(cy).sub(cx.mul(sy)))
            }
            IdentityId::SineDouble => (sin_at(2.0 * x, 0.0, tol)?, two.mul(sx).mul(cx)),
            IdentityId::CofunctionSin => {
                let s = q.q - x;
                (sin_at(s, rounding(s) + q_err, tol)?, cx)
            }
            IdentityId::CofunctionCos => {
                let s = q.q - x;
                (cos_at(s, rounding(s) + q_err, tol)?, sx)
            }
            IdentityId::CosineSum => {
                let s = x + y;
                (cos_at(s, rounding(s), tol)?, cx.mul(cy).sub(sx.mul(sy)))
            }
            IdentityId::CosineDifference => {
                let s = x - y;
                (cos_at(s, rounding(s), tol)?, cx.mul(cy).add(sx.mul(sy)))
            }
            IdentityId::CosineDouble => (
                cos_at(2.0 * x, 0.0, tol)?,
                two.mul(cx).mul(cx).sub(Approx::exact(1.0)),
            ),
            IdentityId::CosineSquared => (
                cx.mul(cx),
                Approx::exact(0.5).add(Approx::exact(0.5).mul(cos_at(2.0 * x, 0.0, tol)?)),
            ),
            IdentityId::TripleAngle => {
                let s = 3.0 * x;
                let cube = sx.mul(sx).mul(sx);
                (
                    sin_at(s, rounding(s), tol)?,
                    Approx::exact(3.0).mul(sx).sub(Approx::exact(4.0).mul(cube)),
                )
            }
        })
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Check the named identity at every sample. Unary identities use only the
/// first coordinate of each pair.
pub fn check_identity(name: &str, samples: &[(f64, f64)], tol: f64) -> Result<Vec<IdentityCheck>> {
    let id: IdentityId = name.parse()?;
    check_identity_id(id, samples, tol)
}

pub fn check_identity_id(id: IdentityId, samples: &[(f64, f64)], tol: f64) -> Result<Vec<IdentityCheck>> {
    check_tol(tol)?;
    samples
        .iter()
        .map(|&(x, y)| {
            let (lhs, rhs) = id.sides(x, y, tol)?;
            let points = if id.is_binary() { vec![x, y] } else { vec![x] };
            Ok(IdentityCheck::new(id.name(), lhs, rhs, points))
        })
        .collect()
}

/// Fold per-sample checks into one report entry (worst discrepancy, largest
/// allowance, all-pass).
pub fn summarize(name: &str, checks: &[IdentityCheck]) -> CheckEntry {
    let pass = checks.iter().all(|c| c.pass);
    let max_discrepancy = checks.iter().map(IdentityCheck::discrepancy).fold(0.0, f64::max);
    let bound = checks
        .iter()
        .map(|c| c.combined_bound + c.slack)
        .fold(0.0, f64::max);
    CheckEntry::numeric(name, pass, max_discrepancy, bound, checks.len())
}

/// Every pair drawn from points near 0, `±Q` and `±2Q`, where the values or
/// the reduction cancel hardest.
pub fn adversarial_samples() -> Vec<(f64, f64)> {
    let q = constants::table().q;
    let mut pts = vec![0.0, 1e-300, -1e-300, 1e-8, -1e-8];
    for c in [q, -q, 2.0 * q, -2.0 * q] {
        pts.extend([c, c.next_up(), c.next_down(), c + 1e-9, c - 1e-9]);
    }
    pts.iter().flat_map(|&a| pts.iter().map(move |&b| (a, b))).collect()
}

/// `n` deterministic sample pairs, uniform on `[lo, hi]^2`.
pub fn seeded_samples(n: usize, seed: u64, lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| (rng.random_range(lo..=hi), rng.random_range(lo..=hi)))
        .collect()
}

fn uniform_grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = if n > 1 { (hi - lo) / (n - 1) as f64 } else { 0.0 };
    (0..n).map(move |i| lo + step * i as f64)
}

fn worst(checks: Vec<IdentityCheck>, name: &str) -> IdentityCheck {
    let pass = checks.iter().all(|c| c.pass);
    let mut w = checks
        .into_iter()
        .max_by(|a, b| a.discrepancy().total_cmp(&b.discrepancy()))
        .expect("non-empty grid");
    w.name = name.to_string();
    w.pass = pass;
    w
}

/// `sin(x + 4Q) = sin x` and `cos x = -sin(x - Q)` on a uniform grid over
/// `[-10, 10]`. Returns the worst sample; `pass` covers every sample.
pub fn check_periodicity(n_samples: usize, tol: f64) -> Result<IdentityCheck> {
    check_tol(tol)?;
    if n_samples == 0 {
        return Err(Error::InvalidArgument("n_samples must be positive".into()));
    }
    let q = constants::table();
    let four_q = 4.0 * q.q;
    let mut checks = Vec::with_capacity(2 * n_samples);
    for x in uniform_grid(-10.0, 10.0, n_samples) {
        let shifted = x + four_q;
        let lhs = sin_at(shifted, rounding(shifted) + 4.0 * q.q_error(), tol)?;
        let rhs = sin_at(x, 0.0, tol)?;
        checks.push(IdentityCheck::new("periodicity_sin", lhs, rhs, vec![x]));

        let back = x - q.q;
        let lhs = cos_at(x, 0.0, tol)?;
        let rhs = sin_at(back, rounding(back) + q.q_error(), tol)?.scale_by(-1.0);
        checks.push(IdentityCheck::new("periodicity_cos", lhs, rhs, vec![x]));
    }
    Ok(worst(checks, "periodicity"))
}

/// Sampled witness for minimality of the period: for `R` strictly inside
/// `(0, Q)`, `cos 2R` stays away from `±1` and `sin R`, `cos R` are positive,
/// all beyond the certified bounds. `lhs` records the largest certified upper
/// bound on `|cos 2R|` and `rhs` the excluded value 1.
pub fn check_period_minimality(grid_size: usize) -> Result<IdentityCheck> {
    if grid_size < 100 {
        return Err(Error::InvalidArgument(format!(
            "grid_size {grid_size} below the minimum of 100"
        )));
    }
    let tol = 1e-15;
    let q = constants::table();
    let mut pass = true;
    let mut worst_abs = 0.0f64;
    let mut worst_bound = 0.0f64;
    let mut worst_r = 0.0;
    for i in 1..=grid_size {
        let r = q.q * i as f64 / (grid_size + 1) as f64;
        let c2 = cos_eval(2.0 * r, tol)?;
        let s = sin_eval(r, tol)?;
        let c = cos_eval(r, tol)?;
        let reach = c2.value.abs() + c2.abs_error_bound;
        pass &= reach < 1.0 && s.lower() > 0.0 && c.lower() > 0.0;
        if reach > worst_abs {
            worst_abs = reach;
            worst_bound = c2.abs_error_bound;
            worst_r = r;
        }
    }
    Ok(IdentityCheck {
        name: "period_minimality".into(),
        lhs: worst_abs,
        rhs: 1.0,
        combined_bound: worst_bound,
        slack: 0.0,
        pass,
        sample_points: vec![worst_r],
    })
}

/// Extremes of sine over a dense grid on `[0, 4Q]` approach `-1` and `1`.
/// Passes when both lie within the grid resolution of the expected values
/// (sine is 1-Lipschitz and `1 - cos h <= h^2 / 2`).
pub fn check_sine_range(grid_size: usize) -> Result<IdentityCheck> {
    if grid_size < 2 {
        return Err(Error::InvalidArgument("grid_size must be at least 2".into()));
    }
    let q = constants::table();
    let hi = 4.0 * q.q;
    let h = hi / (grid_size - 1) as f64;
    let mut max = f64::NEG_INFINITY;
    let mut min = f64::INFINITY;
    let mut bound = 0.0f64;
    for x in uniform_grid(0.0, hi, grid_size) {
        let v = sin_eval(x, 1e-15)?;
        max = max.max(v.value);
        min = min.min(v.value);
        bound = bound.max(v.abs_error_bound);
    }
    let resolution = h * h / 8.0 + bound;
    let pass = max <= 1.0 + bound && min >= -1.0 - bound && 1.0 - max <= resolution && 1.0 + min <= resolution;
    Ok(IdentityCheck {
        name: "sine_range".into(),
        lhs: max - min,
        rhs: 2.0,
        combined_bound: 2.0 * resolution,
        slack: 0.0,
        pass,
        sample_points: vec![h],
    })
}

/// Sine strictly increases along a uniform grid of `[-Q, Q]`, with every gap
/// larger than the two certified bounds involved.
pub fn check_sine_monotonic(grid_size: usize) -> Result<IdentityCheck> {
    if grid_size < 2 {
        return Err(Error::InvalidArgument("grid_size must be at least 2".into()));
    }
    let q = constants::table().q;
    let mut prev: Option<(f64, crate::CertifiedValue)> = None;
    let mut pass = true;
    let mut min_gap = f64::INFINITY;
    let mut gap_bound = 0.0;
    let mut at = 0.0;
    for x in uniform_grid(-q, q, grid_size) {
        let v = sin_eval(x, 1e-15)?;
        if let Some((px, p)) = prev {
            let gap = v.value - p.value;
            let need = v.abs_error_bound + p.abs_error_bound;
            pass &= gap > need;
            if gap - need < min_gap {
                min_gap = gap - need;
                gap_bound = need;
                at = px;
            }
        }
        prev = Some((x, v));
    }
    Ok(IdentityCheck {
        name: "sine_monotonic".into(),
        lhs: min_gap + gap_bound,
        rhs: 0.0,
        combined_bound: gap_bound,
        slack: 0.0,
        pass,
        sample_points: vec![at],
    })
}
