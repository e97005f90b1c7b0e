use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series_kernel::{cos_eval, sin_eval};

/// Largest RK4 step accepted by [`ode_oracle`].
pub const MAX_STEP: f64 = 1e-2;
/// Largest integration horizon accepted by [`ode_oracle`].
pub const MAX_T_END: f64 = 100.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OdePoint {
    pub t: f64,
    pub f: f64,
    pub df: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OdeTrajectory {
    /// The step actually taken; `t_end` is a whole number of steps.
    pub step: f64,
    /// Starts at `(0, 0, 1)`.
    pub points: Vec<OdePoint>,
    /// `max |f^2 + f'^2 - 1|` over the trajectory.
    pub energy_drift: f64,
}

impl OdeTrajectory {
    /// `(max |f - sin t|, max |f' - cos t|)` against the series kernel.
    pub fn max_deviation(&self) -> Result<(f64, f64)> {
        let mut dev = (0.0f64, 0.0f64);
        for p in &self.points {
            let s = sin_eval(p.t, 1e-15)?;
            let c = cos_eval(p.t, 1e-15)?;
            dev.0 = dev.0.max((p.f - s.value).abs());
            dev.1 = dev.1.max((p.df - c.value).abs());
        }
        Ok(dev)
    }
}

/// Classical RK4 on `f'' = -f` from `(f, f') = (0, 1)` up to `t_end`.
pub fn ode_oracle(t_end: f64, step: f64) -> Result<OdeTrajectory> {
    if !step.is_finite() || step <= 0.0 {
        return Err(Error::InvalidArgument(format!("step must be positive, got {step}")));
    }
    if step > MAX_STEP {
        return Err(Error::StepTooLarge(step));
    }
    if !(0.0..=MAX_T_END).contains(&t_end) {
        return Err(Error::InvalidArgument(format!(
            "t_end must lie in [0, {MAX_T_END}], got {t_end}"
        )));
    }
    let mut points = vec![OdePoint { t: 0.0, f: 0.0, df: 1.0 }];
    if t_end == 0.0 {
        return Ok(OdeTrajectory {
            step,
            points,
            energy_drift: 0.0,
        });
    }
    let n = (t_end / step).ceil() as usize;
    let h = t_end / n as f64;
    points.reserve(n);
    let (mut f, mut g) = (0.0f64, 1.0f64);
    let mut drift = 0.0f64;
    for i in 1..=n {
        // y = (f, g), y' = (g, -f)
        let (k1f, k1g) = (g, -f);
        let (k2f, k2g) = (g + 0.5 * h * k1g, -(f + 0.5 * h * k1f));
        let (k3f, k3g) = (g + 0.5 * h * k2g, -(f + 0.5 * h * k2f));
        let (k4f, k4g) = (g + h * k3g, -(f + h * k3f));
        f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
        g += h / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
        drift = drift.max((f * f + g * g - 1.0).abs());
        points.push(OdePoint {
            t: i as f64 * h,
            f,
            df: g,
        });
    }
    Ok(OdeTrajectory {
        step: h,
        points,
        energy_drift: drift,
    })
}
