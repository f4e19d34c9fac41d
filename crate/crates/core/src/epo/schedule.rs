//! Scale decay: how the sampling radius moves from exploration to exploitation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How the shrinking factor `eta` is chosen over a run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EtaSchedule {
    /// One constant factor, derived so that `l_scale0 * eta^t_s == res`.
    Derived,
    /// Linear ramp from `eta_max` at t = 0 down to `eta_min` at t = t_s.
    Linear { eta_max: f64, eta_min: f64 },
}

impl EtaSchedule {
    pub fn linear(eta_max: f64, eta_min: f64) -> Result<Self> {
        let schedule = EtaSchedule::Linear { eta_max, eta_min };
        schedule.validate()?;
        Ok(schedule)
    }

    /// A linear schedule with equal end points, i.e. a fixed factor.
    pub fn constant(eta: f64) -> Result<Self> {
        Self::linear(eta, eta)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            EtaSchedule::Derived => Ok(()),
            EtaSchedule::Linear { eta_max, eta_min } => check_linear_bounds(eta_max, eta_min),
        }
    }

    /// Factor in force during iteration `t` (0-based).
    pub fn eta_at(&self, t: usize, t_s: usize, res: f64, l_scale0: f64) -> Result<f64> {
        match *self {
            EtaSchedule::Derived => derive_eta(res, l_scale0, t_s),
            EtaSchedule::Linear { eta_max, eta_min } => linear_eta(t, t_s, eta_max, eta_min),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            EtaSchedule::Derived => "derived".to_string(),
            EtaSchedule::Linear { eta_max, eta_min } => format!("{eta_max}:{eta_min}"),
        }
    }
}

fn check_linear_bounds(eta_max: f64, eta_min: f64) -> Result<()> {
    if !(eta_min > 0.0 && eta_min <= eta_max && eta_max < 1.0) {
        return Err(Error::InvalidConfig(format!(
            "linear eta needs 0 < eta_min <= eta_max < 1, got eta_max={eta_max}, eta_min={eta_min}"
        )));
    }
    Ok(())
}

/// `(res / l_scale0)^(1/t_s)`: the constant factor that brings `l_scale0` down
/// to `res` in exactly `t_s` shrinks.
pub fn derive_eta(res: f64, l_scale0: f64, t_s: usize) -> Result<f64> {
    if !(res > 0.0 && res < l_scale0) || !l_scale0.is_finite() {
        return Err(Error::EtaOutOfRange {
            res,
            l_scale: l_scale0,
        });
    }
    if t_s == 0 {
        return Err(Error::InvalidConfig("iterations must be at least 1".into()));
    }
    Ok((res / l_scale0).powf(1.0 / t_s as f64))
}

pub fn linear_eta(t: usize, t_s: usize, eta_max: f64, eta_min: f64) -> Result<f64> {
    check_linear_bounds(eta_max, eta_min)?;
    if t_s == 0 {
        return Err(Error::InvalidConfig("iterations must be at least 1".into()));
    }
    if t > t_s {
        return Err(Error::InvalidConfig(format!(
            "iteration {t} is past the schedule end {t_s}"
        )));
    }
    Ok(eta_max - t as f64 * (eta_max - eta_min) / t_s as f64)
}

/// One decay step, `l_scale * eta + scale_offset`. A positive offset keeps the
/// radius from collapsing, which is what the global-convergence argument needs.
pub fn shrink_scale(l_scale: f64, eta: f64, scale_offset: f64) -> f64 {
    l_scale * eta + scale_offset
}
