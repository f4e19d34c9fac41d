use serde::{Deserialize, Serialize};

use super::schedule::EtaSchedule;
use crate::error::{Error, Result};

/// When the sampling radius is allowed to shrink.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ShrinkMode {
    /// Every iteration, so a derived schedule lands exactly on `res` after `t_s` steps.
    #[default]
    EveryIteration,
    /// Only in iterations where the incumbent improved.
    OnImprovement,
}

/// What each particle's step is added to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum PerturbCenter {
    /// Re-sample the whole flock around the current perch.
    #[default]
    Best,
    /// Each particle walks from its own position.
    Own,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum PerturbDist {
    /// `l_scale * u`, `u` uniform on the open interval (-1, 1).
    #[default]
    UniformSymmetric,
    /// Normal with mean 0 and standard deviation `l_scale`.
    Gaussian,
}

/// Full parameterization of one optimizer run.
///
/// `Default` reproduces the reference benchmark setting: 30 particles,
/// 500 iterations, `l_scale0 = 500`, `res = 0.05` and eta ramped from 0.9
/// to 0.8.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpoConfig {
    pub particles: usize,
    pub iterations: usize,
    pub l_scale0: f64,
    pub res: f64,
    pub eta_schedule: EtaSchedule,
    pub scale_offset: f64,
    /// Number of best particles averaged into an extra candidate each
    /// iteration; 0 switches the averaging off.
    pub elite_count: usize,
    pub shrink_mode: ShrinkMode,
    pub perturb_center: PerturbCenter,
    pub perturb_dist: PerturbDist,
    pub seed: u64,
}

impl Default for EpoConfig {
    fn default() -> Self {
        Self {
            particles: 30,
            iterations: 500,
            l_scale0: 500.0,
            res: 0.05,
            eta_schedule: EtaSchedule::Linear {
                eta_max: 0.9,
                eta_min: 0.8,
            },
            scale_offset: 0.0,
            elite_count: 0,
            shrink_mode: ShrinkMode::EveryIteration,
            perturb_center: PerturbCenter::Best,
            perturb_dist: PerturbDist::UniformSymmetric,
            seed: 0,
        }
    }
}

impl EpoConfig {
    /// The constant-eta base variant: eta derived once from `res`.
    pub fn derived() -> Self {
        Self {
            eta_schedule: EtaSchedule::Derived,
            ..Self::default()
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_iterations(mut self, iterations: usize) -> Self {
        self.iterations = iterations;
        self
    }

    pub fn with_particles(mut self, particles: usize) -> Self {
        self.particles = particles;
        self
    }

    pub fn with_schedule(mut self, schedule: EtaSchedule) -> Self {
        self.eta_schedule = schedule;
        self
    }

    pub fn with_elite(mut self, elite_count: usize) -> Self {
        self.elite_count = elite_count;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.particles == 0 {
            return Err(Error::InvalidConfig("particles must be at least 1".into()));
        }
        if self.iterations == 0 {
            return Err(Error::InvalidConfig("iterations must be at least 1".into()));
        }
        if !(self.l_scale0.is_finite() && self.l_scale0 > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "l_scale0 must be a positive finite number, got {}",
                self.l_scale0
            )));
        }
        if !(self.res > 0.0 && self.res < self.l_scale0) {
            return Err(Error::EtaOutOfRange {
                res: self.res,
                l_scale: self.l_scale0,
            });
        }
        self.eta_schedule.validate()?;
        if !(self.scale_offset >= 0.0 && self.scale_offset < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "scale_offset must lie in [0, 1), got {}",
                self.scale_offset
            )));
        }
        if self.elite_count > self.particles {
            return Err(Error::InvalidConfig(format!(
                "elite_count ({}) cannot exceed particles ({})",
                self.elite_count, self.particles
            )));
        }
        Ok(())
    }

    /// Short tag used in output file names: `epo`, `epo-mod`, `epo-mod-elite4`, ...
    pub fn variant_label(&self) -> String {
        let base = match self.eta_schedule {
            EtaSchedule::Derived => "epo",
            EtaSchedule::Linear { .. } => "epo-mod",
        };
        if self.elite_count > 0 {
            format!("{base}-elite{}", self.elite_count)
        } else {
            base.to_string()
        }
    }
}
