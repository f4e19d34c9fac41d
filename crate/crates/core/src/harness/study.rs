use serde::{Deserialize, Serialize};

use super::experiment::run_indexed;
use crate::epo::{EpoConfig, Optimizer, PerturbDist};
use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::derive_seed;
use crate::space::SearchSpace;

/// Empirical probability of ending within `delta` of the minimizer after a
/// given number of iterations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StudyPlan {
    pub delta: f64,
    pub t_values: Vec<usize>,
    pub trials: usize,
    /// `iterations` is replaced by each `t`; `seed` roots the trial seeds.
    pub config: EpoConfig,
    pub jobs: usize,
}

impl StudyPlan {
    /// Setting in which the best-so-far provably approaches the minimizer:
    /// Gaussian steps, a positive radius floor and a small flock.
    pub fn proof_setting() -> Self {
        Self {
            delta: 0.5,
            t_values: vec![50, 150, 500],
            trials: 100,
            config: EpoConfig {
                particles: 5,
                scale_offset: 0.5,
                perturb_dist: PerturbDist::Gaussian,
                ..EpoConfig::default()
            },
            jobs: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.delta > 0.0 && self.delta.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "delta must be positive, got {}",
                self.delta
            )));
        }
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be at least 1".into()));
        }
        if self.t_values.is_empty() {
            return Err(Error::InvalidConfig("no t values given".into()));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidConfig("jobs must be at least 1".into()));
        }
        // iterations is overridden per t, so check the rest with a placeholder
        EpoConfig {
            iterations: 1,
            ..self.config.clone()
        }
        .validate()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StudyPoint {
    pub t: usize,
    pub successes: usize,
    pub trials: usize,
    pub rate: f64,
}

impl StudyPoint {
    /// Binomial standard error of `rate`.
    pub fn std_error(&self) -> f64 {
        (self.rate * (1.0 - self.rate) / self.trials as f64).sqrt()
    }
}

/// Infinity-norm distance.
pub fn max_abs_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// For each `t`, runs `trials` seeded runs of `t` iterations and counts how
/// many finish with every coordinate of the incumbent within `delta` of
/// `minimizer`.
///
/// `t = 0` means the initial scatter only. Trial `i` uses the same seed for
/// every `t`.
pub fn convergence_probability_study<O>(
    plan: &StudyPlan,
    space: &SearchSpace,
    objective: &O,
    minimizer: Option<&[f64]>,
    name: &str,
) -> Result<Vec<StudyPoint>>
where
    O: Objective + Sync + ?Sized,
{
    let minimizer = minimizer.ok_or_else(|| Error::NoKnownMinimizer(name.to_string()))?;
    if minimizer.len() != space.dims() {
        return Err(Error::InvalidSpace(format!(
            "minimizer has {} coordinates, space has {}",
            minimizer.len(),
            space.dims()
        )));
    }
    plan.validate()?;
    plan.t_values
        .iter()
        .map(|&t| {
            let hits = run_indexed(plan.trials, plan.jobs, |i| {
                let config = EpoConfig {
                    iterations: t.max(1),
                    seed: derive_seed(plan.config.seed, i as u64),
                    ..plan.config.clone()
                };
                let opt = Optimizer::new(config, space, objective)?;
                let result = if t == 0 {
                    opt.into_result()
                } else {
                    opt.finish()?
                };
                Ok(max_abs_distance(&result.best.x, minimizer) <= plan.delta)
            })?;
            let successes = hits.iter().filter(|h| **h).count();
            Ok(StudyPoint {
                t,
                successes,
                trials: plan.trials,
                rate: successes as f64 / plan.trials as f64,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missing_minimizer_is_rejected() {
        let space = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
        let f = |x: &[f64]| x[0];
        let err =
            convergence_probability_study(&StudyPlan::proof_setting(), &space, &f, None, "F7")
                .unwrap_err();
        assert!(matches!(err, Error::NoKnownMinimizer(_)));
    }

    #[test]
    fn huge_delta_always_succeeds() {
        let space = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
        let f = |x: &[f64]| x[0] * x[0] + x[1] * x[1];
        let plan = StudyPlan {
            delta: 10.0,
            t_values: vec![0, 3],
            trials: 7,
            ..StudyPlan::proof_setting()
        };
        let pts = convergence_probability_study(&plan, &space, &f, Some(&[0.0, 0.0]), "s").unwrap();
        assert_eq!(pts.len(), 2);
        assert!(pts.iter().all(|p| p.successes == 7 && p.rate == 1.0));
        assert_eq!(pts[0].std_error(), 0.0);
    }
}
