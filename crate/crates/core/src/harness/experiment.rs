use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::stats::ExperimentStats;
use crate::epo::{run, EpoConfig, RunResult};
use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::derive_seed;
use crate::space::SearchSpace;

/// A batch of independent runs of one configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentPlan {
    /// Label used in reports and output file names.
    pub problem: String,
    /// Base configuration; its `seed` roots the per-run seeds.
    pub config: EpoConfig,
    pub runs: usize,
    /// Worker threads. Output does not depend on it.
    pub jobs: usize,
}

impl ExperimentPlan {
    pub fn new(problem: impl Into<String>, config: EpoConfig, runs: usize) -> Self {
        Self {
            problem: problem.into(),
            config,
            runs,
            jobs: 1,
        }
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn base_seed(&self) -> u64 {
        self.config.seed
    }

    pub fn run_seed(&self, index: usize) -> u64 {
        derive_seed(self.config.seed, index as u64)
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::InvalidConfig("runs must be at least 1".into()));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidConfig("jobs must be at least 1".into()));
        }
        self.config.validate()
    }

    /// `<problem>_<variant>_<baseseed>`, the stem shared by every output file.
    pub fn file_stem(&self) -> String {
        format!(
            "{}_{}_{}",
            self.problem,
            self.config.variant_label(),
            self.config.seed
        )
    }
}

/// Every run of an experiment plus its aggregate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Experiment {
    pub problem: String,
    pub dims: usize,
    pub config: EpoConfig,
    pub runs: Vec<RunResult>,
    pub stats: ExperimentStats,
}

impl Experiment {
    pub fn from_runs(
        problem: impl Into<String>,
        dims: usize,
        config: EpoConfig,
        runs: Vec<RunResult>,
    ) -> Self {
        let stats = ExperimentStats::from_runs(&runs);
        Self {
            problem: problem.into(),
            dims,
            config,
            runs,
            stats,
        }
    }

    pub fn final_values(&self) -> Vec<f64> {
        self.runs.iter().map(|r| r.best.y).collect()
    }
}

/// Calls `f(i)` for every index, gathering results in index order.
pub(crate) fn run_indexed<T, F>(count: usize, jobs: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync + Send,
{
    if jobs <= 1 || count <= 1 {
        return (0..count).map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("could not start {jobs} workers: {e}")))?;
    pool.install(|| (0..count).into_par_iter().map(f).collect())
}

/// Executes `plan.runs` independent seeded runs and aggregates them.
pub fn run_experiment<O>(
    plan: &ExperimentPlan,
    space: &SearchSpace,
    objective: &O,
) -> Result<Experiment>
where
    O: Objective + Sync + ?Sized,
{
    plan.validate()?;
    let runs = run_indexed(plan.runs, plan.jobs, |i| {
        let config = EpoConfig {
            seed: plan.run_seed(i),
            ..plan.config.clone()
        };
        run(&config, space, objective)
    })?;
    Ok(Experiment::from_runs(
        plan.problem.clone(),
        space.dims(),
        plan.config.clone(),
        runs,
    ))
}
