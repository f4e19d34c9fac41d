use super::experiment::{run_experiment, Experiment, ExperimentPlan};
use super::stats::median;
use crate::epo::EtaSchedule;
use crate::error::Result;
use crate::objective::Objective;
use crate::space::SearchSpace;

/// One schedule of an eta sweep. A schedule that fails validation keeps its
/// error here and the rest of the sweep still runs.
#[derive(Debug)]
pub struct SweepEntry {
    pub schedule: EtaSchedule,
    pub result: Result<Experiment>,
}

impl SweepEntry {
    pub fn label(&self) -> String {
        self.schedule.label()
    }

    /// Per-iteration median of the best-so-far value across runs.
    pub fn median_trace(&self) -> Option<Vec<f64>> {
        self.per_iteration(median)
    }

    pub fn mean_trace(&self) -> Option<Vec<f64>> {
        self.per_iteration(|v| v.iter().sum::<f64>() / v.len() as f64)
    }

    /// First iteration at which the median trace is at or below `level`.
    pub fn iterations_to_reach(&self, level: f64) -> Option<usize> {
        self.median_trace()?.iter().position(|v| *v <= level)
    }

    fn per_iteration(&self, f: impl Fn(&[f64]) -> f64) -> Option<Vec<f64>> {
        let exp = self.result.as_ref().ok()?;
        let len = exp.runs.iter().map(|r| r.trace.len()).min()?;
        Some(
            (0..len)
                .map(|t| {
                    let column: Vec<f64> = exp.runs.iter().map(|r| r.trace[t].y_best).collect();
                    f(&column)
                })
                .collect(),
        )
    }
}

/// Runs `plan` once per schedule, every schedule with the same run seeds.
pub fn eta_sweep<O>(
    plan: &ExperimentPlan,
    space: &SearchSpace,
    objective: &O,
    schedules: &[EtaSchedule],
) -> Vec<SweepEntry>
where
    O: Objective + Sync + ?Sized,
{
    schedules
        .iter()
        .map(|&schedule| {
            let mut p = plan.clone();
            p.config.eta_schedule = schedule;
            SweepEntry {
                schedule,
                result: run_experiment(&p, space, objective),
            }
        })
        .collect()
}
