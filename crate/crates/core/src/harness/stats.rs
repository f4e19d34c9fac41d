use serde::{Deserialize, Serialize};

use crate::epo::RunResult;

/// Aggregate over the final incumbents of several runs.
///
/// Standard deviations use the population convention (divisor N). With zero
/// runs every summary value is 0 and the coordinate vectors are empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentStats {
    pub runs: usize,
    pub x_best_avg: Vec<f64>,
    pub x_best_std: Vec<f64>,
    pub y_best_avg: f64,
    pub y_best_std: f64,
    pub y_best_median: f64,
    pub y_best_min: f64,
    pub y_best_max: f64,
    /// Wall-clock seconds per run.
    pub elapsed: Vec<f64>,
    /// Sum of the per-run times.
    pub total_elapsed: f64,
    pub seeds: Vec<u64>,
}

/// Single-pass mean and population variance (Welford).
#[derive(Debug, Default, Clone, Copy)]
struct Moments {
    n: usize,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, v: f64) {
        self.n += 1;
        let d = v - self.mean;
        self.mean += d / self.n as f64;
        self.m2 += d * (v - self.mean);
    }

    fn std(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            (self.m2 / self.n as f64).max(0.0).sqrt()
        }
    }
}

pub fn median(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

impl ExperimentStats {
    pub fn from_runs(runs: &[RunResult]) -> Self {
        let dims = runs.first().map_or(0, |r| r.best.x.len());
        let mut coords = vec![Moments::default(); dims];
        let mut y = Moments::default();
        for r in runs {
            y.push(r.best.y);
            for (m, v) in coords.iter_mut().zip(&r.best.x) {
                m.push(*v);
            }
        }
        let finals: Vec<f64> = runs.iter().map(|r| r.best.y).collect();
        let elapsed: Vec<f64> = runs.iter().map(|r| r.elapsed).collect();
        let (min, max) = finals
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(*v), hi.max(*v))
            });
        Self {
            runs: runs.len(),
            x_best_avg: coords.iter().map(|m| m.mean).collect(),
            x_best_std: coords.iter().map(Moments::std).collect(),
            y_best_avg: y.mean,
            y_best_std: y.std(),
            y_best_median: median(&finals),
            y_best_min: if runs.is_empty() { 0.0 } else { min },
            y_best_max: if runs.is_empty() { 0.0 } else { max },
            total_elapsed: elapsed.iter().sum(),
            elapsed,
            seeds: runs.iter().map(|r| r.seed).collect(),
        }
    }
}
