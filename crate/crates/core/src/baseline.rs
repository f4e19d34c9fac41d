//! Uniform random search, the yardstick every swarm run should beat.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::epo::{update_best, BestRecord, EpoConfig};
use crate::error::Result;
use crate::objective::Objective;
use crate::rng::seeded;
use crate::space::SearchSpace;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineResult {
    pub best: BestRecord,
    /// Best-so-far after each batch, starting with the first.
    pub trace: Vec<f64>,
    pub evaluations: u64,
    pub seed: u64,
}

/// Draws `batches` batches of `batch` uniform points from the box.
pub fn random_search<O: Objective + ?Sized>(
    space: &SearchSpace,
    objective: &O,
    batch: usize,
    batches: usize,
    seed: u64,
) -> BaselineResult {
    let mut rng = seeded(seed);
    let dims = space.dims();
    let mut best = BestRecord::unset(dims);
    let mut trace = Vec::with_capacity(batches);
    for _ in 0..batches {
        let points: Vec<Vec<f64>> = (0..batch)
            .map(|_| {
                (0..dims)
                    .map(|j| space.lower()[j] + rng.random::<f64>() * space.width(j))
                    .collect()
            })
            .collect();
        let values: Vec<f64> = points
            .iter()
            .map(|p| objective.evaluate(p, &mut rng))
            .collect();
        update_best(&values, &points, &mut best);
        trace.push(best.y);
    }
    BaselineResult {
        best,
        trace,
        evaluations: (batch * batches) as u64,
        seed,
    }
}

/// Random search with the same evaluation budget as a run of `config`
/// without elite averaging: the initial scatter plus one batch per iteration.
pub fn random_search_matching<O: Objective + ?Sized>(
    config: &EpoConfig,
    space: &SearchSpace,
    objective: &O,
) -> Result<BaselineResult> {
    config.validate()?;
    Ok(random_search(
        space,
        objective,
        config.particles,
        config.iterations + 1,
        config.seed,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_and_monotone_trace() {
        let space = SearchSpace::uniform(3, -2.0, 2.0).unwrap();
        let f = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>();
        let cfg = EpoConfig::default().with_iterations(40).with_seed(3);
        let r = random_search_matching(&cfg, &space, &f).unwrap();
        assert_eq!(r.evaluations, 41 * 30);
        assert_eq!(r.trace.len(), 41);
        assert!(r.trace.windows(2).all(|w| w[1] <= w[0]));
        assert!(space.contains(&r.best.x));
        assert_eq!(r, random_search_matching(&cfg, &space, &f).unwrap());
    }
}
