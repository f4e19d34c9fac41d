use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::config::{EpoConfig, ShrinkMode};
use super::schedule::{shrink_scale, EtaSchedule};
use super::swarm::{
    apply_step, elite_average, evaluate_swarm, sample_perturbation, update_best, BestRecord,
    SwarmState,
};
use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::{seeded, SearchRng};
use crate::space::SearchSpace;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub t: usize,
    pub y_best: f64,
    pub l_scale: f64,
}

/// Outcome of one complete run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub best: BestRecord,
    /// One point per completed iteration, starting with the initial
    /// evaluation at `t = 0`.
    pub trace: Vec<TracePoint>,
    /// Every objective call, including the initial evaluation.
    pub evaluations: u64,
    pub elapsed: f64,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepReport {
    pub improved: bool,
    pub evaluations: u64,
}

/// Performs one iteration: perturb, evaluate, track the incumbent, optionally
/// average the elite, then shrink the radius and advance the schedule.
pub fn epo_step<O: Objective + ?Sized>(
    state: &mut SwarmState,
    best: &mut BestRecord,
    config: &EpoConfig,
    space: &SearchSpace,
    objective: &O,
    rng: &mut SearchRng,
) -> Result<StepReport> {
    if state.t >= config.iterations {
        return Err(Error::InvalidConfig(format!(
            "run already completed its {} iterations",
            config.iterations
        )));
    }
    let delta = sample_perturbation(
        state.particles(),
        space.dims(),
        state.l_scale,
        config.perturb_dist,
        rng,
    );
    apply_step(
        &mut state.positions,
        &delta,
        space,
        config.perturb_center,
        &state.anchor,
    );
    state.values = evaluate_swarm(&state.positions, objective, rng);
    let mut evaluations = state.particles() as u64;

    let improved = if config.elite_count > 0 {
        let outcome = elite_average(
            &state.values,
            &state.positions,
            config.elite_count,
            objective,
            best,
            rng,
        )?;
        evaluations += 1;
        state.anchor = outcome.centroid;
        outcome.improved
    } else {
        let improved = update_best(&state.values, &state.positions, best);
        state.anchor.clone_from(&best.x);
        improved
    };

    if improved || config.shrink_mode == ShrinkMode::EveryIteration {
        state.l_scale = shrink_scale(state.l_scale, state.eta, config.scale_offset);
    }
    state.t += 1;
    if let EtaSchedule::Linear { .. } = config.eta_schedule {
        state.eta =
            config
                .eta_schedule
                .eta_at(state.t, config.iterations, config.res, config.l_scale0)?;
    }
    Ok(StepReport {
        improved,
        evaluations,
    })
}

/// A run in progress. Useful for stepping manually or observing the swarm;
/// [`run`] drives one to completion.
pub struct Optimizer<'a, O: ?Sized> {
    config: EpoConfig,
    space: &'a SearchSpace,
    objective: &'a O,
    rng: SearchRng,
    state: SwarmState,
    best: BestRecord,
    trace: Vec<TracePoint>,
    evaluations: u64,
    started: Instant,
}

impl<'a, O: Objective + ?Sized> Optimizer<'a, O> {
    /// Validates the configuration, scatters the flock uniformly over the box
    /// and evaluates it once.
    pub fn new(config: EpoConfig, space: &'a SearchSpace, objective: &'a O) -> Result<Self> {
        config.validate()?;
        let started = Instant::now();
        let mut rng = seeded(config.seed);
        let dims = space.dims();
        let positions: Vec<Vec<f64>> = (0..config.particles)
            .map(|_| {
                (0..dims)
                    .map(|j| {
                        let u: f64 = rng.random();
                        space.lower()[j] + u * space.width(j)
                    })
                    .collect()
            })
            .collect();
        let values = evaluate_swarm(&positions, objective, &mut rng);
        let mut best = BestRecord {
            x: positions[0].clone(),
            y: f64::INFINITY,
        };
        update_best(&values, &positions, &mut best);
        let eta = config
            .eta_schedule
            .eta_at(0, config.iterations, config.res, config.l_scale0)?;
        let state = SwarmState {
            positions,
            values,
            l_scale: config.l_scale0,
            eta,
            t: 0,
            anchor: best.x.clone(),
        };
        let trace = vec![TracePoint {
            t: 0,
            y_best: best.y,
            l_scale: state.l_scale,
        }];
        Ok(Self {
            evaluations: config.particles as u64,
            config,
            space,
            objective,
            rng,
            state,
            best,
            trace,
            started,
        })
    }

    pub fn state(&self) -> &SwarmState {
        &self.state
    }

    pub fn best(&self) -> &BestRecord {
        &self.best
    }

    pub fn config(&self) -> &EpoConfig {
        &self.config
    }

    pub fn is_finished(&self) -> bool {
        self.state.t >= self.config.iterations
    }

    pub fn step(&mut self) -> Result<StepReport> {
        let report = epo_step(
            &mut self.state,
            &mut self.best,
            &self.config,
            self.space,
            self.objective,
            &mut self.rng,
        )?;
        self.evaluations += report.evaluations;
        self.trace.push(TracePoint {
            t: self.state.t,
            y_best: self.best.y,
            l_scale: self.state.l_scale,
        });
        Ok(report)
    }

    pub fn finish(mut self) -> Result<RunResult> {
        while !self.is_finished() {
            self.step()?;
        }
        Ok(self.into_result())
    }

    /// Stops where the run currently is, finished or not.
    pub fn into_result(self) -> RunResult {
        RunResult {
            best: self.best,
            trace: self.trace,
            evaluations: self.evaluations,
            elapsed: self.started.elapsed().as_secs_f64(),
            seed: self.config.seed,
        }
    }
}

/// Runs the optimizer for `config.iterations` iterations.
pub fn run<O: Objective + ?Sized>(
    config: &EpoConfig,
    space: &SearchSpace,
    objective: &O,
) -> Result<RunResult> {
    Optimizer::new(config.clone(), space, objective)?.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::epo::config::PerturbCenter;

    fn sphere(x: &[f64]) -> f64 {
        x.iter().map(|v| v * v).sum()
    }

    #[test]
    fn derived_schedule_lands_on_resolution() {
        let space = SearchSpace::uniform(2, -100.0, 100.0).unwrap();
        let cfg = EpoConfig::derived().with_iterations(500);
        let r = run(&cfg, &space, &sphere).unwrap();
        let last = r.trace.last().unwrap();
        assert_eq!(last.t, 500);
        assert!((last.l_scale - 0.05).abs() / 0.05 < 1e-9);
    }

    #[test]
    fn constant_objective_keeps_flat_trace_and_radius() {
        let space = SearchSpace::uniform(3, -1.0, 1.0).unwrap();
        let flat = |_: &[f64]| 7.0;
        let cfg = EpoConfig {
            shrink_mode: ShrinkMode::OnImprovement,
            iterations: 50,
            ..EpoConfig::default()
        };
        let r = run(&cfg, &space, &flat).unwrap();
        assert!(r.trace.iter().all(|p| p.y_best == 7.0));
        assert!(r.trace.iter().all(|p| p.l_scale == cfg.l_scale0));
    }

    #[test]
    fn evaluation_count() {
        let space = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
        let cfg = EpoConfig::default().with_iterations(20).with_particles(7);
        assert_eq!(run(&cfg, &space, &sphere).unwrap().evaluations, 21 * 7);
        let cfg = cfg.with_elite(3);
        assert_eq!(run(&cfg, &space, &sphere).unwrap().evaluations, 21 * 7 + 20);
    }

    #[test]
    fn zero_radius_with_best_center_freezes_swarm() {
        let space = SearchSpace::uniform(2, -5.0, 5.0).unwrap();
        let cfg = EpoConfig::default().with_iterations(5);
        let mut opt = Optimizer::new(cfg.clone(), &space, &sphere).unwrap();
        opt.state.l_scale = 0.0;
        let y0 = opt.best().y;
        opt.step().unwrap();
        assert!(opt.state().positions.iter().all(|r| r == &opt.best().x));
        assert_eq!(opt.best().y, y0);
    }

    #[test]
    fn stepping_past_the_end_fails() {
        let space = SearchSpace::uniform(1, -1.0, 1.0).unwrap();
        let cfg = EpoConfig::default().with_iterations(2);
        let mut opt = Optimizer::new(cfg, &space, &sphere).unwrap();
        opt.step().unwrap();
        opt.step().unwrap();
        assert!(opt.step().is_err());
    }

    #[test]
    fn own_center_runs() {
        let space = SearchSpace::uniform(2, -5.0, 5.0).unwrap();
        let cfg = EpoConfig {
            perturb_center: PerturbCenter::Own,
            iterations: 50,
            ..EpoConfig::default()
        };
        let r = run(&cfg, &space, &sphere).unwrap();
        assert!(r.best.y <= r.trace[0].y_best);
    }

    #[test]
    fn bad_config_fails_before_evaluating() {
        let space = SearchSpace::uniform(2, -5.0, 5.0).unwrap();
        let calls = std::cell::Cell::new(0);
        let counting = |x: &[f64]| {
            calls.set(calls.get() + 1);
            sphere(x)
        };
        let cfg = EpoConfig {
            res: 600.0,
            ..EpoConfig::default()
        };
        assert!(run(&cfg, &space, &counting).is_err());
        assert_eq!(calls.get(), 0);
    }
}
