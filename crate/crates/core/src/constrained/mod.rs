//! Constrained design problems solved through a static exterior penalty.
//!
//! The optimizer itself only sees a box. Inequality constraints `g_i(x) <= 0`
//! are folded into the objective as `rho * sum(max(0, g_i(x))^beta)`, which is
//! zero on feasible points, so the penalized landscape agrees with the raw
//! objective wherever the design is admissible.

mod oracle;
mod problems;

use std::borrow::Cow;
use std::fmt;

use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::epo::{run, EpoConfig, RunResult};
use crate::error::Result;
use crate::objective::Objective;
use crate::space::SearchSpace;

pub use oracle::{gear_train_exhaustive_oracle, gear_train_oracle_in, GearOracle};
pub use problems::{
    cantilever_problem, gear_ratio_error, gear_train_problem, three_bar_truss_problem, ProblemKind,
    ProblemOptions, TrussParams, GEAR_TARGET_RATIO,
};

/// A point counts as feasible when every constraint is at most this.
pub const FEASIBILITY_TOL: f64 = 1e-6;
pub const DEFAULT_PENALTY_RHO: f64 = 1e8;
pub const DEFAULT_PENALTY_BETA: f64 = 2.0;

type Func = Box<dyn Fn(&[f64]) -> f64 + Send + Sync>;

pub struct ConstrainedProblem {
    name: String,
    objective: Func,
    constraints: Vec<Func>,
    space: SearchSpace,
    penalty_rho: f64,
    penalty_beta: f64,
    integer_vars: Vec<usize>,
}

impl fmt::Debug for ConstrainedProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConstrainedProblem")
            .field("name", &self.name)
            .field("constraints", &self.constraints.len())
            .field("space", &self.space)
            .field("penalty_rho", &self.penalty_rho)
            .field("penalty_beta", &self.penalty_beta)
            .field("integer_vars", &self.integer_vars)
            .finish()
    }
}

impl ConstrainedProblem {
    pub fn new(
        name: impl Into<String>,
        space: SearchSpace,
        objective: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            objective: Box::new(objective),
            constraints: Vec::new(),
            space,
            penalty_rho: DEFAULT_PENALTY_RHO,
            penalty_beta: DEFAULT_PENALTY_BETA,
            integer_vars: Vec::new(),
        }
    }

    /// Adds `g(x) <= 0`.
    pub fn with_constraint(mut self, g: impl Fn(&[f64]) -> f64 + Send + Sync + 'static) -> Self {
        self.constraints.push(Box::new(g));
        self
    }

    pub fn with_penalty(mut self, rho: f64, beta: f64) -> Self {
        assert!(rho > 0.0, "penalty rho must be positive");
        assert!(beta >= 1.0, "penalty beta must be at least 1");
        self.penalty_rho = rho;
        self.penalty_beta = beta;
        self
    }

    /// Coordinates snapped to the nearest integer before every evaluation.
    pub fn with_integer_vars(mut self, vars: impl IntoIterator<Item = usize>) -> Self {
        self.integer_vars = vars.into_iter().collect();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn penalty(&self) -> (f64, f64) {
        (self.penalty_rho, self.penalty_beta)
    }

    pub fn integer_vars(&self) -> &[usize] {
        &self.integer_vars
    }

    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }

    /// `x` with integer coordinates rounded and kept inside the box.
    pub fn snap<'x>(&self, x: &'x [f64]) -> Cow<'x, [f64]> {
        if self.integer_vars.is_empty() {
            return Cow::Borrowed(x);
        }
        let mut v = x.to_vec();
        for &j in &self.integer_vars {
            let lo = self.space.lower()[j].ceil();
            let hi = self.space.upper()[j].floor();
            v[j] = v[j].round().clamp(lo, hi);
        }
        Cow::Owned(v)
    }

    pub fn objective_value(&self, x: &[f64]) -> f64 {
        (self.objective)(&self.snap(x))
    }

    pub fn constraint_values(&self, x: &[f64]) -> Vec<f64> {
        let x = self.snap(x);
        self.constraints.iter().map(|g| g(&x)).collect()
    }

    /// Largest constraint value, clipped at zero; infinite if any constraint
    /// is undefined at `x`.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        self.constraint_values(x).into_iter().fold(0.0, |m, g| {
            if g.is_nan() {
                f64::INFINITY
            } else {
                m.max(g)
            }
        })
    }

    pub fn is_feasible(&self, x: &[f64]) -> bool {
        self.max_violation(x) <= FEASIBILITY_TOL
    }

    pub fn penalized_value(&self, x: &[f64]) -> f64 {
        penalized_value(self, x)
    }

    pub fn report(&self, x: &[f64]) -> ConstrainedSolution {
        let snapped = self.snap(x).into_owned();
        let max_violation = self.max_violation(&snapped);
        ConstrainedSolution {
            objective: self.objective_value(&snapped),
            feasible: max_violation <= FEASIBILITY_TOL,
            max_violation,
            x: snapped,
        }
    }
}

/// `f(x) + rho * sum(max(0, g_i(x))^beta)`; anything undefined maps to +inf.
pub fn penalized_value(problem: &ConstrainedProblem, x: &[f64]) -> f64 {
    let x = problem.snap(x);
    let f = (problem.objective)(&x);
    if !f.is_finite() {
        return f64::INFINITY;
    }
    let mut excess = 0.0;
    for g in &problem.constraints {
        let v = g(&x);
        if !v.is_finite() {
            return f64::INFINITY;
        }
        if v > 0.0 {
            excess += v.powf(problem.penalty_beta);
        }
    }
    if excess == 0.0 {
        return f;
    }
    let total = f + problem.penalty_rho * excess;
    if total.is_finite() {
        total
    } else {
        f64::INFINITY
    }
}

impl Objective for ConstrainedProblem {
    fn evaluate(&self, x: &[f64], _rng: &mut dyn RngCore) -> f64 {
        penalized_value(self, x)
    }
}

/// A design as reported to the user: integer coordinates already rounded.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstrainedSolution {
    pub x: Vec<f64>,
    pub objective: f64,
    pub max_violation: f64,
    pub feasible: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstrainedRun {
    pub run: RunResult,
    pub solution: ConstrainedSolution,
}

/// Minimizes the penalized objective and reports the final incumbent.
pub fn solve(problem: &ConstrainedProblem, config: &EpoConfig) -> Result<ConstrainedRun> {
    let run = run(config, problem.space(), problem)?;
    let solution = problem.report(&run.best.x);
    Ok(ConstrainedRun { run, solution })
}
