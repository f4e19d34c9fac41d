use std::f64::consts::SQRT_2;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ConstrainedProblem, DEFAULT_PENALTY_BETA, DEFAULT_PENALTY_RHO};
use crate::error::{Error, Result};
use crate::space::SearchSpace;

/// Five stacked hollow square sections; minimize weight under a tip
/// deflection limit.
pub fn cantilever_problem() -> ConstrainedProblem {
    let space = SearchSpace::uniform(5, 0.01, 100.0).expect("static bounds");
    ConstrainedProblem::new("cantilever", space, |x: &[f64]| {
        0.6224 * x.iter().sum::<f64>()
    })
    .with_constraint(|x: &[f64]| {
        61.0 / x[0].powi(3)
            + 37.0 / x[1].powi(3)
            + 19.0 / x[2].powi(3)
            + 7.0 / x[3].powi(3)
            + 1.0 / x[4].powi(3)
            - 1.0
    })
}

/// Bar length, load and allowable stress of the three-bar truss.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrussParams {
    pub l: f64,
    pub p: f64,
    pub sigma: f64,
}

impl Default for TrussParams {
    fn default() -> Self {
        Self {
            l: 1.0,
            p: 2.0,
            sigma: 2.0,
        }
    }
}

/// Minimum-volume three-bar truss under stress limits.
pub fn three_bar_truss_problem(params: TrussParams) -> ConstrainedProblem {
    let TrussParams { l, p, sigma } = params;
    assert!(
        l > 0.0 && p > 0.0 && sigma > 0.0,
        "truss constants must be positive"
    );
    let den = |x: &[f64]| SQRT_2 * x[0] * x[0] + 2.0 * x[0] * x[1];
    let space = SearchSpace::uniform(2, 0.0, 1.0).expect("static bounds");
    ConstrainedProblem::new("three-bar-truss", space, move |x: &[f64]| {
        (2.0 * SQRT_2 * x[0] + x[1]) * l
    })
    .with_constraint(move |x: &[f64]| (SQRT_2 * x[0] + x[1]) * p / den(x) - sigma)
    .with_constraint(move |x: &[f64]| x[1] * p / den(x) - sigma)
    .with_constraint(move |x: &[f64]| p / (SQRT_2 * x[1] + x[0]) - sigma)
}

pub const GEAR_TARGET_RATIO: f64 = 1.0 / 6.931;

/// Squared miss of the gear ratio `x3 x2 / (x1 x4)` against 1/6.931.
pub fn gear_ratio_error(x1: f64, x2: f64, x3: f64, x4: f64) -> f64 {
    (GEAR_TARGET_RATIO - (x3 * x2) / (x1 * x4)).powi(2)
}

/// Four tooth counts in [12, 60], rounded to integers on evaluation.
pub fn gear_train_problem() -> ConstrainedProblem {
    let space = SearchSpace::uniform(4, 12.0, 60.0).expect("static bounds");
    ConstrainedProblem::new("gear-train", space, |x: &[f64]| {
        gear_ratio_error(x[0], x[1], x[2], x[3])
    })
    .with_integer_vars(0..4)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProblemKind {
    Cantilever,
    ThreeBarTruss,
    GearTrain,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 3] = [
        ProblemKind::Cantilever,
        ProblemKind::ThreeBarTruss,
        ProblemKind::GearTrain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Cantilever => "cantilever",
            ProblemKind::ThreeBarTruss => "three-bar-truss",
            ProblemKind::GearTrain => "gear-train",
        }
    }

    pub fn build(self, options: &ProblemOptions) -> ConstrainedProblem {
        let problem = match self {
            ProblemKind::Cantilever => cantilever_problem(),
            ProblemKind::ThreeBarTruss => three_bar_truss_problem(options.truss),
            ProblemKind::GearTrain => gear_train_problem(),
        };
        problem.with_penalty(options.penalty_rho, options.penalty_beta)
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProblemKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownProblem(s.to_string()))
    }
}

/// Tunable constants shared by the named problems.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProblemOptions {
    pub truss: TrussParams,
    pub penalty_rho: f64,
    pub penalty_beta: f64,
}

impl Default for ProblemOptions {
    fn default() -> Self {
        Self {
            truss: TrussParams::default(),
            penalty_rho: DEFAULT_PENALTY_RHO,
            penalty_beta: DEFAULT_PENALTY_BETA,
        }
    }
}
