//! Eagle perching optimizer.
//!
//! A derivative-free swarm search for box-bounded minimization. The flock is
//! re-sampled around the best point found so far with a radius that shrinks
//! every iteration, moving from exploration of the whole box to refinement of
//! one neighbourhood.
//!
//! ```
//! use perchopt::{run, EpoConfig, SearchSpace};
//!
//! let space = SearchSpace::uniform(2, -5.0, 5.0).unwrap();
//! let sphere = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>();
//! let result = run(&EpoConfig::default().with_seed(7), &space, &sphere).unwrap();
//! assert!(result.best.y < 1e-8);
//! ```
//!
//! Beyond the optimizer the crate ships the usual benchmark functions
//! ([`objectives`]), penalty-constrained engineering problems
//! ([`constrained`]), a seeded experiment harness with CSV/JSON export
//! ([`harness`]) and a random-search yardstick ([`baseline`]).

pub mod baseline;
pub mod cli;
pub mod constrained;
pub mod epo;
mod error;
pub mod harness;
pub mod objective;
pub mod objectives;
pub mod rng;
pub mod space;

pub use epo::{
    run, EpoConfig, EtaSchedule, Optimizer, PerturbCenter, PerturbDist, RunResult, ShrinkMode,
};
pub use error::{Error, Result};
pub use objective::Objective;
pub use objectives::{Benchmark, BenchmarkObjective};
pub use space::SearchSpace;
