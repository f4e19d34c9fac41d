//! The eagle perching optimizer.
//!
//! A flock of `k` particles is scattered over the search box. Each iteration
//! every particle is re-sampled around the current perch (the incumbent, or
//! the elite centroid) with steps scaled by the radius `l_scale`, the flock is
//! evaluated, and the incumbent is replaced whenever a strictly better point
//! shows up. The radius then decays by a factor `eta`, so the search moves
//! from surveying the whole box to refining a small neighbourhood.
//!
//! Three variants are available through [`EpoConfig`]:
//!
//! * constant `eta` derived from a target resolution ([`EtaSchedule::Derived`]),
//! * `eta` ramped linearly over the run ([`EtaSchedule::Linear`], the default),
//! * either of the above plus elite averaging (`elite_count > 0`).

mod config;
mod optimizer;
mod schedule;
mod swarm;

pub use config::{EpoConfig, PerturbCenter, PerturbDist, ShrinkMode};
pub use optimizer::{epo_step, run, Optimizer, RunResult, StepReport, TracePoint};
pub use schedule::{derive_eta, linear_eta, shrink_scale, EtaSchedule};
pub use swarm::{
    apply_step, argmin_finite, elite_average, elite_centroid, evaluate_swarm, sample_perturbation,
    update_best, BestRecord, EliteOutcome, SwarmState,
};
