//! Repeated runs, aggregation, studies and file export.
//!
//! Runs of one experiment are independent and seeded from the base seed by
//! index. They may execute on several threads; results are gathered in index
//! order so the output never depends on the thread count.

mod experiment;
mod export;
mod stats;
mod study;
mod surface;
mod sweep;

pub use experiment::{run_experiment, Experiment, ExperimentPlan};
pub use export::{
    export_results, fmt_f64, output_file_name, read_results_json, write_results_csv,
    write_results_json, write_surface_csv, write_sweep_csv, write_trace_csv, write_traces,
    ExportFormat,
};
pub use stats::{median, ExperimentStats};
pub use study::{convergence_probability_study, max_abs_distance, StudyPlan, StudyPoint};
pub use surface::{surface_grid, SurfaceGrid};
pub use sweep::{eta_sweep, SweepEntry};
