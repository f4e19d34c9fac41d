// Median convergence traces for several eta ranges, written side by side.

use perchopt::harness::{eta_sweep, write_sweep_csv, ExperimentPlan};
use perchopt::{Benchmark, BenchmarkObjective, EpoConfig, EtaSchedule};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f4 = BenchmarkObjective::new(Benchmark::F4, 2)?;
    let cfg = EpoConfig {
        l_scale0: 100.0,
        ..EpoConfig::default()
    }
    .with_seed(5);
    let plan = ExperimentPlan::new("F4", cfg, 10);
    let schedules = [
        EtaSchedule::Derived,
        EtaSchedule::Linear {
            eta_max: 0.9,
            eta_min: 0.8,
        },
        EtaSchedule::Linear {
            eta_max: 0.9,
            eta_min: 0.7,
        },
        EtaSchedule::Linear {
            eta_max: 0.9,
            eta_min: 0.6,
        },
    ];
    let entries = eta_sweep(&plan, &f4.space(), &f4, &schedules);
    let target = *entries[0].median_trace().unwrap().last().unwrap();
    for e in &entries {
        let trace = e.median_trace().unwrap();
        println!(
            "{:<8} median at t=100 {:>10.3e}  at t=500 {:>10.3e}  reaches {:.1e} at t={:?}",
            e.label(),
            trace[100],
            trace[500],
            target,
            e.iterations_to_reach(target)
        );
    }
    let path = std::env::temp_dir().join("perchopt-eta-sweep.csv");
    write_sweep_csv(&entries, &path)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
