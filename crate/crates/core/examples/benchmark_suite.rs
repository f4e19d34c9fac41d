// Every registered benchmark at a small dimension, against its known minimum.

use perchopt::harness::{run_experiment, ExperimentPlan};
use perchopt::{Benchmark, BenchmarkObjective, EpoConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:<5} {:>4} {:>14} {:>14}",
        "name", "dims", "median", "known min"
    );
    for kind in Benchmark::ALL {
        let dims = if kind == Benchmark::G5 { 2 } else { 4 };
        let obj = BenchmarkObjective::new(kind, dims)?;
        let plan = ExperimentPlan::new(kind.name(), EpoConfig::default().with_seed(3), 5);
        let exp = run_experiment(&plan, &obj.space(), &obj)?;
        println!(
            "{:<5} {:>4} {:>14.4e} {:>14.4e}",
            kind.name(),
            dims,
            exp.stats.y_best_median,
            obj.known_optimum().value
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
