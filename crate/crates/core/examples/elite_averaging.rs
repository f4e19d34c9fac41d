// Averaging the best particles into an extra candidate each iteration.
//
// Small elites sharpen the search on g3; large ones drag the perch towards
// the middle of the flock and slow it down.

use perchopt::harness::{run_experiment, ExperimentPlan};
use perchopt::{Benchmark, BenchmarkObjective, EpoConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g3 = BenchmarkObjective::new(Benchmark::G3, 4)?;
    for n in [0, 1, 2, 5, 10] {
        let cfg = EpoConfig::default().with_elite(n).with_seed(11);
        let plan = ExperimentPlan::new("g3", cfg, 10);
        let exp = run_experiment(&plan, &g3.space(), &g3)?;
        println!(
            "elite {n:>2}: avg {:>10.3e}  median {:>10.3e}  evaluations/run {}",
            exp.stats.y_best_avg, exp.stats.y_best_median, exp.runs[0].evaluations
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
