// How often a run ends within 0.5 (max-norm) of the sphere's minimizer, as
// the run gets longer.

use perchopt::harness::{convergence_probability_study, StudyPlan};
use perchopt::{Benchmark, BenchmarkObjective};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f1 = BenchmarkObjective::new(Benchmark::F1, 2)?;
    let plan = StudyPlan {
        t_values: vec![0, 25, 50, 150, 500],
        ..StudyPlan::proof_setting()
    };
    let minimizer = f1.known_optimum().minimizer;
    let points =
        convergence_probability_study(&plan, &f1.space(), &f1, minimizer.as_deref(), "F1")?;
    for p in points {
        println!("t = {:>3}  rate {:.2} +- {:.2}", p.t, p.rate, p.std_error());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
