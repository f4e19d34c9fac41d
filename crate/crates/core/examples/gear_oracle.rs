// Integer gear train: the optimizer with rounding against exhaustive search.

use perchopt::constrained::{gear_train_exhaustive_oracle, gear_train_problem, solve};
use perchopt::EpoConfig;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let oracle = gear_train_exhaustive_oracle();
    println!(
        "exhaustive optimum {:.4e} at {:?}",
        oracle.value, oracle.tuples
    );

    let problem = gear_train_problem();
    for seed in 0..5 {
        let out = solve(&problem, &EpoConfig::default().with_seed(seed))?;
        println!(
            "seed {seed}: f = {:.4e}  teeth = {:?}",
            out.solution.objective, out.solution.x
        );
        assert!(out.solution.objective >= oracle.value);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
