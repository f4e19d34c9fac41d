// Cantilever and three-bar truss under a static exterior penalty.

use perchopt::constrained::{cantilever_problem, solve, three_bar_truss_problem, TrussParams};
use perchopt::rng::derive_seed;
use perchopt::EpoConfig;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let problems = [
        cantilever_problem(),
        three_bar_truss_problem(TrussParams::default()),
    ];
    for problem in &problems {
        let mut best: Option<(f64, Vec<f64>)> = None;
        for i in 0..5 {
            let cfg = EpoConfig::default().with_seed(derive_seed(99, i));
            let out = solve(problem, &cfg)?;
            let s = out.solution;
            if s.feasible && best.as_ref().is_none_or(|(f, _)| s.objective < *f) {
                best = Some((s.objective, s.x));
            }
        }
        let (f, x) = best.expect("a feasible design");
        println!("{:<16} f = {f:.5}  x = {x:.4?}", problem.name());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
