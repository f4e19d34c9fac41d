// The optimizer against uniform random search with the same budget.

use perchopt::baseline::random_search_matching;
use perchopt::{run, Benchmark, BenchmarkObjective, EpoConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for kind in [Benchmark::F1, Benchmark::F5, Benchmark::F9, Benchmark::F10] {
        let obj = BenchmarkObjective::new(kind, 5)?;
        let cfg = EpoConfig::default().with_seed(8);
        let epo = run(&cfg, &obj.space(), &obj)?;
        let rs = random_search_matching(&cfg, &obj.space(), &obj)?;
        println!(
            "{:<4} epo {:>11.3e}   random search {:>11.3e}   ({} evaluations each)",
            kind.name(),
            epo.best.y,
            rs.best.y,
            rs.evaluations
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
