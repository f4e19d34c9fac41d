// Minimize a 10-D sphere with the default settings.

use perchopt::{run, EpoConfig, SearchSpace};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let space = SearchSpace::uniform(10, -100.0, 100.0)?;
    let sphere = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>();

    let result = run(&EpoConfig::default().with_seed(42), &space, &sphere)?;

    println!("best value   {:e}", result.best.y);
    println!("best point   {:?}", result.best.x);
    println!("evaluations  {}", result.evaluations);
    assert!(result.best.y < 1e-6);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
