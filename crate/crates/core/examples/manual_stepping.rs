// Driving the optimizer one iteration at a time and watching the flock.

use perchopt::{Benchmark, BenchmarkObjective, EpoConfig, Optimizer};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ackley = BenchmarkObjective::new(Benchmark::F10, 2)?;
    let space = ackley.space();
    let cfg = EpoConfig {
        l_scale0: 5.0,
        ..EpoConfig::default()
    }
    .with_iterations(200)
    .with_seed(4);

    let mut opt = Optimizer::new(cfg, &space, &ackley)?;
    while !opt.is_finished() {
        let step = opt.step()?;
        let s = opt.state();
        if s.t % 40 == 0 {
            println!(
                "t {:>3}  l_scale {:>9.3e}  eta {:.3}  y_best {:>9.3e}  improved {}",
                s.t,
                s.l_scale,
                s.eta,
                opt.best().y,
                step.improved
            );
        }
    }
    let result = opt.into_result();
    println!(
        "final {:.3e} after {} evaluations",
        result.best.y, result.evaluations
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
