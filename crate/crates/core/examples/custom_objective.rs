// Plugging in your own objective: a closure, or a type implementing
// `Objective` when it needs the run's random stream.

use perchopt::{run, EpoConfig, Objective, SearchSpace};
use rand::{Rng, RngCore};

/// Himmelblau's function observed through small uniform noise.
struct NoisyHimmelblau {
    amplitude: f64,
}

impl Objective for NoisyHimmelblau {
    fn evaluate(&self, x: &[f64], rng: &mut dyn RngCore) -> f64 {
        let (a, b) = (x[0], x[1]);
        let f = (a * a + b - 11.0).powi(2) + (a + b * b - 7.0).powi(2);
        f + self.amplitude * rng.random::<f64>()
    }

    fn is_deterministic(&self) -> bool {
        false
    }
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let space = SearchSpace::new(vec![-5.0, -5.0], vec![5.0, 5.0])?;

    let booth = |x: &[f64]| (x[0] + 2.0 * x[1] - 7.0).powi(2) + (2.0 * x[0] + x[1] - 5.0).powi(2);
    let r = run(&EpoConfig::default().with_seed(1), &space, &booth)?;
    println!("booth       {:.3e} at {:.6?}", r.best.y, r.best.x);

    let noisy = NoisyHimmelblau { amplitude: 1e-3 };
    let r = run(&EpoConfig::default().with_seed(1), &space, &noisy)?;
    println!("himmelblau  {:.3e} at {:.4?}", r.best.y, r.best.x);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
