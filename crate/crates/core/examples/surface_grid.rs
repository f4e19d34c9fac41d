// A plot-ready lattice of the 2-D Rastrigin function.

use perchopt::harness::{surface_grid, write_surface_csv};
use perchopt::{Benchmark, BenchmarkObjective};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f9 = BenchmarkObjective::new(Benchmark::F9, 2)?;
    let grid = surface_grid(&f9.space(), &f9, 101)?;
    let (lo, hi) = grid
        .points
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
            (lo.min(p[2]), hi.max(p[2]))
        });
    println!("{} nodes, f in [{lo}, {hi:.3}]", grid.points.len());

    let path = std::env::temp_dir().join("perchopt-f9-surface.csv");
    write_surface_csv(&grid, &path)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
