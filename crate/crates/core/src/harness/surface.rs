use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::seeded;
use crate::space::SearchSpace;

/// Objective values on a regular `resolution x resolution` lattice over a
/// 2-D box, row-major in `x0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceGrid {
    pub resolution: usize,
    pub points: Vec<[f64; 3]>,
}

fn lattice(lo: f64, hi: f64, i: usize, resolution: usize) -> f64 {
    lo + (hi - lo) * (i as f64 / (resolution - 1) as f64)
}

/// Evaluates `objective` on the lattice; noisy objectives draw from a fixed
/// seed so the grid is reproducible.
pub fn surface_grid<O: Objective + ?Sized>(
    space: &SearchSpace,
    objective: &O,
    resolution: usize,
) -> Result<SurfaceGrid> {
    if space.dims() != 2 {
        return Err(Error::InvalidSpace(format!(
            "surface grids need a 2-D space, got {} dimensions",
            space.dims()
        )));
    }
    if resolution < 2 {
        return Err(Error::InvalidConfig(format!(
            "resolution must be at least 2, got {resolution}"
        )));
    }
    let mut rng = seeded(0);
    let (lo, hi) = (space.lower(), space.upper());
    let mut points = Vec::with_capacity(resolution * resolution);
    for i in 0..resolution {
        let x0 = lattice(lo[0], hi[0], i, resolution);
        for j in 0..resolution {
            let x1 = lattice(lo[1], hi[1], j, resolution);
            points.push([x0, x1, objective.evaluate(&[x0, x1], &mut rng)]);
        }
    }
    Ok(SurfaceGrid { resolution, points })
}
