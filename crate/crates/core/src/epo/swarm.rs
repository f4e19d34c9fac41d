//! Per-iteration swarm operations.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::config::{PerturbCenter, PerturbDist};
use crate::error::{Error, Result};
use crate::objective::{rank_key, Objective};
use crate::space::SearchSpace;

/// Incumbent: best coordinates found so far and the value observed there.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BestRecord {
    pub x: Vec<f64>,
    pub y: f64,
}

impl BestRecord {
    /// A record any finite value improves on.
    pub fn unset(dims: usize) -> Self {
        Self {
            x: vec![0.0; dims],
            y: f64::INFINITY,
        }
    }
}

/// Mutable state of one run between iterations.
#[derive(Debug, Clone, PartialEq)]
pub struct SwarmState {
    /// k x m particle coordinates.
    pub positions: Vec<Vec<f64>>,
    /// Objective values from the last evaluation, row-aligned with `positions`.
    pub values: Vec<f64>,
    pub l_scale: f64,
    pub eta: f64,
    /// Completed iterations.
    pub t: usize,
    /// Point the flock re-samples around in [`PerturbCenter::Best`] mode: the
    /// incumbent, or the elite centroid when elite averaging is on.
    pub anchor: Vec<f64>,
}

impl SwarmState {
    pub fn particles(&self) -> usize {
        self.positions.len()
    }
}

fn symmetric_unit<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    // random_range is half-open; reject the closed end to get (-1, 1).
    loop {
        let u: f64 = rng.random_range(-1.0..1.0);
        if u != -1.0 {
            return u;
        }
    }
}

/// Draws the k x m step matrix, every entry scaled by `l_scale`.
pub fn sample_perturbation<R: Rng + ?Sized>(
    particles: usize,
    dims: usize,
    l_scale: f64,
    dist: PerturbDist,
    rng: &mut R,
) -> Vec<Vec<f64>> {
    (0..particles)
        .map(|_| {
            (0..dims)
                .map(|_| match dist {
                    PerturbDist::UniformSymmetric => l_scale * symmetric_unit(rng),
                    PerturbDist::Gaussian => {
                        let z: f64 = rng.sample(StandardNormal);
                        l_scale * z
                    }
                })
                .collect()
        })
        .collect()
}

/// Moves every particle by its row of `delta`, then clamps into the box.
pub fn apply_step(
    positions: &mut [Vec<f64>],
    delta: &[Vec<f64>],
    space: &SearchSpace,
    center: PerturbCenter,
    anchor: &[f64],
) {
    debug_assert_eq!(positions.len(), delta.len());
    for (row, step) in positions.iter_mut().zip(delta) {
        match center {
            PerturbCenter::Own => {
                for (v, d) in row.iter_mut().zip(step) {
                    *v += d;
                }
            }
            PerturbCenter::Best => {
                for ((v, a), d) in row.iter_mut().zip(anchor).zip(step) {
                    *v = a + d;
                }
            }
        }
        space.clamp_in_place(row);
    }
}

/// Evaluates rows in index order. Non-finite results are kept as-is; selection
/// ranks them after every finite value.
pub fn evaluate_swarm<O: Objective + ?Sized>(
    positions: &[Vec<f64>],
    objective: &O,
    rng: &mut dyn rand::RngCore,
) -> Vec<f64> {
    positions
        .iter()
        .map(|row| objective.evaluate(row, rng))
        .collect()
}

/// Index of the smallest finite value, lowest index on ties.
pub fn argmin_finite(values: &[f64]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, &v) in values.iter().enumerate() {
        if !v.is_finite() {
            continue;
        }
        match best {
            Some(b) if values[b] <= v => {}
            _ => best = Some(i),
        }
    }
    best
}

/// Replaces the incumbent when the swarm's best finite value is strictly
/// lower. Returns whether it did.
pub fn update_best(values: &[f64], positions: &[Vec<f64>], best: &mut BestRecord) -> bool {
    match argmin_finite(values) {
        Some(i) if values[i] < best.y => {
            best.y = values[i];
            best.x.clone_from(&positions[i]);
            true
        }
        _ => false,
    }
}

/// Mean of the `n` best points among the incumbent and the current swarm.
///
/// The incumbent goes first in the pool and the sort is stable, so with
/// `n = 1` the centroid is exactly the point `update_best` would keep.
pub fn elite_centroid(
    values: &[f64],
    positions: &[Vec<f64>],
    n: usize,
    incumbent: &BestRecord,
) -> Result<Vec<f64>> {
    if n == 0 || n > positions.len() {
        return Err(Error::InvalidConfig(format!(
            "elite size must lie in 1..={}, got {n}",
            positions.len()
        )));
    }
    let mut pool: Vec<(f64, &[f64])> = Vec::with_capacity(positions.len() + 1);
    pool.push((rank_key(incumbent.y), &incumbent.x));
    pool.extend(
        values
            .iter()
            .zip(positions)
            .map(|(v, row)| (rank_key(*v), row.as_slice())),
    );
    pool.sort_by(|a, b| a.0.total_cmp(&b.0));

    let dims = incumbent.x.len();
    let mut centroid = vec![0.0; dims];
    for (_, row) in &pool[..n] {
        for (c, v) in centroid.iter_mut().zip(row.iter()) {
            *c += v;
        }
    }
    for c in &mut centroid {
        *c /= n as f64;
    }
    Ok(centroid)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EliteOutcome {
    pub centroid: Vec<f64>,
    pub centroid_value: f64,
    /// The incumbent improved this iteration (from the swarm or the centroid).
    pub improved: bool,
}

/// Best-tracking with elite averaging.
///
/// Sorts the pool best-first, averages the first `n` coordinate rows,
/// evaluates that centroid, and offers both the swarm and the centroid to the
/// incumbent through [`update_best`]. `best` must be the incumbent from
/// before this iteration's evaluation.
pub fn elite_average<O: Objective + ?Sized>(
    values: &[f64],
    positions: &[Vec<f64>],
    n: usize,
    objective: &O,
    best: &mut BestRecord,
    rng: &mut dyn rand::RngCore,
) -> Result<EliteOutcome> {
    let centroid = elite_centroid(values, positions, n, best)?;
    let mut improved = update_best(values, positions, best);
    let centroid_value = objective.evaluate(&centroid, rng);
    improved |= update_best(
        std::slice::from_ref(&centroid_value),
        std::slice::from_ref(&centroid),
        best,
    );
    Ok(EliteOutcome {
        centroid,
        centroid_value,
        improved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;

    fn sphere(x: &[f64]) -> f64 {
        x.iter().map(|v| v * v).sum()
    }

    #[test]
    fn zero_radius_gives_zero_step() {
        let mut rng = seeded(1);
        for dist in [PerturbDist::UniformSymmetric, PerturbDist::Gaussian] {
            let d = sample_perturbation(4, 3, 0.0, dist, &mut rng);
            assert!(d.iter().flatten().all(|v| *v == 0.0));
        }
    }

    #[test]
    fn uniform_entries_stay_in_open_interval() {
        let mut rng = seeded(42);
        let d = sample_perturbation(2, 2, 1.0, PerturbDist::UniformSymmetric, &mut rng);
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|row| row.len() == 2));
        assert!(d.iter().flatten().all(|v| *v > -1.0 && *v < 1.0));
    }

    #[test]
    fn steps_are_zero_mean() {
        let mut rng = seeded(3);
        for dist in [PerturbDist::UniformSymmetric, PerturbDist::Gaussian] {
            let d = sample_perturbation(1000, 100, 1.0, dist, &mut rng);
            let mean = d.iter().flatten().sum::<f64>() / 1e5;
            assert!(mean.abs() < 0.01, "{dist:?} mean {mean}");
        }
    }

    #[test]
    fn gaussian_spread_matches_scale() {
        let mut rng = seeded(4);
        let d = sample_perturbation(1000, 100, 2.5, PerturbDist::Gaussian, &mut rng);
        let var = d.iter().flatten().map(|v| v * v).sum::<f64>() / 1e5;
        assert!((var.sqrt() - 2.5).abs() < 0.03);
    }

    #[test]
    fn own_mode_identity_and_clamp() {
        let space = SearchSpace::uniform(2, -10.0, 10.0).unwrap();
        let mut pos = vec![vec![1.0, 2.0], vec![9.9, -3.0]];
        let before = pos.clone();
        apply_step(
            &mut pos,
            &[vec![0.0; 2], vec![0.0; 2]],
            &space,
            PerturbCenter::Own,
            &[0.0, 0.0],
        );
        assert_eq!(pos, before);
        apply_step(
            &mut pos,
            &[vec![0.0; 2], vec![5.0, 0.0]],
            &space,
            PerturbCenter::Own,
            &[0.0, 0.0],
        );
        assert_eq!(pos[1], vec![10.0, -3.0]);
    }

    #[test]
    fn best_mode_collapses_on_zero_step() {
        let space = SearchSpace::uniform(2, -10.0, 10.0).unwrap();
        let mut pos = vec![vec![1.0, 2.0], vec![9.9, -3.0], vec![0.0, 0.0]];
        let anchor = [4.0, -4.0];
        apply_step(
            &mut pos,
            &vec![vec![0.0; 2]; 3],
            &space,
            PerturbCenter::Best,
            &anchor,
        );
        assert!(pos.iter().all(|r| r == &anchor));
    }

    #[test]
    fn evaluation_examples() {
        let mut rng = seeded(0);
        assert_eq!(
            evaluate_swarm(&[vec![0.0; 30]], &sphere, &mut rng),
            vec![0.0]
        );
        assert_eq!(
            evaluate_swarm(&[vec![1.0, 2.0, 3.0]], &sphere, &mut rng),
            vec![14.0]
        );
    }

    #[test]
    fn update_best_examples() {
        let rows = vec![vec![0.0], vec![1.0], vec![2.0]];
        let mut best = BestRecord {
            x: vec![9.0],
            y: 4.0,
        };
        assert!(update_best(&[5.0, 3.0, 7.0], &rows, &mut best));
        assert_eq!(
            best,
            BestRecord {
                x: vec![1.0],
                y: 3.0
            }
        );

        let mut best = BestRecord {
            x: vec![9.0],
            y: 2.0,
        };
        assert!(!update_best(&[5.0, 5.0], &rows[..2], &mut best));
        assert_eq!(best.y, 2.0);

        let mut best = BestRecord {
            x: vec![9.0],
            y: 4.0,
        };
        update_best(&[3.0, 3.0], &rows[..2], &mut best);
        assert_eq!(best.x, vec![0.0]);
    }

    #[test]
    fn non_finite_values_never_win() {
        let rows = vec![vec![0.0], vec![1.0], vec![2.0]];
        let mut best = BestRecord {
            x: vec![9.0],
            y: 4.0,
        };
        assert!(!update_best(
            &[f64::NAN, f64::INFINITY, f64::NEG_INFINITY],
            &rows,
            &mut best
        ));
        assert_eq!(best.y, 4.0);
        assert!(update_best(
            &[f64::NAN, 1.0, f64::NEG_INFINITY],
            &rows,
            &mut best
        ));
        assert_eq!(best.x, vec![1.0]);
    }

    #[test]
    fn centroid_of_two_rows_is_midpoint() {
        let rows = vec![vec![0.0, 0.0], vec![2.0, 2.0]];
        let incumbent = BestRecord::unset(2);
        let c = elite_centroid(&[1.0, 2.0], &rows, 2, &incumbent).unwrap();
        assert_eq!(c, vec![1.0, 1.0]);
    }

    #[test]
    fn single_elite_matches_plain_update() {
        let rows = vec![vec![3.0, 1.0], vec![0.5, 0.5], vec![2.0, 2.0]];
        let values: Vec<f64> = rows.iter().map(|r| sphere(r)).collect();
        let mut rng = seeded(0);

        let mut plain = BestRecord {
            x: vec![1.0, 1.0],
            y: 2.0,
        };
        update_best(&values, &rows, &mut plain);
        let mut elite = BestRecord {
            x: vec![1.0, 1.0],
            y: 2.0,
        };
        let out = elite_average(&values, &rows, 1, &sphere, &mut elite, &mut rng).unwrap();
        assert_eq!(plain, elite);
        assert_eq!(out.centroid, elite.x);

        // incumbent better than every row: centroid stays on it
        let mut kept = BestRecord {
            x: vec![0.1, 0.0],
            y: 0.01,
        };
        let out = elite_average(&values, &rows, 1, &sphere, &mut kept, &mut rng).unwrap();
        assert_eq!(out.centroid, vec![0.1, 0.0]);
        assert!(!out.improved);
    }

    #[test]
    fn centroid_can_improve_incumbent() {
        // two rows straddling the optimum average onto it
        let rows = vec![vec![-1.0, 0.0], vec![1.0, 0.0]];
        let values = [1.0, 1.0];
        let mut best = BestRecord::unset(2);
        let mut rng = seeded(0);
        let out = elite_average(&values, &rows, 2, &sphere, &mut best, &mut rng).unwrap();
        assert!(out.improved);
        assert_eq!(
            best,
            BestRecord {
                x: vec![0.0, 0.0],
                y: 0.0
            }
        );
    }

    #[test]
    fn elite_size_bounds() {
        let rows = vec![vec![0.0]; 3];
        let inc = BestRecord::unset(1);
        assert!(elite_centroid(&[0.0; 3], &rows, 0, &inc).is_err());
        assert!(elite_centroid(&[0.0; 3], &rows, 4, &inc).is_err());
        assert!(elite_centroid(&[0.0; 3], &rows, 3, &inc).is_ok());
    }
}
