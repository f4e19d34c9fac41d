//! Benchmark functions: the g1..g6 comparison set and the F1..F10 suite.

use std::f64::consts::{E, PI};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::space::SearchSpace;

/// Location of the one-dimensional minimum of `-x sin(sqrt|x|)` on [-500, 500].
pub const SCHWEFEL_MINIMIZER: f64 = 420.968_746_359_982;
/// Value of `-x sin(sqrt|x|)` at [`SCHWEFEL_MINIMIZER`].
pub const SCHWEFEL_MIN_PER_DIM: f64 = -418.982_887_272_433_8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Benchmark {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
}

/// Griewank product term: the usual `cos(x_i / sqrt(i))` or the variant with
/// `cos(x_i / i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GriewankForm {
    #[default]
    Standard,
    Printed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KnownOptimum {
    pub value: f64,
    pub minimizer: Option<Vec<f64>>,
}

/// Registry row, as printed by `perchopt list`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObjectiveSpec {
    pub name: &'static str,
    pub default_dims: usize,
    pub bounds: (f64, f64),
    pub f_min: String,
    pub deterministic: bool,
}

impl Benchmark {
    pub const ALL: [Benchmark; 16] = [
        Benchmark::G1,
        Benchmark::G2,
        Benchmark::G3,
        Benchmark::G4,
        Benchmark::G5,
        Benchmark::G6,
        Benchmark::F1,
        Benchmark::F2,
        Benchmark::F3,
        Benchmark::F4,
        Benchmark::F5,
        Benchmark::F6,
        Benchmark::F7,
        Benchmark::F8,
        Benchmark::F9,
        Benchmark::F10,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Benchmark::G1 => "g1",
            Benchmark::G2 => "g2",
            Benchmark::G3 => "g3",
            Benchmark::G4 => "g4",
            Benchmark::G5 => "g5",
            Benchmark::G6 => "g6",
            Benchmark::F1 => "F1",
            Benchmark::F2 => "F2",
            Benchmark::F3 => "F3",
            Benchmark::F4 => "F4",
            Benchmark::F5 => "F5",
            Benchmark::F6 => "F6",
            Benchmark::F7 => "F7",
            Benchmark::F8 => "F8",
            Benchmark::F9 => "F9",
            Benchmark::F10 => "F10",
        }
    }

    pub fn default_dims(self) -> usize {
        match self {
            Benchmark::G5 => 2,
            _ => 30,
        }
    }

    /// Symmetric box `[lower, upper]` applied to every coordinate.
    pub fn bounds(self) -> (f64, f64) {
        match self {
            Benchmark::G1 | Benchmark::G2 | Benchmark::G3 | Benchmark::G5 | Benchmark::G6 => {
                (-10.0, 10.0)
            }
            Benchmark::G4 | Benchmark::F9 | Benchmark::F10 => (-5.12, 5.12),
            Benchmark::F1 | Benchmark::F3 | Benchmark::F4 | Benchmark::F6 => (-100.0, 100.0),
            Benchmark::F2 => (-10.0, 10.0),
            Benchmark::F5 => (-30.0, 30.0),
            Benchmark::F7 => (-1.28, 1.28),
            Benchmark::F8 => (-500.0, 500.0),
        }
    }

    pub fn is_deterministic(self) -> bool {
        self != Benchmark::F7
    }

    pub fn check_dims(self, dims: usize) -> Result<()> {
        let reason = match self {
            Benchmark::G5 if dims != 2 => "Goldstein-Price is defined in exactly 2 dimensions",
            Benchmark::F5 if dims < 2 => "Rosenbrock needs at least 2 dimensions",
            _ if dims == 0 => "at least one dimension is required",
            _ => return Ok(()),
        };
        Err(Error::Dimension {
            name: self.name().to_string(),
            dims,
            reason,
        })
    }

    pub fn space(self, dims: usize) -> Result<SearchSpace> {
        self.check_dims(dims)?;
        let (lo, hi) = self.bounds();
        SearchSpace::uniform(dims, lo, hi)
    }

    /// Noise-free value (F7 without its random term).
    pub fn evaluate(self, x: &[f64]) -> Result<f64> {
        self.check_dims(x.len())?;
        Ok(self.eval_unchecked(x, GriewankForm::Standard))
    }

    fn eval_unchecked(self, x: &[f64], form: GriewankForm) -> f64 {
        match self {
            Benchmark::G1 => x.iter().map(|v| (v + 2.0).powi(2)).sum::<f64>() + 2.0,
            Benchmark::G2 | Benchmark::F2 => {
                x.iter().map(|v| v * v).sum::<f64>() + x.iter().map(|v| v.abs()).product::<f64>()
            }
            Benchmark::G3 | Benchmark::F3 => x
                .iter()
                .scan(0.0, |acc, v| {
                    *acc += v;
                    Some(*acc * *acc)
                })
                .sum(),
            Benchmark::G4 | Benchmark::F10 => ackley(x),
            Benchmark::G5 => goldstein_price(x[0], x[1]),
            Benchmark::G6 => griewank(x, form),
            Benchmark::F1 => x.iter().map(|v| v * v).sum(),
            Benchmark::F4 => x.iter().fold(0.0, |m, v| m.max(v.abs())),
            Benchmark::F5 => x
                .windows(2)
                .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
                .sum(),
            Benchmark::F6 => x.iter().map(|v| (v + 0.5).floor().powi(2)).sum(),
            Benchmark::F7 => x
                .iter()
                .enumerate()
                .map(|(i, v)| (i + 1) as f64 * v.powi(4))
                .sum(),
            Benchmark::F8 => x.iter().map(|v| -v * v.abs().sqrt().sin()).sum(),
            Benchmark::F9 => x
                .iter()
                .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
                .sum(),
        }
    }

    pub fn known_optimum(self, dims: usize) -> Result<KnownOptimum> {
        self.check_dims(dims)?;
        let origin = || Some(vec![0.0; dims]);
        Ok(match self {
            Benchmark::G1 => KnownOptimum {
                value: 2.0,
                minimizer: Some(vec![-2.0; dims]),
            },
            Benchmark::G5 => KnownOptimum {
                value: 3.0,
                minimizer: Some(vec![0.0, -1.0]),
            },
            Benchmark::F5 => KnownOptimum {
                value: 0.0,
                minimizer: Some(vec![1.0; dims]),
            },
            Benchmark::F8 => KnownOptimum {
                value: SCHWEFEL_MIN_PER_DIM * dims as f64,
                minimizer: Some(vec![SCHWEFEL_MINIMIZER; dims]),
            },
            // F6 is flat on [-0.5, 0.5)^n; the origin is one of its minimizers.
            _ => KnownOptimum {
                value: 0.0,
                minimizer: origin(),
            },
        })
    }

    pub fn spec(self) -> ObjectiveSpec {
        let f_min = match self {
            Benchmark::G1 => "2".to_string(),
            Benchmark::G5 => "3".to_string(),
            Benchmark::F8 => format!("{SCHWEFEL_MIN_PER_DIM:.4}*dim"),
            Benchmark::F7 => "0 (+ noise)".to_string(),
            _ => "0".to_string(),
        };
        ObjectiveSpec {
            name: self.name(),
            default_dims: self.default_dims(),
            bounds: self.bounds(),
            f_min,
            deterministic: self.is_deterministic(),
        }
    }
}

impl fmt::Display for Benchmark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Benchmark {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Benchmark::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownObjective(s.to_string()))
    }
}

fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

fn goldstein_price(x1: f64, x2: f64) -> f64 {
    let a = 1.0
        + (x1 + x2 + 1.0).powi(2)
            * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
    let b = 30.0
        + (2.0 * x1 - 3.0 * x2).powi(2)
            * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2);
    a * b
}

fn griewank(x: &[f64], form: GriewankForm) -> f64 {
    let sum = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod = x
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let i = (i + 1) as f64;
            let div = match form {
                GriewankForm::Standard => i.sqrt(),
                GriewankForm::Printed => i,
            };
            (v / div).cos()
        })
        .product::<f64>();
    sum - prod + 1.0
}

/// Looks up `name` and evaluates it at `x` (noise-free for F7).
pub fn evaluate_benchmark(name: &str, x: &[f64]) -> Result<f64> {
    name.parse::<Benchmark>()?.evaluate(x)
}

pub fn known_optimum(name: &str, dims: usize) -> Result<KnownOptimum> {
    name.parse::<Benchmark>()?.known_optimum(dims)
}

/// A registered benchmark at a fixed dimension, ready to hand to the optimizer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchmarkObjective {
    kind: Benchmark,
    dims: usize,
    noise: bool,
    griewank: GriewankForm,
}

impl BenchmarkObjective {
    pub fn new(kind: Benchmark, dims: usize) -> Result<Self> {
        kind.check_dims(dims)?;
        Ok(Self {
            kind,
            dims,
            noise: true,
            griewank: GriewankForm::Standard,
        })
    }

    /// Drops F7's random term.
    pub fn noise_free(mut self) -> Self {
        self.noise = false;
        self
    }

    pub fn with_griewank_form(mut self, form: GriewankForm) -> Self {
        self.griewank = form;
        self
    }

    pub fn kind(&self) -> Benchmark {
        self.kind
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn space(&self) -> SearchSpace {
        self.kind
            .space(self.dims)
            .expect("dimension checked at construction")
    }

    pub fn known_optimum(&self) -> KnownOptimum {
        self.kind
            .known_optimum(self.dims)
            .expect("dimension checked at construction")
    }
}

impl Objective for BenchmarkObjective {
    fn evaluate(&self, x: &[f64], rng: &mut dyn RngCore) -> f64 {
        debug_assert_eq!(x.len(), self.dims);
        let base = self.kind.eval_unchecked(x, self.griewank);
        if self.kind == Benchmark::F7 && self.noise {
            base + rng.random::<f64>()
        } else {
            base
        }
    }

    fn is_deterministic(&self) -> bool {
        !(self.kind == Benchmark::F7 && self.noise)
    }
}
