use serde::{Deserialize, Serialize};

use super::problems::gear_ratio_error;

/// Exact optimum of the integer gear-train problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GearOracle {
    pub value: f64,
    /// Every `(x1, x2, x3, x4)` attaining `value`, in lexicographic order.
    pub tuples: Vec<[u32; 4]>,
}

/// Enumerates all 49^4 tooth-count tuples in [12, 60].
pub fn gear_train_exhaustive_oracle() -> GearOracle {
    gear_train_oracle_in(12, 60)
}

/// Enumerates `[lo, hi]^4`.
///
/// Integer ratios are divided exactly once, so tuples with equal ratios
/// compare equal in floating point and all of them are collected.
pub fn gear_train_oracle_in(lo: u32, hi: u32) -> GearOracle {
    assert!(lo >= 1 && lo <= hi, "need 1 <= lo <= hi");
    let mut best = f64::INFINITY;
    let mut tuples = Vec::new();
    for x1 in lo..=hi {
        for x2 in lo..=hi {
            for x3 in lo..=hi {
                for x4 in lo..=hi {
                    let v = gear_ratio_error(x1 as f64, x2 as f64, x3 as f64, x4 as f64);
                    if v < best {
                        best = v;
                        tuples.clear();
                        tuples.push([x1, x2, x3, x4]);
                    } else if v == best {
                        tuples.push([x1, x2, x3, x4]);
                    }
                }
            }
        }
    }
    GearOracle {
        value: best,
        tuples,
    }
}
