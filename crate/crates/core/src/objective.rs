use rand::RngCore;

/// A black-box function to minimize.
///
/// The random stream belongs to the run doing the evaluation; deterministic
/// objectives ignore it, noisy ones (F7) draw from it so runs stay
/// reproducible.
pub trait Objective {
    fn evaluate(&self, x: &[f64], rng: &mut dyn RngCore) -> f64;

    fn is_deterministic(&self) -> bool {
        true
    }
}

impl<F> Objective for F
where
    F: Fn(&[f64]) -> f64,
{
    fn evaluate(&self, x: &[f64], _rng: &mut dyn RngCore) -> f64 {
        self(x)
    }
}

/// Selection key: anything non-finite ranks after every finite value.
#[inline]
pub(crate) fn rank_key(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else {
        f64::INFINITY
    }
}
