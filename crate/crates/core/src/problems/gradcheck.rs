use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::objective::Objective;

/// Admission threshold for cataloged gradients.
pub const GRADIENT_TOLERANCE: f64 = 1e-5;

/// Largest per-coordinate discrepancy between the analytic gradient and a
/// central difference with step `h·(1 + |xᵢ|)`, measured as
/// `|fdᵢ − gᵢ| / (1 + |gᵢ|)`.
pub fn check_gradient<O: Objective + ?Sized>(obj: &O, x: &[f64], h: f64) -> f64 {
    let mut g = vec![0.0; x.len()];
    obj.gradient(x, &mut g);
    let mut probe = x.to_vec();
    let mut worst: f64 = 0.0;
    for i in 0..x.len() {
        let hi = h * (1.0 + x[i].abs());
        probe[i] = x[i] + hi;
        let fp = obj.value(&probe);
        probe[i] = x[i] - hi;
        let fm = obj.value(&probe);
        probe[i] = x[i];
        let fd = (fp - fm) / (2.0 * hi);
        let err = (fd - g[i]).abs() / (1.0 + g[i].abs());
        // NaN must not pass silently
        worst = if err.is_nan() {
            f64::INFINITY
        } else {
            worst.max(err)
        };
    }
    worst
}

/// `x + u` with `u` uniform in `[−scale, scale]ⁿ`, reproducible from `seed`.
pub fn perturbed_point(x: &[f64], seed: u64, scale: f64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    x.iter()
        .map(|v| v + rng.gen_range(-scale..=scale))
        .collect()
}
