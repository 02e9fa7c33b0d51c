//! Fixed point sets shared by the calibration tool, the fixtures and the
//! acceptance suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grid::{Axis, GridSpec, Scale};

pub const GLOBAL_SEED: u64 = 0x0680_2011;
pub const GLOBAL_POINTS: usize = 10_000;
pub const GLOBAL_MAX: f64 = 30.0;
pub const DAWSON_POINTS: usize = 10_000;

/// 200 x 50 sweep of the near-axis strip, y logarithmic.
pub fn strip_grid() -> GridSpec {
    GridSpec::new(Axis::new(1.8396, 20.0, 200, Scale::Linear), Axis::new(1e-20, 0.031623, 50, Scale::Log))
        .expect("valid grid")
}

/// Uniform points in `[0, 30) x [0, 30)`.
pub fn global_points() -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(GLOBAL_SEED);
    (0..GLOBAL_POINTS).map(|_| (rng.gen::<f64>() * GLOBAL_MAX, rng.gen::<f64>() * GLOBAL_MAX)).collect()
}

/// Log-spaced abscissae from 1e-8 to 100.
pub fn dawson_points() -> Vec<f64> {
    Axis::new(1e-8, 100.0, DAWSON_POINTS, Scale::Log).values()
}

/// Uniform points drawn from the box `[x0, x1] x [y0, y1]` that satisfy `keep`.
pub fn sample_box(
    seed: u64,
    n: usize,
    (x0, x1): (f64, f64),
    (y0, y1): (f64, f64),
    keep: impl Fn(f64, f64) -> bool,
) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = x0 + (x1 - x0) * rng.gen::<f64>();
        let y = y0 + (y1 - y0) * rng.gen::<f64>();
        if keep(x, y) {
            out.push((x, y));
        }
    }
    out
}
