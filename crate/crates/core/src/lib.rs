//! Faddeyeva function `w(z) = e^{-z^2} erfc(-iz)` in double precision.
//!
//! The first quadrant is split into four evaluation regions by the elliptic
//! metric `rho(z) = sqrt((x/6.3)^2 + (y/4.4)^2)`:
//!
//! | Region | Where | Kernel |
//! |--------|-------|--------|
//! | `S` | `rho <= 0.292` | power series (even part in closed form) |
//! | `R` | `0.292 < rho < 1` | downward Taylor scheme with a shifted continued fraction |
//! | `Q` | `rho >= 1` | Laplace continued fraction, 3 to 16 convergents |
//! | `RemedyStrip` | `1.8396 <= x <= 20`, `y <= 0.031623` | upward Taylor expansion about `z0 = x` seeded by Dawson's integral |
//!
//! The strip takes precedence over `rho` and can be switched off to reproduce
//! the historical loss of accuracy near the real axis. The rest of the plane
//! is reached through `w(-conj z) = conj w(z)` and `w(-z) = 2e^{-z^2} - w(z)`.
//!
//! Everything is generic over [`Scalar`] (f32/f64); the tuning tables were
//! calibrated for f64. Concrete aliases for f64 are exported at the root.
//!
//! ```
//! use faddeyeva::{faddeyeva, Complex64, RegionLabel};
//!
//! let r = faddeyeva(Complex64::new(6.3, 1e-6)).unwrap();
//! assert_eq!(r.region, RegionLabel::RemedyStrip);
//! assert_eq!(r.terms_used, 7);
//! ```

pub mod dawson;
mod dawson_table;
pub mod evaluator;
pub mod regions;
mod scalar;
mod schedules;

pub use dawson::{dawson, dawson_with_method, DawsonMethod, DawsonResult};
pub use evaluator::{
    exp_neg_sq, extend_full_plane, taylor_coeffs, w, w_cf, w_downward, w_in_region,
    w_outer, w_powerseries, w_real_axis, w_upward, EvalOptions, EvalResult, Status, TaylorCoeffs,
    MAX_UPWARD_TERMS,
};
pub use regions::{classify, nu_for, r_params, rho, RegionLabel, Schedule, TuningParams};
pub use scalar::Scalar;

pub use num_complex::Complex;

/// Version tag of the committed tuning tables (schedules and Dawson table).
pub const TUNING_TABLE_VERSION: &str = schedules::TABLE_VERSION;

/// A complex argument or value of `w`.
pub type ComplexValue<T> = Complex<T>;

pub type Complex64 = Complex<f64>;
pub type Complex32 = Complex<f32>;
pub type TuningParams64 = TuningParams<f64>;
pub type EvalResult64 = EvalResult<f64>;
pub type TaylorCoeffs64 = TaylorCoeffs<f64>;

/// Errors raised for arguments outside a function's domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// `w(z)` in f64 with the standard tuning and the near-axis strip enabled.
pub fn faddeyeva(z: Complex64) -> Result<EvalResult64> {
    w(z, &TuningParams64::standard(), EvalOptions::default())
}
