//! Region partition of the first quadrant and the per-region tuning.

use std::borrow::Cow;
use std::fmt;

use crate::scalar::Scalar;
use crate::{schedules, Complex, Error, Result};

/// Which kernel evaluates a first-quadrant point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionLabel {
    /// Inner ellipse, power series.
    S,
    /// Between the two contours, downward Taylor scheme.
    R,
    /// Outside the outer contour, Laplace continued fraction.
    Q,
    /// Near-axis strip, upward Taylor expansion about the real point.
    RemedyStrip,
}

impl RegionLabel {
    pub const ALL: [RegionLabel; 4] = [Self::S, Self::R, Self::Q, Self::RemedyStrip];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::S => "S",
            Self::R => "R",
            Self::Q => "Q",
            Self::RemedyStrip => "RemedyStrip",
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for RegionLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|r| r.as_str().eq_ignore_ascii_case(s))
            .ok_or(Error::InvalidArgument("unknown region label"))
    }
}

/// Piecewise-linear function of `rho` through `(rho, value)` knots, held
/// constant outside the knot range.
#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    knots: Cow<'static, [(f64, f64)]>,
}

impl Schedule {
    pub const fn from_static(knots: &'static [(f64, f64)]) -> Self {
        Self { knots: Cow::Borrowed(knots) }
    }

    /// Knots must be sorted by strictly increasing `rho`.
    pub fn new(knots: Vec<(f64, f64)>) -> Result<Self> {
        if knots.is_empty() {
            return Err(Error::InvalidArgument("schedule needs at least one knot"));
        }
        if knots.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::InvalidArgument("schedule knots must increase in rho"));
        }
        Ok(Self { knots: Cow::Owned(knots) })
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    pub fn eval(&self, rho: f64) -> f64 {
        let k = &self.knots;
        let last = k.len() - 1;
        if rho <= k[0].0 {
            return k[0].1;
        }
        if rho >= k[last].0 {
            return k[last].1;
        }
        // Few knots; a linear scan beats a binary search here.
        let i = k.iter().position(|&(r, _)| r > rho).unwrap_or(last);
        let (r0, v0) = k[i - 1];
        let (r1, v1) = k[i];
        v0 + (v1 - v0) * (rho - r0) / (r1 - r0)
    }

    /// Value rounded up to an integer count.
    pub fn eval_count(&self, rho: f64) -> usize {
        // Knot values are small nonnegative counts.
        (self.eval(rho) - 1e-9).ceil().max(0.0) as usize
    }

    fn is_nonincreasing(&self) -> bool {
        self.knots.windows(2).all(|w| w[1].1 <= w[0].1)
    }
}

/// Region constants and calibrated term-count schedules.
#[derive(Debug, Clone, PartialEq)]
pub struct TuningParams<T> {
    /// Semi-axes of the elliptic metric.
    pub x0: T,
    pub y0: T,
    /// Contour L, the boundary of region S.
    pub rho_inner: T,
    /// Contour Gamma, the boundary between R and Q.
    pub rho_outer: T,
    pub strip_x_min: T,
    pub strip_x_max: T,
    pub strip_y_max: T,
    /// Degree of the upward Taylor polynomial in `iy`.
    pub upward_terms: usize,
    /// Prescribed significant digits the schedules aim at.
    pub target_digits: u32,
    /// Relative next-term cutoff of the region S series.
    pub series_tol: T,
    /// Continued-fraction convergents in Q.
    pub nu_schedule: Schedule,
    /// Shift `h` of the downward scheme in R.
    pub h_schedule: Schedule,
    /// Taylor length of the downward scheme in R.
    pub kapn_schedule: Schedule,
    /// Recurrence length of the downward scheme in R.
    pub nu_r_schedule: Schedule,
}

pub const NU_MIN: usize = 3;
pub const NU_MAX: usize = 16;

impl<T: Scalar> TuningParams<T> {
    /// The committed, calibrated tuning.
    pub fn standard() -> Self {
        Self {
            x0: T::lit(6.3),
            y0: T::lit(4.4),
            rho_inner: T::lit(0.292),
            rho_outer: T::lit(1.0),
            strip_x_min: T::lit(1.8396),
            strip_x_max: T::lit(20.0),
            strip_y_max: T::lit(0.031623),
            upward_terms: 7,
            target_digits: 14,
            series_tol: T::lit(1e-16),
            nu_schedule: Schedule::from_static(schedules::Q_NU),
            h_schedule: Schedule::from_static(schedules::R_H),
            kapn_schedule: Schedule::from_static(schedules::R_KAPN),
            nu_r_schedule: Schedule::from_static(schedules::R_NU),
        }
    }

    /// Checks the structural invariants of the constants and schedules.
    pub fn validate(&self) -> Result<()> {
        let zero = T::zero();
        if !(zero < self.rho_inner && self.rho_inner < self.rho_outer) {
            return Err(Error::InvalidArgument("need 0 < rho_inner < rho_outer"));
        }
        let corner = self.x0 * self.rho_inner;
        if (corner - self.strip_x_min).abs() > T::lit(5e-5) {
            return Err(Error::InvalidArgument("strip_x_min must equal x0 * rho_inner"));
        }
        if !(self.strip_x_min < self.strip_x_max && self.strip_y_max > zero) {
            return Err(Error::InvalidArgument("empty strip"));
        }
        if self.upward_terms == 0 || self.upward_terms >= crate::evaluator::MAX_UPWARD_TERMS {
            return Err(Error::InvalidArgument("upward_terms out of range"));
        }
        let nu = &self.nu_schedule;
        if !nu.is_nonincreasing()
            || nu.knots().iter().any(|&(_, v)| v < NU_MIN as f64 || v > NU_MAX as f64)
        {
            return Err(Error::InvalidArgument("Q schedule must be nonincreasing within [3, 16]"));
        }
        for s in [&self.h_schedule, &self.kapn_schedule, &self.nu_r_schedule] {
            if s.knots().iter().any(|&(_, v)| v < 0.0) {
                return Err(Error::InvalidArgument("R schedules must be nonnegative"));
            }
        }
        Ok(())
    }
}

impl<T: Scalar> Default for TuningParams<T> {
    fn default() -> Self {
        Self::standard()
    }
}

/// Elliptic region metric, evaluated on `(|x|, |y|)`.
#[inline]
pub fn rho<T: Scalar>(z: Complex<T>, p: &TuningParams<T>) -> T {
    (z.re.abs() / p.x0).hypot(z.im.abs() / p.y0)
}

#[inline]
pub(crate) fn in_strip<T: Scalar>(x: T, y: T, p: &TuningParams<T>) -> bool {
    p.strip_x_min <= x && x <= p.strip_x_max && y <= p.strip_y_max
}

/// Region of the first-quadrant image `(|x|, |y|)` of `z`.
///
/// The strip test runs first and wins over `rho`; the inner bound is
/// inclusive and the outer bound exclusive.
pub fn classify<T: Scalar>(z: Complex<T>, p: &TuningParams<T>, remedy_enabled: bool) -> RegionLabel {
    let (x, y) = (z.re.abs(), z.im.abs());
    if remedy_enabled && in_strip(x, y, p) {
        return RegionLabel::RemedyStrip;
    }
    let r = rho(z, p);
    if r <= p.rho_inner {
        RegionLabel::S
    } else if r < p.rho_outer {
        RegionLabel::R
    } else {
        RegionLabel::Q
    }
}

/// Number of continued-fraction convergents for a point of region Q.
pub fn nu_for<T: Scalar>(rho_val: T, p: &TuningParams<T>) -> usize {
    let r = rho_val.to_f64().unwrap_or(f64::INFINITY);
    p.nu_schedule.eval_count(r).clamp(NU_MIN, NU_MAX)
}

/// Parameters `(h, kapn, nu)` of the downward scheme for a point of region R.
pub fn r_params<T: Scalar>(rho_val: T, p: &TuningParams<T>) -> (T, usize, usize) {
    let r = rho_val.to_f64().unwrap_or(1.0);
    let h = T::lit(p.h_schedule.eval(r).max(0.0));
    let nu = p.nu_r_schedule.eval_count(r).max(1);
    let kapn = p.kapn_schedule.eval_count(r).min(nu - 1);
    (h, kapn, nu)
}
