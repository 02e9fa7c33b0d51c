//! Evaluation kernels for `w(z)`, the dispatcher and the symmetry extension.

use crate::dawson::dawson_pair;
use crate::regions::{classify, nu_for, r_params, rho, RegionLabel, TuningParams};
use crate::scalar::{exp_neg_square, two_prod, two_sum, Scalar};
use crate::{Complex, Error, Result};

/// Upper bound (exclusive) on the degree of the upward Taylor polynomial.
pub const MAX_UPWARD_TERMS: usize = 24;

/// Beyond this `rho` the continued fraction would overflow `|t|^2`; the
/// leading asymptotic term `i / (sqrt(pi) z)` is exact to working precision.
const FAR_FIELD_RHO: f64 = 1e150;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalOptions {
    /// Use the upward Taylor strip near the real axis.
    pub remedy_enabled: bool,
}

impl EvalOptions {
    pub fn with_remedy(remedy_enabled: bool) -> Self {
        Self { remedy_enabled }
    }
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self { remedy_enabled: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// `2e^{-z^2}` left the representable range (lower half-plane only).
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T> {
    pub value: Complex<T>,
    /// Kernel used for the first-quadrant image of the argument.
    pub region: RegionLabel,
    /// Series terms, convergents or recurrence steps spent by that kernel.
    pub terms_used: usize,
    pub status: Status,
}

/// Taylor coefficients of `w` about a real point `x`.
///
/// `c[n] = w^(n)(x) / n!` and `d[n] = F^(n)(x) / n!`, so that
/// `c[n] = b[n] + (2/sqrt(pi)) i d[n]` with `b[n]` the coefficients of `e^{-t^2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorCoeffs<T> {
    pub c: Vec<Complex<T>>,
    pub d: Vec<T>,
}

#[inline(always)]
fn two_over_sqrt_pi<T: Scalar>() -> T {
    T::FRAC_2_SQRT_PI()
}

/// `w(z)` for any finite `z`.
pub fn w<T: Scalar>(z: Complex<T>, p: &TuningParams<T>, opts: EvalOptions) -> Result<EvalResult<T>> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidArgument("w: argument must be finite"));
    }
    // abs() also folds -0.0 onto +0.0.
    let q = Complex::new(z.re.abs(), z.im.abs());
    let region = classify(q, p, opts.remedy_enabled);
    let (wq, terms_used) = w_in_region(q, region, p);
    let (value, status) = extend_full_plane(z, wq);
    Ok(EvalResult { value, region, terms_used, status })
}

/// Runs the kernel of `region` on a first-quadrant point, whatever region
/// the point actually belongs to. Returns the value and the work count.
pub fn w_in_region<T: Scalar>(q: Complex<T>, region: RegionLabel, p: &TuningParams<T>) -> (Complex<T>, usize) {
    match region {
        RegionLabel::S => w_powerseries(q, p.series_tol),
        RegionLabel::R => {
            let (h, kapn, nu) = r_params(rho(q, p), p);
            (w_downward(q, h, kapn, nu), nu)
        }
        RegionLabel::Q => {
            let nu = nu_for(rho(q, p), p);
            (w_outer(q, nu, p), nu)
        }
        RegionLabel::RemedyStrip => (w_upward(q, p), p.upward_terms),
    }
}

/// Region-Q kernel: the `nu`-th convergent, plus the `e^{-z^2}` term a
/// finite fraction cannot carry where that term dominates `Re w`, i.e. on
/// the axis and, beyond the strip, just above it.
pub fn w_outer<T: Scalar>(q: Complex<T>, nu: usize, p: &TuningParams<T>) -> Complex<T> {
    if rho(q, p) > T::lit(FAR_FIELD_RHO) {
        return far_field(q);
    }
    let mut v = w_cf(q, nu);
    if q.im == T::zero() {
        v.re = exp_neg_square(q.re);
    } else if q.re > p.strip_x_max && q.im <= p.strip_y_max {
        v = v + exp_neg_sq(q);
    }
    v
}

/// Maps a first-quadrant value `w(|x| + i|y|)` back to `w(z)`.
///
/// `w(-conj z) = conj w(z)` covers `x < 0`; below the axis
/// `w(z) = 2e^{-z^2} - w(-z)`, which reports [`Status::Overflow`] with
/// infinities carrying the signs of `e^{-z^2}` once that term is out of range.
pub fn extend_full_plane<T: Scalar>(z: Complex<T>, w_first_quadrant: Complex<T>) -> (Complex<T>, Status) {
    let (x, y) = (z.re, z.im);
    if !(y < T::zero()) {
        // sign bit, so that -0 + iy mirrors +0 + iy exactly
        let v = if x.is_sign_negative() { w_first_quadrant.conj() } else { w_first_quadrant };
        return (v, Status::Ok);
    }

    // -z = -x + i|y|
    let w_minus_z = if x > T::zero() { w_first_quadrant.conj() } else { w_first_quadrant };
    let growth = (y - x) * (y + x);
    let limit = T::max_value().ln() - T::LN_2();
    if growth > limit {
        return (overflow_value(z), Status::Overflow);
    }
    let two = T::lit(2.0);
    let v = exp_neg_sq(z) * two - w_minus_z;
    if v.re.is_finite() && v.im.is_finite() {
        (v, Status::Ok)
    } else {
        (overflow_value(z), Status::Overflow)
    }
}

fn overflow_value<T: Scalar>(z: Complex<T>) -> Complex<T> {
    let (s, c) = (T::lit(-2.0) * z.re * z.im).sin_cos();
    let inf = |t: T| {
        if t == T::zero() {
            T::zero()
        } else {
            T::infinity().copysign(t)
        }
    };
    Complex::new(inf(c), inf(s))
}

/// `e^{-z^2}` with the exponent and the phase carried to double length.
pub fn exp_neg_sq<T: Scalar>(z: Complex<T>) -> Complex<T> {
    let (x, y) = (z.re, z.im);
    let (xx, xx_lo) = two_prod(x, x);
    let (yy, yy_lo) = two_prod(y, y);
    let (a, a_err) = two_sum(yy, -xx);
    let a_lo = a_err + (yy_lo - xx_lo);
    let mag = a.exp();
    let mag_lo = mag * a_lo;

    let (b, b_lo) = two_prod(x, y);
    let two = T::lit(2.0);
    let (s, c) = (-two * b).sin_cos();
    let th_lo = -two * b_lo;
    // mag * c and mag * s exactly, all first-order corrections in the tails
    let (re, re_lo) = two_prod(mag, c);
    let (im, im_lo) = two_prod(mag, s);
    Complex::new(
        re + (re_lo + (mag_lo * c - mag * s * th_lo)),
        im + (im_lo + (mag_lo * s + mag * c * th_lo)),
    )
}

/// Power series `Σ (iz)^n / Γ(n/2 + 1)`, summed as the closed-form even part
/// `e^{-z^2}` plus the odd part `(2iz/sqrt(pi)) Σ (-2z^2)^k / (2k+1)!!`.
///
/// The odd sum stops before the first term below `tol * |partial sum|`; the
/// returned count is the number of odd terms added.
pub fn w_powerseries<T: Scalar>(z: Complex<T>, tol: T) -> (Complex<T>, usize) {
    let even = exp_neg_sq(z);
    let m = z * z * T::lit(-2.0);
    let tol2 = tol * tol;
    let mut term = Complex::new(T::one(), T::zero());
    let mut sum = term;
    let mut k = 1usize;
    loop {
        term = term * m / T::from_count(2 * k + 1);
        if term.norm_sqr() < tol2 * sum.norm_sqr() {
            break;
        }
        sum = sum + term;
        k += 1;
    }
    let iz = Complex::new(-z.im, z.re);
    (even + iz * sum * two_over_sqrt_pi::<T>(), k)
}

/// `nu`-th convergent of the Laplace continued fraction by backward
/// recurrence: `t = -iz`, `r_nu = 0`, `r_n = (1/2) / (t + (n+1) r_{n+1})`,
/// result `(2/sqrt(pi)) r_0`.
pub fn w_cf<T: Scalar>(z: Complex<T>, nu: usize) -> Complex<T> {
    let (tx, ty) = (z.im, -z.re);
    let half = T::lit(0.5);
    let (mut rx, mut ry) = (T::zero(), T::zero());
    for n in (0..nu).rev() {
        let k = T::from_count(n + 1);
        let dx = tx + k * rx;
        let dy = ty + k * ry;
        let c = half / (dx * dx + dy * dy);
        rx = c * dx;
        ry = -c * dy;
    }
    Complex::new(rx, ry) * two_over_sqrt_pi::<T>()
}

/// Downward Taylor scheme: the continued fraction shifted by `h`, resummed
/// over its first `kapn + 1` partial products so the expansion steps from
/// `z + ih` back down to `z`.
///
/// With `s_n = r_n ((2h)^n + s_{n+1})` rewritten as `s_n = r_n (1 + 2h s_{n+1}')`
/// for `s_n' = s_n / (2h)^n`, no powers of `2h` are formed. On the real axis
/// the real part is replaced by the exact `e^{-x^2}`.
pub fn w_downward<T: Scalar>(z: Complex<T>, h: T, kapn: usize, nu: usize) -> Complex<T> {
    let nu = nu.max(1);
    let kapn = kapn.min(nu - 1);
    let (tx, ty) = (z.im + h, -z.re);
    let half = T::lit(0.5);
    let two_h = h + h;
    let (mut rx, mut ry) = (T::zero(), T::zero());
    let (mut sx, mut sy) = (T::zero(), T::zero());
    for n in (0..nu).rev() {
        let k = T::from_count(n + 1);
        let dx = tx + k * rx;
        let dy = ty + k * ry;
        let c = half / (dx * dx + dy * dy);
        rx = c * dx;
        ry = -c * dy;
        if n <= kapn {
            let ax = T::one() + two_h * sx;
            let ay = two_h * sy;
            sx = rx * ax - ry * ay;
            sy = rx * ay + ry * ax;
        }
    }
    let k = two_over_sqrt_pi::<T>();
    let mut v = Complex::new(sx * k, sy * k);
    if z.im == T::zero() {
        v.re = exp_neg_square(z.re);
    }
    v
}

/// `w(x) = e^{-x^2} + (2i/sqrt(pi)) F(x)` on the real axis.
pub fn w_real_axis<T: Scalar>(x: T) -> Complex<T> {
    let (f, _) = dawson_pair(x.abs());
    let v = Complex::new(exp_neg_square(x), two_over_sqrt_pi::<T>() * f);
    if x < T::zero() {
        v.conj()
    } else {
        v
    }
}

/// Fills `b` (real part of `c_n`) and `d` (Dawson part) for `n = 0..b.len()`.
#[inline]
fn fill_coeffs<T: Scalar>(x: T, b: &mut [T], d: &mut [T]) {
    debug_assert_eq!(b.len(), d.len());
    let (f, df) = dawson_pair(x);
    let e = exp_neg_square(x);
    let two = T::lit(2.0);
    b[0] = e;
    d[0] = f;
    if b.len() > 1 {
        b[1] = -two * x * e;
        d[1] = df;
    }
    for n in 1..b.len().saturating_sub(1) {
        let k = two / T::from_count(n + 1);
        b[n + 1] = -k * (x * b[n] + b[n - 1]);
        d[n + 1] = -k * (x * d[n] + d[n - 1]);
    }
}

/// Coefficients `c_0..=c_order` of the expansion of `w` about `x >= 0`.
///
/// `c_0 = w(x)`, `c_1 = -2x c_0 + 2i/sqrt(pi)` and
/// `c_{n+1} = -2 (x c_n + c_{n-1}) / (n+1)`, which follows from
/// `w'(z) = -2z w(z) + 2i/sqrt(pi)`.
pub fn taylor_coeffs<T: Scalar>(x: T, order: usize) -> TaylorCoeffs<T> {
    let len = order.max(1) + 1;
    let mut b = vec![T::zero(); len];
    let mut d = vec![T::zero(); len];
    fill_coeffs(x, &mut b, &mut d);
    let k = two_over_sqrt_pi::<T>();
    let c = b.iter().zip(&d).map(|(&bn, &dn)| Complex::new(bn, k * dn)).collect();
    TaylorCoeffs { c, d }
}

/// Upward Taylor expansion about `z0 = x`, a polynomial of degree
/// `p.upward_terms` in `iy` evaluated by Horner's rule.
pub fn w_upward<T: Scalar>(z: Complex<T>, p: &TuningParams<T>) -> Complex<T> {
    let order = p.upward_terms.min(MAX_UPWARD_TERMS - 1);
    let mut b = [T::zero(); MAX_UPWARD_TERMS];
    let mut d = [T::zero(); MAX_UPWARD_TERMS];
    fill_coeffs(z.re, &mut b[..=order], &mut d[..=order]);
    let k = two_over_sqrt_pi::<T>();
    let y = z.im;
    let (mut sx, mut sy) = (b[order], k * d[order]);
    for n in (0..order).rev() {
        // s <- s * iy + c_n
        let nx = b[n] - y * sy;
        let ny = k * d[n] + y * sx;
        sx = nx;
        sy = ny;
    }
    Complex::new(sx, sy)
}

fn far_field<T: Scalar>(z: Complex<T>) -> Complex<T> {
    // i / (sqrt(pi) z) with Smith's division.
    let (a, b) = (z.re, z.im);
    let inv = if a.abs() >= b.abs() {
        let r = b / a;
        let den = a + b * r;
        Complex::new(T::one() / den, -r / den)
    } else {
        let r = a / b;
        let den = a * r + b;
        Complex::new(r / den, -T::one() / den)
    };
    let s = T::FRAC_2_SQRT_PI() * T::lit(0.5);
    Complex::new(-inv.im * s, inv.re * s)
}

impl<T: Scalar> EvalResult<T> {
    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }
}
