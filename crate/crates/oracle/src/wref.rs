//! Reference evaluations of `w(z)`, `F(x)` and `erfcx(y)`.
//!
//! Path A (`y <= Y_SPLIT`): along the real axis, then up:
//! `w = e^{-z^2} + (2i/sqrt(pi)) e^{y^2 - 2ixy} F(x) - (2/sqrt(pi)) J`,
//! `J = ∫_0^y exp(2(y - ix)s - s^2) ds`, with `F(x) = e^{-x^2} ∫_0^x e^{t^2} dt`
//! from its positive-term series. The two terms cancel by about `e^{y^2}`.
//!
//! Path B (`y > Y_SPLIT`): along the imaginary axis, then across:
//! `w = erfcx(y) e^{-x^2 - 2ixy} + (2i/sqrt(pi)) ∫_0^L exp(s^2 - 2zs) ds`,
//! the integrand bounded by 1 and cut where it drops below `2^{-(p+10)}`.

use astro_float::BigFloat;

use crate::bf::{close, close_c, lg, Cbf, Ctx};
use crate::quad::{integrate, GaussExp};
use crate::OracleError;

pub(crate) const Y_SPLIT: f64 = 4.0;
const MAX_BITS: usize = 4096;
/// Components smaller than about 1e-300 of the modulus are checked in
/// absolute terms against that floor.
pub(crate) const FLOOR_BITS: i64 = 997;

pub(crate) fn target_bits(digits: u32) -> i64 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as i64
}

/// Evaluates `f` at `p` and `p + 32` bits and accepts once the two agree to
/// the target; otherwise raises the precision.
pub(crate) fn refine<F>(digits: u32, p0: usize, mut f: F) -> Result<(Cbf, usize), OracleError>
where
    F: FnMut(&mut Ctx) -> Result<Cbf, OracleError>,
{
    let tb = target_bits(digits);
    let mut c = Ctx::new(p0)?;
    let mut p = p0;
    while p <= MAX_BITS {
        c.p = p;
        let a = f(&mut c)?;
        c.p = p + 32;
        let b = f(&mut c)?;
        if close_c(&a, &b, tb + 4, FLOOR_BITS, p + 32) {
            return Ok((b, p + 32));
        }
        p += 64;
    }
    Err(OracleError::PrecisionFailure { digits, bits: MAX_BITS })
}

/// `∫_0^x e^{t^2} dt = x Σ x^{2n} / (n! (2n+1))`, all terms positive.
pub(crate) fn erfi_integral(x: &BigFloat, c: &Ctx) -> BigFloat {
    if x.is_zero() {
        return x.clone();
    }
    let xf = crate::bf::to_f64(x);
    let x2 = c.mul(x, x);
    let mut u = c.u(1);
    let mut sum = c.u(1);
    let mut n = 0u64;
    loop {
        n += 1;
        u = c.div(&c.mul(&u, &x2), &c.u(n));
        let t = c.div(&u, &c.u(2 * n + 1));
        sum = c.add(&sum, &t);
        // past n = 2x^2 the ratio is below 1/2, so the tail is below t
        if n as f64 > 2.0 * xf * xf {
            if let (Some(et), Some(es)) = (lg(&t), lg(&sum)) {
                if et < es - c.p as i64 - 4 {
                    break;
                }
            }
        }
    }
    c.mul(x, &sum)
}

pub(crate) fn dawson_bf(x: &BigFloat, c: &mut Ctx) -> BigFloat {
    let x2 = c.mul(x, x);
    let g = c.exp(&x2.neg());
    let i1 = erfi_integral(x, c);
    c.mul(&g, &i1)
}

fn erfcx_cf(y: &BigFloat, n: u64, c: &mut Ctx) -> BigFloat {
    let half = c.f(0.5);
    let mut v = c.u(0);
    for k in (1..=n).rev() {
        v = c.div(&c.mul(&half, &c.u(k)), &c.add(y, &v));
    }
    let pi = c.pi();
    let den = c.mul(&c.sqrt(&pi), &c.add(y, &v));
    c.div(&c.u(1), &den)
}

/// `erfcx(y) = e^{y^2} erfc(y)` for `y > 0` by its continued fraction
/// `1 / (sqrt(pi) (y + (1/2)/(y + (2/2)/(y + ...))))`, depth doubled until stable.
pub(crate) fn erfcx_bf(y: &BigFloat, c: &mut Ctx) -> Result<BigFloat, OracleError> {
    let mut n = 16u64;
    let mut prev = erfcx_cf(y, n, c);
    while n < (1 << 22) {
        n *= 2;
        let cur = erfcx_cf(y, n, c);
        if close(&prev, &cur, c.p as i64 - 8, c.p) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(OracleError::PrecisionFailure { digits: 0, bits: c.p })
}

pub(crate) fn guard_bits(x: f64, y: f64) -> usize {
    if y <= Y_SPLIT {
        (y * y * std::f64::consts::LOG2_E).ceil() as usize + (1.0 + 2.0 * x * x).log2().ceil() as usize
    } else {
        (2.0 * (2.0 + x.hypot(y)).log2()).ceil() as usize
    }
}

pub(crate) fn w_path(x: f64, y: f64, c: &mut Ctx) -> Result<Cbf, OracleError> {
    if y <= Y_SPLIT {
        w_path_a(x, y, c)
    } else {
        w_path_b(x, y, c)
    }
}

fn w_path_a(xf: f64, yf: f64, c: &mut Ctx) -> Result<Cbf, OracleError> {
    let (x, y) = (c.f(xf), c.f(yf));
    let x2 = c.mul(&x, &x);
    let y2 = c.mul(&y, &y);
    let two_xy = c.mul(&c.u(2), &c.mul(&x, &y));
    let phase = two_xy.neg();
    let e_mz2 = c.cexp(&c.sub(&y2, &x2), &phase);
    let k = c.two_over_sqrt_pi();

    let f = dawson_bf(&x, c);
    let rot = c.cexp(&y2, &phase);
    let dawson_term = rot.scale(&c.mul(&k, &f), c).times_i();

    let two = c.u(2);
    let g = GaussExp { a: c.f(-1.0), b: Cbf::new(c.mul(&two, &y), c.mul(&two, &x).neg()) };
    let j = integrate(&g, &y, 2.0 * xf.hypot(yf), c)?;

    Ok(e_mz2.add(&dawson_term, c).sub(&j.scale(&k, c), c))
}

fn w_path_b(xf: f64, yf: f64, c: &mut Ctx) -> Result<Cbf, OracleError> {
    let (x, y) = (c.f(xf), c.f(yf));
    let x2 = c.mul(&x, &x);
    let two_xy = c.mul(&c.u(2), &c.mul(&x, &y));
    let ex = erfcx_bf(&y, c)?;
    let base = c.cexp(&x2.neg(), &two_xy.neg()).scale(&ex, c);

    let t = (c.p as f64 + 10.0) * std::f64::consts::LN_2 + (xf + 1.0).ln();
    let lf = if xf * xf > t { xf - (xf * xf - t).sqrt() } else { xf };
    let l = c.f(lf);
    let minus_two = c.f(-2.0);
    let g = GaussExp { a: c.u(1), b: Cbf::new(c.mul(&minus_two, &x), c.mul(&minus_two, &y)) };
    let i = integrate(&g, &l, 2.0 * xf.hypot(yf), c)?;
    let k = c.two_over_sqrt_pi();
    Ok(base.add(&i.scale(&k, c).times_i(), c))
}

/// `w(z) = e^{-z^2} (1 + (2i/sqrt(pi)) z Σ z^{2n} / (n! (2n+1)))`.
pub(crate) fn w_series(xf: f64, yf: f64, c: &mut Ctx) -> Cbf {
    let z = Cbf::new(c.f(xf), c.f(yf));
    let z2 = z.mul(&z, c);
    let r2 = xf * xf + yf * yf;
    let mut u = Cbf::real(c.u(1), c.p);
    let mut sum = u.clone();
    let mut n = 0u64;
    loop {
        n += 1;
        u = z2.mul(&u, c).scale(&c.div(&c.u(1), &c.u(n)), c);
        let t = u.scale(&c.div(&c.u(1), &c.u(2 * n + 1)), c);
        sum = sum.add(&t, c);
        if n as f64 > 2.0 * r2 {
            match (t.lg(), sum.lg()) {
                (None, _) => break,
                (Some(et), Some(es)) if et < es - c.p as i64 - 4 => break,
                _ => {}
            }
        }
    }
    let k = c.two_over_sqrt_pi();
    let inner = z.mul(&sum, c).scale(&k, c).times_i().add(&Cbf::real(c.u(1), c.p), c);
    let two_xy = c.mul(&c.u(2), &c.mul(&z.re, &z.im));
    let e_mz2 = c.cexp(&c.sub(&c.mul(&z.im, &z.im), &c.mul(&z.re, &z.re)), &two_xy.neg());
    e_mz2.mul(&inner, c)
}
