//! `∫_0^L exp(a s^2 + b s) ds` for real `a` and complex `b` by the trapezoid
//! rule with Euler–Maclaurin endpoint corrections. Node values come from a
//! multiplicative recurrence (no transcendental per node); the derivatives
//! at the endpoints from the Taylor recurrence of the exponent.

use std::sync::OnceLock;

use astro_float::BigFloat;
use num_bigint::BigUint;

use crate::bf::{close_c, Cbf, Ctx};
use crate::OracleError;

const MAX_CORRECTIONS: usize = 400;
const MAX_NODES: u64 = 1 << 22;

/// Tangent numbers `T_1..=T_n` (Brent–Harvey), from which
/// `B_{2k} / (2k) = (-1)^{k-1} T_k / (4^k (4^k - 1))`.
fn tangent_numbers() -> &'static [BigUint] {
    static CELL: OnceLock<Vec<BigUint>> = OnceLock::new();
    CELL.get_or_init(|| {
        let n = MAX_CORRECTIONS;
        let mut t = vec![BigUint::from(0u32); n + 1];
        t[1] = BigUint::from(1u32);
        for k in 2..=n {
            t[k] = &t[k - 1] * (k as u64 - 1);
        }
        for k in 2..=n {
            for j in k..=n {
                t[j] = &t[j - 1] * (j as u64 - k as u64) + &t[j] * (j as u64 - k as u64 + 2);
            }
        }
        t
    })
}

/// `B_{2k} / (2k)` at the context precision.
pub(crate) fn bernoulli_over_index(k: usize, c: &Ctx) -> BigFloat {
    let t = c.biguint(&tangent_numbers()[k]);
    let four_k = BigUint::from(1u32) << (2 * k);
    let den = c.biguint(&(&four_k * (&four_k - 1u32)));
    let v = c.div(&t, &den);
    if k % 2 == 0 {
        v.neg()
    } else {
        v
    }
}

/// Integrand `exp(a s^2 + b s)`.
pub(crate) struct GaussExp {
    pub a: BigFloat,
    pub b: Cbf,
}

impl GaussExp {
    /// `a s^2 + b s` as (real, imaginary) exponent.
    fn exponent(&self, s: &BigFloat, c: &Ctx) -> (BigFloat, BigFloat) {
        let re = c.add(&c.mul(&c.mul(&self.a, s), s), &c.mul(&self.b.re, s));
        (re, c.mul(&self.b.im, s))
    }

    fn at(&self, s: &BigFloat, c: &mut Ctx) -> Cbf {
        let (re, im) = self.exponent(s, c);
        c.cexp(&re, &im)
    }
}

/// Integrates `g` over `[0, l]` to about `2^{-(p - 16)}` relative to the
/// result, doubling the node count until two rules agree.
///
/// `gamma_max` bounds `|2 a s + b|` on the interval; it sets the initial
/// step so the correction series converges geometrically.
pub(crate) fn integrate(g: &GaussExp, l: &BigFloat, gamma_max: f64, c: &mut Ctx) -> Result<Cbf, OracleError> {
    if l.is_zero() {
        return Ok(Cbf::zero(c.p));
    }
    let lf = crate::bf::to_f64(l);
    let p = c.p;
    let delta = (1.0 / gamma_max.max(1e-300)).min((std::f64::consts::PI.powi(2) / (p as f64 * 0.7 + 20.0)).sqrt()).min(0.2);
    let mut n = ((lf / delta).ceil() as u64).max(1);
    let mut prev: Option<Cbf> = None;
    loop {
        if n > MAX_NODES {
            return Err(OracleError::PrecisionFailure { digits: 0, bits: p });
        }
        match trapezoid_em(g, l, n, c) {
            Ok(cur) => {
                if let Some(pv) = &prev {
                    if close_c(pv, &cur, p as i64 - 16, p as i64, p) {
                        return Ok(cur);
                    }
                }
                prev = Some(cur);
            }
            Err(()) => prev = None,
        }
        n *= 2;
    }
}

/// One corrected trapezoid rule with `n` panels; `Err` when the correction
/// series fails to settle.
fn trapezoid_em(g: &GaussExp, l: &BigFloat, n: u64, c: &mut Ctx) -> Result<Cbf, ()> {
    let p = c.p;
    let extra = 64 - n.leading_zeros() as usize + 16;
    c.p = p + extra;
    let out = trapezoid_em_inner(g, l, n, c);
    c.p = p;
    out
}

fn trapezoid_em_inner(g: &GaussExp, l: &BigFloat, n: u64, c: &mut Ctx) -> Result<Cbf, ()> {
    let delta = c.div(l, &c.u(n));
    let d2 = c.mul(&delta, &delta);

    // f_{k+1} = f_k R_k, R_k = G Q^{2k+1}, G = exp(b delta), Q = exp(a delta^2)
    let q = c.exp(&c.mul(&g.a, &d2));
    let q2 = c.mul(&q, &q);
    let bd = g.b.scale(&delta, c);
    let gq = c.cexp(&bd.re, &bd.im);
    let mut r = gq.scale(&q, c);
    let one = c.u(1);
    let half = c.f(0.5);
    let mut f = Cbf::real(one.clone(), c.p);
    let mut sum = Cbf::real(half.clone(), c.p);
    for k in 0..n {
        f = f.mul(&r, c);
        r = r.scale(&q2, c);
        if k + 1 < n {
            sum = sum.add(&f, c);
        }
    }
    let f_l = g.at(l, c);
    sum = sum.add(&f_l.scale(&half, c), c);
    let mut total = sum.scale(&delta, c);

    // Taylor coefficients about s: b_0 = 1, b_1 = gamma,
    // b_{m+1} = (gamma b_m + 2a b_{m-1}) / (m+1), gamma = 2 a s + b.
    let two_a = c.add(&g.a, &g.a);
    let gamma0 = g.b.clone();
    let gamma_l = g.b.add(&Cbf::real(c.mul(&two_a, l), c.p), c);
    let mut b0 = (Cbf::real(one.clone(), c.p), gamma0.clone());
    let mut bl = (Cbf::real(one, c.p), gamma_l.clone());
    let mut m = 1usize;
    let mut dpow = d2.clone();
    let tol = total.lg().unwrap_or(0) - c.p as i64 - 4;
    let mut small_run = 0;
    for j in 1..MAX_CORRECTIONS {
        // b_{2j-1} is bl.1 / b0.1 when m == 2j-1
        debug_assert_eq!(m, 2 * j - 1);
        let coef = bernoulli_over_index(j, c);
        let diff = f_l.mul(&bl.1, c).sub(&b0.1, c);
        let term = diff.scale(&c.mul(&coef, &dpow), c);
        total = total.sub(&term, c);
        match term.lg() {
            Some(e) if e > tol => small_run = 0,
            _ => small_run += 1,
        }
        if small_run >= 2 {
            return Ok(total);
        }
        if let (Some(e), Some(t)) = (term.lg(), total.lg()) {
            if e > t + 8 {
                return Err(());
            }
        }
        dpow = c.mul(&dpow, &d2);
        for _ in 0..2 {
            let next = |bb: &(Cbf, Cbf), gm: &Cbf, c: &Ctx| -> Cbf {
                let v = gm.mul(&bb.1, c).add(&bb.0.scale(&two_a, c), c);
                v.scale(&c.div(&c.u(1), &c.u(m as u64 + 1)), c)
            };
            let n0 = next(&b0, &gamma0, c);
            let nl = next(&bl, &gamma_l, c);
            b0 = (b0.1, n0);
            bl = (bl.1, nl);
            m += 1;
        }
    }
    Err(())
}
