//! Offline tuning: the Dawson table, the term-count schedules of regions Q
//! and R, and the upward-term report, all measured against the oracle.

use std::f64::consts::FRAC_PI_2;
use std::fmt::Write as _;

use faddeyeva::{classify, w_cf, w_downward, w_outer, w_upward, Complex64, RegionLabel, Schedule, TuningParams64};
use faddeyeva_oracle::astro_float::RoundingMode;
use faddeyeva_oracle::{f_ref, to_f64, w_ref, BigFloat, RefValue, DOMAIN_MAX};
use rayon::prelude::*;

use crate::fixtures::WRow;
use crate::Result;

/// Componentwise error every calibrated point must meet.
pub const TARGET: f64 = 1e-13;
const REF_DIGITS: u32 = 20;
/// Convergents of the stand-in reference beyond the oracle's domain.
const DEEP_CF: usize = 160;
const RM: RoundingMode = RoundingMode::ToEven;

/// A reference value split into double-length components, so that the
/// error of a double can be measured in double arithmetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FastRef {
    re: (f64, f64),
    im: (f64, f64),
    modulus: f64,
}

impl FastRef {
    pub fn from_ref(r: &RefValue) -> Self {
        let p = r.precision_bits + 64;
        let split = |v: &BigFloat| {
            let hi = to_f64(v);
            (hi, to_f64(&v.sub(&BigFloat::from_f64(hi, p), p, RM)))
        };
        let (re, im) = (split(&r.re), split(&r.im));
        Self { re, im, modulus: re.0.hypot(im.0) }
    }

    pub fn from_f64(v: Complex64) -> Self {
        Self { re: (v.re, 0.0), im: (v.im, 0.0), modulus: v.norm() }
    }

    /// Componentwise relative error, guarded as in the oracle's metric.
    pub fn err(&self, v: Complex64) -> f64 {
        let floor = 1e-300 * self.modulus;
        let comp = |a: f64, (hi, lo): (f64, f64)| {
            let d = ((a - hi) - lo).abs();
            let den = if hi.abs() < floor { self.modulus } else { hi.abs() };
            d / den
        };
        let e = comp(v.re, self.re).max(comp(v.im, self.im));
        if e.is_nan() {
            f64::INFINITY
        } else {
            e
        }
    }
}

/// Oracle value inside `[0, 30]^2`; outside it a 160-convergent fraction,
/// which there is exact to double precision.
pub fn reference(x: f64, y: f64) -> Result<FastRef> {
    if x <= DOMAIN_MAX && y <= DOMAIN_MAX {
        Ok(FastRef::from_ref(&w_ref(Complex64::new(x, y), REF_DIGITS)?))
    } else {
        Ok(FastRef::from_f64(w_cf(Complex64::new(x, y), DEEP_CF)))
    }
}

/// Heights just above the strip, where the historical kernels are weakest.
const NEAR_AXIS_Y: [f64; 12] = [0.0, 1e-300, 1e-100, 1e-12, 1e-4, 0.02, 0.0316231, 0.035, 0.05, 0.1, 0.25, 0.6];

/// Points on the ellipses `rho = r` for `n_rho` values of `r` in
/// `[lo, hi]`, evenly spread in angle plus the near-axis heights, keeping
/// only those classified as `region` with the strip enabled.
pub fn ring_samples(lo: f64, hi: f64, n_rho: usize, n_theta: usize, region: RegionLabel) -> Vec<(f64, f64)> {
    let p = TuningParams64::standard();
    let mut out = Vec::new();
    for i in 0..n_rho {
        let r = if n_rho == 1 { lo } else { lo + (hi - lo) * i as f64 / (n_rho - 1) as f64 };
        for j in 0..n_theta {
            let th = FRAC_PI_2 * j as f64 / (n_theta - 1) as f64;
            out.push((6.3 * r * th.cos(), 4.4 * r * th.sin()));
        }
        for y in NEAR_AXIS_Y {
            let t = y / 4.4;
            if t < r {
                out.push((6.3 * (r * r - t * t).sqrt(), y));
            }
        }
    }
    out.retain(|&(x, y)| classify(Complex64::new(x, y), &p, true) == region);
    out
}

struct Sample {
    x: f64,
    y: f64,
    rho: f64,
    r: FastRef,
}

fn with_refs(pts: Vec<(f64, f64)>) -> Result<Vec<Sample>> {
    pts.into_par_iter()
        .map(|(x, y)| Ok(Sample { x, y, rho: (x / 6.3).hypot(y / 4.4), r: reference(x, y)? }))
        .collect()
}

/// Knots of the Q schedule.
pub const Q_KNOTS: [f64; 21] =
    [1.0, 1.05, 1.1, 1.2, 1.3, 1.4, 1.5, 1.75, 2.0, 2.25, 2.5, 3.0, 3.5, 4.0, 5.0, 6.0, 8.0, 10.0, 13.0, 16.0, 20.0];

/// Knots of the three R schedules.
pub const R_KNOTS: [f64; 15] =
    [0.292, 0.35, 0.4, 0.45, 0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95, 1.0];

const NU_R_MAX: usize = 80;

/// Outcome of a schedule fit: knots plus points no admissible setting could
/// bring within [`TARGET`].
#[derive(Debug, Clone, Default)]
pub struct Fit {
    pub knots: Vec<Vec<(f64, f64)>>,
    pub unmet: Vec<(f64, f64, f64)>,
    pub samples: usize,
}

/// For each knot, the largest per-point requirement over the neighbouring
/// knot intervals, then made nonincreasing in `rho`.
fn knot_maxima(knots: &[f64], req: &[(f64, usize)]) -> Vec<(f64, f64)> {
    let mut v: Vec<f64> = knots
        .iter()
        .enumerate()
        .map(|(k, _)| {
            let lo = knots[k.saturating_sub(1)];
            let hi = knots[(k + 1).min(knots.len() - 1)];
            req.iter().filter(|(r, _)| (lo..=hi).contains(r)).map(|&(_, n)| n as f64).fold(0.0, f64::max)
        })
        .collect();
    for k in (0..v.len() - 1).rev() {
        v[k] = v[k].max(v[k + 1]);
    }
    knots.iter().copied().zip(v).collect()
}

/// Smallest number of convergents in `[3, 16]` meeting [`TARGET`] at each Q point.
pub fn fit_q(n_rho: usize, n_theta: usize) -> Result<Fit> {
    let p = TuningParams64::standard();
    let mut pts = Vec::new();
    for w in Q_KNOTS.windows(2) {
        pts.extend(ring_samples(w[0], w[1], n_rho, n_theta, RegionLabel::Q));
    }
    let samples = with_refs(pts)?;
    let req: Vec<(f64, Option<usize>)> = samples
        .par_iter()
        .map(|s| {
            let z = Complex64::new(s.x, s.y);
            (s.rho, (3..=16).find(|&nu| s.r.err(w_outer(z, nu, &p)) <= TARGET))
        })
        .collect();
    let unmet = samples
        .iter()
        .zip(&req)
        .filter(|(_, r)| r.1.is_none())
        .map(|(s, _)| (s.x, s.y, s.r.err(w_outer(Complex64::new(s.x, s.y), 16, &p))))
        .collect();
    let flat: Vec<(f64, usize)> = req.iter().map(|&(r, n)| (r, n.unwrap_or(16).max(3))).collect();
    let mut knots = knot_maxima(&Q_KNOTS, &flat);
    // beyond the last knot the schedule is flat; it must end on the clamp
    if knots.last().map(|k| k.1) != Some(3.0) {
        knots.push((2.0 * Q_KNOTS[Q_KNOTS.len() - 1], 3.0));
    }
    Ok(Fit { knots: vec![knots], unmet, samples: samples.len() })
}

fn interp(knots: &[(f64, f64)], r: f64) -> f64 {
    Schedule::new(knots.to_vec()).expect("sorted knots").eval(r)
}

/// `(nu, kapn)` for one point at shift `h`: the shortest recurrence that
/// meets the target with the full Taylor length, then the shortest Taylor
/// length with that recurrence.
fn r_requirement(s: &Sample, h: f64) -> Option<(usize, usize)> {
    let z = Complex64::new(s.x, s.y);
    let nu = (1..=NU_R_MAX).find(|&nu| s.r.err(w_downward(z, h, nu - 1, nu)) <= TARGET)?;
    let kapn = (0..nu).find(|&k| s.r.err(w_downward(z, h, k, nu)) <= TARGET)?;
    Some((nu, kapn))
}

/// Fits the R schedules. The shift follows `h(rho) = c sqrt(1 - rho^2)`
/// through the knots, with `c` chosen from a scan to minimise the summed
/// knot values of `nu` and `kapn`.
pub fn fit_r(n_rho: usize, n_theta: usize) -> Result<Fit> {
    let mut pts = Vec::new();
    for w in R_KNOTS.windows(2) {
        pts.extend(ring_samples(w[0], w[1], n_rho, n_theta, RegionLabel::R));
    }
    let samples = with_refs(pts)?;
    let mut best: Option<(f64, Fit)> = None;
    for i in 0..=16 {
        let c = 0.8 + 0.075 * i as f64;
        let h_knots: Vec<(f64, f64)> =
            R_KNOTS.iter().map(|&r| (r, round4(c * (1.0 - r * r).max(0.0).sqrt()))).collect();
        let req: Vec<Option<(usize, usize)>> =
            samples.par_iter().map(|s| r_requirement(s, interp(&h_knots, s.rho))).collect();
        let nu: Vec<(f64, usize)> = samples.iter().zip(&req).map(|(s, r)| (s.rho, r.map_or(NU_R_MAX, |v| v.0))).collect();
        let kapn: Vec<(f64, usize)> =
            samples.iter().zip(&req).map(|(s, r)| (s.rho, r.map_or(NU_R_MAX - 1, |v| v.1))).collect();
        let unmet: Vec<(f64, f64, f64)> =
            samples.iter().zip(&req).filter(|(_, r)| r.is_none()).map(|(s, _)| (s.x, s.y, f64::NAN)).collect();
        let nu_k = knot_maxima(&R_KNOTS, &nu);
        let kapn_k = knot_maxima(&R_KNOTS, &kapn);
        let cost = unmet.len() as f64 * 1e6 + nu_k.iter().chain(&kapn_k).map(|k| k.1).sum::<f64>();
        let fit = Fit { knots: vec![h_knots, kapn_k, nu_k], unmet, samples: samples.len() };
        if best.as_ref().map_or(true, |(bc, _)| cost < *bc) {
            best = Some((cost, fit));
        }
    }
    Ok(best.expect("scan is nonempty").1)
}

fn round4(v: f64) -> f64 {
    (v * 1e4).round() / 1e4
}

fn knots_literal(name: &str, k: &[(f64, f64)]) -> String {
    let body: Vec<String> = k.iter().map(|(r, v)| format!("({r:?}, {v:?})")).collect();
    format!("pub(crate) const {name}: &[(f64, f64)] = &[{}];\n", body.join(", "))
}

/// Source of `schedules.rs`.
pub fn schedules_source(version: &str, q: &Fit, r: &Fit) -> String {
    let mut s = String::from("// Generated by `calibrate schedules`; do not edit by hand.\n\n");
    let _ = writeln!(s, "pub(crate) const TABLE_VERSION: &str = {version:?};\n");
    s += &knots_literal("Q_NU", &q.knots[0]);
    s += &knots_literal("R_H", &r.knots[0]);
    s += &knots_literal("R_KAPN", &r.knots[1]);
    s += &knots_literal("R_NU", &r.knots[2]);
    s
}

pub const DAWSON_FIRST: f64 = 0.5;
pub const DAWSON_STEP: f64 = 0.0625;
pub const DAWSON_LAST: f64 = 10.0;

/// `(F(x_k), F'(x_k))` at the table centres, `F' = 1 - 2xF` formed in
/// extended precision.
pub fn dawson_table() -> Result<Vec<(f64, f64)>> {
    let n = ((DAWSON_LAST - DAWSON_FIRST) / DAWSON_STEP).round() as usize + 1;
    (0..n)
        .into_par_iter()
        .map(|k| {
            let x = DAWSON_FIRST + DAWSON_STEP * k as f64;
            let f = f_ref(x, 25)?;
            let p = 256;
            let two_x = BigFloat::from_f64(2.0 * x, p);
            let df = BigFloat::from_u64(1, p).sub(&two_x.mul(&f, p, RM), p, RM);
            Ok((to_f64(&f), to_f64(&df)))
        })
        .collect()
}

/// Source of `dawson_table.rs`.
pub fn dawson_table_source(table: &[(f64, f64)]) -> String {
    let mut s = String::from("// Generated by `calibrate dawson-table`; do not edit by hand.\n\n");
    s += "/// Centres are `TABLE_FIRST + k * TABLE_STEP`.\n";
    let _ = writeln!(s, "pub(crate) const TABLE_FIRST: f64 = {DAWSON_FIRST:?};");
    let _ = writeln!(s, "pub(crate) const TABLE_STEP: f64 = {DAWSON_STEP:?};");
    s += "/// Degree of the local Taylor polynomial.\npub(crate) const TABLE_DEGREE: usize = 10;\n";
    s += "/// Start of the asymptotic branch; the table covers `[0.5, ASYMPTOTIC_FROM)`.\n";
    let _ = writeln!(s, "pub(crate) const ASYMPTOTIC_FROM: f64 = {DAWSON_LAST:?};\n");
    s += "/// `(F(x_k), F'(x_k))` at the table centres.\npub(crate) const TABLE: &[(f64, f64)] = &[\n";
    for (f, df) in table {
        let _ = writeln!(s, "    ({f:?}, {df:?}),");
    }
    s += "];\n";
    s
}

/// Worst componentwise error of the upward expansion of each length over
/// the strip fixture.
pub fn upward_terms_report(rows: &[WRow], max_terms: usize) -> Result<Vec<(usize, f64, f64, f64)>> {
    let refs: Vec<FastRef> = rows.par_iter().map(|r| Ok(FastRef::from_ref(&r.reference()?))).collect::<Result<_>>()?;
    Ok((1..=max_terms)
        .map(|n| {
            let mut p = TuningParams64::standard();
            p.upward_terms = n;
            let mut worst = (0.0, 0.0, 0.0);
            for (row, r) in rows.iter().zip(&refs) {
                let e = r.err(w_upward(Complex64::new(row.x, row.y), &p));
                if e > worst.0 {
                    worst = (e, row.x, row.y);
                }
            }
            (n, worst.0, worst.1, worst.2)
        })
        .collect())
}
