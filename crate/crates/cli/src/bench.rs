//! Timing of the evaluator with the strip switched on and off over one
//! fixed point set.

use std::hint::black_box;
use std::time::Instant;

use faddeyeva::{classify, rho, w, Complex64, EvalOptions, RegionLabel, TuningParams64};
use serde::Serialize;

use crate::points::sample_box;

pub const DEFAULT_SEED: u64 = 0x5EED_0680;
const BATCH: usize = 64;
const MAX_DISTINCT: usize = 8192;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BenchRegion {
    Strip,
    #[value(name = "S")]
    S,
    #[value(name = "R")]
    R,
    #[value(name = "Q")]
    Q,
    All,
}

/// Points of the requested region (as classified with the strip enabled).
pub fn bench_points(region: BenchRegion, n: usize, seed: u64) -> Vec<Complex64> {
    let p = &TuningParams64::standard();
    let is = |want: RegionLabel| move |x: f64, y: f64| classify(Complex64::new(x, y), p, true) == want;
    let pts = match region {
        BenchRegion::Strip => sample_box(seed, n, (1.8396, 20.0), (0.0, 0.031623), is(RegionLabel::RemedyStrip)),
        BenchRegion::S => sample_box(seed, n, (0.0, 1.84), (0.0, 1.285), is(RegionLabel::S)),
        BenchRegion::R => sample_box(seed, n, (0.0, 6.3), (0.0, 4.4), is(RegionLabel::R)),
        BenchRegion::Q => sample_box(seed, n, (0.0, 30.0), (0.0, 30.0), |x, y| {
            is(RegionLabel::Q)(x, y) && rho(Complex64::new(x, y), p) < 8.0
        }),
        BenchRegion::All => sample_box(seed, n, (0.0, 30.0), (0.0, 30.0), |_, _| true),
    };
    pts.into_iter().map(|(x, y)| Complex64::new(x, y)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Timing {
    pub median_ns: f64,
    pub p99_ns: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub region: BenchRegion,
    pub samples: usize,
    pub seed: u64,
    pub remedy_on: Timing,
    pub remedy_off: Timing,
    /// Median with the strip over median without it.
    pub ratio: f64,
}

fn quantile(sorted: &[f64], q: f64) -> f64 {
    let i = ((sorted.len() - 1) as f64 * q).round() as usize;
    sorted[i]
}

fn timing(mut per_eval: Vec<f64>) -> Timing {
    per_eval.sort_by(f64::total_cmp);
    Timing { median_ns: quantile(&per_eval, 0.5), p99_ns: quantile(&per_eval, 0.99) }
}

/// Times `samples` evaluations per setting in batches of 64, alternating the
/// two settings batch by batch; each batch contributes its mean to the
/// distribution.
pub fn run(region: BenchRegion, samples: usize, seed: u64) -> BenchReport {
    let p = TuningParams64::standard();
    let pts = bench_points(region, samples.clamp(BATCH, MAX_DISTINCT), seed);
    let batches = samples.div_ceil(BATCH).max(1);
    let on = EvalOptions::with_remedy(true);
    let off = EvalOptions::with_remedy(false);
    let mut t_on = Vec::with_capacity(batches);
    let mut t_off = Vec::with_capacity(batches);
    let time = |opts: EvalOptions, start: usize| {
        let t0 = Instant::now();
        for k in 0..BATCH {
            let z = pts[(start + k) % pts.len()];
            black_box(w(black_box(z), &p, opts).ok());
        }
        t0.elapsed().as_nanos() as f64 / BATCH as f64
    };
    for b in 0..batches {
        let start = b * BATCH;
        if b % 2 == 0 {
            t_on.push(time(on, start));
            t_off.push(time(off, start));
        } else {
            t_off.push(time(off, start));
            t_on.push(time(on, start));
        }
    }
    let (a, b) = (timing(t_on), timing(t_off));
    BenchReport { region, samples: batches * BATCH, seed, remedy_on: a, remedy_off: b, ratio: a.median_ns / b.median_ns }
}

impl std::fmt::Display for BenchReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = serde_json::to_value(self.region).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
        writeln!(f, "region: {name}, samples: {}, seed: {}", self.samples, self.seed)?;
        writeln!(f, "remedy on:  median {:.1} ns, p99 {:.1} ns", self.remedy_on.median_ns, self.remedy_on.p99_ns)?;
        writeln!(f, "remedy off: median {:.1} ns, p99 {:.1} ns", self.remedy_off.median_ns, self.remedy_off.p99_ns)?;
        write!(f, "median ratio on/off: {:.3}", self.ratio)
    }
}
