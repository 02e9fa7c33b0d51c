//! Rectangular sweeps: evaluation, reference columns, CSV and PGM output.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use faddeyeva::{classify, w, Complex64, EvalOptions, RegionLabel, TuningParams64};
use faddeyeva_oracle::{relerr, w_ref, RefValue, RelErr, FIXTURE_DIGITS};
use rayon::prelude::*;

use crate::{fmt_f64, io_err, CliError, Result};

pub const CSV_HEADER: &str = "x,y,re_w,im_w,re_ref,im_ref,relerr_re,relerr_im,relerr_mod,region,terms";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub scale: Scale,
}

impl Axis {
    pub fn new(min: f64, max: f64, points: usize, scale: Scale) -> Self {
        Self { min, max, points, scale }
    }

    fn validate(&self, name: &str) -> Result<()> {
        if self.points < 2 {
            return Err(CliError::Usage(format!("{name}: need at least 2 points")));
        }
        if !(self.min.is_finite() && self.max.is_finite() && self.min < self.max) {
            return Err(CliError::Usage(format!("{name}: need finite min < max")));
        }
        if self.scale == Scale::Log && self.min <= 0.0 {
            return Err(CliError::Usage(format!("{name}: log scale needs min > 0")));
        }
        Ok(())
    }

    /// Node values; the end points are exactly `min` and `max`.
    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|i| {
                if i == 0 {
                    return self.min;
                }
                if i == n - 1 {
                    return self.max;
                }
                let t = i as f64 / (n - 1) as f64;
                match self.scale {
                    Scale::Linear => self.min + (self.max - self.min) * t,
                    Scale::Log => (self.min.ln() + (self.max.ln() - self.min.ln()) * t).exp(),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x: Axis,
    pub y: Axis,
}

impl GridSpec {
    pub fn new(x: Axis, y: Axis) -> Result<Self> {
        x.validate("x")?;
        y.validate("y")?;
        Ok(Self { x, y })
    }

    /// All points, x-major: for each x, every y in increasing order.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let ys = self.y.values();
        self.x.values().into_iter().flat_map(|x| ys.iter().map(move |&y| (x, y))).collect()
    }
}

/// Where the reference columns come from.
#[derive(Debug, Default)]
pub enum RefSource {
    #[default]
    None,
    /// Fresh oracle evaluations.
    Oracle,
    /// Fixture values keyed by the bit patterns of `(x, y)`; points missing
    /// from the cache go to the oracle.
    Cache(HashMap<(u64, u64), (String, String)>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridRow {
    pub x: f64,
    pub y: f64,
    pub value: Complex64,
    pub reference: Option<(String, String)>,
    pub err: Option<RelErr>,
    pub region: RegionLabel,
    pub terms: usize,
}

impl GridRow {
    pub fn csv_line(&self) -> String {
        let mut s = String::with_capacity(160);
        let _ = write!(s, "{},{},{},{},", fmt_f64(self.x), fmt_f64(self.y), fmt_f64(self.value.re), fmt_f64(self.value.im));
        match &self.reference {
            Some((a, b)) => {
                let _ = write!(s, "{a},{b},");
            }
            None => s.push_str(",,"),
        }
        match &self.err {
            Some(e) => {
                let _ = write!(s, "{},{},{},", fmt_f64(e.re_rel), fmt_f64(e.im_rel), fmt_f64(e.mod_rel));
            }
            None => s.push_str(",,,"),
        }
        let _ = write!(s, "{},{}", self.region, self.terms);
        s
    }
}

/// Oracle value of `w` at any point with `y >= 0`; `x < 0` by conjugation.
pub fn reference_at(x: f64, y: f64) -> Result<RefValue> {
    let mut r = w_ref(Complex64::new(x.abs(), y), FIXTURE_DIGITS as u32)?;
    if x < 0.0 {
        r.im = r.im.neg();
    }
    Ok(r)
}

fn decimal_pair(r: &RefValue) -> (String, String) {
    r.to_decimal(FIXTURE_DIGITS)
}

fn eval_row(x: f64, y: f64, p: &TuningParams64, opts: EvalOptions, refs: &RefSource) -> Result<GridRow> {
    let z = Complex64::new(x, y);
    let r = w(z, p, opts)?;
    let reference = match refs {
        RefSource::None => None,
        RefSource::Oracle => Some(decimal_pair(&reference_at(x, y)?)),
        RefSource::Cache(map) => match map.get(&(x.to_bits(), y.to_bits())) {
            Some(pair) => Some(pair.clone()),
            None => Some(decimal_pair(&reference_at(x, y)?)),
        },
    };
    let err = match &reference {
        Some((a, b)) => Some(relerr(r.value, &RefValue::from_decimal(a, b, FIXTURE_DIGITS as u32)?)?),
        None => None,
    };
    Ok(GridRow { x, y, value: r.value, reference, err, region: r.region, terms: r.terms_used })
}

/// Evaluates every grid point, in parallel, returning rows in grid order.
/// `threads = None` uses the global pool.
pub fn evaluate_points(
    pts: &[(f64, f64)],
    p: &TuningParams64,
    opts: EvalOptions,
    refs: &RefSource,
    threads: Option<usize>,
) -> Result<Vec<GridRow>> {
    let run = || pts.par_iter().map(|&(x, y)| eval_row(x, y, p, opts, refs)).collect::<Result<Vec<_>>>();
    match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}

pub fn evaluate_grid(
    spec: &GridSpec,
    p: &TuningParams64,
    opts: EvalOptions,
    refs: &RefSource,
    threads: Option<usize>,
) -> Result<Vec<GridRow>> {
    evaluate_points(&spec.points(), p, opts, refs, threads)
}

pub fn write_csv<W: Write>(rows: &[GridRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{}", r.csv_line())?;
    }
    out.flush()
}

pub fn write_csv_file(rows: &[GridRow], path: &Path) -> Result<()> {
    let f = std::fs::File::create(path).map_err(io_err(path))?;
    write_csv(rows, std::io::BufWriter::new(f)).map_err(io_err(path))
}

/// Largest error in a set of rows; ties go to the earliest row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Worst {
    pub value: f64,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary {
    pub modulus: Worst,
    pub componentwise: Worst,
}

pub fn summarize(rows: &[GridRow]) -> Option<Summary> {
    let mut m: Option<Worst> = None;
    let mut c: Option<Worst> = None;
    let bump = |slot: &mut Option<Worst>, v: f64, x: f64, y: f64| {
        if slot.map_or(true, |s| v > s.value) {
            *slot = Some(Worst { value: v, x, y });
        }
    };
    for r in rows {
        if let Some(e) = r.err {
            bump(&mut m, e.mod_rel, r.x, r.y);
            bump(&mut c, e.componentwise(), r.x, r.y);
        }
    }
    Some(Summary { modulus: m?, componentwise: c? })
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (m, c) = (self.modulus, self.componentwise);
        write!(
            f,
            "max relerr_mod = {:e} at x = {}, y = {}; max componentwise = {:e} at x = {}, y = {}",
            m.value,
            fmt_f64(m.x),
            fmt_f64(m.y),
            c.value,
            fmt_f64(c.x),
            fmt_f64(c.y)
        )
    }
}

/// Gray level of a region in the PGM map.
pub fn gray_level(r: RegionLabel) -> u8 {
    match r {
        RegionLabel::S => 64,
        RegionLabel::R => 128,
        RegionLabel::Q => 192,
        RegionLabel::RemedyStrip => 255,
    }
}

/// `(x, y, region)` for every grid point, x-major.
pub fn region_map(spec: &GridSpec, p: &TuningParams64, remedy: bool) -> Vec<(f64, f64, RegionLabel)> {
    spec.points().into_iter().map(|(x, y)| (x, y, classify(Complex64::new(x, y), p, remedy))).collect()
}

pub fn region_csv(map: &[(f64, f64, RegionLabel)]) -> String {
    let mut s = String::from("x,y,region\n");
    for (x, y, r) in map {
        let _ = writeln!(s, "{},{},{r}", fmt_f64(*x), fmt_f64(*y));
    }
    s
}

/// Plain (P2) PGM: one pixel per grid point, x to the right, y upwards, so
/// the first image row is `y_max`. At most 16 values per text line.
pub fn region_pgm(spec: &GridSpec, map: &[(f64, f64, RegionLabel)]) -> String {
    let (nx, ny) = (spec.x.points, spec.y.points);
    let mut s = format!("P2\n{nx} {ny}\n255\n");
    for j in (0..ny).rev() {
        let row: Vec<String> = (0..nx).map(|i| gray_level(map[i * ny + j].2).to_string()).collect();
        for chunk in row.chunks(16) {
            s.push_str(&chunk.join(" "));
            s.push('\n');
        }
    }
    s
}
