//! Frozen oracle values on disk: `x,y,re_ref,im_ref` for `w` and
//! `x,f_ref` for Dawson's integral, 25 significant digits.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use faddeyeva_oracle::{f_ref, format_sig, RefValue, FIXTURE_DIGITS};
use rayon::prelude::*;

use crate::grid::reference_at;
use crate::{fmt_f64, io_err, CliError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct WRow {
    pub x: f64,
    pub y: f64,
    pub re: String,
    pub im: String,
}

impl WRow {
    pub fn reference(&self) -> Result<RefValue> {
        Ok(RefValue::from_decimal(&self.re, &self.im, FIXTURE_DIGITS as u32)?)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FRow {
    pub x: f64,
    pub f: String,
}

pub fn compute_w(pts: &[(f64, f64)]) -> Result<Vec<WRow>> {
    pts.par_iter()
        .map(|&(x, y)| {
            let (re, im) = reference_at(x, y)?.to_decimal(FIXTURE_DIGITS);
            Ok(WRow { x, y, re, im })
        })
        .collect()
}

pub fn compute_f(xs: &[f64]) -> Result<Vec<FRow>> {
    xs.par_iter()
        .map(|&x| Ok(FRow { x, f: format_sig(&f_ref(x, FIXTURE_DIGITS as u32)?, FIXTURE_DIGITS) }))
        .collect()
}

fn parse_f64(s: &str, path: &Path) -> Result<f64> {
    s.parse().map_err(|_| CliError::Usage(format!("{}: bad number {s:?}", path.display())))
}

fn read_rows(path: &Path, header: &str) -> Result<Vec<Vec<String>>> {
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    let mut lines = text.lines();
    if lines.next() != Some(header) {
        return Err(CliError::Usage(format!("{}: expected header {header:?}", path.display())));
    }
    Ok(lines.filter(|l| !l.is_empty()).map(|l| l.split(',').map(str::to_owned).collect()).collect())
}

fn write_text(path: &Path, s: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(io_err(dir))?;
    }
    std::fs::write(path, s).map_err(io_err(path))
}

pub const W_HEADER: &str = "x,y,re_ref,im_ref";
pub const F_HEADER: &str = "x,f_ref";

pub fn read_w(path: &Path) -> Result<Vec<WRow>> {
    read_rows(path, W_HEADER)?
        .into_iter()
        .map(|f| match f.as_slice() {
            [x, y, re, im] => Ok(WRow { x: parse_f64(x, path)?, y: parse_f64(y, path)?, re: re.clone(), im: im.clone() }),
            _ => Err(CliError::Usage(format!("{}: expected 4 fields", path.display()))),
        })
        .collect()
}

pub fn write_w(path: &Path, rows: &[WRow]) -> Result<()> {
    let mut s = format!("{W_HEADER}\n");
    for r in rows {
        let _ = writeln!(s, "{},{},{},{}", fmt_f64(r.x), fmt_f64(r.y), r.re, r.im);
    }
    write_text(path, &s)
}

pub fn read_f(path: &Path) -> Result<Vec<FRow>> {
    read_rows(path, F_HEADER)?
        .into_iter()
        .map(|f| match f.as_slice() {
            [x, v] => Ok(FRow { x: parse_f64(x, path)?, f: v.clone() }),
            _ => Err(CliError::Usage(format!("{}: expected 2 fields", path.display()))),
        })
        .collect()
}

pub fn write_f(path: &Path, rows: &[FRow]) -> Result<()> {
    let mut s = format!("{F_HEADER}\n");
    for r in rows {
        let _ = writeln!(s, "{},{}", fmt_f64(r.x), r.f);
    }
    write_text(path, &s)
}

fn same_points(rows: &[WRow], pts: &[(f64, f64)]) -> bool {
    rows.len() == pts.len()
        && rows.iter().zip(pts).all(|(r, &(x, y))| r.x.to_bits() == x.to_bits() && r.y.to_bits() == y.to_bits())
}

/// Reads the fixture at `path`, rebuilding it from the oracle when it is
/// missing or was made for a different point set.
pub fn load_or_build_w(path: &Path, pts: &[(f64, f64)]) -> Result<Vec<WRow>> {
    if path.exists() {
        let rows = read_w(path)?;
        if same_points(&rows, pts) {
            return Ok(rows);
        }
    }
    let rows = compute_w(pts)?;
    write_w(path, &rows)?;
    Ok(rows)
}

pub fn load_or_build_f(path: &Path, xs: &[f64]) -> Result<Vec<FRow>> {
    if path.exists() {
        let rows = read_f(path)?;
        if rows.len() == xs.len() && rows.iter().zip(xs).all(|(r, x)| r.x.to_bits() == x.to_bits()) {
            return Ok(rows);
        }
    }
    let rows = compute_f(xs)?;
    write_f(path, &rows)?;
    Ok(rows)
}

/// Lookup table for [`crate::grid::RefSource::Cache`].
pub fn cache(rows: &[WRow]) -> HashMap<(u64, u64), (String, String)> {
    rows.iter().map(|r| ((r.x.to_bits(), r.y.to_bits()), (r.re.clone(), r.im.clone()))).collect()
}
