//! Extended-precision reference values for the Faddeyeva function `w(z)`,
//! Dawson's integral and `erfcx`, plus the error metrics used to score a
//! double-precision evaluator against them.
//!
//! Every value is computed twice, 32 bits apart, and returned only when the
//! two runs agree to the requested number of digits; quadratures and series
//! are likewise run until two successive refinements agree. Nothing here
//! shares code with the production evaluator.
//!
//! ```
//! use faddeyeva_oracle::{w_ref, Complex64};
//!
//! let r = w_ref(Complex64::new(0.0, 1.0), 20).unwrap();
//! assert!((r.to_complex64().re - 0.42758357615580700).abs() < 1e-16);
//! ```

mod bf;
mod quad;
mod wref;

pub use astro_float::{self, BigFloat};
pub use bf::{format_sig, parse as parse_decimal, to_f64};
pub use num_complex::Complex64;

use bf::{lg, Cbf, RM};

/// Largest `|x|` and `y` accepted by [`w_ref`].
pub const DOMAIN_MAX: f64 = 30.0;
/// Largest `x` accepted by [`f_ref`].
pub const DAWSON_MAX: f64 = 100.0;
/// Largest `|z|` accepted by [`w_series_ref`].
pub const SERIES_MAX: f64 = 4.0;
/// Significant digits written to fixture files.
pub const FIXTURE_DIGITS: usize = 25;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("argument outside the supported domain: {0}")]
    Domain(String),
    #[error("could not reach {digits} digits within {bits} bits")]
    PrecisionFailure { digits: u32, bits: usize },
    #[error("relative error undefined for a zero reference")]
    UndefinedMetric,
    #[error("malformed decimal number: {0:?}")]
    Parse(String),
    #[error("multiprecision backend: {0}")]
    Backend(String),
}

pub type Result<T, E = OracleError> = std::result::Result<T, E>;

/// A reference value of `w`, both components carried at `precision_bits`.
#[derive(Debug, Clone)]
pub struct RefValue {
    pub re: BigFloat,
    pub im: BigFloat,
    /// Correct significant digits per component (components below about
    /// 1e-300 of the modulus are correct to that absolute floor instead).
    pub digits_claimed: u32,
    pub precision_bits: usize,
}

impl RefValue {
    fn from_cbf(v: Cbf, digits: u32, precision_bits: usize) -> Self {
        Self { re: v.re, im: v.im, digits_claimed: digits, precision_bits }
    }

    /// Builds a value from decimal strings, e.g. a fixture row.
    pub fn from_decimal(re: &str, im: &str, digits: u32) -> Result<Self> {
        let p = 192;
        Ok(Self { re: parse_decimal(re, p)?, im: parse_decimal(im, p)?, digits_claimed: digits, precision_bits: p })
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }

    /// Both components with `sig` significant digits.
    pub fn to_decimal(&self, sig: usize) -> (String, String) {
        (format_sig(&self.re, sig), format_sig(&self.im, sig))
    }
}

fn check_digits(digits: u32) -> Result<()> {
    if (20..=50).contains(&digits) {
        Ok(())
    } else {
        Err(OracleError::Domain(format!("digits = {digits}, expected 20..=50")))
    }
}

fn base_precision(digits: u32, guard: usize) -> usize {
    (wref::target_bits(digits) as usize + 40).max(136) + guard
}

/// `w(z)` for `z` in `[0, 30] x [0, 30]` to `digits` significant digits.
pub fn w_ref(z: Complex64, digits: u32) -> Result<RefValue> {
    check_digits(digits)?;
    let (x, y) = (z.re, z.im);
    let inside = |v: f64| (0.0..=DOMAIN_MAX).contains(&v);
    if !(inside(x) && inside(y)) {
        return Err(OracleError::Domain(format!("w_ref({x}, {y}): need 0 <= x, y <= {DOMAIN_MAX}")));
    }
    let (x, y) = (x.abs(), y.abs());
    if x == 0.0 && y == 0.0 {
        let one = BigFloat::from_u64(1, 128);
        return Ok(RefValue { re: one, im: BigFloat::from_u64(0, 128), digits_claimed: digits, precision_bits: 128 });
    }
    let p0 = base_precision(digits, wref::guard_bits(x, y));
    let (v, p) = wref::refine(digits, p0, |c| wref::w_path(x, y, c))?;
    Ok(RefValue::from_cbf(v, digits, p))
}

/// `w(z)` for `|z| <= 4` from the Maclaurin series of `erf`, summed with
/// enough guard bits to absorb its `e^{|z|^2}` cancellation.
pub fn w_series_ref(z: Complex64, digits: u32) -> Result<RefValue> {
    check_digits(digits)?;
    let (x, y) = (z.re, z.im);
    if !(x.is_finite() && y.is_finite()) || x.hypot(y) > SERIES_MAX {
        return Err(OracleError::Domain(format!("w_series_ref({x}, {y}): need |z| <= {SERIES_MAX}")));
    }
    let guard = ((x * x + y * y) * std::f64::consts::LOG2_E).ceil() as usize + 8;
    let (v, p) = wref::refine(digits, base_precision(digits, guard), |c| Ok(wref::w_series(x, y, c)))?;
    Ok(RefValue::from_cbf(v, digits, p))
}

/// Dawson's integral `F(x)` for `0 <= x <= 100`.
pub fn f_ref(x: f64, digits: u32) -> Result<BigFloat> {
    check_digits(digits)?;
    if !(0.0..=DAWSON_MAX).contains(&x) {
        return Err(OracleError::Domain(format!("f_ref({x}): need 0 <= x <= {DAWSON_MAX}")));
    }
    let guard = (1.0 + x).log2().ceil() as usize * 2;
    let (v, _) = wref::refine(digits, base_precision(digits, guard), |c| {
        let xb = c.f(x);
        Ok(Cbf::real(wref::dawson_bf(&xb, c), c.p))
    })?;
    Ok(v.re)
}

/// `erfcx(y) = e^{y^2} erfc(y)` for `0.5 <= y <= 1e6`.
pub fn erfcx_ref(y: f64, digits: u32) -> Result<BigFloat> {
    check_digits(digits)?;
    if !(0.5..=1e6).contains(&y) {
        return Err(OracleError::Domain(format!("erfcx_ref({y}): need 0.5 <= y <= 1e6")));
    }
    let (v, _) = wref::refine(digits, base_precision(digits, 8), |c| {
        let yb = c.f(y);
        Ok(Cbf::real(wref::erfcx_bf(&yb, c)?, c.p))
    })?;
    Ok(v.re)
}

/// Relative errors of an approximation against a reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelErr {
    pub re_rel: f64,
    pub im_rel: f64,
    pub mod_rel: f64,
}

impl RelErr {
    /// Larger of the two componentwise errors.
    pub fn componentwise(&self) -> f64 {
        self.re_rel.max(self.im_rel)
    }
}

/// Componentwise and modulus relative error of `approx`.
///
/// A reference component smaller than `1e-300 |ref|` is scored as
/// `|a - r| / |ref|` rather than relative to itself.
pub fn relerr(approx: Complex64, reference: &RefValue) -> Result<RelErr> {
    let p = reference.precision_bits.max(128) + 64;
    let ar = BigFloat::from_f64(approx.re, p);
    let ai = BigFloat::from_f64(approx.im, p);
    relerr_bf(&ar, &ai, reference, p)
}

/// [`relerr`] for an extended-precision approximation.
pub fn relerr_ref(approx: &RefValue, reference: &RefValue) -> Result<RelErr> {
    let p = reference.precision_bits.max(approx.precision_bits).max(128) + 64;
    relerr_bf(&approx.re, &approx.im, reference, p)
}

fn relerr_bf(ar: &BigFloat, ai: &BigFloat, reference: &RefValue, p: usize) -> Result<RelErr> {
    let (rr, ri) = (&reference.re, &reference.im);
    let modulus = rr.mul(rr, p, RM).add(&ri.mul(ri, p, RM), p, RM).sqrt(p, RM);
    if lg(&modulus).is_none() {
        return Err(OracleError::UndefinedMetric);
    }
    let dr = ar.sub(rr, p, RM);
    let di = ai.sub(ri, p, RM);
    let floor = modulus.mul(&BigFloat::from_f64(1e-300, p), p, RM);
    let comp = |d: &BigFloat, r: &BigFloat| {
        let den = if r.abs().cmp(&floor).is_some_and(|o| o < 0) { &modulus } else { r };
        to_f64(&d.abs().div(&den.abs(), p, RM))
    };
    let dmod = dr.mul(&dr, p, RM).add(&di.mul(&di, p, RM), p, RM).sqrt(p, RM);
    Ok(RelErr { re_rel: comp(&dr, rr), im_rel: comp(&di, ri), mod_rel: to_f64(&dmod.div(&modulus, p, RM)) })
}
