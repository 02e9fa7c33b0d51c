//! Thin layer over `astro_float`: a precision-carrying context, a complex
//! pair type, exact conversions to and from f64, and decimal I/O.

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, Word};
use num_bigint::BigUint;

use crate::OracleError;

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

/// Working precision plus the constant cache used by the transcendental
/// functions. One per call; never shared between threads.
pub(crate) struct Ctx {
    pub p: usize,
    pub cc: Consts,
}

impl Ctx {
    pub fn new(p: usize) -> Result<Self, OracleError> {
        let cc = Consts::new().map_err(|e| OracleError::Backend(format!("{e:?}")))?;
        Ok(Self { p, cc })
    }

    pub fn f(&self, v: f64) -> BigFloat {
        BigFloat::from_f64(v, self.p.max(64))
    }

    pub fn u(&self, n: u64) -> BigFloat {
        BigFloat::from_u64(n, self.p.max(64))
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.p, RM)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.p, RM)
    }

    pub fn exp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.p, RM, &mut self.cc)
    }

    pub fn sin_cos(&mut self, a: &BigFloat) -> (BigFloat, BigFloat) {
        (a.sin(self.p, RM, &mut self.cc), a.cos(self.p, RM, &mut self.cc))
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, RM)
    }

    /// `2 / sqrt(pi)`
    pub fn two_over_sqrt_pi(&mut self) -> BigFloat {
        let pi = self.pi();
        let s = self.sqrt(&pi);
        self.div(&self.u(2), &s)
    }

    /// `e^{a} (cos b + i sin b)`
    pub fn cexp(&mut self, a: &BigFloat, b: &BigFloat) -> Cbf {
        let m = self.exp(a);
        let (s, c) = self.sin_cos(b);
        Cbf { re: self.mul(&m, &c), im: self.mul(&m, &s) }
    }

    pub fn biguint(&self, n: &BigUint) -> BigFloat {
        let base = BigFloat::from_f64(18446744073709551616.0, 64);
        let mut acc = BigFloat::from_u64(0, self.p);
        for d in n.to_u64_digits().iter().rev() {
            acc = self.add(&self.mul(&acc, &base), &BigFloat::from_u64(*d, 64));
        }
        acc
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Cbf {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Cbf {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Self { re, im }
    }

    pub fn zero(p: usize) -> Self {
        Self { re: BigFloat::from_u64(0, p), im: BigFloat::from_u64(0, p) }
    }

    pub fn real(re: BigFloat, p: usize) -> Self {
        Self { re, im: BigFloat::from_u64(0, p) }
    }

    pub fn add(&self, o: &Cbf, c: &Ctx) -> Cbf {
        Cbf { re: c.add(&self.re, &o.re), im: c.add(&self.im, &o.im) }
    }

    pub fn sub(&self, o: &Cbf, c: &Ctx) -> Cbf {
        Cbf { re: c.sub(&self.re, &o.re), im: c.sub(&self.im, &o.im) }
    }

    pub fn mul(&self, o: &Cbf, c: &Ctx) -> Cbf {
        let re = c.sub(&c.mul(&self.re, &o.re), &c.mul(&self.im, &o.im));
        let im = c.add(&c.mul(&self.re, &o.im), &c.mul(&self.im, &o.re));
        Cbf { re, im }
    }

    pub fn scale(&self, k: &BigFloat, c: &Ctx) -> Cbf {
        Cbf { re: c.mul(&self.re, k), im: c.mul(&self.im, k) }
    }

    /// `i * self`
    pub fn times_i(&self) -> Cbf {
        Cbf { re: self.im.neg(), im: self.re.clone() }
    }

    /// Binary exponent of the larger component, `None` for zero.
    pub fn lg(&self) -> Option<i64> {
        match (lg(&self.re), lg(&self.im)) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }
}

/// Binary exponent `e` with `2^{e-1} <= |v| < 2^e`; `None` for zero.
pub(crate) fn lg(v: &BigFloat) -> Option<i64> {
    if v.is_zero() {
        None
    } else {
        v.exponent().map(|e| e as i64)
    }
}

/// `|a - b| <= 2^{-bits} |b|` up to a factor of two (conservative).
pub(crate) fn close(a: &BigFloat, b: &BigFloat, bits: i64, p: usize) -> bool {
    let d = a.sub(b, p, RM);
    match (lg(&d), lg(b)) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(ed), Some(eb)) => ed <= eb - bits - 1,
    }
}

/// Componentwise agreement; components below `2^{-floor}` of the modulus
/// scale are compared against that floor instead of themselves.
pub(crate) fn close_c(a: &Cbf, b: &Cbf, bits: i64, floor: i64, p: usize) -> bool {
    let Some(m) = b.lg() else {
        return a.lg().is_none();
    };
    let ok = |x: &BigFloat, y: &BigFloat| {
        let d = x.sub(y, p, RM);
        match lg(&d) {
            None => true,
            Some(ed) => {
                let scale = lg(y).unwrap_or(i64::MIN).max(m - floor);
                ed <= scale - bits - 1
            }
        }
    };
    ok(&a.re, &b.re) && ok(&a.im, &b.im)
}

fn pow2(k: i32) -> f64 {
    if k >= -1022 {
        f64::from_bits(((k + 1023) as u64) << 52)
    } else {
        f64::from_bits(1u64 << (k + 1074))
    }
}

/// Correctly rounded (to nearest even) conversion to f64.
pub fn to_f64(v: &BigFloat) -> f64 {
    if v.is_nan() {
        return f64::NAN;
    }
    if v.is_inf_pos() {
        return f64::INFINITY;
    }
    if v.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    let Some((words, _, sign, e, _)) = v.as_raw_parts() else {
        return f64::NAN;
    };
    let neg = sign == Sign::Neg;
    let signed = |m: f64| if neg { -m } else { m };
    let Some((&top, rest)) = words.split_last() else {
        return signed(0.0);
    };
    if top == 0 {
        return signed(0.0);
    }
    // |v| = top * 2^{e-64} * (1 + tail), top has its MSB set.
    let e = e as i64;
    if e > 1024 {
        return signed(f64::INFINITY);
    }
    let shift: i64 = if e >= -1021 { 11 } else { 11 + (-1021 - e) };
    if shift > 64 {
        return signed(0.0);
    }
    let tail_nonzero = rest.iter().any(|&w: &Word| w != 0);
    let (kept, round, sticky) = if shift == 64 {
        (0u64, top >> 63 == 1, (top << 1) != 0 || tail_nonzero)
    } else {
        let s = shift as u32;
        let kept = top >> s;
        let round = (top >> (s - 1)) & 1 == 1;
        let mask = (1u64 << (s - 1)) - 1;
        (kept, round, (top & mask) != 0 || tail_nonzero)
    };
    let m = if round && (sticky || kept & 1 == 1) { kept + 1 } else { kept };
    let k = (e - 64 + shift) as i32;
    // m <= 2^53 and k <= 971: the product is exact unless it overflows.
    signed((m as f64) * pow2(k))
}

/// Exact integer value of a non-negative integral `v < 2^128`.
fn to_u128(v: &BigFloat) -> u128 {
    let Some((words, _, _, e, _)) = v.as_raw_parts() else {
        return 0;
    };
    if v.is_zero() || e <= 0 {
        return 0;
    }
    let n = words.len();
    let hi = words[n - 1] as u128;
    let lo = if n >= 2 { words[n - 2] as u128 } else { 0 };
    let top = (hi << 64) | lo;
    top >> (128 - e as u32)
}

/// `|v|` printed with `sig` significant digits (at most 30) in scientific form.
pub fn format_sig(v: &BigFloat, sig: usize) -> String {
    assert!((1..=30).contains(&sig));
    let Some(e2) = lg(v) else {
        return format!("{}e+00", "0.".to_string() + &"0".repeat(sig - 1));
    };
    let p = 192usize.max(v.precision().unwrap_or(0) + 64);
    let neg = v.is_negative();
    let a = v.abs();
    let lower = 10u128.pow(sig as u32 - 1);
    let upper = lower * 10;
    let mut k = (((e2 - 1) as f64) * std::f64::consts::LOG10_2).floor() as i64;
    for _ in 0..4 {
        let n = sig as i64 - 1 - k;
        let ten = BigFloat::from_u64(10, p);
        let scale = ten.powi(n.unsigned_abs() as usize, p, RM);
        let s = if n >= 0 { a.mul(&scale, p, RM) } else { a.div(&scale, p, RM) };
        let m = to_u128(&s.round(0, RM));
        if m >= upper {
            k += 1;
        } else if m < lower {
            k -= 1;
        } else {
            let digits = m.to_string();
            let mant = if sig > 1 { format!("{}.{}", &digits[..1], &digits[1..]) } else { digits };
            let sgn = if neg { "-" } else { "" };
            let esgn = if k < 0 { '-' } else { '+' };
            return format!("{sgn}{mant}e{esgn}{:02}", k.abs());
        }
    }
    unreachable!("decimal exponent search did not settle")
}

/// Parses a decimal string at precision `p` bits.
pub fn parse(s: &str, p: usize) -> Result<BigFloat, OracleError> {
    let mut cc = Consts::new().map_err(|e| OracleError::Backend(format!("{e:?}")))?;
    let t = s.trim();
    let v = BigFloat::parse(t, Radix::Dec, p, RM, &mut cc);
    if v.is_nan() || t.is_empty() {
        return Err(OracleError::Parse(s.to_string()));
    }
    Ok(v)
}
