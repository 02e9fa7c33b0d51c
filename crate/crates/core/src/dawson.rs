//! Dawson's integral `F(x) = e^{-x^2} ∫_0^x e^{t^2} dt` for real `x`.
//!
//! Three branches on `|x|`:
//! - `|x| < 0.5`: Maclaurin series `Σ (-1)^k 2^k x^{2k+1} / (2k+1)!!`;
//! - `0.5 <= |x| < 10`: degree-10 Taylor polynomial about the nearest table
//!   centre (spacing 1/16), the coefficients generated from the tabulated
//!   `F` and `F'` by the recurrence `d_{n+1} = -2 (x d_n + d_{n-1}) / (n+1)`;
//! - `|x| >= 10`: asymptotic series `(1/2x) Σ (2k-1)!! / (2x^2)^k`.
//!
//! The table is produced from the extended-precision reference by the
//! `calibrate` tool. Oddness is exact: the value is computed on `|x|` and
//! the sign applied afterwards.

use crate::dawson_table::{ASYMPTOTIC_FROM, TABLE, TABLE_DEGREE, TABLE_FIRST, TABLE_STEP};
use crate::scalar::Scalar;
use crate::{Error, Result};

const MACLAURIN_BELOW: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DawsonMethod {
    Maclaurin,
    TaylorTable,
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DawsonResult<T> {
    pub value: T,
    pub method: DawsonMethod,
}

/// Dawson's integral; NaN is rejected.
pub fn dawson<T: Scalar>(x: T) -> Result<T> {
    dawson_with_method(x).map(|r| r.value)
}

pub fn dawson_with_method<T: Scalar>(x: T) -> Result<DawsonResult<T>> {
    if x.is_nan() {
        return Err(Error::InvalidArgument("dawson: NaN argument"));
    }
    let (f, _, method) = dawson_pair_abs(x.abs());
    let value = if x.is_sign_negative() { -f } else { f };
    Ok(DawsonResult { value, method })
}

/// `(F(x), F'(x))` for `x >= 0`, with `F' = 1 - 2xF` formed without
/// cancellation where the table or the asymptotic branch applies.
#[inline]
pub(crate) fn dawson_pair<T: Scalar>(x: T) -> (T, T) {
    let (f, df, _) = dawson_pair_abs(x);
    (f, df)
}

fn dawson_pair_abs<T: Scalar>(x: T) -> (T, T, DawsonMethod) {
    if x < T::lit(MACLAURIN_BELOW) {
        let f = maclaurin(x);
        let two = T::lit(2.0);
        (f, T::one() - two * x * f, DawsonMethod::Maclaurin)
    } else if x < T::lit(ASYMPTOTIC_FROM) {
        let (f, df) = taylor_table(x);
        (f, df, DawsonMethod::TaylorTable)
    } else if x.is_infinite() {
        (T::zero(), T::zero(), DawsonMethod::Asymptotic)
    } else {
        let (f, df) = asymptotic(x);
        (f, df, DawsonMethod::Asymptotic)
    }
}

fn maclaurin<T: Scalar>(x: T) -> T {
    let m = T::lit(-2.0) * x * x;
    let tiny = T::epsilon() * T::lit(0.125);
    let mut term = T::one();
    let mut sum = T::one();
    let mut k = 1usize;
    loop {
        term = term * m / T::from_count(2 * k + 1);
        sum = sum + term;
        if term.abs() <= tiny * sum.abs() {
            break;
        }
        k += 1;
    }
    x * sum
}

fn taylor_table<T: Scalar>(x: T) -> (T, T) {
    let first = T::lit(TABLE_FIRST);
    let step = T::lit(TABLE_STEP);
    let k = ((x - first) / step).round().to_usize().unwrap_or(0).min(TABLE.len() - 1);
    let xc = first + step * T::from_count(k);
    let dx = x - xc;
    let (f0, df0) = TABLE[k];

    let mut d = [T::zero(); TABLE_DEGREE + 1];
    d[0] = T::lit(f0);
    d[1] = T::lit(df0);
    let two = T::lit(2.0);
    for n in 1..TABLE_DEGREE {
        d[n + 1] = -(two / T::from_count(n + 1)) * (xc * d[n] + d[n - 1]);
    }

    let mut f = d[TABLE_DEGREE];
    let mut df = T::from_count(TABLE_DEGREE) * d[TABLE_DEGREE];
    for n in (1..TABLE_DEGREE).rev() {
        f = f * dx + d[n];
        df = df * dx + T::from_count(n) * d[n];
    }
    (f * dx + d[0], df)
}

fn asymptotic<T: Scalar>(x: T) -> (T, T) {
    // a_k = (2k-1)!! / (2x^2)^k; the tail sum is F' = -Σ_{k>=1} a_k.
    let inv = (T::lit(0.5) / x) / x;
    let tiny = T::epsilon() * T::lit(0.0625);
    let mut a = inv;
    let mut tail = T::zero();
    let mut k = 1usize;
    while a > tiny {
        tail = tail + a;
        k += 1;
        let next = a * T::from_count(2 * k - 1) * inv;
        if next >= a {
            break;
        }
        a = next;
    }
    ((T::one() + tail) * T::lit(0.5) / x, -tail)
}
