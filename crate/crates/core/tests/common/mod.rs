#![allow(dead_code)]

use faddeyeva::Complex64;
use faddeyeva_oracle::astro_float::{Consts, RoundingMode};
use faddeyeva_oracle::{relerr, to_f64, w_ref, BigFloat, RefValue};

pub const RM: RoundingMode = RoundingMode::ToEven;

pub fn c(x: f64, y: f64) -> Complex64 {
    Complex64::new(x, y)
}

pub fn oracle(x: f64, y: f64) -> RefValue {
    w_ref(c(x, y), 20).unwrap()
}

/// Componentwise error against a fresh oracle value.
pub fn err(v: Complex64, x: f64, y: f64) -> f64 {
    relerr(v, &oracle(x, y)).unwrap().componentwise()
}

pub fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

/// `e^{-z^2}` correctly rounded per component.
pub fn exp_neg_sq_exact(x: f64, y: f64) -> Complex64 {
    let p = 320;
    let mut cc = Consts::new().unwrap();
    let (bx, by) = (BigFloat::from_f64(x, p), BigFloat::from_f64(y, p));
    let a = by.mul(&by, p, RM).sub(&bx.mul(&bx, p, RM), p, RM);
    let th = bx.mul(&by, p, RM).mul(&BigFloat::from_f64(-2.0, p), p, RM);
    let m = a.exp(p, RM, &mut cc);
    let re = m.mul(&th.cos(p, RM, &mut cc), p, RM);
    let im = m.mul(&th.sin(p, RM, &mut cc), p, RM);
    c(to_f64(&re), to_f64(&im))
}

/// Distance in units of the last place of `want`.
pub fn ulps(got: f64, want: f64) -> f64 {
    if got == want {
        return 0.0;
    }
    let a = want.abs();
    let ulp = if a == 0.0 { f64::from_bits(1) } else { f64::from_bits(a.to_bits() + 1) - a };
    (got - want).abs() / ulp
}
