use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar the kernels are generic over (f32 or f64).
///
/// All tuning constants are tabulated in f64 and converted on use; the
/// calibrated accuracy targets refer to f64.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts an f64 literal to `Self`, rounding to nearest.
    #[inline(always)]
    fn lit(v: f64) -> Self {
        // f64 -> f32/f64 never fails for finite literals.
        Self::from_f64(v).unwrap()
    }

    #[inline(always)]
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).unwrap()
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Exact product `a*b = hi + lo` using a fused multiply-add.
#[inline(always)]
pub(crate) fn two_prod<T: Scalar>(a: T, b: T) -> (T, T) {
    let hi = a * b;
    (hi, a.mul_add(b, -hi))
}

/// Exact sum `a+b = hi + lo` (Knuth).
#[inline(always)]
pub(crate) fn two_sum<T: Scalar>(a: T, b: T) -> (T, T) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// `e^{-x^2}` with the square carried to double length, so the result keeps
/// full relative accuracy for large `x`.
#[inline]
pub(crate) fn exp_neg_square<T: Scalar>(x: T) -> T {
    let (hi, lo) = two_prod(x, x);
    let e = (-hi).exp();
    e - e * lo
}
