use faddeyeva_oracle::astro_float::{Consts, RoundingMode};
use faddeyeva_oracle::{
    erfcx_ref, f_ref, parse_decimal, relerr, relerr_ref, to_f64, w_ref, w_series_ref, BigFloat,
    Complex64, OracleError, RefValue,
};
use proptest::prelude::*;

const RM: RoundingMode = RoundingMode::ToEven;
const P: usize = 256;

fn c(x: f64, y: f64) -> Complex64 {
    Complex64::new(x, y)
}

fn two_over_sqrt_pi() -> BigFloat {
    let mut cc = Consts::new().unwrap();
    let pi = cc.pi(P, RM);
    BigFloat::from_u64(2, P).div(&pi.sqrt(P, RM), P, RM)
}

#[test]
fn origin_is_exactly_one() {
    let r = w_ref(c(0.0, 0.0), 20).unwrap();
    assert_eq!(to_f64(&r.re), 1.0);
    assert!(r.im.is_zero());
}

#[test]
fn imaginary_unit_matches_erfcx() {
    let w = w_ref(c(0.0, 1.0), 25).unwrap();
    let e = erfcx_ref(1.0, 25).unwrap();
    let ev = RefValue { re: e, im: BigFloat::from_u64(0, 128), digits_claimed: 25, precision_bits: 200 };
    let r = relerr_ref(&w, &ev).unwrap();
    assert!(r.mod_rel < 1e-20, "{r:?}");
    assert!(w.im.is_zero());
    assert!((w.to_complex64().re - 0.4275835761558070).abs() < 1e-16);
}

#[test]
fn real_axis_is_gaussian_plus_dawson() {
    let w = w_ref(c(1.0, 0.0), 25).unwrap();
    let f = f_ref(1.0, 25).unwrap();
    let mut cc = Consts::new().unwrap();
    let e = BigFloat::from_i64(-1, P).exp(P, RM, &mut cc);
    let im = two_over_sqrt_pi().mul(&f, P, RM);
    let expect = RefValue { re: e, im, digits_claimed: 25, precision_bits: P };
    let r = relerr_ref(&w, &expect).unwrap();
    assert!(r.componentwise() < 1e-20, "{r:?}");
}

#[test]
fn large_real_part_matches_asymptotics() {
    let (x, y) = (20.0f64, 1e-5f64);
    let v = w_ref(c(x, y), 20).unwrap().to_complex64();
    let rp = std::f64::consts::PI.sqrt();
    let re = y / (rp * (x * x + y * y));
    let im = (1.0 + 1.0 / (2.0 * x * x)) / (rp * x);
    assert!(((v.re - re) / re).abs() < 5e-3, "{} vs {re}", v.re);
    assert!(((v.im - im) / im).abs() < 1e-4, "{} vs {im}", v.im);
    assert!((v.re - 1.41e-8).abs() < 1e-10);
    assert!((v.im - 0.028245).abs() < 5e-7);
}

#[test]
fn dawson_examples() {
    assert!(f_ref(0.0, 20).unwrap().is_zero());
    let f1 = f_ref(1.0, 25).unwrap();
    let want = parse_decimal("0.5380795069127684191363874", P).unwrap();
    let d = f1.sub(&want, P, RM).abs();
    assert!(to_f64(&d) < 1e-25);
}

#[test]
fn dawson_matches_asymptotic_series_at_20() {
    // (1/2x) Σ (2k-1)!! / (2x^2)^k; its smallest term, near k = 400, is far
    // below 1e-30.
    let x = 20.0;
    let inv = BigFloat::from_u64(1, P).div(&BigFloat::from_f64(2.0 * x * x, P), P, RM);
    let mut term = BigFloat::from_u64(1, P);
    let mut sum = term.clone();
    for k in 1..60u64 {
        term = term.mul(&BigFloat::from_u64(2 * k - 1, P), P, RM).mul(&inv, P, RM);
        sum = sum.add(&term, P, RM);
    }
    let asym = sum.div(&BigFloat::from_f64(2.0 * x, P), P, RM);
    let f = f_ref(x, 25).unwrap();
    let rel = to_f64(&f.sub(&asym, P, RM).div(&asym, P, RM).abs());
    assert!(rel < 1e-24, "{rel}");
}

#[test]
fn imaginary_part_on_axis_is_scaled_dawson() {
    let k = two_over_sqrt_pi();
    for i in 0..50 {
        let x = 20.0 * i as f64 / 49.0;
        let w = w_ref(c(x, 0.0), 22).unwrap();
        let f = f_ref(x, 22).unwrap();
        let want = k.mul(&f, P, RM);
        if x == 0.0 {
            assert!(w.im.is_zero() && f.is_zero());
            continue;
        }
        let rel = to_f64(&w.im.sub(&want, P, RM).div(&want, P, RM).abs());
        assert!(rel < 1e-20, "x = {x}: {rel}");
    }
}

#[test]
fn dual_path_agreement() {
    // 100 deterministic points with |z| <= 4 in the first quadrant
    let mut s = 0x9e3779b97f4a7c15u64;
    let mut next = || {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        (s >> 11) as f64 / (1u64 << 53) as f64
    };
    for _ in 0..100 {
        let r = 4.0 * next().sqrt();
        let th = std::f64::consts::FRAC_PI_2 * next();
        let z = c(r * th.cos(), r * th.sin());
        let a = w_ref(z, 20).unwrap();
        let b = w_series_ref(z, 20).unwrap();
        let e = relerr_ref(&a, &b).unwrap();
        assert!(e.componentwise() < 1e-20, "{z}: {e:?}");
    }
}

#[test]
fn relerr_conventions() {
    let r = w_ref(c(2.0, 0.5), 25).unwrap();
    let v = r.to_complex64();
    let e = relerr(v, &r).unwrap();
    assert!(e.mod_rel < 1.2e-16 && e.re_rel < 1.2e-16 && e.im_rel < 1.2e-16);

    let exact = RefValue::from_decimal("1.5", "-0.25", 25).unwrap();
    let z = relerr(c(1.5, -0.25), &exact).unwrap();
    assert_eq!((z.re_rel, z.im_rel, z.mod_rel), (0.0, 0.0, 0.0));

    let scaled = v * (1.0 + 1e-13);
    let e = relerr(scaled, &r).unwrap();
    // the scaled approximation is itself rounded to double
    assert!((e.mod_rel - 1e-13).abs() < 2.3e-16, "{}", e.mod_rel);
}

#[test]
fn relerr_guards_tiny_components() {
    // Re w(27) = e^{-729} ~ 2.5e-317, below 1e-300 |w|
    let r = w_ref(c(27.0, 0.0), 20).unwrap();
    let v = r.to_complex64();
    let e = relerr(c(0.0, v.im), &r).unwrap();
    assert!(e.re_rel < 1e-300, "{e:?}");
    assert!(e.re_rel > 0.0);
}

#[test]
fn zero_reference_is_undefined() {
    let z = RefValue::from_decimal("0", "0", 25).unwrap();
    assert_eq!(relerr(c(1.0, 0.0), &z), Err(OracleError::UndefinedMetric));
}

#[test]
fn domain_errors() {
    for z in [c(-1.0, 0.0), c(0.0, -1.0), c(30.5, 1.0), c(1.0, 31.0), c(f64::NAN, 1.0)] {
        assert!(matches!(w_ref(z, 20), Err(OracleError::Domain(_))), "{z}");
    }
    assert!(matches!(w_ref(c(1.0, 1.0), 19), Err(OracleError::Domain(_))));
    assert!(matches!(w_ref(c(1.0, 1.0), 51), Err(OracleError::Domain(_))));
    assert!(matches!(f_ref(100.5, 20), Err(OracleError::Domain(_))));
    assert!(matches!(f_ref(-1.0, 20), Err(OracleError::Domain(_))));
    assert!(matches!(w_series_ref(c(3.0, 3.0), 20), Err(OracleError::Domain(_))));
    assert!(matches!(erfcx_ref(0.1, 20), Err(OracleError::Domain(_))));
}

#[test]
fn fixture_strings_round_trip() {
    let r = w_ref(c(6.3, 1e-6), 25).unwrap();
    let (a, b) = r.to_decimal(25);
    let back = RefValue::from_decimal(&a, &b, 25).unwrap();
    let e = relerr_ref(&back, &r).unwrap();
    assert!(e.componentwise() < 1e-24, "{a} {b} {e:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn monotone_precision(x in 0.0f64..30.0, y in 0.0f64..30.0) {
        let a = w_ref(c(x, y), 30).unwrap();
        let b = w_ref(c(x, y), 20).unwrap();
        prop_assert!(relerr_ref(&b, &a).unwrap().componentwise() < 1e-20);
    }

    #[test]
    fn strip_points_converge(x in 1.8396f64..20.0, ly in -20.0f64..-1.5) {
        let y = 10f64.powf(ly);
        let r = w_ref(c(x, y), 25);
        prop_assert!(r.is_ok());
        prop_assert!(r.unwrap().im.is_positive());
    }
}
