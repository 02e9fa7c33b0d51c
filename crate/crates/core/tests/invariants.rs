mod common;

use common::*;
use faddeyeva::{
    classify, exp_neg_sq, taylor_coeffs, w, w_cf, w_downward, w_powerseries, w_upward, Complex64, EvalOptions,
    RegionLabel, Status, TuningParams64,
};
use faddeyeva_oracle::{erfcx_ref, to_f64, w_ref, BigFloat};
use proptest::prelude::*;

fn p() -> TuningParams64 {
    TuningParams64::standard()
}

fn eval(z: Complex64, remedy: bool) -> faddeyeva::EvalResult64 {
    w(z, &p(), EvalOptions::with_remedy(remedy)).unwrap()
}

fn bits(v: Complex64) -> (u64, u64) {
    (v.re.to_bits(), v.im.to_bits())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn conjugate_symmetry_is_bit_exact(x in -40.0f64..40.0, y in 0.0f64..40.0, near in any::<bool>()) {
        let y = if near { y * 1e-3 } else { y };
        for remedy in [true, false] {
            let a = eval(c(x, y), remedy).value;
            let b = eval(c(-x, y), remedy).value;
            prop_assert_eq!(bits(b), bits(a.conj()));
        }
    }

    #[test]
    fn reflection_identity(x in -6.0f64..6.0, y in -5.0f64..-1e-6) {
        let z = c(x, y);
        let a = eval(z, true);
        let b = eval(-z, true);
        prop_assume!(a.status == Status::Ok);
        let e2 = (-(z * z)).exp() * 2.0;
        let scale = a.value.norm().max(b.value.norm()).max(e2.norm());
        prop_assert!((a.value + b.value - e2).norm() <= 1e-12 * scale);
    }

    #[test]
    fn status_ok_values_are_finite(x in -40.0f64..40.0, y in -40.0f64..40.0) {
        let r = eval(c(x, y), true);
        if r.status == Status::Ok {
            prop_assert!(r.value.re.is_finite() && r.value.im.is_finite());
        } else {
            prop_assert!(y < 0.0);
        }
        prop_assert!(r.terms_used >= 1);
    }

    #[test]
    fn strip_points_report_upward_terms(x in 1.8396f64..=20.0, y in 0.0f64..=0.031623) {
        let r = eval(c(x, y), true);
        prop_assert_eq!(r.region, RegionLabel::RemedyStrip);
        prop_assert_eq!(r.terms_used, p().upward_terms);
    }
}

/// Points on the contour through `(x0 t cos θ, y0 t sin θ)`.
fn contour(t: f64, n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|j| {
            let th = std::f64::consts::FRAC_PI_2 * j as f64 / (n - 1) as f64;
            (6.3 * t * th.cos(), 4.4 * t * th.sin())
        })
        .collect()
}

fn straddle(x: f64, y: f64, dx: f64, dy: f64) -> (Complex64, Complex64) {
    (c(x - dx, y - dy), c(x + dx, y + dy))
}

#[test]
fn kernels_agree_across_region_boundaries() {
    const D: f64 = 1e-12;
    let mut pairs = Vec::new();
    for t in [0.292, 1.0] {
        for (x, y) in contour(t, 181) {
            let (dx, dy) = (D * x / (x.hypot(y) + 1e-300), D * y / (x.hypot(y) + 1e-300));
            pairs.push(straddle(x, y, dx, dy));
        }
    }
    for k in 0..200 {
        let y = 0.031623 * k as f64 / 199.0;
        pairs.push(straddle(1.8396, y, D, 0.0));
        pairs.push(straddle(20.0, y, D, 0.0));
    }
    for k in 0..200 {
        let x = 1.8396 + (20.0 - 1.8396) * k as f64 / 199.0;
        pairs.push(straddle(x, 0.031623, 0.0, D));
    }
    let mut crossed = 0;
    for (a, b) in pairs {
        let (ra, rb) = (eval(a, true), eval(b, true));
        if ra.region != rb.region {
            crossed += 1;
        }
        let e = rel(ra.value, rb.value);
        assert!(e <= 1e-11, "{a} ({}) vs {b} ({}): {e:e}", ra.region, rb.region);
    }
    assert!(crossed > 900, "only {crossed} pairs straddle a boundary");
}

#[test]
fn upward_terms_stay_bounded() {
    let p = p();
    let y = p.strip_y_max;
    for k in 0..=2000 {
        let x = 20.0 * k as f64 / 2000.0;
        let t = taylor_coeffs(x, p.upward_terms);
        let bound = t.c[0].norm() + (t.c[1] * y).norm() + 1.0;
        let mut pw = 1.0;
        for n in 0..=p.upward_terms {
            assert!(t.c[n].norm() * pw <= bound, "x = {x}, n = {n}");
            pw *= y;
        }
    }
}

#[test]
fn first_coefficient_matches_oracle_difference() {
    // w'(x) by a central difference along the real axis, in extended precision
    let h = 1e-6;
    let p = 256;
    for k in 0..=40 {
        let x = 0.5 + 19.5 * k as f64 / 40.0;
        let (a, b) = (w_ref(c(x + h, 0.0), 25).unwrap(), w_ref(c(x - h, 0.0), 25).unwrap());
        let two_h = BigFloat::from_f64(2.0 * h, p);
        let re = to_f64(&a.re.sub(&b.re, p, RM).div(&two_h, p, RM));
        let im = to_f64(&a.im.sub(&b.im, p, RM).div(&two_h, p, RM));
        let c1 = taylor_coeffs(x, 7).c[1];
        let e = rel(c1, c(re, im));
        assert!(e <= 1e-8, "x = {x}: {e:e}");
    }
}

#[test]
fn coefficients_split_into_gaussian_and_dawson_parts() {
    let k = std::f64::consts::FRAC_2_SQRT_PI;
    for x in [0.0f64, 0.5, 1.0, 1.8396, 3.0, 6.3, 12.0, 20.0] {
        let t = taylor_coeffs(x, 7);
        // Taylor coefficients of e^{-z^2} about x
        let mut b = vec![(-x * x).exp(), -2.0 * x * (-x * x).exp()];
        for n in 1..7 {
            let v = -(2.0 / (n + 1) as f64) * (x * b[n] + b[n - 1]);
            b.push(v);
        }
        for n in 0..=7 {
            let want = c(b[n], k * t.d[n]);
            let scale = t.c[n].norm().max(1e-300);
            assert!((t.c[n] - want).norm() <= 1e-13 * scale + 1e-300, "x = {x}, n = {n}");
        }
        assert_eq!(t.d[0], faddeyeva::dawson(x).unwrap());
        assert!((t.d[1] - (1.0 - 2.0 * x * t.d[0])).abs() <= 1e-15);
    }
}

#[test]
fn taylor_coefficient_examples() {
    let t = taylor_coeffs(0.0, 7);
    let k = std::f64::consts::FRAC_2_SQRT_PI;
    assert_eq!(t.c[0], c(1.0, 0.0));
    assert!((t.c[1] - c(0.0, k)).norm() < 1e-16);
    assert!((t.c[2] - c(-1.0, 0.0)).norm() < 1e-16);
    assert!((t.c[3] - c(0.0, -2.0 * k / 3.0)).norm() < 1e-15);
    let want = [0.0, 1.0, 0.0, -2.0 / 3.0];
    for (d, w) in t.d.iter().zip(want) {
        assert!((d - w).abs() < 1e-16);
    }
    let t = taylor_coeffs(1.0, 7);
    // d_1 = 1 - 2F(1) = -0.0761590138
    for (d, w) in t.d.iter().zip([0.5380795069f64, -0.0761590138, -0.4619204931]) {
        assert!((d - w).abs() < 1e-10, "{d} vs {w}");
    }
}

#[test]
fn even_part_is_the_exponential_to_two_ulps() {
    let mut worst = 0.0f64;
    for i in 0..=60 {
        for j in 0..=60 {
            let (x, y) = (-1.3 + 2.6 * i as f64 / 60.0, -1.3 + 2.6 * j as f64 / 60.0);
            if x.hypot(y) > 1.3 {
                continue;
            }
            let got = exp_neg_sq(c(x, y));
            let want = exp_neg_sq_exact(x, y);
            let u = ulps(got.re, want.re).max(ulps(got.im, want.im));
            worst = worst.max(u);
            assert!(u <= 2.0, "({x}, {y}): {u} ulp, {got} vs {want}");
        }
    }
    eprintln!("even part: worst {worst} ulp");
}

#[test]
fn power_series_examples() {
    let (v, n) = w_powerseries(c(0.0, 0.0), 1e-16);
    assert_eq!(v, c(1.0, 0.0));
    assert!(n >= 1);
    let (v, _) = w_powerseries(c(0.0, 0.5), 1e-16);
    assert!((v - c(0.61569034, 0.0)).norm() < 5e-9);
    assert!(err(v, 0.0, 0.5) <= 1e-15);
    let (v, _) = w_powerseries(c(0.1, 0.0), 1e-16);
    assert!((v - c(0.99004983, 0.11208866)).norm() < 1e-8, "{v}");
    assert!(err(v, 0.1, 0.0) <= 1e-15);
}

#[test]
fn continued_fraction_improves_with_depth_far_out() {
    let r = to_f64(&erfcx_ref(100.0, 25).unwrap());
    let e: Vec<f64> = (1..=3).map(|nu| (w_cf(c(0.0, 100.0), nu) - c(r, 0.0)).norm()).collect();
    assert!(e[0] >= e[1] && e[1] >= e[2], "{e:?}");
    assert!((w_cf(c(0.0, 100.0), 1).re - 0.00564190).abs() < 5e-9);
    // (1/(100 sqrt(pi))) (1 - 1/20000 + 3/4e8) = 0.0056416137
    assert!((w_cf(c(0.0, 100.0), 3).re - 0.0056416137).abs() < 1e-10);
}

#[test]
fn continued_fraction_boundary_at_twenty() {
    let e20 = err(w_cf(c(20.0, 1e-10), 16), 20.0, 1e-10);
    assert!(e20 <= 1e-13, "{e20:e}");
    let best = (1..=16).map(|nu| err(w_cf(c(6.5, 1e-10), nu), 6.5, 1e-10)).fold(f64::INFINITY, f64::min);
    assert!(best > 1e-13, "{best:e}");
}

#[test]
fn unshifted_downward_scheme_is_the_fraction() {
    for (x, y) in [(3.0, 2.0), (1.0, 3.0), (5.0, 0.5), (0.2, 4.0)] {
        for nu in [1, 5, 17, 40] {
            assert_eq!(bits(w_downward(c(x, y), 0.0, 0, nu)), bits(w_cf(c(x, y), nu)));
        }
    }
}

#[test]
fn upward_sum_on_the_axis_is_the_axis_value() {
    for x in [1.8396, 4.0, 6.3, 20.0] {
        assert_eq!(w_upward(c(x, 0.0), &p()), faddeyeva::w_real_axis(x));
    }
}

#[test]
fn strip_off_never_classifies_into_strip() {
    for i in 0..=300 {
        for j in 0..=30 {
            let z = c(25.0 * i as f64 / 300.0, 0.05 * j as f64 / 30.0);
            assert_ne!(classify(z, &p(), false), RegionLabel::RemedyStrip);
        }
    }
}

#[test]
fn half_plane_normalises_negative_zero() {
    let a = eval(c(1.0, -0.0), true);
    let b = eval(c(1.0, 0.0), true);
    assert_eq!(bits(a.value), bits(b.value));
    assert_eq!(a.status, Status::Ok);
}
