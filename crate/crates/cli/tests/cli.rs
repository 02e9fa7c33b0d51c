use std::path::Path;
use std::process::{Command, Output};

use faddeyeva::{classify, w, Complex64, EvalOptions, TuningParams64, TUNING_TABLE_VERSION};
use faddeyeva_cli::bench::{bench_points, BenchRegion};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_faddeyeva")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines().find_map(|l| l.strip_prefix(key)).unwrap_or_else(|| panic!("no {key} in {text}")).trim()
}

#[test]
fn eval_examples() {
    let o = run(&["eval", "--re", "0", "--im", "0"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(field(&s, "value:"), "1.0 + 0.0i");
    assert_eq!(field(&s, "region:"), "S");
    assert_eq!(field(&s, "status:"), "ok");

    let s = stdout(&run(&["eval", "--re", "6.3", "--im", "1e-6"]));
    assert_eq!(field(&s, "region:"), "RemedyStrip");
    assert_eq!(field(&s, "terms:"), "7");

    let s = stdout(&run(&["eval", "--re", "6.3", "--im", "1e-6", "--no-remedy"]));
    assert_eq!(field(&s, "region:"), "Q");

    let s = stdout(&run(&["eval", "--re", "-1", "--im", "0"]));
    assert!(field(&s, "value:").starts_with("0.36787944117144"));
    assert!(field(&s, "value:").contains(" - 0.60715770584139"));
}

#[test]
fn eval_exit_codes() {
    let o = run(&["eval", "--re", "0", "--im", "-30"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(field(&stdout(&o), "status:"), "overflow");
    for bad in [&["eval", "--re", "x", "--im", "0"][..], &["eval", "--re", "1"], &["eval", "--re", "1", "--im", "1", "--engine", "slow"], &["frobnicate"]] {
        let o = run(bad);
        assert_eq!(o.status.code(), Some(1), "{bad:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = run(&["eval", "--re", "1", "--im", "-1", "--engine", "oracle"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn eval_json_and_oracle_engine() {
    let s = stdout(&run(&["eval", "--re", "3", "--im", "2", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["region"], "R");
    assert_eq!(v["status"], "ok");
    let fast = Complex64::new(v["re"].as_f64().unwrap(), v["im"].as_f64().unwrap());

    let s = stdout(&run(&["eval", "--re", "3", "--im", "2", "--engine", "oracle", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert!(v["terms"].is_null());
    let re: f64 = v["re"].as_str().unwrap().parse().unwrap();
    let im: f64 = v["im"].as_str().unwrap().parse().unwrap();
    assert_eq!(v["re"].as_str().unwrap().len(), "1.234567890123456789012345e-01".len());
    assert!((fast - Complex64::new(re, im)).norm() <= 1e-12 * fast.norm());
}

#[test]
fn version_names_the_tuning_tables() {
    let o = run(&["--version"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("faddeyeva "), "{s}");
    assert!(s.contains(TUNING_TABLE_VERSION));
}

fn grid(dir: &Path, name: &str, extra: &[&str]) -> (Output, String) {
    let out = dir.join(name);
    let mut args = vec!["grid", "--out", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = run(&args);
    let text = std::fs::read_to_string(&out).unwrap_or_default();
    (o, text)
}

const TRIVIAL: [&str; 12] =
    ["--x-min", "0", "--x-max", "1", "--x-points", "2", "--y-min", "0", "--y-max", "1", "--y-points", "2"];

#[test]
fn trivial_grid_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let (o, a) = grid(dir.path(), "a.csv", &TRIVIAL);
    assert!(o.status.success());
    let (_, b) = grid(dir.path(), "b.csv", &TRIVIAL);
    assert_eq!(a, b);
    let lines: Vec<&str> = a.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], "x,y,re_w,im_w,re_ref,im_ref,relerr_re,relerr_im,relerr_mod,region,terms");
    assert!(lines[1].starts_with("0.0,0.0,1.0,0.0,"));
    assert!(lines[2].starts_with("0.0,1.0,"));
    assert!(lines[3].starts_with("1.0,0.0,"));
    assert!(a.ends_with('\n') && !a.contains('\r'));
}

#[test]
fn grid_rows_agree_with_summary_and_classify() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "--x-min", "1.8396", "--x-max", "9", "--x-points", "4", "--y-min", "1e-12", "--y-max", "0.5", "--y-points", "3",
        "--y-scale", "log", "--with-ref", "--no-remedy",
    ];
    let (o, text) = grid(dir.path(), "g.csv", &args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let p = TuningParams64::standard();
    let mut worst = (0.0f64, String::new(), String::new());
    for line in text.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f.len(), 11);
        let (x, y): (f64, f64) = (f[0].parse().unwrap(), f[1].parse().unwrap());
        assert_eq!(f[9], classify(Complex64::new(x, y), &p, false).as_str());
        let r = w(Complex64::new(x, y), &p, EvalOptions::with_remedy(false)).unwrap();
        assert_eq!(f[2].parse::<f64>().unwrap().to_bits(), r.value.re.to_bits());
        assert_eq!(f[10], r.terms_used.to_string());
        for e in &f[6..9] {
            assert!(e.parse::<f64>().unwrap() >= 0.0);
        }
        let m: f64 = f[8].parse().unwrap();
        if m > worst.0 {
            worst = (m, f[0].to_string(), f[1].to_string());
        }
    }
    let summary = stdout(&o);
    let want = format!("max relerr_mod = {:e} at x = {}, y = {};", worst.0, worst.1, worst.2);
    assert!(summary.starts_with(&want), "{summary} / {want}");
}

#[test]
fn grid_errors() {
    let o = run(&[&["grid", "--out", "/nonexistent-dir/x.csv"][..], &TRIVIAL].concat());
    assert_eq!(o.status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let mut bad = TRIVIAL;
    bad[5] = "1";
    let (o, _) = grid(dir.path(), "x.csv", &bad);
    assert_eq!(o.status.code(), Some(1));
    let (o, _) = grid(dir.path(), "y.csv", &[&TRIVIAL[..], &["--y-scale", "log"]].concat());
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn regions_map_rows_and_pgm() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("m.csv");
    let o = run(&[
        "regions-map", "--x-min", "1", "--x-max", "6.3", "--x-points", "2", "--y-min", "1e-6", "--y-max", "1",
        "--y-points", "2", "--out", csv.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("x,y,region\n"));
    assert!(text.contains("\n1.0,1.0,S\n"), "{text}");
    assert!(text.contains("\n6.3,1e-6,RemedyStrip\n"), "{text}");

    let pgm = dir.path().join("m.pgm");
    let o = run(&[
        "regions-map", "--x-min", "0", "--x-max", "25", "--x-points", "100", "--y-min", "0", "--y-max", "8",
        "--y-points", "100", "--out", csv.to_str().unwrap(), "--pgm", pgm.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let img = std::fs::read_to_string(&pgm).unwrap();
    assert!(img.starts_with("P2\n100 100\n255\n"));
    let px: Vec<u32> = img.lines().skip(3).flat_map(|l| l.split(' ').map(|v| v.parse::<u32>().unwrap())).collect();
    assert_eq!(px.len(), 10_000);
    for g in [64, 128, 192, 255] {
        assert!(px.contains(&g), "gray level {g} missing");
    }
    assert!(img.lines().all(|l| l.len() <= 70));
}

#[test]
fn bench_report() {
    let o = run(&["bench", "--region", "S", "--samples", "4096"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("remedy on:") && s.contains("remedy off:") && s.contains("median ratio"), "{s}");
    let o = run(&["bench", "--region", "strip", "--samples", "4096", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["ratio"].as_f64().unwrap() > 0.0);
    assert!(v["remedy_on"]["median_ns"].as_f64().is_some() && v["remedy_off"]["p99_ns"].as_f64().is_some());
    assert_eq!(run(&["bench", "--region", "T"]).status.code(), Some(1));
}

#[test]
fn strip_flag_is_inert_outside_the_strip() {
    let p = TuningParams64::standard();
    for region in [BenchRegion::S, BenchRegion::R, BenchRegion::Q] {
        for z in bench_points(region, 500, 7) {
            let a = w(z, &p, EvalOptions::with_remedy(true)).unwrap();
            let b = w(z, &p, EvalOptions::with_remedy(false)).unwrap();
            assert_eq!((a.value.re.to_bits(), a.value.im.to_bits()), (b.value.re.to_bits(), b.value.im.to_bits()));
            assert_eq!(a.region, b.region);
        }
    }
}
