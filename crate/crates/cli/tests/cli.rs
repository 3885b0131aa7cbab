use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hconv::io::{read_function, read_spectrum, write_function};
use hconv::{Grid, SampledFunction, VerificationReport};

fn hconv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hconv")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

struct Fixture {
    dir: tempfile::TempDir,
}

impl Fixture {
    fn new() -> Self {
        Self { dir: tempfile::tempdir().unwrap() }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn function(&self, name: &str, n: usize, f: impl Fn(f64) -> f64) -> String {
        let path = self.path(name);
        write_function(&path, &SampledFunction::from_fn(Grid::new(20.0, n).unwrap(), f).unwrap()).unwrap();
        path.to_str().unwrap().to_owned()
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn gauss2(x: f64) -> f64 {
    2.0 * (-x * x).exp()
}

#[test]
fn transform_happy_path() {
    let fx = Fixture::new();
    let f = fx.function("f.csv", 2049, gauss2);
    let out_path = fx.path("Hf.csv");
    let out = hconv(&["transform", "--a", "1", "--b", "1", "--grid-L", "20", "--grid-N", "2049", "--input", &f, "--output", s(&out_path)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let spectrum = read_spectrum(&out_path).unwrap();
    for (y, v) in spectrum.grid().nodes().iter().zip(spectrum.values()) {
        assert!((v - 2f64.sqrt() * (-y * y / 4.0).exp()).abs() < 1e-6);
    }
    assert!(std::fs::read_to_string(&out_path).unwrap().starts_with("y,value\n"));
}

#[test]
fn transform_then_inverse() {
    let fx = Fixture::new();
    let f = fx.function("f.csv", 1025, |x| x * (-x * x).exp());
    let hf = fx.path("hf.csv");
    let back = fx.path("back.csv");
    for method in ["quadrature", "accelerated"] {
        assert_eq!(code(&hconv(&["transform", "--b", "2", "--method", method, "--input", &f, "--output", s(&hf)])), 0);
        assert_eq!(code(&hconv(&["inverse", "--b", "2", "--method", method, "--input", s(&hf), "--output", s(&back)])), 0);
        let original = read_function(&f).unwrap();
        let round = read_function(&back).unwrap();
        assert!(round.sub(&original).unwrap().sup_norm() < 1e-5);
    }
    assert_eq!(code(&hconv(&["transform", "--method", "direct", "--input", &f])), 2);
}

#[test]
fn verify_young_json() {
    let out = hconv(&["verify", "--suite", "young", "--seed", "7", "--json", "--grid-N", "1025"]);
    assert_eq!(code(&out), 0);
    let reports: Vec<VerificationReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!reports.is_empty() && reports.iter().all(|r| r.pass));
    let raw: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["name", "measured", "bound", "margin", "pass", "tolerance"] {
        assert!(raw[0].get(key).is_some(), "missing {key}");
    }
    let again = hconv(&["verify", "--suite", "young", "--seed", "7", "--json", "--grid-N", "1025"]);
    assert_eq!(out.stdout, again.stdout, "same seed must give identical output");
}

#[test]
fn verify_all_suites() {
    for suite in ["algebra", "heat", "fredholm", "all"] {
        let out = hconv(&["verify", "--suite", suite, "--count", "3", "--grid-N", "1025"]);
        assert_eq!(code(&out), 0, "{suite}: {}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(code(&hconv(&["verify", "--suite", "bogus"])), 2);
}

#[test]
fn verification_failure_exits_one() {
    // The √C-scaled norm is not submultiplicative once the L1 constant exceeds 1.
    let out = hconv(&["verify", "--suite", "algebra", "--a", "-0.5", "--b", "-2.35", "--count", "20", "--grid-N", "1025", "--json"]);
    let reports: Vec<VerificationReport> = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    assert_eq!(code(&out), 1);
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|r| r.name.starts_with("submultiplicative") || r.name == "radius-trace"), "{failed:?}");
}

#[test]
fn heat_with_a_zero() {
    let fx = Fixture::new();
    let f = fx.function("phi.csv", 1025, gauss2);
    let out = hconv(&["solve-heat", "--a", "0", "--b", "1", "--input", &f, "--time", "0.75", "--method", "direct"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("a = 0"));
}

#[test]
fn heat_solution_and_estimate() {
    let fx = Fixture::new();
    let f = fx.function("phi.csv", 2049, gauss2);
    let u = fx.path("u.csv");
    for method in ["spectral", "direct"] {
        let out = hconv(&[
            "solve-heat", "--input", &f, "--time", "0.75", "--diffusion", "1", "--method", method,
            "--p", "1", "--q", "1", "--r", "1", "--output", s(&u),
        ]);
        assert_eq!(code(&out), 0);
        let u = read_function(&u).unwrap();
        let oracle = SampledFunction::from_fn(*u.grid(), |x| (-x * x / 4.0).exp()).unwrap();
        assert!(u.sub(&oracle).unwrap().sup_norm() < 2e-5);
    }
    assert_eq!(code(&hconv(&["solve-heat", "--input", &f, "--time", "-1"])), 2);
}

#[test]
fn convolve_and_power() {
    let fx = Fixture::new();
    let f = fx.function("f.csv", 1025, gauss2);
    let direct = fx.path("d.csv");
    let spectral = fx.path("s.csv");
    let power = fx.path("p.csv");
    assert_eq!(code(&hconv(&["convolve", "--input", &f, "--input2", &f, "--method", "direct", "--output", s(&direct)])), 0);
    assert_eq!(code(&hconv(&["convolve", "--input", &f, "--input2", &f, "--output", s(&spectral)])), 0);
    assert_eq!(code(&hconv(&["power", "--input", &f, "--k", "2", "--output", s(&power)])), 0);
    let d = read_function(&direct).unwrap();
    let sp = read_function(&spectral).unwrap();
    let pw = read_function(&power).unwrap();
    assert!(d.sub(&sp).unwrap().sup_norm() < 1e-6);
    assert!(pw.sub(&sp).unwrap().sup_norm() < 1e-6);
    let oracle = SampledFunction::from_fn(*d.grid(), |x| 2.0 * (-x * x / 2.0).exp()).unwrap();
    assert!(d.sub(&oracle).unwrap().sup_norm() < 2e-5);

    let young = hconv(&["convolve", "--input", &f, "--input2", &f, "--p", "2", "--q", "2", "--r", "inf", "--json"]);
    assert_eq!(code(&young), 0);
    let trilinear = hconv(&["convolve", "--input", &f, "--input2", &f, "--input3", &f, "--p", "1.5", "--q", "1.5", "--r", "1.5", "--json"]);
    assert_eq!(code(&trilinear), 0);
    assert_eq!(code(&hconv(&["convolve", "--input", &f, "--input2", &f, "--p", "2", "--q", "2", "--r", "2"])), 2);
    assert_eq!(code(&hconv(&["power", "--input", &f, "--k", "0"])), 2);

    let other = fx.function("g.csv", 513, gauss2);
    assert_eq!(code(&hconv(&["convolve", "--input", &f, "--input2", &other])), 2);
}

#[test]
fn radius_trace() {
    let fx = Fixture::new();
    let f = fx.function("f.csv", 2049, gauss2);
    let out = hconv(&["radius", "--input", &f, "--kmax", "20"]);
    assert_eq!(code(&out), 0);
    let table = String::from_utf8(out.stdout).unwrap();
    assert_eq!(table.lines().count(), 21);
    let last: f64 = table.lines().last().unwrap().split(',').nth(1).unwrap().parse().unwrap();
    assert!((last - 2f64.sqrt()).abs() / 2f64.sqrt() <= 0.05);
}

#[test]
fn wiener_levy_and_fredholm() {
    let fx = Fixture::new();
    let g = fx.function("g.csv", 2049, |x| 0.2 * (-x * x).exp());
    let k = fx.function("k.csv", 2049, gauss2);
    let bad = fx.function("bad.csv", 2049, |x| -(2f64.sqrt()) * (-x * x).exp());
    assert_eq!(code(&hconv(&["wiener-levy", "--input", &g, "--json"])), 0);
    let out = hconv(&["wiener-levy", "--input", &bad]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("1 + Hg"));
    let f = fx.path("f.csv");
    assert_eq!(code(&hconv(&["solve-fredholm", "--input", &g, "--input2", &k, "--output", s(&f)])), 0);
    assert_eq!(read_function(&f).unwrap().grid().len(), 2049);
}

#[test]
fn bench_tables() {
    let out = hconv(&["bench", "--sizes", "257"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("N,direct_time,spectral_time,max_discrepancy\n257,"));
    let empty = hconv(&["bench", "--sizes", ""]);
    assert_eq!(code(&empty), 0);
    assert_eq!(String::from_utf8(empty.stdout).unwrap().lines().count(), 1);
    assert_eq!(code(&hconv(&["bench", "--sizes", "1025,257"])), 2);
}

#[test]
fn config_file_and_usage_errors() {
    let fx = Fixture::new();
    let cfg = fx.path("run.toml");
    std::fs::write(&cfg, "a = 1.0\nb = 2.0\nL = 20.0\nN = 513\nseed = 3\n[tolerances]\ncross-method = 1e-7\n").unwrap();
    let out = hconv(&["verify", "--suite", "heat", "--count", "2", "--config", s(&cfg), "--json"]);
    assert_eq!(code(&out), 0);
    std::fs::write(&cfg, "[tolerances]\nnot-a-tolerance = 1.0\n").unwrap();
    assert_eq!(code(&hconv(&["verify", "--config", s(&cfg)])), 2);

    assert_eq!(code(&hconv(&["transform", "--unknown-flag"])), 2);
    assert_eq!(code(&hconv(&["no-such-command"])), 2);
    assert_eq!(code(&hconv(&["verify", "--grid-N", "1024"])), 2);
    assert_eq!(code(&hconv(&["verify", "--a", "0", "--b", "0"])), 2);
    assert_eq!(code(&hconv(&["transform", "--input", "/nonexistent/f.csv"])), 2);
}
