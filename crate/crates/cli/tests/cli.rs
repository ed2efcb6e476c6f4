use std::path::{Path, PathBuf};
use std::process::Command;

use gdext::catalog::{w1b, Family};
use gdext::scalar::{q, qr};
use gdext::{BilinearMap, Scalar};
use gdext_cli::format::{parse_algebra, parse_extending, parse_flag, print_algebra, print_extending, print_flag};
use proptest::prelude::*;
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn gdext(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_gdext")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn catalog(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let p = dir.path().join(name);
    let mut full = vec!["catalog", "--out", s(&p)];
    full.extend_from_slice(args);
    let r = gdext(&full);
    assert_eq!(r.code, 0, "{}", r.stderr);
    p
}

const CORRUPTED: &str = r#"{
  "dim": 2,
  "basis": ["L", "W"],
  "product": [[0, 0, 0, "1"], [1, 0, 1, "1"]],
  "bracket": [[0, 1, 0, "1"], [0, 1, 1, "1"], [1, 0, 0, "-1"], [1, 0, 1, "-1"]]
}
"#;

#[test]
fn check_shipped_w11_passes() {
    let dir = TempDir::new().unwrap();
    let w = catalog(&dir, "w11.json", &["W", "1"]);
    let r = gdext(&["check", s(&w), "--kind", "gd"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "gd: PASS\n");
    for kind in ["lie", "novikov"] {
        assert_eq!(gdext(&["check", s(&w), "--kind", kind]).code, 0);
    }
}

#[test]
fn corrupted_bracket_reports_compatibility_with_triple() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "bad.json", CORRUPTED);
    let r = gdext(&["check", s(&p), "--kind", "gd"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("GD-COMPAT at (a0, b0, c1)"), "{}", r.stdout);
    // the bracket alone is still a Lie bracket
    assert_eq!(gdext(&["check", s(&p), "--kind", "lie"]).code, 0);
}

#[test]
fn empty_algebra_is_vacuously_fine() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "empty.json", r#"{"dim": 0, "basis": [], "product": [], "bracket": []}"#);
    assert_eq!(gdext(&["check", s(&p), "--kind", "gd"]).code, 0);
    assert_eq!(gdext(&["conformal", s(&p)]).code, 0);
}

#[test]
fn parse_errors_exit_2_with_position() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "broken.json", "{\n  \"dim\": 1,\n  \"basis\": [\"x\"],\n  \"product\": [[0, 0, 0, \"1/0\"]],\n");
    let r = gdext(&["check", s(&p), "--kind", "gd"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("broken.json:4:"), "{}", r.stderr);
    let p = write(&dir, "trunc.json", "{\"dim\": 1,");
    assert_eq!(gdext(&["check", s(&p), "--kind", "gd"]).code, 2);
    let p = write(&dir, "range.json", r#"{"dim": 1, "basis": ["x"], "product": [[0, 3, 0, "1"]], "bracket": []}"#);
    let r = gdext(&["check", s(&p), "--kind", "gd"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("out of range"));
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let w = catalog(&dir, "w.json", &["W", "1"]);
    assert_eq!(gdext(&["check", s(&w), "--kind", "flag"]).code, 2, "missing --algebra");
    assert_eq!(gdext(&["catalog", "Z9", "1"]).code, 2);
    assert_eq!(gdext(&["catalog", "A1", "0", "1", "1"]).code, 2, "A-families need b ≠ 0");
    assert_eq!(gdext(&["catalog", "A1", "1", "x", "1"]).code, 2);
    assert_eq!(gdext(&["check", "/nonexistent/file.json", "--kind", "gd"]).code, 2);
    assert_eq!(gdext(&["frobnicate"]).code, 2);
    assert_eq!(gdext(&["extract", s(&w), "--sub", "0,7"]).code, 2);
}

#[test]
fn extend_b3_then_check_and_conformal() {
    let dir = TempDir::new().unwrap();
    let w = dir.path().join("w10.json");
    let d = catalog(&dir, "b3.json", &["--algebra-out", s(&w), "B3", "0", "0", "1", "0"]);
    let e = dir.path().join("e.json");
    assert_eq!(gdext(&["extend", s(&w), s(&d), "--out", s(&e)]).code, 0);
    assert_eq!(gdext(&["check", s(&e), "--kind", "gd"]).code, 0);
    let r = gdext(&["conformal", s(&e)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "skew: PASS\njacobi: PASS\n");
    assert_eq!(gdext(&["check", s(&d), "--kind", "flag", "--algebra", s(&w)]).code, 0);
    let ext = gdext(&["extract", s(&e), "--sub", "0,1"]);
    assert_eq!(ext.code, 0);
    let x = write(&dir, "ext.json", &ext.stdout);
    assert_eq!(gdext(&["check", s(&x), "--kind", "extending", "--algebra", s(&w)]).code, 0);
    let again = gdext(&["extend", s(&w), s(&x)]);
    assert_eq!(again.stdout, std::fs::read_to_string(&e).unwrap());
}

#[test]
fn extend_with_invalid_datum_fails_with_report() {
    let dir = TempDir::new().unwrap();
    let w = catalog(&dir, "w11.json", &["W", "1"]);
    let w0 = dir.path().join("w10.json");
    let d = catalog(&dir, "b3.json", &["--algebra-out", s(&w0), "B3", "0", "0", "1", "0"]);
    let r = gdext(&["extend", s(&w), s(&d)]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("G1"), "{}", r.stdout);
    let m = gdext(&["--format", "machine", "extend", s(&w), s(&d)]);
    let v: serde_json::Value = serde_json::from_str(&m.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert!(!v["report"]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn extract_of_non_subalgebra_fails() {
    let dir = TempDir::new().unwrap();
    let w = catalog(&dir, "w.json", &["W", "1"]);
    let d = catalog(&dir, "a1.json", &["A1", "1", "1", "0"]);
    let e = dir.path().join("e.json");
    assert_eq!(gdext(&["extend", s(&w), s(&d), "--out", s(&e)]).code, 0);
    // span{W, x} is not closed: x∘x = L
    let r = gdext(&["extract", s(&e), "--sub", "1,2"]);
    assert_eq!(r.code, 1);
}

#[test]
fn equiv_decides_a4_reductions() {
    let dir = TempDir::new().unwrap();
    let w = catalog(&dir, "w.json", &["W", "1"]);
    let a430 = catalog(&dir, "a430.json", &["A4", "1", "3", "0"]);
    let a400 = catalog(&dir, "a400.json", &["A4", "1", "0", "0"]);
    let r = gdext(&["equiv", "--algebra", s(&w), s(&a430), s(&a400)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "EQUIVALENT\nwitness: a0 = [3, 0], beta = 1\n");
    // with b2 ≠ 0 the class is that of A5(1,0), not A4(0,0)
    let a435 = catalog(&dir, "a435.json", &["A4", "1", "3", "5"]);
    let r = gdext(&["equiv", "--algebra", s(&w), s(&a435), s(&a400)]);
    assert_eq!((r.code, r.stdout.as_str()), (1, "NOT EQUIVALENT\n"));
    let a510 = catalog(&dir, "a510.json", &["A5", "1", "1", "0"]);
    let r = gdext(&["equiv", "--algebra", s(&w), s(&a435), s(&a510)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
}

#[test]
fn equiv_with_witness_files() {
    let dir = TempDir::new().unwrap();
    let w = catalog(&dir, "w.json", &["W", "1"]);
    let a430 = catalog(&dir, "a430.json", &["A4", "1", "3", "0"]);
    let a400 = catalog(&dir, "a400.json", &["A4", "1", "0", "0"]);
    let good = write(&dir, "good.json", r#"{"a0": ["3", "0"], "beta": "1"}"#);
    let bad = write(&dir, "bad.json", r#"{"a0": ["1", "0"], "beta": "1"}"#);
    assert_eq!(gdext(&["equiv", "--algebra", s(&w), s(&a430), s(&a400), s(&good)]).code, 0);
    let r = gdext(&["equiv", "--algebra", s(&w), s(&a430), s(&a400), s(&bad)]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("FD1"), "{}", r.stdout);
    // the same check through extending datums and D1–D10
    let e430 = write(&dir, "e430.json", &gdext(&["extract", s(&extend(&dir, &w, &a430)), "--sub", "0,1"]).stdout);
    let e400 = write(&dir, "e400.json", &gdext(&["extract", s(&extend(&dir, &w, &a400)), "--sub", "0,1"]).stdout);
    let ew = write(&dir, "ew.json", r#"{"lambda": [["3"], ["0"]], "mu": [["1"]]}"#);
    assert_eq!(gdext(&["equiv", "--algebra", s(&w), s(&e430), s(&e400), s(&ew)]).code, 0);
    assert_eq!(gdext(&["equiv", "--algebra", s(&w), s(&e430), s(&e400)]).code, 2, "needs a witness");
    let singular = write(&dir, "sing.json", r#"{"lambda": [["3"], ["0"]], "mu": [["0"]]}"#);
    assert_eq!(gdext(&["equiv", "--algebra", s(&w), s(&e430), s(&e400), s(&singular)]).code, 2);
}

fn extend(dir: &TempDir, w: &Path, d: &Path) -> PathBuf {
    let out = dir.path().join(format!("ext-{}", d.file_name().unwrap().to_str().unwrap()));
    assert_eq!(gdext(&["extend", s(w), s(d), "--out", s(&out)]).code, 0);
    out
}

#[test]
fn machine_output_mirrors_text() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "bad.json", CORRUPTED);
    let text = gdext(&["check", s(&p), "--kind", "gd"]);
    let m = gdext(&["--format", "machine", "check", s(&p), "--kind", "gd"]);
    assert_eq!(text.code, m.code);
    let v: serde_json::Value = serde_json::from_str(&m.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let viol = &v["gd"]["violations"][0];
    assert_eq!(viol["condition"], "GD-COMPAT");
    assert_eq!(viol["tuple"], serde_json::json!([0, 0, 1]));
    assert_eq!(viol["residual"], serde_json::json!(["-1", "0"]));
    assert_eq!(text.stdout.lines().count() - 1, v["gd"]["violations"].as_array().unwrap().len());
}

#[test]
fn catalog_list_and_negative_parameters() {
    let r = gdext(&["catalog", "list"]);
    assert!(r.stdout.lines().any(|l| l == "A5 b b1 k"));
    let r = gdext(&["catalog", "B5", "0", "-1/2", "2", "-1"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let d = parse_flag(&r.stdout).unwrap();
    assert_eq!(d, Family::B5.datum(&q(0), &[qr(-1, 2), q(2), q(-1)]).unwrap());
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| qr(n, d))
}

fn tensor(d1: usize, d2: usize, o: usize) -> impl Strategy<Value = BilinearMap> {
    prop::collection::vec(prop_oneof![3 => Just(q(0)), 1 => scalar()], d1 * d2 * o).prop_map(move |cs| {
        let mut m = BilinearMap::zero(d1, d2, o);
        for (n, c) in cs.into_iter().enumerate() {
            m.set(n / (d2 * o), (n / o) % d2, n % o, c);
        }
        m
    })
}

proptest! {
    #[test]
    fn algebra_files_round_trip((p, br) in (0usize..4).prop_flat_map(|n| (tensor(n, n, n), tensor(n, n, n)))) {
        let n = p.dims().2;
        let a = gdext::algebras::AlgebraData::new(gdext::algebras::default_names(n), p, br).unwrap();
        let text = print_algebra(&a);
        prop_assert_eq!(parse_algebra(&text).unwrap(), a.clone());
        prop_assert_eq!(print_algebra(&parse_algebra(&text).unwrap()), text);
    }

    #[test]
    fn flag_files_round_trip(f in prop::sample::select(Family::ALL.to_vec()), idx in any::<prop::sample::Index>(), bump in scalar()) {
        let b = f.b_values()[0].clone();
        let grid = f.grid();
        let mut d = f.datum(&b, idx.get(&grid)).unwrap();
        d.novikov.k = &d.novikov.k + &bump;
        prop_assert_eq!(parse_flag(&print_flag(&d)).unwrap(), d);
    }

    #[test]
    fn extending_files_round_trip(na in 1usize..3, nv in 1usize..3, t in tensor(2, 2, 2)) {
        let mut d = gdext::extending::GdExtendingDatum::zero(na, nv);
        for (i, j, k, c) in t.entries() {
            d.novikov.star.set(i % nv, j % nv, k % nv, c.clone());
            d.lie.h.set(i % nv, j % nv, k % na, c);
        }
        prop_assert_eq!(parse_extending(&print_extending(&d)).unwrap(), d);
    }
}

#[test]
fn w1b_text_is_stable() {
    let text = print_algebra(w1b(&q(2)).data());
    assert!(text.contains("[0,1,1,\"-2\"]"), "{text}");
}
