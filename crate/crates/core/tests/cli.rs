use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use grpi::io::algebra_to_json;
use grpi::models::ideal_example_ut2;
use grpi::field::FieldSpec;

const GZ2: &str = r#"{"group":{"kind":"cyclic","n":2},"basis":["u0","u1"],"grading":{"u0":"0","u1":"1"},
 "mult":[[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"]]}"#;

fn grpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grpi")).args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn codim_of_group_algebra() {
    let dir = TempDir::new().unwrap();
    let gz2 = write(&dir, "gz2.json", GZ2);
    let out = grpi(&["codim", "--algebra", s(&gz2), "--signature", "0,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["codimension"], 1);
    assert_eq!(v["identities"][0], "x1{1}*x2{1} - x2{1}*x1{1}");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["field"], "rational");
    assert_eq!(v["budget"], 10_000_000);
}

#[test]
fn codim_sweep_is_csv() {
    let dir = TempDir::new().unwrap();
    let gz2 = write(&dir, "gz2.json", GZ2);
    let out = grpi(&["codim", "--algebra", s(&gz2), "--max-degree", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# grpi "));
    assert_eq!(lines.next().unwrap(), "signature,n,space_dim,codimension,strategy");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2 + 3 + 4);
    for r in rows {
        let cols: Vec<&str> = r.rsplitn(3, ',').collect();
        assert_eq!(cols[1], "1", "{r}");
    }
}

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let gz2 = write(&dir, "gz2.json", GZ2);
    let yes = grpi(&["check", "--algebra", s(&gz2), "--poly", "x1{0}*x2{1} - x2{1}*x1{0}"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(json(&yes)["identity"], true);
    let no = grpi(&["check", "--algebra", s(&gz2), "--poly", "x1{0}*x2{1}"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(json(&no)["identity"], false);
    // not multilinear: decided on the rational grid
    let sq = grpi(&["check", "--algebra", s(&gz2), "--poly", "x1{0}*x1{1} - x1{1}*x1{0}"]);
    assert_eq!(sq.status.code(), Some(0));
}

#[test]
fn counterexample_ranks_are_full() {
    let out = grpi(&["counterexample", "--max-degree", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.ends_with(",true")), "{text}");
}

#[test]
fn bound_encloses_alpha() {
    let out = grpi(&["bound", "--d1", "2", "--d2", "2", "--elt-order", "2", "--group-order", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let (lo, hi) = (v["alpha"]["lo"].as_f64().unwrap(), v["alpha"]["hi"].as_f64().unwrap());
    let alpha = 1800.0 * std::f64::consts::E;
    assert!(lo <= alpha && alpha <= hi && hi - lo < 0.01);
    let exact = grpi(&["bound", "--d1", "1", "--d2", "1", "--elt-order", "2", "--group-order", "2", "--exact"]);
    assert_eq!(json(&exact)["n"], "121088582625159471277495779540");
    let degenerate = grpi(&["bound", "--d1", "1", "--d2", "1", "--elt-order", "1", "--group-order", "1"]);
    assert_eq!(degenerate.status.code(), Some(2));
}

#[test]
fn load_diagnostics() {
    let dir = TempDir::new().unwrap();
    let bad = write(
        &dir,
        "bad.json",
        r#"{"group":{"kind":"cyclic","n":2},"basis":["u0","u1"],"grading":{"u0":"0","u1":"1"},"mult":[[1,1,1,"1"]]}"#,
    );
    let out = grpi(&["codim", "--algebra", s(&bad), "--signature", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains('1') && err.contains("grading"), "{err}");

    let missing = grpi(&["codim", "--algebra", s(&dir.path().join("nope.json")), "--signature", "1,0"]);
    assert_eq!(missing.status.code(), Some(2));

    let gz2 = write(&dir, "gz2.json", GZ2);
    let semi = grpi(&["semi-check", "--algebra", s(&gz2), "--poly", "y1{1}"]);
    assert_eq!(semi.status.code(), Some(2));
}

#[test]
fn semi_check_with_pair() {
    let dir = TempDir::new().unwrap();
    let (alg, pair) = ideal_example_ut2(FieldSpec::Rational).unwrap();
    let ut2 = write(&dir, "ut2.json", &algebra_to_json(&alg, Some(&pair)).to_string());
    // B has no neutral part, so any y of degree 0 vanishes
    let yes = grpi(&["semi-check", "--algebra", s(&ut2), "--poly", "y1{0}*z1{0}"]);
    assert_eq!(yes.status.code(), Some(0), "{}", String::from_utf8_lossy(&yes.stderr));
    let no = grpi(&["semi-check", "--algebra", s(&ut2), "--poly", "z1{0}*y1{1}"]);
    assert_eq!(no.status.code(), Some(1));
}

#[test]
fn usage_errors_and_guard() {
    assert_eq!(grpi(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(grpi(&["codim", "--bogus"]).status.code(), Some(2));
    assert_eq!(grpi(&["witness", "--random", "3"]).status.code(), Some(2));
    assert_eq!(grpi(&["--field", "p:4", "goodperms", "--max-n", "3", "--d", "3"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let gz2 = write(&dir, "gz2.json", GZ2);
    let out = grpi(&["codim", "--algebra", s(&gz2), "--signature", "2,2", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn seeded_runs_are_reproducible() {
    let a = grpi(&["--seed", "7", "witness", "--random", "40"]);
    let b = grpi(&["--seed", "7", "witness", "--random", "40"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["nonzero"], 40);
}

#[test]
fn combinatorial_verbs() {
    let good = grpi(&["goodperms", "--max-n", "5", "--d", "3"]);
    assert_eq!(good.status.code(), Some(0));
    let text = String::from_utf8(good.stdout).unwrap();
    let counts: Vec<&str> = text.lines().skip(2).map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(counts, ["1", "2", "5", "14", "42"]);

    let blocks = grpi(&["blocks", "--cyclic", "3", "--seq", "1,1,1,2,2,2", "--d", "2"]);
    assert_eq!(blocks.status.code(), Some(0), "{}", String::from_utf8_lossy(&blocks.stderr));

    let split = grpi(&["split", "--poly", "y1{1}*z2{0} + z1{1}*z2{0}"]);
    assert_eq!(split.status.code(), Some(0));
    assert_eq!(json(&split)["components"].as_array().map(Vec::len), Some(2));

    let comp = grpi(&["compose", "--outer", "graded", "--f", "x1{1}", "--g", "x1{0}*x2{0}"]);
    assert_eq!(comp.status.code(), Some(0));
    assert_eq!(json(&comp)["composition"], "x1{1}*x2{0}");
}

#[test]
fn in_process_run_matches_binary() {
    let out = grpi::cli::run(["grpi", "goodperms", "--max-n", "4", "--d", "3"]);
    let bin = grpi(&["goodperms", "--max-n", "4", "--d", "3"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim_end(), String::from_utf8(bin.stdout).unwrap().trim_end());
}
