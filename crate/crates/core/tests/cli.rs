use std::path::PathBuf;

use knotcob::cli::run;
use knotcob::graded::{inflate, two_crossing_matrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("knotcob").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = call(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn write_tmp(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn every_subcommand_exists() {
    for sub in [
        "validate",
        "invariants",
        "matrix",
        "genus",
        "cobordant",
        "cover",
        "slice-check",
        "alpha",
        "fuzz",
        "isomorphic",
    ] {
        assert_eq!(call(&[sub, "--help"]).0, 0, "{sub}");
    }
}

#[test]
fn validate_and_invariants() {
    let v = json(&["validate", "--code", "O1+ O2+ U1+ U2+"]);
    assert_eq!(v["genus"], 1);
    let v = json(&["invariants", "--code", "O1+ O2+ U1+ U2+"]);
    assert_eq!(v["u_plus"], "t");
    assert_eq!(v["u_minus"], "t");
}

#[test]
fn code_from_file() {
    let path = write_tmp("trefoil.txt", "O1+ U2+ O3+ U1+ O2+ U3+\n");
    let v = json(&["invariants", "--file", path.to_str().unwrap()]);
    assert_eq!(v["u_plus"], "0");
}

#[test]
fn matrix_genus_and_alpha() {
    let v = json(&["matrix", "--code", "O1+ O2+ U1+ U2+"]);
    assert_eq!(v["primitive"]["b"], serde_json::json!([[0, -1, 1], [1, 0, 1], [-1, -1, 0]]));
    let v = json(&["alpha", "--p", "2", "--q", "3", "--signs", "+-++-"]);
    assert_eq!(v["matrix"]["elements"].as_array().unwrap().len(), 5);
    let (code, out, _) = call(&["genus", "--code", "O1+ O2+ U1+ U2+"]);
    assert_eq!(code, 0);
    assert!(out.contains('1'));
}

#[test]
fn cobordant_and_isomorphic_files() {
    let t = two_crossing_matrix();
    let (big, _) = inflate(&mut ChaCha8Rng::seed_from_u64(3), &t, 2, 2);
    let left = write_tmp("left.json", &t.to_json().to_string());
    let right = write_tmp("right.json", &big.to_json().to_string());
    let trivial = write_tmp("trivial.json", r#"{"elements": [], "b": [[0]], "ring": "Z"}"#);
    let (l, r, z) = (left.to_str().unwrap(), right.to_str().unwrap(), trivial.to_str().unwrap());

    let (code, out, _) = call(&["cobordant", "--left", l, "--right", r]);
    assert_eq!(code, 0);
    assert!(out.starts_with("Cobordant"), "{out}");
    let (_, out, _) = call(&["cobordant", "--left", l, "--right", z]);
    assert!(out.starts_with("NotCobordant"), "{out}");

    let (code, out, _) = call(&["isomorphic", "--left", l, "--right", l]);
    assert_eq!(code, 0);
    assert!(out.to_lowercase().contains("isomorphic"), "{out}");
}

#[test]
fn cover_and_slice_check() {
    let v = json(&["cover", "--code", "O1+ O2+ U1+ U2+", "--covers", "2"]);
    assert_eq!(v["crossings"], 0);
    let v = json(&["slice-check", "--code", "O1+ O2+ U1+ U2+"]);
    assert_eq!(v["verdict"], "NotSlice");
    let v = json(&["slice-check", "--code", "O1+ U2+ O3+ U1+ O2+ U3+", "--lagrangian", ""]);
    assert_eq!(v["verdict"], "Inconclusive");
}

#[test]
fn fuzz_is_clean() {
    let v = json(&["fuzz", "--seed", "5", "--cases", "20"]);
    assert_eq!(v["violations"], serde_json::json!([]));
}

#[test]
fn errors() {
    let (code, out, _) = call(&["--format", "json", "invariants", "--code", "O1+ O1+"]);
    assert_eq!(code, 1);
    assert!(serde_json::from_str::<Value>(&out).unwrap()["error"].is_string());
    assert_eq!(call(&["invariants"]).0, 2);
    assert_eq!(call(&["nonsense"]).0, 2);
    let (code, _, _) = call(&["cobordant", "--left", "/nonexistent", "--right", "/nonexistent"]);
    assert_ne!(code, 0);
}
