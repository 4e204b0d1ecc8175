use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(rel)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superprolong")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (v, code)
}

fn text(args: &[&str]) -> (String, String, i32) {
    let out = run(args);
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap(),
    )
}

fn total(v: &Value) -> String {
    format!("({}|{})", v["total"]["even"], v["total"]["odd"])
}

#[test]
fn shc_prolongation() {
    let (v, code) = json(&["prolong", "--name", "shc_symbol"]);
    assert_eq!(code, 0);
    assert_eq!(total(&v), "(17|14)", "{v}");
}

#[test]
fn odd_ode_with_scalings() {
    let (v, code) = json(&["prolong", "--name", "odd_ode_symbol:3", "--g0", "scalings"]);
    assert_eq!(code, 0);
    assert_eq!(total(&v), "(4|4)");
}

#[test]
fn truncation_exits_with_three() {
    let (out, _, code) = text(&["prolong", "--name", "skew_cpe:2", "--max-degree", "5"]);
    assert_eq!(code, 3);
    assert!(out.contains("not stabilized by max_degree 5"), "{out}");
}

#[test]
fn projective_reduction() {
    let (v, code) = json(&["prolong", "--name", "gl:2:1", "--reduce", "1:trace"]);
    assert_eq!(code, 0);
    assert_eq!(total(&v), "(9|6)");
}

#[test]
fn gaussian_field() {
    let (v, code) = json(&["prolong", "--name", "supertranslation:1", "--field", "Qi"]);
    assert_eq!(code, 0);
    assert_eq!(total(&v), "(10|4)");
}

#[test]
fn cohomology_rows() {
    let (v, code) = json(&["cohomology", "--name", "sl21_ode", "--d", "1..2"]);
    assert_eq!(code, 0);
    assert_eq!(v["module"], "adjoint");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for r in rows {
        assert_eq!((r["dim_even"].as_u64(), r["dim_odd"].as_u64()), (Some(0), Some(0)));
    }
}

#[test]
fn not_regular_distribution() {
    let (v, code) = json(&["check-regular", "--input", &data("distributions/not_regular.json")]);
    assert_eq!(code, 4);
    assert_eq!(v["regularity"]["witness"]["field"], "θ·∂u");
}

#[test]
fn shc_model_symbol() {
    let (v, code) = json(&["symbol", "--name", "shc_symbol", "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["regularity"]["regular"], true);
    assert_eq!(v["matches_catalog"], true);
}

#[test]
fn odesym_from_flags_and_file() {
    let (v, code) = json(&["odesym", "--order", "3", "--rhs", "xi2"]);
    assert_eq!(code, 0);
    assert_eq!((v["superdim"]["even"].as_u64(), v["superdim"]["odd"].as_u64()), (Some(2), Some(3)));
    let fs: Vec<&str> = v["generators"].as_array().unwrap().iter().map(|g| g["f"].as_str().unwrap()).collect();
    assert!(fs.contains(&"exp(x)"), "{fs:?}");

    let (v, code) = json(&["odesym", "--input", &data("odes/trivial2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["superdim"], v["bound"]);
    assert_eq!(v["complete"], true);
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        &["prolong", "--name", "nonsense"][..],
        &["prolong", "--name", "gl:2:1", "--reduce", "1:sideways"],
        &["prolong", "--input", "/nonexistent.json"],
        &["odesym", "--order", "3", "--rhs", "ξ‴"],
        &["odesym", "--order", "3", "--rhs", "xi1", "--field", "Qi"],
        &["prolong", "--bogus-flag"],
    ] {
        let (_, err, code) = text(args);
        assert_eq!(code, 2, "{args:?}: {err}");
    }
}

#[test]
fn algebra_json_round_trip() {
    let (v, code) = json(&["prolong", "--name", "odd_ode_symbol:2", "--g0", "scalings"]);
    assert_eq!(code, 0);
    let dir = std::env::temp_dir().join(format!("superprolong-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sl21.json");
    std::fs::write(&path, v["algebra"].to_string()).unwrap();
    let (w, code) = json(&["cohomology", "--input", path.to_str().unwrap(), "--d", "1..2"]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code, 0, "{w}");
    for r in w["rows"].as_array().unwrap() {
        assert_eq!((r["dim_even"].as_u64(), r["dim_odd"].as_u64()), (Some(0), Some(0)));
    }
}

#[test]
fn paper_suite_passes() {
    let (out, err, code) = text(&["--paper-suite"]);
    assert_eq!(code, 0, "{out}{err}");
    assert!(out.contains(", 0 failed"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn trivial_action_invariants() {
    let (v, code) = json(&["cohomology", "--name", "abelian:1:0", "--module", "symbol", "--k", "0", "--d", "-1..0"]);
    assert_eq!(code, 0);
    let dims: Vec<(u64, u64)> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["dim_even"].as_u64().unwrap(), r["dim_odd"].as_u64().unwrap()))
        .collect();
    assert_eq!(dims, [(1, 0), (0, 0)]);
}

#[test]
fn representation_must_match_brackets() {
    let good = data("algebras/gl11.json");
    let (v, code) = json(&["prolong", "--input", &good, "--reduce", "1:trace"]);
    assert_eq!(code, 0);
    assert_eq!(total(&v), "(4|4)");

    let src = std::fs::read_to_string(&good).unwrap();
    let bad = src.replacen(r#"[["1", "0"], ["0", "0"]]"#, r#"[["2", "0"], ["0", "0"]]"#, 1);
    assert_ne!(src, bad);
    let path = std::env::temp_dir().join(format!("superprolong-gl11-{}.json", std::process::id()));
    std::fs::write(&path, bad).unwrap();
    let (_, err, code) = text(&["prolong", "--input", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 2);
    assert!(err.contains("representation"), "{err}");
}
