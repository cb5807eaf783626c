//! End-to-end checks of the command-line binary: plain outputs, JSON
//! shape, determinism and exit codes.

use std::process::{Command, Output};

fn polychi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polychi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = polychi(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

#[test]
fn mixed_volume_of_shipped_simplices() {
    assert_eq!(stdout(&["mixed-volume", "--file", "data/simplices.json", "--plain"]), "54");
}

#[test]
fn sl2_template_section_chi() {
    assert_eq!(
        stdout(&["chi-affine", "--system", "data/sl2-example.json", "--param", "2", "--plain"]),
        "8"
    );
    let json = stdout(&[
        "chi-affine",
        "--system",
        "data/sl2-example.json",
        "--param",
        "2",
        "--verbose",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["result"], serde_json::json!(8));
    let breakdown = v["breakdown"].as_array().unwrap();
    assert_eq!(breakdown.len(), 16);
    let torus_value = breakdown
        .iter()
        .find(|s| s["zero_set"].as_array().unwrap().is_empty())
        .unwrap();
    assert_eq!(torus_value["value"], serde_json::json!(48));
    let single = breakdown
        .iter()
        .find(|s| s["zero_set"].as_array().unwrap().len() == 1)
        .unwrap();
    assert_eq!(single["value"], serde_json::json!(-16));
}

#[test]
fn orbit_section_chi_flags_and_files() {
    assert_eq!(
        stdout(&["orbit", "section-chi", "--chi", "0", "--dim", "26", "--deg", "3", "--plain"]),
        "-3"
    );
    assert_eq!(
        stdout(&["orbit", "section-chi", "--file", "data/e6-section.json", "--plain"]),
        "-3"
    );
    assert_eq!(
        stdout(&["orbit", "section-chi", "--file", "data/sln-section.json", "--plain"]),
        "-3"
    );
}

#[test]
fn orbit_catalog_lookup() {
    assert_eq!(stdout(&["orbit", "catalog", "--id", "23", "--params", "2", "--plain"]), "2");
    let json = stdout(&["orbit", "catalog", "--id", "13"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["result"]["entry"]["module_dim"], serde_json::json!(27));
    assert_eq!(v["result"]["section_chi"], serde_json::json!(-3));
    // full table
    let table = stdout(&["orbit", "catalog", "--plain"]);
    let v: serde_json::Value = serde_json::from_str(&table).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 38);
}

#[test]
fn orbit_degree_and_closedness() {
    assert_eq!(stdout(&["orbit", "degree", "--weights", "-1;0;2", "--plain"]), "3");
    assert_eq!(stdout(&["orbit", "closed", "--weights", "1,0;-1,1;-1,-1", "--plain"]), "true");
    assert_eq!(stdout(&["orbit", "closed", "--weights", "1,0;2,1", "--plain"]), "false");
}

#[test]
fn newton_polytope_and_volume() {
    let json = stdout(&["newton-polytope", "--poly", "x1^-1 + x1^2", "--nvars", "1", "--plain"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v, serde_json::json!({"dim": 1, "points": [[-1], [2]]}));
    assert_eq!(
        stdout(&["volume", "--points", "0,0;1,0;0,1;1,1", "--dim", "2", "--plain"]),
        "2"
    );
}

#[test]
fn bkk_and_chi_torus() {
    assert_eq!(
        stdout(&["bkk", "--poly", "x1^-1 + 1 + x1^2", "--nvars", "1", "--plain"]),
        "3"
    );
    assert_eq!(
        stdout(&["chi-torus", "--poly", "x1 + x2 + 1 ; x1*x2 + 1", "--nvars", "2", "--plain"]),
        "2"
    );
}

#[test]
fn crit_subcommands() {
    assert_eq!(stdout(&["crit", "uni", "--support", "-1,0,2", "--plain"]), "3");
    assert_eq!(stdout(&["crit", "quadric", "--file", "data/quadric.json", "--plain"]), "2");
    assert_eq!(stdout(&["crit", "det", "--file", "data/det.json", "--plain"]), "3");
    assert_eq!(stdout(&["crit", "quadric", "--n", "4", "--seed", "7", "--plain"]), "2");
    assert_eq!(
        stdout(&[
            "crit",
            "biv",
            "--poly",
            "x1 + x2 + 1 ; x1^2 + x2^2 + x1*x2 + 1",
            "--nvars",
            "2",
            "--plain",
        ]),
        "2"
    );
}

#[test]
fn file_inputs_for_each_shape() {
    // chern data file: the quadric surface gives two critical points.
    assert_eq!(
        stdout(&["chern", "mu", "--data", "data/quadric-surface.json", "--plain"]),
        "2"
    );
    assert_eq!(
        stdout(&["chern", "chi-d", "--data", "data/quadric-surface.json", "--plain"]),
        "2"
    );
    assert_eq!(
        stdout(&["chern", "chi-affine", "--data", "data/quadric-surface.json", "--plain"]),
        "0"
    );
    // single-polytope and single-polynomial JSON files
    let dir = std::env::temp_dir();
    let poly_path = dir.join("polychi_cli_poly.json");
    std::fs::write(
        &poly_path,
        r#"{"nvars": 1, "terms": [{"exp": [-1], "num": "1"}, {"exp": [2], "num": "1"}]}"#,
    )
    .unwrap();
    let json = stdout(&["newton-polytope", "--file", poly_path.to_str().unwrap(), "--plain"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v, serde_json::json!({"dim": 1, "points": [[-1], [2]]}));
    let polytope_path = dir.join("polychi_cli_polytope.json");
    std::fs::write(
        &polytope_path,
        r#"{"dim": 2, "points": [[0, 0], [2, 0], [0, 2], [1, 1]]}"#,
    )
    .unwrap();
    assert_eq!(
        stdout(&["volume", "--file", polytope_path.to_str().unwrap(), "--plain"]),
        "4"
    );
}

#[test]
fn chern_subcommands() {
    assert_eq!(stdout(&["chern", "chi-d", "--pn", "2", "--d", "3", "--plain"]), "0");
    assert_eq!(stdout(&["chern", "chi-affine", "--pn", "3", "--d", "1", "--plain"]), "1");
    assert_eq!(stdout(&["chern", "mu", "--pn", "3", "--d", "1", "--plain"]), "0");
    let both = stdout(&["chern", "mu", "--pn", "2", "--d", "2", "--paper-sign", "--plain"]);
    let parts: Vec<&str> = both.split_whitespace().collect();
    assert_eq!(parts.len(), 2);
    assert_eq!(parts[0].parse::<i64>().unwrap(), -parts[1].parse::<i64>().unwrap());
}

#[test]
fn json_output_is_deterministic() {
    let a = stdout(&["bkk", "--poly", "x1^2 + x2 + 1 ; x1 + x2^3 + 1", "--nvars", "2"]);
    let b = stdout(&["bkk", "--poly", "x1^2 + x2 + 1 ; x1 + x2^3 + 1", "--nvars", "2"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["command"], serde_json::json!("bkk"));
    assert!(v["inputs"].as_str().unwrap().len() == 16);
}

#[test]
fn seeded_crit_output_is_deterministic() {
    let a = stdout(&["crit", "det", "--n", "4", "--seed", "11"]);
    let b = stdout(&["crit", "det", "--n", "4", "--seed", "11"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["seed"], serde_json::json!(11));
    assert_eq!(v["result"]["count"], serde_json::json!(4));
}

#[test]
fn exit_codes() {
    // unknown subcommand
    let out = polychi(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // missing file
    let out = polychi(&["mixed-volume", "--file", "no-such-file.json"]);
    assert_eq!(out.status.code(), Some(2));
    // genericity violation: x1 + x2 dies on the origin stratum
    let out = polychi(&["chi-affine", "--poly", "x1 + x2", "--nvars", "2"]);
    assert_eq!(out.status.code(), Some(3));
    // parse error with position on stderr
    let out = polychi(&["bkk", "--poly", "x1 + $", "--nvars", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    // help exits cleanly
    let out = polychi(&["help"]);
    assert_eq!(out.status.code(), Some(0));
}
