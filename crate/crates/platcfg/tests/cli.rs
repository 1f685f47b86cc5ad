//! End-to-end checks of the command-line tool: output contract and
//! exit codes (0 success, 1 verification failure, 2 usage error).

use std::path::PathBuf;
use std::process::{Command, Output};

fn platcfg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_platcfg")).args(args).output().expect("spawn platcfg")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("platcfg_cli_{}_{name}", std::process::id()));
    p
}

#[test]
fn list_is_deterministic_and_contains_known_entry() {
    let a = platcfg(&["list"]);
    let b = platcfg(&["list"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains("pappus_faces  T,O,I  (7e_3)"), "list output:\n{text}");
    assert!(text.lines().count() >= 19);
}

#[test]
fn build_census_verify_pipeline() {
    let out = tmp("c39.json");
    let build = platcfg(&["build", "c3r_39", "--solid", "cube", "--out", out.to_str().unwrap()]);
    assert!(build.status.success(), "{}", String::from_utf8_lossy(&build.stderr));

    let census = platcfg(&["census", out.to_str().unwrap()]);
    assert!(census.status.success());
    assert_eq!(String::from_utf8_lossy(&census.stdout).trim(), "(39_3)");

    // The entry keeps only the rotation group, so requiring at least
    // rotational symmetry passes and requiring the full group fails.
    let rotational = platcfg(&["verify", out.to_str().unwrap(), "--mode", "rotational"]);
    assert!(rotational.status.success());
    let full = platcfg(&["verify", out.to_str().unwrap(), "--mode", "full"]);
    assert_eq!(full.status.code(), Some(1));

    std::fs::remove_file(&out).ok();
}

#[test]
fn build_reports_point_totals() {
    let out = tmp("pappus.json");
    let build =
        platcfg(&["build", "pappus_faces", "--solid", "icosahedron", "--out", out.to_str().unwrap()]);
    assert!(build.status.success());
    let census = platcfg(&["census", out.to_str().unwrap()]);
    assert_eq!(String::from_utf8_lossy(&census.stdout).trim(), "(210_3)");
    std::fs::remove_file(&out).ok();
}

#[test]
fn alternating_entry_fails_rotational_check() {
    let out = tmp("a27.json");
    let build = platcfg(&["build", "a27_octa", "--out", out.to_str().unwrap()]);
    assert!(build.status.success());
    let verify = platcfg(&["verify", out.to_str().unwrap(), "--mode", "rotational"]);
    assert_eq!(verify.status.code(), Some(1));
    std::fs::remove_file(&out).ok();
}

#[test]
fn full_symmetry_entry_passes_full_check() {
    let out = tmp("bary.json");
    let build = platcfg(&["build", "t3_barycentric42", "--out", out.to_str().unwrap()]);
    assert!(build.status.success());
    let verify = platcfg(&["verify", out.to_str().unwrap(), "--mode", "full"]);
    assert!(verify.status.success());
    std::fs::remove_file(&out).ok();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(platcfg(&["build", "nosuch"]).status.code(), Some(2));
    assert_eq!(platcfg(&["definitely-not-a-command"]).status.code(), Some(2));
    assert_eq!(platcfg(&["predict", "--solid", "hexagon"]).status.code(), Some(2));

    let corrupt = tmp("corrupt.json");
    std::fs::write(&corrupt, "{ not json").unwrap();
    assert_eq!(platcfg(&["verify", corrupt.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_file(&corrupt).ok();
}

#[test]
fn predict_evaluates_count_formula() {
    let out = platcfg(&[
        "predict", "--solid", "octahedron", "--x", "1", "--y", "2", "--z", "7", "--vv", "9",
    ]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "86 72");

    let zero = platcfg(&["predict", "--solid", "cube"]);
    assert_eq!(String::from_utf8_lossy(&zero.stdout).trim(), "0 0");
}

#[test]
fn export_formats_have_expected_shape() {
    let out = tmp("export.json");
    let build = platcfg(&["build", "spiderweb_t24", "--out", out.to_str().unwrap()]);
    assert!(build.status.success());

    let levi = platcfg(&["export", out.to_str().unwrap(), "--format", "levi"]);
    let levi_text = String::from_utf8(levi.stdout).unwrap();
    assert!(levi_text.starts_with("P0 L"));
    assert!(levi_text.ends_with('\n'));

    let dot = platcfg(&["export", out.to_str().unwrap(), "--format", "dot"]);
    let dot_text = String::from_utf8(dot.stdout).unwrap();
    assert!(dot_text.starts_with("graph levi {"));
    assert!(dot_text.contains("[shape=circle]") && dot_text.contains("[shape=box]"));

    let obj = platcfg(&["export", out.to_str().unwrap(), "--format", "obj"]);
    let obj_text = String::from_utf8(obj.stdout).unwrap();
    assert!(obj_text.contains("\nv ") || obj_text.starts_with("v "));
    assert!(obj_text.contains("\nl "));

    let json = platcfg(&["export", out.to_str().unwrap(), "--format", "json"]);
    assert_eq!(
        String::from_utf8(json.stdout).unwrap(),
        std::fs::read_to_string(&out).unwrap(),
        "JSON export of a JSON document is the identity"
    );
    std::fs::remove_file(&out).ok();
}
