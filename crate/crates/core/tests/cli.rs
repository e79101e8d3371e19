//! End-to-end CLI behavior: exit codes and deterministic output.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gblocks"))
}

fn data(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(rel)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn validate_passes_on_shipped_data() {
    for file in ["categories/vec_s3.json", "categories/ising_z2.json", "categories/fibonacci.json"]
    {
        let out = bin().args(["validate", &data(file)]).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "{file}: {:?}", out);
    }
}

#[test]
fn validate_fails_with_named_invariant_on_broken_data() {
    let source = std::fs::read_to_string(data("categories/ising_z2.json")).unwrap();
    let mut value: serde_json::Value = serde_json::from_str(&source).unwrap();
    value["labels"][2]["dual"] = serde_json::json!("psi");
    let dir = std::env::temp_dir().join("gblocks_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken_dual.json");
    std::fs::write(&path, value.to_string()).unwrap();
    let out = bin().args(["validate", path.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("invariant") || stdout.contains("dual"), "{stdout}");
}

#[test]
fn unreadable_and_malformed_files_exit_three() {
    let out = bin().args(["validate", "/nonexistent/nope.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let dir = std::env::temp_dir().join("gblocks_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("malformed.json");
    std::fs::write(&path, "{not json").unwrap();
    let out = bin().args(["validate", path.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    let out = bin().args(["no-such-subcommand"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dim_prints_the_evaluation() {
    let out = bin()
        .args([
            "dim",
            &data("categories/ising_z2.json"),
            &data("covers/ising_four_sigma.json"),
            &data("labels/sigma4.json"),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "2");
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let run = || {
        bin()
            .args([
                "--json",
                "ms-check",
                &data("categories/ising_z2.json"),
                "--bound",
                "3",
            ])
            .output()
            .unwrap()
    };
    let first = run();
    let second = run();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn map_applies_a_move_script() {
    let out = bin()
        .args([
            "map",
            &data("categories/ising_z2.json"),
            &data("covers/ising_four_sigma.json"),
            &data("labels/sigma4.json"),
            &data("scripts/fuse_cut0.json"),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains('['), "{stdout}");
}

#[test]
fn conductor_limit_is_enforced() {
    let out = bin()
        .args(["validate", &data("categories/ising_z2.json"), "--conductor-limit", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("conductor"), "{stdout}");
}
