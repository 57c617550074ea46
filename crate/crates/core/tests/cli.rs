//! Black-box tests for the `dsynth` binary: exit-code contract, file
//! outputs, and subcommand behavior.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn dsynth(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dsynth"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn write_spec(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

const ADDER: &str = r#"{"k": 3, "n": 3, "outputs": [0, 1, 1, 2, 1, 2, 2, 0], "name": "adder"}"#;

#[test]
fn synth_writes_word_and_circuit() {
    let tmp = tempfile::tempdir().unwrap();
    let spec = write_spec(tmp.path(), "adder.json", ADDER);
    let out = dsynth(&["synth", &spec, "-o", "out"], tmp.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("word: g^{x3} a^1 g^{x2+x3} a^1 g^{x1+x2} a^1"));

    let word = fs::read_to_string(tmp.path().join("out/adder.cascade.txt")).unwrap();
    assert_eq!(word, "g^{x3} a^1 g^{x2+x3} a^1 g^{x1+x2} a^1\n");
    let circuit = fs::read_to_string(tmp.path().join("out/adder.circuit.json")).unwrap();
    assert!(circuit.contains("\"output_rail\""));

    // the emitted circuit verifies against its own spec
    let verify = dsynth(
        &["verify", "out/adder.circuit.json", &spec],
        tmp.path(),
    );
    assert_eq!(verify.status.code(), Some(0));

    // and draws without error
    let draw = dsynth(&["draw", "out/adder.circuit.json"], tmp.path());
    assert_eq!(draw.status.code(), Some(0));
    assert!(String::from_utf8(draw.stdout).unwrap().contains("f(x)"));
}

#[test]
fn synth_no_opt_keeps_canonical_word() {
    let tmp = tempfile::tempdir().unwrap();
    let spec = write_spec(
        tmp.path(),
        "succ.json",
        r#"{"k": 3, "n": 1, "outputs": [1, 2], "name": "succ"}"#,
    );
    let out = dsynth(&["synth", &spec, "-o", ".", "--no-opt"], tmp.path());
    assert_eq!(out.status.code(), Some(0));
    let word = fs::read_to_string(tmp.path().join("succ.cascade.txt")).unwrap();
    assert_eq!(word, "a^0 g^{x1} a^1 g^{x1}\n");
}

#[test]
fn even_radix_exits_2() {
    let tmp = tempfile::tempdir().unwrap();
    let spec = write_spec(tmp.path(), "even.json", r#"{"k": 4, "n": 1, "outputs": [0, 1]}"#);
    let out = dsynth(&["synth", &spec], tmp.path());
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(dsynth(&["bound", "2", "4"], tmp.path()).status.code(), Some(2));
    assert_eq!(dsynth(&["cayley", "6"], tmp.path()).status.code(), Some(2));
}

#[test]
fn bad_input_exits_1() {
    let tmp = tempfile::tempdir().unwrap();
    assert_eq!(dsynth(&["synth", "missing.json"], tmp.path()).status.code(), Some(1));
    let bad = write_spec(tmp.path(), "bad.json", r#"{"k": 3, "n": 1, "outputs": [1"#);
    assert_eq!(dsynth(&["synth", &bad], tmp.path()).status.code(), Some(1));
    let oversized = write_spec(
        tmp.path(),
        "wrong.json",
        r#"{"k": 3, "n": 1, "outputs": [0, 1, 2]}"#,
    );
    assert_eq!(dsynth(&["synth", &oversized], tmp.path()).status.code(), Some(1));
    assert_eq!(dsynth(&["nonsense"], tmp.path()).status.code(), Some(1));
}

#[test]
fn strict_mode_rejects_unknown_fields() {
    let tmp = tempfile::tempdir().unwrap();
    let spec = write_spec(
        tmp.path(),
        "extra.json",
        r#"{"k": 3, "n": 1, "outputs": [1, 2], "comment": "hi"}"#,
    );
    let lenient = dsynth(&["synth", &spec, "-o", "."], tmp.path());
    assert_eq!(lenient.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&lenient.stderr).contains("unknown field"));
    assert_eq!(
        dsynth(&["--strict", "synth", &spec, "-o", "."], tmp.path()).status.code(),
        Some(1)
    );
}

#[test]
fn verify_mismatch_exits_3() {
    let tmp = tempfile::tempdir().unwrap();
    let spec = write_spec(tmp.path(), "adder.json", ADDER);
    assert_eq!(dsynth(&["synth", &spec, "-o", "out"], tmp.path()).status.code(), Some(0));
    let other = write_spec(
        tmp.path(),
        "other.json",
        r#"{"k": 3, "n": 3, "outputs": [0, 1, 1, 2, 1, 2, 2, 1]}"#,
    );
    let out = dsynth(&["verify", "out/adder.circuit.json", &other], tmp.path());
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stdout).unwrap().contains("mismatch at input 7"));
}

#[test]
fn bound_sweep_guard() {
    let tmp = tempfile::tempdir().unwrap();
    let ok = dsynth(&["bound", "2", "3", "--sweep"], tmp.path());
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8(ok.stdout).unwrap().contains("swept 81 functions"));
    assert_eq!(dsynth(&["bound", "4", "7", "--sweep"], tmp.path()).status.code(), Some(1));
}

#[test]
fn cayley_table_and_check() {
    let tmp = tempfile::tempdir().unwrap();
    let out = dsynth(&["cayley", "5", "--check"], tmp.path());
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("a^4g"));
    assert!(stdout.contains("all pass"));
    // composite odd radix gets a warning but still works
    let comp = dsynth(&["cayley", "9"], tmp.path());
    assert_eq!(comp.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&comp.stderr).contains("composite"));
}

#[test]
fn help_exits_0() {
    let tmp = tempfile::tempdir().unwrap();
    assert_eq!(dsynth(&["--help"], tmp.path()).status.code(), Some(0));
    assert_eq!(dsynth(&["synth", "--help"], tmp.path()).status.code(), Some(0));
}
