//! End-to-end runs of the `schubertkit` binary: exit codes, output shapes,
//! and the golden corpus.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

use schubertkit::poly::canonical;
use schubertkit::schubert::compute::{SchubertJson, SchubertPoly};
use schubertkit::schubert::{schubert, Type};
use schubertkit::weyl::{Kind, WeylElement};

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_schubertkit"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (code, stdout, stderr) = run(&all);
    assert_eq!(code, 0, "{stderr}");
    serde_json::from_str(&stdout).expect("valid JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("schubertkit-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

fn golden() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn top_suite_passes() {
    let (code, stdout, _) = run(&["verify", "--suite", "top", "--type", "A", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("top: 3 passed, 0 failed"), "{stdout}");
}

#[test]
fn theta_expansion_of_231() {
    let v = json(&["expand", "--type", "C", "--w", "2,3,1", "--k", "1", "--basis", "theta"]);
    assert_eq!(v["(2)"], 1);
}

#[test]
fn schubert_json_round_trips() {
    let v = json(&["compute", "--type", "C", "--w", "2,3,-1", "--double"]);
    let parsed: SchubertJson = serde_json::from_value(v).unwrap();
    let s = SchubertPoly::from_json(&parsed).unwrap();
    let w = WeylElement::parse(Kind::BC, "2,3,-1").unwrap();
    assert_eq!(s.value, canonical(&schubert(Type::C, &w, true).unwrap().value));
    assert!(s.double);
}

#[test]
fn trailing_fixed_points_are_dropped() {
    let v = json(&["compute", "--type", "D", "--w", "-2,-1,3"]);
    assert_eq!(v["w"], "-2,-1");
}

#[test]
fn eta_of_a_typed_shape() {
    let v = json(&["compute", "--type", "D", "--shape", "2,1;type=1", "--k", "1"]);
    assert_eq!(v["shape"], "(2,1);type=1");
    assert!(!v["terms"].as_array().unwrap().is_empty());
}

#[test]
fn splitting_with_box_flag() {
    let v = json(&[
        "expand", "--type", "D", "--w", "2,-3,-1", "--basis", "split", "--flags-a", "b,1,3", "--flags-b", "b,2,3",
    ]);
    assert!(v["terms"].as_object().unwrap().values().all(|c| c.as_i64().unwrap() > 0));
}

#[test]
fn key_identities_for_one_element() {
    let (code, stdout, _) = run(&["verify", "--suite", "identities", "--type", "C", "--w", "1,3,-2", "--k", "1"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("PASS C.key:"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "--type", "Q", "--w", "1"][..],
        &["compute", "--type", "A", "--w", "2,2"],
        &["compute", "--type", "A", "--w", "-1,2"],
        &["verify", "--suite", "nonsense"],
        &["expand", "--type", "A", "--w", "2,1", "--basis", "theta"],
        &["frobnicate"],
    ] {
        let (code, _, stderr) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!stderr.is_empty());
    }
}

#[test]
fn violated_hypothesis_exits_two() {
    let (code, _, stderr) = run(&["expand", "--type", "C", "--w", "2,1", "--k", "2", "--basis", "theta"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not increasing"), "{stderr}");
}

#[test]
fn verify_all_is_deterministic() {
    let args = ["verify", "--suite", "all", "--max-n", "2", "--format", "json"];
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
}

#[test]
fn corpus_matches_golden() {
    let (code, stdout, _) = run(&["corpus", "--check", "--dir", golden().to_str().unwrap()]);
    assert_eq!(code, 0, "{stdout}");
}

#[test]
fn regenerated_corpus_is_byte_identical() {
    let dir = scratch("regen");
    let (code, _, _) = run(&["corpus", "--dir", dir.to_str().unwrap()]);
    assert_eq!(code, 0);
    for entry in std::fs::read_dir(golden()).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), std::fs::read(dir.join(name)).unwrap(), "{name:?}");
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn tampered_corpus_exits_one() {
    let dir = scratch("tamper");
    run(&["corpus", "--dir", dir.to_str().unwrap()]);
    std::fs::write(dir.join("stanley_C2.json"), "{}\n").unwrap();
    let (code, stdout, _) = run(&["corpus", "--check", "--dir", dir.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stdout.contains("stanley_C2.json"), "{stdout}");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn degree_cap_reaches_the_library() {
    let (code, _, stderr) = run(&["expand", "--type", "C", "--w", "-3,-2,-1", "--basis", "q", "--degree-cap", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("cap"), "{stderr}");
}
