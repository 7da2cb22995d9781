use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn scene(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../scenes").join(name)
}

fn hopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf")).args(args).env_remove("HOPF_ELEMENT_CAP").output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn build_s3(dir: &Path) -> String {
    let out = hopf(&["build", scene("s3.json").to_str().unwrap(), "-o", dir.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    dir.join("s3.hstore").display().to_string()
}

#[test]
fn build_then_analyze_group_likes() {
    let dir = tempfile::tempdir().unwrap();
    let artifact = build_s3(dir.path());
    let out = hopf(&["analyze", &artifact, "--group-likes", "--json"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["records"].as_array().is_some_and(|r| !r.is_empty()));
    assert!(stdout(&out).contains('6'));
}

#[test]
fn rebuild_is_byte_identical() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let first = std::fs::read(build_s3(a.path())).unwrap();
    let second = std::fs::read(build_s3(b.path())).unwrap();
    assert_eq!(first, second);
}

#[test]
fn report_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let artifact = build_s3(dir.path());
    let report = dir.path().join("report.txt");
    let out = hopf(&["analyze", &artifact, "--composition-series", "--report", report.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(std::fs::read_to_string(report).unwrap(), stdout(&out));
}

#[test]
fn non_cocycle_scene_fails_verification_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let out = hopf(&["build", scene("bad_omega.json").to_str().unwrap(), "-o", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("at (χ,η,ψ) = ("), "{}", stderr(&out));
}

#[test]
fn missing_roots_of_unity_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = hopf(&["build", scene("missing_roots.json").to_str().unwrap(), "-o", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 4, "{}", stderr(&out));
}

#[test]
fn corrupt_and_missing_artifacts_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let artifact = build_s3(dir.path());
    let mut bytes = std::fs::read(&artifact).unwrap();
    let last = bytes.len() - 2;
    bytes[last] ^= 0x01;
    std::fs::write(&artifact, bytes).unwrap();
    assert_eq!(code(&hopf(&["analyze", &artifact])), 4);
    let missing = dir.path().join("absent.hstore");
    assert_eq!(code(&hopf(&["analyze", missing.to_str().unwrap()])), 4);
}

#[test]
fn element_cap_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_hopf"))
            .args(["build", scene("s3.json").to_str().unwrap(), "-o", dir.path().to_str().unwrap()])
            .env("HOPF_ELEMENT_CAP", cap)
            .output()
            .unwrap()
    };
    assert_ne!(code(&run("2")), 0);
    assert_eq!(code(&run("not-a-number")), 4);
    assert_eq!(code(&run("100")), 0);
}

#[test]
fn check_examples_exit_codes() {
    assert_eq!(code(&hopf(&["check-examples", "--family", "4.1", "--n", "13", "--m", "9"])), 0);
    assert_eq!(code(&hopf(&["check-examples", "--family", "4.2", "--n", "14", "--m", "9"])), 0);
    assert_eq!(code(&hopf(&["check-examples", "--family", "4.1", "--n", "9", "--m", "9"])), 2);
    assert_eq!(code(&hopf(&["check-examples", "--family", "4.1", "--n", "13", "--m", "8"])), 4);
    assert_eq!(code(&hopf(&["check-examples", "--family", "4.3", "--n", "13", "--m", "9"])), 4);
}

#[test]
fn diff_identical_and_mismatched_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let artifact = build_s3(dir.path());
    let same = hopf(&["diff", &artifact, &artifact]);
    assert_eq!(code(&same), 0, "{}", stdout(&same));
    let catalogue = tempfile::tempdir().unwrap();
    let out = hopf(&["build", scene("catalogue.json").to_str().unwrap(), "-o", catalogue.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let other = catalogue.path().join("kac_paljutkin.hstore");
    assert_eq!(code(&hopf(&["diff", &artifact, other.to_str().unwrap()])), 4);
    let (k_s3, dual) = (catalogue.path().join("kS3.hstore"), catalogue.path().join("dual_kS3.hstore"));
    let distinct = hopf(&["diff", k_s3.to_str().unwrap(), dual.to_str().unwrap()]);
    assert_eq!(code(&distinct), 2, "{}", stdout(&distinct));
    assert!(stdout(&distinct).contains("invariant"));
}

#[test]
fn unknown_subcommand_is_an_input_error() {
    assert_eq!(code(&hopf(&["frobnicate"])), 4);
    assert_eq!(code(&hopf(&["--help"])), 0);
}
