use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tourney(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tourney"))
        .args(args)
        .output()
        .expect("run tourney")
}

fn tourney_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tourney"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn tourney");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_transitive_to_stdout() {
    let o = tourney(&["gen", "--kind", "transitive", "--n", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "3\n111\n");
}

#[test]
fn gen_random_is_reproducible_and_needs_seed() {
    let a = tourney(&["gen", "--kind", "random", "--n", "8", "--seed", "42"]);
    let b = tourney(&["gen", "--kind", "random", "--n", "8", "--seed", "42"]);
    assert_eq!(stdout(&a), "8\n1101000110111110100000100011\n");
    assert_eq!(a.stdout, b.stdout);
    let missing = tourney(&["gen", "--kind", "random", "--n", "8"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn gen_regular_rejects_even_n() {
    let o = tourney(&["gen", "--kind", "regular", "--n", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("even"));
}

#[test]
fn gen_to_file_then_analyze_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r5.trn");
    let p = path.to_str().unwrap();
    assert!(tourney(&["gen", "--kind", "regular", "--n", "5", "-o", p])
        .status
        .success());
    let o = tourney(&["analyze", p, "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["dr"], 0);
    assert_eq!(v["c3"], 5);
    assert_eq!(v["c3_fast"], 5);
    assert_eq!(v["prop3_holds"], true);
    assert_eq!(v["is_regular"], true);
    assert_eq!(v["is_transitive"], false);
    assert_eq!(v["signed_degrees"], serde_json::json!([0, 0, 0, 0, 0]));
    assert_eq!(v["in_degrees"].as_array().unwrap().len(), 5);
    assert_eq!(v["out_degrees"].as_array().unwrap().len(), 5);
}

#[test]
fn analyze_human_table() {
    let o = tourney_stdin(&["analyze", "-"], "3\n111\n");
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("dr            8"));
    assert!(text.contains("prop3_holds   true"));
}

#[test]
fn analyze_reports_parse_errors() {
    let o = tourney_stdin(&["analyze", "-"], "3\n11");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2"), "{err}");
    assert!(err.contains("expected 3 bits, found 2"), "{err}");
}

#[test]
fn flip_writes_tournament_and_report() {
    let o = tourney_stdin(&["flip", "-", "0", "2"], "3\n111\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "3\n101\n");
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("case Forward"));
    assert!(err.contains("dr_delta -8"));
    assert!(err.contains("c3_delta 1"));
}

#[test]
fn flip_predict_only_json() {
    let o = tourney_stdin(
        &["flip", "-", "1", "0", "--predict-only", "--json"],
        "3\n101\n",
    );
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["case"], "Backward");
    assert_eq!(v["k"], 0);
    assert_eq!(v["dr_delta"], 8);
    assert_eq!(v["c3_delta"], -1);
    assert_eq!(v["hypothesis_satisfied"], true);
    assert_eq!(v["v"], 1);
    assert_eq!(v["w"], 0);
}

#[test]
fn flip_rejects_bad_vertices() {
    assert_eq!(
        tourney_stdin(&["flip", "-", "1", "1"], "3\n111\n")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        tourney_stdin(&["flip", "-", "0", "5"], "3\n111\n")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_exhaustive_json() {
    let o = tourney(&["verify", "--prop", "all", "--max-n", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 6);
    for r in reports {
        assert!(r["counterexamples"].as_array().unwrap().is_empty());
    }
    assert_eq!(reports[2]["property"], "Prop3");
    assert_eq!(reports[2]["instances_checked"], 1 + 1 + 2 + 8 + 64);
    assert_eq!(reports[0]["instances_checked"], 64 * 12 + 8 * 6 + 2 * 2);
}

#[test]
fn verify_sampled() {
    let o = tourney(&["verify", "--prop", "3", "--sample", "40,200,9"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("checked=200"), "{text}");
    assert!(text.contains("VERIFIED"));
}

#[test]
fn verify_rejects_bad_arguments() {
    assert_ne!(tourney(&["verify", "--prop", "9"]).status.code(), Some(0));
    assert_ne!(
        tourney(&["verify", "--prop", "3", "--sample", "4,5"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        tourney(&["verify", "--prop", "3", "--max-n", "12"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bench_reports_consistency() {
    let o = tourney(&[
        "bench",
        "--n",
        "30",
        "--flips",
        "5000",
        "--seed",
        "1",
        "--recompute-limit",
        "100",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("tracker consistent     true"), "{text}");
}
