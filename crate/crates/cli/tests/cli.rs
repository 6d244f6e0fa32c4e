//! Behavior of the `fujita` binary: determinism, schema round-trips, exit
//! codes, and the full-job entry point.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn fujita(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fujita"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

const PAPER_COVER: &str = r#"{"n":7,"branch":[{"label":"0","m":1},{"label":"1","m":1},{"label":"x","m":1},{"label":"inf","m":4}]}"#;
const PAPER_HG: &str = r#"{"alpha":"8/7","beta":"3/7","gamma":"9/7"}"#;

#[test]
fn identical_inputs_produce_identical_bytes() {
    for (cmd, input) in [
        ("analyze-cover", PAPER_COVER),
        ("classify-hg", PAPER_HG),
        ("resolve-sing", r#"{"n":7,"q":3}"#),
        ("kodaira-check", r#"{"k2":19,"b":2,"g":3,"sigma":1}"#),
    ] {
        let a = fujita(&[cmd], input);
        let b = fujita(&[cmd], input);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{cmd} output must be byte-identical");
    }
}

#[test]
fn emitted_reports_revalidate_against_schema_types() {
    let out = fujita(&["analyze-cover"], PAPER_COVER);
    let parsed: fujita_cli::schema::CoverReport =
        serde_json::from_slice(&out.stdout).expect("cover report re-validates");
    let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(String::from_utf8(out.stdout).unwrap(), again);

    let out = fujita(&["classify-hg"], PAPER_HG);
    let parsed: fujita_cli::schema::HgReport =
        serde_json::from_slice(&out.stdout).expect("hg report re-validates");
    assert_eq!(parsed.schema_version, 1);

    let out = fujita(&["monodromy", "--bfs-bound", "500"], PAPER_HG);
    let parsed: fujita_cli::schema::MonodromyReport =
        serde_json::from_slice(&out.stdout).expect("monodromy report re-validates");
    assert_eq!(parsed.conductor, 7);

    let out = fujita(&["reduce"], r#"{"multiplicities":[7,4,2,1,1]}"#);
    let parsed: fujita_cli::schema::ReduceReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed.base_change_order, 28);
}

#[test]
fn validation_failures_exit_2_with_error_object() {
    // module-level validation error
    let out = fujita(
        &["analyze-cover"],
        r#"{"n":7,"branch":[{"label":"a","m":1},{"label":"b","m":1},{"label":"c","m":2}]}"#,
    );
    assert_eq!(out.status.code(), Some(2));
    let err: fujita_cli::schema::ErrorObject = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(err.error.code, "sum-not-zero-mod-n");

    // malformed JSON
    let out = fujita(&["analyze-cover"], "{nope");
    assert_eq!(out.status.code(), Some(2));
    let err: fujita_cli::schema::ErrorObject = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(err.error.code, "invalid-json");

    // unknown fields are rejected
    let out = fujita(
        &["analyze-cover"],
        r#"{"n":7,"surprise":1,"branch":[{"label":"a","m":1},{"label":"b","m":1},{"label":"c","m":5}]}"#,
    );
    assert_eq!(out.status.code(), Some(2));
    let err: fujita_cli::schema::ErrorObject = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(err.error.code, "schema-violation");

    // reducible input for the monodromy engine
    let out = fujita(
        &["monodromy"],
        r#"{"alpha":"1","beta":"1/2","gamma":"1/2"}"#,
    );
    assert_eq!(out.status.code(), Some(2));
    let err: fujita_cli::schema::ErrorObject = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(err.error.code, "resonant-input");

    // bad rational strings
    let out = fujita(
        &["classify-hg"],
        r#"{"alpha":"x/7","beta":"3/7","gamma":"9/7"}"#,
    );
    assert_eq!(out.status.code(), Some(2));
    let err: fujita_cli::schema::ErrorObject = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(err.error.code, "invalid-rational");
}

#[test]
fn full_job_objects_run() {
    let job = format!(
        r#"{{"command":"analyze-cover","input":{PAPER_COVER},"options":{{"format":"text"}}}}"#
    );
    let out = fujita(&["run"], &job);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("genus = 6"));

    // unsupported schema version is refused
    let job = format!(r#"{{"schema_version":99,"command":"analyze-cover","input":{PAPER_COVER}}}"#);
    let out = fujita(&["run"], &job);
    assert_eq!(out.status.code(), Some(2));

    // unknown job fields are refused
    let job = format!(r#"{{"command":"analyze-cover","input":{PAPER_COVER},"extra":0}}"#);
    let out = fujita(&["run"], &job);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn schema_subcommand_prints_the_shipped_schema() {
    let out = fujita(&["schema"], "");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["$id"], "fujita-cli-v1");
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        fujita_cli::JSON_SCHEMA
    );
}

#[test]
fn text_format_renders_tables() {
    let out = fujita(&["analyze-cover", "--format", "text"], PAPER_COVER);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("genus = 6"));
    assert!(text.contains("unitary flat"));

    let out = fujita(
        &["fujita-report", "--format", "text", "--bfs-bound", "500"],
        r#"{"fiber":{"n":7,"branch":[{"label":"0","m":1},{"label":"1","m":1},{"label":"x","m":1},{"label":"inf","m":4}]},"moving_label":"x","base_genus":3,"base_cover":{"order":7,"ram_orders":[7,7,7]}}"#,
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("semi-ample: no"));
}

#[test]
fn library_run_matches_binary() {
    let job: fujita_cli::JobSpec =
        serde_json::from_str(r#"{"command":"resolve-sing","input":{"n":7,"q":3}}"#).unwrap();
    let report = fujita_cli::run(&job).unwrap();
    let out = fujita(&["resolve-sing"], r#"{"n":7,"q":3}"#);
    assert_eq!(report.to_json().into_bytes(), out.stdout);
}
