//! End-to-end tests of the installed binary: exit codes, JSON shapes, and
//! determinism, driven through temporary files.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

const K4: &str = "C~";
const K5: &str = "D~{";
const TRIANGLE: &str = "Bw";
const PETERSEN: &str = "IheA@GUAo";

fn file_with(content: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    write!(f, "{content}").unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_franknum"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn econn_reports_lambda_three_for_k4() {
    let g = file_with(K4);
    let out = run(&["econn", g.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{\"lambda\":3}\n");
}

#[test]
fn certify_then_verify_round_trips() {
    let g = file_with(PETERSEN);
    let path = g.path().to_str().unwrap();
    let cert = run(&["certify", path]);
    assert!(cert.status.success(), "{}", stderr_of(&cert));

    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&cert)).unwrap();
    assert!(parsed["orientations"].as_array().unwrap().len() <= 5);
    assert_eq!(parsed["witness"].as_array().unwrap().len(), 15);

    let cert_file = file_with(&stdout_of(&cert));
    let verify = run(&["verify", path, cert_file.path().to_str().unwrap()]);
    assert!(verify.status.success(), "{}", stderr_of(&verify));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&verify)).unwrap();
    assert_eq!(report["pass"], serde_json::Value::Bool(true));
}

#[test]
fn verify_rejects_a_certificate_for_the_wrong_graph() {
    let pet = file_with(PETERSEN);
    let cert = run(&["certify", pet.path().to_str().unwrap()]);
    let cert_file = file_with(&stdout_of(&cert));

    let k4 = file_with(K4);
    let out = run(&[
        "verify",
        k4.path().to_str().unwrap(),
        cert_file.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["pass"], serde_json::Value::Bool(false));
}

#[test]
fn certify_refuses_the_triangle_citing_its_cut() {
    let g = file_with(TRIANGLE);
    let out = run(&["certify", g.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("cut"), "{}", stderr_of(&out));
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn four_edge_connected_inputs_need_the_allow_flag() {
    let g = file_with(K5);
    let path = g.path().to_str().unwrap();
    let refused = run(&["certify", path]);
    assert_eq!(refused.status.code(), Some(2));
    assert!(stderr_of(&refused).contains("--allow-4ec"));

    let allowed = run(&["certify", path, "--allow-4ec"]);
    assert!(allowed.status.success());
    assert_eq!(stdout_of(&allowed), "{\"frank_number\":1}\n");
}

#[test]
fn garbage_input_is_a_usage_error() {
    let g = file_with("!!!not graph6!!!");
    let out = run(&["econn", g.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_flags_and_missing_files_exit_one() {
    let out = run(&["econn", "/nonexistent/graph.g6"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["econn", "--bogus-flag"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("certify"));
}

#[test]
fn exact_reports_the_known_k4_values() {
    let g = file_with(K4);
    let out = run(&["exact", g.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "{\"frank_number\":2,\"sc_orientations\":24,\"distinct_maximal_masks\":12}\n"
    );
}

#[test]
fn flow_emits_nowhere_zero_values_and_closed_circuit_walks() {
    let g = file_with(K4);
    let path = g.path().to_str().unwrap();
    let plain = run(&["flow", path]);
    assert!(plain.status.success());
    let flow: serde_json::Value = serde_json::from_str(&stdout_of(&plain)).unwrap();
    let values = flow["values"].as_array().unwrap();
    assert_eq!(values.len(), 6);
    assert!(values.iter().all(|v| (1..=7).contains(&v.as_u64().unwrap())));
    assert!(flow.get("circuits").is_none());

    let dumped = run(&["flow", path, "--dump-circuits"]);
    let flow: serde_json::Value = serde_json::from_str(&stdout_of(&dumped)).unwrap();
    let coords = flow["circuits"].as_array().unwrap();
    assert_eq!(coords.len(), 3);
    for coord in coords {
        for walk in coord.as_array().unwrap() {
            let walk = walk.as_array().unwrap();
            assert!(walk.len() >= 4, "shortest circuit is a triangle");
            assert_eq!(walk.first(), walk.last(), "walks are closed");
        }
    }
}

#[test]
fn batch_emits_one_line_per_input_line_and_never_aborts() {
    let g = file_with(&format!("{K4}\n{TRIANGLE}\nnot-a-graph\n{PETERSEN}"));
    let out = run(&["batch", g.path().to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("{\"n\":4,\"m\":6,"));
    assert!(lines[1].starts_with("{\"error\":"));
    assert!(lines[2].starts_with("{\"error\":"));
    assert!(lines[3].starts_with("{\"n\":10,\"m\":15,"));
}

#[test]
fn batch_refuses_edge_list_format() {
    let g = file_with(K4);
    let out = run(&["batch", g.path().to_str().unwrap(), "--format", "edgelist"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn edge_list_format_is_accepted_everywhere_else() {
    let g = file_with("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let path = g.path().to_str().unwrap();
    let out = run(&["econn", path, "--format", "edgelist"]);
    assert_eq!(stdout_of(&out), "{\"lambda\":3}\n");
    let out = run(&["exact", "--format", "edgelist", path]);
    assert!(stdout_of(&out).starts_with("{\"frank_number\":2,"));
}

#[test]
fn dash_reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_franknum"))
        .args(["econn", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(K4.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{\"lambda\":3}\n");
}

#[test]
fn out_flag_writes_the_file_instead_of_stdout() {
    let g = file_with(K4);
    let target = NamedTempFile::new().unwrap();
    let out = run(&[
        "econn",
        g.path().to_str().unwrap(),
        "--out",
        target.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty());
    assert_eq!(std::fs::read_to_string(target.path()).unwrap(), "{\"lambda\":3}\n");
}

#[test]
fn inadmissible_or_malformed_schedules_exit_one() {
    let g = file_with(K4);
    let path = g.path().to_str().unwrap();
    for bad in ["1,2,3", "0,1,2", "1,2", "1,2,4,xyz", "1,2,4,01"] {
        let out = run(&["certify", path, "--schedule", bad]);
        assert_eq!(out.status.code(), Some(1), "schedule {bad} should be refused");
    }
}

#[test]
fn a_schedule_family_that_cannot_witness_every_edge_exits_two() {
    let g = file_with(K4);
    let out = run(&["certify", g.path().to_str().unwrap(), "--schedule", "3,5,7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("witness"));
}

#[test]
fn no_shrink_keeps_all_five_orientations() {
    let g = file_with(PETERSEN);
    let out = run(&["certify", g.path().to_str().unwrap(), "--no-shrink"]);
    let cert: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(cert["orientations"].as_array().unwrap().len(), 5);
    assert_eq!(cert["provenance"].as_array().unwrap().len(), 5);
}

#[test]
fn reruns_are_byte_identical() {
    let g = file_with(PETERSEN);
    let path = g.path().to_str().unwrap();
    let first = run(&["certify", path, "--seed", "7"]);
    let second = run(&["certify", path, "--seed", "7"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let batch_input = file_with(&format!("{K4}\n{PETERSEN}"));
    let bpath = batch_input.path().to_str().unwrap();
    assert_eq!(run(&["batch", bpath]).stdout, run(&["batch", bpath]).stdout);
}
