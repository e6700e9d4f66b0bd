//! End-to-end tests of the binary: golden reports, pipe round trips, exit
//! codes, and seed determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mprec"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("stdin writable");
    child.wait_with_output().expect("binary exits")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn strip_timing(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut rest = s;
    while let Some(pos) = rest.find("\"timing_ms\":") {
        out.push_str(&rest[..pos]);
        out.push_str("\"timing_ms\":0");
        rest = &rest[pos + "\"timing_ms\":".len()..];
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        rest = &rest[end..];
    }
    out.push_str(rest);
    out
}

#[test]
fn golden_reports() {
    let cases = [
        (
            "C~", // complete graph on 4 vertices
            r#"{"command":"mp","results":[{"index":0,"n":4,"m":6,"mp":3,"certificate":{"F":[[0,1],[0,2],[0,3]],"S":[],"odd_components":2}}],"timing_ms":0}"#,
        ),
        (
            "Dhc", // 5-cycle
            r#"{"command":"mp","results":[{"index":0,"n":5,"m":5,"mp":3,"certificate":{"F":[[0,1],[0,4],[1,2]],"S":[3],"odd_components":4}}],"timing_ms":0}"#,
        ),
        (
            "Cs", // star on 4 vertices
            r#"{"command":"mp","results":[{"index":0,"n":4,"m":3,"mp":0,"certificate":{"F":[],"S":[0],"odd_components":3}}],"timing_ms":0}"#,
        ),
    ];
    for (g6, expected) in cases {
        let out = run_with_stdin(&["mp", "--output", "json"], &format!("{g6}\n"));
        assert!(out.status.success());
        assert_eq!(
            strip_timing(stdout_str(&out).trim()),
            expected,
            "golden for {g6}"
        );
    }
}

#[test]
fn generate_pipe_matches_in_process() {
    use mprec_core::preclusion::{mp, MpValue};

    use mprec_core::constructions as c;
    let cases: Vec<(&[&str], mprec_core::graph::Graph)> = vec![
        (
            &["generate", "complete", "--n", "6"],
            c::complete(6).unwrap(),
        ),
        (&["generate", "empty", "--n", "5"], c::empty(5).unwrap()),
        (&["generate", "path", "--n", "5"], c::path(5).unwrap()),
        (&["generate", "cycle", "--n", "7"], c::cycle(7).unwrap()),
        (&["generate", "star", "--n", "6"], c::star(6).unwrap()),
        (
            &["generate", "near-pm-plus-isolated", "--n", "7"],
            c::near_pm_plus_isolated(7).unwrap(),
        ),
        (
            &["generate", "complete-minus-edge", "--n", "9"],
            c::complete_minus(9, c::MinusKind::OneEdge).unwrap(),
        ),
        (
            &["generate", "complete-minus-p3", "--n", "9"],
            c::complete_minus(9, c::MinusKind::P3).unwrap(),
        ),
        (
            &[
                "generate",
                "complete-minus-matching",
                "--n",
                "10",
                "--t",
                "5",
            ],
            c::complete_minus(10, c::MinusKind::Matching(5)).unwrap(),
        ),
        (
            &["generate", "one-factor-union", "--n", "8", "--k", "3"],
            c::one_factor_union(8, 3).unwrap(),
        ),
        (
            &["generate", "near-factor-union", "--n", "7", "--r", "3"],
            c::near_factor_union(7, 3).unwrap(),
        ),
        (
            &["generate", "ham-union", "--n", "7", "--k", "2"],
            c::ham_union(7, 2).unwrap(),
        ),
        (
            &["generate", "f-witness", "--n", "8", "--k", "3"],
            c::f_witness(8, 3).unwrap(),
        ),
        (
            &["generate", "clique-satellites", "--n", "12"],
            c::clique_with_satellites(12).unwrap(),
        ),
        (
            &["generate", "universal-factors", "--n", "6", "--r", "3"],
            c::universal_plus_factors(6, 3).unwrap(),
        ),
    ];
    for (args, expected_graph) in cases {
        let generated = bin().args(args).output().expect("generate runs");
        assert!(generated.status.success(), "{args:?} failed");
        let g6 = stdout_str(&generated);
        let decoded = mprec_core::format::graph6::decode(g6.trim()).expect("valid graph6");
        assert_eq!(
            decoded, expected_graph,
            "{args:?} emitted a different graph"
        );

        let piped = run_with_stdin(&["mp", "--output", "csv"], &g6);
        let csv = stdout_str(&piped);
        let last = csv.lines().last().expect("one row");
        let piped_mp: usize = last.split(',').nth(3).expect("mp column").parse().unwrap();
        match mp(&expected_graph).value {
            MpValue::Finite(k) => assert_eq!(piped_mp, k, "{args:?} pipe disagrees"),
            MpValue::NotPrecludable => panic!("unexpected not-precludable generator output"),
        }
    }
}

#[test]
fn exit_codes() {
    // Parse failure: exit 2, message names the line.
    let out = run_with_stdin(&["mp"], "!!notgraph6!!\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_str(&out).contains("line 1"));

    // Verified theorem: exit 0.
    let out = bin()
        .args(["verify-theorem", "Thm3.3", "--n", "6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("verified"));

    // Out-of-hypothesis parameters: reported as skipped, exit 0.
    let out = bin()
        .args(["verify-theorem", "Thm2.1", "--n", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("skipped_out_of_range"));

    // Unknown theorem: usage error.
    let out = bin()
        .args(["verify-theorem", "NoSuchClaim"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Batch with one bad line still reports the good ones; exit reflects
    // the worst item.
    let out = run_with_stdin(&["mp", "--output", "csv"], "C~\n!!bad!!\nCs\n");
    assert_eq!(out.status.code(), Some(2));
    let csv = stdout_str(&out);
    assert!(csv.lines().any(|l| l.starts_with("0,4,6,3")));
    assert!(csv.lines().any(|l| l.starts_with("2,4,3,0")));
}

#[test]
fn certify_flow() {
    let dir = std::env::temp_dir().join(format!("mprec-certify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    // Extract the certificate of the complete graph on 4 vertices.
    let out = run_with_stdin(&["mp", "--output", "json"], "C~\n");
    let report: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    let cert = report["results"][0]["certificate"].clone();
    let cert_path = dir.join("cert.json");
    std::fs::write(&cert_path, serde_json::to_string(&cert).unwrap()).unwrap();

    let out = run_with_stdin(
        &["certify", "-", "--certificate", cert_path.to_str().unwrap()],
        "C~\n",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("valid"));

    // Drop an edge from F: no longer proving, exit 1.
    let mut weak = cert.clone();
    weak["F"].as_array_mut().unwrap().remove(0);
    let weak_path = dir.join("weak.json");
    std::fs::write(&weak_path, serde_json::to_string(&weak).unwrap()).unwrap();
    let out = run_with_stdin(
        &["certify", "-", "--certificate", weak_path.to_str().unwrap()],
        "C~\n",
    );
    assert_eq!(out.status.code(), Some(1));

    // Out-of-range vertex in S: rejected, exit 1.
    let mut bad = cert;
    bad["S"].as_array_mut().unwrap().push(serde_json::json!(9));
    let bad_path = dir.join("bad.json");
    std::fs::write(&bad_path, serde_json::to_string(&bad).unwrap()).unwrap();
    let out = run_with_stdin(
        &["certify", "-", "--certificate", bad_path.to_str().unwrap()],
        "C~\n",
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_str(&out).contains("rejected"));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn seed_determinism() {
    let args = [
        "verify-theorem",
        "OracleAgreement",
        "--n",
        "7",
        "--samples",
        "40",
        "--seed",
        "71",
        "--output",
        "json",
    ];
    let a = bin().args(args).output().unwrap();
    let b = bin().args(args).output().unwrap();
    assert_eq!(
        strip_timing(&stdout_str(&a)),
        strip_timing(&stdout_str(&b)),
        "same seed and caps must give byte-identical reports"
    );
    assert!(a.status.success());
}

#[test]
fn edgelist_format() {
    let out = run_with_stdin(
        &["mp", "--format", "edgelist", "--output", "csv"],
        "4 3\n0 1\n0 2\n0 3\n",
    );
    assert!(out.status.success());
    assert!(stdout_str(&out).contains("0,4,3,0"));

    let out = bin()
        .args(["generate", "path", "--n", "5", "--format", "edgelist"])
        .output()
        .unwrap();
    assert_eq!(stdout_str(&out), "5 4\n0 1\n1 2\n2 3\n3 4\n");
}

#[test]
fn scan_results_independent_of_worker_count() {
    let mut outputs = Vec::new();
    for threads in ["1", "2"] {
        let out = bin()
            .args([
                "ng-scan",
                "--n",
                "5",
                "--threads",
                threads,
                "--output",
                "json",
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        outputs.push(strip_timing(&stdout_str(&out)));
    }
    assert_eq!(outputs[0], outputs[1], "worker count changed scan results");
}

#[test]
fn enumeration_cap_is_refused_with_an_estimate() {
    let out = bin().args(["s-f-g", "--n", "8"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("exceeds the enumeration cap"), "got: {err}");
    assert!(err.contains("268435456"), "missing count estimate: {err}");
}

#[test]
fn env_defaults_yield_to_flags() {
    // Environment supplies the output mode...
    let out = bin()
        .env("MPREC_OUTPUT", "json")
        .args(["generate", "complete", "--n", "4"])
        .output()
        .unwrap();
    assert!(out.status.success());

    let mut child = bin()
        .env("MPREC_OUTPUT", "json")
        .args(["mp"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"C~\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(stdout_str(&out).starts_with('{'), "env output mode ignored");

    // ...and an explicit flag wins over it.
    let mut child = bin()
        .env("MPREC_OUTPUT", "json")
        .args(["mp", "--output", "csv"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"C~\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(
        stdout_str(&out).starts_with("index,"),
        "flag did not win over env"
    );
}

#[test]
fn sfg_and_ng_outputs() {
    let out = bin()
        .args(["s-f-g", "--n", "5", "--output", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let csv = stdout_str(&out);
    assert!(csv.starts_with("n,k,s,f,g"));
    assert!(csv.contains("5,2,4,6,4"));

    let out = bin()
        .args(["ng-scan", "--n", "4", "--output", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(report["results"][0]["max_sum"], serde_json::json!(3));
    assert_eq!(report["results"][0]["sum_violations"], serde_json::json!(0));
}
