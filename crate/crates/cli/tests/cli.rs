//! End-to-end binary checks: the exit-code contract (0 success, 1 usage,
//! 2 computation error, 3 FAIL), document schema on stdout, CSV shape, and
//! cross-shard determinism through the command line.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delay-moments"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    serde_json::from_slice(&output.stdout).expect("stdout is a json document")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn usage_errors_exit_1() {
    let bad: &[&[&str]] = &[
        &["moments"],
        &["moments", "--beta", "3", "--k-max", "2"],
        &["moments", "--beta", "2", "--k-max", "2", "--symbolic", "--n-value", "5"],
        &["moments", "--beta", "2", "--k-max", "2", "--symbolic", "--format", "csv"],
        &["moments", "--beta", "2", "--k-max", "2", "--n-value", "7/0"],
        &["verify-integrality", "--target", "pk"],
        &["verify-integrality", "--target", "Pk", "--g-star", "10"],
        &["reproduce", "--target", "appendixa"],
        &["genfun", "--which", "J", "--beta", "2", "--index", "3"],
        &["genfun", "--which", "P", "--beta", "1", "--index", "4"],
        &["genfun", "--which", "P", "--beta", "2", "--index", "4", "--order", "3"],
        &["genfun", "--which", "R", "--beta", "2", "--index", "5"],
        &["genfun", "--which", "f", "--beta", "2", "--index", "1"],
        &["asympt", "--digits", "10"],
        &["asympt", "--a", "1", "--b", "2"],
        &["asympt", "--b", "3", "--check-range", "5..1"],
        &["asympt", "--b", "3", "--check-range", "1-5"],
        &["not-a-command"],
    ];
    for args in bad {
        assert_eq!(exit_code(&run(args)), 1, "expected usage failure for {args:?}");
    }
}

#[test]
fn computation_errors_exit_2() {
    // Pole of tau_3 at N = 2, pole of J_3 at zeta = 1/2, divergent Monte
    // Carlo moment, singular downward Wishart path, degenerate B_1.
    let bad: &[&[&str]] = &[
        &["moments", "--beta", "2", "--k-max", "4", "--n-value", "2"],
        &["genfun", "--which", "J", "--beta", "2", "--index", "3", "--zeta", "1/2"],
        &["mc", "--beta", "1", "--n", "4", "--k", "3", "--samples", "16", "--seed", "1"],
        &["wishart", "--beta", "2", "--k", "-3", "--alpha", "2", "--n", "5"],
        &["asympt", "--b", "1"],
    ];
    for args in bad {
        let output = run(args);
        assert_eq!(exit_code(&output), 2, "expected computation failure for {args:?}");
        assert!(!output.stderr.is_empty(), "expected an error message for {args:?}");
    }
}

#[test]
fn help_and_version_exit_0() {
    for args in [&["--help"][..], &["--version"][..], &["moments", "--help"][..]] {
        assert_eq!(exit_code(&run(args)), 0, "{args:?}");
    }
}

#[test]
fn documents_carry_schema_and_command_line() {
    let doc = stdout_json(&run(&["coeffs", "--beta", "2", "--k-max", "4", "--g-max", "2"]));
    assert_eq!(doc["schema_version"], 1);
    assert!(doc["generator"].as_str().unwrap().starts_with("delay-moments "));
    assert_eq!(doc["command"], "coeffs --beta 2 --k-max 4 --g-max 2");
    assert_eq!(doc["metadata"]["beta"], 2);
    // Entries are decimal strings, rows k = 0..4 over columns g = 0..2.
    assert_eq!(doc["payload"]["entries"][4][0], "22");
    assert_eq!(doc["payload"]["entries"][3][2], "30");
    assert!(doc["payload"].get("aux_entries").is_none());

    let doc = stdout_json(&run(&["coeffs", "--beta", "1", "--k-max", "3", "--g-max", "2"]));
    assert_eq!(doc["payload"]["entries"][3][1], "18");
    assert_eq!(doc["payload"]["aux_entries"][2][1], "-8");
}

#[test]
fn verification_pass_exits_0_with_reports() {
    let output = run(&["verify-integrality", "--target", "table", "--k-star", "8", "--g-star", "6"]);
    let doc = stdout_json(&output);
    let reports = doc["payload"]["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    for report in reports {
        assert_eq!(report["verdict"], "pass");
        assert_eq!(report["target"], "table");
    }

    let doc = stdout_json(&run(&["verify-integrality", "--target", "Rg", "--g-star", "6"]));
    assert_eq!(doc["payload"]["verdict"], "pass");
    assert_eq!(doc["payload"]["range"]["g_max"], 6);
}

#[test]
fn reproduce_targets_pass_and_exit_0() {
    for (target, checked) in [("appendixA", 10), ("tableI", 126), ("appendixB", 20)] {
        let doc = stdout_json(&run(&["reproduce", "--target", target]));
        assert_eq!(doc["payload"]["verdict"], "pass", "{target}");
        assert_eq!(doc["payload"]["checked"], checked, "{target}");
        assert!(doc["payload"].get("diffs").is_none(), "{target}");
    }
}

#[test]
fn evaluated_csv_is_plain_and_exact() {
    let output = run(&["moments", "--beta", "2", "--k-max", "3", "--n-value", "5", "--format", "csv"]);
    assert_eq!(exit_code(&output), 0);
    let text = String::from_utf8(output.stdout).unwrap();
    assert_eq!(text, "k,tau\n0,1\n1,1\n2,25/12\n3,625/84\n");
}

#[test]
fn symbolic_document_matches_evaluated_values() {
    let doc = stdout_json(&run(&["moments", "--beta", "1", "--k-max", "2", "--n-value", "9"]));
    assert_eq!(doc["payload"]["taus"][2], serde_json::json!({ "num": "81", "den": "35" }));
    assert_eq!(doc["payload"]["bs"][0], serde_json::json!({ "num": "8", "den": "9" }));
    assert_eq!(doc["metadata"]["mode"], "evaluated");

    let doc = stdout_json(&run(&["moments", "--beta", "2", "--k-max", "2", "--symbolic"]));
    assert_eq!(doc["payload"]["taus"][2]["value"]["num"], serde_json::json!(["0", "0", "2"]));
    assert_eq!(doc["payload"]["taus"][2]["value"]["den"], serde_json::json!(["-1", "0", "1"]));
}

#[test]
fn out_flag_writes_the_document() {
    let path = std::env::temp_dir().join(format!("delay-moments-out-{}.json", std::process::id()));
    let path_str = path.to_str().unwrap();
    let output = run(&["moments", "--beta", "2", "--k-max", "2", "--out", path_str]);
    assert_eq!(exit_code(&output), 0);
    assert!(output.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["schema_version"], 1);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn mc_estimates_are_shard_independent_through_the_cli() {
    let mean_of = |shards: &str| {
        let doc = stdout_json(&run(&[
            "mc", "--beta", "2", "--n", "6", "--k", "1", "--samples", "4096", "--seed", "11",
            "--shards", shards,
        ]));
        assert_eq!(doc["metadata"]["rng"], delay_moments::mc::RNG_SPEC);
        (doc["payload"]["mean"].as_f64().unwrap(), doc["payload"]["stderr"].as_f64().unwrap())
    };
    let (m1, s1) = mean_of("1");
    let (m4, s4) = mean_of("4");
    assert_eq!(m1.to_bits(), m4.to_bits());
    assert_eq!(s1.to_bits(), s4.to_bits());
    assert!((m1 - 1.0).abs() <= 4.0 * s1);
}

#[test]
fn wishart_values_are_exact_rationals() {
    let doc = stdout_json(&run(&["wishart", "--beta", "2", "--k", "-1", "--alpha", "5/2", "--n", "4"]));
    assert_eq!(doc["payload"]["value"], serde_json::json!({ "num": "8", "den": "5" }));
    let doc = stdout_json(&run(&["wishart", "--beta", "1", "--k", "2", "--alpha", "3", "--n", "2"]));
    // D^(1)(2) = N(N + alpha)(2N + alpha + 1) at N = 2, alpha = 3.
    assert_eq!(doc["payload"]["value"], "80");
}
