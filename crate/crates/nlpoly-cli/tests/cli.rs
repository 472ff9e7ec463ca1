//! End-to-end tests against the built binary: output shapes, method
//! agreement, exit codes, and benchmark reproducibility.

use std::path::PathBuf;
use std::process::{Command, Output};

fn nlpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nlpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = nlpoly(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn nl_reports_the_worked_example_with_closest_set() {
    let out = stdout(&[
        "nl",
        "--anf",
        "x1*x2+x1*x3+x2+1",
        "-n",
        "3",
        "--method",
        "nlp",
        "--closest",
    ]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("2"));
    assert_eq!(lines.next(), Some("closest affine functions (4):"));
    let rest: Vec<&str> = lines.map(str::trim).collect();
    assert_eq!(
        rest,
        vec![
            "(0,1,0,1)  x1+x3",
            "(1,0,0,1)  1+x3",
            "(1,0,1,0)  1+x2",
            "(1,1,1,0)  1+x1+x2",
        ]
    );
}

#[test]
fn nl_methods_agree_on_hex_input() {
    for method in ["brute", "fwt", "nlp", "ideal"] {
        let out = stdout(&["nl", "--hex", "CA", "--method", method]);
        assert_eq!(out.trim(), "2", "method {method}");
    }
}

#[test]
fn nl_json_record() {
    let out = stdout(&[
        "nl",
        "--bin",
        "00",
        "--method",
        "fwt",
        "--json",
        "--closest",
        "--details",
    ]);
    let record: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(record["n"], 1);
    assert_eq!(record["nonlinearity"], 0);
    assert_eq!(record["closest"][0]["anf"], "0");
    assert_eq!(record["walsh_spectrum"][0], 2);
}

#[test]
fn transform_commands_print_canonical_vectors() {
    assert_eq!(stdout(&["walsh", "--bin", "01"]).trim(), "[0, 2]");
    assert_eq!(
        stdout(&["nlp-coeffs", "--bin", "00"]).trim(),
        "[0, 1, 2, -2]"
    );
    assert_eq!(stdout(&["nlp-evals", "--bin", "00"]).trim(), "[0, 1, 2, 1]");
    assert_eq!(stdout(&["anf", "--bin", "0000"]).trim(), "0");
    assert_eq!(stdout(&["anf", "--hex", "CA"]).trim(), "1+x2+x1*x2+x1*x3");
    assert_eq!(stdout(&["nnf", "--bin", "0110"]).trim(), "[0, 1, 1, -2]");
}

#[test]
fn ideal_search_traces_the_example() {
    let out = stdout(&["ideal", "--anf", "x1*x2+x1*x3+x2+1", "-n", "3"]);
    assert!(out.contains("t=1: no affine function within distance 0"));
    assert!(out.contains("t=2: no affine function within distance 1"));
    assert!(out.contains("t=3: witness"));
    assert!(out.trim_end().ends_with("nonlinearity: 2"));
}

#[test]
fn sym_variety_verdicts() {
    let out = stdout(&["sym-variety", "3", "2", "2"]);
    assert!(out.contains("{000, 001, 010, 100}"));
    assert!(out.contains("symmetric variety equals ball: true"));
    assert!(out.contains("monomial variety equals ball: true"));

    let out = stdout(&["sym-variety", "2", "2", "3", "--json"]);
    let record: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(record["symmetric"]["count"], 5);
    assert_eq!(record["monomial"]["count"], 5);
    assert_eq!(record["symmetric_equals_ball"], true);
}

#[test]
fn exit_codes_by_error_class() {
    // Parse errors exit 2.
    assert_eq!(nlpoly(&["nl", "--bin", "012"]).status.code(), Some(2));
    assert_eq!(nlpoly(&["nl", "--hex", "GG"]).status.code(), Some(2));
    assert_eq!(
        nlpoly(&["nl", "--anf", "x9", "-n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        nlpoly(&["nl", "--bin", "01", "--method", "nope"])
            .status
            .code(),
        Some(2)
    );
    // Size limits exit 3.
    assert_eq!(
        nlpoly(&[
            "bench",
            "--n-max",
            "20",
            "--methods",
            "brute",
            "--trials",
            "1"
        ])
        .status
        .code(),
        Some(3)
    );
    // I/O failures exit 4.
    assert_eq!(
        nlpoly(&[
            "bench",
            "--n-min",
            "3",
            "--n-max",
            "3",
            "--trials",
            "1",
            "--csv",
            "/nonexistent-dir/out.csv",
        ])
        .status
        .code(),
        Some(4)
    );
    // Missing input, conflicting inputs and a missing -n are usage errors.
    assert_eq!(nlpoly(&["nl"]).status.code(), Some(2));
    assert_eq!(
        nlpoly(&["nl", "--bin", "01", "--hex", "C"]).status.code(),
        Some(2)
    );
    assert_eq!(nlpoly(&["nl", "--anf", "x1"]).status.code(), Some(2));
    assert_eq!(
        nlpoly(&["nl", "--bin", "0110", "-n", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn bench_csv_is_reproducible_apart_from_timings() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let a = dir.join("bench_a.csv");
    let b = dir.join("bench_b.csv");
    for path in [&a, &b] {
        stdout(&[
            "bench",
            "--n-min",
            "4",
            "--n-max",
            "6",
            "--trials",
            "8",
            "--seed",
            "123",
            "--methods",
            "fwt,nlp",
            "--csv",
            path.to_str().unwrap(),
        ]);
    }
    let strip_timing = |text: &str| -> Vec<String> {
        text.lines()
            .map(|line| {
                let fields: Vec<&str> = line.split(',').collect();
                if fields.len() == 6 && fields[3] != "mean_ns" {
                    format!(
                        "{},{},{},-,{},{}",
                        fields[0], fields[1], fields[2], fields[4], fields[5]
                    )
                } else {
                    line.to_string()
                }
            })
            .collect()
    };
    let text_a = std::fs::read_to_string(&a).unwrap();
    let text_b = std::fs::read_to_string(&b).unwrap();
    assert_eq!(strip_timing(&text_a), strip_timing(&text_b));
    assert!(text_a.starts_with("n,method,trials,mean_ns,sums,doublings\n"));
}

#[test]
fn ideal_generators_listing() {
    let out = stdout(&["ideal", "--bin", "01", "-t", "2", "--gens", "--points"]);
    assert!(out.contains("generators (1)"));
    assert!(out.contains("a0*a1"));
    assert!(out.contains("variety points (3):"));
}
