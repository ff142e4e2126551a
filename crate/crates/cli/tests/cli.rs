use std::process::{Command, Output};

use serde_json::Value;

fn orbital(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbital"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn rs_prints_recording_tableaux() {
    assert_eq!(stdout(&orbital(&["rs", "[2,1]"])), "1\n2\n");
    assert_eq!(stdout(&orbital(&["rs", "[1,2,3]"])), "1 2 3\n");
    assert_eq!(
        stdout(&orbital(&["rs", "[7,6,2,5,10,1,3,4,8,9]"])),
        "1 3 4 8 9\n2 5 10\n6\n7\n"
    );
    let bad = orbital(&["rs", "[1,1]"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}

#[test]
fn bs_element_and_minor() {
    let out = orbital(&["bs", "element", "--n", "5", "--subset", "1,4"]);
    assert!(out.status.success());
    let f: orbital_core::sympoly::Poly = stdout(&out).trim().parse().unwrap();
    let expected: orbital_core::sympoly::Poly =
        "x[3,1]*x[4,2]*x[5,3] + x[3,2]*x[4,3]*x[5,1] - x[3,1]*x[4,3]*x[5,2] - x[3,2]*x[4,1]*x[5,3]"
            .parse()
            .unwrap();
    assert_eq!(f, expected);
    let minor: orbital_core::sympoly::Poly =
        stdout(&orbital(&["bs", "minor", "--n", "5", "--subset", "1,4"]))
            .trim()
            .parse()
            .unwrap();
    assert_eq!(minor.degree_in(orbital_core::sympoly::Var::Param), 1);
    let json: Value = serde_json::from_str(&stdout(&orbital(&[
        "bs", "element", "--n", "5", "--subset", "1,4", "--format", "json",
    ])))
    .unwrap();
    assert_eq!(json["terms"], 4);
    assert_eq!(json["l_index"], 3);
}

#[test]
fn bs_rejects_unequal_end_chains() {
    let out = orbital(&["bs", "element", "--n", "4", "--subset", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("first and last chains differ"));
}

#[test]
fn bs_verify_passes_and_explains_skips() {
    let out = orbital(&["bs", "verify", "--n", "5", "--subset", "1,4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
    assert!(text.contains("witness") && text.contains("prop42"));
    let out = orbital(&["bs", "verify", "--n", "6", "--subset", "1,3,5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("SKIP general_generator,witness"));
}

#[test]
fn suite_json_and_text_agree() {
    let text = orbital(&["suite", "--max-n", "5"]);
    let json = orbital(&["suite", "--max-n", "5", "--format", "json"]);
    assert!(text.status.success() && json.status.success());
    let text_lines: Vec<String> = stdout(&text).lines().map(str::to_string).collect();
    let json_lines: Vec<Value> = stdout(&json)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(text_lines.len(), json_lines.len());
    for (t, j) in text_lines.iter().zip(&json_lines) {
        if let Some(check) = j["check"].as_str() {
            assert_eq!(t.starts_with("PASS"), j["pass"].as_bool().unwrap());
            assert!(t.contains(check));
        }
    }
    let summary = &json_lines.last().unwrap()["summary"];
    assert_eq!(summary["failures"], 0);
    assert!(summary["skipped"].as_u64().unwrap() > 0);
}

#[test]
fn suite_filters_and_small_ranks() {
    let out = orbital(&[
        "suite",
        "--max-n",
        "7",
        "--checks",
        "vanishing,poisson",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    for line in stdout(&out).lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        if let Some(check) = v["check"].as_str() {
            assert!(check == "vanishing" || check == "poisson");
        }
    }
    let out = orbital(&["suite", "--max-n", "2"]);
    assert!(out.status.success());
    assert!(
        stdout(&out).ends_with("summary: instances=1 generic=1 skipped=1 reports=14 failures=0\n")
    );
    assert_eq!(orbital(&["suite", "--max-n", "1"]).status.code(), Some(2));
    assert_eq!(
        orbital(&["suite", "--max-n", "4", "--checks", "bogus"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn suite_is_deterministic_under_thread_caps() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_orbital"))
            .args(["suite", "--max-n", "6", "--seed", "9", "--format", "json"])
            .env("ORBITAL_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run("1"), run("4"));
    let bad = Command::new(env!("CARGO_BIN_EXE_orbital"))
        .args(["suite", "--max-n", "3"])
        .env("ORBITAL_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn helper_commands() {
    let out = stdout(&orbital(&[
        "arsn", "--r", "1", "--s", "2", "--n", "6", "--format", "json",
    ]));
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["det"], "+t^2");
    assert_eq!(v["matches_closed_form"], true);
    let q = stdout(&orbital(&["quantize", "--n", "5", "--subset", "1,4"]));
    assert!(
        q.contains("mu+rho: (2,1,1,1,0)") && q.contains("S°: {(2,a[1,5])}"),
        "{q}"
    );
    let q = stdout(&orbital(&["quantize", "--n", "6", "--subset", "1,3,5"]));
    assert!(q.contains("b-system infeasible"));
    let c: Value = serde_json::from_str(
        stdout(&orbital(&[
            "chains",
            "--n",
            "10",
            "--subset",
            "1,4,5,6,9",
            "--format",
            "json",
        ]))
        .trim(),
    )
    .unwrap();
    assert_eq!(c["lengths"], serde_json::json!([2, 1, 4, 1, 2]));
    assert_eq!(c["codim1_descendants"].as_array().unwrap().len(), 2);
}
