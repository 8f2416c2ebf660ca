//! End-to-end tests of the `softgames` binary: goldens for the worked
//! examples, the mapping pipeline, exit-code contracts, and byte-identical
//! reruns.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn softgames(args: &[&str]) -> Run {
    softgames_with_stdin(args, None)
}

fn softgames_with_stdin(args: &[&str], stdin: Option<&str>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_softgames"));
    cmd.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.stdin(if stdin.is_some() { Stdio::piped() } else { Stdio::null() });
    let mut child = cmd.spawn().expect("binary spawns");
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .expect("stdin piped")
            .write_all(text.as_bytes())
            .expect("stdin accepts input");
    }
    let out = child.wait_with_output().expect("binary runs to completion");
    Run {
        code: out.status.code().expect("no signal"),
        stdout: String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        stderr: String::from_utf8(out.stderr).expect("stderr is UTF-8"),
    }
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("softgames-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("scratch dir");
    dir
}

#[test]
fn solve_prints_optima_with_preferences() {
    let run = softgames(&["solve", &data("fuzzy_chain.json")]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert_eq!(run.stdout, "bbb : 0.5\n");

    let run = softgames(&["solve", &data("fuzzy_plateau.json")]);
    assert_eq!(run.stdout, "aab : 0.2\nabb : 0.2\nbab : 0.2\nbbb : 0.2\n");

    let run = softgames(&["solve", &data("weighted_single.json")]);
    assert_eq!(run.stdout, "bb : 1\n");

    let run = softgames(&["solve", &data("weighted_unary_pair.json")]);
    assert_eq!(run.stdout, "aa : 6\n");

    let run = softgames(&["solve", &data("csp_sat_chain.json")]);
    assert_eq!(run.stdout, "aaa : true\n");
}

#[test]
fn solve_reads_stdin_when_given_a_dash() {
    let text = std::fs::read_to_string(data("fuzzy_chain.json")).unwrap();
    let run = softgames_with_stdin(&["solve", "-"], Some(&text));
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert_eq!(run.stdout, "bbb : 0.5\n");
}

#[test]
fn local_mapping_pipes_into_equilibrium_enumeration() {
    let mapped = softgames(&["map", "local", &data("fuzzy_chain.json")]);
    assert_eq!(mapped.code, 0, "stderr: {}", mapped.stderr);

    let nash = softgames_with_stdin(&["nash", "-"], Some(&mapped.stdout));
    assert_eq!(nash.code, 0, "stderr: {}", nash.stderr);
    assert_eq!(nash.stdout, "aaa : [0.4, 0.4, 0.4]\nbbb : [0.5, 0.5, 0.5]\n");

    // The emitted game is already in canonical form: reading it back and
    // re-serializing reproduces the bytes (modulo the trailing newline).
    let game = softgames::game_from_json(&mapped.stdout).expect("mapped output parses");
    assert_eq!(softgames::game_to_json(&game) + "\n", mapped.stdout);
}

#[test]
fn global_mapping_pays_every_player_the_combined_preference() {
    let mapped = softgames(&["map", "global", &data("fuzzy_chain.json")]);
    assert_eq!(mapped.code, 0);
    let pareto = softgames_with_stdin(&["pareto", "-"], Some(&mapped.stdout));
    assert_eq!(pareto.stdout, "bbb : [0.5, 0.5, 0.5]\n");
}

#[test]
fn prisoners_dilemma_verbs_match_the_worked_example() {
    let pd = data("prisoners_dilemma.json");
    assert_eq!(softgames(&["nash", &pd]).stdout, "nn : [1, 1]\n");
    assert_eq!(
        softgames(&["pareto", &pd]).stdout,
        "cc : [3, 3]\ncn : [0, 4]\nnc : [4, 0]\n"
    );
    assert_eq!(softgames(&["pareto-nash", &pd]).stdout, "nn : [1, 1]\n");
    let intersect = softgames(&["nash-pareto-intersect", &pd]);
    assert_eq!(intersect.code, 0);
    assert_eq!(intersect.stdout, "");
}

#[test]
fn inverse_merge_harden_pipeline_reproduces_the_efficient_equilibrium() {
    let dir = scratch_dir("pipeline");
    let inv = dir.join("inverse.json").to_string_lossy().into_owned();
    let hard = dir.join("hardened.json").to_string_lossy().into_owned();
    let merged = dir.join("merged.json").to_string_lossy().into_owned();
    let pd = data("prisoners_dilemma.json");

    let run = softgames(&["map", "inverse", "--f", "complement", "--ceiling", "10", &pd, "-o", &inv]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert_eq!(run.stdout, "");

    // The translated problem keeps all efficient profiles optimal, with the
    // equilibrium excluded.
    let solve_inv = softgames(&["solve", &inv]);
    assert_eq!(solve_inv.stdout, "cc : [7, 7]\ncn : [10, 6]\nnc : [6, 10]\n");

    let run = softgames(&["map", "harden", &pd, "-o", &hard]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);

    let run = softgames(&["map", "merge", &inv, &hard, "-o", &merged]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);

    let solved = softgames(&["solve", &merged]);
    assert_eq!(solved.code, 0, "stderr: {}", solved.stderr);
    assert_eq!(solved.stdout, "nn : [9, 9]\n");
}

#[test]
fn inverse_defaults_complement_the_payoff_carrier() {
    // Without flags the Prisoner's Dilemma complements against its greatest
    // finite payoff (4), so nn maps to costs [3, 3].
    let mapped = softgames(&["map", "inverse", &data("prisoners_dilemma.json")]);
    assert_eq!(mapped.code, 0);
    let problem = softgames::scsp_from_json(&mapped.stdout).expect("mapped output parses");
    let nn = softgames::JointAssignment::new([("p1", "n"), ("p2", "n")]);
    assert_eq!(
        problem.preference(&nn).unwrap(),
        softgames::PrefValue::tuple([softgames::PrefValue::cost(3), softgames::PrefValue::cost(3)])
    );
}

#[test]
fn exit_codes_separate_parse_usage_and_domain_errors() {
    // Malformed JSON: parse error, exit 2.
    let run = softgames_with_stdin(&["solve", "-"], Some("{ not json"));
    assert_eq!(run.code, 2);
    assert!(run.stderr.starts_with("ParseError:"), "stderr: {}", run.stderr);

    // Structurally valid file that violates a model rule: domain error named
    // after the module's error, exit 1.
    let lonely = r#"{
      "carrier": { "kind": "fuzzy" },
      "players": [ { "name": "p1", "strategies": ["a", "b"] } ],
      "neigh": { "p1": [] },
      "payoffs": { "p1": { "a": "0.5", "b": "0.5" } }
    }"#;
    let run = softgames_with_stdin(&["nash", "-"], Some(lonely));
    assert_eq!(run.code, 1);
    assert!(run.stderr.starts_with("TooFewPlayers"), "stderr: {}", run.stderr);

    // Missing file: exit 1.
    let run = softgames(&["solve", "/nonexistent/problem.json"]);
    assert_eq!(run.code, 1);

    // Flag misuse is rejected before any input is read: exit 2.
    let run = softgames(&["map", "local", "--ceiling", "5", &data("fuzzy_chain.json")]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("UsageError"), "stderr: {}", run.stderr);
    let run = softgames(&["map", "merge", &data("fuzzy_chain.json")]);
    assert_eq!(run.code, 2);

    // Unknown verbs and enum values are usage errors from the parser: exit 2.
    assert_eq!(softgames(&["solve"]).code, 2);
    assert_eq!(softgames(&["map", "sideways", &data("fuzzy_chain.json")]).code, 2);
    assert_eq!(softgames(&["verify", "--family", "games"]).code, 2);
}

#[test]
fn complement_rejects_a_ceiling_below_the_payoffs() {
    let run = softgames(&[
        "map",
        "inverse",
        "--f",
        "complement",
        "--ceiling",
        "3",
        &data("prisoners_dilemma.json"),
    ]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.starts_with("CeilingTooSmall"), "stderr: {}", run.stderr);
}

#[test]
fn verify_reports_clean_families_and_exits_zero() {
    let run = softgames(&["verify", "--family", "fuzzy", "--count", "40", "--seed", "5"]);
    assert_eq!(run.code, 0, "stdout: {}", run.stdout);
    assert!(run.stdout.starts_with("generator: chacha8-seed-plus-index-v1\n"));
    assert!(run.stdout.contains("family: fuzzy\n"));
    assert!(run.stdout.contains("property optimal-in-global-nash: checked 40, passed 40"));
    assert!(run.stdout.contains("failures: 0\n"));

    let json_run =
        softgames(&["verify", "--family", "fuzzy", "--count", "40", "--seed", "5", "--json"]);
    assert_eq!(json_run.code, 0);
    let report: serde_json::Value = serde_json::from_str(&json_run.stdout).expect("JSON report");
    assert_eq!(report["generator"], "chacha8-seed-plus-index-v1");
    assert_eq!(report["count"], 40);
}

#[test]
fn verify_surfaces_genuine_violations_and_exits_one() {
    // The local Pareto containment is genuinely false for weighted problems;
    // the report must say so and the exit code must reflect it.
    let run = softgames(&["verify", "--family", "weighted", "--count", "60", "--seed", "42"]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("property optimal-in-local-nash"), "stdout: {}", run.stdout);
    assert!(run.stdout.contains("witness:"), "stdout: {}", run.stdout);
    assert!(!run.stdout.contains("failures: 0\n"));
}

#[test]
fn check_semiring_prints_axiom_and_monotonicity_verdicts() {
    let run = softgames(&["check-semiring", "weighted"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("violations: 0"));
    assert!(run.stdout.contains("strictly-monotonic: true"));

    let run = softgames(&["check-semiring", "fuzzy"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("violations: 0"));
    assert!(run.stdout.contains("strictly-monotonic: false"));
    assert!(run.stdout.contains("counterexample:"));

    let run = softgames(&["check-semiring", "classical"]);
    assert!(run.stdout.contains("strictly-monotonic: false"));

    let run = softgames(&["check-semiring", "product:fuzzy,weighted"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("violations: 0"));
    assert!(run.stdout.contains("strictly-monotonic: n/a"));

    let run = softgames(&["check-semiring", "fuzzy", "--json"]);
    let verdict: serde_json::Value = serde_json::from_str(&run.stdout).expect("JSON verdict");
    assert_eq!(verdict["strictly_monotonic"], false);
    assert_eq!(verdict["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn reruns_are_byte_identical() {
    for args in [
        vec!["solve", &data("fuzzy_chain.json")] as Vec<&str>,
        vec!["map", "local", &data("fuzzy_chain.json")],
        vec!["map", "inverse", &data("prisoners_dilemma.json")],
        vec!["verify", "--family", "game-weighted", "--count", "15", "--seed", "9"],
        vec!["verify", "--family", "weighted", "--count", "30", "--seed", "42", "--json"],
        vec!["check-semiring", "weighted"],
    ] {
        let first = softgames(&args);
        let second = softgames(&args);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
        assert_eq!(first.code, second.code, "args: {args:?}");
    }
}
