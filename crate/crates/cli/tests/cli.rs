//! End-to-end checks of the binary: worked examples, exit codes, output
//! formats, and the tolerance plumbing.

mod common;

use common::{f, json, parse_csv, tachyon, tachyon_env};
use tachyon_core::kinematics::{boost_superluminal, GeneralBoost, SignChoice, SpacetimeEvent};

const EVENT_1234: &str = r#"{"t":1,"x":2,"y":3,"z":4}"#;

#[test]
fn infinite_relabeling_matches_the_worked_example() {
    let run = tachyon(&["transform", "--infinite"], Some(EVENT_1234));
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    let body = json(&run);
    assert_eq!(f(&body["output"]["chi"]), 1.0);
    assert_eq!(body["output"]["tau"], serde_json::json!([2.0, 3.0, 4.0]));
    assert_eq!(f(&body["interval_before"]), f(&body["interval_after"]));
}

#[test]
fn zero_boost_echoes_the_event() {
    let run = tachyon(&["transform", "--V", "0"], Some(EVENT_1234));
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    let body = json(&run);
    assert_eq!(body["input"], body["output"]);
}

#[test]
// The flag value is a fixed decimal from the command-line contract, not a
// stand-in for sqrt(2).
#[allow(clippy::approx_constant)]
fn superluminal_boost_agrees_with_the_library() {
    let run = tachyon(&["transform", "--W", "1.41421356c"], Some(r#"{"t":0,"x":1,"y":0,"z":0}"#));
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    let body = json(&run);

    let boost = GeneralBoost::superluminal(1.41421356, 1.0, SignChoice::Minus).unwrap();
    let expect = boost_superluminal(&SpacetimeEvent::on_axis(0.0, 1.0), &boost).unwrap();
    assert_eq!(f(&body["output"]["chi"]), expect.chi);
    assert_eq!(f(&body["output"]["tau"][0]), expect.tau.0[0]);
    let before = f(&body["interval_before"]);
    let after = f(&body["interval_after"]);
    assert!((before - after).abs() < 1e-10, "interval drift: {before} vs {after}");
}

#[test]
fn speed_suffix_scales_with_the_configured_c() {
    let run = tachyon(&["--c", "2", "transform", "--V", "0.6c"], Some(EVENT_1234));
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    let body = json(&run);
    assert_eq!(f(&body["V"]), 1.2);
    assert_eq!(f(&body["K"]), 0.25);
}

#[test]
fn transform_rejects_ambiguous_or_missing_modes() {
    let both = tachyon(&["transform", "--V", "0.5", "--W", "2c"], Some(EVENT_1234));
    assert_eq!(both.status, 1);
    let none = tachyon(&["transform"], Some(EVENT_1234));
    assert_eq!(none.status, 1);
    let k_with_infinite = tachyon(&["transform", "--infinite", "--K", "0.5"], Some(EVENT_1234));
    assert_eq!(k_with_infinite.status, 1);
}

#[test]
fn malformed_input_exits_one() {
    let garbage = tachyon(&["transform", "--V", "0"], Some("not json"));
    assert_eq!(garbage.status, 1);
    let bad_flag = tachyon(&["transform", "--bogus"], Some(EVENT_1234));
    assert_eq!(bad_flag.status, 1);
    let bad_speed = tachyon(&["transform", "--V", "fastc"], Some(EVENT_1234));
    assert_eq!(bad_speed.status, 1);
}

#[test]
fn regime_violations_exit_two() {
    let singular = tachyon(&["transform", "--V", "1c"], Some(EVENT_1234));
    assert_eq!(singular.status, 2, "riding the light front: {}", singular.stderr);
    let too_fast = tachyon(&["transform", "--V", "1.2c"], Some(EVENT_1234));
    assert_eq!(too_fast.status, 2);
    let too_slow = tachyon(&["transform", "--W", "0.5c"], Some(EVENT_1234));
    assert_eq!(too_slow.status, 2);
}

#[test]
fn tachyon_constraint_violation_exits_two() {
    let run = tachyon(&["momentum"], Some(r#"{"mu":1,"w":[1.2,0,0],"s":[0,1,0]}"#));
    assert_eq!(run.status, 2, "stderr: {}", run.stderr);
}

#[test]
fn momentum_worked_example_with_boost() {
    let state = r#"{"mu":1,"w":[2,0,0],"s":[1,0,0]}"#;
    let run = tachyon(
        &["momentum", "--boost", "0.9c,0,0", "--infinite-limit"],
        Some(state),
    );
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    let body = json(&run);

    let d = 3.0_f64.sqrt();
    assert!((f(&body["energy"]) - 1.0 / d).abs() < 1e-12);
    assert!((f(&body["momentum"][0]) - 2.0 / d).abs() < 1e-12);
    assert_eq!(body["helicity"], serde_json::json!(1));

    // w . V = c^2 pins the infinite-velocity frame; here V = c/2 along x.
    assert!((f(&body["infinite_velocity_frame"]["V"][0]) - 0.5).abs() < 1e-12);
    assert!((f(&body["infinite_velocity_frame"]["w_dot_V"]) - 1.0).abs() < 1e-10);

    // w . v = 1.8 c^2 > c^2: the boosted observer sees the anti-tachyon.
    assert_eq!(body["boost"]["anti_tachyon"], serde_json::json!(true));
    assert_eq!(body["boost"]["flips_helicity"], serde_json::json!(true));
    assert_eq!(body["boost"]["helicity"], serde_json::json!(-1));

    assert_eq!(f(&body["infinite_limit"]["energy"]), 0.0);
    assert_eq!(f(&body["infinite_limit"]["momentum_magnitude"]), 1.0);
}

#[test]
fn subluminal_boost_flag_must_stay_below_c() {
    let state = r#"{"mu":1,"w":[2,0,0],"s":[1,0,0]}"#;
    let run = tachyon(&["momentum", "--boost", "1.5c,0,0"], Some(state));
    assert_eq!(run.status, 2);
}

#[test]
fn amplitude_of_two_equal_paths_is_certain() {
    let ensemble = r#"{
        "source": {"t":0,"x":0,"y":0,"z":0},
        "sink": {"t":1,"x":0,"y":0,"z":0},
        "paths": [
            {"segments":[{"start":{"t":0,"x":0,"y":0,"z":0},
                          "end":{"t":1,"x":0,"y":0,"z":0},
                          "energy":1.0,"momentum":[0,0,0]}]},
            {"segments":[{"start":{"t":0,"x":0,"y":0,"z":0},
                          "end":{"t":1,"x":0,"y":0,"z":0},
                          "energy":1.0,"momentum":[0,0,0]}]}
        ]
    }"#;
    let run = tachyon(&["amplitude"], Some(ensemble));
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    let body = json(&run);
    assert_eq!(body["n"], serde_json::json!(2));
    assert!((f(&body["p"]) - 1.0).abs() < 1e-15);
}

#[test]
fn broken_path_chain_exits_one() {
    let ensemble = r#"{
        "source": {"t":0,"x":0,"y":0,"z":0},
        "sink": {"t":1,"x":0,"y":0,"z":0},
        "paths": [
            {"segments":[{"start":{"t":0,"x":0,"y":0,"z":0},
                          "end":{"t":1,"x":5,"y":0,"z":0},
                          "energy":1.0,"momentum":[0,0,0]}]}
        ]
    }"#;
    let run = tachyon(&["amplitude"], Some(ensemble));
    assert_eq!(run.status, 1);
}

#[test]
fn lattice_failures_exit_three() {
    let capped = tachyon(
        &[
            "amplitude",
            "--lattice",
            r#"{"a":{"t":0,"x":0,"y":0,"z":0},"b":{"t":10,"x":0,"y":0,"z":0},
                "t_steps":10,"dx":0.5,"mass":1,"cap":5}"#,
        ],
        None,
    );
    assert_eq!(capped.status, 3, "stderr: {}", capped.stderr);

    let unreachable = tachyon(
        &[
            "amplitude",
            "--lattice",
            r#"{"a":{"t":0,"x":0,"y":0,"z":0},"b":{"t":10,"x":0.3,"y":0,"z":0},
                "t_steps":10,"dx":0.5,"mass":1}"#,
        ],
        None,
    );
    assert_eq!(unreachable.status, 3, "stderr: {}", unreachable.stderr);
}

#[test]
fn lattice_sum_reports_count_and_p() {
    let run = tachyon(
        &[
            "amplitude",
            "--lattice",
            r#"{"a":{"t":0,"x":0,"y":0,"z":0},"b":{"t":4,"x":0,"y":0,"z":0},
                "t_steps":4,"dx":0.5,"mass":1}"#,
        ],
        None,
    );
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    let body = json(&run);
    assert_eq!(body["n"], serde_json::json!(6));
    let re = f(&body["amplitude"]["re"]);
    let im = f(&body["amplitude"]["im"]);
    assert!((f(&body["p"]) - (re * re + im * im)).abs() < 1e-15);
}

#[test]
fn scan_covers_the_fringe_from_certainty_to_extinction() {
    let run = tachyon(&["scan", "--points", "5"], None);
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    let rows = parse_csv(&run.stdout);
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0].0, 0.0);
    assert!((rows[0].1 - 1.0).abs() < 1e-12, "P(0) = {}", rows[0].1);
    assert!((rows[4].0 - std::f64::consts::PI).abs() < 1e-15);
    assert!(rows[4].1 < 1e-12, "P(pi) = {}", rows[4].1);
}

#[test]
fn scan_writes_the_same_csv_to_a_file() {
    let on_stdout = tachyon(&["scan", "--points", "7"], None);
    assert_eq!(on_stdout.status, 0);

    let path = std::env::temp_dir().join(format!("tachyon-scan-{}.csv", std::process::id()));
    let to_file = tachyon(&["scan", "--points", "7", "--out", path.to_str().unwrap()], None);
    assert_eq!(to_file.status, 0);
    assert!(to_file.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written, on_stdout.stdout);
}

#[test]
fn scan_rejects_an_unreachable_phase_target() {
    // mass 1, T 40 reaches dphi = 40 at most; 50 is out of range.
    let run = tachyon(&["scan", "--points", "3", "--max-phase", "50"], None);
    assert_eq!(run.status, 2, "stderr: {}", run.stderr);
}

#[test]
fn tolerance_comes_from_flag_then_environment() {
    let bad_env = tachyon_env(
        &["verify", "--suite", "axioms", "--trials", "1"],
        None,
        &[("TACHYON_TOL", "bogus")],
    );
    assert_eq!(bad_env.status, 1);

    let from_env = tachyon_env(
        &["verify", "--suite", "axioms", "--trials", "2"],
        None,
        &[("TACHYON_TOL", "1e-9")],
    );
    assert_eq!(from_env.status, 0, "stderr: {}", from_env.stderr);
    assert_eq!(f(&json(&from_env)["tol"]), 1e-9);

    let flag_wins = tachyon_env(
        &["verify", "--suite", "axioms", "--trials", "2", "--tol", "1e-8"],
        None,
        &[("TACHYON_TOL", "1e-9")],
    );
    assert_eq!(flag_wins.status, 0);
    assert_eq!(f(&json(&flag_wins)["tol"]), 1e-8);
}

#[test]
fn verify_with_zero_trials_passes_with_an_empty_report() {
    let run = tachyon(&["verify", "--trials", "0"], None);
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    let body = json(&run);
    assert_eq!(body["passed"], serde_json::json!(true));
    for suite in body["suites"].as_array().unwrap() {
        assert!(suite["properties"].as_array().unwrap().is_empty());
    }
}

#[test]
fn expecting_failure_from_a_healthy_suite_exits_four() {
    let run = tachyon(
        &["verify", "--suite", "axioms", "--trials", "5", "--expect-fail"],
        None,
    );
    assert_eq!(run.status, 4);
    assert!(run.stderr.contains("expected a failure"), "stderr: {}", run.stderr);
}

#[test]
fn unknown_suite_exits_one() {
    let run = tachyon(&["verify", "--suite", "bogus"], None);
    assert_eq!(run.status, 1);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(tachyon(&["--help"], None).status, 0);
    assert_eq!(tachyon(&["--version"], None).status, 0);
    for sub in ["transform", "momentum", "amplitude", "scan", "verify"] {
        let run = tachyon(&[sub, "--help"], None);
        assert_eq!(run.status, 0, "{sub} --help");
    }
}
