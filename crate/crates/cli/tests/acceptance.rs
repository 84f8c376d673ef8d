//! The acceptance gate. Ten end-to-end criteria, one test each, printing a
//! pass line when the criterion holds; a failing criterion fails its test.
//! Tolerances are pinned here, not inherited from library defaults.

mod common;

use std::time::Instant;

use common::{f, json, parse_csv, tachyon};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tachyon_core::amplitudes::{lattice_path_sum, LatticeParams};
use tachyon_core::fourmomentum::{
    apply_discrete_symmetry, conservation_residual, infinite_velocity_frame, solve_unique_decay,
    unique_decay_process, SymmetryOp, SymmetryRuleSet, TachyonState,
};
use tachyon_core::kinematics::{
    boost_subluminal, boost_superluminal, interval, interval_superluminal, k_form,
    superluminal_length, superluminal_time_flow, GeneralBoost, SignChoice, SpacetimeEvent,
};
use tachyon_core::verify::{run_axioms, run_derivation, run_fourvectors, SuiteReport, VerifyConfig};
use tachyon_core::{Units, Vec3};

const INTERVAL_TRIALS: u32 = 10_000;
const INTERVAL_TOL: f64 = 1e-10;
const INTERVAL_BUDGET_SECS: f64 = 5.0;
const ROOT_TWO_TOL: f64 = 1e-12;
const COVARIANCE_TRIALS: u64 = 1_000;
const COVARIANCE_TOL: f64 = 1e-9;
const FRAME_TRIALS: u32 = 1_000;
const FRAME_TOL: f64 = 1e-10;
const WORKED_CASE_TOL: f64 = 1e-12;
const DECAY_TOL: f64 = 1e-10;
const PARITY_DEFECT_FLOOR: f64 = 0.1;
const AXIOM_TRIALS: u64 = 100;
const AXIOM_TOL: f64 = 1e-10;
const FRINGE_POINTS: usize = 1_000;
const FRINGE_TOL: f64 = 1e-10;
const ENDPOINT_TOL: f64 = 1e-12;
const CAUCHY_TOL: f64 = 1e-12;
const RECONSTRUCTION_TOL: f64 = 1e-10;
const LATTICE_PATH_LIMIT: u128 = 10_000;
const LATTICE_BUDGET_SECS: f64 = 10.0;

fn criterion(n: u32, detail: &str) {
    println!("criterion {n:02}: PASS - {detail}");
}

fn failing(report: &SuiteReport) -> Vec<&str> {
    report.properties.iter().filter(|p| !p.passed()).map(|p| p.check.as_str()).collect()
}

fn random_event(rng: &mut ChaCha8Rng) -> SpacetimeEvent {
    SpacetimeEvent::new(
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
    )
}

#[test]
fn c01_interval_preservation_across_regimes_and_signs() {
    let start = Instant::now();
    let c = 1.0;
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut worst: f64 = 0.0;

    for i in 0..INTERVAL_TRIALS / 2 {
        let k: f64 = match i % 3 {
            0 => 0.0,
            1 => rng.gen_range(0.05..1.5),
            _ => -rng.gen_range(0.05..1.5),
        };
        let cap = if k > 0.0 { 0.95 / k.sqrt() } else { 3.0 };
        let v = rng.gen_range(-cap..cap);
        let boost = GeneralBoost::subluminal(k, v).unwrap();
        let e = random_event(&mut rng);
        let out = boost_subluminal(&e, &boost).unwrap();
        let before = k_form(&e, k);
        let after = k_form(&out, k);
        worst = worst.max((after - before).abs() / before.abs().max(1.0));
    }

    for i in 0..INTERVAL_TRIALS / 2 {
        let sign = if i % 2 == 0 { SignChoice::Minus } else { SignChoice::Plus };
        let orientation = if i % 4 < 2 { 1.0 } else { -1.0 };
        let w = orientation * rng.gen_range(1.05..3.0) * c;
        let boost = GeneralBoost::superluminal(w, c, sign).unwrap();
        let e1 = random_event(&mut rng);
        let e2 = random_event(&mut rng);
        let s1 = boost_superluminal(&e1, &boost).unwrap();
        let s2 = boost_superluminal(&e2, &boost).unwrap();
        let before = interval(&e1, &e2, c);
        let after = interval_superluminal(&s1, &s2, c);
        worst = worst.max((after - before).abs() / before.abs().max(1.0));
    }

    let elapsed = start.elapsed().as_secs_f64();
    assert!(worst < INTERVAL_TOL, "worst interval residual {worst:.3e}");
    assert!(elapsed < INTERVAL_BUDGET_SECS, "took {elapsed:.2} s");
    criterion(
        1,
        &format!(
            "{INTERVAL_TRIALS} interval preservations across both regimes and signs, \
             worst residual {worst:.2e}, {elapsed:.2} s"
        ),
    );
}

#[test]
fn c02_root_two_boost_has_unit_length_and_flow_magnitudes() {
    let c = 1.0;
    let w = 2.0_f64.sqrt() * c;
    for sign in [SignChoice::Minus, SignChoice::Plus] {
        let length = superluminal_length(1.0, w, c, sign).unwrap();
        let flow = superluminal_time_flow(1.0, w, c, sign).unwrap();
        assert!(
            (length.abs() - 1.0).abs() < ROOT_TWO_TOL,
            "length magnitude {} under {sign:?}",
            length.abs()
        );
        assert!(
            (flow.abs() - 1.0).abs() < ROOT_TWO_TOL,
            "time-flow magnitude {} under {sign:?}",
            flow.abs()
        );
    }
    criterion(2, "at w = sqrt(2) c lengths and time flows map with magnitude 1 (tol 1e-12)");
}

#[test]
fn c03_four_vector_families_transform_covariantly() {
    let cfg = VerifyConfig {
        units: Units::default(),
        tol: COVARIANCE_TOL,
        trials: COVARIANCE_TRIALS,
        seed: 303,
        a_exp: 2.0,
    };
    let report = run_fourvectors(&cfg);
    for name in [
        "covariance_timelike",
        "covariance_spacelike",
        "covariance_tachyon",
        "covariance_dual",
        "norm_preservation",
        "helicity_sign_rule",
        "wigner_orthogonality",
    ] {
        assert!(report.properties.iter().any(|p| p.check == name), "property {name} missing");
    }
    assert!(report.passed, "failing: {:?}", failing(&report));
    criterion(
        3,
        &format!(
            "all four families stay covariant over {COVARIANCE_TRIALS} random boosts \
             (tol {COVARIANCE_TOL:.0e}), helicity flips exactly when w.V > c^2"
        ),
    );
}

fn random_tachyon(rng: &mut ChaCha8Rng, c: f64) -> TachyonState {
    let dir = loop {
        let v = Vec3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        if v.norm() > 0.1 {
            break v.normalized().unwrap();
        }
    };
    let speed = rng.gen_range(1.05..2.5) * c;
    let w = dir * speed;
    // Tilt s away from w, but keep (s.w)^2 > w^2 - c^2 with a wide margin.
    let seed_axis =
        if dir.0[0].abs() < 0.9 { Vec3::new(1.0, 0.0, 0.0) } else { Vec3::new(0.0, 1.0, 0.0) };
    let perp = dir.cross(seed_axis).normalized().unwrap();
    let eps = rng.gen_range(0.0..0.4) * c / (speed * speed - c * c).sqrt();
    let s = (dir + perp * eps).normalized().unwrap();
    let mu = rng.gen_range(0.1..3.0);
    TachyonState::new(mu, w, s, false, c).unwrap()
}

#[test]
fn c04_infinite_velocity_frame_is_subluminal_and_orthogonal_to_w() {
    let c = 1.0;
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut worst: f64 = 0.0;
    for _ in 0..FRAME_TRIALS {
        let st = random_tachyon(&mut rng, c);
        let v = infinite_velocity_frame(&st, c).unwrap();
        assert!(v.norm() < c, "frame speed {} at w = {:?}", v.norm(), st.w);
        worst = worst.max((st.w.dot(v) - c * c).abs() / (c * c));
    }
    assert!(worst < FRAME_TOL, "worst |w.V - c^2| residual {worst:.3e}");

    // Worked case: w = 2c x, s = x gives V = c/2 x.
    let st = TachyonState::new(1.0, Vec3::new(2.0, 0.0, 0.0), Vec3::new(1.0, 0.0, 0.0), false, c)
        .unwrap();
    let v = infinite_velocity_frame(&st, c).unwrap();
    assert!((v.0[0] - 0.5).abs() < WORKED_CASE_TOL, "V_x = {}", v.0[0]);
    assert!(v.0[1].abs() < WORKED_CASE_TOL && v.0[2].abs() < WORKED_CASE_TOL);
    criterion(
        4,
        &format!(
            "w.V = c^2 within {worst:.2e} over {FRAME_TRIALS} states, |V| < c, \
             and w = 2c gives V = c/2 (tol 1e-12)"
        ),
    );
}

#[test]
fn c05_unique_decay_balances_but_its_parity_image_does_not() {
    let c = 1.0;
    let decay = solve_unique_decay(1.0, 1.0, c).unwrap();
    let gamma = 1.0 / (1.0 - decay.v * decay.v).sqrt();
    let residual = (2.0 * decay.v * gamma - 1.0).abs();
    assert!(residual < DECAY_TOL, "momentum balance residual {residual:.3e}");
    assert_eq!(decay.tachyon_momentum, 1.0, "|p| must be exactly mu c");
    let closed_form = 1.0 / 5.0_f64.sqrt();
    assert!((decay.v - closed_form).abs() < 1e-11, "v = {} vs closed form", decay.v);

    let process = unique_decay_process(1.0, 1.0, Vec3::new(1.0, 0.0, 0.0), c).unwrap();
    let balanced = conservation_residual(&process, c).unwrap();
    assert!(balanced < DECAY_TOL, "decay imbalance {balanced:.3e}");

    let rules = SymmetryRuleSet::helicity_like();
    let mirrored = apply_discrete_symmetry(&process, SymmetryOp::P, &rules);
    let defect = conservation_residual(&mirrored, c).unwrap();
    assert!(defect > PARITY_DEFECT_FLOOR, "parity image defect only {defect:.3e}");
    criterion(
        5,
        &format!(
            "m = mu = 1 decay balances to {residual:.2e} with |p| exactly mu c; \
             the parity image misses conservation by {defect:.2}"
        ),
    );
}

#[test]
fn c06_axioms_hold_and_normalization_pins_the_exponent() {
    let cfg = VerifyConfig {
        units: Units::default(),
        tol: AXIOM_TOL,
        trials: AXIOM_TRIALS,
        seed: 606,
        a_exp: 2.0,
    };
    let report = run_axioms(&cfg);
    assert!(report.passed, "failing at the defaults: {:?}", failing(&report));

    let off = VerifyConfig { a_exp: 1.5, ..cfg };
    let off_report = run_axioms(&off);
    assert_eq!(
        failing(&off_report),
        vec!["identical_paths_normalization"],
        "exactly the normalization property must break at A = 1.5"
    );

    let run = tachyon(
        &["verify", "--suite", "axioms", "--A-exp", "1.5", "--expect-fail", "--trials", "100"],
        None,
    );
    assert_eq!(run.status, 4, "stderr: {}", run.stderr);
    let body = json(&run);
    let witnesses = body["suites"][0]["properties"]
        .as_array()
        .unwrap()
        .iter()
        .find(|p| p["check"] == "identical_paths_normalization")
        .expect("normalization property in the report")["witnesses"]
        .as_array()
        .unwrap()
        .len();
    assert!(witnesses > 0, "expected recorded witnesses");
    criterion(
        6,
        &format!(
            "axiom residuals < {AXIOM_TOL:.0e} over {AXIOM_TRIALS} trials; A = 1.5 fails \
             normalization alone and the CLI exits 4 with {witnesses} witnesses"
        ),
    );
}

#[test]
fn c07_thousand_point_fringe_matches_the_closed_form() {
    let run = tachyon(&["scan", "--points", "1000"], None);
    assert_eq!(run.status, 0, "stderr: {}", run.stderr);
    let rows = parse_csv(&run.stdout);
    assert_eq!(rows.len(), FRINGE_POINTS);
    let mut worst: f64 = 0.0;
    for &(dphi, p) in &rows {
        worst = worst.max((p - 0.5 * (1.0 + dphi.cos())).abs());
    }
    assert!(worst < FRINGE_TOL, "worst fringe deviation {worst:.3e}");
    assert!((rows[0].1 - 1.0).abs() < ENDPOINT_TOL, "P(0) = {}", rows[0].1);
    let last = rows[FRINGE_POINTS - 1];
    assert!((last.0 - std::f64::consts::PI).abs() < 1e-15);
    assert!(last.1.abs() < ENDPOINT_TOL, "P(pi) = {}", last.1);
    criterion(
        7,
        &format!(
            "1000-point fringe deviates from (1 + cos dphi)/2 by at most {worst:.2e}; \
             P(0) = 1 and P(pi) = 0"
        ),
    );
}

#[test]
fn c08_derivation_layer_is_exact_and_convergent() {
    let cfg = VerifyConfig {
        units: Units::default(),
        tol: RECONSTRUCTION_TOL,
        trials: 200,
        seed: 808,
        a_exp: 2.0,
    };
    let report = run_derivation(&cfg);
    for name in [
        "newton_identity",
        "cauchy_solution",
        "cauchy_rigidity",
        "truncation_scale",
        "reconstruction_convergence",
    ] {
        assert!(report.properties.iter().any(|p| p.check == name), "property {name} missing");
    }
    let newton =
        report.properties.iter().find(|p| p.check == "newton_identity").unwrap().max_residual;
    assert_eq!(newton, 0.0, "the recursion must hold exactly in integer arithmetic");
    let cauchy =
        report.properties.iter().find(|p| p.check == "cauchy_solution").unwrap().max_residual;
    assert!(cauchy < CAUCHY_TOL, "series solution residual {cauchy:.3e}");
    assert!(report.passed, "failing: {:?}", failing(&report));
    criterion(
        8,
        &format!(
            "recursion exact in integers, series solution residual {cauchy:.2e} < 1e-12, \
             perturbed coefficients detected, truncated reconstruction converges"
        ),
    );
}

/// Plain exhaustive re-enumeration with the same canonical arithmetic and
/// ordering as the library, but none of its pruning or precomputation.
fn independent_lattice_sum(
    a: &SpacetimeEvent,
    b: &SpacetimeEvent,
    lattice: &LatticeParams,
    units: Units,
) -> (Complex64, u128) {
    let c = units.c;
    let n = lattice.t_steps as u64;
    let dt = (b.t - a.t) / lattice.t_steps as f64;
    let net = ((b.x - a.x) / lattice.dx).round() as i64;
    let segment_phase = |step: f64| -> f64 {
        let v = step * lattice.dx / dt;
        let g = 1.0 / (1.0 - v * v / (c * c)).sqrt();
        let e = lattice.mass * g * c * c;
        let p = lattice.mass * g * v;
        (e * dt - p * (step * lattice.dx)) / units.hbar
    };
    let steps: &[i64] = if lattice.include_rest { &[-1, 0, 1] } else { &[-1, 1] };

    #[allow(clippy::too_many_arguments)]
    fn walk(
        depth: u64,
        n: u64,
        pos: i64,
        net: i64,
        acc: f64,
        steps: &[i64],
        segment_phase: &dyn Fn(f64) -> f64,
        sum: &mut Complex64,
        count: &mut u128,
    ) {
        if depth == n {
            if pos == net {
                *sum += Complex64::new(acc.cos(), acc.sin());
                *count += 1;
            }
            return;
        }
        for &step in steps {
            walk(
                depth + 1,
                n,
                pos + step,
                net,
                acc + segment_phase(step as f64),
                steps,
                segment_phase,
                sum,
                count,
            );
        }
    }

    let mut sum = Complex64::new(0.0, 0.0);
    let mut count: u128 = 0;
    walk(0, n, 0, net, 0.0, steps, &segment_phase, &mut sum, &mut count);
    (sum / count as f64, count)
}

#[test]
fn c09_lattice_sums_match_an_independent_enumeration_bit_for_bit() {
    let start = Instant::now();
    let cases: [(SpacetimeEvent, SpacetimeEvent, LatticeParams, Units); 4] = [
        (
            SpacetimeEvent::on_axis(0.0, 0.0),
            SpacetimeEvent::on_axis(24.0, 0.8),
            LatticeParams { t_steps: 12, dx: 0.4, mass: 1.0, include_rest: false, cap: 1_000_000 },
            Units::default(),
        ),
        (
            SpacetimeEvent::on_axis(0.0, 0.0),
            SpacetimeEvent::on_axis(20.0, 0.0),
            LatticeParams { t_steps: 10, dx: 0.3, mass: 0.7, include_rest: true, cap: 1_000_000 },
            Units::default(),
        ),
        (
            SpacetimeEvent::on_axis(0.0, 0.0),
            SpacetimeEvent::on_axis(13.0, -0.75),
            LatticeParams { t_steps: 13, dx: 0.25, mass: 2.5, include_rest: false, cap: 1_000_000 },
            Units::default(),
        ),
        (
            SpacetimeEvent::on_axis(1.0, 0.5),
            SpacetimeEvent::on_axis(10.0, 1.0),
            LatticeParams { t_steps: 9, dx: 0.5, mass: 1.3, include_rest: false, cap: 1_000_000 },
            Units { c: 3.0, hbar: 0.7 },
        ),
    ];

    let mut total_paths: u128 = 0;
    for (a, b, lattice, units) in &cases {
        let library = lattice_path_sum(a, b, lattice, *units).unwrap();
        let (amp, count) = independent_lattice_sum(a, b, lattice, *units);
        assert!(count <= LATTICE_PATH_LIMIT, "case too large: {count} paths");
        assert_eq!(library.path_count, count, "path counts differ");
        assert_eq!(
            library.amplitude.re.to_bits(),
            amp.re.to_bits(),
            "re parts differ: {} vs {}",
            library.amplitude.re,
            amp.re
        );
        assert_eq!(
            library.amplitude.im.to_bits(),
            amp.im.to_bits(),
            "im parts differ: {} vs {}",
            library.amplitude.im,
            amp.im
        );
        total_paths += count;
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < LATTICE_BUDGET_SECS, "took {elapsed:.2} s");
    criterion(
        9,
        &format!(
            "independent enumeration of {total_paths} paths over 4 lattices is \
             bit-identical to the library in {elapsed:.2} s"
        ),
    );
}

#[test]
fn c10_verify_cli_is_green_and_byte_deterministic() {
    let first = tachyon(&["verify", "--suite", "all", "--seed", "7"], None);
    assert_eq!(first.status, 0, "stderr: {}", first.stderr);
    let second = tachyon(&["verify", "--suite", "all", "--seed", "7"], None);
    assert_eq!(second.status, 0);
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout, "reports differ between runs");

    let body = json(&first);
    assert_eq!(body["passed"], serde_json::json!(true));
    assert_eq!(body["suites"].as_array().unwrap().len(), 4);
    assert_eq!(f(&body["seed"]) as u64, 7);
    criterion(10, "verify --suite all --seed 7 exits 0 twice with byte-identical reports");
}
