//! Command-line front end: frame transformations in every velocity regime,
//! tachyon four-momenta, path-amplitude sums, and the verification suites.
//!
//! Exit codes: 0 success, 1 malformed input, 2 regime or constraint
//! violation, 3 path cap exceeded or unreachable sink, 4 verification
//! failure.

// Same convention as the library: !(a < b) guards fail closed on NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod io;

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use tachyon_core::amplitudes::{
    amplitude, interference_scan, invariant_p, lattice_path_sum, DetourGeometry, InvariantParams,
    LatticeParams, PathEnsemble,
};
use tachyon_core::fourmomentum::{
    helicity_transform, infinite_velocity_frame, tachyon_energy_momentum, transform_tachyon_state,
    TachyonState,
};
use tachyon_core::kinematics::{
    boost_subluminal, boost_superluminal, coefficient_a, infinite_boost, interval,
    interval_superluminal, k_form, GeneralBoost, SignChoice, SpacetimeEvent, SuperluminalCoords,
};
use tachyon_core::verify::{
    run_axioms, run_derivation, run_fourvectors, run_kinematics, SuiteReport, VerifyConfig,
};
use tachyon_core::{Error as CoreError, Units, Vec3, DEFAULT_TOL};

const EXIT_BAD_INPUT: i32 = 1;
const EXIT_REGIME: i32 = 2;
const EXIT_CAP: i32 = 3;
const EXIT_VERIFY: i32 = 4;

/// Environment fallback for --tol.
const TOL_ENV: &str = "TACHYON_TOL";

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }

    fn bad_input(message: impl Into<String>) -> Self {
        CliError::new(EXIT_BAD_INPUT, message)
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let code = match &e {
            CoreError::PathCapExceeded { .. } | CoreError::UnreachableSink { .. } => EXIT_CAP,
            CoreError::BrokenPathChain { .. } => EXIT_BAD_INPUT,
            _ => EXIT_REGIME,
        };
        CliError::new(code, e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "tachyon",
    version,
    about = "Extended-relativity toolkit: boosts beyond light speed, tachyon \
             four-momenta, and path-amplitude interference",
    after_help = "All numeric output carries 17 significant digits and repeated runs \
                  are byte-identical. Set TACHYON_TOL to override the default \
                  tolerance when --tol is absent."
)]
struct Cli {
    /// Speed of light.
    #[arg(long, global = true, default_value_t = 1.0)]
    c: f64,

    /// Reduced Planck constant.
    #[arg(long, global = true, default_value_t = 1.0)]
    hbar: f64,

    /// Numeric tolerance; falls back to TACHYON_TOL, then a per-command default.
    #[arg(long, global = true)]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Transform a spacetime event (JSON on stdin) into a moving frame.
    #[command(after_help = "\
Reads {\"t\": .., \"x\": .., \"y\": .., \"z\": ..} from stdin.

Subluminal (--V, metric constant K, default K = 1/c^2):
    x' = A (x - V t),   t' = A (t - K V x),   A = 1 / sqrt(1 - K V^2)
    preserved: t^2 - K x^2   (y and z ride along unchanged)
Superluminal collinear (--W with |W| > c, branch --sign, default minus):
    chi'   = sigma sgn(W) (x - W t) / D
    tau'_x = sigma sgn(W) (t - W x / c^2) / D,   D = sqrt(W^2/c^2 - 1)
    tau'_y = y / c,   tau'_z = z / c
    preserved: c^2 t^2 - r^2 = chi'^2 - c^2 tau'^2
Infinite (--infinite):
    chi = c t,   tau = r / c
Speeds accept a trailing \"c\": --W 1.5c means 1.5 times light speed.")]
    Transform(TransformArgs),

    /// Energy, momentum, and helicity of a tachyon state (JSON on stdin).
    #[command(after_help = "\
Reads {\"mu\": .., \"w\": [..], \"s\": [..], \"pseudo\": false} from stdin;
requires |w| > c and w^2 - c^2 < (s.w)^2.

    E = s' mu c^2 / D,   p = s' mu w / D,   D = sqrt(w^2/c^2 - 1),
    helicity s' = sgn(s . w)
Infinite-velocity frame (unique, subluminal):
    V = c^2 (w - sgn(s.w) sqrt(w^2 - c^2) s) / (w^2 - |s.w| sqrt(w^2 - c^2)),
    with w . V = c^2 and |V| < c.
Under a boost by u the helicity becomes s' sgn(c^2 - w . u); it flips
exactly when w . u > c^2 (the anti-tachyon reinterpretation).
--infinite-limit prints the |w| -> infinity limit: E = 0, |p| = mu c.")]
    Momentum(MomentumArgs),

    /// Amplitude and P for a path ensemble (stdin) or a lattice walk (--lattice).
    #[command(after_help = "\
Reads {\"source\": {..}, \"sink\": {..}, \"paths\": [{\"segments\": [..]}, ..]}
from stdin unless --lattice is given.

    segment phase  phi += (E dt - p . dr) / hbar
    amplitude      <B|A> = (1/n) sum_k exp(i phi_k)
    invariant      P = n^-2 |sum_k exp(i phi_k)|^2 = |<B|A>|^2
Lattice walks move by -dx, +dx (and 0 with \"include_rest\") per time step;
each segment gets E = m gamma c^2 and p = m gamma v from its slope. The
path count is checked against \"cap\" before any enumeration.")]
    Amplitude(AmplitudeArgs),

    /// Scan the two-path detour fringe; emits "param,P" CSV.
    #[command(after_help = "\
Two paths from source to sink: one at rest, one detouring to transverse
offset d and back. The phase difference and the fringe are

    dphi(d) = (m c^2 T / hbar) (1 - sqrt(1 - 4 d^2 / (c^2 T^2))),
    P(dphi) = (1 + cos dphi) / 2,

computed through the full path machinery, not the closed form. Rows sample
dphi uniformly from 0 to --max-phase; the param column is dphi.")]
    Scan(ScanArgs),

    /// Run the self-verification suites; exit 0 only if every property holds.
    #[command(after_help = "\
Suites: kinematics (boost round trips, composition, interval preservation),
fourvectors (covariance of the four families, helicity rules, the unique
decay and the discrete symmetries), axioms (permutation symmetry, inversion,
composition, normalization of the invariant P), derivation (the recursion
and series solution behind P), or all. Failures print witnesses into the
report and exit with code 4. --A-exp changes the normalization exponent in
n^-A; only A = 2 satisfies the identical-paths normalization, so
--A-exp 1.5 --expect-fail demonstrates a caught failure.")]
    Verify(VerifyArgs),
}

#[derive(Args)]
struct TransformArgs {
    /// Collinear boost speed along x (suffix "c" allowed); pairs with --K.
    #[arg(long = "V", value_name = "SPEED", allow_hyphen_values = true)]
    v: Option<String>,

    /// Superluminal collinear boost speed along x, |W| > c (suffix "c" allowed).
    #[arg(long = "W", value_name = "SPEED", allow_hyphen_values = true)]
    w: Option<String>,

    /// Apply the infinite-velocity relabeling chi = c t, tau = r / c.
    #[arg(long)]
    infinite: bool,

    /// Metric constant K for --V; 0 is Galilean, 1/c^2 Lorentz, negative Euclidean.
    #[arg(long = "K", value_name = "CONST", allow_negative_numbers = true)]
    k: Option<f64>,

    /// Branch sign for the superluminal coefficient.
    #[arg(long, value_enum, default_value_t = SignArg::Minus)]
    sign: SignArg,
}

#[derive(Args)]
struct MomentumArgs {
    /// Boost the state by this 3-velocity "vx,vy,vz" (components take the "c" suffix).
    #[arg(long, value_name = "VX,VY,VZ", allow_hyphen_values = true)]
    boost: Option<String>,

    /// Also print the infinite-velocity limit along w: E = 0, |p| = mu c.
    #[arg(long = "infinite-limit")]
    infinite_limit: bool,
}

#[derive(Args)]
struct AmplitudeArgs {
    /// Inline lattice spec: {"a":{..},"b":{..},"t_steps":..,"dx":..,"mass":..,
    /// "include_rest":..,"cap":..}; otherwise an ensemble is read from stdin.
    #[arg(long, value_name = "JSON")]
    lattice: Option<String>,
}

#[derive(Args)]
struct ScanArgs {
    /// Number of rows; phase differences sample [0, --max-phase] uniformly.
    #[arg(long, default_value_t = 1000)]
    points: usize,

    /// Mass of the interfering particle.
    #[arg(long, default_value_t = 1.0)]
    mass: f64,

    /// Total flight time T between source and sink.
    #[arg(long = "flight-time", default_value_t = 40.0)]
    flight_time: f64,

    /// Largest phase difference reached by the scan.
    #[arg(long = "max-phase", default_value_t = std::f64::consts::PI)]
    max_phase: f64,

    /// Write the CSV here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,

    /// Random trials per property.
    #[arg(long, default_value_t = 200)]
    trials: u64,

    /// Seed for the deterministic sampler.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Normalization exponent A in n^-A; values other than 2 break normalization.
    #[arg(long = "A-exp", default_value_t = 2.0)]
    a_exp: f64,

    /// Announce that failures are expected; exits 4 if every property passes.
    #[arg(long = "expect-fail")]
    expect_fail: bool,

    /// Write the JSON report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for SignChoice {
    fn from(s: SignArg) -> SignChoice {
        match s {
            SignArg::Plus => SignChoice::Plus,
            SignArg::Minus => SignChoice::Minus,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Kinematics,
    Fourvectors,
    Axioms,
    Derivation,
    All,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_BAD_INPUT,
            };
            let _ = e.print();
            process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            process::exit(e.code);
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let units = Units::new(cli.c, cli.hbar)
        .map_err(|e| CliError::bad_input(e.to_string()))?;
    match cli.command {
        Command::Transform(args) => cmd_transform(units, cli.tol, args),
        Command::Momentum(args) => cmd_momentum(units, cli.tol, args),
        Command::Amplitude(args) => cmd_amplitude(units, args),
        Command::Scan(args) => cmd_scan(units, args),
        Command::Verify(args) => cmd_verify(units, cli.tol, args),
    }
}

/// --tol, then the TACHYON_TOL environment variable, then `fallback`.
fn resolve_tol(flag: Option<f64>, fallback: f64) -> Result<f64, CliError> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(raw) => raw.trim().parse::<f64>().map_err(|_| {
                CliError::bad_input(format!("cannot parse {TOL_ENV}={raw:?} as a number"))
            })?,
            Err(_) => fallback,
        },
    };
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::bad_input(format!("tolerance must be finite and positive, got {tol}")));
    }
    Ok(tol)
}

fn read_stdin_json<T: serde::de::DeserializeOwned>(what: &str) -> Result<T, CliError> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| CliError::bad_input(format!("cannot read stdin: {e}")))?;
    serde_json::from_str(&buf)
        .map_err(|e| CliError::bad_input(format!("malformed {what} JSON: {e}")))
}

fn emit(body: &Value, out: Option<&PathBuf>) -> Result<(), CliError> {
    let text = io::to_json(body);
    match out {
        Some(path) => fs::write(path, text + "\n")
            .map_err(|e| CliError::bad_input(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn event_json(e: &SpacetimeEvent) -> Value {
    json!({ "t": e.t, "x": e.x, "y": e.y, "z": e.z })
}

fn super_json(s: &SuperluminalCoords) -> Value {
    json!({ "chi": s.chi, "tau": s.tau })
}

fn cmd_transform(units: Units, _tol: Option<f64>, args: TransformArgs) -> Result<i32, CliError> {
    let c = units.c;
    let picked = args.v.is_some() as u8 + args.w.is_some() as u8 + args.infinite as u8;
    if picked != 1 {
        return Err(CliError::bad_input("choose exactly one of --V, --W, --infinite"));
    }
    if args.k.is_some() && args.v.is_none() {
        return Err(CliError::bad_input("--K applies only to a --V transform"));
    }

    let event: SpacetimeEvent = read_stdin_json("event")?;
    if !event.is_finite() {
        return Err(CliError::bad_input("event coordinates must be finite"));
    }

    let body = if let Some(raw) = args.v {
        let v = io::parse_speed(&raw, c).map_err(CliError::bad_input)?;
        let k = args.k.unwrap_or(1.0 / (c * c));
        if !k.is_finite() {
            return Err(CliError::bad_input("--K must be finite"));
        }
        let boost = GeneralBoost::subluminal(k, v)?;
        let out = boost_subluminal(&event, &boost)?;
        json!({
            "regime": "subluminal",
            "K": k,
            "V": v,
            "coefficient_A": coefficient_a(k, v, SignChoice::Minus)?,
            "input": event_json(&event),
            "output": event_json(&out),
            "interval_before": k_form(&event, k),
            "interval_after": k_form(&out, k),
        })
    } else if let Some(raw) = args.w {
        let w = io::parse_speed(&raw, c).map_err(CliError::bad_input)?;
        let sign: SignChoice = args.sign.into();
        let boost = GeneralBoost::superluminal(w, c, sign)?;
        let out = boost_superluminal(&event, &boost)?;
        let origin = SpacetimeEvent::new(0.0, 0.0, 0.0, 0.0);
        let origin_out = boost_superluminal(&origin, &boost)?;
        json!({
            "regime": "superluminal",
            "W": w,
            "sign": if matches!(sign, SignChoice::Plus) { "plus" } else { "minus" },
            "input": event_json(&event),
            "output": super_json(&out),
            "interval_before": interval(&event, &origin, c),
            "interval_after": interval_superluminal(&out, &origin_out, c),
        })
    } else {
        let out = infinite_boost(&event, c);
        let origin = SuperluminalCoords::new(0.0, Vec3::ZERO);
        json!({
            "regime": "infinite",
            "input": event_json(&event),
            "output": super_json(&out),
            "interval_before": interval(&event, &SpacetimeEvent::new(0.0, 0.0, 0.0, 0.0), c),
            "interval_after": interval_superluminal(&out, &origin, c),
        })
    };
    emit(&body, None)?;
    Ok(0)
}

fn cmd_momentum(units: Units, tol: Option<f64>, args: MomentumArgs) -> Result<i32, CliError> {
    let c = units.c;
    let tol = resolve_tol(tol, DEFAULT_TOL)?;
    let state: TachyonState = read_stdin_json("tachyon state")?;
    state.validate(c, tol)?;

    let (energy, momentum) = tachyon_energy_momentum(&state, c)?;
    let frame = infinite_velocity_frame(&state, c)?;
    let mut body = json!({
        "state": state,
        "energy": energy,
        "momentum": momentum,
        "helicity": state.helicity() as i64,
        "infinite_velocity_frame": {
            "V": frame,
            "speed": frame.norm(),
            "w_dot_V": state.w.dot(frame),
        },
    });

    if let Some(raw) = args.boost {
        let v = io::parse_velocity3(&raw, c).map_err(CliError::bad_input)?;
        if !(v.norm() < c) {
            return Err(CliError::new(
                EXIT_REGIME,
                format!("boost speed {} must stay below c = {c}", v.norm()),
            ));
        }
        let helicity_after = helicity_transform(&state, v, c, tol)?;
        let transformed = transform_tachyon_state(&state, v, c, tol)?;
        let (e2, p2) = tachyon_energy_momentum(&transformed, c)?;
        body["boost"] = json!({
            "v": v,
            "w_dot_v": state.w.dot(v),
            "anti_tachyon": state.w.dot(v) > c * c,
            "flips_helicity": helicity_after != state.helicity(),
            "state": transformed,
            "energy": e2,
            "momentum": p2,
            "helicity": helicity_after as i64,
        });
    }

    if args.infinite_limit {
        let direction = state
            .w
            .normalized()
            .ok_or_else(|| CliError::new(EXIT_REGIME, "tachyon velocity has no direction"))?;
        let s_prime = state.helicity() as f64;
        body["infinite_limit"] = json!({
            "energy": 0.0,
            "momentum": direction * (s_prime * state.mu * c),
            "momentum_magnitude": state.mu * c,
        });
    }

    emit(&body, None)?;
    Ok(0)
}

// Explicit fields instead of #[serde(flatten)]: flatten buffers through a
// representation that cannot hold the u128 cap.
#[derive(Deserialize)]
struct LatticeSpec {
    a: SpacetimeEvent,
    b: SpacetimeEvent,
    t_steps: u32,
    dx: f64,
    mass: f64,
    #[serde(default)]
    include_rest: bool,
    #[serde(default = "default_path_cap")]
    cap: u128,
}

fn default_path_cap() -> u128 {
    tachyon_core::amplitudes::DEFAULT_PATH_CAP
}

impl LatticeSpec {
    fn params(&self) -> LatticeParams {
        LatticeParams {
            t_steps: self.t_steps,
            dx: self.dx,
            mass: self.mass,
            include_rest: self.include_rest,
            cap: self.cap,
        }
    }
}

fn cmd_amplitude(units: Units, args: AmplitudeArgs) -> Result<i32, CliError> {
    let params = InvariantParams::default();
    let body = if let Some(raw) = args.lattice {
        let spec: LatticeSpec = serde_json::from_str(&raw)
            .map_err(|e| CliError::bad_input(format!("malformed --lattice JSON: {e}")))?;
        let sum = lattice_path_sum(&spec.a, &spec.b, &spec.params(), units)?;
        let n = u64::try_from(sum.path_count).map_err(|_| {
            CliError::new(EXIT_CAP, format!("path count {} overflows the report", sum.path_count))
        })?;
        json!({
            "amplitude": { "re": sum.amplitude.re, "im": sum.amplitude.im },
            "n": n,
            "p": sum.amplitude.norm_sqr(),
        })
    } else {
        let ensemble: PathEnsemble = read_stdin_json("path ensemble")?;
        let amp = amplitude(&ensemble, units)?;
        let phases = ensemble.phases(units);
        json!({
            "amplitude": { "re": amp.re, "im": amp.im },
            "n": ensemble.paths.len() as u64,
            "p": invariant_p(&phases, &params),
        })
    };
    emit(&body, None)?;
    Ok(0)
}

fn cmd_scan(units: Units, args: ScanArgs) -> Result<i32, CliError> {
    if args.points < 2 {
        return Err(CliError::bad_input("--points must be at least 2"));
    }
    if !(args.mass.is_finite() && args.mass > 0.0) {
        return Err(CliError::bad_input("--mass must be finite and positive"));
    }
    if !(args.flight_time.is_finite() && args.flight_time > 0.0) {
        return Err(CliError::bad_input("--flight-time must be finite and positive"));
    }
    if !(args.max_phase.is_finite() && args.max_phase >= 0.0) {
        return Err(CliError::bad_input("--max-phase must be finite and non-negative"));
    }

    let geometry = DetourGeometry { mass: args.mass, flight_time: args.flight_time };
    let params = InvariantParams::default();
    let mut dphis = Vec::with_capacity(args.points);
    let mut offsets = Vec::with_capacity(args.points);
    for i in 0..args.points {
        let dphi = args.max_phase * i as f64 / (args.points - 1) as f64;
        offsets.push(geometry.offset_for_phase(dphi, units)?);
        dphis.push(dphi);
    }
    let rows = interference_scan(&geometry, &offsets, &params, units)?;
    let table: Vec<(f64, f64)> =
        dphis.into_iter().zip(rows.iter().map(|r| r.p)).collect();

    match &args.out {
        Some(path) => {
            let mut buf = Vec::new();
            io::write_csv(&mut buf, &table)
                .map_err(|e| CliError::bad_input(format!("cannot format CSV: {e}")))?;
            fs::write(path, buf).map_err(|e| {
                CliError::bad_input(format!("cannot write {}: {e}", path.display()))
            })?;
        }
        None => {
            let stdout = std::io::stdout();
            io::write_csv(stdout.lock(), &table)
                .map_err(|e| CliError::bad_input(format!("cannot write CSV: {e}")))?;
        }
    }
    Ok(0)
}

fn cmd_verify(units: Units, tol: Option<f64>, args: VerifyArgs) -> Result<i32, CliError> {
    let tol = resolve_tol(tol, 1e-10)?;
    if !(args.a_exp.is_finite()) {
        return Err(CliError::bad_input("--A-exp must be finite"));
    }
    let cfg = VerifyConfig { units, tol, trials: args.trials, seed: args.seed, a_exp: args.a_exp };

    let reports: Vec<SuiteReport> = match args.suite {
        SuiteArg::Kinematics => vec![run_kinematics(&cfg)],
        SuiteArg::Fourvectors => vec![run_fourvectors(&cfg)],
        SuiteArg::Axioms => vec![run_axioms(&cfg)],
        SuiteArg::Derivation => vec![run_derivation(&cfg)],
        SuiteArg::All => {
            vec![run_kinematics(&cfg), run_fourvectors(&cfg), run_axioms(&cfg), run_derivation(&cfg)]
        }
    };

    let passed = reports.iter().all(|r| r.passed);
    for report in &reports {
        let failing: Vec<&str> = report
            .properties
            .iter()
            .filter(|p| !p.passed())
            .map(|p| p.check.as_str())
            .collect();
        if failing.is_empty() {
            eprintln!("suite {}: pass ({} properties)", report.suite, report.properties.len());
        } else {
            eprintln!("suite {}: FAIL ({})", report.suite, failing.join(", "));
        }
    }

    let body = json!({
        "seed": args.seed,
        "trials": args.trials,
        "tol": tol,
        "a_exp": args.a_exp,
        "suites": reports,
        "passed": passed,
    });
    emit(&body, args.out.as_ref())?;

    if passed && args.expect_fail {
        eprintln!("expected a failure but every property passed");
        return Ok(EXIT_VERIFY);
    }
    if !passed && args.expect_fail {
        eprintln!("failures occurred as expected");
    }
    Ok(if passed { 0 } else { EXIT_VERIFY })
}
