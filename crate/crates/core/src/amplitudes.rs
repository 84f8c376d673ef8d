//! Path phases, the probability-like invariant P, and path superpositions.
//!
//! A piecewise-inertial spacetime path accumulates the dimensionless phase
//!
//!   phi = (1/hbar) sum over segments of (E dt - p . dr),
//!
//! the classical action over hbar; reversing the path negates it. For a
//! segment carrying the energy-momentum of a massive particle the phase is
//! m c^2/hbar times the segment's proper time.
//!
//! A particle assigned n alternative paths between the same two events gets
//! the invariant
//!
//!   P = n^(-A) (sum_i e^(alpha phi_i)) (sum_i e^(-alpha phi_i)),
//!
//! smooth and symmetric in the phases, invariant under phase inversion and
//! common shifts, and multiplicative under composition of independent path
//! bundles (the two factors split). The defaults alpha = i and A = 2 are the
//! unique normalization with P(phi, ..., phi) = P(phi) = 1, and then
//! P = |<B|A>|^2 with <B|A> = (1/n) sum_i e^(i phi_i). For two paths
//! P = (1 + cos(phi_1 - phi_2)) / 2: an interference fringe.

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kinematics::SpacetimeEvent;
use crate::units::Units;
use crate::vec3::Vec3;

/// One inertial stretch of a path with constant energy and momentum.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathSegment {
    pub start: SpacetimeEvent,
    pub end: SpacetimeEvent,
    pub energy: f64,
    pub momentum: Vec3,
}

impl PathSegment {
    /// Phase contribution (E dt - p . dr) / hbar.
    pub fn phase(&self, units: Units) -> f64 {
        let dt = self.end.t - self.start.t;
        let dr = self.end.r() - self.start.r();
        (self.energy * dt - self.momentum.dot(dr)) / units.hbar
    }
}

/// An ordered chain of segments.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Path {
    pub segments: Vec<PathSegment>,
}

impl Path {
    pub fn new(segments: Vec<PathSegment>) -> Self {
        Path { segments }
    }

    /// Segments must chain end-to-start exactly (bitwise equal events).
    pub fn validate(&self) -> Result<()> {
        if self.segments.is_empty() {
            return Err(Error::BrokenPathChain { reason: "path has no segments".into() });
        }
        for pair in self.segments.windows(2) {
            if pair[0].end != pair[1].start {
                return Err(Error::BrokenPathChain {
                    reason: format!(
                        "segment ends at t={} but the next starts at t={}",
                        pair[0].end.t, pair[1].start.t
                    ),
                });
            }
        }
        Ok(())
    }

    pub fn start(&self) -> Option<SpacetimeEvent> {
        self.segments.first().map(|s| s.start)
    }

    pub fn end(&self) -> Option<SpacetimeEvent> {
        self.segments.last().map(|s| s.end)
    }

    /// The same world-line walked backwards; its phase is the negative.
    pub fn reverse(&self) -> Path {
        Path {
            segments: self
                .segments
                .iter()
                .rev()
                .map(|s| PathSegment { start: s.end, end: s.start, ..*s })
                .collect(),
        }
    }
}

/// Total phase of a path: the segment sum, evaluated exactly (the integrand
/// is constant on each segment, so there is nothing to quadrature).
pub fn phase(path: &Path, units: Units) -> f64 {
    let mut total = 0.0;
    for seg in &path.segments {
        total += seg.phase(units);
    }
    total
}

/// n alternative paths from one source event to one sink event.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathEnsemble {
    pub source: SpacetimeEvent,
    pub sink: SpacetimeEvent,
    pub paths: Vec<Path>,
}

impl PathEnsemble {
    pub fn validate(&self) -> Result<()> {
        if self.paths.is_empty() {
            return Err(Error::BrokenPathChain { reason: "ensemble has no paths".into() });
        }
        for path in &self.paths {
            path.validate()?;
            if path.start() != Some(self.source) || path.end() != Some(self.sink) {
                return Err(Error::BrokenPathChain {
                    reason: "path endpoints do not match the ensemble source/sink".into(),
                });
            }
        }
        Ok(())
    }

    pub fn phases(&self, units: Units) -> Vec<f64> {
        self.paths.iter().map(|p| phase(p, units)).collect()
    }
}

/// Exponents of the invariant: alpha (default i) and the normalization
/// exponent A (default 2).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InvariantParams {
    pub alpha: Complex64,
    pub a_exp: f64,
}

impl Default for InvariantParams {
    fn default() -> Self {
        InvariantParams { alpha: Complex64::new(0.0, 1.0), a_exp: 2.0 }
    }
}

impl InvariantParams {
    pub fn with_a_exp(a_exp: f64) -> Self {
        InvariantParams { a_exp, ..Default::default() }
    }
}

/// The invariant as a complex number: n^(-A) (sum e^(alpha phi))(sum e^(-alpha phi)).
/// Real for purely real or purely imaginary alpha.
pub fn invariant_p_complex(phases: &[f64], params: &InvariantParams) -> Complex64 {
    let n = phases.len() as f64;
    let mut plus = Complex64::new(0.0, 0.0);
    let mut minus = Complex64::new(0.0, 0.0);
    for &phi in phases {
        plus += (params.alpha * phi).exp();
        minus += (-params.alpha * phi).exp();
    }
    n.powf(-params.a_exp) * plus * minus
}

/// The invariant P as a real number (its imaginary part is zero up to
/// rounding for real or imaginary alpha). With the defaults it lies in
/// [0, 1] and equals |amplitude|^2.
pub fn invariant_p(phases: &[f64], params: &InvariantParams) -> f64 {
    invariant_p_complex(phases, params).re
}

/// The complex amplitude <B|A> = (1/n) sum_k e^(i phi_k); summed in path
/// order with a single division at the end.
pub fn amplitude_from_phases(phases: &[f64]) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for &phi in phases {
        sum += Complex64::new(phi.cos(), phi.sin());
    }
    sum / phases.len() as f64
}

/// Amplitude of an ensemble; validates the ensemble first.
pub fn amplitude(ensemble: &PathEnsemble, units: Units) -> Result<Complex64> {
    ensemble.validate()?;
    Ok(amplitude_from_phases(&ensemble.phases(units)))
}

/// Residuals of the three invariant axioms on random phase vectors:
/// permutation symmetry, inversion P(phi) = P(-phi), and composition
/// P_n(phi) P_m(xi) = P_nm(all pairwise sums phi_i + xi_j).
#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct AxiomReport {
    pub symmetry: f64,
    pub inversion: f64,
    pub composition: f64,
}

pub fn check_axioms(
    params: &InvariantParams,
    n: usize,
    m: usize,
    trials: u64,
    rng: &mut impl Rng,
) -> AxiomReport {
    let mut report = AxiomReport::default();
    for _ in 0..trials {
        let phi: Vec<f64> = (0..n).map(|_| rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI)).collect();
        let xi: Vec<f64> = (0..m).map(|_| rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI)).collect();

        let p_phi = invariant_p(&phi, params);

        let mut shuffled = phi.clone();
        shuffled.shuffle(rng);
        report.symmetry = report.symmetry.max((invariant_p(&shuffled, params) - p_phi).abs());

        let negated: Vec<f64> = phi.iter().map(|&x| -x).collect();
        report.inversion = report.inversion.max((invariant_p(&negated, params) - p_phi).abs());

        let mut sums = Vec::with_capacity(n * m);
        for &a in &phi {
            for &b in &xi {
                sums.push(a + b);
            }
        }
        let lhs = p_phi * invariant_p(&xi, params);
        let rhs = invariant_p(&sums, params);
        report.composition = report.composition.max((lhs - rhs).abs());
    }
    report
}

/// Residual of the identical-phases normalization P(phi, ..., phi) = P(phi);
/// zero only at A = 2 (the value is n^(2-A)).
pub fn normalization_residual(params: &InvariantParams, n: usize, phi: f64) -> f64 {
    let stacked = vec![phi; n];
    let single = [phi];
    (invariant_p(&stacked, params) - invariant_p(&single, params)).abs()
}

/// Max residual of the two-path frame-shift identities: invariance under a
/// common phase shift delta (an observer change) and under swapping the
/// paths.
pub fn frame_shift_check(phi1: f64, phi2: f64, delta: f64, params: &InvariantParams) -> f64 {
    let base = invariant_p(&[phi1, phi2], params);
    let shifted = invariant_p(&[phi1 - delta, phi2 - delta], params);
    let swapped = invariant_p(&[phi2, phi1], params);
    (base - shifted).abs().max((base - swapped).abs())
}

/// Witness that P is not an additive function of single-path contributions:
/// fit P(a, b) = f(a) + f(b) to P(0,0) and P(0,pi), then return the defect
/// on P(pi,pi). Equals 2^(3-A) for the solution family; 2 at the defaults.
pub fn additive_split_defect(params: &InvariantParams) -> f64 {
    let pi = std::f64::consts::PI;
    let p00 = invariant_p(&[0.0, 0.0], params);
    let p0pi = invariant_p(&[0.0, pi], params);
    let ppipi = invariant_p(&[pi, pi], params);
    let f0 = p00 / 2.0;
    let fpi = p0pi - f0;
    (2.0 * fpi - ppipi).abs()
}

/// Two-path detour geometry: path 1 rests at the origin for the flight time
/// T; path 2 detours to transverse offset d at T/2 and returns. Both paths
/// carry massive-particle (E, p) from their segment velocities, so
///
///   dphi = (m c^2 T / hbar) (1 - sqrt(1 - 4 d^2 / (c T)^2)),
///
/// the rest path's phase minus the detour's (the detour has less proper
/// time). Sweeping d sweeps the fringe P = (1 + cos dphi)/2.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct DetourGeometry {
    pub mass: f64,
    pub flight_time: f64,
}

impl Default for DetourGeometry {
    fn default() -> Self {
        // mc^2 T/hbar = 40 in natural units: more than a full fringe.
        DetourGeometry { mass: 1.0, flight_time: 40.0 }
    }
}

impl DetourGeometry {
    fn leg_speed(&self, d: f64, units: Units) -> Result<f64> {
        let u = 2.0 * d / self.flight_time;
        if !(u.abs() < units.c) {
            return Err(Error::InvalidParameter {
                name: "offset",
                value: d,
                reason: "detour leg would reach light speed",
            });
        }
        Ok(u)
    }

    /// Build the two-path ensemble for transverse offset `d`.
    pub fn ensemble(&self, d: f64, units: Units) -> Result<PathEnsemble> {
        let c = units.c;
        let t_total = self.flight_time;
        let source = SpacetimeEvent::new(0.0, 0.0, 0.0, 0.0);
        let sink = SpacetimeEvent::new(t_total, 0.0, 0.0, 0.0);
        let mid = SpacetimeEvent::new(t_total / 2.0, d, 0.0, 0.0);

        let rest_energy = self.mass * c * c;
        let direct = Path::new(vec![PathSegment {
            start: source,
            end: sink,
            energy: rest_energy,
            momentum: Vec3::ZERO,
        }]);

        let u = self.leg_speed(d, units)?;
        let g = 1.0 / (1.0 - u * u / (c * c)).sqrt();
        let leg_energy = self.mass * g * c * c;
        let out = PathSegment {
            start: source,
            end: mid,
            energy: leg_energy,
            momentum: Vec3::x(self.mass * g * u),
        };
        let back = PathSegment {
            start: mid,
            end: sink,
            energy: leg_energy,
            momentum: Vec3::x(-self.mass * g * u),
        };
        let detour = Path::new(vec![out, back]);

        let ensemble = PathEnsemble { source, sink, paths: vec![direct, detour] };
        ensemble.validate()?;
        Ok(ensemble)
    }

    /// Closed-form phase difference phi_direct - phi_detour at offset `d`.
    pub fn phase_difference(&self, d: f64, units: Units) -> Result<f64> {
        let c = units.c;
        let u = self.leg_speed(d, units)?;
        let beta2 = u * u / (c * c);
        Ok(self.mass * c * c * self.flight_time / units.hbar * (1.0 - (1.0 - beta2).sqrt()))
    }

    /// Invert [`Self::phase_difference`]: the offset producing a given dphi.
    pub fn offset_for_phase(&self, dphi: f64, units: Units) -> Result<f64> {
        let c = units.c;
        let scale = self.mass * c * c * self.flight_time / units.hbar;
        let root = 1.0 - dphi / scale;
        if !(0.0..=1.0).contains(&root) {
            return Err(Error::InvalidParameter {
                name: "dphi",
                value: dphi,
                reason: "phase difference out of reach for this geometry",
            });
        }
        Ok(c * self.flight_time / 2.0 * (1.0 - root * root).sqrt())
    }
}

/// One row of an interference scan.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ScanRow {
    pub param: f64,
    pub p: f64,
}

/// Evaluate P over a list of detour offsets through the full path machinery.
pub fn interference_scan(
    geometry: &DetourGeometry,
    offsets: &[f64],
    params: &InvariantParams,
    units: Units,
) -> Result<Vec<ScanRow>> {
    let mut rows = Vec::with_capacity(offsets.len());
    for &d in offsets {
        let ensemble = geometry.ensemble(d, units)?;
        let p = invariant_p(&ensemble.phases(units), params);
        rows.push(ScanRow { param: d, p });
    }
    Ok(rows)
}

/// A monotone-in-time (1+1)-dimensional lattice walk specification.
///
/// Paths take `t_steps` equal time steps of duration (b.t - a.t)/t_steps;
/// each step moves by -dx, +dx, or (with `include_rest`) 0. Segments get
/// massive-particle (E, p) from their slope. The enumeration is depth-first
/// with steps tried in ascending order (-dx, then 0, then +dx), phases are
/// accumulated segment by segment in time order, the phasor sum runs in
/// enumeration order, and the single division by the path count comes last;
/// an independent enumerator following the same order reproduces the
/// amplitude bit for bit.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct LatticeParams {
    pub t_steps: u32,
    pub dx: f64,
    pub mass: f64,
    #[serde(default)]
    pub include_rest: bool,
    #[serde(default = "default_cap")]
    pub cap: u128,
}

/// Default enumeration cap for lattice path sums.
pub const DEFAULT_PATH_CAP: u128 = 1_000_000;

fn default_cap() -> u128 {
    DEFAULT_PATH_CAP
}

/// Result of a lattice path sum.
#[derive(Clone, Copy, Debug)]
pub struct LatticeSum {
    pub amplitude: Complex64,
    pub path_count: u128,
}

/// Binomial coefficient in u128; `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
    }
    Some(acc)
}

fn count_paths(n: u64, net: i64, include_rest: bool) -> Option<u128> {
    let reach = |steps: u64, net: i64| -> Option<u128> {
        let abs = net.unsigned_abs();
        if abs > steps || !(steps + abs).is_multiple_of(2) {
            return Some(0);
        }
        binomial(steps, (steps as i64 + net) as u64 / 2)
    };
    if !include_rest {
        return reach(n, net);
    }
    let mut total: u128 = 0;
    for zeros in 0..=n {
        let ways = binomial(n, zeros)?.checked_mul(reach(n - zeros, net)?)?;
        total = total.checked_add(ways)?;
    }
    Some(total)
}

/// Sum the amplitude over every monotone lattice path from `a` to `b`.
///
/// The sink must sit a whole number of spatial steps away and be reachable
/// in the step budget; the path count is checked against `cap` before any
/// enumeration.
pub fn lattice_path_sum(
    a: &SpacetimeEvent,
    b: &SpacetimeEvent,
    lattice: &LatticeParams,
    units: Units,
) -> Result<LatticeSum> {
    let c = units.c;
    let n = lattice.t_steps as u64;
    if n == 0 {
        return Err(Error::InvalidParameter {
            name: "t_steps",
            value: 0.0,
            reason: "need at least one time step",
        });
    }
    if !(lattice.dx > 0.0) {
        return Err(Error::InvalidParameter {
            name: "dx",
            value: lattice.dx,
            reason: "spatial spacing must be positive",
        });
    }
    let dt = (b.t - a.t) / lattice.t_steps as f64;
    if !(dt > 0.0) {
        return Err(Error::InvalidParameter {
            name: "dt",
            value: dt,
            reason: "sink must lie after source",
        });
    }
    if lattice.dx / dt >= c {
        return Err(Error::InvalidParameter {
            name: "dx",
            value: lattice.dx,
            reason: "lattice slope must stay subluminal",
        });
    }
    if a.y != b.y || a.z != b.z {
        return Err(Error::BrokenPathChain {
            reason: "lattice walks are (1+1)-dimensional: y and z must match".into(),
        });
    }
    let net_f = (b.x - a.x) / lattice.dx;
    let net = net_f.round() as i64;
    if (net_f - net as f64).abs() > 1e-9 {
        return Err(Error::UnreachableSink { net: net_f.ceil() as i64, steps: n });
    }

    let count = count_paths(n, net, lattice.include_rest)
        .ok_or(Error::PathCapExceeded { count: u128::MAX, cap: lattice.cap })?;
    if count == 0 {
        return Err(Error::UnreachableSink { net, steps: n });
    }
    if count > lattice.cap {
        return Err(Error::PathCapExceeded { count, cap: lattice.cap });
    }

    // Canonical per-step phases; every same-slope segment shares the value.
    let step_phase = |step: f64| -> f64 {
        let v = step * lattice.dx / dt;
        let g = 1.0 / (1.0 - v * v / (c * c)).sqrt();
        let e = lattice.mass * g * c * c;
        let p = lattice.mass * g * v;
        (e * dt - p * (step * lattice.dx)) / units.hbar
    };
    let choices: &[f64] = if lattice.include_rest { &[-1.0, 0.0, 1.0] } else { &[-1.0, 1.0] };
    let phases: Vec<f64> = choices.iter().map(|&s| step_phase(s)).collect();
    let step_ints: Vec<i64> = choices.iter().map(|&s| s as i64).collect();

    let mut sum = Complex64::new(0.0, 0.0);
    let mut emitted: u128 = 0;
    // Depth-first enumeration; prune branches that cannot reach the sink.
    #[allow(clippy::too_many_arguments)]
    fn descend(
        depth: u64,
        n: u64,
        pos: i64,
        net: i64,
        phase_acc: f64,
        step_ints: &[i64],
        phases: &[f64],
        max_step: i64,
        sum: &mut Complex64,
        emitted: &mut u128,
    ) {
        if depth == n {
            if pos == net {
                *sum += Complex64::new(phase_acc.cos(), phase_acc.sin());
                *emitted += 1;
            }
            return;
        }
        let remaining = (n - depth) as i64;
        for (i, &step) in step_ints.iter().enumerate() {
            let next = pos + step;
            if (net - next).abs() > remaining.saturating_sub(1) * max_step {
                continue;
            }
            descend(
                depth + 1,
                n,
                next,
                net,
                phase_acc + phases[i],
                step_ints,
                phases,
                max_step,
                sum,
                emitted,
            );
        }
    }
    descend(0, n, 0, net, 0.0, &step_ints, &phases, 1, &mut sum, &mut emitted);
    debug_assert_eq!(emitted, count);

    Ok(LatticeSum { amplitude: sum / emitted as f64, path_count: emitted })
}
