//! Covariant four-vectors, tachyon energy-momentum, and discrete symmetries.
//!
//! Exactly four linearly independent families (A0, A) transform covariantly
//! under Lorentz boosts, written here dimensionless with gamma_v =
//! 1/sqrt(1-v^2/c^2) and D = sqrt(w^2/c^2-1):
//!
//!   a. (gamma_v, gamma_v v/c)                          for |v| < c
//!   b. (gamma_v s.v/c, s + (gamma_v-1)(s.v/v^2) v)     for |v| < c
//!   c. (s'/D, s' (w/c)/D), s' = sgn(s.w)               for |w| > c
//!   d. ((w^2/c^2/D - |s.w|/c) / (|s.w|/c - D),
//!       ((w/c)/D - s' s)     / (|s.w|/c - D))          for |w| > c
//!
//! Families c and d require w^2 - c^2 < (s.w)^2, which also keeps the
//! family-d denominator positive. A tachyon's physical energy-momentum is
//! mu c^2 times family c: E = s' mu c^2 / D, p = s' mu w / D.
//!
//! The direction s is the tachyon's velocity direction in the frame where it
//! moves infinitely fast; that frame's velocity V(w, s) obeys w.V = c^2 and
//! |V| < c. Boosting past the boundary (w.V > c^2) flips s' = sgn(s.w): the
//! tachyon turns into an anti-tachyon. Under boosts s precesses by the
//! Wigner-Thomas rotation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lorentz::{boost_components, gamma, velocity_compose, ComposedVelocity};
use crate::vec3::{Mat3, Vec3};

pub use crate::lorentz::ComposedVelocity as Composed;

/// Which of the four covariant families a four-vector belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    TimelikeMassive,
    SpacelikeS,
    Tachyon,
    TachyonDual,
}

/// A dimensionless covariant four-vector with its family tag.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CovariantFourVector {
    pub a0: f64,
    pub a: Vec3,
    pub family: Family,
}

impl CovariantFourVector {
    /// Minkowski norm (A0)^2 - A^2; +1 or -1 for the families as printed.
    pub fn norm(&self) -> f64 {
        self.a0 * self.a0 - self.a.norm_sq()
    }
}

/// A subluminal particle: mass and 3-velocity with |v| < c.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MassiveState {
    pub m: f64,
    pub v: Vec3,
}

impl MassiveState {
    pub fn validate(&self, c: f64) -> Result<()> {
        if !(self.v.norm() < c) {
            return Err(Error::NotSubluminal { v: self.v.norm(), c });
        }
        if !(self.m > 0.0 && self.m.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "m",
                value: self.m,
                reason: "mass must be finite and positive",
            });
        }
        Ok(())
    }
}

/// A tachyon: mass parameter mu, velocity w with |w| > c, and unit direction
/// s (a vector or a pseudo-vector, which only matters under P and T).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TachyonState {
    pub mu: f64,
    pub w: Vec3,
    pub s: Vec3,
    #[serde(default)]
    pub pseudo: bool,
}

impl TachyonState {
    pub fn new(mu: f64, w: Vec3, s: Vec3, pseudo: bool, c: f64) -> Result<Self> {
        let st = TachyonState { mu, w, s, pseudo };
        st.validate(c, crate::units::DEFAULT_TOL)?;
        Ok(st)
    }

    pub fn validate(&self, c: f64, tol: f64) -> Result<()> {
        if !(self.mu > 0.0 && self.mu.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "mu",
                value: self.mu,
                reason: "mass parameter must be finite and positive",
            });
        }
        if !(self.w.norm() > c) {
            return Err(Error::NotSuperluminal { w: self.w.norm(), c });
        }
        if (self.s.norm() - 1.0).abs() > tol.max(1e-9) {
            return Err(Error::InvalidParameter {
                name: "s",
                value: self.s.norm(),
                reason: "direction must be a unit vector",
            });
        }
        let lhs = self.w.norm_sq() - c * c;
        let sw = self.s.dot(self.w);
        if !(lhs < sw * sw) {
            return Err(Error::ConstraintViolated { lhs, rhs: sw * sw });
        }
        Ok(())
    }

    /// Helicity parameter s' = sgn(s.w); the constraint keeps s.w nonzero.
    pub fn helicity(&self) -> i8 {
        if self.s.dot(self.w) >= 0.0 {
            1
        } else {
            -1
        }
    }
}

/// Family a, the timelike massive four-vector (gamma, gamma v/c).
pub fn four_vector_massive(v: Vec3, c: f64) -> Result<CovariantFourVector> {
    let g = gamma(v.norm(), c)?;
    Ok(CovariantFourVector { a0: g, a: v * (g / c), family: Family::TimelikeMassive })
}

/// Family b, the spacelike four-vector built from a subluminal velocity and a
/// unit direction: (gamma s.v/c, s + (gamma-1)(s.v/v^2) v).
pub fn four_vector_spacelike(v: Vec3, s: Vec3, c: f64) -> Result<CovariantFourVector> {
    let g = gamma(v.norm(), c)?;
    let v2 = v.norm_sq();
    let a = if v2 == 0.0 { s } else { s + v * ((g - 1.0) * (s.dot(v) / v2)) };
    Ok(CovariantFourVector { a0: g * s.dot(v) / c, a, family: Family::SpacelikeS })
}

/// Family c, the tachyon four-vector (s'/D, s' (w/c)/D) with D =
/// sqrt(w^2/c^2 - 1). mu c^2 times this is the energy-momentum.
pub fn four_vector_tachyon(st: &TachyonState, c: f64) -> Result<CovariantFourVector> {
    st.validate(c, crate::units::DEFAULT_TOL)?;
    let d = (st.w.norm_sq() / (c * c) - 1.0).sqrt();
    let sgn = st.helicity() as f64;
    Ok(CovariantFourVector { a0: sgn / d, a: st.w * (sgn / (c * d)), family: Family::Tachyon })
}

/// Family d, the dual timelike four-vector of a tachyon state. Equals family
/// a evaluated at the infinite-velocity frame velocity V(w, s).
pub fn four_vector_tachyon_dual(st: &TachyonState, c: f64) -> Result<CovariantFourVector> {
    st.validate(c, crate::units::DEFAULT_TOL)?;
    let d = (st.w.norm_sq() / (c * c) - 1.0).sqrt();
    let abs_sw = st.s.dot(st.w).abs() / c;
    let sgn = st.helicity() as f64;
    let denom = abs_sw - d;
    let a0 = (st.w.norm_sq() / (c * c) / d - abs_sw) / denom;
    let a = (st.w * (1.0 / (c * d)) - st.s * sgn) / denom;
    Ok(CovariantFourVector { a0, a, family: Family::TachyonDual })
}

/// Physical energy-momentum of a tachyon: E = s' mu c^2 / D, p = s' mu w / D.
pub fn tachyon_energy_momentum(st: &TachyonState, c: f64) -> Result<(f64, Vec3)> {
    let fv = four_vector_tachyon(st, c)?;
    Ok((st.mu * c * c * fv.a0, fv.a * (st.mu * c)))
}

/// Physical energy-momentum of a massive particle: (m gamma c^2, m gamma v).
pub fn massive_energy_momentum(m: f64, v: Vec3, c: f64) -> Result<(f64, Vec3)> {
    let g = gamma(v.norm(), c)?;
    Ok((m * g * c * c, v * (m * g)))
}

/// Boost a four-vector into the frame moving with velocity V; the family tag
/// is carried through unchanged.
pub fn boost_four_vector(
    fv: &CovariantFourVector,
    v: Vec3,
    c: f64,
) -> Result<CovariantFourVector> {
    let (a0, a) = boost_components(fv.a0, fv.a, v, c)?;
    Ok(CovariantFourVector { a0, a, family: fv.family })
}

/// Transformed helicity sign: s'' = s' sgn(c^2 - w.V). Undefined within
/// tol * c^2 of the boundary w.V = c^2, where the tachyon moves infinitely
/// fast and the sign changes hands.
pub fn helicity_transform(st: &TachyonState, v: Vec3, c: f64, tol: f64) -> Result<i8> {
    let wv = st.w.dot(v);
    let c2 = c * c;
    if (wv - c2).abs() <= tol * c2 {
        return Err(Error::HelicityUndefined { wv, c2 });
    }
    Ok(if wv < c2 { st.helicity() } else { -st.helicity() })
}

/// Velocity of the frame in which the tachyon moves infinitely fast:
///
///   V = c^2 (w - sgn(s.w) sqrt(w^2-c^2) s) / (w^2 - |s.w| sqrt(w^2-c^2)).
///
/// Satisfies w.V = c^2 and |V| < c; the state constraint keeps the
/// denominator positive.
pub fn infinite_velocity_frame(st: &TachyonState, c: f64) -> Result<Vec3> {
    st.validate(c, crate::units::DEFAULT_TOL)?;
    let root = (st.w.norm_sq() - c * c).sqrt();
    let sgn = st.helicity() as f64;
    let numer = st.w - st.s * (sgn * root);
    let denom = st.w.norm_sq() - st.s.dot(st.w).abs() * root;
    Ok(numer * (c * c / denom))
}

/// The rotation R equivalent to the boost chain L(v') L(V) L(-v) with
/// v' the composition of v and V. R acts on the spatial part only and is
/// orthogonal with det +1; it is the identity for collinear v and V.
pub fn wigner_rotation(v: Vec3, big_v: Vec3, c: f64) -> Result<Mat3> {
    let v_prime = match velocity_compose(v, big_v, c, 0.0)? {
        ComposedVelocity::Finite(u) => u,
        ComposedVelocity::Infinite { .. } => {
            return Err(Error::SingularVelocity { v: v.norm(), k: 1.0 / (c * c) })
        }
    };
    let mut cols = [Vec3::ZERO; 3];
    for (i, col) in cols.iter_mut().enumerate() {
        let mut e = Vec3::ZERO;
        e.0[i] = 1.0;
        let (b0, b) = boost_components(0.0, e, -v, c)?;
        let (b0, b) = boost_components(b0, b, big_v, c)?;
        let (_, b) = boost_components(b0, b, v_prime, c)?;
        *col = b;
    }
    Ok(Mat3::from_columns(cols[0], cols[1], cols[2]))
}

/// Transformed direction parameter of a tachyon state:
/// s_new = L(compose(V(w,s), V)) L(V) L(-V(w,s)) s, a pure rotation of s.
pub fn s_transform(st: &TachyonState, big_v: Vec3, c: f64) -> Result<Vec3> {
    let v0 = infinite_velocity_frame(st, c)?;
    let r = wigner_rotation(v0, big_v, c)?;
    Ok(r.apply(st.s))
}

/// Boost a whole tachyon state: w composes, s rotates. Fails with the
/// distinct infinite-velocity signal at w.V = c^2 (within tol * c^2), where
/// no finite-velocity state describes the tachyon.
pub fn transform_tachyon_state(
    st: &TachyonState,
    big_v: Vec3,
    c: f64,
    tol: f64,
) -> Result<TachyonState> {
    let w_new = match velocity_compose(st.w, big_v, c, tol * c * c)? {
        ComposedVelocity::Finite(u) => u,
        ComposedVelocity::Infinite { .. } => {
            return Err(Error::HelicityUndefined { wv: st.w.dot(big_v), c2: c * c })
        }
    };
    let s_new = s_transform(st, big_v, c)?;
    Ok(TachyonState { mu: st.mu, w: w_new, s: s_new, pseudo: st.pseudo })
}

/// Result of the unique decay m -> m + tachyon(mu).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UniqueDecay {
    /// Speed of the decaying particle; it reverses to -v after emission.
    pub v: f64,
    /// Momentum of the emitted, infinitely fast tachyon.
    pub tachyon_momentum: f64,
}

/// Solve the unique decay: a particle of mass m moving at speed v reverses
/// its velocity and emits an infinitely fast tachyon of mass parameter mu
/// with energy 0 and momentum mu c along the initial motion. Momentum
/// balance fixes v by 2 m v gamma(v) = mu c.
///
/// Bisection on (0, c) to 1e-12 * c; the closed form
/// v = mu c / sqrt(4 m^2 + mu^2) serves as a cross-check in the tests.
pub fn solve_unique_decay(m: f64, mu: f64, c: f64) -> Result<UniqueDecay> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "m",
            value: m,
            reason: "mass must be finite and positive",
        });
    }
    if !(mu >= 0.0 && mu.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "mu",
            value: mu,
            reason: "mass parameter must be finite and non-negative",
        });
    }
    let target = mu * c;
    let f = |v: f64| 2.0 * m * v / (1.0 - v * v / (c * c)).sqrt() - target;
    let mut lo = 0.0;
    let mut hi = 0.5 * c;
    let mut guard = 0;
    while f(hi) < 0.0 {
        lo = hi;
        hi = 0.5 * (hi + c);
        guard += 1;
        if guard > 300 {
            break;
        }
    }
    while hi - lo > 1e-12 * c {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(UniqueDecay { v: 0.5 * (lo + hi), tachyon_momentum: mu * c })
}

/// One particle in a process: subluminal, superluminal, or the infinite-
/// velocity limit where the energy vanishes and the momentum floor mu c is
/// reached. Tachyon entries carry the helicity sign explicitly so the
/// discrete symmetries can act on it by rule.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Particle {
    Massive { m: f64, v: Vec3 },
    Tachyon { mu: f64, w: Vec3, helicity: i8 },
    InfiniteTachyon { mu: f64, direction: Vec3, helicity: i8 },
}

impl Particle {
    /// Energy and momentum of the particle.
    pub fn energy_momentum(&self, c: f64) -> Result<(f64, Vec3)> {
        match *self {
            Particle::Massive { m, v } => massive_energy_momentum(m, v, c),
            Particle::Tachyon { mu, w, helicity } => {
                if !(w.norm() > c) {
                    return Err(Error::NotSuperluminal { w: w.norm(), c });
                }
                let d = (w.norm_sq() / (c * c) - 1.0).sqrt();
                let sgn = helicity as f64;
                Ok((sgn * mu * c * c / d, w * (sgn * mu / d)))
            }
            Particle::InfiniteTachyon { mu, direction, helicity } => {
                let n = direction
                    .normalized()
                    .ok_or(Error::InvalidParameter {
                        name: "direction",
                        value: 0.0,
                        reason: "zero direction",
                    })?;
                Ok((0.0, n * (helicity as f64 * mu * c)))
            }
        }
    }

    fn reverse_motion(&self) -> Particle {
        match *self {
            Particle::Massive { m, v } => Particle::Massive { m, v: -v },
            Particle::Tachyon { mu, w, helicity } => Particle::Tachyon { mu, w: -w, helicity },
            Particle::InfiniteTachyon { mu, direction, helicity } => {
                Particle::InfiniteTachyon { mu, direction: -direction, helicity }
            }
        }
    }

    fn scale_helicity(&self, sign: i8) -> Particle {
        match *self {
            Particle::Massive { .. } => *self,
            Particle::Tachyon { mu, w, helicity } => {
                Particle::Tachyon { mu, w, helicity: sign * helicity }
            }
            Particle::InfiniteTachyon { mu, direction, helicity } => {
                Particle::InfiniteTachyon { mu, direction, helicity: sign * helicity }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flow {
    Incoming,
    Outgoing,
}

impl Flow {
    fn swapped(self) -> Flow {
        match self {
            Flow::Incoming => Flow::Outgoing,
            Flow::Outgoing => Flow::Incoming,
        }
    }
}

/// A flat scattering/decay process: tagged states, no vertex structure.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProcessEntry {
    pub particle: Particle,
    pub flow: Flow,
}

pub type Process = Vec<ProcessEntry>;

/// The discrete symmetry operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymmetryOp {
    P,
    T,
    C,
    CPT,
}

/// How the helicity sign responds to each operation. Two consistent rule
/// sets exist: the helicity-like one (T: +1, P: -1, s a pseudo-vector) and
/// the alternative (T: -1, P: +1, s a vector); C always flips.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryRuleSet {
    pub t_action: i8,
    pub p_action: i8,
    pub c_action: i8,
}

impl SymmetryRuleSet {
    pub fn helicity_like() -> Self {
        SymmetryRuleSet { t_action: 1, p_action: -1, c_action: -1 }
    }

    pub fn alternative() -> Self {
        SymmetryRuleSet { t_action: -1, p_action: 1, c_action: -1 }
    }

    pub fn cpt_product(&self) -> i8 {
        self.t_action * self.p_action * self.c_action
    }
}

/// Apply a discrete symmetry to a process. P reverses all motion (spatial
/// inversion), T reverses motion and swaps incoming/outgoing, C touches only
/// the helicity sign; each also rescales the helicity per the rule set.
pub fn apply_discrete_symmetry(
    process: &[ProcessEntry],
    op: SymmetryOp,
    rules: &SymmetryRuleSet,
) -> Process {
    process
        .iter()
        .map(|entry| match op {
            SymmetryOp::P => ProcessEntry {
                particle: entry.particle.reverse_motion().scale_helicity(rules.p_action),
                flow: entry.flow,
            },
            SymmetryOp::T => ProcessEntry {
                particle: entry.particle.reverse_motion().scale_helicity(rules.t_action),
                flow: entry.flow.swapped(),
            },
            SymmetryOp::C => ProcessEntry {
                particle: entry.particle.scale_helicity(rules.c_action),
                flow: entry.flow,
            },
            SymmetryOp::CPT => ProcessEntry {
                particle: entry.particle.scale_helicity(rules.cpt_product()),
                flow: entry.flow.swapped(),
            },
        })
        .collect()
}

/// Conservation residual of a process: max of the energy imbalance and the
/// largest momentum-component imbalance between incoming and outgoing sides.
pub fn conservation_residual(process: &[ProcessEntry], c: f64) -> Result<f64> {
    let mut e_in = 0.0;
    let mut e_out = 0.0;
    let mut p_in = Vec3::ZERO;
    let mut p_out = Vec3::ZERO;
    for entry in process {
        let (e, p) = entry.particle.energy_momentum(c)?;
        match entry.flow {
            Flow::Incoming => {
                e_in += e;
                p_in = p_in + p;
            }
            Flow::Outgoing => {
                e_out += e;
                p_out = p_out + p;
            }
        }
    }
    let dp = p_in - p_out;
    let dp_max = dp.0.iter().fold(0.0f64, |acc, comp| acc.max(comp.abs()));
    Ok((e_in - e_out).abs().max(dp_max))
}

/// Assemble the unique-decay process along `direction`: incoming massive
/// particle at +v, outgoing massive particle at -v plus the infinitely fast
/// tachyon with helicity +1 moving along +direction.
pub fn unique_decay_process(m: f64, mu: f64, direction: Vec3, c: f64) -> Result<Process> {
    let n = direction.normalized().ok_or(Error::InvalidParameter {
        name: "direction",
        value: 0.0,
        reason: "zero direction",
    })?;
    let decay = solve_unique_decay(m, mu, c)?;
    Ok(vec![
        ProcessEntry {
            particle: Particle::Massive { m, v: n * decay.v },
            flow: Flow::Incoming,
        },
        ProcessEntry {
            particle: Particle::Massive { m, v: n * (-decay.v) },
            flow: Flow::Outgoing,
        },
        ProcessEntry {
            particle: Particle::InfiniteTachyon { mu, direction: n, helicity: 1 },
            flow: Flow::Outgoing,
        },
    ])
}
