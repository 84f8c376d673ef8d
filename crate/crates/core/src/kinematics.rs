//! Linear frame transformations for an arbitrary metric constant K.
//!
//! The most general linear transformation between inertial frames that fixes
//! the origin and reduces to the identity at V=0 is
//!
//!   x' = A(V) (x - V t),    t' = A(V) (t - K V x),
//!
//! with A(V) = 1/sqrt(1 - K V^2). The constant K selects the kinematics:
//! K = 0 is Galilean, K = 1/c^2 Lorentzian, K < 0 a Euclidean rotation.
//! The quadratic form t^2 - K r^2 is invariant.
//!
//! For K = 1/c^2 the same functional equation admits a second, antisymmetric
//! branch defined for |W| > c,
//!
//!   A(W) = +/- (W/|W|) / sqrt(W^2/c^2 - 1),
//!
//! which maps a subluminal observer's (t, x) to one spatial coordinate chi'
//! and a temporal coordinate tau'_x of the superluminal observer; the
//! transverse coordinates turn temporal as well, c tau'_y = +/- y and
//! c tau'_z = +/- z. The interval identity becomes
//! c^2 dt^2 - dr^2 = dchi'^2 - c^2 dtau'^2.
//!
//! The limit |W| -> infinity is the plain relabeling chi = c t, c tau = r.
//! A finite superluminal boost factors through it: it equals the infinite
//! relabeling composed with the subluminal Lorentz boost of velocity c^2/W,
//! which is how the 3-dimensional entry point here is implemented.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lorentz::boost_components;
use crate::vec3::Vec3;

/// Overall sign of the superluminal transformation. The two choices are
/// physically equivalent; `Minus` is the default and is the branch produced
/// by composing the infinite-velocity relabeling with a subluminal boost.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignChoice {
    Plus,
    #[default]
    Minus,
}

impl SignChoice {
    pub fn factor(self) -> f64 {
        match self {
            SignChoice::Plus => 1.0,
            SignChoice::Minus => -1.0,
        }
    }
}

/// An event in 3+1 dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpacetimeEvent {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SpacetimeEvent {
    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        SpacetimeEvent { t, x, y, z }
    }

    /// Purely longitudinal event, y = z = 0.
    pub fn on_axis(t: f64, x: f64) -> Self {
        SpacetimeEvent { t, x, y: 0.0, z: 0.0 }
    }

    pub fn r(&self) -> Vec3 {
        Vec3::new(self.x, self.y, self.z)
    }

    pub fn with_r(t: f64, r: Vec3) -> Self {
        SpacetimeEvent { t, x: r.0[0], y: r.0[1], z: r.0[2] }
    }

    pub fn is_finite(&self) -> bool {
        self.t.is_finite() && self.r().is_finite()
    }
}

/// Coordinates of an event in a superluminal frame: one spatial coordinate
/// chi and a three-component temporal vector tau = (tau_x, tau_y, tau_z).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuperluminalCoords {
    pub chi: f64,
    pub tau: Vec3,
}

impl SuperluminalCoords {
    pub fn new(chi: f64, tau: Vec3) -> Self {
        SuperluminalCoords { chi, tau }
    }
}

/// Velocity regime of a boost.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Subluminal,
    Superluminal,
    Infinite,
}

/// A collinear boost along the x axis with metric constant K.
///
/// For the superluminal regime K must be positive; the light speed entering
/// the chi/tau formulas is 1/sqrt(K).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneralBoost {
    pub k: f64,
    pub v: f64,
    pub regime: Regime,
    pub sign_choice: SignChoice,
    pub transverse_sign_y: f64,
    pub transverse_sign_z: f64,
}

impl GeneralBoost {
    /// Subluminal boost: requires K V^2 < 1.
    pub fn subluminal(k: f64, v: f64) -> Result<Self> {
        let kv2 = k * v * v;
        if kv2 == 1.0 {
            return Err(Error::SingularVelocity { v, k });
        }
        if kv2 > 1.0 {
            return Err(Error::NotSubluminal { v: v.abs(), c: 1.0 / k.sqrt() });
        }
        Ok(GeneralBoost {
            k,
            v,
            regime: Regime::Subluminal,
            sign_choice: SignChoice::default(),
            transverse_sign_y: 1.0,
            transverse_sign_z: 1.0,
        })
    }

    /// Superluminal boost with velocity `w`, |w| > c, and K = 1/c^2.
    pub fn superluminal(w: f64, c: f64, sign_choice: SignChoice) -> Result<Self> {
        if !(w.abs() > c) {
            return Err(Error::NotSuperluminal { w: w.abs(), c });
        }
        Ok(GeneralBoost {
            k: 1.0 / (c * c),
            v: w,
            regime: Regime::Superluminal,
            sign_choice,
            transverse_sign_y: 1.0,
            transverse_sign_z: 1.0,
        })
    }

    /// Light speed implied by the metric constant; only meaningful for K > 0.
    pub fn light_speed(&self) -> f64 {
        1.0 / self.k.sqrt()
    }
}

/// The stretch coefficient A of the transformation.
///
/// Subluminal inputs (K V^2 < 1) give 1/sqrt(1 - K V^2); superluminal inputs
/// (K V^2 > 1, K > 0) give sign * (V/|V|) / sqrt(K V^2 - 1). K V^2 = 1 is
/// singular: no inertial frame rides the light front.
pub fn coefficient_a(k: f64, v: f64, sign: SignChoice) -> Result<f64> {
    let d = 1.0 - k * v * v;
    if d == 0.0 {
        return Err(Error::SingularVelocity { v, k });
    }
    if d > 0.0 {
        Ok(1.0 / d.sqrt())
    } else {
        Ok(sign.factor() * v.signum() / (-d).sqrt())
    }
}

/// Apply a subluminal boost: x' = A(x - Vt), t' = A(t - KVx); y, z unchanged.
pub fn boost_subluminal(e: &SpacetimeEvent, b: &GeneralBoost) -> Result<SpacetimeEvent> {
    if b.regime != Regime::Subluminal || b.k * b.v * b.v >= 1.0 {
        let kv2 = b.k * b.v * b.v;
        if kv2 == 1.0 {
            return Err(Error::SingularVelocity { v: b.v, k: b.k });
        }
        if kv2 > 1.0 {
            return Err(Error::NotSubluminal { v: b.v.abs(), c: b.light_speed() });
        }
    }
    let a = coefficient_a(b.k, b.v, b.sign_choice)?;
    Ok(SpacetimeEvent {
        t: a * (e.t - b.k * b.v * e.x),
        x: a * (e.x - b.v * e.t),
        y: e.y,
        z: e.z,
    })
}

/// Inverse of [`boost_subluminal`]: the boost with reversed velocity.
pub fn boost_subluminal_inverse(e: &SpacetimeEvent, b: &GeneralBoost) -> Result<SpacetimeEvent> {
    let back = GeneralBoost { v: -b.v, ..*b };
    boost_subluminal(e, &back)
}

/// Apply a collinear superluminal boost:
///
///   chi'  = sign (W/|W|) (x - W t)      / sqrt(W^2/c^2 - 1),
///   tau'x = sign (W/|W|) (t - W x/c^2)  / sqrt(W^2/c^2 - 1),
///   c tau'y = transverse_sign_y * y,  c tau'z = transverse_sign_z * z.
pub fn boost_superluminal(e: &SpacetimeEvent, b: &GeneralBoost) -> Result<SuperluminalCoords> {
    if b.k <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "K",
            value: b.k,
            reason: "superluminal regime needs K > 0",
        });
    }
    let c = b.light_speed();
    let w = b.v;
    if !(w.abs() > c) {
        return Err(Error::NotSuperluminal { w: w.abs(), c });
    }
    let a = coefficient_a(b.k, w, b.sign_choice)?;
    let chi = a * (e.x - w * e.t);
    let tau_x = a * (e.t - w * e.x / (c * c));
    let tau_y = b.transverse_sign_y * e.y / c;
    let tau_z = b.transverse_sign_z * e.z / c;
    Ok(SuperluminalCoords::new(chi, Vec3::new(tau_x, tau_y, tau_z)))
}

/// Invert a collinear superluminal boost:
///
///   x = -sign (W/|W|) (chi + W tau_x)      / sqrt(W^2/c^2 - 1),
///   t = -sign (W/|W|) (tau_x + W chi/c^2)  / sqrt(W^2/c^2 - 1),
///
/// with the transverse coordinates relabeled back, y = transverse_sign_y
/// * c tau_y (the signs are their own inverses).
pub fn boost_superluminal_inverse(
    s: &SuperluminalCoords,
    b: &GeneralBoost,
) -> Result<SpacetimeEvent> {
    if b.k <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "K",
            value: b.k,
            reason: "superluminal regime needs K > 0",
        });
    }
    let c = b.light_speed();
    let w = b.v;
    if !(w.abs() > c) {
        return Err(Error::NotSuperluminal { w: w.abs(), c });
    }
    let a = coefficient_a(b.k, w, b.sign_choice)?;
    let x = -a * (s.chi + w * s.tau.0[0]);
    let t = -a * (s.tau.0[0] + w * s.chi / (c * c));
    let y = b.transverse_sign_y * c * s.tau.0[1];
    let z = b.transverse_sign_z * c * s.tau.0[2];
    Ok(SpacetimeEvent { t, x, y, z })
}

/// The infinite-velocity relabeling chi = c t, tau = r / c.
pub fn infinite_boost(e: &SpacetimeEvent, c: f64) -> SuperluminalCoords {
    SuperluminalCoords::new(c * e.t, e.r() / c)
}

/// Inverse of [`infinite_boost`]: t = chi / c, r = c tau.
pub fn infinite_boost_inverse(s: &SuperluminalCoords, c: f64) -> SpacetimeEvent {
    SpacetimeEvent::with_r(s.chi / c, s.tau * c)
}

/// Invariant quadratic form between two events, c^2 dt^2 - dr^2.
pub fn interval(a: &SpacetimeEvent, b: &SpacetimeEvent, c: f64) -> f64 {
    let dt = b.t - a.t;
    let dr = b.r() - a.r();
    c * c * dt * dt - dr.norm_sq()
}

/// Interval between two events in superluminal coordinates,
/// dchi^2 - c^2 dtau^2; defined so that it equals [`interval`] of the
/// originating events.
pub fn interval_superluminal(a: &SuperluminalCoords, b: &SuperluminalCoords, c: f64) -> f64 {
    let dchi = b.chi - a.chi;
    let dtau = b.tau - a.tau;
    dchi * dchi - c * c * dtau.norm_sq()
}

/// Quadratic form t^2 - K x^2 preserved by the general subluminal boost.
pub fn k_form(e: &SpacetimeEvent, k: f64) -> f64 {
    e.t * e.t - k * e.x * e.x
}

/// Length of a superluminal object in the stationary frame:
/// dx = sign (w/|w|) dchi sqrt(w^2/c^2 - 1), where dchi is the rest length.
pub fn superluminal_length(delta_chi: f64, w: f64, c: f64, sign: SignChoice) -> Result<f64> {
    if !(w.abs() > c) {
        return Err(Error::NotSuperluminal { w: w.abs(), c });
    }
    let d = (w * w / (c * c) - 1.0).sqrt();
    Ok(sign.factor() * w.signum() * delta_chi * d)
}

/// Stationary-frame duration of a superluminal clock's proper interval:
/// dt = -sign (w/|w|) dtau_x / sqrt(w^2/c^2 - 1); the transverse temporal
/// coordinates do not advance, dtau_y = dtau_z = 0.
pub fn superluminal_time_flow(delta_tau_x: f64, w: f64, c: f64, sign: SignChoice) -> Result<f64> {
    if !(w.abs() > c) {
        return Err(Error::NotSuperluminal { w: w.abs(), c });
    }
    let d = (w * w / (c * c) - 1.0).sqrt();
    Ok(-sign.factor() * w.signum() * delta_tau_x / d)
}

/// Collinear composition of two boost velocities with the same K:
/// V = (V1 + V2) / (1 + K V1 V2).
pub fn compose_velocities_collinear(k: f64, v1: f64, v2: f64) -> Result<f64> {
    let denom = 1.0 + k * v1 * v2;
    if denom == 0.0 {
        return Err(Error::SingularVelocity { v: v1 + v2, k });
    }
    Ok((v1 + v2) / denom)
}

/// Lorentz boost of an event by a 3-velocity V, |V| < c (K = 1/c^2 fixed).
pub fn boost_event_lorentz(e: &SpacetimeEvent, v: Vec3, c: f64) -> Result<SpacetimeEvent> {
    let (ct, r) = boost_components(c * e.t, e.r(), v, c)?;
    Ok(SpacetimeEvent::with_r(ct / c, r))
}

/// Superluminal boost for a full 3-velocity W, |W| > c: the infinite-velocity
/// relabeling composed with the subluminal Lorentz boost of velocity
/// V = c^2 W / W^2. Reduces to [`boost_superluminal`] with the minus sign and
/// +1 transverse signs when W is along x.
pub fn boost_superluminal_3d(e: &SpacetimeEvent, w: Vec3, c: f64) -> Result<SuperluminalCoords> {
    let w2 = w.norm_sq();
    if !(w2 > c * c) {
        return Err(Error::NotSuperluminal { w: w2.sqrt(), c });
    }
    let v = w * (c * c / w2);
    let mid = boost_event_lorentz(e, v, c)?;
    Ok(infinite_boost(&mid, c))
}
