//! Shared boost primitives for four-vectors in 3+1 dimensions.
//!
//! A boost with velocity V (|V| < c) maps components (A0, A) to
//!
//!   A0' = gamma * (A0 - A.V / c)
//!   A'  = A - (A.V/V^2) V + gamma * ((A.V/V^2) V - A0 V / c)
//!
//! where gamma = 1/sqrt(1 - V^2/c^2). The component parallel to V mixes with
//! A0; the transverse part passes through unchanged.

use crate::error::{Error, Result};
use crate::vec3::Vec3;

/// gamma factor for a subluminal speed. Errors if |v| >= c.
pub fn gamma(v: f64, c: f64) -> Result<f64> {
    if !(v.abs() < c) {
        return Err(Error::NotSubluminal { v: v.abs(), c });
    }
    Ok(1.0 / (1.0 - v * v / (c * c)).sqrt())
}

/// Boost the components (a0, a) of a four-vector into the frame moving
/// with velocity `v`. Dimensionless components: a0 pairs with a directly,
/// so the velocity enters only through v/c.
pub fn boost_components(a0: f64, a: Vec3, v: Vec3, c: f64) -> Result<(f64, Vec3)> {
    let v2 = v.norm_sq();
    if v2 == 0.0 {
        return Ok((a0, a));
    }
    let g = gamma(v.norm(), c)?;
    let av = a.dot(v);
    let par = v * (av / v2);
    let a0p = g * (a0 - av / c);
    let ap = a - par + (par - v * (a0 / c)) * g;
    Ok((a0p, ap))
}

/// Outcome of relativistic velocity composition: the boosted velocity is
/// finite, or the denominator 1 - v.V/c^2 vanished and the velocity becomes
/// infinite along a definite direction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ComposedVelocity {
    Finite(Vec3),
    Infinite { direction: Vec3 },
}

/// Velocity of an object moving with `v`, seen from the frame moving with
/// `big_v` (|big_v| < c). `v` itself may exceed c.
///
/// When v.V = c^2 the denominator vanishes and the object moves at infinite
/// velocity in the new frame; that is reported as a distinct outcome, not an
/// error. `tol` sets the half-width of the boundary band in units of c^2.
pub fn velocity_compose(v: Vec3, big_v: Vec3, c: f64, tol: f64) -> Result<ComposedVelocity> {
    let bv2 = big_v.norm_sq();
    if bv2 == 0.0 {
        return Ok(ComposedVelocity::Finite(v));
    }
    let g = gamma(big_v.norm(), c)?;
    let vdot = v.dot(big_v);
    let par = big_v * (vdot / bv2);
    let numer = (v - par) * (1.0 / g) - big_v + par;
    let denom = 1.0 - vdot / (c * c);
    if denom.abs() <= tol {
        let dir = numer
            .normalized()
            .ok_or(Error::SingularVelocity { v: 0.0, k: 0.0 })?;
        return Ok(ComposedVelocity::Infinite { direction: dir });
    }
    Ok(ComposedVelocity::Finite(numer / denom))
}
