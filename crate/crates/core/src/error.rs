//! Library-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The boost denominator 1 − K·V² vanished: A(V) is undefined there.
    #[error("singular boost: 1 - K*V^2 = 0 at V = {v}, K = {k}")]
    SingularVelocity { v: f64, k: f64 },

    /// A subluminal operation received |v| >= c.
    #[error("velocity magnitude {v} is not below c = {c}")]
    NotSubluminal { v: f64, c: f64 },

    /// A superluminal operation received |w| <= c.
    #[error("velocity magnitude {w} is not above c = {c}")]
    NotSuperluminal { w: f64, c: f64 },

    /// The reference-direction constraint w^2 - c^2 < (s.w)^2 failed.
    #[error("reference direction too transverse: w^2 - c^2 = {lhs} >= (s.w)^2 = {rhs}")]
    ConstraintViolated { lhs: f64, rhs: f64 },

    /// Helicity sign change is undefined on the boundary w.V = c^2.
    #[error("helicity undefined: w.V = {wv} within tolerance of c^2 = {c2}")]
    HelicityUndefined { wv: f64, c2: f64 },

    /// The lattice enumeration would exceed the configured path cap.
    #[error("path count {count} exceeds cap {cap}")]
    PathCapExceeded { count: u128, cap: u128 },

    /// No monotone lattice path connects source to sink.
    #[error("sink unreachable: need net displacement {net} in {steps} steps")]
    UnreachableSink { net: i64, steps: u64 },

    /// A path's segment list is empty or its vertices do not chain.
    #[error("broken path chain: {reason}")]
    BrokenPathChain { reason: String },

    /// Physical constants must be finite and positive.
    #[error("invalid units: c = {c}, hbar = {hbar}")]
    InvalidUnits { c: f64, hbar: f64 },

    /// A scalar parameter was outside its domain.
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
