//! Kinematics and path-amplitude toolkit for extended relativity.
//!
//! The crate has four layers:
//!
//! * [`kinematics`]: linear frame transformations for an arbitrary metric
//!   constant K (Galilean K=0, Lorentzian K=1/c², Euclidean K<0), the
//!   superluminal and infinite-velocity boosts, intervals, and the
//!   superluminal length/time-flow formulas.
//! * [`fourmomentum`]: the four covariant four-vector families, their
//!   transformation laws (velocity composition, Wigner-Thomas rotation,
//!   helicity sign rule, infinite-velocity frame), tachyon energy-momentum,
//!   the unique decay, and discrete P/T/C symmetry actions.
//! * [`amplitudes`]: phases of piecewise-inertial spacetime paths, the
//!   probability-like invariant P and the complex amplitude built from n-path
//!   superpositions, interference geometry, and a lattice path sum.
//! * [`invariant`]: the power-sum machinery behind P: Newton's identity on
//!   pairwise phase sums, the Cauchy coefficient equation and its solution
//!   family, truncated reconstruction, and product closure.
//!
//! [`verify`] packages the randomized and exhaustive property suites that the
//! command-line front end exposes. All functions are pure; nothing here holds
//! shared mutable state.

// Guards are written as !(a < b) on purpose: they must fail closed when a
// NaN reaches them, and a >= b would silently pass one through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod amplitudes;
mod error;
pub mod fourmomentum;
pub mod invariant;
pub mod kinematics;
pub mod lorentz;
pub mod units;
pub mod vec3;
pub mod verify;

pub use error::{Error, Result};
pub use units::{Units, DEFAULT_TOL};
pub use vec3::{Mat3, Vec3};
