//! Unit system shared by all computations.
//!
//! Everything defaults to natural units c = ħ = 1, but both constants stay
//! explicit so dimensional factors appear where the formulas put them.

use serde::{Deserialize, Serialize};

/// Default absolute tolerance for residual checks and regime boundaries.
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Units {
    /// Speed of light.
    pub c: f64,
    /// Reduced Planck constant.
    pub hbar: f64,
}

impl Default for Units {
    fn default() -> Self {
        Units { c: 1.0, hbar: 1.0 }
    }
}

impl Units {
    pub fn new(c: f64, hbar: f64) -> Result<Self, crate::Error> {
        if !(c.is_finite() && c > 0.0 && hbar.is_finite() && hbar > 0.0) {
            return Err(crate::Error::InvalidUnits { c, hbar });
        }
        Ok(Units { c, hbar })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_units_by_default() {
        let u = Units::default();
        assert_eq!(u.c, 1.0);
        assert_eq!(u.hbar, 1.0);
    }

    #[test]
    fn rejects_nonpositive_constants() {
        assert!(Units::new(0.0, 1.0).is_err());
        assert!(Units::new(1.0, -2.0).is_err());
        assert!(Units::new(f64::NAN, 1.0).is_err());
    }
}
