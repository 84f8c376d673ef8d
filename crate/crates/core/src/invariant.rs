//! Why the invariant has exponential form: the algebra behind it.
//!
//! Write a candidate invariant as a double power series in the path phases,
//! F(phi) = sum_k a_k^(n) E^(k)(phi), with the power sums
//! E^(k)(phi) = sum_i phi_i^k as the only symmetric, inversion-friendly
//! building blocks. Composition of independent path bundles turns power
//! sums of pairwise phase sums into binomial convolutions,
//!
//!   E^(t)(phi (+) xi) = sum_r C(t, r) E^(r)(phi) E^(t-r)(xi),
//!
//! and forcing the product law on the series coefficients gives the Cauchy
//! functional equation
//!
//!   k! s! a_k^(n) a_s^(m) = (k+s)! a_{k+s}^(nm),
//!
//! whose solution is a_k^(n) = n^(-A) alpha^k / k!. Resumming yields the
//! exponential invariant n^(-A) (sum e^(alpha phi))(sum e^(-alpha phi)):
//! geometric factors of e are not assumed, they are forced. This module
//! holds the integer-exact identity checks, the coefficient family with an
//! optional perturbation (to show the solution is rigid), truncated
//! series reconstructions of the invariant, and a generalized product of
//! exponential factors whose inversion symmetry requires paired exponents.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::amplitudes::{binomial, InvariantParams};

/// Power sum E^(k)(phi) = sum_i phi_i^k, with the empty-product convention
/// 0^0 = 1.
pub fn power_sum(k: u32, phases: &[f64]) -> f64 {
    phases.iter().map(|&p| p.powi(k as i32)).sum()
}

/// Integer power sum in i128 for exact identity checks.
pub fn power_sum_int(k: u32, phases: &[i64]) -> i128 {
    phases.iter().map(|&p| (p as i128).pow(k)).sum()
}

/// Exact residual of the binomial convolution identity at order `t`:
/// E^(t) of all pairwise sums minus sum_r C(t,r) E^(r)(phi) E^(t-r)(xi).
/// Zero for every integer grid; evaluated in i128 so there is no tolerance.
pub fn newton_identity_residual(t: u32, phi: &[i64], xi: &[i64]) -> i128 {
    let mut lhs: i128 = 0;
    for &a in phi {
        for &b in xi {
            lhs += ((a + b) as i128).pow(t);
        }
    }
    let mut rhs: i128 = 0;
    for r in 0..=t {
        let coeff = binomial(t as u64, r as u64).expect("binomial overflow") as i128;
        rhs += coeff * power_sum_int(r, phi) * power_sum_int(t - r, xi);
    }
    lhs - rhs
}

/// Factorial in u128; `None` above 34!.
pub fn factorial(k: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 2..=k as u128 {
        acc = acc.checked_mul(i)?;
    }
    Some(acc)
}

/// The series coefficient family a_k^(n) = n^(-A) (alpha^k / k! + eps).
///
/// With `perturbation` zero this is the exact solution of the Cauchy
/// relation; any nonzero eps breaks it at a level proportional to eps,
/// which is how rigidity is demonstrated.
#[derive(Clone, Copy, Debug)]
pub struct CoefficientFamily {
    pub alpha: Complex64,
    pub a_exp: f64,
    pub perturbation: f64,
}

impl CoefficientFamily {
    pub fn exact(alpha: Complex64, a_exp: f64) -> Self {
        CoefficientFamily { alpha, a_exp, perturbation: 0.0 }
    }

    pub fn perturbed(alpha: Complex64, a_exp: f64, eps: f64) -> Self {
        CoefficientFamily { alpha, a_exp, perturbation: eps }
    }

    pub fn coefficient(&self, n: u64, k: u32) -> Complex64 {
        let fk = factorial(k).expect("factorial overflow") as f64;
        (n as f64).powf(-self.a_exp) * (self.alpha.powu(k) / fk + self.perturbation)
    }

    /// Relative residual of k! s! a_k^(n) a_s^(m) = (k+s)! a_{k+s}^(nm).
    pub fn cauchy_residual(&self, n: u64, m: u64, k: u32, s: u32) -> f64 {
        let fk = factorial(k).expect("factorial overflow") as f64;
        let fs = factorial(s).expect("factorial overflow") as f64;
        let fks = factorial(k + s).expect("factorial overflow") as f64;
        let lhs = fk * fs * self.coefficient(n, k) * self.coefficient(m, s);
        let rhs = fks * self.coefficient(n * m, k + s);
        let scale = lhs.norm().max(rhs.norm()).max(f64::MIN_POSITIVE);
        (lhs - rhs).norm() / scale
    }
}

/// Reconstruct the invariant from truncated coefficient series:
/// n^(-A) (sum_{k<=K} alpha^k/k! E^(k)) (sum_{k<=K} (-alpha)^k/k! E^(k)),
/// real part. Converges to the exponential invariant as K grows when the
/// series converges (imaginary alpha); with real alpha of growing phases it
/// visibly runs away instead.
pub fn truncated_reconstruction(phases: &[f64], params: &InvariantParams, k_max: u32) -> f64 {
    let n = phases.len() as f64;
    let mut plus = Complex64::new(0.0, 0.0);
    let mut minus = Complex64::new(0.0, 0.0);
    let mut term_plus = Complex64::new(1.0, 0.0);
    let mut term_minus = Complex64::new(1.0, 0.0);
    for k in 0..=k_max {
        if k > 0 {
            term_plus *= params.alpha / k as f64;
            term_minus *= -params.alpha / k as f64;
        }
        let e_k = power_sum(k, phases);
        plus += term_plus * e_k;
        minus += term_minus * e_k;
    }
    (n.powf(-params.a_exp) * plus * minus).re
}

/// A product of exponential factors n^(-A) prod_j (sum_i e^(alpha_j phi_i)).
///
/// Permutation symmetry and the composition law hold for any exponent list;
/// inversion symmetry holds exactly when the exponents come in +-alpha
/// pairs, which is what singles out the two-factor invariant.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductInvariant {
    pub alphas: Vec<(f64, f64)>,
    pub a_exp: f64,
}

impl ProductInvariant {
    pub fn new(alphas: Vec<Complex64>, a_exp: f64) -> Self {
        ProductInvariant { alphas: alphas.into_iter().map(|a| (a.re, a.im)).collect(), a_exp }
    }

    /// The paired two-factor case: exponents +alpha and -alpha.
    pub fn paired(alpha: Complex64, a_exp: f64) -> Self {
        Self::new(vec![alpha, -alpha], a_exp)
    }

    pub fn eval(&self, phases: &[f64]) -> Complex64 {
        let n = phases.len() as f64;
        let mut out = Complex64::new(n.powf(-self.a_exp), 0.0);
        for &(re, im) in &self.alphas {
            let alpha = Complex64::new(re, im);
            let mut factor = Complex64::new(0.0, 0.0);
            for &phi in phases {
                factor += (alpha * phi).exp();
            }
            out *= factor;
        }
        out
    }

    /// |Q_n(phi) Q_m(xi) - Q_nm(pairwise sums)|.
    pub fn composition_residual(&self, phi: &[f64], xi: &[f64]) -> f64 {
        let mut sums = Vec::with_capacity(phi.len() * xi.len());
        for &a in phi {
            for &b in xi {
                sums.push(a + b);
            }
        }
        (self.eval(phi) * self.eval(xi) - self.eval(&sums)).norm()
    }

    /// |Q(phi) - Q(-phi)|; zero only for paired exponent lists.
    pub fn inversion_residual(&self, phases: &[f64]) -> f64 {
        let negated: Vec<f64> = phases.iter().map(|&p| -p).collect();
        (self.eval(phases) - self.eval(&negated)).norm()
    }
}
