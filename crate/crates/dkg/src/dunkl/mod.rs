//! Exact Dunkl operator calculus on bivariate polynomials with rational
//! coefficients, plus numeric Dunkl operators for non-polynomial functions.
//!
//! Every operator identity used downstream (reflection anticommutation,
//! commuting Dunkl derivatives, the angular momentum as a constant of motion)
//! is certified bit-exactly on monomial subspaces here.

mod operators;
mod poly;

pub use operators::{
    angular_momentum, anticommutation_check_r1d1, commutator_table, dunkl_d1, dunkl_d2,
    dunkl_laplacian, dunkl_laplacian_expanded, lz_commutes_with_dunkl_laplacian,
    numeric_dunkl_apply, op_angular_momentum, op_d1, op_d2, op_dunkl_laplacian, op_mul_x,
    op_mul_y, op_partial_x, op_partial_y, op_reflect, Axis, CommutatorReport, IdentityReport,
    LinearOperator, DEFAULT_CERTIFICATION_DEGREE,
};
pub use poly::{rational, BivariatePoly, Rational};

use crate::error::{DkgError, Result};
use num_traits::{Signed, ToPrimitive, Zero};

/// Deformation parameters of the two Dunkl derivatives.
///
/// Stored as exact rationals so polynomial identities can be certified
/// bit-exactly; `mu1_f64`/`mu2_f64` feed the floating-point modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DunklParams {
    mu1: Rational,
    mu2: Rational,
}

impl DunklParams {
    pub fn from_rationals(mu1: Rational, mu2: Rational) -> Result<Self> {
        if mu1.is_negative() || mu2.is_negative() {
            return Err(DkgError::domain("Dunkl parameters must be >= 0"));
        }
        Ok(Self { mu1, mu2 })
    }

    /// Exact conversion: every finite f64 is a rational.
    pub fn from_f64(mu1: f64, mu2: f64) -> Result<Self> {
        let r1 = Rational::from_float(mu1)
            .ok_or_else(|| DkgError::domain("mu1 must be finite"))?;
        let r2 = Rational::from_float(mu2)
            .ok_or_else(|| DkgError::domain("mu2 must be finite"))?;
        Self::from_rationals(r1, r2)
    }

    pub fn zero() -> Self {
        Self {
            mu1: Rational::zero(),
            mu2: Rational::zero(),
        }
    }

    pub fn mu1(&self) -> &Rational {
        &self.mu1
    }

    pub fn mu2(&self) -> &Rational {
        &self.mu2
    }

    pub fn mu1_f64(&self) -> f64 {
        self.mu1.to_f64().expect("rational to f64")
    }

    pub fn mu2_f64(&self) -> f64 {
        self.mu2.to_f64().expect("rational to f64")
    }

    /// `mu1 + mu2` as f64.
    pub fn mu_sum(&self) -> f64 {
        self.mu1_f64() + self.mu2_f64()
    }
}
