//! Closed-form radial functions: an exponential factor times a finite sum of
//! powers.
//!
//! Two families cover both problems: `e^{-sigma rho} sum_j c_j rho^{nu+j}`
//! (Coulomb) and `e^{-r^2/2} sum_j c_j r^{nu+2j}` (oscillator). Analytic
//! differentiation stays inside each family, which is what lets operator
//! actions and ODE residuals avoid finite differences.

use crate::error::{DkgError, Result};

/// Exponential-decay shape of a radial function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadialFamily {
    /// `e^{-decay * rho}`, power step 1.
    LinearExponent { decay: f64 },
    /// `e^{-r^2/2}`, power step 2.
    Gaussian,
}

impl RadialFamily {
    pub fn step(&self) -> f64 {
        match self {
            RadialFamily::LinearExponent { .. } => 1.0,
            RadialFamily::Gaussian => 2.0,
        }
    }

    fn compatible(&self, other: &RadialFamily) -> bool {
        match (self, other) {
            (
                RadialFamily::LinearExponent { decay: a },
                RadialFamily::LinearExponent { decay: b },
            ) => (a - b).abs() <= 1e-12 * a.abs().max(1.0),
            (RadialFamily::Gaussian, RadialFamily::Gaussian) => true,
            _ => false,
        }
    }
}

/// `exp-factor * sum_j coefficients[j] * rho^{base_exponent + step*j}`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialExpPoly {
    pub family: RadialFamily,
    pub base_exponent: f64,
    pub coefficients: Vec<f64>,
}

impl RadialExpPoly {
    pub fn new(family: RadialFamily, base_exponent: f64, coefficients: Vec<f64>) -> Result<Self> {
        if let RadialFamily::LinearExponent { decay } = family {
            if !(decay > 0.0) {
                return Err(DkgError::domain("radial decay must be > 0"));
            }
        }
        let mut p = Self {
            family,
            base_exponent,
            coefficients,
        };
        p.trim_trailing();
        Ok(p)
    }

    pub fn zero(family: RadialFamily, base_exponent: f64) -> Self {
        Self {
            family,
            base_exponent,
            coefficients: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    fn trim_trailing(&mut self) {
        while matches!(self.coefficients.last(), Some(c) if *c == 0.0) {
            self.coefficients.pop();
        }
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.coefficients.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn eval(&self, rho: f64) -> f64 {
        if self.coefficients.is_empty() {
            return 0.0;
        }
        let step = self.family.step();
        let expf = match self.family {
            RadialFamily::LinearExponent { decay } => (-decay * rho).exp(),
            RadialFamily::Gaussian => (-0.5 * rho * rho).exp(),
        };
        let mut poly = 0.0;
        // Horner in rho^step, then the base power
        for c in self.coefficients.iter().rev() {
            poly = poly * rho.powf(step) + c;
        }
        expf * poly * rho.powf(self.base_exponent)
    }

    /// Analytic derivative; stays in the family with base exponent lowered
    /// by one.
    pub fn derivative(&self) -> Self {
        let nu = self.base_exponent;
        let n = self.coefficients.len();
        match self.family {
            RadialFamily::LinearExponent { decay } => {
                // d/drho [e^{-s rho} rho^{nu+j}] = e^{-s rho}[(nu+j) rho^{nu+j-1} - s rho^{nu+j}]
                let mut out = vec![0.0; n + 1];
                for (j, c) in self.coefficients.iter().enumerate() {
                    out[j] += c * (nu + j as f64);
                    out[j + 1] -= c * decay;
                }
                let mut p = Self {
                    family: self.family,
                    base_exponent: nu - 1.0,
                    coefficients: out,
                };
                p.trim_trailing();
                p
            }
            RadialFamily::Gaussian => {
                // d/dr [e^{-r^2/2} r^{nu+2j}] = e^{-r^2/2}[(nu+2j) r^{nu+2j-1} - r^{nu+2j+1}]
                let mut out = vec![0.0; n + 1];
                for (j, c) in self.coefficients.iter().enumerate() {
                    out[j] += c * (nu + 2.0 * j as f64);
                    out[j + 1] -= c;
                }
                let mut p = Self {
                    family: self.family,
                    base_exponent: nu - 1.0,
                    coefficients: out,
                };
                p.trim_trailing();
                p
            }
        }
    }

    /// Multiplies by `rho^k` (k may be negative: that only shifts the base).
    pub fn mul_power(&self, k: f64) -> Self {
        Self {
            family: self.family,
            base_exponent: self.base_exponent + k,
            coefficients: self.coefficients.clone(),
        }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            family: self.family,
            base_exponent: self.base_exponent,
            coefficients: self.coefficients.iter().map(|c| c * factor).collect(),
        }
    }

    /// Offset of `other`'s base relative to ours, in units of the power step.
    /// Errors unless the bases differ by an integer number of steps.
    fn step_offset(&self, other: &Self) -> Result<i64> {
        let step = self.family.step();
        let raw = (other.base_exponent - self.base_exponent) / step;
        let rounded = raw.round();
        if (raw - rounded).abs() > 1e-9 {
            return Err(DkgError::family(format!(
                "incompatible base exponents {} and {}",
                self.base_exponent, other.base_exponent
            )));
        }
        Ok(rounded as i64)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.family.compatible(&other.family) {
            return Err(DkgError::family(
                "cannot add radial functions from different families",
            ));
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let step = self.family.step();
        let off = self.step_offset(other)?;
        let base_idx = off.min(0);
        let base = self.base_exponent + base_idx as f64 * step;
        let self_shift = (-base_idx) as usize;
        let other_shift = (off - base_idx) as usize;
        let len = (self.coefficients.len() + self_shift)
            .max(other.coefficients.len() + other_shift);
        let mut out = vec![0.0; len];
        for (j, c) in self.coefficients.iter().enumerate() {
            out[j + self_shift] += c;
        }
        for (j, c) in other.coefficients.iter().enumerate() {
            out[j + other_shift] += c;
        }
        let mut p = Self {
            family: self.family,
            base_exponent: base,
            coefficients: out,
        };
        p.trim_trailing();
        Ok(p)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1.0))
    }

    /// Maximum absolute coefficient difference against `other`, with bases
    /// aligned; missing coefficients count as zero.
    pub fn max_coefficient_deviation(&self, other: &Self) -> Result<f64> {
        Ok(self.sub(other)?.max_abs_coefficient())
    }

    /// Drops leading coefficients of magnitude `<= tol * max|c|`, raising the
    /// base exponent accordingly. Used after operator applications whose
    /// formally singular leading term cancels.
    pub fn trim_leading(&self, tol: f64) -> Self {
        let cutoff = tol * self.max_abs_coefficient();
        let mut skip = 0;
        while skip < self.coefficients.len() && self.coefficients[skip].abs() <= cutoff {
            skip += 1;
        }
        Self {
            family: self.family,
            base_exponent: self.base_exponent + skip as f64 * self.family.step(),
            coefficients: self.coefficients[skip..].to_vec(),
        }
    }
}
