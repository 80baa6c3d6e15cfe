//! Exact solutions of the 2D Dunkl-Klein-Gordon equation for the Coulomb
//! potential and the Klein-Gordon oscillator, together with the machinery
//! needed to certify them numerically: exact Dunkl operator calculus on
//! rational polynomials, angular eigenfunctions of the reflection-deformed
//! Laplacian, su(1,1) ladder structure on the radial families, and
//! quadrature-based orthonormality checks.
//!
//! Natural units (`mc^2 = hbar*c = 1`) are used internally; [`PhysicalScales`]
//! converts at the boundary only.

pub mod angular;
pub mod coulomb;
pub mod dunkl;
pub mod error;
pub mod numerics;
pub mod oscillator;
pub mod radial;
pub mod verify;

pub use angular::{AngularMode, ParitySector};
pub use dunkl::DunklParams;
pub use error::{DkgError, Result};
pub use radial::RadialExpPoly;

/// Dimensionful scales applied at input/output boundaries only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalScales {
    /// Rest energy `mc^2` in the caller's energy units.
    pub rest_energy: f64,
    /// `hbar * c` in the caller's energy times length units.
    pub hbar_c: f64,
}

impl Default for PhysicalScales {
    fn default() -> Self {
        Self {
            rest_energy: 1.0,
            hbar_c: 1.0,
        }
    }
}

impl PhysicalScales {
    pub fn new(rest_energy: f64, hbar_c: f64) -> Result<Self> {
        if rest_energy <= 0.0 || !rest_energy.is_finite() {
            return Err(DkgError::domain("rest_energy must be positive and finite"));
        }
        if hbar_c <= 0.0 || !hbar_c.is_finite() {
            return Err(DkgError::domain("hbar_c must be positive and finite"));
        }
        Ok(Self {
            rest_energy,
            hbar_c,
        })
    }
}

/// Energy branch of a bound state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Branch {
    Positive,
    Negative,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Positive => 1.0,
            Branch::Negative => -1.0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Branch::Positive => "+",
            Branch::Negative => "-",
        }
    }
}
