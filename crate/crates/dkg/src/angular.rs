//! Angular eigenfunctions of the reflection-deformed angular operator
//! `B_phi`, their eigenvalues `s^2/2`, parity behavior, normalization and
//! orthonormality.
//!
//! Each eigenfunction lives in a parity sector `(e1, e2)` labeling the
//! eigenvalues `(1-2e1, 1-2e2)` of the reflections, and is a weighted Jacobi
//! polynomial in `-cos(2 phi)` times the parity prefactor
//! `cos^{e1} phi sin^{e2} phi`. Normalization is computed by weighted
//! quadrature; the closed-form constant (with the factorial reading of its
//! leading factor, which the quadrature corroborates) is exposed separately
//! for cross-checks.

use crate::dunkl::DunklParams;
use crate::error::{DkgError, Result};
use crate::numerics::{
    angular_integral, jacobi, jacobi_derivative, jacobi_second_derivative, log_gamma,
    QuadratureSpec,
};

/// Joint parity sector under the two reflections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParitySector {
    e1: u8,
    e2: u8,
}

impl ParitySector {
    pub fn new(e1: u8, e2: u8) -> Result<Self> {
        if e1 > 1 || e2 > 1 {
            return Err(DkgError::invalid_mode(format!(
                "sector labels must be 0 or 1, got ({e1},{e2})"
            )));
        }
        Ok(Self { e1, e2 })
    }

    pub fn all() -> [ParitySector; 4] {
        [
            Self { e1: 0, e2: 0 },
            Self { e1: 0, e2: 1 },
            Self { e1: 1, e2: 0 },
            Self { e1: 1, e2: 1 },
        ]
    }

    pub fn e1(&self) -> u8 {
        self.e1
    }

    pub fn e2(&self) -> u8 {
        self.e2
    }

    /// Reflection eigenvalue `1 - 2 e1`.
    pub fn r1(&self) -> f64 {
        1.0 - 2.0 * self.e1 as f64
    }

    /// Reflection eigenvalue `1 - 2 e2`.
    pub fn r2(&self) -> f64 {
        1.0 - 2.0 * self.e2 as f64
    }

    /// Whether ell runs over integers (true) or half-odd integers (false).
    pub fn integer_ell(&self) -> bool {
        (self.e1 + self.e2) % 2 == 0
    }
}

/// A parity sector together with the angular quantum number ell, stored as
/// `2*ell` so both integer and half-odd-integer towers are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AngularMode {
    sector: ParitySector,
    twice_ell: u32,
}

impl AngularMode {
    pub fn new(sector: ParitySector, twice_ell: u32) -> Result<Self> {
        let esum = (sector.e1 + sector.e2) as u32;
        if twice_ell % 2 != esum % 2 {
            return Err(DkgError::invalid_mode(format!(
                "ell = {}/2 has the wrong integrality class for sector ({},{})",
                twice_ell, sector.e1, sector.e2
            )));
        }
        if twice_ell < esum {
            return Err(DkgError::invalid_mode(format!(
                "ell = {}/2 is below the lowest mode of sector ({},{})",
                twice_ell, sector.e1, sector.e2
            )));
        }
        Ok(Self { sector, twice_ell })
    }

    pub fn sector(&self) -> ParitySector {
        self.sector
    }

    pub fn twice_ell(&self) -> u32 {
        self.twice_ell
    }

    pub fn ell(&self) -> f64 {
        self.twice_ell as f64 / 2.0
    }

    /// Degree of the Jacobi polynomial factor: `ell - e1/2 - e2/2`.
    pub fn jacobi_degree(&self) -> u32 {
        (self.twice_ell - (self.sector.e1 + self.sector.e2) as u32) / 2
    }

    /// All valid modes of a sector with `ell <= ell_max` (given as `2*ell_max`).
    pub fn modes_up_to(sector: ParitySector, twice_ell_max: u32) -> Vec<AngularMode> {
        let esum = (sector.e1 + sector.e2) as u32;
        (esum..=twice_ell_max)
            .step_by(2)
            .map(|t| AngularMode { sector, twice_ell: t })
            .collect()
    }
}

/// Eigenvalue `s^2 = 4 ell (ell + mu1 + mu2)` of `2 B_phi`.
pub fn s_squared(mode: &AngularMode, mu: &DunklParams) -> f64 {
    let ell = mode.ell();
    4.0 * ell * (ell + mu.mu_sum())
}

/// Parity prefactor `cos^{e1} phi sin^{e2} phi` and its first two derivatives.
fn prefactor(sector: ParitySector, phi: f64) -> (f64, f64, f64) {
    match (sector.e1, sector.e2) {
        (0, 0) => (1.0, 0.0, 0.0),
        (1, 0) => (phi.cos(), -phi.sin(), -phi.cos()),
        (0, 1) => (phi.sin(), phi.cos(), -phi.sin()),
        (1, 1) => {
            let s2 = (2.0 * phi).sin();
            let c2 = (2.0 * phi).cos();
            (0.5 * s2, c2, -2.0 * s2)
        }
        _ => unreachable!(),
    }
}

/// A normalized angular eigenfunction, with its normalization frozen at
/// construction time so pointwise evaluation stays cheap.
#[derive(Debug, Clone)]
pub struct AngularEigenfunction {
    mode: AngularMode,
    mu1: f64,
    mu2: f64,
    norm: f64,
}

impl AngularEigenfunction {
    /// Builds the eigenfunction, computing the normalization by quadrature.
    pub fn new(mode: AngularMode, mu: &DunklParams, spec: &QuadratureSpec) -> Result<Self> {
        let norm = angular_norm(&mode, mu, spec)?;
        Ok(Self {
            mode,
            mu1: mu.mu1_f64(),
            mu2: mu.mu2_f64(),
            norm,
        })
    }

    pub fn mode(&self) -> AngularMode {
        self.mode
    }

    pub fn norm_constant(&self) -> f64 {
        self.norm
    }

    fn jacobi_params(&self) -> (f64, f64) {
        (
            self.mu1 - 0.5 + self.mode.sector().e1 as f64,
            self.mu2 - 0.5 + self.mode.sector().e2 as f64,
        )
    }

    /// Unnormalized value (without the norm constant).
    fn raw(&self, phi: f64) -> Result<f64> {
        let (a, b) = self.jacobi_params();
        let (pre, _, _) = prefactor(self.mode.sector(), phi);
        let u = -(2.0 * phi).cos();
        Ok(pre * jacobi(self.mode.jacobi_degree(), a, b, u)?)
    }

    pub fn eval(&self, phi: f64) -> Result<f64> {
        Ok(self.norm * self.raw(phi)?)
    }

    /// Value and first two derivatives with respect to phi, all analytic.
    pub fn eval_with_derivatives(&self, phi: f64) -> Result<(f64, f64, f64)> {
        let (a, b) = self.jacobi_params();
        let n = self.mode.jacobi_degree();
        let (pre, pre1, pre2) = prefactor(self.mode.sector(), phi);
        let u = -(2.0 * phi).cos();
        let u1 = 2.0 * (2.0 * phi).sin();
        let u2 = 4.0 * (2.0 * phi).cos();
        let p = jacobi(n, a, b, u)?;
        let p1 = jacobi_derivative(n, a, b, u)?;
        let p2 = jacobi_second_derivative(n, a, b, u)?;
        let v = pre * p;
        let d1 = pre1 * p + pre * p1 * u1;
        let d2 = pre2 * p + 2.0 * pre1 * p1 * u1 + pre * (p2 * u1 * u1 + p1 * u2);
        Ok((self.norm * v, self.norm * d1, self.norm * d2))
    }

    /// Applies `B_phi` at a point, realizing the reflection terms by actual
    /// evaluation at the reflected angles `pi - phi` and `-phi`.
    pub fn bphi(&self, phi: f64) -> Result<f64> {
        let c = phi.cos();
        let s = phi.sin();
        if c.abs() < 1e-9 || s.abs() < 1e-9 {
            return Err(DkgError::domain(format!(
                "B_phi is singular on multiples of pi/2 (phi = {phi})"
            )));
        }
        let (v, d1, d2) = self.eval_with_derivatives(phi)?;
        let v_r1 = self.eval(std::f64::consts::PI - phi)?;
        let v_r2 = self.eval(-phi)?;
        Ok(-0.5 * d2 + (self.mu1 * s / c - self.mu2 * c / s) * d1
            + self.mu1 * (v - v_r1) / (2.0 * c * c)
            + self.mu2 * (v - v_r2) / (2.0 * s * s))
    }
}

/// Normalization constant from quadrature: `eta` such that the weighted
/// square integral of the eigenfunction is 1.
pub fn angular_norm(mode: &AngularMode, mu: &DunklParams, spec: &QuadratureSpec) -> Result<f64> {
    let unnorm = AngularEigenfunction {
        mode: *mode,
        mu1: mu.mu1_f64(),
        mu2: mu.mu2_f64(),
        norm: 1.0,
    };
    let sq = angular_integral(
        |phi| {
            let v = unnorm.raw(phi).unwrap_or(f64::NAN);
            v * v
        },
        unnorm.mu1,
        unnorm.mu2,
        spec,
    )?;
    if !(sq > 0.0) {
        return Err(DkgError::domain("non-positive squared norm"));
    }
    Ok(1.0 / sq.sqrt())
}

/// Closed-form normalization constant, with the leading factor
/// `(ell - (e1+e2)/2)` taken as the factorial `Gamma(ell - (e1+e2)/2 + 1)`
/// (a bare factor would vanish at the lowest ell of each sector; the
/// quadrature result selects the factorial form).
pub fn angular_norm_formula(mode: &AngularMode, mu: &DunklParams) -> Result<f64> {
    let mu1 = mu.mu1_f64();
    let mu2 = mu.mu2_f64();
    let m = mu1 + mu2;
    let ell = mode.ell();
    let e1 = mode.sector().e1 as f64;
    let e2 = mode.sector().e2 as f64;
    let h = 0.5 * (e1 + e2);
    let n = mode.jacobi_degree() as f64;
    // (s~/2) * Gamma(ell + m + h); at the bottom of sector (0,0) this is the
    // 0 * Gamma(0) limit, which equals Gamma(m + 1) / 2
    let lead = if mode.twice_ell() == 0 {
        0.5 * log_gamma(m + 1.0)?.exp()
    } else {
        0.5 * (2.0 * ell + m) * log_gamma(ell + m + h)?.exp()
    };
    let nfact = log_gamma(n + 1.0)?.exp();
    let d1 = log_gamma(ell + mu1 + 0.5 * (1.0 + e1 - e2))?;
    let d2 = log_gamma(ell + mu2 + 0.5 * (1.0 + e2 - e1))?;
    Ok((lead * nfact * (-d1 - d2).exp()).sqrt())
}

/// Normalized eigenfunction value at `phi` (convenience wrapper; for
/// repeated evaluation build an [`AngularEigenfunction`] once).
pub fn phi_eval(mode: &AngularMode, mu: &DunklParams, phi: f64) -> Result<f64> {
    AngularEigenfunction::new(*mode, mu, &QuadratureSpec::default())?.eval(phi)
}

/// Checks `Phi(pi - phi) = (1-2e1) Phi(phi)` and `Phi(-phi) = (1-2e2) Phi(phi)`
/// on a grid, to 1e-10.
pub fn reflection_parity_check(mode: &AngularMode, mu: &DunklParams) -> Result<bool> {
    let f = AngularEigenfunction::new(*mode, mu, &QuadratureSpec::default())?;
    let r1 = mode.sector().r1();
    let r2 = mode.sector().r2();
    let mut max_dev: f64 = 0.0;
    let mut max_mag: f64 = 0.0;
    for i in 0..40 {
        let phi = 0.05 + i as f64 * 0.15;
        let v = f.eval(phi)?;
        max_mag = max_mag.max(v.abs());
        max_dev = max_dev.max((f.eval(std::f64::consts::PI - phi)? - r1 * v).abs());
        max_dev = max_dev.max((f.eval(-phi)? - r2 * v).abs());
    }
    Ok(max_dev <= 1e-10 * max_mag.max(1.0))
}

/// Pointwise residual of `L_z^2/hbar^2 = 2 B_phi + 2 mu1 mu2 (1 - R1 R2)`
/// acting on the eigenfunction: both sides evaluated at `phi`, where the
/// left side uses the eigenvalue `s^2 + 2 mu1 mu2 (1 - r1 r2)`.
pub fn lz_squared_relation_check(
    mode: &AngularMode,
    mu: &DunklParams,
    phi: f64,
) -> Result<f64> {
    let f = AngularEigenfunction::new(*mode, mu, &QuadratureSpec::default())?;
    let r1r2 = mode.sector().r1() * mode.sector().r2();
    let mm = 2.0 * mu.mu1_f64() * mu.mu2_f64() * (1.0 - r1r2);
    let lhs_eigen = s_squared(mode, mu) + mm;
    let v = f.eval(phi)?;
    let v_r1r2 = f.eval(phi - std::f64::consts::PI)?; // R1 R2: phi -> phi - pi
    let rhs = 2.0 * f.bphi(phi)? + 2.0 * mu.mu1_f64() * mu.mu2_f64() * (v - v_r1r2);
    Ok((rhs - lhs_eigen * v).abs())
}

/// Weighted inner product of two angular eigenfunctions.
pub fn angular_overlap(
    f: &AngularEigenfunction,
    g: &AngularEigenfunction,
    mu: &DunklParams,
    spec: &QuadratureSpec,
) -> Result<f64> {
    angular_integral(
        |phi| f.eval(phi).unwrap_or(f64::NAN) * g.eval(phi).unwrap_or(f64::NAN),
        mu.mu1_f64(),
        mu.mu2_f64(),
        spec,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dunkl::rational;

    fn mu(n1: i64, d1: i64, n2: i64, d2: i64) -> DunklParams {
        DunklParams::from_rationals(rational(n1, d1), rational(n2, d2)).unwrap()
    }

    fn mode(e1: u8, e2: u8, twice_ell: u32) -> AngularMode {
        AngularMode::new(ParitySector::new(e1, e2).unwrap(), twice_ell).unwrap()
    }

    #[test]
    fn mode_validation() {
        // integer sectors reject half-odd ell and vice versa
        assert!(AngularMode::new(ParitySector::new(0, 0).unwrap(), 1).is_err());
        assert!(AngularMode::new(ParitySector::new(1, 0).unwrap(), 2).is_err());
        // sector (1,1) starts at ell = 1
        assert!(AngularMode::new(ParitySector::new(1, 1).unwrap(), 0).is_err());
        assert!(AngularMode::new(ParitySector::new(1, 1).unwrap(), 2).is_ok());
        assert_eq!(mode(1, 0, 3).jacobi_degree(), 1);
    }

    #[test]
    fn s_squared_values() {
        assert_eq!(s_squared(&mode(0, 0, 0), &mu(1, 2, 1, 3)), 0.0);
        assert_eq!(s_squared(&mode(0, 0, 2), &DunklParams::zero()), 4.0);
        // ell = 3/2, mu = (1/2, 3/2): 4 * 3/2 * 7/2 = 21
        let v = s_squared(&mode(1, 0, 3), &mu(1, 2, 3, 2));
        assert!((v - 21.0).abs() < 1e-14);
    }

    #[test]
    fn lowest_mode_is_weighted_constant() {
        // mu = 0: 1/sqrt(2 pi)
        let f = AngularEigenfunction::new(
            mode(0, 0, 0),
            &DunklParams::zero(),
            &QuadratureSpec::default(),
        )
        .unwrap();
        let expect = 1.0 / (2.0 * std::f64::consts::PI).sqrt();
        for phi in [0.3, 1.0, 2.5, 5.0] {
            assert!((f.eval(phi).unwrap() - expect).abs() < 1e-10);
        }
        // generic mu: [2 Gamma(mu1+1/2) Gamma(mu2+1/2) / Gamma(mu1+mu2+1)]^{-1/2}
        let m = mu(1, 4, 3, 4);
        let f = AngularEigenfunction::new(mode(0, 0, 0), &m, &QuadratureSpec::default()).unwrap();
        let circ = 2.0
            * (log_gamma(0.75).unwrap() + log_gamma(1.25).unwrap() - log_gamma(2.0).unwrap())
                .exp();
        assert!((f.eval(1.1).unwrap() - 1.0 / circ.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn quadrature_norm_matches_closed_form() {
        let spec = QuadratureSpec::default();
        for m in [mu(0, 1, 0, 1), mu(1, 4, 3, 4), mu(1, 2, 3, 2)] {
            for sector in ParitySector::all() {
                for md in AngularMode::modes_up_to(sector, 6) {
                    let quad = angular_norm(&md, &m, &spec).unwrap();
                    let formula = angular_norm_formula(&md, &m).unwrap();
                    assert!(
                        (quad - formula).abs() / formula < 1e-8,
                        "mode {md:?}: quad {quad} vs formula {formula}"
                    );
                }
            }
        }
    }

    #[test]
    fn bphi_eigenvalue_identity() {
        let spec = QuadratureSpec::default();
        // sector (0,0), ell = 1, mu = (1/4, 3/4): s^2 = 8
        let m = mu(1, 4, 3, 4);
        let md = mode(0, 0, 2);
        let f = AngularEigenfunction::new(md, &m, &spec).unwrap();
        let s2 = s_squared(&md, &m);
        assert!((s2 - 8.0).abs() < 1e-14);
        for phi in [0.3, 0.7, 1.1, 2.0, 4.4] {
            let lhs = f.bphi(phi).unwrap();
            let rhs = 0.5 * s2 * f.eval(phi).unwrap();
            assert!((lhs - rhs).abs() < 1e-9, "phi={phi}: {lhs} vs {rhs}");
        }
        // lowest mode: B_phi Phi = 0
        let f0 =
            AngularEigenfunction::new(mode(0, 0, 0), &DunklParams::zero(), &spec).unwrap();
        assert!(f0.bphi(0.8).unwrap().abs() < 1e-12);
        // half-odd sector
        let mh = mu(0, 1, 1, 2);
        let md = mode(0, 1, 1);
        let f = AngularEigenfunction::new(md, &mh, &spec).unwrap();
        let s2 = s_squared(&md, &mh);
        let lhs = f.bphi(1.0).unwrap();
        let rhs = 0.5 * s2 * f.eval(1.0).unwrap();
        assert!((lhs - rhs).abs() < 1e-9);
    }

    #[test]
    fn bphi_rejects_singular_rays() {
        let f = AngularEigenfunction::new(
            mode(0, 0, 2),
            &DunklParams::zero(),
            &QuadratureSpec::default(),
        )
        .unwrap();
        assert!(f.bphi(0.0).is_err());
        assert!(f.bphi(std::f64::consts::FRAC_PI_2).is_err());
    }

    #[test]
    fn parity_behavior() {
        let m = mu(1, 4, 3, 4);
        assert!(reflection_parity_check(&mode(0, 0, 2), &m).unwrap());
        assert!(reflection_parity_check(&mode(1, 0, 1), &m).unwrap());
        assert!(reflection_parity_check(&mode(0, 1, 3), &m).unwrap());
        assert!(reflection_parity_check(&mode(1, 1, 2), &m).unwrap());
    }

    #[test]
    fn lz_squared_relation() {
        // mu1 mu2 = 0: reduces to L_z^2 = 2 B_phi
        let m0 = mu(1, 2, 0, 1);
        assert!(lz_squared_relation_check(&mode(0, 0, 2), &m0, 0.9).unwrap() < 1e-9);
        // mixed sector picks up 4 mu1 mu2
        let m = mu(1, 4, 3, 4);
        assert!(lz_squared_relation_check(&mode(1, 0, 1), &m, 0.7).unwrap() < 1e-9);
        assert!(lz_squared_relation_check(&mode(1, 1, 2), &m, 1.3).unwrap() < 1e-9);
    }

    #[test]
    fn orthonormality_within_sector() {
        let spec = QuadratureSpec::default();
        let m = mu(1, 4, 1, 2);
        let sector = ParitySector::new(0, 0).unwrap();
        let fns: Vec<_> = AngularMode::modes_up_to(sector, 6)
            .into_iter()
            .map(|md| AngularEigenfunction::new(md, &m, &spec).unwrap())
            .collect();
        for (i, f) in fns.iter().enumerate() {
            for (j, g) in fns.iter().enumerate() {
                let ov = angular_overlap(f, g, &m, &spec).unwrap();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((ov - expect).abs() < 1e-8, "({i},{j}): {ov}");
            }
        }
    }

    #[test]
    fn cross_sector_orthogonality() {
        let spec = QuadratureSpec::default();
        let m = mu(1, 2, 1, 4);
        let f = AngularEigenfunction::new(mode(0, 0, 2), &m, &spec).unwrap();
        let g = AngularEigenfunction::new(mode(1, 1, 2), &m, &spec).unwrap();
        assert!(angular_overlap(&f, &g, &m, &spec).unwrap().abs() < 1e-8);
        let h = AngularEigenfunction::new(mode(1, 0, 1), &m, &spec).unwrap();
        let k = AngularEigenfunction::new(mode(0, 1, 1), &m, &spec).unwrap();
        assert!(angular_overlap(&h, &k, &m, &spec).unwrap().abs() < 1e-8);
    }

    #[test]
    fn classical_limit_recovers_fourier_modes() {
        // at mu = 0, each (sector, ell) picks out one Fourier mode of index
        // 2*ell up to sign
        let spec = QuadratureSpec::default();
        let zero = DunklParams::zero();
        let cases: [(AngularMode, Box<dyn Fn(f64) -> f64>); 4] = [
            (mode(0, 0, 2), Box::new(|p: f64| (2.0 * p).cos())),
            (mode(1, 1, 2), Box::new(|p: f64| (2.0 * p).sin())),
            (mode(1, 0, 1), Box::new(|p: f64| p.cos())),
            (mode(0, 1, 1), Box::new(|p: f64| p.sin())),
        ];
        for (md, classical) in cases {
            let f = AngularEigenfunction::new(md, &zero, &spec).unwrap();
            // projection coefficient of the classical mode on Phi
            let proj = angular_integral(
                |p| classical(p) * f.eval(p).unwrap(),
                0.0,
                0.0,
                &spec,
            )
            .unwrap();
            // reconstruct: proj * Phi should reproduce the classical mode
            for p in [0.2, 0.9, 1.7, 3.3, 5.1] {
                let recon = proj * f.eval(p).unwrap();
                assert!(
                    (recon - classical(p)).abs() < 1e-8,
                    "{md:?} at {p}: {recon} vs {}",
                    classical(p)
                );
            }
        }
    }
}
