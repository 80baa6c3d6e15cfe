//! C ABI for the solver: opaque parameter handles plus status codes.
//!
//! All functions return `DkgStatus`; results come back through out
//! pointers. Handles are created by the `_new` functions and must be
//! released with the matching `_free`.

use std::os::raw::c_char;

use dkg::angular::{AngularEigenfunction, AngularMode, ParitySector};
use dkg::coulomb::{self, CoulombParams, CoulombState};
use dkg::dunkl::DunklParams;
use dkg::numerics::QuadratureSpec;
use dkg::oscillator::{self, OscState, OscillatorParams};
use dkg::{Branch, DkgError, PhysicalScales};

/// Status code returned by every FFI entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DkgStatus {
    Ok = 0,
    /// A parameter was outside its domain.
    Domain = 1,
    /// The Coulomb coupling meets or exceeds the critical value.
    Supercritical = 2,
    /// Sector labels or the angular quantum number are inconsistent.
    InvalidMode = 3,
    /// Incompatible radial function families.
    FamilyMismatch = 4,
    /// A numeric routine could not reach its accuracy target.
    Accuracy = 5,
    /// A required pointer argument was null.
    NullPointer = 6,
}

fn status_of(e: &DkgError) -> DkgStatus {
    match e {
        DkgError::Domain(_) => DkgStatus::Domain,
        DkgError::Supercritical { .. } => DkgStatus::Supercritical,
        DkgError::InvalidMode(_) => DkgStatus::InvalidMode,
        DkgError::FamilyMismatch(_) => DkgStatus::FamilyMismatch,
        DkgError::Accuracy { .. } => DkgStatus::Accuracy,
    }
}

/// Opaque handle for Coulomb-problem parameters.
pub struct DkgCoulomb {
    params: CoulombParams,
}

/// Opaque handle for oscillator-problem parameters.
pub struct DkgOscillator {
    params: OscillatorParams,
}

fn make_mode(e1: u8, e2: u8, twice_ell: u32) -> Result<AngularMode, DkgError> {
    AngularMode::new(ParitySector::new(e1, e2)?, twice_ell)
}

fn make_branch(branch_sign: i32) -> Result<Branch, DkgError> {
    match branch_sign {
        1 => Ok(Branch::Positive),
        -1 => Ok(Branch::Negative),
        _ => Err(DkgError::domain("branch_sign must be +1 or -1")),
    }
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return status_of(&err),
        }
    };
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn dkg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Creates a Coulomb parameter handle. `gamma` is the dimensionless
/// coupling, `mu1`/`mu2` the deformation parameters (>= 0).
#[no_mangle]
pub extern "C" fn dkg_coulomb_new(
    gamma: f64,
    mu1: f64,
    mu2: f64,
    out: *mut *mut DkgCoulomb,
) -> DkgStatus {
    if out.is_null() {
        return DkgStatus::NullPointer;
    }
    let mu = try_ffi!(DunklParams::from_f64(mu1, mu2));
    let params = try_ffi!(CoulombParams::new(gamma, mu, PhysicalScales::default()));
    unsafe { *out = Box::into_raw(Box::new(DkgCoulomb { params })) };
    DkgStatus::Ok
}

/// Releases a Coulomb handle. Passing null is a no-op.
#[no_mangle]
pub extern "C" fn dkg_coulomb_free(handle: *mut DkgCoulomb) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Bound-state energy in units of `mc^2` for the mode
/// `(e1, e2, twice_ell)` and quantum number `n`; `branch_sign` is +1/-1.
#[no_mangle]
pub extern "C" fn dkg_coulomb_energy(
    handle: *const DkgCoulomb,
    e1: u8,
    e2: u8,
    twice_ell: u32,
    n: u32,
    branch_sign: i32,
    out: *mut f64,
) -> DkgStatus {
    if handle.is_null() || out.is_null() {
        return DkgStatus::NullPointer;
    }
    let params = unsafe { &(*handle).params };
    let mode = try_ffi!(make_mode(e1, e2, twice_ell));
    let branch = try_ffi!(make_branch(branch_sign));
    let state = CoulombState { n, mode, branch };
    let e = try_ffi!(coulomb::energy(&state, params));
    unsafe { *out = e };
    DkgStatus::Ok
}

/// Bargmann index `k` of the mode; fails with `Supercritical` when the
/// coupling is too strong for this mode.
#[no_mangle]
pub extern "C" fn dkg_coulomb_bargmann_k(
    handle: *const DkgCoulomb,
    e1: u8,
    e2: u8,
    twice_ell: u32,
    out: *mut f64,
) -> DkgStatus {
    if handle.is_null() || out.is_null() {
        return DkgStatus::NullPointer;
    }
    let params = unsafe { &(*handle).params };
    let mode = try_ffi!(make_mode(e1, e2, twice_ell));
    let k = try_ffi!(coulomb::bargmann_k(&mode, params));
    unsafe { *out = k };
    DkgStatus::Ok
}

/// Normalized physical radial function evaluated at `rho > 0`.
#[no_mangle]
pub extern "C" fn dkg_coulomb_radial_eval(
    handle: *const DkgCoulomb,
    e1: u8,
    e2: u8,
    twice_ell: u32,
    n: u32,
    rho: f64,
    out: *mut f64,
) -> DkgStatus {
    if handle.is_null() || out.is_null() {
        return DkgStatus::NullPointer;
    }
    if !(rho >= 0.0) || !rho.is_finite() {
        return DkgStatus::Domain;
    }
    let params = unsafe { &(*handle).params };
    let mode = try_ffi!(make_mode(e1, e2, twice_ell));
    let state = CoulombState {
        n,
        mode,
        branch: Branch::Positive,
    };
    let f = try_ffi!(coulomb::physical_radial(&state, params));
    unsafe { *out = f.eval(rho) };
    DkgStatus::Ok
}

/// Creates an oscillator parameter handle. `omega_ratio` is
/// `hbar omega / mc^2` (> 0).
#[no_mangle]
pub extern "C" fn dkg_oscillator_new(
    omega_ratio: f64,
    mu1: f64,
    mu2: f64,
    out: *mut *mut DkgOscillator,
) -> DkgStatus {
    if out.is_null() {
        return DkgStatus::NullPointer;
    }
    let mu = try_ffi!(DunklParams::from_f64(mu1, mu2));
    let params = try_ffi!(OscillatorParams::new(
        mu,
        omega_ratio,
        PhysicalScales::default()
    ));
    unsafe { *out = Box::into_raw(Box::new(DkgOscillator { params })) };
    DkgStatus::Ok
}

/// Releases an oscillator handle. Passing null is a no-op.
#[no_mangle]
pub extern "C" fn dkg_oscillator_free(handle: *mut DkgOscillator) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Oscillator energy in units of `mc^2`.
#[no_mangle]
pub extern "C" fn dkg_oscillator_energy(
    handle: *const DkgOscillator,
    e1: u8,
    e2: u8,
    twice_ell: u32,
    n: u32,
    branch_sign: i32,
    out: *mut f64,
) -> DkgStatus {
    if handle.is_null() || out.is_null() {
        return DkgStatus::NullPointer;
    }
    let params = unsafe { &(*handle).params };
    let mode = try_ffi!(make_mode(e1, e2, twice_ell));
    let branch = try_ffi!(make_branch(branch_sign));
    let state = OscState { n, mode, branch };
    unsafe { *out = oscillator::energy(&state, params) };
    DkgStatus::Ok
}

/// Normalized oscillator radial function evaluated at `r >= 0`.
#[no_mangle]
pub extern "C" fn dkg_oscillator_radial_eval(
    handle: *const DkgOscillator,
    e1: u8,
    e2: u8,
    twice_ell: u32,
    n: u32,
    r: f64,
    out: *mut f64,
) -> DkgStatus {
    if handle.is_null() || out.is_null() {
        return DkgStatus::NullPointer;
    }
    if !(r >= 0.0) || !r.is_finite() {
        return DkgStatus::Domain;
    }
    let params = unsafe { &(*handle).params };
    let mode = try_ffi!(make_mode(e1, e2, twice_ell));
    let state = OscState {
        n,
        mode,
        branch: Branch::Positive,
    };
    let f = try_ffi!(oscillator::radial_eigenfunction(&state, params));
    unsafe { *out = f.eval(r) };
    DkgStatus::Ok
}

/// Normalized angular eigenfunction evaluated at `phi`.
#[no_mangle]
pub extern "C" fn dkg_angular_eval(
    mu1: f64,
    mu2: f64,
    e1: u8,
    e2: u8,
    twice_ell: u32,
    phi: f64,
    out: *mut f64,
) -> DkgStatus {
    if out.is_null() {
        return DkgStatus::NullPointer;
    }
    let mu = try_ffi!(DunklParams::from_f64(mu1, mu2));
    let mode = try_ffi!(make_mode(e1, e2, twice_ell));
    let f = try_ffi!(AngularEigenfunction::new(
        mode,
        &mu,
        &QuadratureSpec::default()
    ));
    let v = try_ffi!(f.eval(phi));
    unsafe { *out = v };
    DkgStatus::Ok
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coulomb_round_trip() {
        let mut h: *mut DkgCoulomb = std::ptr::null_mut();
        assert_eq!(dkg_coulomb_new(0.3, 0.25, 0.25, &mut h), DkgStatus::Ok);
        let mut e = 0.0;
        assert_eq!(dkg_coulomb_energy(h, 0, 0, 0, 0, 1, &mut e), DkgStatus::Ok);
        assert!((e - 0.9486833).abs() < 1e-7);
        let mut k = 0.0;
        assert_eq!(dkg_coulomb_bargmann_k(h, 0, 0, 0, &mut k), DkgStatus::Ok);
        assert!((k - 0.9).abs() < 1e-12);
        dkg_coulomb_free(h);
    }

    #[test]
    fn supercritical_maps_to_status() {
        let mut h: *mut DkgCoulomb = std::ptr::null_mut();
        assert_eq!(dkg_coulomb_new(2.0, 0.0, 0.0, &mut h), DkgStatus::Ok);
        let mut e = 0.0;
        assert_eq!(
            dkg_coulomb_energy(h, 0, 0, 0, 0, 1, &mut e),
            DkgStatus::Supercritical
        );
        dkg_coulomb_free(h);
    }

    #[test]
    fn invalid_inputs_map_to_status() {
        let mut h: *mut DkgCoulomb = std::ptr::null_mut();
        assert_eq!(
            dkg_coulomb_new(-1.0, 0.0, 0.0, &mut h),
            DkgStatus::Domain
        );
        assert_eq!(
            dkg_coulomb_new(0.3, 0.25, 0.25, std::ptr::null_mut()),
            DkgStatus::NullPointer
        );
        assert_eq!(dkg_coulomb_new(0.3, 0.25, 0.25, &mut h), DkgStatus::Ok);
        let mut e = 0.0;
        // parity mismatch: half-integer ell in the even sector
        assert_eq!(
            dkg_coulomb_energy(h, 0, 0, 1, 0, 1, &mut e),
            DkgStatus::InvalidMode
        );
        assert_eq!(
            dkg_coulomb_energy(h, 0, 0, 0, 0, 7, &mut e),
            DkgStatus::Domain
        );
        dkg_coulomb_free(h);
    }

    #[test]
    fn oscillator_round_trip() {
        let mut h: *mut DkgOscillator = std::ptr::null_mut();
        assert_eq!(dkg_oscillator_new(1.0, 0.0, 0.0, &mut h), DkgStatus::Ok);
        let mut e = 0.0;
        assert_eq!(
            dkg_oscillator_energy(h, 1, 1, 2, 0, 1, &mut e),
            DkgStatus::Ok
        );
        assert_eq!(e, 3.0);
        let mut v = 0.0;
        assert_eq!(
            dkg_oscillator_radial_eval(h, 0, 0, 0, 0, 1.0, &mut v),
            DkgStatus::Ok
        );
        assert!(v > 0.0);
        dkg_oscillator_free(h);
    }

    #[test]
    fn angular_eval_matches_fourier_limit() {
        let mut v = 0.0;
        // mu = 0, sector (0,0), ell = 1: proportional to cos(2 phi)
        assert_eq!(dkg_angular_eval(0.0, 0.0, 0, 0, 2, 0.0, &mut v), DkgStatus::Ok);
        let mut w = 0.0;
        assert_eq!(
            dkg_angular_eval(0.0, 0.0, 0, 0, 2, std::f64::consts::PI / 4.0, &mut w),
            DkgStatus::Ok
        );
        assert!(v.abs() > 0.1);
        assert!(w.abs() < 1e-10);
    }

    #[test]
    fn version_is_nul_terminated() {
        let s = unsafe { std::ffi::CStr::from_ptr(dkg_version()) };
        assert!(!s.to_str().unwrap().is_empty());
    }
}
