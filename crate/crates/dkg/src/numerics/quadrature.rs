//! Adaptive Gauss-Legendre quadrature for the weighted angular and radial
//! inner products.
//!
//! The angular weight `|cos phi|^{2 mu1} |sin phi|^{2 mu2}` has integrable
//! endpoint singularities at multiples of pi/2 when `mu < 1/2`, so the
//! integral is split per quadrant and refined towards the endpoints; the
//! Gauss rule never evaluates the endpoints themselves. Radial integrals over
//! `[0, inf)` are handled by dyadic segmentation, relying on the exponential
//! decay of every integrand that occurs here.

use std::sync::OnceLock;

use crate::error::{DkgError, Result};

/// Tolerance and refinement budget for a quadrature request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub target_abs_tol: f64,
    pub max_subdivisions: u32,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            target_abs_tol: 1e-10,
            max_subdivisions: 60,
        }
    }
}

impl QuadratureSpec {
    pub fn new(target_abs_tol: f64, max_subdivisions: u32) -> Result<Self> {
        if !(target_abs_tol > 0.0) {
            return Err(DkgError::domain("target_abs_tol must be > 0"));
        }
        if max_subdivisions < 1 {
            return Err(DkgError::domain("max_subdivisions must be >= 1"));
        }
        Ok(Self {
            target_abs_tol,
            max_subdivisions,
        })
    }
}

const GL_POINTS: usize = 20;

/// Nodes and weights of the 20-point Gauss-Legendre rule on [-1, 1],
/// computed once by Newton iteration on P_20.
fn gl_rule() -> &'static ([f64; GL_POINTS], [f64; GL_POINTS]) {
    static RULE: OnceLock<([f64; GL_POINTS], [f64; GL_POINTS])> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GL_POINTS;
        let mut nodes = [0.0; GL_POINTS];
        let mut weights = [0.0; GL_POINTS];
        for i in 0..n {
            // Chebyshev-based initial guess
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    })
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut pm1 = 1.0;
    let mut p = x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * p - kf * pm1) / (kf + 1.0);
        pm1 = p;
        p = next;
    }
    let dp = (n as f64) * (x * p - pm1) / (x * x - 1.0);
    (p, dp)
}

fn gl_panel(f: &mut dyn FnMut(f64) -> f64, a: f64, b: f64) -> f64 {
    let (nodes, weights) = gl_rule();
    let c = 0.5 * (b - a);
    let m = 0.5 * (a + b);
    let mut acc = 0.0;
    for i in 0..GL_POINTS {
        acc += weights[i] * f(m + c * nodes[i]);
    }
    c * acc
}

/// Adaptive bisection on [a, b]; returns (value, error estimate).
fn adaptive(
    f: &mut dyn FnMut(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
) -> (f64, f64) {
    let whole = gl_panel(f, a, b);
    let m = 0.5 * (a + b);
    let left = gl_panel(f, a, m);
    let right = gl_panel(f, m, b);
    let err = (whole - left - right).abs();
    if err <= tol || depth == 0 {
        (left + right, err)
    } else {
        let (lv, le) = adaptive(f, a, m, 0.5 * tol, depth - 1);
        let (rv, re) = adaptive(f, m, b, 0.5 * tol, depth - 1);
        (lv + rv, le + re)
    }
}

fn check_accuracy(value: f64, err: f64, spec: &QuadratureSpec) -> Result<f64> {
    if err > spec.target_abs_tol {
        Err(DkgError::Accuracy {
            requested: spec.target_abs_tol,
            achieved: err,
        })
    } else {
        Ok(value)
    }
}

/// Weighted angular integral
/// `int_0^{2pi} f(phi) |cos phi|^{2 mu1} |sin phi|^{2 mu2} dphi`.
pub fn angular_integral(
    mut f: impl FnMut(f64) -> f64,
    mu1: f64,
    mu2: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if mu1 < 0.0 || mu2 < 0.0 {
        return Err(DkgError::domain("angular_integral: mu must be >= 0"));
    }
    let mut g = |phi: f64| {
        f(phi) * phi.cos().abs().powf(2.0 * mu1) * phi.sin().abs().powf(2.0 * mu2)
    };
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut total = 0.0;
    let mut err = 0.0;
    for q in 0..4 {
        let (v, e) = adaptive(
            &mut g,
            q as f64 * half_pi,
            (q + 1) as f64 * half_pi,
            0.25 * spec.target_abs_tol,
            spec.max_subdivisions,
        );
        total += v;
        err += e;
    }
    check_accuracy(total, err, spec)
}

/// Weighted radial integral `int_0^inf f(rho) rho^{weight_exponent} drho`
/// for integrands with (at least) exponential decay.
pub fn radial_integral(
    mut f: impl FnMut(f64) -> f64,
    weight_exponent: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if weight_exponent <= -1.0 {
        return Err(DkgError::domain(
            "radial_integral: weight_exponent must be > -1",
        ));
    }
    let mut g = |rho: f64| f(rho) * rho.powf(weight_exponent);
    let seg_tol = 0.02 * spec.target_abs_tol;
    let mut total = 0.0;
    let mut err = 0.0;
    let mut a = 0.0f64;
    let mut b = 1.0f64;
    let mut tail_count = 0;
    loop {
        let (v, e) = adaptive(&mut g, a, b, seg_tol, spec.max_subdivisions);
        total += v;
        err += e;
        // two consecutive negligible dyadic segments terminate the tail
        if v.abs() < seg_tol {
            tail_count += 1;
            if tail_count >= 2 {
                break;
            }
        } else {
            tail_count = 0;
        }
        a = b;
        b *= 2.0;
        if b > 1e9 {
            return Err(DkgError::Accuracy {
                requested: spec.target_abs_tol,
                achieved: f64::INFINITY,
            });
        }
    }
    check_accuracy(total, err, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::log_gamma;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::new(0.0, 10).is_err());
        assert!(QuadratureSpec::new(1e-8, 0).is_err());
        assert!(QuadratureSpec::new(1e-8, 1).is_ok());
    }

    #[test]
    fn angular_unit_weightless() {
        let v = angular_integral(|_| 1.0, 0.0, 0.0, &spec()).unwrap();
        assert!((v - 2.0 * std::f64::consts::PI).abs() < 1e-10);
    }

    /// Beta-function oracle: int_0^{2pi} |cos|^{2a} |sin|^{2b} dphi
    /// = 2 Gamma(a+1/2) Gamma(b+1/2) / Gamma(a+b+1).
    fn weighted_circumference(mu1: f64, mu2: f64) -> f64 {
        2.0 * (log_gamma(mu1 + 0.5).unwrap() + log_gamma(mu2 + 0.5).unwrap()
            - log_gamma(mu1 + mu2 + 1.0).unwrap())
            .exp()
    }

    #[test]
    fn angular_beta_identity() {
        // mu1 = mu2 = 1/2 gives exactly 2
        let v = angular_integral(|_| 1.0, 0.5, 0.5, &spec()).unwrap();
        assert!((v - 2.0).abs() < 1e-10, "got {v}");
        for mu1 in [0.0, 0.25, 0.5, 1.5] {
            for mu2 in [0.0, 0.25, 0.5, 1.5] {
                let v = angular_integral(|_| 1.0, mu1, mu2, &spec()).unwrap();
                let expect = weighted_circumference(mu1, mu2);
                assert!(
                    (v - expect).abs() < 1e-10,
                    "mu=({mu1},{mu2}): {v} vs {expect}"
                );
            }
        }
    }

    #[test]
    fn radial_exponential() {
        let v = radial_integral(|r| (-r).exp(), 0.0, &spec()).unwrap();
        assert!((v - 1.0).abs() < 1e-10);
    }

    #[test]
    fn radial_gamma_moments() {
        // int_0^inf e^{-2r} r^{a+1} dr = Gamma(a+2) / 2^{a+2}
        for a in [0.0, 0.3, 1.7, 4.0] {
            let v = radial_integral(|r| (-2.0 * r).exp(), a + 1.0, &spec()).unwrap();
            let expect = log_gamma(a + 2.0).unwrap().exp() / 2f64.powf(a + 2.0);
            assert!((v - expect).abs() < 1e-10, "a={a}: {v} vs {expect}");
        }
    }

    #[test]
    fn radial_gaussian_moment() {
        // int_0^inf e^{-r^2} r dr = 1/2
        let v = radial_integral(|r| (-r * r).exp(), 1.0, &spec()).unwrap();
        assert!((v - 0.5).abs() < 1e-10);
    }

    #[test]
    fn nonconvergence_reports_accuracy_error() {
        let tight = QuadratureSpec::new(1e-16, 2).unwrap();
        let r = angular_integral(|phi| (50.0 * phi).sin().abs(), 0.25, 0.25, &tight);
        match r {
            Err(DkgError::Accuracy { requested, achieved }) => {
                assert!(achieved > requested);
            }
            other => panic!("expected accuracy error, got {other:?}"),
        }
    }
}
