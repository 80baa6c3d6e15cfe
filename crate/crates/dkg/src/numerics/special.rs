//! Generalized Laguerre and Jacobi polynomials by ascending three-term
//! recurrence, and the log-gamma function.
//!
//! The recurrences are stable for the degrees needed here (n up to ~30).

use crate::error::{DkgError, Result};

/// Generalized Laguerre polynomial `L_n^alpha(x)`.
pub fn laguerre(n: u32, alpha: f64, x: f64) -> Result<f64> {
    if alpha <= -1.0 {
        return Err(DkgError::domain(format!(
            "laguerre: alpha must be > -1, got {alpha}"
        )));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut lm1 = 1.0; // L_0
    let mut l = 1.0 + alpha - x; // L_1
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * l - (kf + alpha) * lm1) / (kf + 1.0);
        lm1 = l;
        l = next;
    }
    Ok(l)
}

/// d/dx `L_n^alpha(x)` via `d/dx L_n^a = -L_{n-1}^{a+1}`.
pub fn laguerre_derivative(n: u32, alpha: f64, x: f64) -> Result<f64> {
    if alpha <= -1.0 {
        return Err(DkgError::domain(format!(
            "laguerre_derivative: alpha must be > -1, got {alpha}"
        )));
    }
    if n == 0 {
        return Ok(0.0);
    }
    Ok(-laguerre(n - 1, alpha + 1.0, x)?)
}

/// Jacobi polynomial `P_n^{(a,b)}(x)`.
pub fn jacobi(n: u32, a: f64, b: f64, x: f64) -> Result<f64> {
    if a <= -1.0 || b <= -1.0 {
        return Err(DkgError::domain(format!(
            "jacobi: parameters must be > -1, got a={a}, b={b}"
        )));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut pm1 = 1.0; // P_0
    let mut p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x; // P_1
    for k in 1..n {
        let kf = k as f64;
        // standard recurrence with c = 2k + a + b
        let c = 2.0 * kf + a + b;
        let a1 = 2.0 * (kf + 1.0) * (kf + a + b + 1.0) * c;
        let a2 = (c + 1.0) * (a * a - b * b);
        let a3 = c * (c + 1.0) * (c + 2.0);
        let a4 = 2.0 * (kf + a) * (kf + b) * (c + 2.0);
        let next = ((a2 + a3 * x) * p - a4 * pm1) / a1;
        pm1 = p;
        p = next;
    }
    Ok(p)
}

/// d/dx `P_n^{(a,b)}(x)` via `d/dx P_n^{(a,b)} = ((n+a+b+1)/2) P_{n-1}^{(a+1,b+1)}`.
pub fn jacobi_derivative(n: u32, a: f64, b: f64, x: f64) -> Result<f64> {
    if a <= -1.0 || b <= -1.0 {
        return Err(DkgError::domain(format!(
            "jacobi_derivative: parameters must be > -1, got a={a}, b={b}"
        )));
    }
    if n == 0 {
        return Ok(0.0);
    }
    let nf = n as f64;
    Ok(0.5 * (nf + a + b + 1.0) * jacobi(n - 1, a + 1.0, b + 1.0, x)?)
}

/// d^2/dx^2 `P_n^{(a,b)}(x)`.
pub fn jacobi_second_derivative(n: u32, a: f64, b: f64, x: f64) -> Result<f64> {
    if n < 2 {
        // parameter validation still applies
        jacobi_derivative(n, a, b, x)?;
        return Ok(0.0);
    }
    let nf = n as f64;
    let c = 0.25 * (nf + a + b + 1.0) * (nf + a + b + 2.0);
    Ok(c * jacobi(n - 2, a + 2.0, b + 2.0, x)?)
}

/// Monomial expansion of `norm * L_n^{alpha}(scale * t)`: entry `k` is the
/// coefficient of `t^k`, i.e. `norm * scale^k * (-1)^k * C(n+alpha, n-k) / k!`.
pub fn laguerre_expansion_coefficients(
    n: u32,
    alpha: f64,
    scale: f64,
    norm: f64,
) -> Result<Vec<f64>> {
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    let ln_top = log_gamma(n as f64 + alpha + 1.0)?;
    let mut ln_kfact = 0.0;
    let mut scale_pow = 1.0;
    for k in 0..=n {
        if k > 0 {
            ln_kfact += (k as f64).ln();
        }
        let ln_binom =
            ln_top - log_gamma(k as f64 + alpha + 1.0)? - log_gamma((n - k) as f64 + 1.0)?;
        let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
        coeffs.push(norm * sign * scale_pow * (ln_binom - ln_kfact).exp());
        scale_pow *= scale;
    }
    Ok(coeffs)
}

/// ln Gamma(x) for x > 0 (Lanczos approximation, g = 7, 9 terms).
pub fn log_gamma(x: f64) -> Result<f64> {
    if x <= 0.0 || !x.is_finite() {
        return Err(DkgError::domain(format!(
            "log_gamma: argument must be positive, got {x}"
        )));
    }
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        // reflection keeps full accuracy near 0
        let s = std::f64::consts::PI / (std::f64::consts::PI * x).sin();
        return Ok(s.ln() - log_gamma(1.0 - x)?);
    }
    let z = x - 1.0;
    let mut acc = COEF[0];
    for (i, &c) in COEF.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    Ok(0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn to_f64(r: &BigRational) -> f64 {
        let n = r.numer();
        let d = r.denom();
        // enough precision for the test magnitudes involved
        let scale = BigInt::from(1u64) << 80;
        let q: BigInt = (n * &scale) / d;
        let qf: f64 = q.to_string().parse::<f64>().unwrap();
        qf / 2f64.powi(80)
    }

    /// Exact rational series oracle: L_n^a(x) = sum_k (-1)^k C(n+a, n-k) x^k / k!.
    fn laguerre_series_oracle(n: u32, alpha: BigRational, x: BigRational) -> BigRational {
        let mut total = BigRational::zero();
        for k in 0..=n {
            // C(n+alpha, n-k) = prod_{j=1}^{n-k} (alpha + k + j) / (n-k)!
            let mut binom = BigRational::one();
            for j in 1..=(n - k) {
                binom *= &alpha + rat((k + j) as i64, 1);
                binom /= rat(j as i64, 1);
            }
            let mut term = binom;
            let mut xpow = BigRational::one();
            let mut kfact = BigRational::one();
            for j in 1..=k {
                xpow *= &x;
                kfact *= rat(j as i64, 1);
            }
            term *= xpow / kfact;
            if k % 2 == 1 {
                term = -term;
            }
            total += term;
        }
        total
    }

    /// Exact rational series oracle via the hypergeometric representation:
    /// P_n^{(a,b)}(x) = C(n+a, n) * 2F1(-n, n+a+b+1; a+1; (1-x)/2).
    fn jacobi_series_oracle(
        n: u32,
        a: BigRational,
        b: BigRational,
        x: BigRational,
    ) -> BigRational {
        let z = (BigRational::one() - &x) / rat(2, 1);
        let mut prefac = BigRational::one();
        for j in 1..=n {
            prefac *= &a + rat(j as i64, 1);
            prefac /= rat(j as i64, 1);
        }
        let mut total = BigRational::zero();
        for k in 0..=n {
            // (-n)_k (n+a+b+1)_k / ((a+1)_k k!) * z^k
            let mut term = BigRational::one();
            for j in 0..k {
                term *= rat(-(n as i64) + j as i64, 1);
                term *= &a + &b + rat((n + 1 + j) as i64, 1);
                term /= &a + rat((1 + j) as i64, 1);
                term /= rat((j + 1) as i64, 1);
            }
            let mut zpow = BigRational::one();
            for _ in 0..k {
                zpow *= &z;
            }
            total += term * zpow;
        }
        prefac * total
    }

    #[test]
    fn laguerre_trivial_values() {
        assert_eq!(laguerre(0, 0.7, 3.2).unwrap(), 1.0);
        // L_1^a(x) = 1 + a - x
        assert!((laguerre(1, 0.5, 2.0).unwrap() - (-0.5)).abs() < 1e-15);
    }

    #[test]
    fn laguerre_matches_rational_series() {
        // frozen from the exact oracle: L_3^{1/4}(3/2)
        let oracle = laguerre_series_oracle(3, rat(1, 4), rat(3, 2));
        let got = laguerre(3, 0.25, 1.5).unwrap();
        assert!((got - to_f64(&oracle)).abs() < 1e-12, "got {got}");
    }

    #[test]
    fn laguerre_recurrence_vs_series_grid() {
        for n in 0..=12u32 {
            for (an, ad) in [(0i64, 1i64), (1, 4), (1, 2), (3, 2), (5, 1)] {
                for (xn, xd) in [(1i64, 10i64), (1, 2), (1, 1), (7, 2), (10, 1)] {
                    let oracle = to_f64(&laguerre_series_oracle(n, rat(an, ad), rat(xn, xd)));
                    let got = laguerre(n, an as f64 / ad as f64, xn as f64 / xd as f64).unwrap();
                    let scale = oracle.abs().max(1.0);
                    assert!(
                        (got - oracle).abs() / scale < 1e-10,
                        "n={n} a={an}/{ad} x={xn}/{xd}: {got} vs {oracle}"
                    );
                }
            }
        }
    }

    #[test]
    fn jacobi_trivial_values() {
        assert_eq!(jacobi(0, 0.3, 0.9, -0.4).unwrap(), 1.0);
        // Legendre case: P_1(x) = x
        assert!((jacobi(1, 0.0, 0.0, 0.5).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn jacobi_matches_rational_series() {
        let oracle = jacobi_series_oracle(2, rat(1, 2), rat(3, 2), rat(-1, 5));
        let got = jacobi(2, 0.5, 1.5, -0.2).unwrap();
        assert!((got - to_f64(&oracle)).abs() < 1e-12, "got {got}");
    }

    #[test]
    fn jacobi_recurrence_vs_series_grid() {
        for n in 0..=12u32 {
            for (an, ad) in [(-1i64, 2i64), (-1, 4), (0, 1), (1, 2), (3, 2)] {
                for (bn, bd) in [(-1i64, 2i64), (0, 1), (3, 4), (2, 1)] {
                    for (xn, xd) in [(-9i64, 10i64), (-1, 3), (0, 1), (2, 5), (9, 10)] {
                        let oracle = to_f64(&jacobi_series_oracle(
                            n,
                            rat(an, ad),
                            rat(bn, bd),
                            rat(xn, xd),
                        ));
                        let got = jacobi(
                            n,
                            an as f64 / ad as f64,
                            bn as f64 / bd as f64,
                            xn as f64 / xd as f64,
                        )
                        .unwrap();
                        let scale = oracle.abs().max(1.0);
                        assert!(
                            (got - oracle).abs() / scale < 1e-10,
                            "n={n}: {got} vs {oracle}"
                        );
                    }
                }
            }
        }
    }

    /// 4th-order central difference of g at x with step h.
    fn central_diff(g: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
        (-g(x + 2.0 * h) + 8.0 * g(x + h) - 8.0 * g(x - h) + g(x - 2.0 * h)) / (12.0 * h)
    }

    #[test]
    fn laguerre_derivative_trivial_and_fd() {
        assert_eq!(laguerre_derivative(0, 0.3, 5.0).unwrap(), 0.0);
        assert!((laguerre_derivative(1, 0.9, 2.3).unwrap() - (-1.0)).abs() < 1e-15);
        let fd = central_diff(|x| laguerre(4, 0.5, x).unwrap(), 0.8, 1e-3);
        let got = laguerre_derivative(4, 0.5, 0.8).unwrap();
        assert!((got - fd).abs() / got.abs().max(1.0) < 1e-8);
    }

    #[test]
    fn jacobi_derivative_trivial_and_fd() {
        assert_eq!(jacobi_derivative(0, 0.4, 0.6, 0.2).unwrap(), 0.0);
        assert!((jacobi_derivative(1, 0.0, 0.0, -0.7).unwrap() - 1.0).abs() < 1e-15);
        let fd = central_diff(|x| jacobi(3, 0.25, 0.75, x).unwrap(), 0.4, 1e-3);
        let got = jacobi_derivative(3, 0.25, 0.75, 0.4).unwrap();
        assert!((got - fd).abs() / got.abs().max(1.0) < 1e-8);
    }

    #[test]
    fn derivatives_match_fd_on_grid() {
        for n in 1..=8u32 {
            for x in [0.2, 0.9, 2.7] {
                let fd = central_diff(|t| laguerre(n, 0.8, t).unwrap(), x, 1e-3);
                let got = laguerre_derivative(n, 0.8, x).unwrap();
                if got.abs() > 1e-6 {
                    assert!((got - fd).abs() / got.abs() < 1e-7);
                }
            }
            for x in [-0.6, 0.1, 0.8] {
                let fd = central_diff(|t| jacobi(n, 0.3, 1.2, t).unwrap(), x, 1e-4);
                let got = jacobi_derivative(n, 0.3, 1.2, x).unwrap();
                if got.abs() > 1e-6 {
                    assert!((got - fd).abs() / got.abs() < 1e-7);
                }
            }
        }
    }

    #[test]
    fn jacobi_second_derivative_matches_fd() {
        let fd = central_diff(|t| jacobi_derivative(5, 0.3, 1.2, t).unwrap(), 0.35, 1e-4);
        let got = jacobi_second_derivative(5, 0.3, 1.2, 0.35).unwrap();
        assert!((got - fd).abs() / got.abs().max(1.0) < 1e-7);
    }

    #[test]
    fn log_gamma_known_values() {
        assert!(log_gamma(1.0).unwrap().abs() < 1e-14);
        assert!(log_gamma(2.0).unwrap().abs() < 1e-14);
        let half = log_gamma(0.5).unwrap();
        assert!((half - std::f64::consts::PI.sqrt().ln()).abs() < 1e-13);
    }

    #[test]
    fn log_gamma_recursion_oracle() {
        // Gamma(x+1) = x Gamma(x), walked down from 7.25 to the base interval
        let target = log_gamma(7.25).unwrap();
        let mut acc = log_gamma(1.25).unwrap();
        let mut x = 1.25f64;
        while x < 7.0 {
            acc += x.ln();
            x += 1.0;
        }
        assert!((target - acc).abs() < 1e-12 * target.abs().max(1.0));
    }

    #[test]
    fn log_gamma_rejects_nonpositive() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-3.0).is_err());
    }

    #[test]
    fn domain_errors() {
        assert!(laguerre(2, -1.0, 1.0).is_err());
        assert!(jacobi(2, -1.5, 0.0, 0.5).is_err());
        assert!(jacobi(2, 0.0, -1.0, 0.5).is_err());
    }
}
