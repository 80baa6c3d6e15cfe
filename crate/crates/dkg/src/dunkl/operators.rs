//! Dunkl derivatives, reflections, the Dunkl Laplacian and angular momentum
//! as exact linear operators on [`BivariatePoly`], plus finite-degree
//! commutator certification and a numeric Dunkl derivative for callables.

use std::sync::Arc;

use super::poly::{rational, BivariatePoly, Rational};
use super::DunklParams;
use crate::error::{DkgError, Result};

/// Reflection / derivative axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// Dunkl derivative in x: `D1 p = dp/dx + (mu1/x)(p(x,y) - p(-x,y))`.
///
/// `(1 - R1) p` is odd in x, so the division is exact and the result is
/// again a polynomial.
pub fn dunkl_d1(mu: &DunklParams, p: &BivariatePoly) -> BivariatePoly {
    let diff = p.sub(&p.reflect_x());
    let refl = diff
        .div_x()
        .expect("(1 - R1)p is odd in x")
        .scale(mu.mu1());
    p.partial_x().add(&refl)
}

/// Dunkl derivative in y.
pub fn dunkl_d2(mu: &DunklParams, p: &BivariatePoly) -> BivariatePoly {
    let diff = p.sub(&p.reflect_y());
    let refl = diff
        .div_y()
        .expect("(1 - R2)p is odd in y")
        .scale(mu.mu2());
    p.partial_y().add(&refl)
}

/// Reflection operator on the chosen axis.
pub fn reflect(axis: Axis, p: &BivariatePoly) -> BivariatePoly {
    match axis {
        Axis::X => p.reflect_x(),
        Axis::Y => p.reflect_y(),
    }
}

/// Dunkl Laplacian as `D1^2 + D2^2`.
pub fn dunkl_laplacian(mu: &DunklParams, p: &BivariatePoly) -> BivariatePoly {
    dunkl_d1(mu, &dunkl_d1(mu, p)).add(&dunkl_d2(mu, &dunkl_d2(mu, p)))
}

/// Dunkl Laplacian from the expanded Cartesian form
/// `d^2/dx^2 + d^2/dy^2 + 2mu1/x d/dx + 2mu2/y d/dy
///  - mu1 (1-R1)/x^2 - mu2 (1-R2)/y^2`,
/// evaluated per monomial (the singular pieces cancel termwise).
pub fn dunkl_laplacian_expanded(mu: &DunklParams, p: &BivariatePoly) -> BivariatePoly {
    let mut out = BivariatePoly::zero();
    for (&(a, b), c) in p.terms() {
        // x-part coefficient on x^{a-2}: a(a-1) + 2 mu1 a - mu1 (1 - (-1)^a)
        if a >= 2 {
            let parity = if a % 2 == 1 { 2i64 } else { 0 };
            let coef = rational((a * (a - 1)) as i64, 1)
                + mu.mu1() * rational(2 * a as i64 - parity, 1);
            out.add_term(a - 2, b, c * coef);
        }
        if b >= 2 {
            let parity = if b % 2 == 1 { 2i64 } else { 0 };
            let coef = rational((b * (b - 1)) as i64, 1)
                + mu.mu2() * rational(2 * b as i64 - parity, 1);
            out.add_term(a, b - 2, c * coef);
        }
    }
    out
}

/// The real angular-momentum combination `L = x D2 - y D1`
/// (`L_z = -i hbar L`; the `-i hbar` factor is bookkept by callers).
pub fn angular_momentum(mu: &DunklParams, p: &BivariatePoly) -> BivariatePoly {
    dunkl_d2(mu, p).mul_x().sub(&dunkl_d1(mu, p).mul_y())
}

/// A labeled exact linear operator on bivariate polynomials.
#[derive(Clone)]
pub struct LinearOperator {
    pub label: String,
    action: Arc<dyn Fn(&BivariatePoly) -> BivariatePoly + Send + Sync>,
}

impl LinearOperator {
    pub fn new(
        label: impl Into<String>,
        action: impl Fn(&BivariatePoly) -> BivariatePoly + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            action: Arc::new(action),
        }
    }

    pub fn apply(&self, p: &BivariatePoly) -> BivariatePoly {
        (self.action)(p)
    }

    /// Operator product `self . other` (apply `other` first).
    pub fn compose(&self, other: &LinearOperator) -> LinearOperator {
        let a = self.action.clone();
        let b = other.action.clone();
        LinearOperator {
            label: format!("{}{}", self.label, other.label),
            action: Arc::new(move |p| a(&b(p))),
        }
    }

    pub fn add(&self, other: &LinearOperator) -> LinearOperator {
        let a = self.action.clone();
        let b = other.action.clone();
        LinearOperator {
            label: format!("{}+{}", self.label, other.label),
            action: Arc::new(move |p| a(p).add(&b(p))),
        }
    }

    pub fn sub(&self, other: &LinearOperator) -> LinearOperator {
        let a = self.action.clone();
        let b = other.action.clone();
        LinearOperator {
            label: format!("{}-{}", self.label, other.label),
            action: Arc::new(move |p| a(p).sub(&b(p))),
        }
    }

    pub fn scale(&self, factor: Rational) -> LinearOperator {
        let a = self.action.clone();
        LinearOperator {
            label: format!("({})*{}", factor, self.label),
            action: Arc::new(move |p| a(p).scale(&factor)),
        }
    }
}

pub fn op_d1(mu: DunklParams) -> LinearOperator {
    LinearOperator::new("D1", move |p| dunkl_d1(&mu, p))
}

pub fn op_d2(mu: DunklParams) -> LinearOperator {
    LinearOperator::new("D2", move |p| dunkl_d2(&mu, p))
}

pub fn op_reflect(axis: Axis) -> LinearOperator {
    let label = match axis {
        Axis::X => "R1",
        Axis::Y => "R2",
    };
    LinearOperator::new(label, move |p| reflect(axis, p))
}

pub fn op_mul_x() -> LinearOperator {
    LinearOperator::new("x", |p| p.mul_x())
}

pub fn op_mul_y() -> LinearOperator {
    LinearOperator::new("y", |p| p.mul_y())
}

pub fn op_partial_x() -> LinearOperator {
    LinearOperator::new("dx", |p| p.partial_x())
}

pub fn op_partial_y() -> LinearOperator {
    LinearOperator::new("dy", |p| p.partial_y())
}

pub fn op_dunkl_laplacian(mu: DunklParams) -> LinearOperator {
    LinearOperator::new("Lap_D", move |p| dunkl_laplacian(&mu, p))
}

pub fn op_angular_momentum(mu: DunklParams) -> LinearOperator {
    LinearOperator::new("L", move |p| angular_momentum(&mu, p))
}

/// Action table of `AB - BA` on every monomial of total degree `<= degree`.
#[derive(Debug, Clone)]
pub struct CommutatorReport {
    pub label: String,
    pub degree: u32,
    /// `(monomial exponents, residual polynomial)`, one entry per monomial.
    pub entries: Vec<((u32, u32), BivariatePoly)>,
}

impl CommutatorReport {
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|(_, r)| r.is_zero())
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = &((u32, u32), BivariatePoly)> {
        self.entries.iter().filter(|(_, r)| !r.is_zero())
    }
}

/// Evaluates `(AB - BA) p` on every monomial with total degree `<= degree`.
pub fn commutator_table(a: &LinearOperator, b: &LinearOperator, degree: u32) -> CommutatorReport {
    let mut entries = Vec::new();
    for m in BivariatePoly::monomial_basis(degree) {
        let &(dx, dy) = m.terms().next().expect("monomial").0;
        let res = a.apply(&b.apply(&m)).sub(&b.apply(&a.apply(&m)));
        entries.push(((dx, dy), res));
    }
    CommutatorReport {
        label: format!("[{},{}]", a.label, b.label),
        degree,
        entries,
    }
}

/// Result of a batch of exact identity checks.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub checks: Vec<(String, bool)>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

fn operator_difference_is_zero(a: &LinearOperator, b: &LinearOperator, degree: u32) -> bool {
    BivariatePoly::monomial_basis(degree)
        .iter()
        .all(|m| a.apply(m) == b.apply(m))
}

/// Certifies `R1 D1 = -D1 R1`, `R1^2 = 1`, `dx R1 = -R1 dx`, `R1 x = -x R1`
/// and the y-axis mirrors, exactly on monomials up to `degree`.
pub fn anticommutation_check_r1d1(mu: &DunklParams, degree: u32) -> IdentityReport {
    let d1 = op_d1(mu.clone());
    let d2 = op_d2(mu.clone());
    let r1 = op_reflect(Axis::X);
    let r2 = op_reflect(Axis::Y);
    let minus_one = rational(-1, 1);

    let mut checks = Vec::new();
    let mut push = |name: &str, lhs: LinearOperator, rhs: LinearOperator| {
        checks.push((name.to_string(), operator_difference_is_zero(&lhs, &rhs, degree)));
    };
    push("R1D1 = -D1R1", r1.compose(&d1), d1.compose(&r1).scale(minus_one.clone()));
    push("R2D2 = -D2R2", r2.compose(&d2), d2.compose(&r2).scale(minus_one.clone()));
    push(
        "R1^2 = 1",
        r1.compose(&r1),
        LinearOperator::new("id", |p| p.clone()),
    );
    push(
        "R2^2 = 1",
        r2.compose(&r2),
        LinearOperator::new("id", |p| p.clone()),
    );
    push(
        "dxR1 = -R1dx",
        op_partial_x().compose(&r1),
        r1.compose(&op_partial_x()).scale(minus_one.clone()),
    );
    push(
        "dyR2 = -R2dy",
        op_partial_y().compose(&r2),
        r2.compose(&op_partial_y()).scale(minus_one.clone()),
    );
    push(
        "R1x = -xR1",
        r1.compose(&op_mul_x()),
        op_mul_x().compose(&r1).scale(minus_one.clone()),
    );
    push(
        "R2y = -yR2",
        r2.compose(&op_mul_y()),
        op_mul_y().compose(&r2).scale(minus_one),
    );
    IdentityReport { checks }
}

/// Certifies `[L, Lap_D] = 0` together with the intermediate identities
/// `[xD2, Lap_D] = -2 D1 D2` and `[yD1, Lap_D] = -2 D2 D1` (both following
/// from `[Lap_D, x] = 2 D1`, `[Lap_D, y] = 2 D2`, whose difference makes the
/// angular momentum a constant of motion), exactly on monomials up to
/// `degree`.
pub fn lz_commutes_with_dunkl_laplacian(mu: &DunklParams, degree: u32) -> IdentityReport {
    let d1 = op_d1(mu.clone());
    let d2 = op_d2(mu.clone());
    let lap = op_dunkl_laplacian(mu.clone());
    let lz = op_angular_momentum(mu.clone());
    let xd2 = op_mul_x().compose(&d2);
    let yd1 = op_mul_y().compose(&d1);

    let mut checks = Vec::new();
    checks.push((
        "[L, Lap_D] = 0".to_string(),
        commutator_table(&lz, &lap, degree).is_zero(),
    ));
    let minus_two = rational(-2, 1);
    let comm_x =
        lz_commutator_residual(&xd2, &lap, &d1.compose(&d2).scale(minus_two.clone()), degree);
    checks.push(("[xD2, Lap_D] = -2D1D2".to_string(), comm_x));
    let comm_y = lz_commutator_residual(&yd1, &lap, &d2.compose(&d1).scale(minus_two), degree);
    checks.push(("[yD1, Lap_D] = -2D2D1".to_string(), comm_y));
    IdentityReport { checks }
}

fn lz_commutator_residual(
    a: &LinearOperator,
    b: &LinearOperator,
    expected: &LinearOperator,
    degree: u32,
) -> bool {
    BivariatePoly::monomial_basis(degree).iter().all(|m| {
        a.apply(&b.apply(m)).sub(&b.apply(&a.apply(m))) == expected.apply(m)
    })
}

/// Numeric Dunkl derivative of a callable at a point: 4th-order central
/// difference for the derivative part plus the exact reflection-difference
/// term `mu/x (f(x,y) - f(-x,y))`.
pub fn numeric_dunkl_apply(
    mu: &DunklParams,
    f: impl Fn(f64, f64) -> f64,
    axis: Axis,
    point: (f64, f64),
    h: f64,
) -> Result<f64> {
    let (x, y) = point;
    if h <= 0.0 {
        return Err(DkgError::domain("numeric_dunkl_apply: h must be > 0"));
    }
    match axis {
        Axis::X => {
            if x == 0.0 {
                return Err(DkgError::domain(
                    "numeric Dunkl derivative undefined on the reflection axis x = 0",
                ));
            }
            let deriv = (-f(x + 2.0 * h, y) + 8.0 * f(x + h, y) - 8.0 * f(x - h, y)
                + f(x - 2.0 * h, y))
                / (12.0 * h);
            Ok(deriv + mu.mu1_f64() / x * (f(x, y) - f(-x, y)))
        }
        Axis::Y => {
            if y == 0.0 {
                return Err(DkgError::domain(
                    "numeric Dunkl derivative undefined on the reflection axis y = 0",
                ));
            }
            let deriv = (-f(x, y + 2.0 * h) + 8.0 * f(x, y + h) - 8.0 * f(x, y - h)
                + f(x, y - 2.0 * h))
                / (12.0 * h);
            Ok(deriv + mu.mu2_f64() / y * (f(x, y) - f(x, -y)))
        }
    }
}

/// Degrees certified by default in the verification suites.
pub const DEFAULT_CERTIFICATION_DEGREE: u32 = 12;
