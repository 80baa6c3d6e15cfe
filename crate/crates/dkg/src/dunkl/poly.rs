//! Bivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Convenience constructor for a rational from two machine integers.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A bivariate polynomial `sum c_{ab} x^a y^b` with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(deg_x: u32, deg_y: u32, coeff: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(deg_x, deg_y, coeff);
        p
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, deg_x: u32, deg_y: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((deg_x, deg_y)).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(deg_x, deg_y));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in other.terms.iter() {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in other.terms.iter() {
            out.add_term(a, b, -c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (&(a, b), c) in self.terms.iter() {
            out.terms.insert((a, b), c * factor);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a1, b1), c1) in self.terms.iter() {
            for (&(a2, b2), c2) in other.terms.iter() {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }

    pub fn mul_x(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in self.terms.iter() {
            out.terms.insert((a + 1, b), c.clone());
        }
        out
    }

    pub fn mul_y(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in self.terms.iter() {
            out.terms.insert((a, b + 1), c.clone());
        }
        out
    }

    pub fn partial_x(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in self.terms.iter() {
            if a > 0 {
                out.add_term(a - 1, b, c * rational(a as i64, 1));
            }
        }
        out
    }

    pub fn partial_y(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in self.terms.iter() {
            if b > 0 {
                out.add_term(a, b - 1, c * rational(b as i64, 1));
            }
        }
        out
    }

    /// `p(-x, y)`.
    pub fn reflect_x(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in self.terms.iter() {
            let c = if a % 2 == 1 { -c.clone() } else { c.clone() };
            out.terms.insert((a, b), c);
        }
        out
    }

    /// `p(x, -y)`.
    pub fn reflect_y(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in self.terms.iter() {
            let c = if b % 2 == 1 { -c.clone() } else { c.clone() };
            out.terms.insert((a, b), c);
        }
        out
    }

    /// Exact division by x. Returns `None` if any term is constant in x.
    pub fn div_x(&self) -> Option<Self> {
        let mut out = Self::zero();
        for (&(a, b), c) in self.terms.iter() {
            if a == 0 {
                return None;
            }
            out.terms.insert((a - 1, b), c.clone());
        }
        Some(out)
    }

    /// Exact division by y. Returns `None` if any term is constant in y.
    pub fn div_y(&self) -> Option<Self> {
        let mut out = Self::zero();
        for (&(a, b), c) in self.terms.iter() {
            if b == 0 {
                return None;
            }
            out.terms.insert((a, b - 1), c.clone());
        }
        Some(out)
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(a, b), c)| {
                c.to_f64().expect("rational to f64") * x.powi(a as i32) * y.powi(b as i32)
            })
            .sum()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    /// All monomials `x^a y^b` with `a + b <= degree`, ordered.
    pub fn monomial_basis(degree: u32) -> Vec<BivariatePoly> {
        let mut out = Vec::new();
        for total in 0..=degree {
            for a in 0..=total {
                out.push(BivariatePoly::monomial(a, total - a, Rational::one()));
            }
        }
        out
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| format!("({c})x^{a}y^{b}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(a: u32, b: u32) -> BivariatePoly {
        BivariatePoly::monomial(a, b, Rational::one())
    }

    #[test]
    fn arithmetic_is_exact() {
        let p = xy(2, 0).add(&xy(0, 1).scale(&rational(1, 3)));
        let q = p.sub(&p);
        assert!(q.is_zero());
        let r = p.mul(&p);
        // (x^2 + y/3)^2 = x^4 + 2/3 x^2 y + y^2/9
        let mut expect = xy(4, 0);
        expect.add_term(2, 1, rational(2, 3));
        expect.add_term(0, 2, rational(1, 9));
        assert_eq!(r, expect);
    }

    #[test]
    fn no_zero_terms_stored() {
        let mut p = BivariatePoly::zero();
        p.add_term(1, 1, rational(1, 2));
        p.add_term(1, 1, rational(-1, 2));
        assert!(p.is_zero());
        assert_eq!(p.terms().count(), 0);
    }

    #[test]
    fn reflection_flips_odd_degrees() {
        // R1(x^2 + y) = x^2 + y, R1(xy) = -xy, R2(x^3 y^2 + y^3) = x^3 y^2 - y^3
        let p = xy(2, 0).add(&xy(0, 1));
        assert_eq!(p.reflect_x(), p);
        assert_eq!(xy(1, 1).reflect_x(), xy(1, 1).scale(&rational(-1, 1)));
        let q = xy(3, 2).add(&xy(0, 3));
        assert_eq!(q.reflect_y(), xy(3, 2).sub(&xy(0, 3)));
    }

    #[test]
    fn exact_division() {
        let p = xy(3, 1).add(&xy(1, 0));
        assert_eq!(p.div_x().unwrap(), xy(2, 1).add(&xy(0, 0)));
        assert!(p.div_y().is_none());
    }

    #[test]
    fn basis_size() {
        // monomials with a+b <= d number (d+1)(d+2)/2
        assert_eq!(BivariatePoly::monomial_basis(12).len(), 91);
    }
}
