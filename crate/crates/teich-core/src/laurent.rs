//! Commutative Laurent polynomials in the variables `exp(Z_alpha / 2)`, one
//! per edge, with rational coefficients.
//!
//! A monomial is an integer exponent vector `u` standing for
//! `exp(u · Z / 2)`; classical geodesic functions live here.

use crate::fmath;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// Exact rational scalar.
pub type Rational = Ratio<i64>;

/// A finite sum of `exp(u · Z / 2)` monomials with rational coefficients.
///
/// Zero coefficients are never stored; the exponent dimension is fixed at
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentExpr {
    dim: usize,
    terms: BTreeMap<Vec<i32>, Rational>,
}

impl LaurentExpr {
    pub fn zero(dim: usize) -> Self {
        LaurentExpr { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(alloc::vec![0; dim], Rational::from_integer(1))
    }

    /// A single monomial `c · exp(u · Z / 2)`.
    pub fn monomial(u: Vec<i32>, c: Rational) -> Self {
        let dim = u.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(u, c);
        }
        LaurentExpr { dim, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, u: &[i32]) -> Rational {
        self.terms.get(u).copied().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &LaurentExpr) -> LaurentExpr {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.terms.clone();
        for (u, c) in &other.terms {
            let e = out.entry(u.clone()).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                out.remove(u);
            }
        }
        LaurentExpr { dim: self.dim, terms: out }
    }

    pub fn neg(&self) -> LaurentExpr {
        LaurentExpr {
            dim: self.dim,
            terms: self.terms.iter().map(|(u, c)| (u.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentExpr) -> LaurentExpr {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Rational) -> LaurentExpr {
        if c.is_zero() {
            return LaurentExpr::zero(self.dim);
        }
        LaurentExpr {
            dim: self.dim,
            terms: self.terms.iter().map(|(u, k)| (u.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentExpr) -> LaurentExpr {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out: BTreeMap<Vec<i32>, Rational> = BTreeMap::new();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let w: Vec<i32> = u.iter().zip(v).map(|(a, b)| a + b).collect();
                let e = out.entry(w).or_insert_with(Rational::zero);
                *e += cu * cv;
            }
        }
        out.retain(|_, c| !c.is_zero());
        LaurentExpr { dim: self.dim, terms: out }
    }

    /// Numeric evaluation at shear values `z`: sum of `c · exp(u · z / 2)`.
    pub fn eval(&self, z: &[f64]) -> f64 {
        assert_eq!(z.len(), self.dim, "dimension mismatch");
        let mut total = 0.0;
        for (u, c) in &self.terms {
            let dot: f64 = u.iter().zip(z).map(|(&ui, &zi)| ui as f64 * zi).sum();
            let cf = *c.numer() as f64 / *c.denom() as f64;
            total += cf * fmath::exp(dot / 2.0);
        }
        total
    }

    /// Tropical (max-plus) limit `max_u (u · z) / 2` over the support.
    ///
    /// This is `lim λ→∞ log(eval(λ z)) / λ` for positive expressions.
    pub fn tropical(&self, z: &[f64]) -> f64 {
        let mut best = f64::NEG_INFINITY;
        for u in self.terms.keys() {
            let dot: f64 = u.iter().zip(z).map(|(&ui, &zi)| ui as f64 * zi).sum();
            if dot / 2.0 > best {
                best = dot / 2.0;
            }
        }
        best
    }

    /// True if every coefficient is a positive integer.
    pub fn has_positive_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.denom() == &1 && c.is_positive())
    }
}
