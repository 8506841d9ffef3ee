//! The noncommutative algebra of Weyl-ordered quantum exponentials.
//!
//! Generators `Z_α` satisfy `[Z_α, Z_β] = 2πiħ B_{αβ}` with `B` the constant
//! Weil–Petersson bracket matrix of the spine. A monomial is the Weyl-ordered
//! exponential `:exp(u · Z / 2):` with half-integer exponent vector `u`
//! (stored doubled); coefficients are Laurent polynomials in the formal
//! symbol `q^{1/4}` where `q = e^{-iπħ}`. Multiplication carries the
//! Baker–Campbell–Hausdorff phase
//! `m_u · m_v = q^{-(u^T B v)/4} · m_{u+v}`.

use crate::fmath;
use crate::laurent::{LaurentExpr, Rational};
use crate::wp::WpMatrix;
use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

/// Laurent polynomial in `q^{1/4}`: exponents are quarter-integers stored
/// multiplied by four, coefficients are exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QCoeff {
    terms: BTreeMap<i64, Rational>,
}

impl QCoeff {
    pub fn zero() -> Self {
        QCoeff::default()
    }

    pub fn one() -> Self {
        QCoeff::q_pow(0)
    }

    /// `q^{q4/4}`.
    pub fn q_pow(q4: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(q4, Rational::from_integer(1));
        QCoeff { terms }
    }

    pub fn from_parts(parts: &[(i64, Rational)]) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in parts {
            if !c.is_zero() {
                let entry = terms.entry(*e).or_insert_with(Rational::zero);
                *entry += c;
            }
        }
        terms.retain(|_, c: &mut Rational| !c.is_zero());
        QCoeff { terms }
    }

    pub fn integer(n: i64) -> Self {
        Self::from_parts(&[(0, Rational::from_integer(n))])
    }

    pub fn rational(r: Rational) -> Self {
        Self::from_parts(&[(0, r)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &QCoeff) -> QCoeff {
        let mut out = self.terms.clone();
        for (e, c) in &o.terms {
            let entry = out.entry(*e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(e);
            }
        }
        QCoeff { terms: out }
    }

    pub fn neg(&self) -> QCoeff {
        QCoeff { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }

    pub fn mul(&self, o: &QCoeff) -> QCoeff {
        let mut out: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let entry = out.entry(e1 + e2).or_insert_with(Rational::zero);
                *entry += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        QCoeff { terms: out }
    }

    /// The star map `q^{1/4} ↦ q^{-1/4}`.
    pub fn star(&self) -> QCoeff {
        QCoeff { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    /// Palindromic (star-invariant) coefficients stay fixed by `star`.
    pub fn is_star_invariant(&self) -> bool {
        self.star() == *self
    }

    /// Numeric evaluation at a unit-modulus `q`.
    pub fn eval(&self, q: Complex64) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for (&e, c) in &self.terms {
            let cf = c.to_f64().unwrap_or(0.0);
            s += q.powf(e as f64 / 4.0) * cf;
        }
        s
    }

    /// Value at `q = 1`: the sum of coefficients.
    pub fn classical(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }

    /// `q - q^{-1}`.
    pub fn xi() -> Self {
        Self::from_parts(&[(4, Rational::from_integer(1)), (-4, Rational::from_integer(-1))])
    }
}

/// Weyl-ordered monomial `:exp(u · Z / 2):`; entries of `u` are half-integers
/// stored doubled, one per edge.
pub type QMonomial = Vec<i32>;

/// The commutation data: an antisymmetric integer matrix with
/// `[Z_α, Z_β] = 2πiħ B_{αβ}`. Graph-derived brackets use the
/// Weil–Petersson matrix itself (torus entries `±2`, bracket `4πiħ`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QBracket {
    pub matrix: WpMatrix,
}

impl QBracket {
    pub fn new(matrix: WpMatrix) -> Arc<Self> {
        Arc::new(QBracket { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Standard torus bracket on `(X, Y, Z)`.
    pub fn torus() -> Arc<Self> {
        QBracket::new(WpMatrix {
            entries: alloc::vec![
                alloc::vec![0, 2, -2],
                alloc::vec![-2, 0, 2],
                alloc::vec![2, -2, 0],
            ],
        })
    }

    /// Reduced torus bracket on `(X, Y)` after imposing `X + Y + Z = 0`.
    pub fn torus_reduced() -> Arc<Self> {
        QBracket::new(WpMatrix { entries: alloc::vec![alloc::vec![0, 2], alloc::vec![-2, 0]] })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QalgError {
    BracketMismatch,
    DimensionMismatch,
    /// A product produced a `q`-phase finer than `q^{1/4}`.
    PhaseResolution,
    /// The element cannot be written with the requested ordering.
    NotOrderable,
}

impl fmt::Display for QalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QalgError::BracketMismatch => write!(f, "elements live over different brackets"),
            QalgError::DimensionMismatch => write!(f, "exponent dimension mismatch"),
            QalgError::PhaseResolution => write!(f, "q-phase finer than quarter powers"),
            QalgError::NotOrderable => write!(f, "no consistent quantum ordering"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for QalgError {}

/// A finite sum of Weyl-ordered monomials with `QCoeff` coefficients over a
/// fixed bracket.
#[derive(Clone, Debug)]
pub struct QElement {
    bracket: Arc<QBracket>,
    terms: BTreeMap<QMonomial, QCoeff>,
}

impl PartialEq for QElement {
    fn eq(&self, other: &Self) -> bool {
        self.bracket.matrix == other.bracket.matrix && self.terms == other.terms
    }
}

impl Eq for QElement {}

impl QElement {
    pub fn zero(bracket: Arc<QBracket>) -> Self {
        QElement { bracket, terms: BTreeMap::new() }
    }

    pub fn one(bracket: Arc<QBracket>) -> Self {
        let dim = bracket.dim();
        Self::monomial(bracket, alloc::vec![0; dim], QCoeff::one())
    }

    /// `c · :exp(u · Z / 2):` with `u` in doubled half-integer units.
    pub fn monomial(bracket: Arc<QBracket>, u: QMonomial, c: QCoeff) -> Self {
        assert_eq!(u.len(), bracket.dim(), "monomial dimension");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(u, c);
        }
        QElement { bracket, terms }
    }

    /// `:exp(u · Z / 2):` for an integer exponent vector `u` (half units).
    pub fn weyl(bracket: Arc<QBracket>, u_half: &[i32]) -> Self {
        let u = u_half.iter().map(|&x| 2 * x).collect();
        Self::monomial(bracket, u, QCoeff::one())
    }

    pub fn bracket(&self) -> &Arc<QBracket> {
        &self.bracket
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QMonomial, &QCoeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, u: &[i32]) -> QCoeff {
        self.terms.get(u).cloned().unwrap_or_default()
    }

    fn check(&self, o: &QElement) -> Result<(), QalgError> {
        if self.bracket.matrix != o.bracket.matrix {
            return Err(QalgError::BracketMismatch);
        }
        Ok(())
    }

    pub fn add(&self, o: &QElement) -> Result<QElement, QalgError> {
        self.check(o)?;
        let mut out = self.terms.clone();
        for (u, c) in &o.terms {
            let e = out.entry(u.clone()).or_insert_with(QCoeff::zero);
            *e = e.add(c);
            if e.is_zero() {
                out.remove(u);
            }
        }
        Ok(QElement { bracket: self.bracket.clone(), terms: out })
    }

    pub fn neg(&self) -> QElement {
        QElement {
            bracket: self.bracket.clone(),
            terms: self.terms.iter().map(|(u, c)| (u.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &QElement) -> Result<QElement, QalgError> {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &QCoeff) -> QElement {
        if c.is_zero() {
            return QElement::zero(self.bracket.clone());
        }
        let mut terms = BTreeMap::new();
        for (u, k) in &self.terms {
            let p = k.mul(c);
            if !p.is_zero() {
                terms.insert(u.clone(), p);
            }
        }
        QElement { bracket: self.bracket.clone(), terms }
    }

    /// Product with the central BCH phase:
    /// `m_u · m_v = q^{-(u^T B v)/4} m_{u+v}` on monomials, extended
    /// bilinearly. Errors if a phase finer than `q^{1/4}` would arise.
    pub fn mul(&self, o: &QElement) -> Result<QElement, QalgError> {
        self.check(o)?;
        let b = &self.bracket.matrix;
        let mut out: BTreeMap<QMonomial, QCoeff> = BTreeMap::new();
        for (u, cu) in &self.terms {
            let ui: Vec<i64> = u.iter().map(|&x| x as i64).collect();
            for (v, cv) in &o.terms {
                let vi: Vec<i64> = v.iter().map(|&x| x as i64).collect();
                // doubled storage: u^T B v (half units) = (u' ^T B v')/4
                let s = b.pairing(&ui, &vi);
                if s % 4 != 0 {
                    return Err(QalgError::PhaseResolution);
                }
                let q4 = -s / 4;
                let w: QMonomial = u.iter().zip(v).map(|(a, c)| a + c).collect();
                let c = cu.mul(cv).mul(&QCoeff::q_pow(q4));
                let e = out.entry(w).or_insert_with(QCoeff::zero);
                *e = e.add(&c);
                if e.is_zero() {
                    out.remove(&u.iter().zip(v).map(|(a, c)| a + c).collect::<Vec<_>>());
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(QElement { bracket: self.bracket.clone(), terms: out })
    }

    pub fn pow(&self, n: u32) -> Result<QElement, QalgError> {
        let mut acc = QElement::one(self.bracket.clone());
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// The adjoint: coefficients are starred, Weyl monomials are fixed.
    pub fn adjoint(&self) -> QElement {
        QElement {
            bracket: self.bracket.clone(),
            terms: self.terms.iter().map(|(u, c)| (u.clone(), c.star())).collect(),
        }
    }

    pub fn is_hermitian(&self) -> bool {
        self.adjoint() == *self
    }

    /// `q^{p/4} a b - q^{-p/4} b a`; `p4 = 2` gives the standard
    /// `[a, b]_q = q^{1/2} ab - q^{-1/2} ba`.
    pub fn q_commutator(&self, o: &QElement, p4: i64) -> Result<QElement, QalgError> {
        let ab = self.mul(o)?.scale(&QCoeff::q_pow(p4));
        let ba = o.mul(self)?.scale(&QCoeff::q_pow(-p4));
        ab.sub(&ba)
    }

    /// Numeric evaluation of the normal-form symbol at `|q| = 1` with
    /// commuting exponentials at the shear values `z`; at `q = 1` this is
    /// the classical geodesic function value.
    pub fn evaluate(&self, q: Complex64, z: &[f64]) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for (u, c) in &self.terms {
            let dot: f64 = u.iter().zip(z).map(|(&ui, &zi)| ui as f64 * zi).sum();
            // doubled units: exp(u·Z/2) with u = stored/2 => exp(dot/4)
            s += c.eval(q) * fmath::exp(dot / 4.0);
        }
        s
    }

    /// Classical limit `q → 1`: the commutative Laurent expression, if all
    /// exponents are integral in half units.
    pub fn classical_limit(&self) -> Result<LaurentExpr, QalgError> {
        let dim = self.bracket.dim();
        let mut out = LaurentExpr::zero(dim);
        for (u, c) in &self.terms {
            if u.iter().any(|&x| x % 2 != 0) {
                return Err(QalgError::PhaseResolution);
            }
            let uh: Vec<i32> = u.iter().map(|&x| x / 2).collect();
            out = out.add(&LaurentExpr::monomial(uh, c.classical()));
        }
        Ok(out)
    }

    /// Lift of a commutative Laurent expression to Weyl-ordered form.
    pub fn from_laurent(bracket: Arc<QBracket>, f: &LaurentExpr) -> Result<QElement, QalgError> {
        if f.dim() != bracket.dim() {
            return Err(QalgError::DimensionMismatch);
        }
        let mut out = QElement::zero(bracket.clone());
        for (u, c) in f.terms() {
            let m = QElement::monomial(
                bracket.clone(),
                u.iter().map(|&x| 2 * x).collect(),
                QCoeff::rational(*c),
            );
            out = out.add(&m)?;
        }
        Ok(out)
    }

    /// Reduction to the torus lattice under the central constraint
    /// `X + Y + Z = 0`: monomial exponents map by
    /// `(a, b, c) ↦ (a - c, b - c)`.
    pub fn reduce_torus(&self) -> Result<QElement, QalgError> {
        if self.bracket.dim() != 3 {
            return Err(QalgError::DimensionMismatch);
        }
        let red = QBracket::torus_reduced();
        let mut out = QElement::zero(red.clone());
        for (u, c) in &self.terms {
            let m = QElement::monomial(
                red.clone(),
                alloc::vec![u[0] - u[2], u[1] - u[2]],
                c.clone(),
            );
            out = out.add(&m)?;
        }
        Ok(out)
    }
}
