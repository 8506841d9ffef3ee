//! Shear coordinates on a fixed spine: edge and turn matrices, path
//! products, geodesic functions (numeric and symbolic), boundary lengths,
//! coordinate flips, the classical skein check, and the classical pentagon
//! map.

use crate::fatgraph::{EdgeId, FatGraph, GraphError};
use crate::fmath;
use crate::laurent::{LaurentExpr, Rational};
use crate::path::{EdgePath, Step, Turn};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A real 2×2 matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2R {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mat2R {
    pub const IDENTITY: Mat2R = Mat2R { a: 1.0, b: 0.0, c: 0.0, d: 1.0 };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2R { a, b, c, d }
    }

    pub fn mul(&self, o: &Mat2R) -> Mat2R {
        Mat2R {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// Inverse for unit-determinant matrices.
    pub fn inv_unit(&self) -> Mat2R {
        Mat2R { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn max_abs(&self) -> f64 {
        fmath::abs(self.a).max(fmath::abs(self.b)).max(fmath::abs(self.c)).max(fmath::abs(self.d))
    }

    pub fn scale(&self, s: f64) -> Mat2R {
        Mat2R { a: self.a * s, b: self.b * s, c: self.c * s, d: self.d * s }
    }
}

/// Edge matrix `X_Z = [[0, -e^{Z/2}], [e^{-Z/2}, 0]]`.
pub fn edge_matrix(z: f64) -> Mat2R {
    Mat2R::new(0.0, -fmath::exp(z / 2.0), fmath::exp(-z / 2.0), 0.0)
}

/// Right turn matrix `R = [[1, 1], [-1, 0]]`.
pub fn turn_right() -> Mat2R {
    Mat2R::new(1.0, 1.0, -1.0, 0.0)
}

/// Left turn matrix `L = R^2 = [[0, 1], [-1, -1]]`.
pub fn turn_left() -> Mat2R {
    Mat2R::new(0.0, 1.0, -1.0, -1.0)
}

/// `R_Z = R X_Z` (upper triangular).
pub fn right_edge_matrix(z: f64) -> Mat2R {
    turn_right().mul(&edge_matrix(z))
}

/// `L_Z = L X_Z` (lower triangular).
pub fn left_edge_matrix(z: f64) -> Mat2R {
    turn_left().mul(&edge_matrix(z))
}

/// Assignment of a real shear coordinate to every edge of a spine.
#[derive(Clone, Debug, PartialEq)]
pub struct ShearPoint {
    values: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShearError {
    DimensionMismatch,
    /// Trace below 2 in absolute value: not hyperbolic or parabolic.
    Elliptic,
    NonUnitDeterminant,
}

impl fmt::Display for ShearError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShearError::DimensionMismatch => write!(f, "shear dimension does not match edge count"),
            ShearError::Elliptic => write!(f, "elliptic element: |trace| < 2"),
            ShearError::NonUnitDeterminant => write!(f, "matrix determinant is not ±1"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ShearError {}

impl ShearPoint {
    pub fn new(values: Vec<f64>) -> Self {
        ShearPoint { values }
    }

    pub fn zeros(dim: usize) -> Self {
        ShearPoint { values: vec![0.0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, e: EdgeId) -> f64 {
        self.values[e.0]
    }

    pub fn set(&mut self, e: EdgeId, v: f64) {
        self.values[e.0] = v;
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Ordered product of `R_Z`/`L_Z` along the path, reading steps from the
/// basepoint; the first step contributes the rightmost factor.
pub fn path_matrix(g: &FatGraph, p: &EdgePath, s: &ShearPoint) -> Result<Mat2R, ShearError> {
    if s.dim() != g.edge_count() {
        return Err(ShearError::DimensionMismatch);
    }
    let mut m = Mat2R::IDENTITY;
    for st in p.steps() {
        let t = match st.turn {
            Turn::Left => turn_left(),
            Turn::Right => turn_right(),
        };
        m = t.mul(&edge_matrix(s.get(st.edge))).mul(&m);
    }
    Ok(m)
}

/// `|tr P|`, the geodesic function value `2 cosh(l/2)` of the path.
pub fn geodesic_trace(g: &FatGraph, p: &EdgePath, s: &ShearPoint) -> Result<f64, ShearError> {
    Ok(fmath::abs(path_matrix(g, p, s)?.trace()))
}

/// Proper length (half the hyperbolic length) from a trace value:
/// `arccosh(|tr|/2) = log((|tr| + sqrt(tr^2 - 4)) / 2)`.
pub fn proper_length_classical(trace: f64) -> Result<f64, ShearError> {
    let t = fmath::abs(trace);
    if t < 2.0 {
        return Err(ShearError::Elliptic);
    }
    Ok(fmath::acosh(t / 2.0))
}

/// Proper length from `log |tr|`, stable for very large traces.
pub fn proper_length_from_log_trace(log_tr: f64) -> f64 {
    // log((e^t + sqrt(e^{2t} - 4)) / 2) = t + log((1 + sqrt(1 - 4 e^{-2t}))/2)
    let w = 4.0 * fmath::exp(-2.0 * log_tr);
    if w >= 1.0 {
        let t = fmath::exp(log_tr);
        return fmath::acosh((t / 2.0).max(1.0));
    }
    log_tr + fmath::ln((1.0 + fmath::sqrt(1.0 - w)) / 2.0)
}

/// Hyperbolic length of the boundary component traced by `face`:
/// `|Σ Z_i|` with multiplicity. Zero exactly when the component is a
/// puncture.
pub fn boundary_length(s: &ShearPoint, face: &crate::fatgraph::Face) -> f64 {
    let sum: f64 = face.edges.iter().map(|&e| s.get(e)).sum();
    fmath::abs(sum)
}

/// The flip function `phi(z) = log(1 + e^z)`.
pub fn phi(z: f64) -> f64 {
    fmath::log_one_plus_exp(z)
}

/// Whitehead move on (graph, shear): the combinatorial flip together with
/// the coordinate update. Around the flipped edge with coordinate `Z`, the
/// `sigma`-side neighbor at each endpoint gains `phi(Z)`, the other neighbor
/// loses `phi(-Z)`, and the edge itself maps to `-Z`; coincident labels
/// accumulate both contributions, which reproduces all doubling and additive
/// coincidence cases.
pub fn flip_shear(
    g: &FatGraph,
    s: &ShearPoint,
    e: EdgeId,
) -> Result<(FatGraph, ShearPoint), GraphError> {
    let slots = g.flip_slots(e)?;
    let flipped = g.whitehead(e)?;
    let z = s.get(e);
    let mut out = s.clone();
    let [u1, u2, w1, w2] = slots;
    for h in [u1, w1] {
        let a = g.edge_of(h);
        out.set(a, out.get(a) + phi(z));
    }
    for h in [u2, w2] {
        let b = g.edge_of(h);
        out.set(b, out.get(b) - phi(-z));
    }
    out.set(e, -z);
    Ok((flipped, out))
}

/// Symbolic geodesic function: the trace of the path product with entries in
/// the Laurent ring of `exp(Z_alpha/2)`.
pub fn geodesic_laurent(g: &FatGraph, p: &EdgePath) -> LaurentExpr {
    let dim = g.edge_count();
    let one = Rational::from_integer(1);
    // 2×2 matrices over the Laurent ring
    let ze = LaurentExpr::zero(dim);
    let mono = |e: EdgeId, sign: i32, c: i64| {
        let mut u = vec![0i32; dim];
        u[e.0] = sign;
        LaurentExpr::monomial(u, Rational::from_integer(c))
    };
    let lone = |c: i64| LaurentExpr::monomial(vec![0i32; dim], Rational::from_integer(c));
    let mut m: Option<[LaurentExpr; 4]> = None;
    for st in p.steps() {
        // X_Z = [[0, -e^{Z/2}], [e^{-Z/2}, 0]]
        let x = [ze.clone(), mono(st.edge, 1, -1), mono(st.edge, -1, 1), ze.clone()];
        let t = match st.turn {
            Turn::Left => [lone(0), lone(1), lone(-1), lone(-1)],
            Turn::Right => [lone(1), lone(1), lone(-1), lone(0)],
        };
        let tx = mat_mul(&t, &x);
        m = Some(match m {
            None => tx,
            Some(prev) => mat_mul(&tx, &prev),
        });
    }
    let m = m.expect("nonempty path");
    m[0].add(&m[3]).scale(one)
}

fn mat_mul(a: &[LaurentExpr; 4], b: &[LaurentExpr; 4]) -> [LaurentExpr; 4] {
    [
        a[0].mul(&b[0]).add(&a[1].mul(&b[2])),
        a[0].mul(&b[1]).add(&a[1].mul(&b[3])),
        a[2].mul(&b[0]).add(&a[3].mul(&b[2])),
        a[2].mul(&b[1]).add(&a[3].mul(&b[3])),
    ]
}

/// Residual of the trace relation
/// `tr(AB) + tr(AB^{-1}) - tr A · tr B` for unit-determinant matrices.
pub fn classical_skein_check(a: &Mat2R, b: &Mat2R) -> Result<f64, ShearError> {
    if fmath::abs(fmath::abs(a.det()) - 1.0) > 1e-9 || fmath::abs(fmath::abs(b.det()) - 1.0) > 1e-9
    {
        return Err(ShearError::NonUnitDeterminant);
    }
    let lhs = a.mul(b).trace() + a.mul(&b.inv_unit()).trace() - a.trace() * b.trace();
    Ok(fmath::abs(lhs))
}

/// One step of the classical pentagon map on the inner pair and the five
/// outer labels:
/// `(X, Y) ↦ (Y - phi(-X), -X)` and
/// `(A, B, C, D, E) ↦ (D, E, A + phi(X), B - phi(-X), C + phi(X))`.
pub fn pentagon_step(state: &[f64; 7]) -> [f64; 7] {
    let [x, y, a, b, c, d, e] = *state;
    [y - phi(-x), -x, d, e, a + phi(x), b - phi(-x), c + phi(x)]
}

/// Applies the pentagon map five times and returns the maximum deviation
/// from the initial state (inner pair and outer labels together).
pub fn pentagon_map_check(x0: f64, y0: f64) -> f64 {
    let outer = [0.3, -0.4, 0.9, 1.3, -1.1];
    let start = [x0, y0, outer[0], outer[1], outer[2], outer[3], outer[4]];
    let mut s = start;
    for _ in 0..5 {
        s = pentagon_step(&s);
    }
    s.iter().zip(&start).map(|(a, b)| fmath::abs(a - b)).fold(0.0, f64::max)
}

/// A 2×2 matrix held as `2^shift · m` with `m` kept near unit scale, so that
/// products along long words do not overflow.
#[derive(Clone, Copy, Debug)]
pub struct ScaledMat2 {
    pub m: Mat2R,
    /// natural-log scale factor
    pub log_scale: f64,
}

impl ScaledMat2 {
    pub fn identity() -> Self {
        ScaledMat2 { m: Mat2R::IDENTITY, log_scale: 0.0 }
    }

    pub fn from_mat(m: Mat2R) -> Self {
        ScaledMat2 { m, log_scale: 0.0 }.normalized()
    }

    fn normalized(mut self) -> Self {
        let s = self.m.max_abs();
        if s > 0.0 && (s > 1e12 || s < 1e-12) {
            self.m = self.m.scale(1.0 / s);
            self.log_scale += fmath::ln(s);
        }
        self
    }

    pub fn mul(&self, o: &ScaledMat2) -> ScaledMat2 {
        ScaledMat2 { m: self.m.mul(&o.m), log_scale: self.log_scale + o.log_scale }.normalized()
    }

    pub fn pow(&self, n: u32) -> ScaledMat2 {
        let mut acc = ScaledMat2::identity();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// `log |tr|` of the underlying matrix.
    pub fn log_abs_trace(&self) -> f64 {
        fmath::ln(fmath::abs(self.m.trace())) + self.log_scale
    }
}

/// The scaled path product for a torus block word step list.
pub fn scaled_path_matrix(g: &FatGraph, steps: &[Step], s: &ShearPoint) -> ScaledMat2 {
    let mut m = ScaledMat2::identity();
    for st in steps {
        let t = match st.turn {
            Turn::Left => turn_left(),
            Turn::Right => turn_right(),
        };
        let _ = g;
        let f = ScaledMat2::from_mat(t.mul(&edge_matrix(s.get(st.edge))));
        m = f.mul(&m);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fatgraph::torus_spine;
    use crate::path::slope_path;

    #[test]
    fn edge_matrix_at_zero() {
        let x = edge_matrix(0.0);
        assert_eq!((x.a, x.b, x.c, x.d), (0.0, -1.0, 1.0, 0.0));
    }

    #[test]
    fn left_is_right_squared() {
        let r = turn_right();
        let l = turn_left();
        let r2 = r.mul(&r);
        assert_eq!((l.a, l.b, l.c, l.d), (r2.a, r2.b, r2.c, r2.d));
    }

    #[test]
    fn rz_upper_lz_lower() {
        let rz = right_edge_matrix(0.7);
        assert_eq!(rz.c, 0.0);
        assert!((rz.a - fmath::exp(-0.35)).abs() < 1e-15);
        assert!((rz.b + fmath::exp(0.35)).abs() < 1e-15);
        let lz = left_edge_matrix(0.7);
        assert_eq!(lz.b, 0.0);
    }

    #[test]
    fn torus_traces_at_zero_shear() {
        let g = torus_spine();
        let s = ShearPoint::zeros(3);
        for (m1, m2) in [(1u64, 0u64), (0, 1)] {
            let p = slope_path(&g, m1, m2).unwrap();
            let t = geodesic_trace(&g, &p, &s).unwrap();
            assert!((t - 3.0).abs() < 1e-12, "trace {t}");
        }
    }

    #[test]
    fn proper_length_values() {
        assert_eq!(proper_length_classical(2.0).unwrap(), 0.0);
        // arccosh(1.5), frozen from log(1.5 + sqrt(1.25))
        let v = proper_length_classical(3.0).unwrap();
        assert!((v - 0.9624236501192069).abs() < 1e-12);
        assert!(proper_length_classical(1.0).is_err());
        // log-domain agrees
        let lv = proper_length_from_log_trace(fmath::ln(3.0));
        assert!((lv - v).abs() < 1e-12);
        // and is stable for huge traces: pl ≈ log tr for tr >> 2
        let big = proper_length_from_log_trace(5000.0);
        assert!((big - 5000.0).abs() < 1e-9);
    }

    #[test]
    fn torus_geodesic_laurent_matches_display() {
        let g = torus_spine();
        // G_X = e^{-Y/2-Z/2} + e^{-Y/2+Z/2} + e^{Y/2+Z/2}
        let p = slope_path(&g, 1, 0).unwrap();
        let f = geodesic_laurent(&g, &p);
        let one = Rational::from_integer(1);
        assert_eq!(f.term_count(), 3);
        assert_eq!(f.coeff(&[0, -1, -1]), one);
        assert_eq!(f.coeff(&[0, -1, 1]), one);
        assert_eq!(f.coeff(&[0, 1, 1]), one);
        // G_Y = e^{-Z/2-X/2} + e^{-Z/2+X/2} + e^{Z/2+X/2}
        let p = slope_path(&g, 0, 1).unwrap();
        let f = geodesic_laurent(&g, &p);
        assert_eq!(f.coeff(&[-1, 0, -1]), one);
        assert_eq!(f.coeff(&[1, 0, -1]), one);
        assert_eq!(f.coeff(&[1, 0, 1]), one);
    }

    #[test]
    fn tilde_gz_word_laurent() {
        // tr L_Y R_Z R_X L_Z = e^{-X/2-Y/2-Z} + e^{X/2-Y/2}(e^{-Z}+e^Z+2) + e^{X/2+Y/2+Z}
        use crate::path::{EdgePath, Step, Turn};
        let g = torus_spine();
        let x = g.edge_by_label("X").unwrap();
        let y = g.edge_by_label("Y").unwrap();
        let z = g.edge_by_label("Z").unwrap();
        let p = EdgePath::new(alloc::vec![
            Step { edge: z, turn: Turn::Left },
            Step { edge: x, turn: Turn::Right },
            Step { edge: z, turn: Turn::Right },
            Step { edge: y, turn: Turn::Left },
        ])
        .unwrap();
        let f = geodesic_laurent(&g, &p);
        let one = Rational::from_integer(1);
        assert_eq!(f.coeff(&[-1, -1, -2]), one);
        assert_eq!(f.coeff(&[1, -1, -2]), one);
        assert_eq!(f.coeff(&[1, -1, 0]), Rational::from_integer(2));
        assert_eq!(f.coeff(&[1, -1, 2]), one);
        assert_eq!(f.coeff(&[1, 1, 2]), one);
    }

    #[test]
    fn laurent_matches_numeric_trace() {
        let g = torus_spine();
        let shears = [[0.3, -0.8, 0.5], [1.2, 0.1, -0.4], [0.0, 0.0, 0.0]];
        for (m1, m2) in [(1, 0), (0, 1), (3, 2), (7, 3)] {
            let p = slope_path(&g, m1, m2).unwrap();
            let f = geodesic_laurent(&g, &p);
            for sh in &shears {
                let s = ShearPoint::new(sh.to_vec());
                let t = path_matrix(&g, &p, &s).unwrap().trace();
                let fv = f.eval(sh);
                assert!(
                    (t - fv).abs() <= 1e-10 * fv.abs().max(1.0),
                    "({m1},{m2}) at {sh:?}: {t} vs {fv}"
                );
            }
        }
    }

    #[test]
    fn flip_examples() {
        // all-distinct 5-tuple at zero shear: neighbors go to ±log 2
        let g = crate::fatgraph::build_standard_spine(2, 1).unwrap();
        // pick a flippable edge whose four neighbor slots are distinct edges
        let mut found = false;
        for e in 0..g.edge_count() {
            let e = EdgeId(e);
            if !g.is_flippable(e) {
                continue;
            }
            let slots = g.flip_slots(e).unwrap();
            let mut labs: Vec<EdgeId> = slots.iter().map(|&h| g.edge_of(h)).collect();
            labs.sort();
            labs.dedup();
            if labs.len() != 4 {
                continue;
            }
            found = true;
            let s = ShearPoint::zeros(g.edge_count());
            let (_, s2) = flip_shear(&g, &s, e).unwrap();
            let slots = g.flip_slots(e).unwrap();
            let ln2 = fmath::ln(2.0);
            assert!((s2.get(g.edge_of(slots[0])) - ln2).abs() < 1e-15);
            assert!((s2.get(g.edge_of(slots[2])) - ln2).abs() < 1e-15);
            assert!((s2.get(g.edge_of(slots[1])) + ln2).abs() < 1e-15);
            assert!((s2.get(g.edge_of(slots[3])) + ln2).abs() < 1e-15);
            assert_eq!(s2.get(e), -0.0);
            break;
        }
        assert!(found);
    }

    #[test]
    fn torus_flip_doubles() {
        // A=C, B=D on the torus: X' = X + 2 phi(Z), Y' = Y - 2 phi(-Z), Z' = -Z
        let g = torus_spine();
        let x = g.edge_by_label("X").unwrap();
        let y = g.edge_by_label("Y").unwrap();
        let z = g.edge_by_label("Z").unwrap();
        let s = ShearPoint::new(alloc::vec![0.4, -0.9, 0.7]);
        let (_, s2) = flip_shear(&g, &s, z).unwrap();
        assert!((s2.get(x) - (0.4 + 2.0 * phi(0.7))).abs() < 1e-14);
        assert!((s2.get(y) - (-0.9 - 2.0 * phi(-0.7))).abs() < 1e-14);
        assert_eq!(s2.get(z), -0.7);
    }

    #[test]
    fn boundary_length_torus() {
        let g = torus_spine();
        let faces = g.faces();
        let s = ShearPoint::new(alloc::vec![1.0, 0.0, 0.0]);
        // single face, each edge twice: |2a + 2b + 2c| = 2
        assert!((boundary_length(&s, &faces[0]) - 2.0).abs() < 1e-15);
        let p = ShearPoint::new(alloc::vec![1.0, 2.0, -3.0]);
        assert!(boundary_length(&p, &faces[0]).abs() < 1e-12); // puncture
    }

    #[test]
    fn skein_identity() {
        let id = Mat2R::IDENTITY;
        assert_eq!(classical_skein_check(&id, &id).unwrap(), 0.0);
        let a = right_edge_matrix(0.8);
        let b = left_edge_matrix(-0.3).mul(&right_edge_matrix(1.1));
        assert!(classical_skein_check(&a, &b).unwrap() < 1e-12);
        let bad = Mat2R::new(2.0, 0.0, 0.0, 1.0);
        assert!(classical_skein_check(&bad, &id).is_err());
    }

    #[test]
    fn pentagon_examples() {
        assert!(pentagon_map_check(0.3, -0.7) < 1e-10);
        assert!(pentagon_map_check(0.0, 0.0) < 1e-10);
        assert!(pentagon_map_check(5.0, -2.0) < 1e-9);
    }
}
