//! Punctured-torus Thurston theory: foliation-shear coordinates, tropical
//! flips and Dehn dynamics, continued fractions, train-track splitting,
//! zip/unzip words, proper-length convergence along approximating curves,
//! and the letter calculus for long matrix products.

use crate::fatgraph::{EdgeId, FatGraph, GraphError};
use crate::fmath;
use crate::laurent::Rational;
use crate::path::{cf_block_words, BlockWord};
use crate::qgeo::TwistGen;
use crate::shear::{edge_matrix, turn_left, turn_right, Mat2R, ScaledMat2, ShearPoint};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThurstonError {
    FaceConditionViolated,
    InvalidTriple,
    NotCoprime,
    WrongDomain,
    /// The word matrix is not hyperbolic: the shear point is degenerate.
    EllipticTrace { depth: usize },
    BadInput(&'static str),
}

impl fmt::Display for ThurstonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThurstonError::FaceConditionViolated => write!(f, "face sums must vanish"),
            ThurstonError::InvalidTriple => write!(f, "triple violates the triangle equality"),
            ThurstonError::NotCoprime => write!(f, "coordinates must be coprime"),
            ThurstonError::WrongDomain => write!(f, "point lies outside the required domain"),
            ThurstonError::EllipticTrace { depth } => {
                write!(f, "elliptic trace at depth {depth}: degenerate shear point")
            }
            ThurstonError::BadInput(s) => write!(f, "{s}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ThurstonError {}

// ---------------------------------------------------------------------------
// Foliation-shear coordinates
// ---------------------------------------------------------------------------

/// Real foliation-shear coordinates on the edges of a spine, subject to the
/// zero face-sum conditions.
#[derive(Clone, Debug, PartialEq)]
pub struct FoliationShear {
    values: Vec<Rational>,
}

impl FoliationShear {
    pub fn new(g: &FatGraph, values: Vec<Rational>) -> Result<Self, ThurstonError> {
        if values.len() != g.edge_count() {
            return Err(ThurstonError::BadInput("dimension mismatch"));
        }
        let fs = FoliationShear { values };
        if !fs.faces_vanish(g) {
            return Err(ThurstonError::FaceConditionViolated);
        }
        Ok(fs)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, e: EdgeId) -> Rational {
        self.values[e.0]
    }

    pub fn faces_vanish(&self, g: &FatGraph) -> bool {
        g.faces().iter().all(|f| {
            f.edges.iter().map(|&e| self.values[e.0]).fold(Rational::zero(), |a, b| a + b)
                == Rational::zero()
        })
    }
}

/// The tropical flip function `phi_H(x) = (x + |x|)/2 = max(x, 0)`.
pub fn phi_tropical(x: f64) -> f64 {
    if x > 0.0 {
        x
    } else {
        0.0
    }
}

fn phi_tropical_q(x: Rational) -> Rational {
    if x.is_positive() {
        x
    } else {
        Rational::zero()
    }
}

/// Whitehead move on foliation-shear coordinates: the flip rule with
/// `phi_H` substituted for the classical flip function. Face conditions are
/// preserved exactly.
pub fn tropical_flip(
    g: &FatGraph,
    zeta: &FoliationShear,
    e: EdgeId,
) -> Result<(FatGraph, FoliationShear), GraphError> {
    let slots = g.flip_slots(e)?;
    let flipped = g.whitehead(e)?;
    let z = zeta.get(e);
    let mut vals = zeta.values.clone();
    let [u1, u2, w1, w2] = slots;
    for h in [u1, w1] {
        let a = g.edge_of(h);
        vals[a.0] = vals[a.0] + phi_tropical_q(z);
    }
    for h in [u2, w2] {
        let b = g.edge_of(h);
        vals[b.0] = vals[b.0] - phi_tropical_q(-z);
    }
    vals[e.0] = -z;
    Ok((flipped, FoliationShear { values: vals }))
}

/// Solves for the small-branch measures of a blown-up trigon from the three
/// incident large-branch measures:
/// `mu(alpha_i) = (mu(a_1) + mu(a_2) + mu(a_3) - 2 mu(a_i)) / 2`.
pub fn freeway_solve(large: [f64; 3]) -> [f64; 3] {
    let s: f64 = large.iter().sum();
    [(s - 2.0 * large[0]) / 2.0, (s - 2.0 * large[1]) / 2.0, (s - 2.0 * large[2]) / 2.0]
}

/// A torus multicurve coordinate triple `(m_X, m_Y, m_Z)`; exactly one of
/// the triangle equalities `m_i = m_j + m_k` must hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeasureTriple {
    pub mx: u64,
    pub my: u64,
    pub mz: u64,
}

impl MeasureTriple {
    pub fn new(mx: u64, my: u64, mz: u64) -> Result<Self, ThurstonError> {
        let t = MeasureTriple { mx, my, mz };
        if mx == 0 && my == 0 && mz == 0 {
            return Ok(t);
        }
        if mx == my + mz || my == mx + mz || mz == mx + my {
            Ok(t)
        } else {
            Err(ThurstonError::InvalidTriple)
        }
    }
}

/// Foliation-shear coordinates of a multicurve triple on the torus spine via
/// the half-difference rule `zeta_e = (m_A - m_B + m_C - m_D)/2` over the
/// four corner slots of each edge. On the torus this gives
/// `zeta_X = m_Y - m_Z`, `zeta_Y = m_Z - m_X`, `zeta_Z = m_X - m_Y`.
pub fn foliation_shear_from_triple(
    g: &FatGraph,
    t: &MeasureTriple,
) -> Result<FoliationShear, ThurstonError> {
    let m = |e: EdgeId| -> i64 {
        match g.label(e) {
            "X" => t.mx as i64,
            "Y" => t.my as i64,
            _ => t.mz as i64,
        }
    };
    let mut vals = vec![Rational::zero(); g.edge_count()];
    for ei in 0..g.edge_count() {
        let e = EdgeId(ei);
        let [u1, u2, w1, w2] =
            g.flip_slots(e).map_err(|_| ThurstonError::BadInput("loop edge on spine"))?;
        let num =
            m(g.edge_of(u1)) - m(g.edge_of(u2)) + m(g.edge_of(w1)) - m(g.edge_of(w2));
        vals[ei] = Rational::new(num, 2);
    }
    FoliationShear::new(g, vals)
}

// ---------------------------------------------------------------------------
// Continued fractions, splitting, zip/unzip
// ---------------------------------------------------------------------------

/// Partial quotients of `m1/m2` for `m1 >= m2 >= 1` by the Euclidean
/// algorithm (the final quotient absorbs the full division).
pub fn cf_expand_ratio(m1: u64, m2: u64) -> Vec<u32> {
    let (mut a, mut b) = (m1, m2);
    let mut out = Vec::new();
    while b != 0 {
        out.push((a / b) as u32);
        let r = a % b;
        a = b;
        b = r;
    }
    out
}

/// Continued-fraction expansion of `m1/m2` with `0 < m2 < m1` coprime.
pub fn cf_expand(m1: u64, m2: u64) -> Result<Vec<u32>, ThurstonError> {
    if m2 == 0 || m2 >= m1 {
        return Err(ThurstonError::BadInput("need 0 < m2 < m1"));
    }
    if gcd(m1, m2) != 1 {
        return Err(ThurstonError::NotCoprime);
    }
    Ok(cf_expand_ratio(m1, m2))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Value `1/(a_1 + 1/(a_2 + ...))` of a continued-fraction word; inverts
/// [`cf_expand`] exactly: `cf_value(cf_expand(m1, m2)) = m2/m1`.
pub fn cf_value(w: &[u32]) -> Result<Rational, ThurstonError> {
    if w.is_empty() || w.contains(&0) {
        return Err(ThurstonError::BadInput("partial quotients must be positive"));
    }
    let mut v = Rational::zero();
    for &a in w.iter().rev() {
        v = Rational::from_integer(1) / (Rational::from_integer(a as i64) + v);
    }
    Ok(v)
}

/// One symbol of a splitting sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Split {
    Left,
    Right,
}

/// Splitting sequence of the torus train track with small-branch measures
/// `(a, b)`: left split while `b > a`, right split while `a > b`; equal
/// measures finish the current run and collide. Returns the split word and
/// whether a collision occurred within `max_steps`.
pub fn splitting_sequence(a: f64, b: f64, max_steps: usize) -> (Vec<Split>, bool) {
    let mut word = Vec::new();
    let (mut a, mut b) = (a, b);
    let mut last: Option<Split> = None;
    for _ in 0..max_steps {
        let s = if b > a {
            Split::Left
        } else if a > b {
            Split::Right
        } else {
            // collision: the singular leaves coincide; by convention the
            // final split continues the current run (left if none)
            let s = last.unwrap_or(Split::Left);
            word.push(s);
            return (word, true);
        };
        match s {
            Split::Left => b -= a,
            Split::Right => a -= b,
        }
        word.push(s);
        last = Some(s);
        if a == 0.0 || b == 0.0 {
            return (word, true);
        }
    }
    (word, false)
}

/// Run lengths of a split word.
pub fn run_lengths(word: &[Split]) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::new();
    let mut cur: Option<(Split, u32)> = None;
    for &s in word {
        match cur {
            Some((c, n)) if c == s => cur = Some((c, n + 1)),
            Some((c, n)) => {
                let _ = c;
                out.push(n);
                cur = Some((s, 1));
            }
            None => cur = Some((s, 1)),
        }
    }
    if let Some((_, n)) = cur {
        out.push(n);
    }
    out
}

/// A reduced rational slope `p/q` (or `1/0` for the vertical slope).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slope {
    pub p: i64,
    pub q: i64,
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Result<Self, ThurstonError> {
        if p == 0 && q == 0 {
            return Err(ThurstonError::BadInput("0/0 is not a slope"));
        }
        let g = gcd(p.unsigned_abs(), q.unsigned_abs()) as i64;
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    pub fn infinity() -> Self {
        Slope { p: 1, q: 0 }
    }
}

/// Geometric intersection number of two reduced slopes: `|p s - q r|`.
pub fn intersection_number(a: Slope, b: Slope) -> u64 {
    (a.p * b.q - a.q * b.p).unsigned_abs()
}

/// A run of Dehn twists: `count` applications of `D_gen^{-1}` (unzipping)
/// or `D_gen` (zipping).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistRun {
    pub gen: TwistGen,
    pub count: u32,
}

/// Unzips a coprime triple down to a generator curve.
///
/// While `m_X > m_Y` the twist `D_Y^{-1}: (m_X, m_Y, m_X + m_Y) ↦
/// (m_X - m_Y, m_Y, m_X)` applies; while `m_Y > m_X`, `D_X^{-1}`; ties
/// continue the current run. The result lists the runs in application order
/// and the terminal triple, `(1,0,1)` or `(0,1,1)`.
pub fn unzip_sequence(t: &MeasureTriple) -> Result<(Vec<TwistRun>, MeasureTriple), ThurstonError> {
    if t.mz != t.mx + t.my {
        return Err(ThurstonError::InvalidTriple);
    }
    if gcd(t.mx, t.my) != 1 {
        return Err(ThurstonError::NotCoprime);
    }
    let (mut mx, mut my) = (t.mx, t.my);
    let mut runs: Vec<TwistRun> = Vec::new();
    let mut last_y = true;
    while (mx, my) != (1, 0) && (mx, my) != (0, 1) {
        let use_y = if mx > my {
            true
        } else if my > mx {
            false
        } else {
            last_y
        };
        if use_y {
            mx -= my;
        } else {
            my -= mx;
        }
        let gen = if use_y { TwistGen::Y } else { TwistGen::X };
        match runs.last_mut() {
            Some(r) if r.gen == gen => r.count += 1,
            _ => runs.push(TwistRun { gen, count: 1 }),
        }
        last_y = use_y;
    }
    Ok((runs, MeasureTriple { mx, my, mz: mx + my }))
}

/// Zips a twist word back up from its terminal generator curve; exact
/// inverse of [`unzip_sequence`].
pub fn zip(runs: &[TwistRun], terminal: &MeasureTriple) -> MeasureTriple {
    let (mut mx, mut my) = (terminal.mx, terminal.my);
    for r in runs.iter().rev() {
        for _ in 0..r.count {
            match r.gen {
                TwistGen::Y => mx += my,
                TwistGen::X => my += mx,
            }
        }
    }
    MeasureTriple { mx, my, mz: mx + my }
}

// ---------------------------------------------------------------------------
// Tropical Dehn dynamics
// ---------------------------------------------------------------------------

/// A tropical shear pair `(X, Y)` with `Z = -X - Y` understood.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TropicalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl TropicalPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        TropicalPoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        TropicalPoint { x: Rational::from_integer(x), y: Rational::from_integer(y) }
    }
}

/// The four coordinate domains of the tropical plane. Boundary ties go to
/// the lower-numbered domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    I,
    II,
    IIIa,
    IIIb,
}

pub fn classify(p: &TropicalPoint) -> Domain {
    let zero = Rational::zero();
    if p.x >= zero {
        if p.y >= zero || p.x >= -p.y {
            Domain::I
        } else {
            Domain::II
        }
    } else if p.y <= zero {
        Domain::II
    } else if -p.x <= p.y {
        Domain::IIIa
    } else {
        Domain::IIIb
    }
}

/// One tropical Dehn twist: the piecewise-linear limits
/// `D_X^{-1}: (X, Y) ↦ (X + 2 phi_H(-X-Y), X + Y)` and
/// `D_Y^{-1}: (X, Y) ↦ (X + Y, Y - 2 phi_H(X + Y))`.
pub fn tropical_twist(p: &TropicalPoint, gen: TwistGen) -> TropicalPoint {
    let s = p.x + p.y;
    match gen {
        TwistGen::X => TropicalPoint { x: p.x + phi_tropical_q(-s) * Rational::from_integer(2), y: s },
        TwistGen::Y => TropicalPoint { x: s, y: p.y - phi_tropical_q(s) * Rational::from_integer(2) },
    }
}

/// Applies `count` twists, returning the trajectory with the domain label
/// after each step.
pub fn tropical_dehn(
    p: &TropicalPoint,
    gen: TwistGen,
    count: u32,
) -> (TropicalPoint, Vec<Domain>) {
    let mut cur = *p;
    let mut labels = Vec::with_capacity(count as usize);
    for _ in 0..count {
        cur = tropical_twist(&cur, gen);
        labels.push(classify(&cur));
    }
    (cur, labels)
}

/// Tropical proper lengths: `pl(gamma_Y) = X + Y/2` in Domain I and
/// `pl(gamma_X) = -Y - X/2` in Domain II.
pub fn tropical_proper_length(p: &TropicalPoint, gen: TwistGen) -> Result<Rational, ThurstonError> {
    let half = Rational::new(1, 2);
    match gen {
        TwistGen::Y => {
            if classify(p) != Domain::I {
                return Err(ThurstonError::WrongDomain);
            }
            Ok(p.x + p.y * half)
        }
        TwistGen::X => {
            if classify(p) != Domain::II {
                return Err(ThurstonError::WrongDomain);
            }
            Ok(-p.y - p.x * half)
        }
    }
}

/// Exact residuals of the tropical proper-length recursion along an
/// alternating twist path: starting in Domain I, runs `D_Y^{-a_1},
/// D_X^{-a_2}, ...` produce a sequence of stage lengths obeying
/// `pl_{k+1} = a_{k+1} · pl_k + pl_{k-1}`.
pub fn tropical_recursion_residuals(
    p0: &TropicalPoint,
    cf: &[u32],
) -> Result<Vec<Rational>, ThurstonError> {
    if classify(p0) != Domain::I {
        return Err(ThurstonError::WrongDomain);
    }
    let mut lengths: Vec<Rational> = Vec::with_capacity(cf.len() + 1);
    lengths.push(tropical_proper_length(p0, TwistGen::Y)?);
    let mut p = *p0;
    for (k, &a) in cf.iter().enumerate() {
        let gen = if k % 2 == 0 { TwistGen::Y } else { TwistGen::X };
        let (np, _) = tropical_dehn(&p, gen, a);
        p = np;
        // after a D_Y run we are in Domain II and read pl(gamma_X);
        // after a D_X run back in Domain I reading pl(gamma_Y)
        let read = if k % 2 == 0 { TwistGen::X } else { TwistGen::Y };
        lengths.push(tropical_proper_length(&p, read)?);
    }
    let mut residuals = Vec::new();
    for k in 1..cf.len() {
        let expect = lengths[k] * Rational::from_integer(cf[k] as i64) + lengths[k - 1];
        residuals.push(lengths[k + 1] - expect);
    }
    Ok(residuals)
}

// ---------------------------------------------------------------------------
// Proper-length convergence along continued-fraction approximations
// ---------------------------------------------------------------------------

/// One row of a convergence sweep.
#[derive(Clone, Copy, Debug)]
pub struct ConvergeRow {
    pub depth: usize,
    pub m1: u64,
    pub m2: u64,
    pub log_trace: f64,
    pub proper_length: f64,
    pub graph_length: f64,
    pub ratio: f64,
}

/// Classical block matrices of the torus at a shear point.
fn block_matrices(g: &FatGraph, s: &ShearPoint) -> Result<(Mat2R, Mat2R), ThurstonError> {
    let lab = |n: &str| g.edge_by_label(n).map_err(|_| ThurstonError::BadInput("torus spine required"));
    let x = lab("X")?;
    let y = lab("Y")?;
    let z = lab("Z")?;
    let bx = turn_left()
        .mul(&edge_matrix(s.get(y)))
        .mul(&turn_right())
        .mul(&edge_matrix(s.get(z)));
    let by = turn_right()
        .mul(&edge_matrix(s.get(x)))
        .mul(&turn_left())
        .mul(&edge_matrix(s.get(z)));
    Ok((bx, by))
}

/// Proper-length over graph-length ratios for the continued-fraction
/// convergents of `cf`, evaluated at a shear point with edge weights
/// `(w_X, w_Y, w_Z)`. Matrices are accumulated in scaled form so that depths
/// up to ~30 stay finite.
pub fn converge_ratio(
    g: &FatGraph,
    s: &ShearPoint,
    cf: &[u32],
    depth: usize,
    weights: [f64; 3],
) -> Result<Vec<ConvergeRow>, ThurstonError> {
    let depth = depth.min(cf.len());
    let (bx, by) = block_matrices(g, s)?;
    let bx = ScaledMat2::from_mat(bx);
    let by = ScaledMat2::from_mat(by);
    // L_1 = BX^{a_1} BY ; tilde L_0 = BX ; recursion as for the words
    let mut rows = Vec::with_capacity(depth);
    let mut l_prev2 = bx; // tilde L_0
    let mut lt_prev2 = bx;
    let mut l_prev: Option<(ScaledMat2, ScaledMat2)> = None; // (L_1, tilde L_1)
    let mut counts_prev2 = (1u64, 0u64);
    let mut counts_prev = (0u64, 0u64);
    for n in 1..=depth {
        let a = cf[n - 1];
        let (l_n, lt_n, counts) = if n == 1 {
            let l1 = bx.pow(a).mul(&by);
            let lt1 = bx.pow(a - 1).mul(&by).mul(&bx);
            (l1, lt1, (a as u64, 1u64))
        } else {
            let (lp, ltp) = l_prev.clone().unwrap();
            let (head, head_t) = if n % 2 == 0 { (&lp, &lp) } else { (&ltp, &ltp) };
            let mid = if n % 2 == 0 { &lt_prev2 } else { &l_prev2 };
            let mut acc = ScaledMat2::identity();
            for _ in 0..a - 1 {
                acc = acc.mul(head);
            }
            let base = acc.mul(mid);
            let l_n = base.mul(&lp);
            let lt_n = {
                let mut acc = ScaledMat2::identity();
                for _ in 0..a - 1 {
                    acc = acc.mul(head_t);
                }
                acc.mul(mid).mul(&ltp)
            };
            let c = (
                a as u64 * counts_prev.0 + counts_prev2.0,
                a as u64 * counts_prev.1 + counts_prev2.1,
            );
            (l_n, lt_n, c)
        };
        let log_tr = l_n.log_abs_trace();
        if log_tr < fmath::ln(2.0) {
            return Err(ThurstonError::EllipticTrace { depth: n });
        }
        let pl = crate::shear::proper_length_from_log_trace(log_tr);
        let (m1, m2) = counts;
        let gl = m1 as f64 * (weights[1] + weights[2]) + m2 as f64 * (weights[0] + weights[2]);
        rows.push(ConvergeRow {
            depth: n,
            m1,
            m2,
            log_trace: log_tr,
            proper_length: pl,
            graph_length: gl,
            ratio: pl / gl,
        });
        if n == 1 {
            counts_prev = counts;
            l_prev = Some((l_n, lt_n));
        } else {
            counts_prev2 = counts_prev;
            counts_prev = counts;
            let (lp, ltp) = l_prev.take().unwrap();
            l_prev2 = lp;
            lt_prev2 = ltp;
            l_prev = Some((l_n, lt_n));
        }
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// Letter calculus for long products
// ---------------------------------------------------------------------------

/// The four letter matrices appearing in cluster decompositions of
/// left/right products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    A,
    B,
    D,
    P,
}

impl Letter {
    pub fn matrix(self) -> [[i64; 2]; 2] {
        match self {
            Letter::A => [[1, 0], [-1, 0]],
            Letter::B => [[0, 0], [0, 1]],
            Letter::D => [[0, -1], [0, 1]],
            Letter::P => [[0, 0], [-1, 0]],
        }
    }

    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::D, Letter::P];
}

/// Multiplication table of the letters: entry `(i, j)` is `row_i · col_j`,
/// either a letter or zero.
pub fn alphabet_table() -> [[Option<Letter>; 4]; 4] {
    let mut table = [[None; 4]; 4];
    for (i, a) in Letter::ALL.iter().enumerate() {
        for (j, b) in Letter::ALL.iter().enumerate() {
            let ma = a.matrix();
            let mb = b.matrix();
            let mut p = [[0i64; 2]; 2];
            for r in 0..2 {
                for c in 0..2 {
                    p[r][c] = ma[r][0] * mb[0][c] + ma[r][1] * mb[1][c];
                }
            }
            if p == [[0, 0], [0, 0]] {
                continue;
            }
            table[i][j] = Letter::ALL.iter().copied().find(|l| l.matrix() == p);
        }
    }
    table
}

/// Residual of the cluster decomposition of `L_{Z_1}…L_{Z_m} R_{Z_{m+1}}…R_{Z_{m+k}}`
/// against the letter form
/// `A s⁺₁ s⁺₂ + B (s⁻₁ s⁻₂ + S₁ s⁻₂ + S₁ S₂) + D (s⁺₁ s⁻₂ + s⁺₁ S₂) + P S₁ s⁺₂`
/// with `s^±_j = e^{∓ Σ Z/2}` over the cluster and the interior sums
/// `S₁ = Σ_q e^{(Σ_{r<q} Z_r - Σ_{r≥q} Z_r)/2}`,
/// `S₂ = Σ_q e^{(-Σ_{r<q} Z_r + Σ_{r≥q} Z_r)/2}`.
pub fn cluster_decompose(left: &[f64], right: &[f64]) -> f64 {
    let mut m = Mat2R::IDENTITY;
    for &z in left {
        m = m.mul(&turn_left()).mul(&edge_matrix(z));
    }
    for &z in right {
        m = m.mul(&turn_right()).mul(&edge_matrix(z));
    }
    let sum_l: f64 = left.iter().sum();
    let sum_r: f64 = right.iter().sum();
    let s1p = fmath::exp(-sum_l / 2.0);
    let s1m = fmath::exp(sum_l / 2.0);
    let s2p = fmath::exp(-sum_r / 2.0);
    let s2m = fmath::exp(sum_r / 2.0);
    let mut cap_s1 = 0.0;
    for q in 1..left.len() {
        let head: f64 = left[..q].iter().sum();
        let tail: f64 = left[q..].iter().sum();
        cap_s1 += fmath::exp((head - tail) / 2.0);
    }
    let mut cap_s2 = 0.0;
    for q in 1..right.len() {
        let head: f64 = right[..q].iter().sum();
        let tail: f64 = right[q..].iter().sum();
        cap_s2 += fmath::exp((-head + tail) / 2.0);
    }
    let lm = |l: Letter, c: f64| {
        let m = l.matrix();
        Mat2R::new(m[0][0] as f64 * c, m[0][1] as f64 * c, m[1][0] as f64 * c, m[1][1] as f64 * c)
    };
    let model = [
        lm(Letter::A, s1p * s2p),
        lm(Letter::B, s1m * s2m + cap_s1 * s2m + cap_s1 * cap_s2),
        lm(Letter::D, s1p * s2m + s1p * cap_s2),
        lm(Letter::P, cap_s1 * s2p),
    ]
    .iter()
    .fold(Mat2R::new(0.0, 0.0, 0.0, 0.0), |acc, t| {
        Mat2R::new(acc.a + t.a, acc.b + t.b, acc.c + t.c, acc.d + t.d)
    });
    let scale = m.max_abs().max(1.0);
    Mat2R::new(m.a - model.a, m.b - model.b, m.c - model.c, m.d - model.d).max_abs() / scale
}

/// Data for the long-word trace estimate: for each extra depth `k = 1..=n`,
/// the defect `|log tr L_{I+k} - p_k log tr L_I - q_k log tr L_{I-1}|`
/// together with the counts `(p_k, q_k)` of `L_I`/`L_{I-1}`-type factors.
pub fn appendix_estimate_data(
    g: &FatGraph,
    s: &ShearPoint,
    cf: &[u32],
    base_depth: usize,
    extra: usize,
) -> Result<Vec<(f64, u64, u64)>, ThurstonError> {
    assert!(base_depth >= 2 && base_depth + extra <= cf.len());
    let rows = converge_ratio(g, s, cf, base_depth + extra, [1.0, 1.0, 1.0])?;
    let log_i = rows[base_depth - 1].log_trace;
    let log_i1 = rows[base_depth - 2].log_trace;
    let mut out = Vec::with_capacity(extra);
    let (mut p_prev, mut q_prev) = (0u64, 1u64); // counts of L_{I-1+0}?  c_{-1} = (0,1)
    let (mut p_cur, mut q_cur) = (1u64, 0u64); // c_0 = (1,0)
    for k in 1..=extra {
        let a = cf[base_depth + k - 1] as u64;
        let p_next = a * p_cur + p_prev;
        let q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        let lhs = fmath::abs(
            rows[base_depth + k - 1].log_trace - p_cur as f64 * log_i - q_cur as f64 * log_i1,
        );
        out.push((lhs, p_cur, q_cur));
    }
    Ok(out)
}

/// The word-count ratio `q_N / p_N` equals the continued fraction
/// `[a_{I+1}, ..., a_{I+N}]` evaluated as `1/(a_{I+1} + 1/(...))`.
pub fn count_ratio_matches_cf(cf: &[u32], base_depth: usize, extra: usize) -> bool {
    let (mut p_prev, mut q_prev) = (0u64, 1u64);
    let (mut p_cur, mut q_cur) = (1u64, 0u64);
    for k in 1..=extra {
        let a = cf[base_depth + k - 1] as u64;
        let (p_next, q_next) = (a * p_cur + p_prev, a * q_cur + q_prev);
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    let tail = &cf[base_depth..base_depth + extra];
    match cf_value(tail) {
        Ok(v) => v == Rational::new(q_cur as i64, p_cur as i64),
        Err(_) => false,
    }
}

/// Approximating-word block data re-exported for the torus: the
/// continued-fraction words themselves.
pub fn approximating_words(cf: &[u32]) -> Result<Vec<BlockWord>, ThurstonError> {
    let (l, _) = cf_block_words(cf).map_err(|_| ThurstonError::BadInput("bad quotients"))?;
    Ok(l[1..].to_vec())
}

/// Block-count pair of the depth-`n` approximating word.
pub fn word_counts(cf: &[u32], depth: usize) -> Result<(u64, u64), ThurstonError> {
    let words = approximating_words(cf)?;
    if depth == 0 || depth > words.len() {
        return Err(ThurstonError::BadInput("depth out of range"));
    }
    Ok(crate::path::block_counts(&words[depth - 1]))
}

/// Convenience: the golden-ratio word `[1, 1, 1, ...]` of a given depth.
pub fn golden_cf(depth: usize) -> Vec<u32> {
    vec![1; depth]
}

pub use crate::path::slope_block_word;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fatgraph::torus_spine;

    #[test]
    fn phi_tropical_values() {
        assert_eq!(phi_tropical(2.0), 2.0);
        assert_eq!(phi_tropical(-3.0), 0.0);
        // projective limit of the classical flip function
        for x in [-2.0, -0.5, 0.4, 1.7] {
            let lam = 100.0;
            let approx = crate::shear::phi(lam * x) / lam;
            assert!((approx - phi_tropical(x)).abs() < 0.02, "x={x}");
        }
    }

    #[test]
    fn tropical_flip_involution_and_faces() {
        let g = torus_spine();
        let t = MeasureTriple::new(2, 1, 3).unwrap();
        let zeta = foliation_shear_from_triple(&g, &t).unwrap();
        assert!(zeta.faces_vanish(&g));
        for e in 0..3 {
            let e = EdgeId(e);
            let (g1, z1) = tropical_flip(&g, &zeta, e).unwrap();
            assert!(z1.faces_vanish(&g1));
            let (g2, z2) = tropical_flip(&g1, &z1, e).unwrap();
            assert!(z2.faces_vanish(&g2));
            assert_eq!(z2, zeta, "double tropical flip fixes coordinates");
        }
    }

    #[test]
    fn freeway_examples() {
        assert_eq!(freeway_solve([1.0, 1.0, 1.0]), [0.5, 0.5, 0.5]);
        assert_eq!(freeway_solve([2.0, 1.0, 1.0]), [0.0, 1.0, 1.0]);
        assert_eq!(freeway_solve([0.0, 0.0, 0.0]), [0.0, 0.0, 0.0]);
        // coupling equations: mu(alpha_j) + mu(alpha_k) = mu(a_i) for {i,j,k}
        let l = [1.7, 0.4, -0.8];
        let s = freeway_solve(l);
        for i in 0..3 {
            let j = (i + 1) % 3;
            let k = (i + 2) % 3;
            assert!((s[j] + s[k] - l[i]).abs() < 1e-14);
        }
    }

    #[test]
    fn triple_shears() {
        let g = torus_spine();
        let z = foliation_shear_from_triple(&g, &MeasureTriple::new(1, 0, 1).unwrap()).unwrap();
        let vx = z.get(g.edge_by_label("X").unwrap());
        let vy = z.get(g.edge_by_label("Y").unwrap());
        let vz = z.get(g.edge_by_label("Z").unwrap());
        assert_eq!(
            (vx, vy, vz),
            (
                Rational::from_integer(-1),
                Rational::from_integer(0),
                Rational::from_integer(1)
            )
        );
        let zero = foliation_shear_from_triple(&g, &MeasureTriple::new(0, 0, 0).unwrap()).unwrap();
        assert!(zero.values().iter().all(|v| v.is_zero()));
        // different slopes give non-proportional coordinates
        let a = foliation_shear_from_triple(&g, &MeasureTriple::new(1, 1, 2).unwrap()).unwrap();
        let b = foliation_shear_from_triple(&g, &MeasureTriple::new(2, 1, 3).unwrap()).unwrap();
        let cross = a.get(EdgeId(0)) * b.get(EdgeId(2)) - a.get(EdgeId(2)) * b.get(EdgeId(0));
        assert!(!cross.is_zero());
        assert!(MeasureTriple::new(1, 1, 3).is_err());
    }

    #[test]
    fn cf_examples() {
        assert_eq!(cf_expand(7, 3).unwrap(), vec![2, 3]);
        assert_eq!(cf_value(&[1, 1, 1, 1]).unwrap(), Rational::new(3, 5));
        assert!(cf_expand(4, 2).is_err());
        assert_eq!(cf_value(&cf_expand(7, 3).unwrap()).unwrap(), Rational::new(3, 7));
    }

    #[test]
    fn splitting_examples() {
        let (w, coll) = splitting_sequence(1.0, 3.0, 100);
        assert!(coll);
        assert_eq!(w, vec![Split::Left, Split::Left, Split::Left]);
        let (w, coll) = splitting_sequence(2.0, 5.0, 100);
        assert!(coll);
        assert_eq!(run_lengths(&w), vec![2, 2]);
        let golden = (1.0 + fmath::sqrt(5.0)) / 2.0;
        let (w, coll) = splitting_sequence(1.0, golden, 20);
        assert!(!coll);
        assert_eq!(run_lengths(&w), vec![1; 20]);
    }

    #[test]
    fn splitting_matches_cf_exhaustive() {
        for m1 in 2..=50u64 {
            for m2 in 1..m1 {
                if gcd(m1, m2) != 1 {
                    continue;
                }
                let (w, coll) = splitting_sequence(m2 as f64, m1 as f64, 400);
                assert!(coll, "({m1},{m2})");
                let runs = run_lengths(&w);
                let cf = cf_expand(m1, m2).unwrap();
                assert_eq!(runs, cf, "({m1},{m2})");
            }
        }
    }

    #[test]
    fn slopes() {
        assert_eq!(intersection_number(Slope::infinity(), Slope::new(0, 1).unwrap()), 1);
        let s = Slope::new(3, 6).unwrap();
        assert_eq!((s.p, s.q), (1, 2));
        assert_eq!(intersection_number(s, s), 0);
        assert_eq!(
            intersection_number(Slope::new(1, 2).unwrap(), Slope::new(1, 3).unwrap()),
            1
        );
    }

    #[test]
    fn unzip_examples() {
        let t = MeasureTriple::new(7, 3, 10).unwrap();
        let (runs, term) = unzip_sequence(&t).unwrap();
        
        assert_eq!(term, MeasureTriple { mx: 1, my: 0, mz: 1 });
        assert_eq!(
            runs,
            vec![
                TwistRun { gen: TwistGen::Y, count: 2 },
                TwistRun { gen: TwistGen::X, count: 3 }
            ]
        );
        // zip inverts
        assert_eq!(zip(&runs, &term), MeasureTriple { mx: 7, my: 3, mz: 10 });
        // (1,0,1) is terminal
        let (runs, term) = unzip_sequence(&MeasureTriple::new(1, 0, 1).unwrap()).unwrap();
        assert!(runs.is_empty());
        assert_eq!(term, MeasureTriple { mx: 1, my: 0, mz: 1 });
    }

    #[test]
    fn unzip_counts_match_cf_exhaustive() {
        for mx in 2..=50u64 {
            for my in 1..mx {
                if gcd(mx, my) != 1 {
                    continue;
                }
                let t = MeasureTriple::new(mx, my, mx + my).unwrap();
                let (runs, _) = unzip_sequence(&t).unwrap();
                let counts: Vec<u32> = runs.iter().map(|r| r.count).collect();
                assert_eq!(counts, cf_expand(mx, my).unwrap(), "({mx},{my})");
            }
        }
    }

    #[test]
    fn tropical_domain_table() {
        // domain rows from the coordinate maps
        let p = TropicalPoint::from_ints(2, 1);
        assert_eq!(classify(&p), Domain::I);
        let (q, labels) = tropical_dehn(&p, TwistGen::Y, 1);
        assert_eq!(q, TropicalPoint::from_ints(3, -5));
        assert_eq!(labels, vec![Domain::II]);
        let p = TropicalPoint::from_ints(-1, -1);
        assert_eq!(classify(&p), Domain::II);
        let (q, labels) = tropical_dehn(&p, TwistGen::Y, 1);
        assert_eq!(q, TropicalPoint::from_ints(-2, -1));
        assert_eq!(labels, vec![Domain::II]);
        // D_X from Domain I stays in I; from II returns to I
        let p = TropicalPoint::from_ints(2, 1);
        let (q, _) = tropical_dehn(&p, TwistGen::X, 1);
        assert_eq!(q, TropicalPoint::from_ints(2, 3));
        assert_eq!(classify(&q), Domain::I);
        let p = TropicalPoint::from_ints(1, -3);
        assert_eq!(classify(&p), Domain::II);
        let (q, _) = tropical_dehn(&p, TwistGen::X, 1);
        assert_eq!(classify(&q), Domain::I);
        // origin is fixed
        let o = TropicalPoint::from_ints(0, 0);
        assert_eq!(tropical_dehn(&o, TwistGen::X, 3).0, o);
        assert_eq!(tropical_dehn(&o, TwistGen::Y, 3).0, o);
    }

    #[test]
    fn tropical_proper_lengths_examples() {
        let p = TropicalPoint::from_ints(2, 1);
        assert_eq!(tropical_proper_length(&p, TwistGen::Y).unwrap(), Rational::new(5, 2));
        let p = TropicalPoint::from_ints(-1, -3);
        assert_eq!(tropical_proper_length(&p, TwistGen::X).unwrap(), Rational::new(7, 2));
        assert!(tropical_proper_length(&p, TwistGen::Y).is_err());
    }

    #[test]
    fn tropical_run_length_forms() {
        // after a run of a_j twists from Domain I, the stage length is the
        // affine form  X0/2 + a_j (X0 + Y0/2); after the next run of a_i the
        // form  -Y1/2 + a_i (-Y1 - X1/2)  in the intermediate coordinates
        for (x0, y0) in [(2i64, 1i64), (5, 3), (7, 0), (3, 8)] {
            let p0 = TropicalPoint::from_ints(x0, y0);
            assert_eq!(classify(&p0), Domain::I);
            for aj in 1..=4u32 {
                let (p1, _) = tropical_dehn(&p0, TwistGen::Y, aj);
                let pl = tropical_proper_length(&p1, TwistGen::X).unwrap();
                let expect = p0.x * Rational::new(1, 2)
                    + (p0.x + p0.y * Rational::new(1, 2)) * Rational::from_integer(aj as i64);
                assert_eq!(pl, expect, "({x0},{y0}) a_j={aj}");
                for ai in 1..=3u32 {
                    let (p2, _) = tropical_dehn(&p1, TwistGen::X, ai);
                    let pl2 = tropical_proper_length(&p2, TwistGen::Y).unwrap();
                    let expect2 = -p1.y * Rational::new(1, 2)
                        + (-p1.y - p1.x * Rational::new(1, 2))
                            * Rational::from_integer(ai as i64);
                    assert_eq!(pl2, expect2, "({x0},{y0}) a_j={aj} a_i={ai}");
                }
            }
        }
    }

    #[test]
    fn tropical_recursions_exact() {
        let p = TropicalPoint::from_ints(2, 1);
        for cf in [&[2u32, 3, 1, 4][..], &[1, 1, 1, 1, 1], &[3, 2, 2]] {
            let r = tropical_recursion_residuals(&p, cf).unwrap();
            assert!(r.iter().all(|x| x.is_zero()), "cf {cf:?}: {r:?}");
        }
    }

    #[test]
    fn converge_golden() {
        let g = torus_spine();
        let s = ShearPoint::zeros(3);
        let cf = golden_cf(15);
        let rows = converge_ratio(&g, &s, &cf, 15, [1.0, 1.0, 1.0]).unwrap();
        assert_eq!(rows.len(), 15);
        // (m1, m2) follow Fibonacci numbers
        assert_eq!((rows[0].m1, rows[0].m2), (1, 1));
        assert_eq!((rows[4].m1, rows[4].m2), (8, 5));
        // ratios are Cauchy with decreasing increments past a burn-in
        let mut gaps = Vec::new();
        for w in rows.windows(2) {
            gaps.push((w[1].ratio - w[0].ratio).abs());
        }
        for k in 3..gaps.len() {
            assert!(gaps[k] < gaps[k - 1], "gap increased at depth {k}");
        }
        assert!(gaps.last().unwrap() < &1e-3);
        // depth-1 sanity: ratio = pl/gl of the (1,1) word
        let w0 = &rows[0];
        assert!((w0.graph_length - 4.0).abs() < 1e-12);
    }

    #[test]
    fn converge_weights_change_limit() {
        let g = torus_spine();
        let s = ShearPoint::new(vec![0.2, -0.1, 0.4]);
        let cf = golden_cf(14);
        let a = converge_ratio(&g, &s, &cf, 14, [1.0, 1.0, 1.0]).unwrap();
        let b = converge_ratio(&g, &s, &cf, 14, [0.5, 2.0, 1.0]).unwrap();
        let ra = a.last().unwrap().ratio;
        let rb = b.last().unwrap().ratio;
        assert!((ra - rb).abs() > 1e-3);
        let gap_a = (a[13].ratio - a[12].ratio).abs();
        let gap_b = (b[13].ratio - b[12].ratio).abs();
        assert!(gap_a < 1e-3 && gap_b < 1e-3);
    }

    #[test]
    fn letters_table() {
        let t = alphabet_table();
        use Letter::*;
        let expect: [[Option<Letter>; 4]; 4] = [
            [Some(A), None, Some(D), None],
            [Some(P), Some(B), Some(B), Some(P)],
            [Some(A), Some(D), Some(D), Some(A)],
            [Some(P), None, Some(B), None],
        ];
        assert_eq!(t, expect);
    }

    #[test]
    fn cluster_identity() {
        let zs: [&[f64]; 4] =
            [&[0.3, -0.8], &[1.1, 0.2, -0.5], &[0.9], &[0.4, 0.1, -1.2, 0.7]];
        for l in zs {
            for r in zs {
                let res = cluster_decompose(l, r);
                assert!(res < 1e-12, "L{l:?} R{r:?}: {res}");
            }
        }
    }

    #[test]
    fn appendix_counts() {
        let cf = golden_cf(12);
        assert!(count_ratio_matches_cf(&cf, 5, 5));
        let g = torus_spine();
        let s = ShearPoint::zeros(3);
        let data = appendix_estimate_data(&g, &s, &cf, 5, 5).unwrap();
        // N = 0 has no defect rows; all rows finite
        assert_eq!(data.len(), 5);
        for (lhs, p, q) in &data {
            assert!(lhs.is_finite());
            assert!(*p > 0 && *q > 0);
        }
    }
}
