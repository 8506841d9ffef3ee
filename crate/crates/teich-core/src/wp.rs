//! The Weil–Petersson Poisson structure in shear coordinates: the constant
//! bracket matrix from vertex corners, the induced bracket on Laurent
//! expressions, and the exact Casimir/rank analysis.

use crate::fatgraph::FatGraph;
use crate::laurent::{LaurentExpr, Rational};
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Antisymmetric integer matrix `B` with `B[α][β] = {Z_α, Z_β}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WpMatrix {
    pub entries: Vec<Vec<i32>>,
}

impl WpMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, a: usize, b: usize) -> i32 {
        self.entries[a][b]
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == -self.entries[j][i]))
    }

    /// `u^T B v` for integer vectors.
    pub fn pairing(&self, u: &[i64], v: &[i64]) -> i64 {
        let n = self.dim();
        let mut s = 0i64;
        for i in 0..n {
            if u[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += u[i] * self.entries[i][j] as i64 * v[j];
            }
        }
        s
    }
}

/// Bracket matrix of a spine: each vertex corner `(v_i, v_{i+1})` in
/// counterclockwise order contributes `+1` to `{Z_{v_i}, Z_{v_{i+1}}}`.
pub fn wp_matrix(g: &FatGraph) -> WpMatrix {
    let n = g.edge_count();
    let mut b = vec![vec![0i32; n]; n];
    for v in g.vertices() {
        for i in 0..3 {
            let a = g.edge_of(v[i]).0;
            let c = g.edge_of(v[(i + 1) % 3]).0;
            b[a][c] += 1;
            b[c][a] -= 1;
        }
    }
    WpMatrix { entries: b }
}

/// Poisson bracket of Laurent expressions: on monomials,
/// `{e^{u·Z/2}, e^{v·Z/2}} = (u^T B v / 4) · e^{(u+v)·Z/2}`,
/// extended bilinearly.
pub fn poisson_bracket(f: &LaurentExpr, h: &LaurentExpr, b: &WpMatrix) -> LaurentExpr {
    assert_eq!(f.dim(), h.dim(), "dimension mismatch");
    assert_eq!(f.dim(), b.dim(), "bracket dimension mismatch");
    let mut out = LaurentExpr::zero(f.dim());
    for (u, cu) in f.terms() {
        for (v, cv) in h.terms() {
            let ui: Vec<i64> = u.iter().map(|&x| x as i64).collect();
            let vi: Vec<i64> = v.iter().map(|&x| x as i64).collect();
            let p = b.pairing(&ui, &vi);
            if p == 0 {
                continue;
            }
            let w: Vec<i32> = u.iter().zip(v).map(|(a, c)| a + c).collect();
            let coeff = cu * cv * Rational::new(p, 4);
            out = out.add(&LaurentExpr::monomial(w, coeff));
        }
    }
    out
}

/// Exact rank and kernel basis of the bracket matrix over the rationals.
///
/// Returns `(rank, kernel_basis)`; the kernel is spanned by the face vectors
/// (edge multiplicities of each boundary face), which is verified separately
/// by [`face_vectors_span_kernel`].
pub fn casimir_kernel(b: &WpMatrix) -> (usize, Vec<Vec<BigRational>>) {
    let n = b.dim();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(BigInt::from(b.entries[i][j]))).collect())
        .collect();
    // track kernel via an augmented identity acting on columns:
    // we row-reduce M and read the kernel from free columns instead.
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut row = 0usize;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for x in m[row].iter_mut() {
            *x /= inv.clone();
        }
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..n {
                    let sub = &m[row][c] * &f;
                    m[r][c] -= sub;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == n {
            break;
        }
    }
    let rank = row;
    let mut kernel = Vec::new();
    for free in 0..n {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![BigRational::zero(); n];
        v[free] = BigRational::one();
        for col in 0..n {
            if let Some(r) = pivot_of_col[col] {
                v[col] = -m[r][free].clone();
            }
        }
        kernel.push(v);
    }
    (rank, kernel)
}

/// Face vectors: for each boundary face the vector of edge multiplicities.
pub fn face_vectors(g: &FatGraph) -> Vec<Vec<i64>> {
    let n = g.edge_count();
    g.faces()
        .iter()
        .map(|f| {
            let mut v = vec![0i64; n];
            for e in &f.edges {
                v[e.0] += 1;
            }
            v
        })
        .collect()
}

/// Checks that the face vectors lie in the kernel of `B` and span a space of
/// the same dimension, i.e. that the face sums generate the Casimirs.
pub fn face_vectors_span_kernel(g: &FatGraph, b: &WpMatrix) -> bool {
    let n = b.dim();
    let faces = face_vectors(g);
    // each face vector is killed by B
    for f in &faces {
        for i in 0..n {
            let s: i64 = (0..n).map(|j| b.entries[i][j] as i64 * f[j]).sum();
            if s != 0 {
                return false;
            }
        }
    }
    let (rank, kernel) = casimir_kernel(b);
    let kdim = n - rank;
    if kernel.len() != kdim {
        return false;
    }
    rank_of_int_rows(&faces) == kdim
}

fn rank_of_int_rows(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let n = rows[0].len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let mut rank = 0usize;
    for col in 0..n {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].clone();
        for x in m[rank].iter_mut() {
            *x /= inv.clone();
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..n {
                    let sub = &m[rank][c] * &f;
                    m[r][c] -= sub;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// The number of faces of the spine equals the kernel dimension, and the
/// rank is `6g - 6 + 2s`; both follow from the Euler relation for cubic
/// graphs. Returns `(rank, expected_rank)`.
pub fn rank_vs_expected(g: &FatGraph) -> (usize, usize) {
    let b = wp_matrix(g);
    let (rank, _) = casimir_kernel(&b);
    let genus = g.genus();
    let s = g.faces().len();
    let expected = 6 * genus + 2 * s - 6;
    (rank, expected)
}
