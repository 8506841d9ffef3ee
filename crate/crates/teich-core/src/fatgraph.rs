//! Cubic fatgraphs (ribbon graphs): vertices with cyclically ordered
//! half-edges, an edge involution, derived faces, Whitehead moves, and the
//! standard spine constructors.
//!
//! The encoding is the usual pair of permutations on half-edges: `sigma`
//! (counterclockwise successor at a vertex) and `alpha` (the edge
//! involution). Faces are orbits of `sigma ∘ alpha` and are always derived,
//! never stored.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Index of a half-edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdge(pub usize);

/// Index of an (unoriented) edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

/// A face, listed as the cyclic sequence of edges traversed by the boundary
/// walk (edges appear with multiplicity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub edges: Vec<EdgeId>,
}

impl Face {
    /// Number of times `e` occurs on this face.
    pub fn multiplicity(&self, e: EdgeId) -> usize {
        self.edges.iter().filter(|&&x| x == e).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// A vertex does not have exactly three half-edges.
    NotCubic,
    /// A half-edge occurs in more than one vertex or edge, or in none.
    BadIncidence(String),
    /// The graph is not connected.
    Disconnected,
    /// The requested edge label or id does not exist.
    UnknownEdge(String),
    /// Whitehead move requested on a loop edge.
    NotFlippable(String),
    /// The requested (genus, holes) pair is not realized by the spine family.
    NotConstructible { genus: usize, holes: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::NotCubic => write!(f, "every vertex must have exactly 3 half-edges"),
            GraphError::BadIncidence(s) => write!(f, "bad half-edge incidence: {s}"),
            GraphError::Disconnected => write!(f, "graph is not connected"),
            GraphError::UnknownEdge(s) => write!(f, "unknown edge: {s}"),
            GraphError::NotFlippable(s) => write!(f, "edge {s} is a loop and not flippable"),
            GraphError::NotConstructible { genus, holes } => {
                write!(f, "(genus, holes) = ({genus}, {holes}) not constructible in this family")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GraphError {}

/// A cubic fatgraph with labelled edges.
///
/// Immutable after construction; all operations return new graphs.
#[derive(Clone, Debug)]
pub struct FatGraph {
    /// Cyclically ordered half-edge triples, one per vertex.
    vertices: Vec<[HalfEdge; 3]>,
    /// `alpha[h]` is the opposite half of the edge containing `h`.
    alpha: Vec<HalfEdge>,
    /// `edge_of[h]` is the edge containing half `h`.
    edge_of: Vec<EdgeId>,
    /// One representative pair of halves per edge.
    edge_halves: Vec<(HalfEdge, HalfEdge)>,
    /// Edge labels, indexed by `EdgeId`.
    labels: Vec<String>,
}

impl FatGraph {
    /// Builds a graph from vertex triples (counterclockwise order) and
    /// labelled edges given as half-edge pairs. Validates all invariants.
    pub fn new(
        vertices: Vec<[HalfEdge; 3]>,
        edges: Vec<(String, HalfEdge, HalfEdge)>,
    ) -> Result<Self, GraphError> {
        let n_half = vertices.len() * 3;
        let mut seen_vertex = vec![false; n_half];
        for v in &vertices {
            for h in v {
                if h.0 >= n_half {
                    return Err(GraphError::BadIncidence(format!("half {} out of range", h.0)));
                }
                if seen_vertex[h.0] {
                    return Err(GraphError::BadIncidence(format!("half {} in two vertices", h.0)));
                }
                seen_vertex[h.0] = true;
            }
        }
        if n_half != edges.len() * 2 {
            return Err(GraphError::NotCubic);
        }
        let mut alpha = vec![None; n_half];
        let mut edge_of = vec![None; n_half];
        let mut labels = Vec::with_capacity(edges.len());
        let mut edge_halves = Vec::with_capacity(edges.len());
        for (i, (label, h1, h2)) in edges.iter().enumerate() {
            for h in [h1, h2] {
                if h.0 >= n_half || edge_of[h.0].is_some() {
                    return Err(GraphError::BadIncidence(format!(
                        "half {} missing from vertices or in two edges",
                        h.0
                    )));
                }
            }
            if h1 == h2 {
                return Err(GraphError::BadIncidence("edge with a single half".to_string()));
            }
            alpha[h1.0] = Some(*h2);
            alpha[h2.0] = Some(*h1);
            edge_of[h1.0] = Some(EdgeId(i));
            edge_of[h2.0] = Some(EdgeId(i));
            labels.push(label.clone());
            edge_halves.push((*h1, *h2));
        }
        if seen_vertex.iter().any(|s| !s) || alpha.iter().any(Option::is_none) {
            return Err(GraphError::BadIncidence("unpaired half-edge".to_string()));
        }
        let g = FatGraph {
            vertices,
            alpha: alpha.into_iter().map(Option::unwrap).collect(),
            edge_of: edge_of.into_iter().map(Option::unwrap).collect(),
            edge_halves,
            labels,
        };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for h in self.vertices[v] {
                let w = self.vertex_of(self.alpha(h));
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> &[[HalfEdge; 3]] {
        &self.vertices
    }

    /// Index of the vertex containing half `h`.
    pub fn vertex_of(&self, h: HalfEdge) -> usize {
        // Vertex triples are laid out by the constructor caller; search.
        self.vertices
            .iter()
            .position(|v| v.contains(&h))
            .expect("half-edge in some vertex")
    }

    /// Counterclockwise successor of `h` around its vertex.
    pub fn sigma(&self, h: HalfEdge) -> HalfEdge {
        let v = &self.vertices[self.vertex_of(h)];
        let i = v.iter().position(|&x| x == h).unwrap();
        v[(i + 1) % 3]
    }

    /// Counterclockwise predecessor of `h` around its vertex.
    pub fn sigma_inv(&self, h: HalfEdge) -> HalfEdge {
        let v = &self.vertices[self.vertex_of(h)];
        let i = v.iter().position(|&x| x == h).unwrap();
        v[(i + 2) % 3]
    }

    /// The opposite half of the edge containing `h`.
    pub fn alpha(&self, h: HalfEdge) -> HalfEdge {
        self.alpha[h.0]
    }

    pub fn edge_of(&self, h: HalfEdge) -> EdgeId {
        self.edge_of[h.0]
    }

    pub fn halves(&self, e: EdgeId) -> (HalfEdge, HalfEdge) {
        self.edge_halves[e.0]
    }

    pub fn label(&self, e: EdgeId) -> &str {
        &self.labels[e.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edge_by_label(&self, label: &str) -> Result<EdgeId, GraphError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(EdgeId)
            .ok_or_else(|| GraphError::UnknownEdge(label.to_string()))
    }

    pub fn half_edge_count(&self) -> usize {
        self.alpha.len()
    }

    /// Whether `e` has two distinct endpoints.
    pub fn is_flippable(&self, e: EdgeId) -> bool {
        let (h1, h2) = self.halves(e);
        self.vertex_of(h1) != self.vertex_of(h2)
    }

    /// Boundary faces: orbits of `h ↦ sigma(alpha(h))`, reported as cyclic
    /// edge sequences. Every half-edge lies on exactly one face corner, so
    /// each edge occurs twice in total over all faces.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.alpha.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut h = HalfEdge(start);
            while !seen[h.0] {
                seen[h.0] = true;
                cyc.push(self.edge_of(h));
                h = self.sigma(self.alpha(h));
            }
            out.push(Face { edges: cyc });
        }
        out
    }

    /// Genus from the Euler relation `v - e + f = 2 - 2g`.
    pub fn genus(&self) -> usize {
        let v = self.vertex_count() as i64;
        let e = self.edge_count() as i64;
        let f = self.faces().len() as i64;
        ((2 - (v - e + f)) / 2) as usize
    }

    /// Whitehead move along `e`: contracts and re-expands the edge the other
    /// way. Labels are preserved; applying the move twice on the same edge
    /// returns a graph isomorphic to the input.
    pub fn whitehead(&self, e: EdgeId) -> Result<FatGraph, GraphError> {
        let (zu, zw) = self.halves(e);
        let vu = self.vertex_of(zu);
        let vw = self.vertex_of(zw);
        if vu == vw {
            return Err(GraphError::NotFlippable(self.label(e).to_string()));
        }
        // Rotate each endpoint triple so the flip-edge half comes first:
        // u = (z_u, u1, u2), w = (z_w, w1, w2).
        let u1 = self.sigma(zu);
        let u2 = self.sigma_inv(zu);
        let w1 = self.sigma(zw);
        let w2 = self.sigma_inv(zw);
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            if i == vu {
                vertices.push([zu, u2, w1]);
            } else if i == vw {
                vertices.push([zw, w2, u1]);
            } else {
                vertices.push(*v);
            }
        }
        let edges = self
            .labels
            .iter()
            .zip(&self.edge_halves)
            .map(|(l, &(a, b))| (l.clone(), a, b))
            .collect();
        FatGraph::new(vertices, edges)
    }

    /// The four half-edge slots around a flippable edge, in the order
    /// `(u1, u2, w1, w2)` where `u1 = sigma(z_u)` etc. The flip adds
    /// `phi(Z)` to the coordinates of the `u1`/`w1` edges and subtracts
    /// `phi(-Z)` from those of the `u2`/`w2` edges.
    pub fn flip_slots(&self, e: EdgeId) -> Result<[HalfEdge; 4], GraphError> {
        let (zu, zw) = self.halves(e);
        if self.vertex_of(zu) == self.vertex_of(zw) {
            return Err(GraphError::NotFlippable(self.label(e).to_string()));
        }
        Ok([self.sigma(zu), self.sigma_inv(zu), self.sigma(zw), self.sigma_inv(zw)])
    }

    /// Label-respecting canonical form: for each vertex the lexicographically
    /// minimal rotation of its label triple, the whole list sorted.
    pub fn canonical_form(&self) -> Vec<[String; 3]> {
        let mut rows: Vec<[String; 3]> = self
            .vertices
            .iter()
            .map(|v| {
                let lab: Vec<String> =
                    v.iter().map(|&h| self.label(self.edge_of(h)).to_string()).collect();
                let mut best: Option<[String; 3]> = None;
                for r in 0..3 {
                    let cand = [
                        lab[r].clone(),
                        lab[(r + 1) % 3].clone(),
                        lab[(r + 2) % 3].clone(),
                    ];
                    if best.as_ref().map_or(true, |b| cand < *b) {
                        best = Some(cand);
                    }
                }
                best.unwrap()
            })
            .collect();
        rows.sort();
        rows
    }

    /// Label-respecting isomorphism via canonical forms.
    pub fn is_isomorphic(&self, other: &FatGraph) -> bool {
        self.canonical_form() == other.canonical_form()
    }
}

/// The once-punctured torus spine: two vertices, edges `X`, `Y`, `Z`, both
/// vertices carrying the same cyclic label order.
pub fn torus_spine() -> FatGraph {
    let h = |i| HalfEdge(i);
    FatGraph::new(
        vec![[h(0), h(1), h(2)], [h(3), h(4), h(5)]],
        vec![
            ("X".to_string(), h(0), h(3)),
            ("Y".to_string(), h(1), h(4)),
            ("Z".to_string(), h(2), h(5)),
        ],
    )
    .expect("torus spine is valid")
}

/// Builds the standard spine for a surface of the given genus with the given
/// number of holes.
///
/// Supported family: the once-punctured torus spine for `(1, 1)`, and for
/// `genus + holes >= 3` a line tree carrying `genus` handle blocks followed
/// by `holes - 1` hole blocks (the last face comes for free). Anything else
/// is reported as not constructible.
pub fn build_standard_spine(genus: usize, holes: usize) -> Result<FatGraph, GraphError> {
    if genus == 1 && holes == 1 {
        return Ok(torus_spine());
    }
    let not = || GraphError::NotConstructible { genus, holes };
    if holes == 0 || 2 * genus + holes <= 2 {
        return Err(not());
    }
    let n_blocks = genus + holes - 1;
    if n_blocks < 2 {
        return Err(not());
    }

    let mut next_half = 0usize;
    let mut take = |k: usize| {
        let base = next_half;
        next_half += k;
        base
    };
    let mut vertices: Vec<[HalfEdge; 3]> = Vec::new();
    let mut edges: Vec<(String, HalfEdge, HalfEdge)> = Vec::new();
    let mut stubs: Vec<HalfEdge> = Vec::new();

    // Handle block: v1 = (stub, B, C), v2 = (B, D, E), v3 = (C, D, E); the
    // cyclic orders reproduce the Poisson bracket submatrix of the block.
    for i in 0..genus {
        let b = take(9);
        let h = |k| HalfEdge(b + k);
        vertices.push([h(0), h(1), h(2)]);
        vertices.push([h(3), h(4), h(5)]);
        vertices.push([h(6), h(7), h(8)]);
        edges.push((format!("B{i}"), h(1), h(3)));
        edges.push((format!("C{i}"), h(2), h(6)));
        edges.push((format!("D{i}"), h(4), h(7)));
        edges.push((format!("E{i}"), h(5), h(8)));
        stubs.push(h(0));
    }
    // Hole block: one vertex (stub, N, N) with a loop edge N; its coordinate
    // is central and the loop bounds the extra face.
    for j in 0..holes.saturating_sub(1) {
        let b = take(3);
        let h = |k| HalfEdge(b + k);
        vertices.push([h(0), h(1), h(2)]);
        edges.push((format!("N{}", genus + j), h(1), h(2)));
        stubs.push(h(0));
    }

    if n_blocks == 2 {
        edges.push(("A0".to_string(), stubs[0], stubs[1]));
    } else {
        // Caterpillar: t_0 .. t_{n-3}; block 0 hangs off the left end,
        // block i+1 off t_i, block n-1 off the right end.
        let mut tree: Vec<[HalfEdge; 3]> = Vec::new();
        for _ in 0..n_blocks - 2 {
            let b = take(3);
            tree.push([HalfEdge(b), HalfEdge(b + 1), HalfEdge(b + 2)]);
        }
        let mut xi = 0usize;
        for (i, t) in tree.iter().enumerate() {
            vertices.push(*t);
            if i == 0 {
                edges.push((format!("A{i}"), stubs[0], t[0]));
            }
            edges.push((format!("A{}", i + 1), t[1], stubs[i + 1]));
            if i < tree.len() - 1 {
                edges.push((format!("X{xi}"), t[2], tree[i + 1][0]));
                xi += 1;
            } else {
                edges.push((format!("A{}", n_blocks - 1), t[2], stubs[n_blocks - 1]));
            }
        }
    }

    let g = FatGraph::new(vertices, edges)?;
    debug_assert_eq!(g.genus(), genus);
    debug_assert_eq!(g.faces().len(), holes);
    Ok(g)
}
