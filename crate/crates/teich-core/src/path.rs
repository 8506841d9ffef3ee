//! Closed edge-paths on a fatgraph: turn words, half-edge walks, transport
//! across Whitehead moves, and the torus block words built from continued
//! fractions.
//!
//! A closed path is stored as its cyclic sequence of steps `(edge, turn)`,
//! read in traversal order from the basepoint; the turn is taken at the far
//! end of the traversed edge. Internally paths are realized as walks: the
//! sequence of entering half-edges. Entering via half `h`, a left turn exits
//! via `sigma(h)` and a right turn via `sigma_inv(h)`, so a cubic vertex
//! never allows turning back.

use crate::fatgraph::{EdgeId, FatGraph, GraphError, HalfEdge};
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Turn {
    Left,
    Right,
}

impl Turn {
    pub fn flip(self) -> Turn {
        match self {
            Turn::Left => Turn::Right,
            Turn::Right => Turn::Left,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub edge: EdgeId,
    pub turn: Turn,
}

/// A cyclic closed edge-path with a designated basepoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePath {
    steps: Vec<Step>,
    basepoint: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathError {
    Empty,
    /// The step sequence cannot be realized as a closed walk on the graph.
    NotRealizable,
    /// Mixed path/graph inputs.
    GraphMismatch,
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::Empty => write!(f, "empty path"),
            PathError::NotRealizable => write!(f, "path is not realizable as a closed walk"),
            PathError::GraphMismatch => write!(f, "path does not belong to this graph"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PathError {}

impl EdgePath {
    pub fn new(steps: Vec<Step>) -> Result<Self, PathError> {
        if steps.is_empty() {
            return Err(PathError::Empty);
        }
        Ok(EdgePath { steps, basepoint: 0 })
    }

    pub fn with_basepoint(mut self, basepoint: usize) -> Self {
        self.basepoint = basepoint % self.steps.len();
        self
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    /// Steps in traversal order starting at the basepoint.
    pub fn steps(&self) -> Vec<Step> {
        let n = self.steps.len();
        (0..n).map(|i| self.steps[(self.basepoint + i) % n]).collect()
    }

    /// Validates that the steps close up as a walk on `g` and returns one
    /// realizing walk (entering halves, basepoint first).
    pub fn realize(&self, g: &FatGraph) -> Result<Vec<HalfEdge>, PathError> {
        let steps = self.steps();
        for s in &steps {
            if s.edge.0 >= g.edge_count() {
                return Err(PathError::GraphMismatch);
            }
        }
        let (h1, h2) = g.halves(steps[0].edge);
        for start in [h1, h2] {
            if let Some(walk) = try_walk(g, start, &steps) {
                return Ok(walk);
            }
        }
        Err(PathError::NotRealizable)
    }
}

fn try_walk(g: &FatGraph, start: HalfEdge, steps: &[Step]) -> Option<Vec<HalfEdge>> {
    let mut walk = Vec::with_capacity(steps.len());
    let mut h = start;
    for s in steps {
        if g.edge_of(h) != s.edge {
            return None;
        }
        walk.push(h);
        let exit = match s.turn {
            Turn::Left => g.sigma(h),
            Turn::Right => g.sigma_inv(h),
        };
        h = g.alpha(exit);
    }
    if h == start {
        Some(walk)
    } else {
        None
    }
}

/// Reads the step word off a walk of entering halves.
pub fn steps_of_walk(g: &FatGraph, walk: &[HalfEdge]) -> Result<Vec<Step>, PathError> {
    let n = walk.len();
    if n == 0 {
        return Err(PathError::Empty);
    }
    let mut steps = Vec::with_capacity(n);
    for i in 0..n {
        let h = walk[i];
        let tail_next = g.alpha(walk[(i + 1) % n]);
        let turn = if g.sigma(h) == tail_next {
            Turn::Left
        } else if g.sigma_inv(h) == tail_next {
            Turn::Right
        } else {
            return Err(PathError::NotRealizable);
        };
        steps.push(Step { edge: g.edge_of(h), turn });
    }
    Ok(steps)
}

/// Follows a turn word from a starting oriented edge (given by its entering
/// half). Returns the walk if it closes up exactly at the end of the word.
pub fn walk_by_turns(g: &FatGraph, start: HalfEdge, turns: &[Turn]) -> Option<Vec<HalfEdge>> {
    let mut walk = Vec::with_capacity(turns.len());
    let mut h = start;
    for t in turns {
        walk.push(h);
        let exit = match t {
            Turn::Left => g.sigma(h),
            Turn::Right => g.sigma_inv(h),
        };
        h = g.alpha(exit);
    }
    if h == start && !walk.is_empty() {
        Some(walk)
    } else {
        None
    }
}

/// Transports a closed walk across the Whitehead move at `e`.
///
/// Traversals of edges other than `e` keep their entering halves; the walk is
/// re-threaded through the flipped neighborhood, inserting or dropping
/// traversals of `e` as the new cyclic orders require.
pub fn transport_walk(
    g: &FatGraph,
    flipped: &FatGraph,
    e: EdgeId,
    walk: &[HalfEdge],
) -> Result<Vec<HalfEdge>, GraphError> {
    let (z1, z2) = g.halves(e);
    let anchors: Vec<HalfEdge> = walk.iter().copied().filter(|&h| g.edge_of(h) != e).collect();
    if anchors.is_empty() {
        return Err(GraphError::NotFlippable(
            "path supported entirely on the flipped edge".to_string(),
        ));
    }
    let mut out = Vec::with_capacity(anchors.len() + 2);
    let n = anchors.len();
    for i in 0..n {
        let a = anchors[i];
        let b = anchors[(i + 1) % n];
        out.push(a);
        let tail_b = flipped.alpha(b);
        let va = flipped.vertex_of(a);
        if flipped.vertex_of(tail_b) == va {
            continue;
        }
        // reconnect through the flipped edge
        let zh = if flipped.vertex_of(z1) == va {
            z1
        } else if flipped.vertex_of(z2) == va {
            z2
        } else {
            return Err(GraphError::BadIncidence("anchors not adjacent after flip".to_string()));
        };
        out.push(flipped.alpha(zh));
    }
    Ok(out)
}

/// Total weighted length of a path: the sum of edge weights over its steps.
///
/// With unit weights this is the combinatorial graph length. Weights must be
/// strictly positive.
pub fn graph_length(path: &EdgePath, weights: &[f64]) -> Result<f64, PathError> {
    if weights.iter().any(|&w| w <= 0.0) {
        return Err(PathError::NotRealizable);
    }
    let mut total = 0.0;
    for s in path.steps() {
        let w = weights.get(s.edge.0).ok_or(PathError::GraphMismatch)?;
        total += w;
    }
    Ok(total)
}

/// Block letters for torus multicurve words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    X,
    Y,
}

/// A block word in matrix order: the rightmost factor (the first block the
/// curve traverses) is the last element of the slice when read left to
/// right, so we store words with index 0 = leftmost factor.
pub type BlockWord = Vec<Block>;

/// Builds the words `L_n` and `tilde L_n` for the partial quotients `cf`,
/// by the two-term recursion with the first-two-symbols swap on the tilde
/// side. `L_1 = X^{a_1} Y`; `tilde L_0 = X`.
pub fn cf_block_words(cf: &[u32]) -> Result<(Vec<BlockWord>, Vec<BlockWord>), PathError> {
    if cf.is_empty() || cf.iter().any(|&a| a == 0) {
        return Err(PathError::Empty);
    }
    let mut l: Vec<BlockWord> = Vec::with_capacity(cf.len() + 1);
    let mut lt: Vec<BlockWord> = Vec::with_capacity(cf.len() + 1);
    // index 0 holds the seed: L_0 unused, tilde L_0 = X
    l.push(alloc::vec![Block::X]);
    lt.push(alloc::vec![Block::X]);
    let a1 = cf[0] as usize;
    let mut l1 = alloc::vec![Block::X; a1];
    l1.push(Block::Y);
    // tilde: swap the two rightmost symbols (the first two traversed)
    let mut lt1 = alloc::vec![Block::X; a1 - 1];
    lt1.push(Block::Y);
    lt1.push(Block::X);
    l.push(l1);
    lt.push(lt1);
    for n in 2..=cf.len() {
        let a = cf[n - 1] as usize;
        let (head, mid) = if n % 2 == 0 {
            (&l[n - 1], &lt[n - 2])
        } else {
            (&lt[n - 1], &l[n - 2])
        };
        let mut w: BlockWord = Vec::new();
        for _ in 0..a - 1 {
            w.extend_from_slice(head);
        }
        w.extend_from_slice(mid);
        w.extend_from_slice(&l[n - 1]);
        let mut wt = w[..w.len() - l[n - 1].len()].to_vec();
        wt.extend_from_slice(&lt[n - 1]);
        l.push(w);
        lt.push(wt);
    }
    Ok((l, lt))
}

/// (#X blocks, #Y blocks) of a word.
pub fn block_counts(w: &[Block]) -> (u64, u64) {
    let x = w.iter().filter(|b| matches!(b, Block::X)).count() as u64;
    (x, w.len() as u64 - x)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The block word with `m1` X-blocks and `m2` Y-blocks in continued-fraction
/// order, for coprime `(m1, m2)`.
pub fn slope_block_word(m1: u64, m2: u64) -> Result<BlockWord, PathError> {
    if m1 == 0 && m2 == 0 {
        return Err(PathError::Empty);
    }
    if gcd(m1, m2) != 1 {
        return Err(PathError::NotRealizable);
    }
    if m2 == 0 {
        return Ok(alloc::vec![Block::X]);
    }
    if m1 == 0 {
        return Ok(alloc::vec![Block::Y]);
    }
    if m1 >= m2 {
        let cf = crate::thurston::cf_expand_ratio(m1, m2);
        let (l, _) = cf_block_words(&cf)?;
        let w = l.last().unwrap().clone();
        debug_assert_eq!(block_counts(&w), (m1, m2));
        Ok(w)
    } else {
        // symmetric construction with the roles of the blocks exchanged
        let cf = crate::thurston::cf_expand_ratio(m2, m1);
        let (l, _) = cf_block_words(&cf)?;
        let w: BlockWord = l
            .last()
            .unwrap()
            .iter()
            .map(|b| match b {
                Block::X => Block::Y,
                Block::Y => Block::X,
            })
            .collect();
        debug_assert_eq!(block_counts(&w), (m1, m2));
        Ok(w)
    }
}

/// Expands a block word into torus spine steps. The X-block traverses
/// `Z` then `Y`; the Y-block traverses `Z` then `X`. Blocks are laid down
/// reading the word left to right; this is the rotation of the cyclic word
/// whose raw quantum trace admits the canonical ordering shift.
pub fn block_word_to_steps(g: &FatGraph, w: &[Block]) -> Result<Vec<Step>, GraphError> {
    let x = g.edge_by_label("X")?;
    let y = g.edge_by_label("Y")?;
    let z = g.edge_by_label("Z")?;
    let mut steps = Vec::with_capacity(2 * w.len());
    for b in w.iter() {
        match b {
            Block::X => {
                steps.push(Step { edge: z, turn: Turn::Right });
                steps.push(Step { edge: y, turn: Turn::Left });
            }
            Block::Y => {
                steps.push(Step { edge: z, turn: Turn::Left });
                steps.push(Step { edge: x, turn: Turn::Right });
            }
        }
    }
    Ok(steps)
}

/// The closed torus path of the multicurve with `m1` X-blocks and `m2`
/// Y-blocks (coprime). Errors on non-coprime input, which should be reduced
/// projectively first.
pub fn slope_path(g: &FatGraph, m1: u64, m2: u64) -> Result<EdgePath, GraphError> {
    let w = slope_block_word(m1, m2)
        .map_err(|_| GraphError::UnknownEdge(alloc::format!("slope ({m1},{m2}) not coprime")))?;
    let steps = block_word_to_steps(g, &w)?;
    Ok(EdgePath::new(steps).expect("nonempty"))
}
