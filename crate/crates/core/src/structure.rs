//! Level maps from a base vertex and the homomorphism targets built from
//! them.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Hops, Vertex, VertexSet};
use crate::oracle::ClassClaim;

/// BFS distance from `base`; `None` for vertices it does not reach.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelMap {
    pub base: Vertex,
    pub levels: Vec<Option<usize>>,
}

impl LevelMap {
    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.levels.get(v).copied().flatten()
    }

    pub fn max_level(&self) -> Option<usize> {
        self.levels.iter().flatten().copied().max()
    }

    pub fn first_unreached(&self) -> Option<Vertex> {
        self.levels.iter().position(Option::is_none)
    }
}

/// Codomain of a level homomorphism, given only by its edge rule on levels.
/// The loops of the infinite target are never built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetKind {
    /// `φ(u) ≥ φ(v)`.
    TInf,
    /// `φ(u) ≥ φ(v)` or `φ(v) = φ(u) + 1`.
    T3,
}

impl TargetKind {
    pub fn allows(self, from: usize, to: usize) -> bool {
        match self {
            TargetKind::TInf => from >= to,
            TargetKind::T3 => from >= to || to == from + 1,
        }
    }
}

pub fn level_map(g: &Digraph, x: Vertex) -> Result<LevelMap> {
    g.check_vertex(x)?;
    let mut levels = vec![None; g.n()];
    levels[x] = Some(0);
    let mut frontier = vec![x];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for u in frontier {
            for &v in g.out_neighbors(u) {
                if levels[v].is_none() {
                    levels[v] = Some(depth);
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    Ok(LevelMap { base: x, levels })
}

/// Whether every edge obeys the target's rule; on failure also returns the
/// first violating edge in ascending edge order.
pub fn check_hom(g: &Digraph, lm: &LevelMap, t: TargetKind) -> Result<(bool, Option<(Vertex, Vertex)>)> {
    if lm.levels.len() != g.n() {
        return Err(Error::Precondition(format!(
            "level map covers {} vertices, graph has {}",
            lm.levels.len(),
            g.n()
        )));
    }
    if let Some(v) = lm.first_unreached() {
        return Err(Error::Precondition(format!(
            "vertex {v} is not reached from {}",
            lm.base
        )));
    }
    let level = |v: Vertex| lm.levels[v].expect("checked above");
    let bad = g.edges().find(|&(u, v)| !t.allows(level(u), level(v)));
    Ok((bad.is_none(), bad))
}

/// `k` vertices with edges `(i, j)` for `i > j` and `(i, i + 1)`. Every pair
/// is adjacent; consecutive vertices are joined both ways.
pub fn t3_prefix(k: usize) -> Result<Digraph> {
    if k == 0 {
        return Err(Error::Precondition("t3_prefix needs k >= 1".into()));
    }
    let down = (0..k).flat_map(|i| (0..i).map(move |j| (i, j)));
    let up = (0..k - 1).map(|i| (i, i + 1));
    Digraph::new(k, down.chain(up).collect::<Vec<_>>())
}

/// A vertex reaching everything in at most three steps.
///
/// With `n` the largest level from `x`: if `n ≤ 3` this is `x`, otherwise
/// the least vertex `y` at level `n`. Such a `y` is not in `Out^{n-1}(x)`,
/// so every vertex of `Out^{n-2}(x)` is an out-neighbor of `y`. Needs every
/// pair of vertices adjacent and `x` reaching all of `V`.
pub fn promote_out3(g: &Digraph, x: Vertex) -> Result<Vertex> {
    for u in g.vertices() {
        for v in u + 1..g.n() {
            if !g.adjacent(u, v) {
                return Err(Error::NotTournament(u, v, "has no edge"));
            }
        }
    }
    let lm = level_map(g, x)?;
    if let Some(v) = lm.first_unreached() {
        return Err(Error::Precondition(format!("vertex {v} is not reached from {x}")));
    }
    let n = lm.max_level().unwrap_or(0);
    if n <= 3 {
        return Ok(x);
    }
    Ok(g.vertices()
        .find(|&v| lm.levels[v] == Some(n))
        .expect("max level is attained"))
}

/// OUT(∞) witness: the least vertex of each condensation class that no edge
/// enters from another class.
pub fn out_inf_witness(g: &Digraph) -> ClassClaim {
    let cond = g.condensation();
    let witness: VertexSet = cond
        .source_classes(g)
        .into_iter()
        .map(|c| cond.classes[c].first().expect("classes are nonempty"))
        .collect();
    ClassClaim::out(Hops::Unbounded, witness)
}
