//! Finite loopless digraphs and the closure vocabulary every other module
//! speaks: out/in closures, independence, induced subgraphs, reversal,
//! undirected complements and condensations.

mod condensation;
mod undirected;
mod vertex_set;

use std::collections::HashSet;
use std::fmt;
use std::ops::Range;

pub use condensation::Condensation;
pub use undirected::UndirectedGraph;
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Path-length bound of a closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hops {
    Steps(usize),
    /// Fixpoint: any finite path length.
    Unbounded,
}

impl Hops {
    pub fn allows(self, len: usize) -> bool {
        match self {
            Hops::Steps(n) => len <= n,
            Hops::Unbounded => true,
        }
    }
}

impl fmt::Display for Hops {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hops::Steps(n) => write!(f, "{n}"),
            Hops::Unbounded => f.write_str("inf"),
        }
    }
}

impl From<usize> for Hops {
    fn from(n: usize) -> Self {
        Hops::Steps(n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Paths leave the source set.
    Out,
    /// Paths end in the source set.
    In,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Out => Direction::In,
            Direction::In => Direction::Out,
        }
    }
}

/// A finite loopless digraph on the vertex ids `0..n`.
///
/// Adjacency lists are kept sorted, so iteration over vertices, neighbors and
/// edges is ascending and deterministic. Edge membership is a hash lookup.
#[derive(Clone)]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
    edge_set: HashSet<(Vertex, Vertex)>,
}

impl Digraph {
    /// Builds a digraph, rejecting loops and out-of-range endpoints.
    /// Duplicate edges are collapsed.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut edge_set = HashSet::new();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if edge_set.insert((u, v)) {
                out[u].push(v);
                inn[v].push(u);
            }
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Digraph { n, out, inn, edge_set })
    }

    pub fn edgeless(n: usize) -> Self {
        Digraph {
            n,
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            edge_set: HashSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Range<Vertex> {
        0..self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_set.len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_set.contains(&(u, v))
    }

    /// True if an edge joins `u` and `v` in either direction.
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_edge(u, v) || self.has_edge(v, u)
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inn[v]
    }

    pub fn neighbors(&self, v: Vertex, dir: Direction) -> &[Vertex] {
        match dir {
            Direction::Out => &self.out[v],
            Direction::In => &self.inn[v],
        }
    }

    /// All edges in ascending `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_set(&self, a: &VertexSet) -> Result<()> {
        match a.last() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// Vertices reachable from (`Out`) or reaching (`In`) the set `a` by a
    /// path of at most `hops` edges. The set itself is included.
    pub fn closure(&self, a: &VertexSet, hops: Hops, dir: Direction) -> Result<VertexSet> {
        self.check_set(a)?;
        Ok(VertexSet::from_mask(&self.reach_mask(a.iter(), hops, dir, None)))
    }

    /// Like [`Digraph::closure`], but paths may only visit vertices of
    /// `within`; this is the closure taken in the induced subgraph
    /// `G[within]`. Sources outside `within` are ignored.
    pub fn closure_within(&self, a: &VertexSet, hops: Hops, dir: Direction, within: &VertexSet) -> Result<VertexSet> {
        self.check_set(a)?;
        self.check_set(within)?;
        let allowed = within.to_mask(self.n);
        Ok(VertexSet::from_mask(&self.reach_mask(
            a.iter(),
            hops,
            dir,
            Some(&allowed),
        )))
    }

    /// Breadth-first closure on membership masks. Callers guarantee that
    /// sources are in range.
    pub(crate) fn reach_mask(
        &self,
        sources: impl IntoIterator<Item = Vertex>,
        hops: Hops,
        dir: Direction,
        allowed: Option<&[bool]>,
    ) -> Vec<bool> {
        let ok = |v: Vertex| allowed.is_none_or(|m| m[v]);
        let mut seen = vec![false; self.n];
        let mut frontier: Vec<Vertex> = Vec::new();
        for s in sources {
            if ok(s) && !seen[s] {
                seen[s] = true;
                frontier.push(s);
            }
        }
        let mut steps = 0;
        while !frontier.is_empty() && hops.allows(steps + 1) {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in self.neighbors(u, dir) {
                    if !seen[w] && ok(w) {
                        seen[w] = true;
                        next.push(w);
                    }
                }
            }
            frontier = next;
            steps += 1;
        }
        seen
    }

    /// No edge, in either direction, joins two members of `a`.
    pub fn is_independent(&self, a: &VertexSet) -> Result<bool> {
        self.check_set(a)?;
        Ok(a.iter().all(|u| self.out[u].iter().all(|&v| !a.contains(v))))
    }

    /// The induced subgraph `G[w]`, relabelled `0..|w|` in ascending
    /// original-id order.
    pub fn induced(&self, w: &VertexSet) -> Result<Induced> {
        self.check_set(w)?;
        let to_old = w.to_vec();
        let mut to_new = vec![None; self.n];
        for (i, &v) in to_old.iter().enumerate() {
            to_new[v] = Some(i);
        }
        let edges = to_old.iter().enumerate().flat_map(|(i, &u)| {
            let to_new = &to_new;
            self.out[u].iter().filter_map(move |&v| to_new[v].map(|j| (i, j)))
        });
        let graph = Digraph::new(to_old.len(), edges.collect::<Vec<_>>())?;
        Ok(Induced { graph, to_old, to_new })
    }

    /// Every edge turned around.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
            edge_set: self.edge_set.iter().map(|&(u, v)| (v, u)).collect(),
        }
    }

    /// `{x, y}` is an edge of the complement iff neither `(x, y)` nor
    /// `(y, x)` is an edge here.
    pub fn complement_undirected(&self) -> UndirectedGraph {
        let pairs = (0..self.n).flat_map(|x| {
            (x + 1..self.n)
                .filter(move |&y| !self.adjacent(x, y))
                .map(move |y| (x, y))
        });
        UndirectedGraph::new(self.n, pairs.collect::<Vec<_>>()).expect("pairs are in range and distinct")
    }

    /// Exactly one directed edge between every pair of distinct vertices.
    pub fn is_tournament(&self) -> bool {
        self.tournament_defect().is_none()
    }

    pub(crate) fn tournament_defect(&self) -> Option<Error> {
        for x in 0..self.n {
            for y in x + 1..self.n {
                match (self.has_edge(x, y), self.has_edge(y, x)) {
                    (true, true) => return Some(Error::NotTournament(x, y, "has both directions")),
                    (false, false) => return Some(Error::NotTournament(x, y, "has no edge")),
                    _ => {}
                }
            }
        }
        None
    }

    pub fn require_tournament(&self) -> Result<()> {
        match self.tournament_defect() {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    /// Greedy maximal independent set avoiding `forbidden`: ids are scanned
    /// ascending and each vertex not adjacent to the current set is taken.
    pub fn greedy_max_independent(&self, forbidden: &VertexSet) -> VertexSet {
        let mut blocked = forbidden.to_mask(self.n);
        let mut taken = VertexSet::new();
        for v in 0..self.n {
            if blocked[v] {
                continue;
            }
            taken.insert(v);
            for &w in self.out[v].iter().chain(&self.inn[v]) {
                blocked[w] = true;
            }
        }
        taken
    }

    pub fn condensation(&self) -> Condensation {
        Condensation::of(self)
    }
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.out == other.out
    }
}

impl Eq for Digraph {}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// An induced subgraph together with both directions of the relabelling.
#[derive(Debug, Clone)]
pub struct Induced {
    pub graph: Digraph,
    /// New id `i` was original vertex `to_old[i]`.
    pub to_old: Vec<Vertex>,
    /// Original vertex `v` became `to_new[v]`, if it was kept.
    pub to_new: Vec<Option<Vertex>>,
}

impl Induced {
    pub fn lift(&self, local: &VertexSet) -> VertexSet {
        local.iter().map(|i| self.to_old[i]).collect()
    }

    /// Restricts an original-id set to the kept vertices, in local ids.
    pub fn project(&self, original: &VertexSet) -> VertexSet {
        original
            .iter()
            .filter_map(|v| self.to_new.get(v).copied().flatten())
            .collect()
    }
}
