use std::collections::BTreeSet;

use super::{Vertex, VertexSet};
use crate::error::{Error, Result};

/// A simple undirected graph; pairs are stored as `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    pairs: BTreeSet<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl UndirectedGraph {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (x, y) in pairs {
            for w in [x, y] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if x == y {
                return Err(Error::Loop(x));
            }
            set.insert((x.min(y), x.max(y)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(x, y) in &set {
            adj[x].push(y);
            adj[y].push(x);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(UndirectedGraph { n, pairs: set, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn has_edge(&self, x: Vertex, y: Vertex) -> bool {
        self.pairs.contains(&(x.min(y), x.max(y)))
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Searches for a clique on exactly `size` vertices and returns the
    /// lexicographically least one. Refuses graphs with more than `cap`
    /// vertices; the search is exhaustive backtracking.
    pub fn clique_of_size(&self, size: usize, cap: usize) -> Result<Option<VertexSet>> {
        if self.n > cap {
            return Err(Error::CapExceeded {
                what: "clique search vertex count",
                requested: self.n,
                cap,
            });
        }
        if size == 0 {
            return Ok(Some(VertexSet::new()));
        }
        let mut chosen = Vec::with_capacity(size);
        let candidates: Vec<Vertex> = (0..self.n).collect();
        Ok(self
            .extend_clique(&mut chosen, &candidates, size)
            .then(|| chosen.into_iter().collect()))
    }

    fn extend_clique(&self, chosen: &mut Vec<Vertex>, candidates: &[Vertex], size: usize) -> bool {
        if chosen.len() == size {
            return true;
        }
        for (i, &v) in candidates.iter().enumerate() {
            // bound: not enough candidates left to finish
            if chosen.len() + (candidates.len() - i) < size {
                return false;
            }
            let rest: Vec<Vertex> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| self.has_edge(v, w))
                .collect();
            chosen.push(v);
            if self.extend_clique(chosen, &rest, size) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}
