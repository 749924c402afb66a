use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Vertex};

use super::{edge_unchecked, TerminatedDigraph};

/// Histories of the vertices of `G ⊙ G`, indexed by product id.
///
/// Ids list the terminals `[t]` ascending first, then the pairs `[n, v]`
/// for nonterminal `n` and any `v`, ordered by `n` then `v`.
pub fn odot_histories(td: &TerminatedDigraph) -> Vec<Vec<Vertex>> {
    let mut out: Vec<Vec<Vertex>> = td.terminals.iter().map(|t| vec![t]).collect();
    for n in td.nonterminals().iter() {
        out.extend(td.g.vertices().map(|v| vec![n, v]));
    }
    out
}

/// `G ⊙ G`: every nonterminal replaced by a copy of the generator, edges
/// inherited at the first differing position, terminals `T ∪ (N × T)`.
/// Ids follow [`odot_histories`].
pub fn odot(td: &TerminatedDigraph, caps: &Caps) -> Result<TerminatedDigraph> {
    let t = td.terminals.len();
    let size = td
        .nonterminals()
        .len()
        .checked_mul(td.n())
        .and_then(|x| x.checked_add(t))
        .unwrap_or(usize::MAX);
    if size > caps.materialize_vertices {
        return Err(Error::CapExceeded {
            what: "product vertices",
            requested: size,
            cap: caps.materialize_vertices,
        });
    }
    let hist = odot_histories(td);
    let mut edges = Vec::new();
    for (i, x) in hist.iter().enumerate() {
        for (j, y) in hist.iter().enumerate() {
            if i != j && edge_unchecked(&td.g, x, y) {
                edges.push((i, j));
            }
        }
    }
    let terminals = hist
        .iter()
        .enumerate()
        .filter(|(_, h)| td.is_terminal(*h.last().expect("nonempty")))
        .map(|(i, _)| i)
        .collect();
    TerminatedDigraph::new(Digraph::new(size, edges)?, terminals)
}
