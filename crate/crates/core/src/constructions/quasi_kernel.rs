use crate::graph::{Digraph, VertexSet};

/// An independent set from which every vertex is reachable in at most two
/// steps.
///
/// Repeatedly takes the highest remaining vertex `v` and deletes its closed
/// out-neighborhood; unwinding the picks in reverse, `v` joins the answer
/// unless an already chosen vertex has an edge into it. Runs in
/// `O(|V| + |E|)` without recursion.
pub fn quasi_kernel(g: &Digraph) -> VertexSet {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut picks = Vec::new();
    for v in (0..n).rev() {
        if !alive[v] {
            continue;
        }
        picks.push(v);
        alive[v] = false;
        for &w in g.out_neighbors(v) {
            alive[w] = false;
        }
    }
    let mut chosen = vec![false; n];
    for &v in picks.iter().rev() {
        if !g.in_neighbors(v).iter().any(|&a| chosen[a]) {
            chosen[v] = true;
        }
    }
    VertexSet::from_mask(&chosen)
}

/// The dual: every vertex reaches the returned independent set in at most two
/// steps.
pub fn quasi_sink(g: &Digraph) -> VertexSet {
    quasi_kernel(&g.reverse())
}
