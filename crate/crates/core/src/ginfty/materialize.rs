use std::collections::HashMap;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Vertex};

use super::{SeqVertex, TerminatedDigraph};

/// The finite part of `G^∞` on sequences with at most `depth` nonterminals.
/// Ids follow length-lexicographic order of the labels.
#[derive(Debug, Clone)]
pub struct Materialization {
    pub depth: usize,
    pub digraph: Digraph,
    pub labels: Vec<SeqVertex>,
    index: HashMap<SeqVertex, Vertex>,
}

impl Materialization {
    pub fn id_of(&self, s: &SeqVertex) -> Option<Vertex> {
        self.index.get(s).copied()
    }

    pub fn label(&self, id: Vertex) -> &SeqVertex {
        &self.labels[id]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// `sizes[r]`: sequences below a node that may still use `r` nonterminals.
fn subtree_sizes(t: u128, n: u128, depth: usize) -> Vec<u128> {
    let mut sizes = vec![t];
    for r in 1..=depth {
        let prev = sizes[r - 1];
        sizes.push(n.saturating_mul(prev).saturating_add(t));
    }
    sizes
}

pub fn materialize(td: &TerminatedDigraph, depth: usize, caps: &Caps) -> Result<Materialization> {
    let t = td.terminals.len() as u128;
    let nts = td.nonterminals().len() as u128;
    let sizes = subtree_sizes(t, nts, depth);
    let total = sizes[depth];
    let clamp = |x: u128| usize::try_from(x).unwrap_or(usize::MAX);
    if total > caps.materialize_vertices as u128 {
        return Err(Error::CapExceeded {
            what: "materialized vertices",
            requested: clamp(total),
            cap: caps.materialize_vertices,
        });
    }

    // a child `v` of a node with `r` nonterminals left spans this many leaves
    let child = |v: Vertex, r: usize| -> u128 {
        if td.is_terminal(v) {
            1
        } else if r > 0 {
            sizes[r - 1]
        } else {
            0
        }
    };
    let mut projected: u128 = 0;
    let mut nodes: u128 = 1;
    for r in (0..=depth).rev() {
        let per_node: u128 = td.g.edges().map(|(a, b)| child(a, r) * child(b, r)).sum();
        projected = projected.saturating_add(nodes.saturating_mul(per_node));
        nodes = nodes.saturating_mul(nts);
    }
    if projected > caps.materialize_edges as u128 {
        return Err(Error::CapExceeded {
            what: "materialized edges",
            requested: clamp(projected),
            cap: caps.materialize_edges,
        });
    }

    // Lay the sequences out in plain lexicographic order first: there every
    // subtree is a contiguous range, so each generator edge (a, b) under a
    // common prefix contributes range(a) × range(b).
    let total = total as usize;
    let mut lex_labels: Vec<Vec<Vertex>> = vec![Vec::new(); total];
    let mut lex_edges: Vec<(usize, usize)> = Vec::with_capacity(projected as usize);
    let mut stack: Vec<(usize, Vec<Vertex>, usize)> = vec![(0, Vec::new(), depth)];
    let mut ranges = vec![(0usize, 0usize); td.n()];
    while let Some((offset, prefix, r)) = stack.pop() {
        let mut at = offset;
        for v in td.g.vertices() {
            let len = child(v, r) as usize;
            ranges[v] = (at, at + len);
            if len == 0 {
                continue;
            }
            let mut p = prefix.clone();
            p.push(v);
            if td.is_terminal(v) {
                lex_labels[at] = p;
            } else {
                stack.push((at, p, r - 1));
            }
            at += len;
        }
        for (a, b) in td.g.edges() {
            let (ra, rb) = (ranges[a], ranges[b]);
            for i in ra.0..ra.1 {
                lex_edges.extend((rb.0..rb.1).map(|j| (i, j)));
            }
        }
    }

    // stable sort by length turns lexicographic into length-lexicographic
    let mut order: Vec<usize> = (0..total).collect();
    order.sort_by_key(|&i| lex_labels[i].len());
    let mut new_id = vec![0; total];
    for (id, &old) in order.iter().enumerate() {
        new_id[old] = id;
    }
    let labels: Vec<SeqVertex> = order
        .iter()
        .map(|&old| SeqVertex(std::mem::take(&mut lex_labels[old])))
        .collect();
    let digraph = Digraph::new(total, lex_edges.into_iter().map(|(i, j)| (new_id[i], new_id[j])))?;
    let index = labels.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    Ok(Materialization {
        depth,
        digraph,
        labels,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ginfty::fixtures::*;
    use crate::ginfty::lazy_edge;
    use crate::graph::VertexSet;
    use proptest::prelude::*;

    #[test]
    fn pt4_small_depths() {
        let td = pt4();
        let m0 = materialize(&td, 0, &Caps::default()).unwrap();
        assert_eq!(m0.labels, vec![seq("0")]);
        assert_eq!(m0.digraph.edge_count(), 0);

        let m1 = materialize(&td, 1, &Caps::default()).unwrap();
        assert_eq!(m1.labels, vec![seq("0"), seq("1.0"), seq("2.0"), seq("3.0")]);
        let edges: Vec<_> = m1.digraph.edges().collect();
        assert_eq!(edges, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 0), (3, 1)]);
    }

    #[test]
    fn pt4_counts() {
        let td = pt4();
        for (d, n) in [(2, 13), (4, 121), (6, 1093)] {
            assert_eq!(materialize(&td, d, &Caps::default()).unwrap().len(), n);
        }
    }

    #[test]
    fn caps_refuse_with_projected_counts() {
        let td = pt4();
        let err = materialize(&td, 6, &Caps::default().with_max_materialize(1000)).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                what: "materialized vertices",
                requested: 1093,
                cap: 1000
            }
        );
        let caps = Caps {
            materialize_edges: 10,
            ..Caps::default()
        };
        assert!(matches!(
            materialize(&td, 2, &caps),
            Err(Error::CapExceeded {
                what: "materialized edges",
                ..
            })
        ));
        assert!(materialize(&td, 200, &Caps::default()).unwrap_err().is_cap_refusal());
    }

    #[test]
    fn lookup() {
        let m = materialize(&pt4(), 2, &Caps::default()).unwrap();
        assert_eq!(m.id_of(&seq("0")), Some(0));
        assert_eq!(m.label(m.id_of(&seq("3.2.0")).unwrap()), &seq("3.2.0"));
        assert_eq!(m.id_of(&seq("3.2.1.0")), None);
    }

    fn deep_lone_nonterminal() -> TerminatedDigraph {
        TerminatedDigraph::new(Digraph::new(2, [(0, 1)]).unwrap(), VertexSet::singleton(1)).unwrap()
    }

    #[test]
    fn long_chains_do_not_recurse() {
        let m = materialize(&deep_lone_nonterminal(), 2000, &Caps::default()).unwrap();
        assert_eq!(m.len(), 2001);
    }

    proptest! {
        #[test]
        fn edges_match_the_lazy_rule(td in arb_terminated(4), d in 0usize..3) {
            let m = materialize(&td, d, &Caps::default()).unwrap();
            for (i, x) in m.labels.iter().enumerate() {
                prop_assert!(td.check_seq(x).is_ok());
                prop_assert!(x.depth() <= d);
                for (j, y) in m.labels.iter().enumerate() {
                    if i != j {
                        prop_assert!(!x.0.starts_with(&y.0));
                        prop_assert_eq!(m.digraph.has_edge(i, j), lazy_edge(&td, x, y).unwrap());
                    }
                }
            }
            let nts = td.nonterminals().len();
            let want: usize = (0..=d).map(|k| td.terminals.len() * nts.pow(k as u32)).sum();
            prop_assert_eq!(m.len(), want);
        }

        #[test]
        fn chain_property(td in arb_terminated(4), d in 0usize..4) {
            let small = materialize(&td, d, &Caps::default()).unwrap();
            let big = materialize(&td, d + 1, &Caps::default()).unwrap();
            // length-lex ids make the shallower labels a prefix of the deeper ones
            prop_assert_eq!(&big.labels[..small.len()], &small.labels[..]);
            let head: VertexSet = (0..small.len()).collect();
            prop_assert_eq!(big.digraph.induced(&head).unwrap().graph, small.digraph);
        }
    }
}
