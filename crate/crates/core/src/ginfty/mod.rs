//! The digraph `G^∞` generated by a terminated digraph: its vertices are
//! the sequences `N*⌢T` and `x → y` iff the pair at the first position where
//! they differ is an edge of the generator.

mod materialize;
mod odot;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Vertex, VertexSet};

pub use materialize::{materialize, Materialization};
pub use odot::{odot, odot_histories};

/// A digraph together with a nonempty set of terminal vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminatedDigraph {
    pub g: Digraph,
    pub terminals: VertexSet,
}

impl TerminatedDigraph {
    pub fn new(g: Digraph, terminals: VertexSet) -> Result<Self> {
        if terminals.is_empty() {
            return Err(Error::NoTerminals);
        }
        g.check_set(&terminals)?;
        Ok(TerminatedDigraph { g, terminals })
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn is_terminal(&self, v: Vertex) -> bool {
        self.terminals.contains(v)
    }

    pub fn nonterminals(&self) -> VertexSet {
        self.g.vertices().filter(|&v| !self.is_terminal(v)).collect()
    }

    /// Least terminal.
    pub fn t0(&self) -> Vertex {
        self.terminals.first().expect("terminals are nonempty")
    }

    /// Checks that `s` lies in `N*⌢T`.
    pub fn check_seq(&self, s: &SeqVertex) -> Result<()> {
        let bad = |reason: String| Error::InvalidSequence {
            seq: s.to_string(),
            reason,
        };
        let Some((&last, init)) = s.0.split_last() else {
            return Err(bad("empty".into()));
        };
        if let Some(&v) = s.0.iter().find(|&&v| v >= self.n()) {
            return Err(bad(format!("{v} is not a vertex of the generator")));
        }
        if let Some(&v) = init.iter().find(|&&v| self.is_terminal(v)) {
            return Err(bad(format!("terminal {v} before the last position")));
        }
        if !self.is_terminal(last) {
            return Err(bad(format!("ends in nonterminal {last}")));
        }
        Ok(())
    }
}

/// A vertex of `G^∞`, written dotted: `3.1.0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeqVertex(pub Vec<Vertex>);

impl SeqVertex {
    pub fn new(ids: impl Into<Vec<Vertex>>) -> Self {
        SeqVertex(ids.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of nonterminal entries.
    pub fn depth(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn last(&self) -> Vertex {
        *self.0.last().expect("sequence vertices are nonempty")
    }

    /// `self` with `tail` appended after its nonterminal prefix, i.e. the
    /// last entry replaced by `tail`.
    pub fn splice(&self, tail: &[Vertex]) -> SeqVertex {
        let mut ids = self.0[..self.depth()].to_vec();
        ids.extend_from_slice(tail);
        SeqVertex(ids)
    }

    /// `v` prepended.
    pub fn prepend(&self, v: Vertex) -> SeqVertex {
        let mut ids = Vec::with_capacity(self.0.len() + 1);
        ids.push(v);
        ids.extend_from_slice(&self.0);
        SeqVertex(ids)
    }
}

impl fmt::Display for SeqVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for SeqVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::InvalidSequence {
            seq: s.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Err(bad("empty"));
        }
        s.split('.')
            .map(|part| {
                part.trim()
                    .parse::<Vertex>()
                    .map_err(|_| bad("expected dot-separated vertex ids"))
            })
            .collect::<Result<Vec<_>>>()
            .map(SeqVertex)
    }
}

impl<const N: usize> From<[Vertex; N]> for SeqVertex {
    fn from(ids: [Vertex; N]) -> Self {
        SeqVertex(ids.to_vec())
    }
}

/// First position where `x` and `y` differ. Undefined for equal sequences
/// and when one is a proper prefix of the other (which never happens for
/// two valid vertices of `G^∞`).
pub fn delta(x: &SeqVertex, y: &SeqVertex) -> Result<usize> {
    match x.0.iter().zip(&y.0).position(|(a, b)| a != b) {
        Some(i) => Ok(i),
        None if x == y => Err(Error::EqualSequences(x.to_string())),
        None => Err(Error::Precondition(format!("{x} and {y} are prefix-related"))),
    }
}

/// `x → y` in `G^∞`.
pub fn lazy_edge(td: &TerminatedDigraph, x: &SeqVertex, y: &SeqVertex) -> Result<bool> {
    td.check_seq(x)?;
    td.check_seq(y)?;
    let i = delta(x, y)?;
    Ok(td.g.has_edge(x.0[i], y.0[i]))
}

/// Edge test for sequences already known to be valid and distinct.
pub(crate) fn edge_unchecked(g: &Digraph, x: &[Vertex], y: &[Vertex]) -> bool {
    match x.iter().zip(y).position(|(a, b)| a != b) {
        Some(i) => g.has_edge(x[i], y[i]),
        None => false,
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&seq("1.0"), &seq("0")).unwrap(), 0);
        assert_eq!(delta(&seq("1.2.0"), &seq("1.0")).unwrap(), 1);
        assert!(matches!(delta(&seq("1.0"), &seq("1.0")), Err(Error::EqualSequences(_))));
        assert!(delta(&seq("1"), &seq("1.0")).is_err());
    }

    #[test]
    fn lazy_edge_examples() {
        let td = pt4();
        assert!(lazy_edge(&td, &seq("0"), &seq("1.0")).unwrap());
        assert!(!lazy_edge(&td, &seq("1.0"), &seq("0")).unwrap());
        // Δ = 1 compares 0 with 2, and (0, 2) is not an edge
        assert!(!lazy_edge(&td, &seq("1.0"), &seq("1.2.0")).unwrap());
        assert!(lazy_edge(&td, &seq("1.2.0"), &seq("1.0")).unwrap());
    }

    #[test]
    fn invalid_sequences() {
        let td = pt4();
        for bad in ["1", "0.0", "0.1.0", "4.0", "1.2"] {
            assert!(
                matches!(td.check_seq(&seq(bad)), Err(Error::InvalidSequence { .. })),
                "{bad}"
            );
        }
        assert!(lazy_edge(&td, &seq("1"), &seq("0")).is_err());
        assert!("".parse::<SeqVertex>().is_err());
        assert!("1..0".parse::<SeqVertex>().is_err());
        assert!("a.0".parse::<SeqVertex>().is_err());
    }

    #[test]
    fn text_round_trip() {
        let s = seq("3.1.0");
        assert_eq!(s, SeqVertex::from([3, 1, 0]));
        assert_eq!(s.to_string(), "3.1.0");
        assert_eq!(s.depth(), 2);
        assert_eq!(s.splice(&[2, 0]), seq("3.1.2.0"));
        assert_eq!(s.prepend(2), seq("2.3.1.0"));
    }

    #[test]
    fn no_terminals_rejected() {
        assert_eq!(
            TerminatedDigraph::new(Digraph::edgeless(2), VertexSet::new()).unwrap_err(),
            Error::NoTerminals
        );
        assert!(TerminatedDigraph::new(Digraph::edgeless(2), VertexSet::singleton(2)).is_err());
    }

    proptest! {
        #[test]
        fn delta_is_symmetric((_td, x, y) in arb_terminated(5).prop_flat_map(|td| {
            let sx = arb_seq(&td, 3);
            let sy = arb_seq(&td, 3);
            (Just(td), sx, sy)
        })) {
            prop_assume!(x != y);
            prop_assert_eq!(delta(&x, &y).unwrap(), delta(&y, &x).unwrap());
            prop_assert!(delta(&x, &y).unwrap() < x.len().min(y.len()));
        }

        #[test]
        fn tournament_generators_give_tournaments((td, x, y) in arb_terminated(5)
            .prop_map(|td| {
                // orient every pair by id parity so the generator is a tournament
                let n = td.n();
                let edges: Vec<_> = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| if (i + j) % 2 == 0 { (i, j) } else { (j, i) }))
                    .collect();
                TerminatedDigraph::new(Digraph::new(n, edges).unwrap(), td.terminals).unwrap()
            })
            .prop_flat_map(|td| {
                let sx = arb_seq(&td, 3);
                let sy = arb_seq(&td, 3);
                (Just(td), sx, sy)
            })) {
            prop_assume!(x != y);
            let xy = lazy_edge(&td, &x, &y).unwrap();
            let yx = lazy_edge(&td, &y, &x).unwrap();
            prop_assert!(xy != yx);
        }
    }
}
