//! Witness constructions for `G^∞` read off the generator.

use crate::constructions::quasi_kernel;
use crate::error::{Error, Result};
use crate::ginfty::{Materialization, SeqVertex, TerminatedDigraph};
use crate::graph::{Digraph, Direction, Hops, Vertex, VertexSet};

use super::claim::LazyClaim;
use super::lazyset::{Block, LazySet};

fn out1(g: &Digraph, a: &VertexSet, dir: Direction) -> VertexSet {
    g.closure(a, Hops::Steps(1), dir).expect("in range")
}

/// Whether every nonterminal has an in-neighbor; otherwise the least
/// nonterminal without one.
pub fn check_cond_iii(td: &TerminatedDigraph) -> (bool, Option<Vertex>) {
    let bad = td.nonterminals().iter().find(|&v| td.g.in_neighbors(v).is_empty());
    (bad.is_none(), bad)
}

/// `v` itself for a terminal, `v⌢t₀` for a nonterminal.
fn ext(td: &TerminatedDigraph, v: Vertex) -> Vec<Vertex> {
    if td.is_terminal(v) {
        vec![v]
    } else {
        vec![v, td.t0()]
    }
}

/// OUT(3) witness when every nonterminal has an in-neighbor: `{a′ : a ∈ A}`
/// for the quasi-kernel `A` of the generator, with `a′ = a` for terminals
/// and `a′ = a⌢t₀` otherwise.
pub fn out3_witness(td: &TerminatedDigraph) -> Result<LazyClaim> {
    if let (false, Some(v)) = check_cond_iii(td) {
        return Err(Error::Precondition(format!(
            "nonterminal {v} has no in-neighbor, so G^inf is not OUT(inf); use the level map of {v}"
        )));
    }
    let k = quasi_kernel(&td.g).iter().map(|a| SeqVertex(ext(td, a))).collect();
    Ok(LazyClaim::out(3, LazySet::Finite(k)))
}

/// `φ(s) = min{n : s(n) ≠ v}` for a nonterminal `v` without in-neighbors.
/// Every edge `x → y` of `G^∞` has `φ(x) ≥ φ(y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TInfHom {
    pub v: Vertex,
}

impl TInfHom {
    pub fn level(&self, s: &SeqVertex) -> usize {
        s.0.iter().position(|&c| c != self.v).unwrap_or(s.len())
    }

    /// First edge of the materialization breaking `φ(x) ≥ φ(y)`.
    pub fn violation(&self, m: &Materialization) -> Option<(SeqVertex, SeqVertex)> {
        m.digraph
            .edges()
            .find(|&(x, y)| self.level(m.label(x)) < self.level(m.label(y)))
            .map(|(x, y)| (m.label(x).clone(), m.label(y).clone()))
    }
}

pub fn tinf_hom(td: &TerminatedDigraph, v: Vertex) -> Result<TInfHom> {
    td.g.check_vertex(v)?;
    if td.is_terminal(v) {
        return Err(Error::Precondition(format!("{v} is a terminal")));
    }
    if let Some(&u) = td.g.in_neighbors(v).first() {
        return Err(Error::Precondition(format!("{v} has the in-neighbor {u}")));
    }
    Ok(TInfHom { v })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Out2Decision {
    /// `[v]` reaches all of `G^∞` in two steps.
    Yes(SeqVertex),
    No,
}

/// For a tournament generator `G^∞` is OUT(2) exactly when some terminal
/// reaches the whole generator in two steps.
pub fn out2_decision_tournament(td: &TerminatedDigraph) -> Result<Out2Decision> {
    td.g.require_tournament()?;
    let full = |t: Vertex| out2_of(&td.g, t).len() == td.n();
    Ok(match td.terminals.iter().find(|&t| full(t)) {
        Some(t) => Out2Decision::Yes(SeqVertex::new([t])),
        None => Out2Decision::No,
    })
}

fn out2_of(g: &Digraph, t: Vertex) -> VertexSet {
    g.closure(&VertexSet::singleton(t), Hops::Steps(2), Direction::Out)
        .expect("in range")
}

/// A vertex of `G^∞` not within two steps of `s = r⌢t`: `r⌢ext(w)` for the
/// least `w` outside `Out²(t)` in the generator.
pub fn out2_refuter(td: &TerminatedDigraph, s: &SeqVertex) -> Result<SeqVertex> {
    td.g.require_tournament()?;
    td.check_seq(s)?;
    let t = s.last();
    let reach = out2_of(&td.g, t);
    let w =
        td.g.vertices()
            .find(|&w| !reach.contains(w))
            .ok_or(Error::WitnessExists(t))?;
    Ok(s.splice(&ext(td, w)))
}

/// `A` independent with `Out²(A) = V` and a terminal in `A`, built around a
/// terminal `t` that no nonterminal points to.
fn terminal_anchored_kernel(g: &Digraph, t: Vertex) -> VertexSet {
    let hit = out1(g, &VertexSet::singleton(t), Direction::Out);
    let rest = VertexSet::full(g.n()).difference(&hit);
    let sub = g.induced(&rest).expect("in range");
    let mut a = sub.lift(&quasi_kernel(&sub.graph));
    if !a.iter().any(|u| g.adjacent(u, t)) {
        a.insert(t);
    }
    a
}

/// `(A ∩ N)* ⌢ (A ∩ T)`.
fn anchored_pattern(td: &TerminatedDigraph, a: &VertexSet) -> LazySet {
    let n = td.nonterminals();
    LazySet::Pattern(vec![
        Block::Star(a.intersection(&n)),
        Block::One(a.intersection(&td.terminals)),
    ])
}

/// OUT(2) or IN(2) witness when the nonterminals are independent.
pub fn n_independent_witness(td: &TerminatedDigraph) -> Result<LazyClaim> {
    let g = &td.g;
    let n = td.nonterminals();
    if let Some((u, v)) = g.edges().find(|&(u, v)| n.contains(u) && n.contains(v)) {
        return Err(Error::Precondition(format!(
            "nonterminals are not independent: edge ({u}, {v})"
        )));
    }
    let t0 = td.t0();
    let from_n = out1(g, &n, Direction::Out);
    let into_n = out1(g, &n, Direction::In);

    if let Some(t) = td.terminals.iter().find(|&t| !from_n.contains(t)) {
        let a = terminal_anchored_kernel(g, t);
        return Ok(LazyClaim::out(2, anchored_pattern(td, &a)));
    }
    if let Some(t) = td.terminals.iter().find(|&t| !into_n.contains(t)) {
        let a = terminal_anchored_kernel(&g.reverse(), t);
        return Ok(LazyClaim::in_(2, anchored_pattern(td, &a)));
    }

    let from_t = out1(g, &td.terminals, Direction::Out);
    let into_t = out1(g, &td.terminals, Direction::In);
    let one_n = || LazySet::Pattern(vec![Block::One(n.clone()), Block::One(VertexSet::singleton(t0))]);
    if n.is_subset(&into_t) {
        return Ok(LazyClaim::in_(2, one_n()));
    }
    if n.is_subset(&from_t) {
        return Ok(LazyClaim::out(2, one_n()));
    }

    let a = n.difference(&from_t);
    Ok(LazyClaim::out(
        2,
        LazySet::Pattern(vec![
            Block::Star(a.clone()),
            Block::One(n.difference(&a)),
            Block::One(VertexSet::singleton(t0)),
        ]),
    ))
}

/// The sets of the INOUT(2,2) construction around a nonterminal edge
/// `x → y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inout22Construction {
    pub x: Vertex,
    pub y: Vertex,
    pub t0: Vertex,
    /// Closed in- and out-neighborhood of `{x, y}`.
    pub a: VertexSet,
    /// Quasi-kernel of `G[V ∖ A]`.
    pub b: VertexSet,
    pub k0: LazySet,
    pub k1: LazySet,
    pub k: LazySet,
    pub l: LazySet,
    pub v0: LazySet,
    pub r: LazySet,
    pub s: LazySet,
    pub r_prime: LazySet,
    pub s_prime: LazySet,
}

impl Inout22Construction {
    /// `None` when no edge joins two nonterminals.
    pub fn new(td: &TerminatedDigraph) -> Option<Self> {
        let g = &td.g;
        let n = td.nonterminals();
        let (x, y) = g.edges().find(|&(u, v)| n.contains(u) && n.contains(v))?;
        let xy = VertexSet::from([x, y]);
        let a = out1(g, &xy, Direction::In).union(&out1(g, &xy, Direction::Out));
        let rest = VertexSet::full(g.n()).difference(&a);
        let sub = g.induced(&rest).expect("in range");
        let b = sub.lift(&quasi_kernel(&sub.graph));
        let t0 = td.t0();

        let bn = || Block::Star(b.intersection(&n));
        let lit = |v: Vertex| Block::One(VertexSet::singleton(v));
        let k0 = LazySet::Pattern(vec![bn(), lit(x), lit(t0)]);
        let k1 = LazySet::Pattern(vec![bn(), Block::One(b.intersection(&td.terminals))]);
        let k = LazySet::union([k0.clone(), k1.clone()]);
        let l = LazySet::Pattern(vec![bn(), lit(y), lit(t0)]);
        let v0 = LazySet::Pattern(vec![bn(), Block::One(a.clone()), Block::Any]);
        let r = LazySet::union([k0.clone(), LazySet::Pattern(vec![bn(), lit(y), lit(x), lit(t0)])]);
        let s = LazySet::union([l.clone(), LazySet::Pattern(vec![bn(), lit(x), lit(y), lit(t0)])]);
        let r_prime = LazySet::minus(LazySet::out1(v0.clone(), r.clone()), s.clone());
        let s_prime = LazySet::minus(v0.clone(), r_prime.clone());
        Some(Inout22Construction {
            x,
            y,
            t0,
            a,
            b,
            k0,
            k1,
            k,
            l,
            v0,
            r,
            s,
            r_prime,
            s_prime,
        })
    }

    /// Out part `V^∞ ∖ S′` with witness `K`, in part `S′` with witness `L`.
    pub fn claim(&self) -> LazyClaim {
        LazyClaim::inout(
            2,
            2,
            LazySet::minus(LazySet::everything(), self.s_prime.clone()),
            self.k.clone(),
            self.s_prime.clone(),
            self.l.clone(),
        )
    }

    /// Whether `s ∈ R′`; `s` must lie in `V₀`.
    pub fn r_prime_membership(&self, td: &TerminatedDigraph, s: &SeqVertex) -> Result<bool> {
        td.check_seq(s)?;
        if !self.v0.compile(td)?.contains(s) {
            return Err(Error::Precondition(format!("{s} is not in V0")));
        }
        Ok(self.r_prime.compile(td)?.contains(s))
    }
}

/// INOUT(2,2) witness for every terminated digraph.
pub fn inout22_witness(td: &TerminatedDigraph) -> Result<LazyClaim> {
    match Inout22Construction::new(td) {
        Some(c) => Ok(c.claim()),
        None => Ok(n_independent_witness(td)?.as_inout(Hops::Steps(2), Hops::Steps(2))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::ginfty::fixtures::*;
    use crate::ginfty::materialize;
    use crate::oracle::ClassKind;
    use crate::witness::verify_truncated;
    use proptest::prelude::*;

    /// Terminal 0, nonterminal 1, single edge 1 → 0.
    fn nd2() -> TerminatedDigraph {
        TerminatedDigraph::new(Digraph::new(2, [(1, 0)]).unwrap(), VertexSet::singleton(0)).unwrap()
    }

    fn assert_verifies(td: &TerminatedDigraph, c: &LazyClaim, depth: usize) {
        let r = verify_truncated(td, c, depth, 2, &Caps::default()).unwrap();
        assert!(r.ok, "{c}{:?}", r.failures);
    }

    #[test]
    fn cond_iii_examples() {
        assert_eq!(check_cond_iii(&pt4()), (true, None));
        assert_eq!(check_cond_iii(&nd2()), (false, Some(1)));
        let all_t = TerminatedDigraph::new(Digraph::edgeless(2), VertexSet::full(2)).unwrap();
        assert_eq!(check_cond_iii(&all_t), (true, None));
    }

    #[test]
    fn out3_examples() {
        let td = pt4();
        let c = out3_witness(&td).unwrap();
        assert_eq!(c.out_witness, Some(LazySet::Finite(vec![seq("2.0")])));
        assert_verifies(&td, &c, 4);

        let single = TerminatedDigraph::new(Digraph::edgeless(1), VertexSet::singleton(0)).unwrap();
        let c = out3_witness(&single).unwrap();
        assert_eq!(c.out_witness, Some(LazySet::Finite(vec![seq("0")])));
        assert_verifies(&single, &c, 3);

        assert!(matches!(out3_witness(&nd2()), Err(Error::Precondition(_))));
    }

    #[test]
    fn tinf_examples() {
        let td = nd2();
        let phi = tinf_hom(&td, 1).unwrap();
        assert_eq!(phi.level(&seq("0")), 0);
        assert_eq!(phi.level(&seq("1.0")), 1);
        assert_eq!(phi.level(&seq("1.1.0")), 2);
        let m = materialize(&td, 3, &Caps::default()).unwrap();
        assert_eq!(m.len(), 4);
        assert_eq!(phi.violation(&m), None);
        assert!(tinf_hom(&td, 0).is_err());
        assert!(tinf_hom(&pt4(), 1).is_err());
    }

    #[test]
    fn out2_examples() {
        assert_eq!(out2_decision_tournament(&pt4()).unwrap(), Out2Decision::No);
        let tt3 = TerminatedDigraph::new(
            Digraph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap(),
            VertexSet::singleton(0),
        )
        .unwrap();
        assert_eq!(out2_decision_tournament(&tt3).unwrap(), Out2Decision::Yes(seq("0")));
        assert_eq!(out2_decision_tournament(&nd2()).unwrap(), Out2Decision::No);
        let e2 = TerminatedDigraph::new(Digraph::edgeless(2), VertexSet::singleton(0)).unwrap();
        assert!(matches!(out2_decision_tournament(&e2), Err(Error::NotTournament(..))));
    }

    #[test]
    fn all_terminal_tournaments_say_yes() {
        for n in 1..=4usize {
            let pairs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            for bits in 0u32..1 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .map(|(b, &(i, j))| if bits >> b & 1 == 1 { (j, i) } else { (i, j) })
                    .collect();
                let td = TerminatedDigraph::new(Digraph::new(n, edges).unwrap(), VertexSet::full(n)).unwrap();
                assert!(matches!(out2_decision_tournament(&td).unwrap(), Out2Decision::Yes(_)));
            }
        }
    }

    #[test]
    fn refuter_examples() {
        let td = pt4();
        assert_eq!(out2_refuter(&td, &seq("0")).unwrap(), seq("3.0"));
        assert_eq!(out2_refuter(&td, &seq("1.0")).unwrap(), seq("1.3.0"));
        assert_eq!(out2_refuter(&td, &seq("3.2.0")).unwrap(), seq("3.2.3.0"));
        let m = materialize(&td, 3, &Caps::default()).unwrap();
        let s = m.id_of(&seq("0")).unwrap();
        let reach = m
            .digraph
            .closure(&VertexSet::singleton(s), Hops::Steps(2), Direction::Out)
            .unwrap();
        assert!(!reach.contains(m.id_of(&seq("3.0")).unwrap()));
    }

    #[test]
    fn n_independent_examples() {
        // 0 is hit by 1 but does not point into N: the in-side lemma
        let td = nd2();
        let c = n_independent_witness(&td).unwrap();
        assert_eq!(c.kind, ClassKind::in_(2));
        assert_verifies(&td, &c, 3);

        let two_cycle =
            TerminatedDigraph::new(Digraph::new(2, [(0, 1), (1, 0)]).unwrap(), VertexSet::singleton(0)).unwrap();
        let c = n_independent_witness(&two_cycle).unwrap();
        assert_eq!(c, LazyClaim::in_(2, "{1} . 0".parse().unwrap()));
        assert_eq!(c.in_witness.as_ref().unwrap().to_string(), "1 . 0");
        assert_verifies(&two_cycle, &c, 3);

        assert!(n_independent_witness(&pt4()).is_err());
    }

    #[test]
    fn inout22_on_pt4() {
        let td = pt4();
        let c = Inout22Construction::new(&td).unwrap();
        assert_eq!((c.x, c.y), (1, 2));
        assert_eq!(c.a, VertexSet::full(4));
        assert_eq!(c.b, VertexSet::new());
        // with B empty, V0 is everything and K0 = {1.0}
        assert_eq!(c.k0.to_string(), "()* . 1 . 0");
        let s_prime = c.s_prime.compile(&td).unwrap();
        assert!(!s_prime.contains(&seq("0")));
        assert!(s_prime.contains(&seq("2.0")));
        assert_verifies(&td, &c.claim(), 3);
    }

    #[test]
    fn r_prime_matches_bfs() {
        let td = pt4();
        let c = Inout22Construction::new(&td).unwrap();
        let m = materialize(&td, 4, &Caps::default()).unwrap();
        let v0 = c.v0.compile(&td).unwrap();
        let r = c.r.compile(&td).unwrap();
        let s = c.s.compile(&td).unwrap();
        let in_v0: Vec<bool> = m.labels.iter().map(|l| v0.contains(l)).collect();
        let seeds = (0..m.len()).filter(|&i| in_v0[i] && r.contains(m.label(i)));
        let reached = m
            .digraph
            .reach_mask(seeds, Hops::Steps(1), Direction::Out, Some(&in_v0));
        for (i, label) in m.labels.iter().enumerate().filter(|(i, l)| in_v0[*i] && l.depth() <= 2) {
            let want = reached[i] && !s.contains(label);
            assert_eq!(c.r_prime_membership(&td, label).unwrap(), want, "{label}");
        }
        assert!(c.r_prime_membership(&td, &c.k0_member()).unwrap());
    }

    impl Inout22Construction {
        fn k0_member(&self) -> SeqVertex {
            SeqVertex::new([self.x, self.t0])
        }
    }

    #[test]
    fn r_prime_rejects_outside_v0() {
        // 0 -> 1 -> 2 -> 3 with terminal 0: A = {0,1,2,3} minus nothing; make
        // a generator where V0 is a proper subset.
        let g = Digraph::new(5, [(1, 2), (3, 0), (4, 3)]).unwrap();
        let td = TerminatedDigraph::new(g, VertexSet::singleton(0)).unwrap();
        let c = Inout22Construction::new(&td).unwrap();
        assert_eq!((c.x, c.y), (1, 2));
        assert!(!c.a.contains(0));
        assert!(matches!(
            c.r_prime_membership(&td, &seq("0")),
            Err(Error::Precondition(_))
        ));
        assert_verifies(&td, &c.claim(), 3);
    }

    #[test]
    fn inout22_delegates_without_nonterminal_edges() {
        let td = nd2();
        let c = inout22_witness(&td).unwrap();
        assert_eq!(c.kind, ClassKind::inout(2, 2));
        assert_verifies(&td, &c, 3);
    }

    proptest! {
        #[test]
        fn every_claim_verifies(td in arb_terminated(5)) {
            let caps = Caps::default();
            let check = |c: &LazyClaim| -> std::result::Result<(), TestCaseError> {
                let r = verify_truncated(&td, c, 3, 2, &caps).unwrap();
                prop_assert!(r.ok, "{:?}\n{}{:?}", td, c, r.failures);
                Ok(())
            };
            check(&inout22_witness(&td).unwrap())?;
            match check_cond_iii(&td) {
                (true, _) => check(&out3_witness(&td).unwrap())?,
                (false, Some(v)) => {
                    let m = materialize(&td, 3, &caps).unwrap();
                    prop_assert_eq!(tinf_hom(&td, v).unwrap().violation(&m), None);
                }
                (false, None) => unreachable!(),
            }
            if let Ok(c) = n_independent_witness(&td) {
                check(&c)?;
            }
        }

        #[test]
        fn refuter_exclusivity(td in arb_terminated(5).prop_map(|td| {
            let n = td.n();
            let edges: Vec<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| if (i * 7 + j * 3) % 5 < 2 { (i, j) } else { (j, i) }))
                .collect();
            TerminatedDigraph::new(Digraph::new(n, edges).unwrap(), td.terminals).unwrap()
        }), pick in 0usize..1000) {
            let m = materialize(&td, 3, &Caps::default()).unwrap();
            let shallow: Vec<_> = (0..m.len()).filter(|&i| m.label(i).depth() <= 1).collect();
            let s = m.label(shallow[pick % shallow.len()]).clone();
            match out2_decision_tournament(&td).unwrap() {
                Out2Decision::Yes(w) => {
                    let id = m.id_of(&w).unwrap();
                    let reach = m.digraph.closure(&VertexSet::singleton(id), Hops::Steps(2), Direction::Out).unwrap();
                    prop_assert_eq!(reach.len(), m.len());
                    prop_assert!(matches!(out2_refuter(&td, &w), Err(Error::WitnessExists(_))));
                }
                Out2Decision::No => {
                    let y = out2_refuter(&td, &s).unwrap();
                    let id = m.id_of(&s).unwrap();
                    let reach = m.digraph.closure(&VertexSet::singleton(id), Hops::Steps(2), Direction::Out).unwrap();
                    prop_assert!(!reach.contains(m.id_of(&y).unwrap()));
                }
            }
        }
    }
}
