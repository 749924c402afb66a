//! Complete deterministic automata over the generator's vertex ids. Every
//! automaton built here accepts only valid sequences `N*⌢T`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::ginfty::TerminatedDigraph;
use crate::graph::Vertex;

use super::lazyset::Block;

#[derive(Debug, Clone)]
pub(crate) struct Dfa {
    /// `trans[q][c]`; state 0 is the start.
    trans: Vec<Vec<usize>>,
    accept: Vec<bool>,
}

impl Dfa {
    pub fn accepts(&self, word: &[Vertex]) -> bool {
        let mut q = 0;
        for &c in word {
            match self.trans[q].get(c) {
                Some(&next) => q = next,
                None => return false,
            }
        }
        self.accept[q]
    }

    pub fn states(&self) -> usize {
        self.trans.len()
    }

    fn step(&self, q: usize, c: Vertex) -> usize {
        self.trans[q][c]
    }

    /// States from which some accepting state is reachable.
    fn coreachable(&self) -> Vec<bool> {
        let mut rev = vec![Vec::new(); self.states()];
        for (q, row) in self.trans.iter().enumerate() {
            for &p in row {
                rev[p].push(q);
            }
        }
        let mut live = self.accept.clone();
        let mut queue: VecDeque<usize> = (0..self.states()).filter(|&q| live[q]).collect();
        while let Some(p) = queue.pop_front() {
            for &q in &rev[p] {
                if !live[q] {
                    live[q] = true;
                    queue.push_back(q);
                }
            }
        }
        live
    }

    pub fn is_empty(&self) -> bool {
        !self.coreachable()[0]
    }

    /// Sequences that are in `N*⌢T`.
    pub fn valid(td: &TerminatedDigraph) -> Dfa {
        let n = td.n();
        let row = |f: &dyn Fn(Vertex) -> usize| (0..n).map(f).collect::<Vec<_>>();
        Dfa {
            trans: vec![
                row(&|c| if td.is_terminal(c) { 1 } else { 0 }),
                row(&|_| 2),
                row(&|_| 2),
            ],
            accept: vec![false, true, false],
        }
    }

    pub fn empty(n: usize) -> Dfa {
        Dfa {
            trans: vec![vec![0; n]],
            accept: vec![false],
        }
    }

    /// Builds the reachable part of an automaton whose states are values of
    /// type `S`, starting from `start`.
    fn explore<S, F, A>(n: usize, start: S, next: F, accept: A) -> Dfa
    where
        S: Clone + Eq + std::hash::Hash,
        F: FnMut(&S, Vertex) -> S,
        A: Fn(&S) -> bool,
    {
        Dfa::explore_states(n, start, next, accept).0
    }

    /// [`Dfa::explore`], also returning the state values by id.
    fn explore_states<S, F, A>(n: usize, start: S, mut next: F, accept: A) -> (Dfa, Vec<S>)
    where
        S: Clone + Eq + std::hash::Hash,
        F: FnMut(&S, Vertex) -> S,
        A: Fn(&S) -> bool,
    {
        let mut ids: HashMap<S, usize> = HashMap::new();
        let mut states = vec![start.clone()];
        ids.insert(start, 0);
        let mut trans = Vec::new();
        let mut i = 0;
        while i < states.len() {
            let s = states[i].clone();
            let mut row = Vec::with_capacity(n);
            for c in 0..n {
                let t = next(&s, c);
                let id = *ids.entry(t.clone()).or_insert_with(|| {
                    states.push(t);
                    states.len() - 1
                });
                row.push(id);
            }
            trans.push(row);
            i += 1;
        }
        let accept = states.iter().map(accept).collect();
        (Dfa { trans, accept }, states)
    }

    pub fn product(a: &Dfa, b: &Dfa, n: usize, op: impl Fn(bool, bool) -> bool) -> Dfa {
        Dfa::explore(
            n,
            (0usize, 0usize),
            |&(p, q), c| (a.step(p, c), b.step(q, c)),
            |&(p, q)| op(a.accept[p], b.accept[q]),
        )
    }

    /// Finite set of words, restricted to valid sequences.
    pub fn finite(words: &[Vec<Vertex>], valid: &Dfa, n: usize) -> Dfa {
        // trie nodes; usize::MAX is the dead node
        let mut children: Vec<HashMap<Vertex, usize>> = vec![HashMap::new()];
        let mut end = vec![false];
        for w in words {
            let mut node = 0;
            for &c in w {
                node = match children[node].get(&c) {
                    Some(&x) => x,
                    None => {
                        children.push(HashMap::new());
                        end.push(false);
                        let id = children.len() - 1;
                        children[node].insert(c, id);
                        id
                    }
                };
            }
            end[node] = true;
        }
        let trie = Dfa::explore(
            n,
            0usize,
            |&q, c| {
                if q == usize::MAX {
                    usize::MAX
                } else {
                    children[q].get(&c).copied().unwrap_or(usize::MAX)
                }
            },
            |&q| q != usize::MAX && end[q],
        );
        Dfa::product(&trie, valid, n, |x, y| x && y)
    }

    /// Pattern of blocks, restricted to valid sequences.
    pub fn pattern(blocks: &[Block], valid: &Dfa, n: usize) -> Dfa {
        let len = blocks.len();
        let close = |set: &mut BTreeSet<usize>| {
            let mut stack: Vec<usize> = set.iter().copied().collect();
            while let Some(i) = stack.pop() {
                if i < len && !matches!(blocks[i], Block::One(_)) && set.insert(i + 1) {
                    stack.push(i + 1);
                }
            }
        };
        let mut start = BTreeSet::from([0]);
        close(&mut start);
        let nfa = Dfa::explore(
            n,
            start,
            |set, c| {
                let mut out = BTreeSet::new();
                for &i in set {
                    if i == len {
                        continue;
                    }
                    match &blocks[i] {
                        Block::Star(s) if s.contains(c) => {
                            out.insert(i);
                        }
                        Block::One(s) if s.contains(c) => {
                            out.insert(i + 1);
                        }
                        Block::Any => {
                            out.insert(i);
                        }
                        _ => {}
                    }
                }
                close(&mut out);
                out
            },
            |set| set.contains(&len),
        );
        Dfa::product(&nfa, valid, n, |x, y| x && y)
    }

    /// Vertices of `region` that are seeds or have an in-edge from a seed,
    /// both inside `region`: `Out¹_{G[region]}(seeds)` in `G^∞`.
    ///
    /// A seed `r` with `r → s` agrees with `s` before `Δ = d` and has an edge
    /// `(r(d), s(d))`; whether some seed in the region continues from
    /// `s↾d⌢r(d)` is a property of the automaton state after `s↾d`, so one
    /// flag on top of the region × seeds product is enough.
    pub fn out_step(region: &Dfa, seeds: &Dfa, td: &TerminatedDigraph) -> Dfa {
        let n = td.n();
        let (both, pairs) = Dfa::explore_states(
            n,
            (0usize, 0usize),
            |&(p, q), c| (region.step(p, c), seeds.step(q, c)),
            |&(p, q)| region.accept[p] && seeds.accept[q],
        );
        let index: HashMap<(usize, usize), usize> = pairs.iter().copied().enumerate().map(|(i, p)| (p, i)).collect();
        let live_both = both.coreachable();
        let preds: Vec<&[Vertex]> = (0..n).map(|c| td.g.in_neighbors(c)).collect();
        Dfa::explore(
            n,
            (0usize, 0usize, false),
            |&(p, q, flag), c| {
                let hit = flag
                    || preds[c].iter().any(|&u| {
                        let pair = (region.step(p, u), seeds.step(q, u));
                        live_both[index[&pair]]
                    });
                (region.step(p, c), seeds.step(q, c), hit)
            },
            |&(p, q, flag)| region.accept[p] && (flag || seeds.accept[q]),
        )
    }
}
