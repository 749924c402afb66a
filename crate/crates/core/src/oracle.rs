//! Class membership claims, their verifier, and the slow exhaustive oracle
//! that decides membership on small graphs.
//!
//! A graph is in OUT(n) when some independent set reaches every vertex by a
//! path of length at most n, in IN(n) when every vertex reaches such a set,
//! and in INOUT(m,k) when its vertices split into a part that is IN(m) and a
//! part that is OUT(k), each judged inside its own induced subgraph.

use std::fmt;
use std::str::FromStr;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Direction, Hops, Vertex, VertexSet};

/// OUT(n), IN(n) or INOUT(m,k). The INOUT parameters are ordered as
/// (in-side hops, out-side hops).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Out(Hops),
    In(Hops),
    InOut { in_hops: Hops, out_hops: Hops },
}

impl ClassKind {
    pub fn out(n: usize) -> Self {
        ClassKind::Out(Hops::Steps(n))
    }

    pub fn in_(n: usize) -> Self {
        ClassKind::In(Hops::Steps(n))
    }

    pub fn inout(m: usize, k: usize) -> Self {
        ClassKind::InOut {
            in_hops: Hops::Steps(m),
            out_hops: Hops::Steps(k),
        }
    }

    /// Parameters must be positive.
    pub fn validate(self) -> Result<Self> {
        let hops: &[Hops] = match &self {
            ClassKind::Out(h) | ClassKind::In(h) => std::slice::from_ref(h),
            ClassKind::InOut { in_hops, out_hops } => &[*in_hops, *out_hops],
        };
        if hops.contains(&Hops::Steps(0)) {
            return Err(Error::Precondition(format!("class {self} needs positive parameters")));
        }
        Ok(self)
    }

    /// The same class for the reversed graph.
    pub fn reversed(self) -> Self {
        match self {
            ClassKind::Out(h) => ClassKind::In(h),
            ClassKind::In(h) => ClassKind::Out(h),
            ClassKind::InOut { in_hops, out_hops } => ClassKind::InOut {
                in_hops: out_hops,
                out_hops: in_hops,
            },
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassKind::Out(h) => write!(f, "OUT({h})"),
            ClassKind::In(h) => write!(f, "IN({h})"),
            ClassKind::InOut { in_hops, out_hops } => write!(f, "INOUT({in_hops},{out_hops})"),
        }
    }
}

/// Accepts `out2`, `in3`, `outinf`, `inout22`, `inout(1,2)` and the
/// displayed forms such as `OUT(2)` or `INOUT(2,inf)`.
impl FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("unknown class `{s}`"));
        let lower = s.trim().to_ascii_lowercase();
        let hops = |t: &str| -> Result<Hops> {
            match t.trim() {
                "inf" | "infinity" => Ok(Hops::Unbounded),
                t => t.parse::<usize>().map(Hops::Steps).map_err(|_| bad()),
            }
        };
        let strip_parens = |t: &str| -> String { t.trim().trim_start_matches('(').trim_end_matches(')').to_string() };
        let kind = if let Some(rest) = lower.strip_prefix("inout") {
            let rest = strip_parens(rest);
            let (m, k) = if let Some((m, k)) = rest.split_once(',') {
                (hops(m)?, hops(k)?)
            } else if rest.len() == 2 && rest.chars().all(|c| c.is_ascii_digit()) {
                (hops(&rest[..1])?, hops(&rest[1..])?)
            } else {
                return Err(bad());
            };
            ClassKind::InOut {
                in_hops: m,
                out_hops: k,
            }
        } else if let Some(rest) = lower.strip_prefix("out") {
            ClassKind::Out(hops(&strip_parens(rest))?)
        } else if let Some(rest) = lower.strip_prefix("in") {
            ClassKind::In(hops(&strip_parens(rest))?)
        } else {
            return Err(bad());
        };
        kind.validate()
    }
}

/// A claimed class membership together with its witnesses.
///
/// For OUT/IN kinds only `witness_a` is used. For INOUT, `partition` is
/// `(out part, in part)`, `witness_a` lives in the out part and
/// `witness_b` in the in part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassClaim {
    pub kind: ClassKind,
    pub witness_a: VertexSet,
    pub witness_b: Option<VertexSet>,
    pub partition: Option<(VertexSet, VertexSet)>,
}

impl ClassClaim {
    pub fn out(hops: impl Into<Hops>, witness: VertexSet) -> Self {
        ClassClaim {
            kind: ClassKind::Out(hops.into()),
            witness_a: witness,
            witness_b: None,
            partition: None,
        }
    }

    pub fn in_(hops: impl Into<Hops>, witness: VertexSet) -> Self {
        ClassClaim {
            kind: ClassKind::In(hops.into()),
            witness_a: witness,
            witness_b: None,
            partition: None,
        }
    }

    pub fn inout(
        in_hops: impl Into<Hops>,
        out_hops: impl Into<Hops>,
        out_part: VertexSet,
        out_witness: VertexSet,
        in_part: VertexSet,
        in_witness: VertexSet,
    ) -> Self {
        ClassClaim {
            kind: ClassKind::InOut {
                in_hops: in_hops.into(),
                out_hops: out_hops.into(),
            },
            witness_a: out_witness,
            witness_b: Some(in_witness),
            partition: Some((out_part, in_part)),
        }
    }

    /// Re-expresses the claim as an INOUT claim with the given parameters.
    /// OUT claims become `(V, ∅)` partitions and IN claims `(∅, V)`.
    /// Whether the result still verifies is up to the caller; widening the
    /// hop counts never breaks a valid claim.
    pub fn as_inout(&self, n: usize, in_hops: Hops, out_hops: Hops) -> ClassClaim {
        let all = VertexSet::full(n);
        let none = VertexSet::new;
        let (out_part, a, in_part, b) = match self.kind {
            ClassKind::Out(_) => (all, self.witness_a.clone(), none(), none()),
            ClassKind::In(_) => (none(), none(), all, self.witness_a.clone()),
            ClassKind::InOut { .. } => {
                let (o, i) = self.partition.clone().unwrap_or_default();
                (o, self.witness_a.clone(), i, self.witness_b.clone().unwrap_or_default())
            }
        };
        ClassClaim::inout(in_hops, out_hops, out_part, a, in_part, b)
    }

    /// Re-labels a claim made on an induced subgraph back to original ids.
    pub fn lift(&self, to_old: &[Vertex]) -> ClassClaim {
        let map = |s: &VertexSet| s.iter().map(|i| to_old[i]).collect::<VertexSet>();
        ClassClaim {
            kind: self.kind,
            witness_a: map(&self.witness_a),
            witness_b: self.witness_b.as_ref().map(map),
            partition: self.partition.as_ref().map(|(o, i)| (map(o), map(i))),
        }
    }
}

impl fmt::Display for ClassClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.partition, &self.witness_b) {
            (Some((o, i)), Some(b)) => write!(
                f,
                "{} out-part {} out-witness {} in-part {} in-witness {}",
                self.kind, o, self.witness_a, i, b
            ),
            _ => write!(f, "{} witness {}", self.kind, self.witness_a),
        }
    }
}

/// One reason a claim does not verify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure<V = Vertex> {
    /// Not reached within the claimed number of steps (inside its part).
    Uncovered(V),
    /// An edge joins two witness members.
    Dependent(V, V),
    InBothParts(V),
    InNoPart(V),
    WitnessOutsidePart(V),
    OutOfRange(V),
    Malformed(String),
}

impl<V: fmt::Display> fmt::Display for Failure<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Uncovered(v) => write!(f, "{v}: uncovered"),
            Failure::Dependent(u, v) => write!(f, "{u}: witness edge to {v}"),
            Failure::InBothParts(v) => write!(f, "{v}: in both parts"),
            Failure::InNoPart(v) => write!(f, "{v}: in no part"),
            Failure::WitnessOutsidePart(v) => write!(f, "{v}: witness outside its part"),
            Failure::OutOfRange(v) => write!(f, "{v}: out of range"),
            Failure::Malformed(m) => write!(f, "malformed claim: {m}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport<V = Vertex> {
    pub ok: bool,
    pub failures: Vec<Failure<V>>,
}

impl<V> VerifyReport<V> {
    pub fn from_failures(failures: Vec<Failure<V>>) -> Self {
        VerifyReport {
            ok: failures.is_empty(),
            failures,
        }
    }
}

/// Checks a claim against `g`. Malformed claims are reported as failures,
/// never as errors.
pub fn verify_claim(g: &Digraph, c: &ClassClaim) -> VerifyReport {
    let mut failures = Vec::new();
    let n = g.n();
    let in_range = |s: &VertexSet, failures: &mut Vec<Failure>| {
        for v in s.iter().filter(|&v| v >= n) {
            failures.push(Failure::OutOfRange(v));
        }
    };
    in_range(&c.witness_a, &mut failures);
    if let Some(b) = &c.witness_b {
        in_range(b, &mut failures);
    }
    if let Some((o, i)) = &c.partition {
        in_range(o, &mut failures);
        in_range(i, &mut failures);
    }
    if !failures.is_empty() {
        return VerifyReport::from_failures(failures);
    }

    match c.kind {
        ClassKind::Out(h) | ClassKind::In(h) => {
            if c.witness_b.is_some() || c.partition.is_some() {
                failures.push(Failure::Malformed(format!(
                    "{} claims carry a single witness and no partition",
                    c.kind
                )));
                return VerifyReport::from_failures(failures);
            }
            let dir = if matches!(c.kind, ClassKind::Out(_)) {
                Direction::Out
            } else {
                Direction::In
            };
            let all = VertexSet::full(n);
            check_side(g, &all, &c.witness_a, h, dir, &mut failures);
        }
        ClassKind::InOut { in_hops, out_hops } => {
            let (Some((out_part, in_part)), Some(b)) = (&c.partition, &c.witness_b) else {
                failures.push(Failure::Malformed(
                    "INOUT claims need a partition and both witnesses".into(),
                ));
                return VerifyReport::from_failures(failures);
            };
            for v in g.vertices() {
                match (out_part.contains(v), in_part.contains(v)) {
                    (true, true) => failures.push(Failure::InBothParts(v)),
                    (false, false) => failures.push(Failure::InNoPart(v)),
                    _ => {}
                }
            }
            for v in c.witness_a.difference(out_part).iter() {
                failures.push(Failure::WitnessOutsidePart(v));
            }
            for v in b.difference(in_part).iter() {
                failures.push(Failure::WitnessOutsidePart(v));
            }
            check_side(g, out_part, &c.witness_a, out_hops, Direction::Out, &mut failures);
            check_side(g, in_part, b, in_hops, Direction::In, &mut failures);
        }
    }
    VerifyReport::from_failures(failures)
}

/// Independence of `witness` and coverage of `part` inside `G[part]`.
fn check_side(
    g: &Digraph,
    part: &VertexSet,
    witness: &VertexSet,
    hops: Hops,
    dir: Direction,
    failures: &mut Vec<Failure>,
) {
    for u in witness.iter() {
        for &v in g.out_neighbors(u) {
            if witness.contains(v) {
                failures.push(Failure::Dependent(u, v));
            }
        }
    }
    let allowed = part.to_mask(g.n());
    let reached = g.reach_mask(witness.iter(), hops, dir, Some(&allowed));
    for v in part.iter().filter(|&v| !reached[v]) {
        failures.push(Failure::Uncovered(v));
    }
}

/// Largest graph the bitmask oracle can represent at all.
const MASK_LIMIT: usize = 63;

/// Exhaustively decides whether `g` is in class `kind`.
///
/// OUT/IN: independent sets are tried by size, then lexicographically, and
/// the first covering one is returned, so witnesses have minimum size.
/// INOUT: in-parts are tried by size, then lexicographically (the empty
/// in-part first), and each side is decided as above.
pub fn decide_class(g: &Digraph, kind: ClassKind, caps: &Caps) -> Result<Option<ClassClaim>> {
    let kind = kind.validate()?;
    let cap = match kind {
        ClassKind::InOut { .. } => caps.oracle_inout_vertices,
        _ => caps.oracle_vertices,
    }
    .min(MASK_LIMIT);
    if g.n() > cap {
        return Err(Error::CapExceeded {
            what: "oracle vertex count",
            requested: g.n(),
            cap,
        });
    }
    let m = Masks::new(g);
    let full = m.full();
    let claim = match kind {
        ClassKind::Out(h) => m
            .find_witness(full, h, Direction::Out)
            .map(|w| ClassClaim::out(h, to_set(w))),
        ClassKind::In(h) => m
            .find_witness(full, h, Direction::In)
            .map(|w| ClassClaim::in_(h, to_set(w))),
        ClassKind::InOut { in_hops, out_hops } => {
            let mut found = None;
            'sizes: for size in 0..=g.n() {
                for in_part in subsets_of_size(g.n(), size) {
                    let out_part = full & !in_part;
                    let Some(a) = m.find_witness(out_part, out_hops, Direction::Out) else {
                        continue;
                    };
                    let Some(b) = m.find_witness(in_part, in_hops, Direction::In) else {
                        continue;
                    };
                    found = Some(ClassClaim::inout(
                        in_hops,
                        out_hops,
                        to_set(out_part),
                        to_set(a),
                        to_set(in_part),
                        to_set(b),
                    ));
                    break 'sizes;
                }
            }
            found
        }
    };
    Ok(claim)
}

/// Every loopless digraph on `n ≤ 4` vertices, indexed by edge bitmask over
/// the ordered pairs `(u, v)`, `u ≠ v`, in ascending order, with its verdict.
pub fn decide_all_small(n: usize, kind: ClassKind) -> Result<impl Iterator<Item = (Digraph, Option<ClassClaim>)>> {
    const MAX_N: usize = 4;
    if n > MAX_N {
        return Err(Error::CapExceeded {
            what: "exhaustive enumeration vertex count",
            requested: n,
            cap: MAX_N,
        });
    }
    let kind = kind.validate()?;
    let caps = Caps::default();
    Ok(all_digraphs(n).map(move |g| {
        let verdict = decide_class(&g, kind, &caps).expect("n <= 4 is within every cap");
        (g, verdict)
    }))
}

/// All loopless digraphs on `n` vertices, in edge-bitmask order.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Digraph::new(n, edges).expect("enumerated pairs are valid")
    })
}

fn to_set(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Subsets of `0..n` with `size` members, in lexicographic order of their
/// sorted member lists.
fn subsets_of_size(n: usize, size: usize) -> Vec<u64> {
    fn go(start: usize, n: usize, left: usize, acc: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for v in start..n {
            if n - v < left {
                break;
            }
            go(v + 1, n, left - 1, acc | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    go(0, n, size, 0, &mut out);
    out
}

/// Adjacency as bitmasks, for graphs on at most 63 vertices.
struct Masks {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Masks {
    fn new(g: &Digraph) -> Self {
        let mut out = vec![0u64; g.n()];
        let mut inn = vec![0u64; g.n()];
        for (u, v) in g.edges() {
            out[u] |= 1 << v;
            inn[v] |= 1 << u;
        }
        Masks { n: g.n(), out, inn }
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn closure(&self, src: u64, hops: Hops, dir: Direction, allowed: u64) -> u64 {
        let nbr = match dir {
            Direction::Out => &self.out,
            Direction::In => &self.inn,
        };
        let mut cur = src & allowed;
        let mut steps = 0;
        while hops.allows(steps + 1) {
            let mut next = cur;
            let mut rest = cur;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= nbr[v];
            }
            next &= allowed;
            if next == cur {
                break;
            }
            cur = next;
            steps += 1;
        }
        cur
    }

    /// First independent subset of `part` (by size, then lexicographic)
    /// whose closure inside `part` is all of `part`.
    fn find_witness(&self, part: u64, hops: Hops, dir: Direction) -> Option<u64> {
        if part == 0 {
            return Some(0);
        }
        let verts: Vec<usize> = (0..self.n).filter(|&v| part >> v & 1 == 1).collect();
        (1..=verts.len()).find_map(|size| self.search(&verts, 0, size, 0, part, hops, dir))
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        &self,
        verts: &[usize],
        start: usize,
        left: usize,
        chosen: u64,
        part: u64,
        hops: Hops,
        dir: Direction,
    ) -> Option<u64> {
        if left == 0 {
            return (self.closure(chosen, hops, dir, part) == part).then_some(chosen);
        }
        for i in start..verts.len() {
            if verts.len() - i < left {
                break;
            }
            let v = verts[i];
            if (self.out[v] | self.inn[v]) & chosen != 0 {
                continue;
            }
            if let Some(w) = self.search(verts, i + 1, left - 1, chosen | 1 << v, part, hops, dir) {
                return Some(w);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use proptest::prelude::*;

    #[test]
    fn verify_examples() {
        assert!(verify_claim(&c3(), &ClassClaim::out(2, set([0]))).ok);

        let r = verify_claim(&p3(), &ClassClaim::out(1, set([0])));
        assert!(!r.ok);
        assert_eq!(r.failures, vec![Failure::Uncovered(2)]);

        let c = ClassClaim::inout(1, 1, set([0, 1, 2]), set([0]), set([]), set([]));
        assert!(verify_claim(&tt3(), &c).ok);
    }

    #[test]
    fn verify_reports_dependence_and_partition_defects() {
        let r = verify_claim(&p3(), &ClassClaim::out(2, set([0, 1])));
        assert_eq!(r.failures, vec![Failure::Dependent(0, 1)]);

        let overlap = ClassClaim::inout(1, 1, set([0, 1]), set([0]), set([1, 2]), set([2]));
        let r = verify_claim(&p3(), &overlap);
        assert!(r.failures.contains(&Failure::InBothParts(1)));

        let gap = ClassClaim::inout(1, 1, set([0]), set([0]), set([2]), set([2]));
        assert!(verify_claim(&p3(), &gap).failures.contains(&Failure::InNoPart(1)));

        let outside = ClassClaim::inout(1, 1, set([0, 1]), set([2]), set([2]), set([2]));
        let r = verify_claim(&p3(), &outside);
        assert!(r.failures.contains(&Failure::WitnessOutsidePart(2)));

        let r = verify_claim(&p3(), &ClassClaim::out(2, set([5])));
        assert_eq!(r.failures, vec![Failure::OutOfRange(5)]);

        let mut bad = ClassClaim::out(2, set([0]));
        bad.witness_b = Some(set([]));
        assert!(matches!(verify_claim(&p3(), &bad).failures[0], Failure::Malformed(_)));
    }

    #[test]
    fn inout_paths_stay_inside_their_part() {
        // 0 -> 1 -> 2: with 1 on the in-side, 0 cannot reach 2 through it.
        let c = ClassClaim::inout(1, 2, set([0, 2]), set([0]), set([1]), set([1]));
        let r = verify_claim(&p3(), &c);
        assert_eq!(r.failures, vec![Failure::Uncovered(2)]);
        // the same witness without the partition covers 2 through 1
        assert!(verify_claim(&p3(), &ClassClaim::out(2, set([0]))).ok);
    }

    #[test]
    fn decide_examples() {
        let caps = Caps::default();
        assert_eq!(decide_class(&c3(), ClassKind::out(1), &caps).unwrap(), None);
        assert_eq!(
            decide_class(&c3(), ClassKind::out(2), &caps).unwrap(),
            Some(ClassClaim::out(2, set([0])))
        );
        // exhaustive enumeration in canonical order finds {0} first
        assert_eq!(
            decide_class(&p3(), ClassKind::out(2), &caps).unwrap(),
            Some(ClassClaim::out(2, set([0])))
        );
        assert_eq!(
            decide_class(&p3(), ClassKind::in_(2), &caps).unwrap(),
            Some(ClassClaim::in_(2, set([2])))
        );
        let inout = decide_class(&tt3(), ClassKind::inout(1, 1), &caps).unwrap().unwrap();
        assert_eq!(
            inout,
            ClassClaim::inout(1, 1, set([0, 1, 2]), set([0]), set([]), set([]))
        );
        // C3 is not OUT(1), so the INOUT search must move something to the in side
        let inout = decide_class(&c3(), ClassKind::inout(1, 1), &caps).unwrap().unwrap();
        assert_eq!(inout.partition.as_ref().unwrap().1, set([0]));
        assert!(verify_claim(&c3(), &inout).ok);
    }

    #[test]
    fn decide_refuses_over_cap() {
        let g = Digraph::edgeless(15);
        let err = decide_class(&g, ClassKind::out(2), &Caps::default()).unwrap_err();
        assert!(err.is_cap_refusal());
        let g = Digraph::edgeless(11);
        assert!(decide_class(&g, ClassKind::inout(2, 2), &Caps::default()).is_err());
        let roomy = Caps::default().with_max_vertices(15);
        assert!(decide_class(&Digraph::edgeless(15), ClassKind::out(2), &roomy).is_ok());
    }

    #[test]
    fn decide_rejects_zero_parameters() {
        assert!(decide_class(&p3(), ClassKind::out(0), &Caps::default()).is_err());
    }

    #[test]
    fn class_kind_parsing() {
        assert_eq!("out2".parse::<ClassKind>().unwrap(), ClassKind::out(2));
        assert_eq!("IN(3)".parse::<ClassKind>().unwrap(), ClassKind::in_(3));
        assert_eq!("outinf".parse::<ClassKind>().unwrap(), ClassKind::Out(Hops::Unbounded));
        assert_eq!("inout22".parse::<ClassKind>().unwrap(), ClassKind::inout(2, 2));
        assert_eq!("INOUT(1,2)".parse::<ClassKind>().unwrap(), ClassKind::inout(1, 2));
        assert_eq!(ClassKind::inout(1, 2).to_string(), "INOUT(1,2)");
        assert!("out0".parse::<ClassKind>().is_err());
        assert!("sideways".parse::<ClassKind>().is_err());
    }

    #[test]
    fn small_enumeration() {
        let one: Vec<_> = decide_all_small(1, ClassKind::out(2)).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].1, Some(ClassClaim::out(2, set([0]))));

        let two: Vec<_> = decide_all_small(2, ClassKind::out(2)).unwrap().collect();
        assert_eq!(two.len(), 4);
        assert!(two.iter().all(|(_, v)| v.is_some()));

        let absent = decide_all_small(3, ClassKind::out(1))
            .unwrap()
            .filter(|(_, v)| v.is_none())
            .map(|(g, _)| g)
            .collect::<Vec<_>>();
        assert!(absent.contains(&c3()));

        assert!(decide_all_small(5, ClassKind::out(2)).is_err());
    }

    proptest! {
        #[test]
        fn decided_claims_verify(g in arb_digraph(7)) {
            let caps = Caps::default();
            for kind in [ClassKind::out(1), ClassKind::out(2), ClassKind::in_(2), ClassKind::inout(1, 1)] {
                if let Some(c) = decide_class(&g, kind, &caps).unwrap() {
                    prop_assert!(verify_claim(&g, &c).ok, "{} on {:?}", c, g);
                }
            }
        }

        #[test]
        fn in_is_out_of_reverse(g in arb_digraph(7), n in 1usize..4) {
            let caps = Caps::default();
            let a = decide_class(&g, ClassKind::in_(n), &caps).unwrap();
            let b = decide_class(&g.reverse(), ClassKind::out(n), &caps).unwrap();
            prop_assert_eq!(a.is_some(), b.is_some());
        }

        #[test]
        fn out_classes_are_monotone(g in arb_digraph(7), n in 1usize..4) {
            let caps = Caps::default();
            if let Some(c) = decide_class(&g, ClassKind::out(n), &caps).unwrap() {
                let wider = ClassClaim::out(n + 1, c.witness_a.clone());
                prop_assert!(verify_claim(&g, &wider).ok);
                prop_assert!(decide_class(&g, ClassKind::out(n + 1), &caps).unwrap().is_some());
            }
        }
    }
}
