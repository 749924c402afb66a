use crate::graph::{Digraph, Direction, Hops, VertexSet};
use crate::oracle::{Failure, VerifyReport};

/// Disjoint independent sets `A`, `B` with `Out²(A) ∪ In²(B) = V`.
///
/// `F₀` is a greedy maximal independent set, `F₁` one inside
/// `V ∖ In¹(F₀)`; then `A = F₀ ∩ In¹(F₁)` and `B = F₁ ∪ (F₀ ∖ A)`.
pub fn ab_cover(g: &Digraph) -> (VertexSet, VertexSet) {
    let f0 = g.greedy_max_independent(&VertexSet::new());
    let into_f0 = g.closure(&f0, Hops::Steps(1), Direction::In).expect("in range");
    let f1 = g.greedy_max_independent(&into_f0);
    let into_f1 = g.closure(&f1, Hops::Steps(1), Direction::In).expect("in range");
    let a = f0.intersection(&into_f1);
    let b = f1.union(&f0.difference(&a));
    (a, b)
}

/// Checks disjointness, independence of both sets and the cover, with
/// closures taken in the whole graph.
pub fn verify_ab_cover(g: &Digraph, a: &VertexSet, b: &VertexSet) -> VerifyReport {
    let mut failures = Vec::new();
    for s in [a, b] {
        failures.extend(s.iter().filter(|&v| v >= g.n()).map(Failure::OutOfRange));
    }
    if !failures.is_empty() {
        return VerifyReport::from_failures(failures);
    }
    failures.extend(a.intersection(b).iter().map(Failure::InBothParts));
    for s in [a, b] {
        for u in s.iter() {
            for &v in g.out_neighbors(u) {
                if s.contains(v) {
                    failures.push(Failure::Dependent(u, v));
                }
            }
        }
    }
    let covered = g
        .closure(a, Hops::Steps(2), Direction::Out)
        .expect("in range")
        .union(&g.closure(b, Hops::Steps(2), Direction::In).expect("in range"));
    failures.extend(g.vertices().filter(|&v| !covered.contains(v)).map(Failure::Uncovered));
    VerifyReport::from_failures(failures)
}
