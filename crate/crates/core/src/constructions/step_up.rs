use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Direction, Hops, Vertex, VertexSet};
use crate::oracle::{verify_claim, ClassClaim, ClassKind};

/// An ordered partition `(V_0, ..., V_k)` of the vertex set. `V_0` is the
/// class that must be hereditary in the stronger class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionSpec {
    pub classes: Vec<VertexSet>,
}

impl PartitionSpec {
    /// Checks that the classes are disjoint and cover `0..n`.
    pub fn new(n: usize, classes: Vec<VertexSet>) -> Result<Self> {
        let mut owner = vec![None; n];
        for (i, class) in classes.iter().enumerate() {
            for v in class.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if let Some(j) = owner[v] {
                    return Err(Error::Partition(format!("vertex {v} is in classes {j} and {i}")));
                }
                owner[v] = Some(i);
            }
        }
        if let Some(v) = owner.iter().position(Option::is_none) {
            return Err(Error::Partition(format!("vertex {v} is in no class")));
        }
        Ok(PartitionSpec { classes })
    }

    pub fn k(&self) -> usize {
        self.classes.len().saturating_sub(1)
    }
}

/// Produces a claim for an induced subgraph.
///
/// `sub` is `G[part]` relabelled to `0..|part|`; `original[i]` is the id in
/// the parent graph of local vertex `i`. The returned claim uses local ids.
/// A solver handed to a stepping-up combinator must succeed on every induced
/// subgraph of its class it is given.
pub trait SubSolver {
    fn name(&self) -> &str;
    fn solve(&self, sub: &Digraph, original: &[Vertex]) -> Result<ClassClaim>;
}

/// A [`SubSolver`] backed by a closure.
pub struct FnSolver<F> {
    name: String,
    f: F,
}

impl<F> FnSolver<F>
where
    F: Fn(&Digraph, &[Vertex]) -> Result<ClassClaim>,
{
    pub fn new(name: impl Into<String>, f: F) -> Self {
        FnSolver { name: name.into(), f }
    }
}

impl<F> SubSolver for FnSolver<F>
where
    F: Fn(&Digraph, &[Vertex]) -> Result<ClassClaim>,
{
    fn name(&self) -> &str {
        &self.name
    }

    fn solve(&self, sub: &Digraph, original: &[Vertex]) -> Result<ClassClaim> {
        (self.f)(sub, original)
    }
}

/// Runs solver `class` on `G[part]` and checks that its answer verifies as
/// `expected`. Returns the claim in parent ids.
fn solve_part(
    g: &Digraph,
    part: &VertexSet,
    solver: &dyn SubSolver,
    class: usize,
    expected: ClassKind,
) -> Result<ClassClaim> {
    let fail = |reason: String| Error::SubSolver {
        class,
        solver: solver.name().to_string(),
        reason,
    };
    let sub = g.induced(part)?;
    let claim = solver.solve(&sub.graph, &sub.to_old).map_err(|e| fail(e.to_string()))?;
    let claim = match (expected, claim.kind) {
        (ClassKind::Out(h), ClassKind::Out(_)) => ClassClaim::out(h, claim.witness_a),
        (ClassKind::InOut { in_hops, out_hops }, _) => claim.as_inout(sub.graph.n(), in_hops, out_hops),
        _ => return Err(fail(format!("returned {} where {expected} was needed", claim.kind))),
    };
    let report = verify_claim(&sub.graph, &claim);
    if !report.ok {
        let first = report.failures.first().map(|f| f.to_string()).unwrap_or_default();
        return Err(fail(format!("claim does not verify as {expected} ({first})")));
    }
    Ok(claim.lift(&sub.to_old))
}

fn check_arity(p: &PartitionSpec, solvers: &[&dyn SubSolver]) -> Result<()> {
    if p.classes.len() != solvers.len() {
        return Err(Error::Precondition(format!(
            "{} classes but {} solvers",
            p.classes.len(),
            solvers.len()
        )));
    }
    Ok(())
}

fn out1(g: &Digraph, a: &VertexSet, within: &VertexSet, dir: Direction) -> VertexSet {
    g.closure_within(a, Hops::Steps(1), dir, within)
        .expect("sets come from the same graph")
}

/// True if some member of `from` has an edge into `v` (`dir = Out`) or
/// `v` has an edge into some member of `from` (`dir = In`).
fn hit_by(g: &Digraph, from: &VertexSet, v: Vertex, dir: Direction) -> bool {
    g.neighbors(v, dir.flip()).iter().any(|&u| from.contains(u))
}

/// Stepping up OUT(n) to OUT(n+1).
///
/// `solvers[0]` must give OUT(n+1) claims on every induced subgraph of
/// `V_0`, the middle solvers OUT(n) claims on induced subgraphs of their
/// class, and `solvers[k]` an OUT(n) claim on `V_k` itself. The last class
/// is solved first, its closed out-neighborhood removed, and the procedure
/// continues on the remaining lower classes; the witnesses are combined on
/// the way back as `Ā = A ∪ (A_k ∖ Out¹(A))`.
pub fn step_up_out(g: &Digraph, p: &PartitionSpec, solvers: &[&dyn SubSolver], n: usize) -> Result<ClassClaim> {
    check_arity(p, solvers)?;
    if n == 0 {
        return Err(Error::Precondition("step_up_out needs n >= 1".into()));
    }
    let Some(k) = p.classes.len().checked_sub(1) else {
        return if g.n() == 0 {
            Ok(ClassClaim::out(n + 1, VertexSet::new()))
        } else {
            Err(Error::Partition("no classes for a nonempty graph".into()))
        };
    };
    PartitionSpec::new(g.n(), p.classes.clone())?;

    let mut cur = VertexSet::full(g.n());
    let mut levels: Vec<VertexSet> = Vec::with_capacity(k);
    for i in (1..=k).rev() {
        let part = p.classes[i].intersection(&cur);
        let a_i = if part.is_empty() {
            VertexSet::new()
        } else {
            solve_part(g, &part, solvers[i], i, ClassKind::out(n))?.witness_a
        };
        let removed = out1(g, &a_i, &cur, Direction::Out);
        let lower: VertexSet = p.classes[..i].iter().flat_map(|c| c.iter()).collect();
        cur = cur.difference(&removed).intersection(&lower);
        levels.push(a_i);
    }
    let part0 = p.classes[0].intersection(&cur);
    let mut acc = if part0.is_empty() {
        VertexSet::new()
    } else {
        solve_part(g, &part0, solvers[0], 0, ClassKind::out(n + 1))?.witness_a
    };
    for a_i in levels.iter().rev() {
        let extra: Vec<Vertex> = a_i.iter().filter(|&v| !hit_by(g, &acc, v, Direction::Out)).collect();
        acc.extend(extra);
    }
    Ok(ClassClaim::out(n + 1, acc))
}

struct InOutLevel {
    part: VertexSet,
    out_part: VertexSet,
    in_part: VertexSet,
    a: VertexSet,
    b: VertexSet,
    out_hit: VertexSet,
    in_hit: VertexSet,
}

/// Stepping up INOUT(m,l) to INOUT(m+1,l+1).
///
/// Same shape as [`step_up_out`]: `solvers[0]` is hereditary INOUT(m+1,l+1)
/// on `V_0`, the middle ones hereditary INOUT(m,l), the last one INOUT(m,l)
/// on `V_k`. With `(X_k, Y_k, A_k, B_k)` from the last class the procedure
/// removes `Out¹(A_k) ∪ In¹(B_k)`, recurses, and combines
///
/// ```text
/// X̄ = X_k ∪ X ∪ (Out¹(A_k) ∖ V_k)
/// Ȳ = Y_k ∪ Y ∪ (In¹(B_k) ∖ (V_k ∪ Out¹(A_k)))
/// Ā = A ∪ (A_k ∖ Out¹(A))
/// B̄ = B ∪ (B_k ∖ In¹(B))
/// ```
pub fn step_up_inout(
    g: &Digraph,
    p: &PartitionSpec,
    solvers: &[&dyn SubSolver],
    m: usize,
    l: usize,
) -> Result<ClassClaim> {
    check_arity(p, solvers)?;
    if m == 0 || l == 0 {
        return Err(Error::Precondition("step_up_inout needs m, l >= 1".into()));
    }
    let target = ClassKind::inout(m + 1, l + 1);
    let Some(k) = p.classes.len().checked_sub(1) else {
        return if g.n() == 0 {
            Ok(ClassClaim::inout(
                m + 1,
                l + 1,
                VertexSet::new(),
                VertexSet::new(),
                VertexSet::new(),
                VertexSet::new(),
            ))
        } else {
            Err(Error::Partition("no classes for a nonempty graph".into()))
        };
    };
    PartitionSpec::new(g.n(), p.classes.clone())?;

    let mut cur = VertexSet::full(g.n());
    let mut levels = Vec::with_capacity(k);
    for i in (1..=k).rev() {
        let part = p.classes[i].intersection(&cur);
        let claim = if part.is_empty() {
            ClassClaim::inout(
                m,
                l,
                VertexSet::new(),
                VertexSet::new(),
                VertexSet::new(),
                VertexSet::new(),
            )
        } else {
            solve_part(g, &part, solvers[i], i, ClassKind::inout(m, l))?
        };
        let (out_part, in_part) = claim.partition.expect("INOUT claims carry a partition");
        let a = claim.witness_a;
        let b = claim.witness_b.expect("INOUT claims carry both witnesses");
        let out_hit = out1(g, &a, &cur, Direction::Out);
        let in_hit = out1(g, &b, &cur, Direction::In);
        let lower: VertexSet = p.classes[..i].iter().flat_map(|c| c.iter()).collect();
        cur = cur.difference(&out_hit).difference(&in_hit).intersection(&lower);
        levels.push(InOutLevel {
            part,
            out_part,
            in_part,
            a,
            b,
            out_hit,
            in_hit,
        });
    }

    let part0 = p.classes[0].intersection(&cur);
    let base = if part0.is_empty() {
        ClassClaim::inout(
            m + 1,
            l + 1,
            VertexSet::new(),
            VertexSet::new(),
            VertexSet::new(),
            VertexSet::new(),
        )
    } else {
        solve_part(g, &part0, solvers[0], 0, target)?
    };
    let (mut x, mut y) = base.partition.expect("INOUT claims carry a partition");
    let mut a = base.witness_a;
    let mut b = base.witness_b.expect("INOUT claims carry both witnesses");

    for lv in levels.iter().rev() {
        x = lv.out_part.union(&x).union(&lv.out_hit.difference(&lv.part));
        y = lv
            .in_part
            .union(&y)
            .union(&lv.in_hit.difference(&lv.part.union(&lv.out_hit)));
        let new_a: Vec<Vertex> = lv.a.iter().filter(|&v| !hit_by(g, &a, v, Direction::Out)).collect();
        let new_b: Vec<Vertex> = lv.b.iter().filter(|&v| !hit_by(g, &b, v, Direction::In)).collect();
        a.extend(new_a);
        b.extend(new_b);
    }
    Ok(ClassClaim::inout(m + 1, l + 1, x, a, y, b))
}

/// OUT(2) witness from a proper coloring of the underlying undirected graph:
/// each color class is edgeless, hence hereditarily OUT(1) with itself as
/// witness, and [`step_up_out`] combines them. Classes are ordered by color.
pub fn coloring_to_out2(g: &Digraph, coloring: &[usize]) -> Result<ClassClaim> {
    if coloring.len() != g.n() {
        return Err(Error::ColoringLength {
            expected: g.n(),
            got: coloring.len(),
        });
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| coloring[u] == coloring[v]) {
        return Err(Error::ImproperColoring(u, v, coloring[u]));
    }
    let mut by_color: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for (v, &c) in coloring.iter().enumerate() {
        by_color.entry(c).or_default().insert(v);
    }
    let classes: Vec<VertexSet> = by_color.into_values().collect();
    let edgeless = FnSolver::new("edgeless class", |sub: &Digraph, _: &[Vertex]| {
        Ok(ClassClaim::out(1, VertexSet::full(sub.n())))
    });
    let solvers: Vec<&dyn SubSolver> = vec![&edgeless; classes.len()];
    let p = PartitionSpec::new(g.n(), classes)?;
    step_up_out(g, &p, &solvers, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::graph::fixtures::*;
    use crate::oracle::decide_class;
    use proptest::prelude::*;

    fn oracle_solver(kind: ClassKind) -> impl SubSolver {
        FnSolver::new(format!("oracle {kind}"), move |sub: &Digraph, _: &[Vertex]| {
            decide_class(sub, kind, &Caps::default())?.ok_or_else(|| Error::Precondition(format!("not in {kind}")))
        })
    }

    fn singleton_solver() -> impl SubSolver {
        FnSolver::new("singleton", |sub: &Digraph, _: &[Vertex]| {
            Ok(ClassClaim::out(1, VertexSet::full(sub.n())))
        })
    }

    /// Transitive path on its class: first vertex is an OUT(1) source,
    /// last vertex an IN(1) sink; as INOUT(1,1) put everything on the out
    /// side except nothing.
    fn first_vertex_out1() -> impl SubSolver {
        FnSolver::new("first vertex", |sub: &Digraph, _: &[Vertex]| {
            let w = if sub.n() == 0 {
                VertexSet::new()
            } else {
                VertexSet::singleton(0)
            };
            Ok(ClassClaim::inout(
                1,
                1,
                VertexSet::full(sub.n()),
                w,
                VertexSet::new(),
                VertexSet::new(),
            ))
        })
    }

    #[test]
    fn edgeless_singletons() {
        let s = singleton_solver();
        let p = PartitionSpec::new(3, vec![set([0]), set([1]), set([2])]).unwrap();
        let c = step_up_out(&e3(), &p, &[&s, &s, &s], 1).unwrap();
        assert_eq!(c, ClassClaim::out(2, set([0, 1, 2])));
    }

    #[test]
    fn cycle_with_oracle_classes() {
        let g = c3();
        let s0 = oracle_solver(ClassKind::out(2));
        let s1 = oracle_solver(ClassKind::out(1));
        let p = PartitionSpec::new(3, vec![set([2]), set([0, 1])]).unwrap();
        let c = step_up_out(&g, &p, &[&s0, &s1], 1).unwrap();
        assert_eq!(c.kind, ClassKind::out(2));
        assert!(verify_claim(&g, &c).ok);
    }

    #[test]
    fn coloring_examples() {
        let c = coloring_to_out2(&p3(), &[0, 1, 0]).unwrap();
        assert!(verify_claim(&p3(), &c).ok);
        assert_eq!(
            coloring_to_out2(&e3(), &[0, 0, 0]).unwrap(),
            ClassClaim::out(2, set([0, 1, 2]))
        );
        let c = coloring_to_out2(&c3(), &[0, 1, 2]).unwrap();
        assert!(verify_claim(&c3(), &c).ok);
    }

    #[test]
    fn coloring_errors() {
        assert_eq!(
            coloring_to_out2(&p3(), &[0, 0, 1]).unwrap_err(),
            Error::ImproperColoring(0, 1, 0)
        );
        assert!(matches!(
            coloring_to_out2(&p3(), &[0, 1]).unwrap_err(),
            Error::ColoringLength { .. }
        ));
    }

    #[test]
    fn failing_solver_names_its_class() {
        let s = singleton_solver();
        let never = FnSolver::new("never", |_: &Digraph, _: &[Vertex]| {
            Err(Error::Precondition("refuses".into()))
        });
        let p = PartitionSpec::new(3, vec![set([0]), set([1, 2])]).unwrap();
        let err = step_up_out(&p3(), &p, &[&s, &never], 1).unwrap_err();
        assert!(matches!(err, Error::SubSolver { class: 1, .. }), "{err}");

        // a solver whose claim does not verify is also a contract violation
        let p = PartitionSpec::new(3, vec![set([0]), set([1]), set([2])]).unwrap();
        let liar = FnSolver::new("liar", |_: &Digraph, _: &[Vertex]| {
            Ok(ClassClaim::out(1, VertexSet::new()))
        });
        let err = step_up_out(&p3(), &p, &[&s, &s, &liar], 1).unwrap_err();
        assert!(matches!(err, Error::SubSolver { class: 2, .. }));
    }

    #[test]
    fn partition_spec_validation() {
        assert!(PartitionSpec::new(3, vec![set([0, 1]), set([1, 2])]).is_err());
        assert!(PartitionSpec::new(3, vec![set([0, 1])]).is_err());
        assert!(PartitionSpec::new(3, vec![set([0, 1, 5])]).is_err());
    }

    #[test]
    fn inout_single_class_is_passthrough() {
        let g = c3();
        let s = oracle_solver(ClassKind::inout(2, 2));
        let p = PartitionSpec::new(3, vec![set([0, 1, 2])]).unwrap();
        let c = step_up_inout(&g, &p, &[&s], 1, 1).unwrap();
        let direct = decide_class(&g, ClassKind::inout(2, 2), &Caps::default())
            .unwrap()
            .unwrap();
        assert_eq!(c, direct);
    }

    #[test]
    fn inout_two_paths() {
        // two disjoint copies of 0 -> 1 -> 2
        let g = Digraph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let s = oracle_solver(ClassKind::inout(1, 1));
        let p = PartitionSpec::new(6, vec![set([0, 1, 2]), set([3, 4, 5])]).unwrap();
        let c = step_up_inout(&g, &p, &[&s, &s], 1, 1).unwrap();
        assert_eq!(c.kind, ClassKind::inout(2, 2));
        assert!(verify_claim(&g, &c).ok, "{c}");
    }

    #[test]
    fn inout_transitive_path_classes() {
        // three transitive tournaments on 3 vertices, wired together
        // with edges running both ways between classes
        let mut edges = Vec::new();
        for base in [0, 3, 6] {
            edges.extend([(base, base + 1), (base, base + 2), (base + 1, base + 2)]);
        }
        edges.extend([(2, 3), (5, 6), (8, 0), (4, 1), (7, 4)]);
        let g = Digraph::new(9, edges).unwrap();
        let s = first_vertex_out1();
        let p = PartitionSpec::new(9, vec![set([0, 1, 2]), set([3, 4, 5]), set([6, 7, 8])]).unwrap();
        let c = step_up_inout(&g, &p, &[&s, &s, &s], 1, 1).unwrap();
        assert!(verify_claim(&g, &c).ok, "{c}");
    }

    fn arb_partitioned(max_n: usize, max_k: usize) -> impl Strategy<Value = (Digraph, PartitionSpec)> {
        arb_digraph(max_n).prop_flat_map(move |g| {
            let n = g.n();
            proptest::collection::vec(0..max_k, n).prop_map(move |labels| {
                let k = labels.iter().copied().max().map_or(0, |m| m + 1);
                let mut classes = vec![VertexSet::new(); k];
                for (v, &c) in labels.iter().enumerate() {
                    classes[c].insert(v);
                }
                (g.clone(), PartitionSpec::new(n, classes).unwrap())
            })
        })
    }

    proptest! {
        #[test]
        fn step_up_out_verifies((g, p) in arb_partitioned(8, 4)) {
            prop_assume!(!p.classes.is_empty());
            let top = oracle_solver(ClassKind::out(2));
            let rest = oracle_solver(ClassKind::out(1));
            // OUT(1) is not hereditary in general; restrict the property to
            // partitions whose non-base classes are edgeless.
            let edgeless = p.classes[1..].iter().all(|c| g.is_independent(c).unwrap());
            prop_assume!(edgeless);
            let mut solvers: Vec<&dyn SubSolver> = vec![&top];
            solvers.extend(std::iter::repeat_n(&rest as &dyn SubSolver, p.k()));
            let c = step_up_out(&g, &p, &solvers, 1).unwrap();
            prop_assert_eq!(c.kind, ClassKind::out(2));
            prop_assert!(verify_claim(&g, &c).ok);
        }

        #[test]
        fn step_up_inout_verifies((g, p) in arb_partitioned(8, 4)) {
            prop_assume!(!p.classes.is_empty());
            let top = oracle_solver(ClassKind::inout(2, 2));
            let rest = oracle_solver(ClassKind::inout(1, 1));
            let mut solvers: Vec<&dyn SubSolver> = vec![&top];
            solvers.extend(std::iter::repeat_n(&rest as &dyn SubSolver, p.k()));
            match step_up_inout(&g, &p, &solvers, 1, 1) {
                Ok(c) => {
                    prop_assert_eq!(c.kind, ClassKind::inout(2, 2));
                    prop_assert!(verify_claim(&g, &c).ok, "{}", c);
                }
                // INOUT(1,1) is not hereditary for arbitrary classes; a
                // refusing solver must surface as a contract error
                Err(Error::SubSolver { .. }) => {}
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }
    }
}
