use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Direction, Hops, Vertex, VertexSet};
use crate::oracle::ClassClaim;

use super::step_up::{step_up_inout, FnSolver, PartitionSpec, SubSolver};
use super::tournament::split_semicomplete;

/// [`kn_free_partition_with`] under default caps.
pub fn kn_free_partition(g: &Digraph, n: usize) -> Result<ClassClaim> {
    kn_free_partition_with(g, n, &Caps::default())
}

/// INOUT(2,2) claim for a digraph whose undirected complement has no `K_n`.
///
/// For `n = 2` every pair is adjacent and the answer is OUT(2) or
/// INOUT(1,1); for `n = 3` it is INOUT(1,2) or INOUT(2,1). A clique of size
/// `n` in the complement is reported as an error. Clique search is
/// exponential in `n`, so for `n > 3` the vertex count is capped.
pub fn kn_free_partition_with(g: &Digraph, n: usize, caps: &Caps) -> Result<ClassClaim> {
    if n < 2 {
        return Err(Error::Precondition(format!("n must be at least 2, got {n}")));
    }
    let cap = if n <= 3 { usize::MAX } else { caps.clique_vertices };
    {
        if let Some(clique) = g.complement_undirected().clique_of_size(n, cap)? {
            return Err(Error::CliqueInComplement {
                clique: clique.to_vec(),
            });
        }
    }
    solve(g, n)
}

/// The sets of one recursion step.
struct Layers {
    a: VertexSet,
    c: VertexSet,
    l: VertexSet,
    m: VertexSet,
    n: VertexSet,
}

fn layers(g: &Digraph) -> std::result::Result<Layers, VertexSet> {
    let out2 = |s: &VertexSet| g.closure(s, Hops::Steps(2), Direction::Out).expect("in range");
    let a = g.greedy_max_independent(&VertexSet::new());
    let reached = out2(&a);
    if reached.len() == g.n() {
        return Err(a);
    }
    let c = g.greedy_max_independent(&reached);
    let l = g
        .closure(&a, Hops::Steps(1), Direction::In)
        .expect("in range")
        .difference(&c);
    let m = g
        .closure(&c, Hops::Steps(1), Direction::Out)
        .expect("in range")
        .difference(&l);
    let n = VertexSet::full(g.n()).difference(&l.union(&m));
    Ok(Layers { a, c, l, m, n })
}

/// Precondition already checked.
fn solve(g: &Digraph, n: usize) -> Result<ClassClaim> {
    if n == 2 {
        return Ok(split_semicomplete(g, None)?.to_claim());
    }
    let lay = match layers(g) {
        Ok(lay) => lay,
        Err(a) => {
            let claim = ClassClaim::out(2, a);
            let (in_hops, out_hops) = if n == 3 { (1, 2) } else { (2, 2) };
            return Ok(claim.as_inout(g.n(), in_hops.into(), out_hops.into()));
        }
    };
    if n == 3 {
        if lay.n.is_empty() {
            return Ok(inout12(g, &lay, None));
        }
        return Ok(match king(g, &lay.n) {
            Some(d) => inout12(g, &lay, Some(d)),
            None => {
                // G[N] is a tournament, so a king always exists; this branch
                // only runs for inputs that bypassed the precondition.
                let sub = g.induced(&lay.n)?;
                match split_semicomplete(&sub.graph, None)? {
                    super::TournamentSplit::Split {
                        v_in,
                        v_out,
                        in_witness,
                        out_witness,
                    } => inout21(
                        g,
                        &lay,
                        &sub.lift(&v_out),
                        sub.to_old[out_witness],
                        &sub.lift(&v_in),
                        sub.to_old[in_witness],
                    ),
                    super::TournamentSplit::Out2 { .. } => unreachable!("no king but an OUT(2) witness"),
                }
            }
        });
    }

    let Layers { a, c, l, m, n: rest } = lay;
    let lm = l.union(&m);
    let side = FnSolver::new("L/M split", move |sub: &Digraph, original: &[Vertex]| {
        let local = |s: &VertexSet| -> VertexSet { (0..sub.n()).filter(|&i| s.contains(original[i])).collect() };
        Ok(ClassClaim::inout(1, 1, local(&m), local(&c), local(&l), local(&a)))
    });
    let base = FnSolver::new(
        format!("K_{}-free recursion", n - 1),
        move |sub: &Digraph, _: &[Vertex]| {
            solve(sub, n - 1).map(|c| c.as_inout(sub.n(), Hops::Steps(2), Hops::Steps(2)))
        },
    );
    let p = PartitionSpec::new(g.n(), vec![rest, lm])?;
    let solvers: [&dyn SubSolver; 2] = [&base, &side];
    step_up_inout(g, &p, &solvers, 1, 1)
}

/// Least `d ∈ N` with `Out²(d) ⊇ N` inside `G[N]`.
fn king(g: &Digraph, n_set: &VertexSet) -> Option<Vertex> {
    n_set.iter().find(|&d| {
        g.closure_within(&VertexSet::singleton(d), Hops::Steps(2), Direction::Out, n_set)
            .expect("in range")
            .len()
            == n_set.len()
    })
}

/// In side `L` with witness `A` (one step), out side `M ∪ N` with witness
/// `C ∪ {d}` (two steps).
fn inout12(g: &Digraph, lay: &Layers, d: Option<Vertex>) -> ClassClaim {
    let mut out_w = lay.c.clone();
    out_w.extend(d);
    let out_part = VertexSet::full(g.n()).difference(&lay.l);
    ClassClaim::inout(1, 2, out_part, out_w, lay.l.clone(), lay.a.clone())
}

/// `N = P ∪ R` with `P` covered from `x` and `R` reaching `y` in one step.
/// Out side `M ∪ P` with witness `C ∪ {x}` (one step), in side `L ∪ R` with
/// witness `{y} ∪ {a ∈ A : (a, y) ∉ E}` (two steps).
fn inout21(g: &Digraph, lay: &Layers, p: &VertexSet, x: Vertex, r: &VertexSet, y: Vertex) -> ClassClaim {
    let mut out_w = lay.c.clone();
    out_w.insert(x);
    let mut in_w: VertexSet = lay.a.iter().filter(|&a| !g.has_edge(a, y)).collect();
    in_w.insert(y);
    ClassClaim::inout(2, 1, lay.m.union(p), out_w, lay.l.union(r), in_w)
}
