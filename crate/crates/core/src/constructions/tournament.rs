use crate::error::Result;
use crate::graph::{Digraph, Direction, Hops, Vertex, VertexSet};
use crate::oracle::ClassClaim;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TournamentSplit {
    /// `Out²(witness) = V`.
    Out2 { witness: VertexSet },
    /// `V_out` is covered in one step from `out_witness` inside `G[V_out]`,
    /// `V_in` reaches `in_witness` in one step inside `G[V_in]`.
    Split {
        v_in: VertexSet,
        v_out: VertexSet,
        in_witness: Vertex,
        out_witness: Vertex,
    },
}

impl TournamentSplit {
    /// OUT(2) or INOUT(1,1).
    pub fn to_claim(&self) -> ClassClaim {
        match self {
            TournamentSplit::Out2 { witness } => ClassClaim::out(2, witness.clone()),
            TournamentSplit::Split {
                v_in,
                v_out,
                in_witness,
                out_witness,
            } => ClassClaim::inout(
                1,
                1,
                v_out.clone(),
                VertexSet::singleton(*out_witness),
                v_in.clone(),
                VertexSet::singleton(*in_witness),
            ),
        }
    }
}

/// Splits a tournament around `x` (default 0).
///
/// If `x` reaches everything in two steps the answer is `{x}`. Otherwise,
/// for the least `y` outside `Out²(x)`, every vertex outside `Out¹(y)` has
/// an edge into `x`, so `V_out = Out¹(y) ∖ {x}` and the rest form the
/// split. `x` always goes to the in side.
pub fn tournament_split(g: &Digraph, x: Option<Vertex>) -> Result<TournamentSplit> {
    g.require_tournament()?;
    split_semicomplete(g, x)
}

/// The same argument only needs every pair to be adjacent; 2-cycles are
/// harmless.
pub(crate) fn split_semicomplete(g: &Digraph, x: Option<Vertex>) -> Result<TournamentSplit> {
    if g.n() == 0 {
        return Ok(TournamentSplit::Out2 {
            witness: VertexSet::new(),
        });
    }
    let x = x.unwrap_or(0);
    g.check_vertex(x)?;
    let from_x = g.closure(&VertexSet::singleton(x), Hops::Steps(2), Direction::Out)?;
    let Some(y) = g.vertices().find(|&v| !from_x.contains(v)) else {
        return Ok(TournamentSplit::Out2 {
            witness: VertexSet::singleton(x),
        });
    };
    let mut v_out = g.closure(&VertexSet::singleton(y), Hops::Steps(1), Direction::Out)?;
    v_out.remove(x);
    let v_in = VertexSet::full(g.n()).difference(&v_out);
    Ok(TournamentSplit::Split {
        v_in,
        v_out,
        in_witness: x,
        out_witness: y,
    })
}
