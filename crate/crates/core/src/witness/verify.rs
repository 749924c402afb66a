use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ginfty::{materialize, Materialization, SeqVertex, TerminatedDigraph};
use crate::graph::{Direction, Hops};
use crate::oracle::{ClassKind, Failure, VerifyReport};

use super::claim::LazyClaim;
use super::lazyset::LazySet;

/// Checks a claim on the truncation of `G^∞` to `depth + margin`
/// nonterminals.
///
/// Witness members present in the truncation must be independent and lie in
/// their part; the parts must split the truncation; and every vertex with at
/// most `depth` nonterminals must be covered within the claimed number of
/// steps by a path that stays inside its part. The extra `margin` levels
/// hold the deeper witnesses and intermediate vertices those paths use.
/// Paths found in the truncation exist in `G^∞`, so an uncovered report may
/// be an artifact of too small a margin but a pass is never spurious for the
/// checked vertices.
pub fn verify_truncated(
    td: &TerminatedDigraph,
    claim: &LazyClaim,
    depth: usize,
    margin: usize,
    caps: &Caps,
) -> Result<VerifyReport<SeqVertex>> {
    let total = depth.checked_add(margin).ok_or(Error::CapExceeded {
        what: "materialization depth",
        requested: usize::MAX,
        cap: caps.materialize_vertices,
    })?;
    let m = materialize(td, total, caps)?;
    Ok(verify_on(td, claim, depth, &m))
}

/// [`verify_truncated`] against an existing materialization.
pub fn verify_on(
    td: &TerminatedDigraph,
    claim: &LazyClaim,
    depth: usize,
    m: &Materialization,
) -> VerifyReport<SeqVertex> {
    let malformed = |msg: String| VerifyReport::from_failures(vec![Failure::Malformed(msg)]);
    if let Err(e) = claim.kind.validate() {
        return malformed(e.to_string());
    }
    let mask = |s: &LazySet| -> Result<Vec<bool>> {
        let member = s.compile(td)?;
        Ok(m.labels.iter().map(|l| member.contains(l)).collect())
    };
    let all = vec![true; m.len()];

    // (witness, part, hops, direction)
    let mut sides: Vec<(Vec<bool>, Vec<bool>, Hops, Direction)> = Vec::new();
    let mut failures = Vec::new();
    let shape = match (claim.kind, &claim.out_witness, &claim.in_witness, &claim.partition) {
        (ClassKind::Out(h), Some(w), None, None) => mask(w).map(|w| sides.push((w, all.clone(), h, Direction::Out))),
        (ClassKind::In(h), None, Some(w), None) => mask(w).map(|w| sides.push((w, all.clone(), h, Direction::In))),
        (ClassKind::InOut { in_hops, out_hops }, Some(a), Some(b), Some((op, ip))) => (|| {
            let (a, b, op, ip) = (mask(a)?, mask(b)?, mask(op)?, mask(ip)?);
            for (v, label) in m.labels.iter().enumerate() {
                match (op[v], ip[v]) {
                    (true, true) => failures.push(Failure::InBothParts(label.clone())),
                    (false, false) => failures.push(Failure::InNoPart(label.clone())),
                    _ => {}
                }
            }
            sides.push((a, op, out_hops, Direction::Out));
            sides.push((b, ip, in_hops, Direction::In));
            Ok(())
        })(),
        _ => return malformed(format!("fields do not match a {} claim", claim.kind)),
    };
    if let Err(e) = shape {
        return malformed(e.to_string());
    }

    let g = &m.digraph;
    for (witness, part, hops, dir) in &sides {
        for v in (0..m.len()).filter(|&v| witness[v] && !part[v]) {
            failures.push(Failure::WitnessOutsidePart(m.label(v).clone()));
        }
        for (u, v) in g.edges().filter(|&(u, v)| witness[u] && witness[v]) {
            failures.push(Failure::Dependent(m.label(u).clone(), m.label(v).clone()));
        }
        let sources = (0..m.len()).filter(|&v| witness[v] && part[v]);
        let reached = g.reach_mask(sources, *hops, *dir, Some(part));
        for v in (0..m.len()).filter(|&v| part[v] && !reached[v] && m.label(v).depth() <= depth) {
            failures.push(Failure::Uncovered(m.label(v).clone()));
        }
    }
    VerifyReport::from_failures(failures)
}
