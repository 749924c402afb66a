use std::fmt;

use crate::error::Result;
use crate::ginfty::{SeqVertex, TerminatedDigraph};
use crate::graph::Vertex;

use super::claim::LazyClaim;
use super::constructions::{
    check_cond_iii, inout22_witness, n_independent_witness, out2_decision_tournament, out2_refuter, out3_witness,
    tinf_hom, Out2Decision, TInfHom,
};
use super::lazyset::LazySet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Out2Verdict {
    /// `[v]` is a one-vertex OUT(2) witness.
    Yes(SeqVertex),
    /// Tournament generator with no such terminal. `refuted` is the
    /// refuter's answer for `from`; [`out2_refuter`] gives one for any
    /// vertex.
    No { from: SeqVertex, refuted: SeqVertex },
    /// The generator is not a tournament.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GInfReport {
    pub cond_iii: bool,
    /// Nonterminal without in-neighbors when `cond_iii` fails.
    pub violator: Option<Vertex>,
    pub out3: Option<LazyClaim>,
    pub out2: Out2Verdict,
    pub tinf_hom: Option<TInfHom>,
    /// Only when the nonterminals are independent.
    pub n_independent: Option<LazyClaim>,
    pub inout22: LazyClaim,
}

impl GInfReport {
    /// Every emitted claim with its report name.
    pub fn claims(&self) -> Vec<(&'static str, LazyClaim)> {
        let mut out = Vec::new();
        if let Out2Verdict::Yes(w) = &self.out2 {
            out.push(("out2", LazyClaim::out(2, LazySet::Finite(vec![w.clone()]))));
        }
        if let Some(c) = &self.out3 {
            out.push(("out3", c.clone()));
        }
        if let Some(c) = &self.n_independent {
            out.push(("n_independent", c.clone()));
        }
        out.push(("inout22", self.inout22.clone()));
        out
    }
}

pub fn classify(td: &TerminatedDigraph) -> Result<GInfReport> {
    let (cond_iii, violator) = check_cond_iii(td);
    let (out3, tinf) = match violator {
        None => (Some(out3_witness(td)?), None),
        Some(v) => (None, Some(tinf_hom(td, v)?)),
    };
    let out2 = if td.g.is_tournament() {
        match out2_decision_tournament(td)? {
            Out2Decision::Yes(w) => Out2Verdict::Yes(w),
            Out2Decision::No => {
                let from = SeqVertex::new([td.t0()]);
                let refuted = out2_refuter(td, &from)?;
                Out2Verdict::No { from, refuted }
            }
        }
    } else {
        Out2Verdict::Unknown
    };
    let independent = td.g.edges().all(|(u, v)| td.is_terminal(u) || td.is_terminal(v));
    Ok(GInfReport {
        cond_iii,
        violator,
        out3,
        out2,
        tinf_hom: tinf,
        n_independent: if independent {
            Some(n_independent_witness(td)?)
        } else {
            None
        },
        inout22: inout22_witness(td)?,
    })
}

impl fmt::Display for Out2Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Out2Verdict::Yes(w) => write!(f, "yes (witness {w})"),
            Out2Verdict::No { from, refuted } => write!(f, "no ({refuted} is not within two steps of {from})"),
            Out2Verdict::Unknown => f.write_str("unknown (not a tournament)"),
        }
    }
}

impl fmt::Display for GInfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.violator {
            Some(v) => writeln!(f, "cond_iii: false (nonterminal {v} has no in-neighbor)")?,
            None => writeln!(f, "cond_iii: true")?,
        }
        writeln!(f, "out2: {}", self.out2)?;
        match &self.tinf_hom {
            Some(h) => writeln!(f, "tinf_hom: phi(s) = min{{n : s(n) != {}}}", h.v)?,
            None => writeln!(f, "tinf_hom: none")?,
        }
        if self.out3.is_none() {
            writeln!(f, "out3: none")?;
        }
        for (name, c) in self.claims() {
            writeln!(f, "{name}:")?;
            for line in c.to_string().lines() {
                writeln!(f, "  {line}")?;
            }
        }
        Ok(())
    }
}
