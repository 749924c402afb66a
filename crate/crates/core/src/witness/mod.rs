//! Witness sets for `G^∞` and their verification on truncations.

mod claim;
mod constructions;
mod dfa;
mod lazyset;
mod report;
mod verify;

pub use claim::LazyClaim;
pub use constructions::{
    check_cond_iii, inout22_witness, n_independent_witness, out2_decision_tournament, out2_refuter, out3_witness,
    tinf_hom, Inout22Construction, Out2Decision, TInfHom,
};
pub use lazyset::{Block, LazySet, Membership};
pub use report::{classify, GInfReport, Out2Verdict};
pub use verify::{verify_on, verify_truncated};
