use crate::graph::Vertex;
use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Verification outcomes are *not* errors: a claim that fails to verify is
/// reported through a `VerifyReport`. Errors are reserved for malformed
/// input, violated preconditions and cap refusals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("loop at vertex {0}; analysis graphs must be loopless")]
    Loop(Vertex),

    #[error("graph is not a tournament: pair ({0}, {1}) {2}")]
    NotTournament(Vertex, Vertex, &'static str),

    #[error("{what}: {requested} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("improper coloring: edge ({0}, {1}) joins two vertices of color {2}")]
    ImproperColoring(Vertex, Vertex, usize),

    #[error("coloring has {got} entries, graph has {expected} vertices")]
    ColoringLength { expected: usize, got: usize },

    #[error("undirected complement contains K_{}: {clique:?}", clique.len())]
    CliqueInComplement { clique: Vec<Vertex> },

    #[error("solver `{solver}` for class {class} broke its contract: {reason}")]
    SubSolver {
        class: usize,
        solver: String,
        reason: String,
    },

    #[error("partition defect: {0}")]
    Partition(String),

    #[error("invalid sequence vertex {seq}: {reason}")]
    InvalidSequence { seq: String, reason: String },

    #[error("delta is undefined for equal sequences ({0})")]
    EqualSequences(String),

    #[error("terminated digraph needs a nonempty terminal set")]
    NoTerminals,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("an OUT(2) witness exists: Out^2({0}) covers the generator")]
    WitnessExists(Vertex),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("pattern syntax: {0}")]
    Pattern(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for refusals caused by a size cap rather than bad input.
    pub fn is_cap_refusal(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
