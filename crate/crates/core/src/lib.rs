pub mod caps;
pub mod constructions;
pub mod error;
pub mod ginfty;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod structure;
pub mod witness;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{Digraph, Direction, Hops, Induced, UndirectedGraph, Vertex, VertexSet};
pub use oracle::{decide_all_small, decide_class, verify_claim, ClassClaim, ClassKind, Failure, VerifyReport};
