//! Constructive witnesses on finite digraphs: the quasi-kernel recursion,
//! the two stepping-up combinators, the tournament split, the K_n-free
//! complement partition and the two-sided A/B cover.

mod ab_cover;
mod kn_free;
mod quasi_kernel;
mod step_up;
mod tournament;

pub use ab_cover::{ab_cover, verify_ab_cover};
pub use kn_free::{kn_free_partition, kn_free_partition_with};
pub use quasi_kernel::{quasi_kernel, quasi_sink};
pub use step_up::{coloring_to_out2, step_up_inout, step_up_out, FnSolver, PartitionSpec, SubSolver};
pub use tournament::{tournament_split, TournamentSplit};
