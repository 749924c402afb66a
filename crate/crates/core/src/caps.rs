/// Size limits for the exhaustive procedures.
///
/// Defaults follow the documented budgets: the oracle refuses graphs above
/// 14 vertices for OUT/IN and 10 vertices for INOUT, the clique search refuses
/// above 20 vertices, and materializations refuse above 200 000 vertices or
/// 10 000 000 edges.
/// Every field can be overridden (the CLI exposes `--max-vertices` and
/// `--max-materialize`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub oracle_vertices: usize,
    pub oracle_inout_vertices: usize,
    pub clique_vertices: usize,
    pub materialize_vertices: usize,
    pub materialize_edges: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            oracle_vertices: 14,
            oracle_inout_vertices: 10,
            clique_vertices: 20,
            materialize_vertices: 200_000,
            materialize_edges: 10_000_000,
        }
    }
}

impl Caps {
    /// Overrides every vertex-count cap of the finite searches at once.
    pub fn with_max_vertices(mut self, n: usize) -> Self {
        self.oracle_vertices = n;
        self.oracle_inout_vertices = n;
        self.clique_vertices = n;
        self
    }

    pub fn with_max_materialize(mut self, n: usize) -> Self {
        self.materialize_vertices = n;
        self
    }
}
