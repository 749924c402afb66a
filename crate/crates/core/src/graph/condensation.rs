use super::{Digraph, Vertex, VertexSet};

/// Strongly connected components ordered by reachability.
///
/// Orientation: class `i` precedes class `j` (`i ⪯ j`) when `j` reaches `i`,
/// i.e. edges run from the ⪯-larger class into the ⪯-smaller one. This is
/// the reverse of the usual "source first" convention. The ⪯-maximum, when it
/// exists, is the class from which every vertex is reachable.
///
/// Classes are numbered by their least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condensation {
    pub classes: Vec<VertexSet>,
    pub class_of: Vec<usize>,
    /// `reach[j]` is a bit row over classes: bit `i` set iff class `j`
    /// reaches class `i` (reflexive).
    reach: Vec<Vec<u64>>,
    pub is_total_order: bool,
    pub last_class: Option<usize>,
}

impl Condensation {
    pub(crate) fn of(g: &Digraph) -> Self {
        let raw = tarjan(g);
        // renumber by least member
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by_key(|&c| raw[c].iter().min().copied());
        let mut class_of = vec![0; g.n()];
        let mut classes = Vec::with_capacity(raw.len());
        for (new_id, &old) in order.iter().enumerate() {
            for &v in &raw[old] {
                class_of[v] = new_id;
            }
            classes.push(raw[old].iter().copied().collect::<VertexSet>());
        }

        let k = classes.len();
        let words = k.div_ceil(64);
        let mut reach = vec![vec![0u64; words]; k];
        // Tarjan emits sinks first; walking `raw` forward sees every
        // successor class before its predecessors.
        let mut new_of_old = vec![0; raw.len()];
        for (new_id, &old) in order.iter().enumerate() {
            new_of_old[old] = new_id;
        }
        for old in 0..raw.len() {
            let c = new_of_old[old];
            let mut row = vec![0u64; words];
            row[c / 64] |= 1 << (c % 64);
            for &u in &raw[old] {
                for &w in g.out_neighbors(u) {
                    let d = class_of[w];
                    if d != c {
                        for (a, b) in row.iter_mut().zip(&reach[d]) {
                            *a |= *b;
                        }
                    }
                }
            }
            reach[c] = row;
        }

        let reaches = |j: usize, i: usize| reach[j][i / 64] >> (i % 64) & 1 == 1;
        let is_total_order = (0..k).all(|i| (i + 1..k).all(|j| reaches(i, j) || reaches(j, i)));
        let last_class = (0..k).find(|&j| (0..k).all(|i| reaches(j, i)));

        Condensation {
            classes,
            class_of,
            reach,
            is_total_order,
            last_class,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `i ⪯ j`: class `j` reaches class `i`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.reach[j][i / 64] >> (i % 64) & 1 == 1
    }

    /// Classes with no edge entering from another class (the ⪯-maximal ones).
    pub fn source_classes(&self, g: &Digraph) -> Vec<usize> {
        let mut entered = vec![false; self.len()];
        for (u, v) in g.edges() {
            if self.class_of[u] != self.class_of[v] {
                entered[self.class_of[v]] = true;
            }
        }
        (0..self.len()).filter(|&c| !entered[c]).collect()
    }
}

/// Iterative Tarjan; components come out in reverse topological order.
fn tarjan(g: &Digraph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        // (vertex, position in its out-list)
        let mut call = vec![(root, 0usize)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let succ = g.out_neighbors(v);
            if *pos < succ.len() {
                let w = succ[*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                comps.push(comp);
            }
        }
    }
    comps
}
