//! Isomorphism classes of small graphs, grown one vertex at a time.
//!
//! Every connected graph on `k` vertices has a non-cut vertex, so it arises
//! from a connected graph on `k − 1` vertices by attaching one new vertex to
//! a nonempty neighborhood. Dropping the connectivity requirement also allows
//! the empty neighborhood.

use std::collections::BTreeSet;

use super::{canonical_form, CanonicalForm, Graph};

fn grow(level: &BTreeSet<CanonicalForm>, connected: bool) -> BTreeSet<CanonicalForm> {
    let mut next = BTreeSet::new();
    for form in level {
        let base = form.to_graph();
        let k = base.vertex_count();
        let first = if connected { 1u64 } else { 0 };
        for nb in first..(1u64 << k) {
            let mut adj = base.adjacency().to_vec();
            for (v, row) in adj.iter_mut().enumerate() {
                if nb >> v & 1 == 1 {
                    *row |= 1 << k;
                }
            }
            adj.push(nb);
            let g = Graph::from_adjacency(adj);
            next.insert(canonical_form(&g, None).expect("unbounded search"));
        }
    }
    next
}

fn levels(max_vertices: usize, connected: bool) -> Vec<Vec<Graph>> {
    let mut out = Vec::new();
    if max_vertices == 0 {
        return out;
    }
    let single = Graph::empty(1).expect("one vertex");
    let mut level: BTreeSet<CanonicalForm> =
        BTreeSet::from([canonical_form(&single, None).expect("trivial")]);
    for k in 1..=max_vertices {
        if k > 1 {
            level = grow(&level, connected);
        }
        out.push(level.iter().map(CanonicalForm::to_graph).collect());
    }
    out
}

/// Connected graphs on exactly `k` vertices, one per isomorphism class.
pub fn connected_graphs(k: usize) -> Vec<Graph> {
    levels(k, true).pop().unwrap_or_default()
}

/// Connected graphs on `1..=k` vertices, in order of size.
pub fn connected_graphs_up_to(k: usize) -> Vec<Graph> {
    levels(k, true).into_iter().flatten().collect()
}

/// All graphs (connected or not) on `1..=k` vertices, in order of size.
pub fn graphs_up_to(k: usize) -> Vec<Graph> {
    levels(k, false).into_iter().flatten().collect()
}
