use super::{bit, Graph, VertexSet};

/// Vertex sets of a fixed size that contain a given vertex and induce a
/// connected subgraph.
///
/// The search keeps a frontier of boundary candidates and always branches
/// on the smallest one: either it joins the set (its unseen neighbors enter
/// the frontier) or it is forbidden for the rest of that branch. Every set is
/// reached by exactly one include/forbid sequence.
pub struct ConnectedSubsets<'g> {
    graph: &'g Graph,
    size: usize,
    // (members, frontier, forbidden)
    stack: Vec<(VertexSet, VertexSet, VertexSet)>,
}

pub fn connected_subsets(g: &Graph, v0: usize, size: usize) -> ConnectedSubsets<'_> {
    let stack = if size == 0 || v0 >= g.vertex_count() {
        Vec::new()
    } else {
        vec![(bit(v0), g.neighbor_set(v0), bit(v0))]
    };
    ConnectedSubsets { graph: g, size, stack }
}

impl Iterator for ConnectedSubsets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some((set, frontier, forbidden)) = self.stack.pop() {
            let have = set.count_ones() as usize;
            if have == self.size {
                return Some(set);
            }
            if frontier == 0 {
                continue;
            }
            let w = frontier.trailing_zeros() as usize;
            let rest = frontier & !bit(w);
            self.stack.push((set, rest, forbidden | bit(w)));
            let grown = set | bit(w);
            let seen = grown | forbidden | rest;
            self.stack
                .push((grown, rest | (self.graph.neighbor_set(w) & !seen), forbidden | bit(w)));
        }
        None
    }
}
