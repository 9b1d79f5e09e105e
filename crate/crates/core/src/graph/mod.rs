//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, which caps graphs at
//! [`MAX_VERTICES`] vertices. Every exhaustive routine in this crate works far
//! below that size.

mod canon;
pub mod corpus;
mod generators;
mod io;
mod profile;
mod subsets;

pub use canon::{canonical_form, CanonicalForm};
pub use generators::{generate_graph, Family};
pub use io::{parse_graph, GraphFormat};
pub use profile::{neighborhood_profile, NeighborhoodProfile};
pub use subsets::{connected_subsets, ConnectedSubsets};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Vertex set as a bitmask.
pub type VertexSet = u64;

/// Iterate the members of a vertex set in increasing order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn bit(v: usize) -> VertexSet {
    1u64 << v
}

#[inline]
pub(crate) fn full_set(n: usize) -> VertexSet {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Resource {
                what: "vertex count",
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Repeated pairs collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "vertex index {} out of range for {n} vertices",
                    u.max(v)
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        Graph { n: adj.len(), adj }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        full_set(self.n)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| members(self.adj[u] & !full_set(u + 1)).map(move |v| (u, v)))
            .collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        members(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// True when no two members of `set` are adjacent.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        members(set).all(|v| self.adj[v] & set == 0)
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = bit(start) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced by `set` is connected (the empty set is not).
    pub fn induces_connected(&self, set: VertexSet) -> bool {
        set != 0 && self.reach(set.trailing_zeros() as usize, set) == set
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.induces_connected(self.vertices())
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.reach(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// Induced subgraph on `set`, relabelled to `0..|set|` preserving order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let verts: Vec<usize> = members(set).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| members(self.adj[v] & set).fold(0, |acc, w| acc | bit(index[w])))
            .collect();
        Graph::from_adjacency(adj)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0; self.n];
        for v in 0..self.n {
            adj[perm[v]] = members(self.adj[v]).fold(0, |acc, w| acc | bit(perm[w]));
        }
        Graph::from_adjacency(adj)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    /// Identifies `v` with `u` and drops `v`; parallel edges merge.
    pub fn contract_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        let merged = (g.adj[u] | g.adj[v]) & !bit(u) & !bit(v);
        for w in members(g.adj[v]) {
            g.adj[w] &= !bit(v);
        }
        g.adj[u] = merged;
        for w in members(merged) {
            g.adj[w] |= bit(u);
        }
        g.without_vertex(v)
    }

    /// Deletes `v`, shifting higher labels down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertices() & !bit(v))
    }

    pub(crate) fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        generate_graph(&Family::Complete(n)).unwrap()
    }

    #[test]
    fn edges_are_sorted_and_deduplicated() {
        let g = Graph::from_edges(3, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn rejects_self_loops_and_range() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn contraction_merges_parallel_edges() {
        let g = k(3).contract_edge(0, 1);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
        let g = k(4).contract_edge(1, 3);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn components_of_disjoint_edges() {
        let g = Graph::from_edges(5, [(0, 3), (1, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b01001, 0b10010, 0b00100]);
        assert!(!g.is_connected());
    }

    #[test]
    fn induced_relabels_in_order() {
        let g = generate_graph(&Family::Cycle(5)).unwrap();
        let h = g.induced(0b01110);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }
}
