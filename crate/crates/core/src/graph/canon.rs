//! Canonical labelling by color refinement plus individualization.

use super::{bit, members, Graph, VertexSet};

/// Adjacency rows of the lexicographically least relabelling reachable by the
/// refinement search. Two graphs have equal forms iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    rows: Vec<VertexSet>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency(self.rows.clone())
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }
}

/// Returns `None` when the search tree would exceed `leaf_budget` leaves.
pub fn canonical_form(g: &Graph, leaf_budget: Option<usize>) -> Option<CanonicalForm> {
    let n = g.vertex_count();
    let colors = refine(g, vec![0; n]);
    let mut search = Search {
        graph: g,
        best: None,
        leaves: 0,
        budget: leaf_budget.unwrap_or(usize::MAX),
    };
    if search.descend(colors) {
        search.best.map(|rows| CanonicalForm { rows })
    } else {
        None
    }
}

struct Search<'g> {
    graph: &'g Graph,
    best: Option<Vec<VertexSet>>,
    leaves: usize,
    budget: usize,
}

impl Search<'_> {
    /// False once the leaf budget is exhausted.
    fn descend(&mut self, colors: Vec<usize>) -> bool {
        let n = colors.len();
        let cells = colors.iter().copied().max().map_or(0, |m| m + 1);
        if cells == n {
            self.leaves += 1;
            if self.leaves > self.budget {
                return false;
            }
            let rows = relabelled_rows(self.graph, &colors);
            if self.best.as_ref().is_none_or(|b| rows < *b) {
                self.best = Some(rows);
            }
            return true;
        }
        // first non-singleton cell
        let mut size = vec![0usize; cells];
        for &c in &colors {
            size[c] += 1;
        }
        let target = (0..cells).find(|&c| size[c] > 1).expect("non-discrete partition");
        for v in (0..n).filter(|&v| colors[v] == target) {
            let split: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| if c > target || (c == target && u != v) { c + 1 } else { c })
                .collect();
            if !self.descend(refine(self.graph, split)) {
                return false;
            }
        }
        true
    }
}

fn relabelled_rows(g: &Graph, perm: &[usize]) -> Vec<VertexSet> {
    let mut rows = vec![0; perm.len()];
    for v in 0..perm.len() {
        rows[perm[v]] = members(g.neighbor_set(v)).fold(0, |acc, w| acc | bit(perm[w]));
    }
    rows
}

/// Equitable refinement: split cells by the multiset of neighbor colors
/// until stable. Cell order stays label-independent.
fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = colors.len();
    loop {
        let cells = colors.iter().copied().max().map_or(0, |m| m + 1);
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb = vec![0usize; cells];
                for w in g.neighbors(v) {
                    nb[colors[w]] += 1;
                }
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0; n];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                c += 1;
            }
            next[sigs[i].2] = c;
        }
        let new_cells = if n == 0 { 0 } else { c + 1 };
        colors = next;
        if new_cells == cells {
            return colors;
        }
    }
}
