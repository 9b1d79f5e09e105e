//! Brute-force oracles shared by the integration tests. Each one is written
//! independently of the library routine it checks.

#![allow(dead_code)]

use chromzero::graph::{members, Graph};

/// Proper `q`-colorings by backtracking over vertices in label order.
pub fn colorings(g: &Graph, q: u32) -> u64 {
    let n = g.vertex_count();
    let earlier: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).filter(|&w| w < v).collect())
        .collect();
    fn go(v: usize, q: u32, earlier: &[Vec<usize>], colour: &mut [u32]) -> u64 {
        if v == colour.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..q {
            if earlier[v].iter().all(|&w| colour[w] != c) {
                colour[v] = c;
                total += go(v + 1, q, earlier, colour);
            }
        }
        total
    }
    go(0, q, &earlier, &mut vec![0; n])
}

/// `Σ (−1)^{|F|}` over edge sets `F` whose spanning subgraph is connected.
pub fn signed_sum(g: &Graph) -> i64 {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut total = 0;
    for mask in 0u64..(1 << edges.len()) {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut parts = n;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    parts -= 1;
                }
            }
        }
        if parts == 1 {
            total += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        }
    }
    total
}

/// Connected vertex sets of the given size containing `v0`, by scanning all
/// subsets.
pub fn connected_sets_containing(g: &Graph, v0: usize, size: usize) -> Vec<u64> {
    let n = g.vertex_count();
    (0u64..(1 << n))
        .filter(|s| s >> v0 & 1 == 1 && s.count_ones() as usize == size)
        .filter(|&s| {
            let mut seen = 1u64 << v0;
            loop {
                let grown = members(seen).fold(seen, |acc, v| acc | (g.neighbor_set(v) & s));
                if grown == seen {
                    break seen == s;
                }
                seen = grown;
            }
        })
        .collect()
}

/// Number of `n`-vertex subtrees containing the root of the Δ-regular tree,
/// for `n = 1..=max_n`, counted inside the tree truncated at depth `max_n − 1`.
pub fn regular_tree_subtrees(delta: usize, max_n: usize) -> Vec<u64> {
    // adjacency of the truncated tree, root = 0
    let mut adj: Vec<Vec<usize>> = vec![Vec::new()];
    let mut layer = vec![0usize];
    for depth in 0..max_n.saturating_sub(1) {
        let mut next = Vec::new();
        for &v in &layer {
            let children = if depth == 0 { delta } else { delta - 1 };
            for _ in 0..children {
                let w = adj.len();
                adj.push(vec![v]);
                adj[v].push(w);
                next.push(w);
            }
        }
        layer = next;
    }
    // Candidates before position i are skipped for good in that branch, so
    // each connected set is produced exactly once.
    fn extend(
        adj: &[Vec<usize>],
        candidates: &[usize],
        size: usize,
        banned: &mut [bool],
        counts: &mut [u64],
    ) {
        counts[size - 1] += 1;
        if size == counts.len() {
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            let mut next = candidates[i + 1..].to_vec();
            let mut added = Vec::new();
            for &w in &adj[v] {
                if !banned[w] {
                    banned[w] = true;
                    added.push(w);
                }
            }
            next.extend(&added);
            extend(adj, &next, size + 1, banned, counts);
            for w in added {
                banned[w] = false;
            }
        }
    }
    let mut counts = vec![0u64; max_n];
    let mut banned = vec![false; adj.len()];
    banned[0] = true;
    for &w in &adj[0] {
        banned[w] = true;
    }
    extend(&adj, &adj[0].clone(), 1, &mut banned, &mut counts);
    counts
}
