//! Hard-core polymer representation of the chromatic polynomial.
//!
//! Polymers ("monomers") are vertex sets of size ≥ 2 inducing connected
//! subgraphs. Each carries the activity `S_γ / q^{|γ|−1}`, where `S_γ` is the
//! signed count of connected spanning subgraphs of the induced graph. `S`
//! is also computed through Penrose trees, which gives an independent
//! cross-check of the enumeration.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, connected_subsets, members, neighborhood_profile, Graph, VertexSet};
use crate::series;

pub const MAX_SIGNED_SUM_EDGES: usize = 24;
pub const HARDCORE_VERTEX_CAP: usize = 8;

/// `Σ (−1)^{|E′|}` over connected spanning subgraphs `G′` of `g`.
///
/// Edges are decided in order; excluding an edge is allowed only while the
/// kept-plus-undecided edges still connect every vertex, so every leaf of the
/// search is a connected spanning subgraph.
pub fn signed_connected_sum(g: &Graph) -> Result<i64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges = g.edges();
    if edges.len() > MAX_SIGNED_SUM_EDGES {
        return Err(Error::Resource {
            what: "edge count",
            limit: MAX_SIGNED_SUM_EDGES,
        });
    }
    fn walk(g: &mut Graph, edges: &[(usize, usize)], i: usize, kept: usize) -> i64 {
        if i == edges.len() {
            return if kept.is_multiple_of(2) { 1 } else { -1 };
        }
        let (u, v) = edges[i];
        let mut total = walk(g, edges, i + 1, kept + 1);
        g.remove_edge(u, v);
        if g.is_connected() {
            total += walk(g, edges, i + 1, kept);
        }
        g.insert_edge(u, v);
        total
    }
    let mut work = g.clone();
    Ok(walk(&mut work, &edges, 0, 0))
}

/// A spanning tree of `host`, rooted, with predecessor and generation maps.
#[derive(Clone, Debug)]
pub struct RootedSpanningTree<'g> {
    pub host: &'g Graph,
    pub root: usize,
    /// `None` for the root.
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<usize>,
}

impl<'g> RootedSpanningTree<'g> {
    fn from_edges(host: &'g Graph, root: usize, edges: &[(usize, usize)]) -> Self {
        let n = host.vertex_count();
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = bit(root);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in members(adj[u] & !seen) {
                seen |= bit(w);
                parent[w] = Some(u);
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
        RootedSpanningTree {
            host,
            root,
            parent,
            depth,
        }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self
            .parent
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (i.min(p), i.max(p))))
            .collect();
        e.sort_unstable();
        e
    }

    /// Spanning tree of `host`, with depths consistent with parents.
    pub fn is_valid(&self) -> bool {
        let n = self.host.vertex_count();
        let edges = self.edges();
        edges.len() + 1 == n
            && edges.iter().all(|&(u, v)| self.host.has_edge(u, v))
            && self.depth[self.root] == 0
            && (0..n).all(|i| match self.parent[i] {
                None => i == self.root,
                Some(p) => self.depth[i] == self.depth[p] + 1,
            })
    }
}

/// Every spanning tree of `g`, rooted at vertex 0.
pub fn enumerate_spanning_trees(g: &Graph) -> Result<std::vec::IntoIter<RootedSpanningTree<'_>>> {
    enumerate_spanning_trees_rooted(g, 0)
}

/// Spanning trees by edge inclusion/exclusion: an edge closing a cycle is
/// skipped, and an edge may only be dropped while the remaining candidate
/// edges still connect the graph (so bridges are forced).
pub fn enumerate_spanning_trees_rooted(
    g: &Graph,
    root: usize,
) -> Result<std::vec::IntoIter<RootedSpanningTree<'_>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if root >= g.vertex_count() {
        return Err(Error::InvalidParameter(format!("root {root} out of range")));
    }
    let edges = g.edges();
    let n = g.vertex_count();
    let mut found: Vec<Vec<(usize, usize)>> = Vec::new();

    fn find(comp: &[usize], mut v: usize) -> usize {
        while comp[v] != v {
            v = comp[v];
        }
        v
    }
    struct Ctx<'a> {
        n: usize,
        edges: &'a [(usize, usize)],
        found: &'a mut Vec<Vec<(usize, usize)>>,
    }
    fn walk(ctx: &mut Ctx<'_>, avail: &mut Graph, i: usize, comp: &mut Vec<usize>, chosen: &mut Vec<(usize, usize)>) {
        if chosen.len() + 1 == ctx.n {
            ctx.found.push(chosen.clone());
            return;
        }
        if i == ctx.edges.len() {
            return;
        }
        let (u, v) = ctx.edges[i];
        let (ru, rv) = (find(comp, u), find(comp, v));
        if ru != rv {
            let saved = comp.clone();
            comp[ru] = rv;
            chosen.push((u, v));
            walk(ctx, avail, i + 1, comp, chosen);
            chosen.pop();
            *comp = saved;
        }
        avail.remove_edge(u, v);
        if avail.is_connected() {
            walk(ctx, avail, i + 1, comp, chosen);
        }
        avail.insert_edge(u, v);
    }

    let mut ctx = Ctx {
        n,
        edges: &edges,
        found: &mut found,
    };
    let mut avail = g.clone();
    let mut comp: Vec<usize> = (0..n).collect();
    walk(&mut ctx, &mut avail, 0, &mut comp, &mut Vec::with_capacity(n));

    let trees: Vec<_> = found
        .iter()
        .map(|e| RootedSpanningTree::from_edges(g, root, e))
        .collect();
    Ok(trees.into_iter())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TreeClass {
    Penrose,
    WeaklyPenroseOnly,
    Neither,
}

/// Penrose: no host edge joins two vertices of equal depth, and no host edge
/// `{i, j}` has `depth(j) = depth(i) − 1` with `j > parent(i)`.
/// Weakly Penrose: no host edge joins two children of one parent.
pub fn classify_tree(t: &RootedSpanningTree<'_>) -> TreeClass {
    let g = t.host;
    let mut same_depth = false;
    let mut later_predecessor = false;
    let mut siblings = false;
    for (i, j) in g.edges() {
        let (di, dj) = (t.depth[i], t.depth[j]);
        if di == dj {
            same_depth = true;
            if t.parent[i] == t.parent[j] {
                siblings = true;
            }
        }
        for (a, b) in [(i, j), (j, i)] {
            // b one generation above a, but not a's predecessor and larger than it
            if t.depth[b] + 1 == t.depth[a] && t.parent[a].is_some_and(|p| b > p) {
                later_predecessor = true;
            }
        }
    }
    if !same_depth && !later_predecessor {
        TreeClass::Penrose
    } else if !siblings {
        TreeClass::WeaklyPenroseOnly
    } else {
        TreeClass::Neither
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PenroseReport {
    #[serde(serialize_with = "crate::json::display")]
    pub root: usize,
    #[serde(serialize_with = "crate::json::display")]
    pub s_value: i64,
    #[serde(serialize_with = "crate::json::display")]
    pub tree_count: u64,
    #[serde(serialize_with = "crate::json::display")]
    pub penrose_count: u64,
    #[serde(serialize_with = "crate::json::display")]
    pub weak_penrose_count: u64,
}

impl PenroseReport {
    pub fn identity_holds(&self, n: usize) -> bool {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        self.s_value == sign * self.penrose_count as i64
    }

    pub fn chain_holds(&self) -> bool {
        self.s_value.unsigned_abs() <= self.weak_penrose_count
            && self.penrose_count <= self.weak_penrose_count
            && self.weak_penrose_count <= self.tree_count
    }
}

pub fn penrose_report(g: &Graph) -> Result<PenroseReport> {
    penrose_report_rooted(g, 0)
}

pub fn penrose_report_rooted(g: &Graph, root: usize) -> Result<PenroseReport> {
    let s_value = signed_connected_sum(g)?;
    let mut report = PenroseReport {
        root,
        s_value,
        tree_count: 0,
        penrose_count: 0,
        weak_penrose_count: 0,
    };
    for t in enumerate_spanning_trees_rooted(g, root)? {
        report.tree_count += 1;
        match classify_tree(&t) {
            TreeClass::Penrose => {
                report.penrose_count += 1;
                report.weak_penrose_count += 1;
            }
            TreeClass::WeaklyPenroseOnly => report.weak_penrose_count += 1,
            TreeClass::Neither => {}
        }
    }
    Ok(report)
}

/// A vertex set of size ≥ 2 that induces a connected subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomer {
    vertices: VertexSet,
}

impl Monomer {
    pub fn new(g: &Graph, vertices: VertexSet) -> Result<Self> {
        if vertices & !g.vertices() != 0 {
            return Err(Error::InvalidParameter("monomer vertex out of range".into()));
        }
        if vertices.count_ones() < 2 || !g.induces_connected(vertices) {
            return Err(Error::InvalidParameter(
                "monomers need ≥ 2 vertices inducing a connected subgraph".into(),
            ));
        }
        Ok(Monomer { vertices })
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.count_ones() as usize
    }
}

/// `z_γ(q) = S_γ · q^{−power}` kept exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Activity {
    pub s: i64,
    pub power: u32,
}

impl Activity {
    pub fn at(&self, q: Complex64) -> Result<Complex64> {
        if q == Complex64::zero() {
            return Err(Error::ZeroActivity);
        }
        Ok(Complex64::from(self.s as f64) / q.powu(self.power))
    }

    pub fn at_rational(&self, q: &BigRational) -> Result<BigRational> {
        if q.is_zero() {
            return Err(Error::ZeroActivity);
        }
        Ok(BigRational::from_integer(BigInt::from(self.s)) / q.pow(self.power as i32))
    }
}

pub fn activity_exact(g: &Graph, m: &Monomer) -> Result<Activity> {
    Ok(Activity {
        s: signed_connected_sum(&g.induced(m.vertices))?,
        power: m.size() as u32 - 1,
    })
}

pub fn activity(g: &Graph, m: &Monomer, q: Complex64) -> Result<Complex64> {
    if q == Complex64::zero() {
        return Err(Error::ZeroActivity);
    }
    activity_exact(g, m)?.at(q)
}

/// Every monomer of `g` with its exact activity.
pub fn monomers(g: &Graph) -> Result<Vec<(Monomer, Activity)>> {
    let mut out = Vec::new();
    for size in 2..=g.vertex_count() {
        for v0 in 0..g.vertex_count() {
            // smallest member is v0, so each set appears once
            let below = bit(v0) - 1;
            for set in connected_subsets(g, v0, size).filter(|s| s & below == 0) {
                let m = Monomer { vertices: set };
                out.push((m, activity_exact(g, &m)?));
            }
        }
    }
    Ok(out)
}

pub fn hardcore_partition(g: &Graph, q: &BigRational) -> Result<BigRational> {
    hardcore_partition_capped(g, q, HARDCORE_VERTEX_CAP)
}

/// `Ξ_G(q)`: sum over collections of pairwise-disjoint monomers of the
/// product of activities. Recurses on the smallest uncovered vertex, which
/// is either left alone or covered by a monomer inside the remaining set.
pub fn hardcore_partition_capped(g: &Graph, q: &BigRational, vertex_cap: usize) -> Result<BigRational> {
    if g.vertex_count() > vertex_cap {
        return Err(Error::Resource {
            what: "vertex count",
            limit: vertex_cap,
        });
    }
    if q.is_zero() {
        return Err(Error::ZeroActivity);
    }
    let n = g.vertex_count();
    let mut by_min: Vec<Vec<(VertexSet, BigRational)>> = vec![Vec::new(); n];
    for (m, a) in monomers(g)? {
        by_min[m.vertices.trailing_zeros() as usize].push((m.vertices, a.at_rational(q)?));
    }
    fn xi(
        rest: VertexSet,
        by_min: &[Vec<(VertexSet, BigRational)>],
        memo: &mut HashMap<VertexSet, BigRational>,
    ) -> BigRational {
        if rest == 0 {
            return BigRational::one();
        }
        if let Some(v) = memo.get(&rest) {
            return v.clone();
        }
        let v = rest.trailing_zeros() as usize;
        let mut total = xi(rest & !bit(v), by_min, memo);
        for (set, z) in &by_min[v] {
            if set & !rest == 0 {
                total += z * xi(rest & !set, by_min, memo);
            }
        }
        memo.insert(rest, total.clone());
        total
    }
    Ok(xi(g.vertices(), &by_min, &mut HashMap::new()))
}

/// `max_x Σ_{γ ∋ x, |γ| = n} |S_γ|`, i.e. `C_n^q · q^{n−1}`.
pub fn cq_scaled(g: &Graph, n: usize) -> Result<u64> {
    cq_scaled_all(g, n).map(|v| v.into_iter().max().unwrap_or(0))
}

/// Per-vertex sums `Σ_{γ ∋ x, |γ| = n} |S_γ|`.
fn cq_scaled_all(g: &Graph, n: usize) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::InvalidParameter("polymer size must be ≥ 2".into()));
    }
    let mut per_vertex = vec![0u64; g.vertex_count()];
    for v0 in 0..g.vertex_count() {
        let below = bit(v0) - 1;
        for set in connected_subsets(g, v0, n).filter(|s| s & below == 0) {
            let s = signed_connected_sum(&g.induced(set))?.unsigned_abs();
            for x in members(set) {
                per_vertex[x] += s;
            }
        }
    }
    Ok(per_vertex)
}

/// `C_n^q = max_x Σ_{γ ∋ x, |γ| = n} |z_γ(q)|`.
pub fn cq_norm(g: &Graph, n: usize, q: f64) -> Result<f64> {
    if q.is_nan() || q <= 0.0 {
        return Err(Error::InvalidParameter(format!("q must be positive, got {q}")));
    }
    Ok(cq_scaled(g, n)? as f64 / q.powi(n as i32 - 1))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CnBoundReport {
    #[serde(serialize_with = "crate::json::display")]
    pub n: usize,
    pub q: f64,
    /// `C_n^q`.
    pub lhs: f64,
    /// `t̄_n / q^{n−1}`.
    pub rhs: f64,
    /// `C_n^q · q^{n−1}` as an exact integer.
    #[serde(serialize_with = "crate::json::display")]
    pub lhs_scaled: u64,
    #[serde(serialize_with = "crate::json::display")]
    pub tbar_n: BigInt,
    pub holds: bool,
}

/// Checks `C_n^q ≤ t̄_n / q^{n−1}`; the comparison is made on the exact
/// integers `C_n^q·q^{n−1}` and `t̄_n`.
pub fn verify_cn_bound(g: &Graph, n: usize, q: f64) -> Result<CnBoundReport> {
    if q.is_nan() || q <= 0.0 {
        return Err(Error::InvalidParameter(format!("q must be positive, got {q}")));
    }
    let profile = neighborhood_profile(g)?;
    let tbar = series::profile_series(&profile, n)?;
    let tbar_n = tbar.coeff(n);
    let lhs_scaled = cq_scaled(g, n)?;
    let scale = q.powi(n as i32 - 1);
    let tbar_f = num_traits::ToPrimitive::to_f64(&tbar_n).unwrap_or(f64::INFINITY);
    Ok(CnBoundReport {
        n,
        q,
        lhs: lhs_scaled as f64 / scale,
        rhs: tbar_f / scale,
        lhs_scaled,
        holds: BigInt::from(lhs_scaled) <= tbar_n,
        tbar_n,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FpStatus {
    Satisfied,
    Violated,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FpCertificate {
    pub status: FpStatus,
    pub q: f64,
    pub a: f64,
    #[serde(serialize_with = "crate::json::display")]
    pub order: usize,
    #[serde(serialize_with = "crate::json::display")]
    pub delta: usize,
    /// `Σ_{n=2}^{N} e^{an} C_n^q`, exact enumeration.
    pub head: f64,
    /// Certified bound on `Σ_{n>N}`, when the geometric ratio is below 1.
    pub tail: Option<f64>,
    /// `e^{1+a} Δ / q`.
    pub ratio: f64,
    /// `e^a − 1`.
    pub threshold: f64,
    pub reason: String,
}

/// Convergence criterion `Σ_{n≥2} e^{an} C_n^q ≤ e^a − 1`.
///
/// Terms up to `order` are enumerated. Beyond it, `C_n^q ≤ (n^{n−1}/n!)(Δ/q)^{n−1}
/// ≤ e^{n−1}(Δ/q)^{n−1}` bounds the tail by a geometric series of ratio
/// `e^{1+a}Δ/q`, which only certifies when `q > eΔ`.
pub fn check_fp_condition(g: &Graph, q: f64, a: f64, order: usize) -> Result<FpCertificate> {
    if q.is_nan() || q <= 0.0 || a.is_nan() || a <= 0.0 {
        return Err(Error::InvalidParameter(format!("need q > 0 and a > 0, got q={q}, a={a}")));
    }
    if order < 2 {
        return Err(Error::InvalidParameter("truncation order must be ≥ 2".into()));
    }
    let delta = g.max_degree();
    let mut head = 0.0;
    for n in 2..=order.min(g.vertex_count()) {
        head += (a * n as f64).exp() * cq_norm(g, n, q)?;
    }
    let threshold = a.exp_m1();
    let ratio = (1.0 + a).exp() * delta as f64 / q;
    let mut cert = FpCertificate {
        status: FpStatus::Inconclusive,
        q,
        a,
        order,
        delta,
        head,
        tail: None,
        ratio,
        threshold,
        reason: String::new(),
    };
    if head > threshold {
        cert.status = FpStatus::Violated;
        cert.reason = "enumerated head alone exceeds e^a − 1".into();
        return Ok(cert);
    }
    if q <= std::f64::consts::E * delta as f64 {
        cert.reason = "q ≤ eΔ: tail not certifiable".into();
        return Ok(cert);
    }
    if ratio >= 1.0 {
        cert.reason = "geometric tail ratio e^{1+a}Δ/q ≥ 1".into();
        return Ok(cert);
    }
    let tail = a.exp() * ratio.powi(order as i32) / (1.0 - ratio);
    cert.tail = Some(tail);
    if head + tail <= threshold {
        cert.status = FpStatus::Satisfied;
        cert.reason = "head + certified tail ≤ e^a − 1".into();
    } else {
        cert.reason = "head + certified tail exceeds e^a − 1".into();
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_graph, Family};

    fn fam(f: Family) -> Graph {
        generate_graph(&f).unwrap()
    }

    /// Brute-force S over every edge subset.
    fn subset_sum(g: &Graph) -> i64 {
        let edges = g.edges();
        let mut total = 0;
        for mask in 0u32..(1 << edges.len()) {
            let kept = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let h = Graph::from_edges(g.vertex_count(), kept).unwrap();
            if h.is_connected() {
                total += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            }
        }
        total
    }

    #[test]
    fn signed_sums() {
        assert_eq!(signed_connected_sum(&fam(Family::Path(2))).unwrap(), -1);
        assert_eq!(signed_connected_sum(&fam(Family::Complete(3))).unwrap(), 2);
        assert_eq!(signed_connected_sum(&fam(Family::Cycle(4))).unwrap(), -3);
        assert_eq!(signed_connected_sum(&Graph::empty(1).unwrap()).unwrap(), 1);
        for g in [fam(Family::Complete(4)), fam(Family::Petersen), fam(Family::Grid { rows: 2, cols: 3 })] {
            assert_eq!(signed_connected_sum(&g).unwrap(), subset_sum(&g));
        }
    }

    #[test]
    fn signed_sum_errors() {
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(signed_connected_sum(&two), Err(Error::Disconnected)));
        assert!(matches!(
            signed_connected_sum(&fam(Family::Complete(8))),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn spanning_tree_counts() {
        assert_eq!(enumerate_spanning_trees(&fam(Family::Complete(3))).unwrap().count(), 3);
        assert_eq!(enumerate_spanning_trees(&fam(Family::Complete(4))).unwrap().count(), 16);
        assert_eq!(enumerate_spanning_trees(&fam(Family::Star(4))).unwrap().count(), 1);
        assert_eq!(enumerate_spanning_trees(&fam(Family::Petersen)).unwrap().count(), 2000);
        for t in enumerate_spanning_trees(&fam(Family::Complete(4))).unwrap() {
            assert!(t.is_valid());
            assert_eq!(t.root, 0);
        }
    }

    #[test]
    fn classification_examples() {
        let k3 = fam(Family::Complete(3));
        let star = RootedSpanningTree::from_edges(&k3, 0, &[(0, 1), (0, 2)]);
        assert_eq!(classify_tree(&star), TreeClass::Neither);
        let path = RootedSpanningTree::from_edges(&k3, 0, &[(0, 1), (1, 2)]);
        assert_eq!(classify_tree(&path), TreeClass::Penrose);
        let tree = fam(Family::Path(5));
        let t = enumerate_spanning_trees(&tree).unwrap().next().unwrap();
        assert_eq!(classify_tree(&t), TreeClass::Penrose);
    }

    #[test]
    fn reports() {
        let r = penrose_report(&fam(Family::Complete(3))).unwrap();
        assert_eq!((r.s_value, r.tree_count, r.penrose_count, r.weak_penrose_count), (2, 3, 2, 2));
        let r = penrose_report(&fam(Family::Cycle(4))).unwrap();
        assert_eq!((r.s_value, r.tree_count, r.penrose_count, r.weak_penrose_count), (-3, 4, 3, 4));
        let r = penrose_report(&fam(Family::Complete(4))).unwrap();
        assert_eq!((r.s_value, r.tree_count, r.penrose_count), (-6, 16, 6));
        assert!(r.identity_holds(4) && r.chain_holds());
    }

    #[test]
    fn activities() {
        let k3 = fam(Family::Complete(3));
        let q = Complex64::new(10.0, 0.0);
        let edge = Monomer::new(&k3, 0b011).unwrap();
        assert_eq!(activity(&k3, &edge, q).unwrap(), Complex64::new(-0.1, 0.0));
        let tri = Monomer::new(&k3, 0b111).unwrap();
        assert_eq!(activity_exact(&k3, &tri).unwrap(), Activity { s: 2, power: 2 });
        let c4 = fam(Family::Cycle(4));
        let whole = Monomer::new(&c4, 0b1111).unwrap();
        assert_eq!(activity_exact(&c4, &whole).unwrap(), Activity { s: -3, power: 3 });
        assert!(matches!(activity(&k3, &edge, Complex64::zero()), Err(Error::ZeroActivity)));
        assert!(Monomer::new(&c4, 0b0101).is_err());
        assert!(Monomer::new(&c4, 0b0001).is_err());
    }

    #[test]
    fn hardcore_examples() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let k2 = fam(Family::Path(2));
        assert_eq!(hardcore_partition(&k2, &r(5, 1)).unwrap(), r(4, 5));
        let k3 = fam(Family::Complete(3));
        assert_eq!(hardcore_partition(&k3, &r(10, 1)).unwrap(), r(72, 100));
        let e = Graph::empty(3).unwrap();
        assert_eq!(hardcore_partition(&e, &r(7, 3)).unwrap(), r(1, 1));
        assert!(hardcore_partition(&fam(Family::Petersen), &r(3, 1)).is_err());
        assert!(hardcore_partition(&k3, &r(0, 1)).is_err());
    }

    #[test]
    fn cq_examples() {
        let k3 = fam(Family::Complete(3));
        assert!((cq_norm(&k3, 2, 10.0).unwrap() - 0.2).abs() < 1e-15);
        assert!((cq_norm(&k3, 3, 10.0).unwrap() - 0.02).abs() < 1e-15);
        assert_eq!(cq_norm(&k3, 4, 10.0).unwrap(), 0.0);
        assert!(cq_norm(&k3, 1, 10.0).is_err());
    }

    #[test]
    fn cn_bound_examples() {
        let k3 = fam(Family::Complete(3));
        for n in [2, 3] {
            let r = verify_cn_bound(&k3, n, 10.0).unwrap();
            assert_eq!((r.lhs_scaled, r.tbar_n.clone()), (2, BigInt::from(2)));
            assert!(r.holds);
        }
        let r = verify_cn_bound(&fam(Family::Star(3)), 2, 10.0).unwrap();
        assert_eq!((r.lhs_scaled, r.tbar_n), (3, BigInt::from(3)));
    }

    #[test]
    fn fp_examples() {
        let k3 = fam(Family::Complete(3));
        let violated = check_fp_condition(&k3, 1.0, 0.5, 8).unwrap();
        assert_eq!(violated.status, FpStatus::Violated);
        // a = −ln(2 − Z(x*)) with x* = (√6 − 2)/2 the minimizer for K3
        let a = -(3.0 - 6f64.sqrt()).ln();
        let ok = check_fp_condition(&k3, 11.0, a, 64).unwrap();
        assert_eq!(ok.status, FpStatus::Satisfied, "{ok:?}");
        assert!(ok.head + ok.tail.unwrap() <= ok.threshold);
        // q > eΔ but the geometric ratio is ≥ 1
        let steep = check_fp_condition(&k3, 11.0, 0.8, 64).unwrap();
        assert_eq!(steep.status, FpStatus::Inconclusive);
        assert!(steep.ratio >= 1.0 && steep.tail.is_none());
        for q in [1.0, 3.0, 5.4] {
            for a in [0.05, 0.3, 1.0] {
                let c = check_fp_condition(&k3, q, a, 8).unwrap();
                assert_ne!(c.status, FpStatus::Satisfied);
            }
        }
        assert!(check_fp_condition(&k3, 11.0, 0.0, 8).is_err());
        assert!(check_fp_condition(&k3, -1.0, 0.3, 8).is_err());
    }
}
