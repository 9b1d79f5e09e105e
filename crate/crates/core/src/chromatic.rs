//! Exact chromatic polynomials and a brute-force coloring count.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{bit, canonical_form, members, CanonicalForm, Graph};
use crate::poly::IntPolynomial;

pub const DEFAULT_VERTEX_CAP: usize = 18;
pub const ORACLE_VERTEX_CAP: usize = 10;
pub const ORACLE_COLOR_CAP: u32 = 6;

/// Canonical-form searches beyond this many leaves skip the cache.
const MEMO_LEAF_BUDGET: usize = 256;

pub fn chromatic_polynomial(g: &Graph) -> Result<IntPolynomial> {
    chromatic_polynomial_capped(g, DEFAULT_VERTEX_CAP)
}

pub fn chromatic_polynomial_capped(g: &Graph, vertex_cap: usize) -> Result<IntPolynomial> {
    if g.vertex_count() > vertex_cap {
        return Err(Error::Resource {
            what: "vertex count",
            limit: vertex_cap,
        });
    }
    Ok(DeletionContraction::default().solve(g))
}

/// Memoized deletion–contraction, cache confined to one computation.
#[derive(Default)]
struct DeletionContraction {
    memo: HashMap<CanonicalForm, IntPolynomial>,
}

impl DeletionContraction {
    fn solve(&mut self, g: &Graph) -> IntPolynomial {
        let n = g.vertex_count();
        if n == 0 {
            return IntPolynomial::one();
        }
        let components = g.components();
        if components.len() > 1 {
            return components
                .into_iter()
                .fold(IntPolynomial::one(), |acc, c| &acc * &self.solve(&g.induced(c)));
        }
        let m = g.edge_count();
        if m == 0 {
            return IntPolynomial::monomial(n);
        }
        if m == n - 1 {
            return &IntPolynomial::monomial(1) * &IntPolynomial::linear_root(1).pow(n - 1);
        }
        if m == n * (n - 1) / 2 {
            return IntPolynomial::falling_factorial(n);
        }
        // A vertex whose neighbors form a clique of size k leaves q − k colors.
        if let Some(v) = (0..n).find(|&v| is_clique(g, g.neighbor_set(v))) {
            let k = g.degree(v) as i64;
            return &IntPolynomial::linear_root(k) * &self.solve(&g.without_vertex(v));
        }

        let key = canonical_form(g, Some(MEMO_LEAF_BUDGET));
        if let Some(p) = key.as_ref().and_then(|k| self.memo.get(k)) {
            return p.clone();
        }
        let (u, v) = branch_edge(g);
        let deleted = self.solve(&g.without_edge(u, v));
        let contracted = self.solve(&g.contract_edge(u, v));
        let p = &deleted - &contracted;
        if let Some(k) = key {
            self.memo.insert(k, p.clone());
        }
        p
    }
}

fn is_clique(g: &Graph, set: u64) -> bool {
    members(set).all(|v| (g.neighbor_set(v) | bit(v)) & set == set)
}

/// Edge from a minimum-degree vertex to its highest-degree neighbor.
fn branch_edge(g: &Graph) -> (usize, usize) {
    let u = (0..g.vertex_count())
        .filter(|&v| g.degree(v) > 0)
        .min_by_key(|&v| g.degree(v))
        .expect("graph has edges");
    let v = g.neighbors(u).max_by_key(|&w| g.degree(w)).expect("u has a neighbor");
    (u, v)
}

/// Number of proper colorings with `q` colors, by exhaustive assignment.
pub fn count_proper_colorings(g: &Graph, q: u32) -> Result<BigInt> {
    count_proper_colorings_capped(g, q, ORACLE_VERTEX_CAP, ORACLE_COLOR_CAP)
}

pub fn count_proper_colorings_capped(
    g: &Graph,
    q: u32,
    vertex_cap: usize,
    color_cap: u32,
) -> Result<BigInt> {
    if g.vertex_count() > vertex_cap {
        return Err(Error::Resource {
            what: "vertex count",
            limit: vertex_cap,
        });
    }
    if q > color_cap {
        return Err(Error::Resource {
            what: "color count",
            limit: color_cap as usize,
        });
    }
    fn extend(g: &Graph, v: usize, q: u32, colors: &mut Vec<u32>, count: &mut BigInt) {
        if v == g.vertex_count() {
            *count += 1;
            return;
        }
        for c in 0..q {
            if g.neighbors(v).filter(|&w| w < v).all(|w| colors[w] != c) {
                colors.push(c);
                extend(g, v + 1, q, colors, count);
                colors.pop();
            }
        }
    }
    let mut count = BigInt::zero();
    extend(g, 0, q, &mut Vec::with_capacity(g.vertex_count()), &mut count);
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_graph, Family};

    fn fam(f: Family) -> Graph {
        generate_graph(&f).unwrap()
    }

    #[test]
    fn oracle_counts() {
        let k3 = fam(Family::Complete(3));
        assert_eq!(count_proper_colorings(&k3, 3).unwrap(), BigInt::from(6));
        assert_eq!(count_proper_colorings(&k3, 2).unwrap(), BigInt::zero());
        let c5 = fam(Family::Cycle(5));
        assert_eq!(count_proper_colorings(&c5, 2).unwrap(), BigInt::zero());
    }

    #[test]
    fn oracle_caps() {
        let k3 = fam(Family::Complete(3));
        assert!(count_proper_colorings(&k3, 7).is_err());
        let p = fam(Family::Petersen);
        assert!(count_proper_colorings_capped(&p, 3, 9, 6).is_err());
    }

    #[test]
    fn triangle_matches_interpolated_counts() {
        // counts at q = 0..3 are 0, 0, 0, 6; the cubic through them is q³ − 3q² + 2q
        let p = chromatic_polynomial(&fam(Family::Complete(3))).unwrap();
        assert_eq!(p, IntPolynomial::from_i64(&[0, 2, -3, 1]));
    }

    #[test]
    fn edgeless_and_four_cycle() {
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(chromatic_polynomial(&e3).unwrap(), IntPolynomial::monomial(3));
        // counts at q = 0..4: 0, 0, 2, 18, 84
        let c4 = chromatic_polynomial(&fam(Family::Cycle(4))).unwrap();
        assert_eq!(c4, IntPolynomial::from_i64(&[0, -3, 6, -4, 1]));
        let q_minus_1 = IntPolynomial::linear_root(1);
        assert_eq!(c4, &q_minus_1.pow(4) + &q_minus_1);
    }

    #[test]
    fn petersen_known_value() {
        // χ(Petersen) = 3 with 120 proper 3-colorings
        let p = chromatic_polynomial(&fam(Family::Petersen)).unwrap();
        assert_eq!(p.eval_int(&BigInt::from(2)), BigInt::zero());
        assert_eq!(p.eval_int(&BigInt::from(3)), BigInt::from(120));
        assert_eq!(p.degree(), Some(10));
        assert!(p.is_monic() && p.signs_alternate());
    }

    #[test]
    fn vertex_cap() {
        let g = fam(Family::Path(19));
        assert!(matches!(chromatic_polynomial(&g), Err(Error::Resource { .. })));
        assert!(chromatic_polynomial_capped(&g, 19).is_ok());
    }
}
