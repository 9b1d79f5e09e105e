use serde::Serialize;

use super::{bit, members, Graph, VertexSet};
use crate::error::{Error, Result};
use crate::json;
use crate::poly::IntPolynomial;

/// Maximum degree together with the neighborhood independent-set counts
/// `t_k` (k = 1..Δ) and `t̃_k` (k = 1..Δ−1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborhoodProfile {
    #[serde(serialize_with = "json::display")]
    pub delta: usize,
    #[serde(serialize_with = "json::u64_strings")]
    pub t: Vec<u64>,
    #[serde(serialize_with = "json::u64_strings")]
    pub t_tilde: Vec<u64>,
}

impl NeighborhoodProfile {
    /// The worst case `t_k = C(Δ,k)`, `t̃_k = C(Δ−1,k)`, attained by a
    /// triangle-free vertex of degree Δ.
    pub fn binomial(delta: usize) -> Self {
        let row = |m: usize, len: usize| (1..=len).map(|k| binomial(m, k)).collect();
        NeighborhoodProfile {
            delta,
            t: row(delta, delta),
            t_tilde: row(delta.saturating_sub(1), delta.saturating_sub(1)),
        }
    }

    /// `Z(u) = 1 + Σ t_k u^k`.
    pub fn z(&self) -> IntPolynomial {
        IntPolynomial::from_counts(&self.t)
    }

    /// `Z̃(u) = 1 + Σ t̃_k u^k`.
    pub fn z_tilde(&self) -> IntPolynomial {
        IntPolynomial::from_counts(&self.t_tilde)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Number of independent subsets of `set`, by cardinality.
fn independent_counts(g: &Graph, set: VertexSet, out: &mut [u64]) {
    fn walk(g: &Graph, rest: VertexSet, size: usize, out: &mut [u64]) {
        out[size] += 1;
        for v in members(rest) {
            // Only later vertices may join, so each set is produced once.
            let later = rest & !((bit(v) << 1) - 1);
            walk(g, later & !g.neighbor_set(v), size + 1, out);
        }
    }
    walk(g, set, 0, out);
}

pub fn neighborhood_profile(g: &Graph) -> Result<NeighborhoodProfile> {
    let delta = g.max_degree();
    if delta == 0 {
        return Err(Error::EdgelessProfile);
    }
    let mut t = vec![0u64; delta];
    let mut t_tilde = vec![0u64; delta - 1];
    let mut counts = vec![0u64; delta + 1];
    for v0 in 0..g.vertex_count() {
        let nb = g.neighbor_set(v0);
        let d = g.degree(v0);
        counts.iter_mut().for_each(|c| *c = 0);
        independent_counts(g, nb, &mut counts);
        for k in 1..=d {
            t[k - 1] = t[k - 1].max(counts[k]);
        }
        if d >= 2 {
            for v in members(nb) {
                counts.iter_mut().for_each(|c| *c = 0);
                independent_counts(g, nb & !bit(v), &mut counts);
                for k in 1..d {
                    t_tilde[k - 1] = t_tilde[k - 1].max(counts[k]);
                }
            }
        }
    }
    Ok(NeighborhoodProfile { delta, t, t_tilde })
}
