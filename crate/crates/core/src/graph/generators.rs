use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// `K_{1,k}` with `k` leaves.
    Star(usize),
    Grid { rows: usize, cols: usize },
    Petersen,
    RandomRegular { n: usize, degree: usize, seed: u64 },
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Path(n) => write!(f, "path({n})"),
            Family::Star(k) => write!(f, "star({k})"),
            Family::Grid { rows, cols } => write!(f, "grid({rows}x{cols})"),
            Family::Petersen => write!(f, "petersen"),
            Family::RandomRegular { n, degree, seed } => {
                write!(f, "random-regular({n},{degree},seed={seed})")
            }
        }
    }
}

const REGULAR_ATTEMPTS: usize = 10_000;

pub fn generate_graph(family: &Family) -> Result<Graph> {
    let invalid = |m: String| Err(Error::InvalidParameter(m));
    match *family {
        Family::Complete(n) => {
            if n == 0 {
                return invalid("complete graph needs n ≥ 1".into());
            }
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return invalid(format!("cycle length must be ≥ 3, got {n}"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Path(n) => {
            if n == 0 {
                return invalid("path needs n ≥ 1".into());
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Star(k) => {
            if k == 0 {
                return invalid("star needs at least one leaf".into());
            }
            Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
        }
        Family::Grid { rows, cols } => {
            if rows == 0 || cols == 0 {
                return invalid("grid dimensions must be positive".into());
            }
            let id = |r: usize, c: usize| r * cols + c;
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            Graph::from_edges(rows * cols, edges)
        }
        Family::Petersen => {
            // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
            let pairs: Vec<u32> = (0..5)
                .flat_map(|a| (a + 1..5).map(move |b| (1u32 << a) | (1u32 << b)))
                .collect();
            let mut edges = Vec::new();
            for (i, &p) in pairs.iter().enumerate() {
                for (j, &r) in pairs.iter().enumerate().skip(i + 1) {
                    if p & r == 0 {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(10, edges)
        }
        Family::RandomRegular { n, degree, seed } => random_regular(n, degree, seed),
    }
}

/// Configuration-model pairing, rejecting loops and repeated pairs.
fn random_regular(n: usize, degree: usize, seed: u64) -> Result<Graph> {
    if degree >= n || !(n * degree).is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "no {degree}-regular graph on {n} vertices (need degree < n and degree·n even)"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, degree)).collect();
    'attempt: for _ in 0..REGULAR_ATTEMPTS {
        stubs.shuffle(&mut rng);
        let mut g = Graph::empty(n)?;
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt;
            }
            g.insert_edge(u, v);
        }
        return Ok(g);
    }
    Err(Error::InvalidParameter(format!(
        "no simple {degree}-regular pairing found in {REGULAR_ATTEMPTS} attempts"
    )))
}
