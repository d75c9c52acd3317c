//! Matchings and regular spanning subgraphs (d-factors).

mod gadget;
mod matching;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::params::ProbParams;

pub use gadget::d_factor;
pub use matching::max_matching;

/// Outcome of a d-factor search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorResult {
    pub found: bool,
    /// Sorted factor edges; empty when `found` is false.
    pub edges: Vec<Edge>,
    pub d: usize,
}

impl FactorResult {
    pub(crate) fn not_found(d: usize) -> Self {
        FactorResult {
            found: false,
            edges: Vec::new(),
            d,
        }
    }

    /// Checks that `edges` is a `d`-regular spanning subgraph of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if !self.found {
            return self.edges.is_empty();
        }
        let mut deg = vec![0; g.n()];
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.edges.len() {
            return false;
        }
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return false;
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.iter().all(|&x| x == self.d)
    }
}

/// Largest edge count accepted by [`d_factor_bruteforce`].
pub const BRUTEFORCE_MAX_EDGES: usize = 24;

/// Exhaustive search over edge subsets for a `d`-regular spanning subgraph.
/// Ground truth for [`d_factor`]; refuses graphs with more than
/// [`BRUTEFORCE_MAX_EDGES`] edges.
pub fn d_factor_bruteforce(g: &Graph, d: usize) -> Result<FactorResult> {
    if g.m() > BRUTEFORCE_MAX_EDGES {
        return Err(Error::SizeGuard(format!(
            "{} edges exceeds the exhaustive limit of {BRUTEFORCE_MAX_EDGES}",
            g.m()
        )));
    }
    let edges: Vec<Edge> = g.edges().collect();
    let mut deg = vec![0usize; g.n()];
    let mut chosen = Vec::new();

    fn go(
        i: usize,
        edges: &[Edge],
        d: usize,
        deg: &mut Vec<usize>,
        chosen: &mut Vec<Edge>,
    ) -> bool {
        if i == edges.len() {
            return deg.iter().all(|&x| x == d);
        }
        let (u, v) = edges[i];
        if deg[u] < d && deg[v] < d {
            deg[u] += 1;
            deg[v] += 1;
            chosen.push((u, v));
            if go(i + 1, edges, d, deg, chosen) {
                return true;
            }
            chosen.pop();
            deg[u] -= 1;
            deg[v] -= 1;
        }
        go(i + 1, edges, d, deg, chosen)
    }

    if go(0, &edges, d, &mut deg, &mut chosen) {
        Ok(FactorResult {
            found: true,
            edges: chosen,
            d,
        })
    } else {
        Ok(FactorResult::not_found(d))
    }
}

/// Sufficient condition for `G(n, p)` to contain a fixed graph of maximum
/// degree `delta` with probability at least `1 - 1/n`:
/// `(delta^2 + 1)^2 < n` and `p^delta > 10 ln(t) / t` with
/// `t = floor(n / (delta^2 + 1))`. Natural logarithm.
pub fn af_embedding_condition(n: u64, delta: u64, params: &ProbParams) -> bool {
    let block = delta * delta + 1;
    if block.saturating_mul(block) >= n {
        return false;
    }
    let t = (n / block) as f64;
    params.p().powi(delta as i32) > 10.0 * t.ln() / t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{sample_gnp, RngSeed};

    #[test]
    fn bruteforce_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let r = d_factor_bruteforce(&c5, 2).unwrap();
        assert!(r.found && r.is_valid_for(&c5));
        assert!(!d_factor_bruteforce(&Graph::path(4), 2).unwrap().found);
        assert!(d_factor_bruteforce(&Graph::complete(8), 3).is_err());
    }

    #[test]
    fn af_examples() {
        let half = ProbParams::new(0.5).unwrap();
        for p in [0.1, 0.5, 0.99] {
            assert!(!af_embedding_condition(16, 2, &ProbParams::new(p).unwrap()));
        }
        assert!(af_embedding_condition(1000, 1, &half));
        assert!(!af_embedding_condition(100, 1, &half));
    }

    #[test]
    fn validity_check_rejects_wrong_degree() {
        let c5 = Graph::cycle(5).unwrap();
        let bad = FactorResult {
            found: true,
            edges: vec![(0, 1), (1, 2)],
            d: 2,
        };
        assert!(!bad.is_valid_for(&c5));
    }

    #[test]
    fn bruteforce_factor_is_valid() {
        for s in 0..200u64 {
            let n = 2 + (s % 6) as usize;
            let g = sample_gnp(n, 0.6, RngSeed::new(s)).unwrap();
            for d in 1..=3 {
                let r = d_factor_bruteforce(&g, d).unwrap();
                assert!(r.is_valid_for(&g));
            }
        }
    }
}
