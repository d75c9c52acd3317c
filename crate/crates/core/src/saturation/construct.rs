use serde::{Deserialize, Serialize};

use super::certificate::{check_certificate, check_r, greedy_saturated_lex, SaturationCertificate};
use crate::error::Result;
use crate::factor::d_factor;
use crate::graph::Graph;
use crate::independence::{alpha_k_exact, greedy_k_independent_by_degree};

/// How the independent set of [`construct_upper`] is found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsMethod {
    Exact,
    Greedy,
}

/// A saturated subgraph built from an independent set and a factor.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UpperConstruction {
    /// Edge count of the certificate's subgraph.
    pub upper: usize,
    /// Final size of the independent set `S`; 0 on the fallback path.
    pub ell_used: usize,
    /// Size of `S` before shrinking.
    pub ell_initial: usize,
    /// True when `H` is an `(r-1)`-factor of `G - S`.
    pub via_factor: bool,
    /// The final `S`, sorted.
    pub independent_set: Vec<usize>,
    /// Set when an exact search ran out of budget and its incumbent was used.
    pub downgraded: bool,
    pub certificate: SaturationCertificate,
}

/// Upper bound on `sat(G, K_{1,r})` from an independent set `S` and an
/// `(r-1)`-factor of `G - S`.
///
/// Such an `H` is saturated: every vertex outside `S` has degree `r - 1`
/// and `S` spans no edges. `S` is shrunk one vertex at a time until
/// `(n - |S|)(r-1)` is even and the factor exists, always removing the vertex
/// that leaves the largest minimum degree in `G - S` (ties to the smallest
/// id). If no nonempty `G - S` has a factor the greedy lexicographic
/// construction is returned instead.
pub fn construct_upper(g: &Graph, r: usize, method: IsMethod, budget: u64) -> Result<UpperConstruction> {
    check_r(r)?;
    let n = g.n();
    let d = r - 1;
    let (mut set, downgraded) = match method {
        IsMethod::Exact => {
            let res = alpha_k_exact(g, 0, budget);
            if !res.exact {
                log::info!("independent set search exhausted its budget; using the incumbent");
            }
            (res.witness.vertices, !res.exact)
        }
        IsMethod::Greedy => (greedy_k_independent_by_degree(g, 0).vertices, false),
    };
    let ell_initial = set.len();

    let mut in_s = vec![false; n];
    for &v in &set {
        in_s[v] = true;
    }
    // degree of every vertex into V \ S
    let mut deg_out: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&u| !in_s[u]).count())
        .collect();

    loop {
        let rest_len = n - set.len();
        if rest_len > 0 && (rest_len * d).is_multiple_of(2) {
            let rest: Vec<usize> = (0..n).filter(|&v| !in_s[v]).collect();
            let sub = g.induced_subgraph(&rest)?;
            let factor = d_factor(&sub.graph, d);
            if factor.found {
                let edges: Vec<_> = factor.edges.iter().map(|&e| sub.lift(e)).collect();
                let certificate = check_certificate(&edges, g, r)?;
                debug_assert!(certificate.is_valid());
                return Ok(UpperConstruction {
                    upper: certificate.num_edges(),
                    ell_used: set.len(),
                    ell_initial,
                    via_factor: true,
                    independent_set: set,
                    downgraded,
                    certificate,
                });
            }
        }
        if set.is_empty() {
            break;
        }
        let v = shrink_choice(g, &set, &in_s, &deg_out);
        set.retain(|&x| x != v);
        in_s[v] = false;
        for &u in g.neighbors(v) {
            deg_out[u] += 1;
        }
    }

    let certificate = greedy_saturated_lex(g, r)?;
    Ok(UpperConstruction {
        upper: certificate.num_edges(),
        ell_used: 0,
        ell_initial,
        via_factor: false,
        independent_set: Vec::new(),
        downgraded,
        certificate,
    })
}

/// The vertex of `set` whose return to `G - S` maximizes the resulting
/// minimum degree; `set` is sorted, so the first maximum has the smallest id.
fn shrink_choice(g: &Graph, set: &[usize], in_s: &[bool], deg_out: &[usize]) -> usize {
    let mut mark = vec![false; g.n()];
    let mut best = (0, usize::MAX);
    for &v in set {
        for &u in g.neighbors(v) {
            mark[u] = true;
        }
        // S is independent, so all of v's neighbours lie in G - S
        let others = (0..g.n())
            .filter(|&u| !in_s[u])
            .map(|u| deg_out[u] + usize::from(mark[u]))
            .min()
            .unwrap_or(usize::MAX);
        let score = deg_out[v].min(others);
        if best.1 == usize::MAX || score > best.0 {
            best = (score, v);
        }
        for &u in g.neighbors(v) {
            mark[u] = false;
        }
    }
    best.1
}
