use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::io::host_hash;

/// Outcome of checking a candidate saturated subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Valid,
    NotStarFree,
    NotEdgeMaximal,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Valid => "valid",
            Verdict::NotStarFree => "not-star-free",
            Verdict::NotEdgeMaximal => "not-edge-maximal",
        })
    }
}

/// A spanning subgraph `H` of a host graph together with its
/// `K_{1,r}`-saturation verdict.
///
/// Serialized as `{n, r, host_hash, edges, verdict}` plus the optional
/// witness fields. `host_hash` is the hex form of [`host_hash`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationCertificate {
    pub n: usize,
    pub r: usize,
    #[serde(with = "hex_u64")]
    pub host_hash: u64,
    /// Sorted edges of `H`.
    pub edges: Vec<Edge>,
    pub verdict: Verdict,
    /// A vertex of `H`-degree above `r - 1` (not-star-free).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offending_vertex: Option<usize>,
    /// A host edge that could be added without creating a star
    /// (not-edge-maximal).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offending_edge: Option<Edge>,
}

impl SaturationCertificate {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

mod hex_u64 {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &u64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{x:016x}"))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u64, D::Error> {
        let text = String::deserialize(d)?;
        u64::from_str_radix(&text, 16).map_err(D::Error::custom)
    }
}

pub(crate) fn check_r(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::Domain(format!("star order r must be at least 2, got {r}")));
    }
    Ok(())
}

/// Checks whether `h_edges` is a `K_{1,r}`-saturated spanning subgraph of `g`.
///
/// Valid means every `H`-degree is at most `r - 1` and every host edge
/// outside `H` has an endpoint of `H`-degree exactly `r - 1`. Edges may be
/// given in either orientation; the certificate stores them sorted.
pub fn check_certificate(h_edges: &[Edge], g: &Graph, r: usize) -> Result<SaturationCertificate> {
    check_r(r)?;
    let n = g.n();
    let mut edges: Vec<Edge> = Vec::with_capacity(h_edges.len());
    for &(u, v) in h_edges {
        g.check_vertices(&[u, v])?;
        if !g.has_edge(u, v) {
            let (a, b) = edge(u, v);
            return Err(Error::NotInHost(a, b));
        }
        edges.push(edge(u, v));
    }
    edges.sort_unstable();
    if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Domain(format!("duplicate edge ({}, {})", w[0].0, w[0].1)));
    }

    let mut deg = vec![0usize; n];
    for &(u, v) in &edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut cert = SaturationCertificate {
        n,
        r,
        host_hash: host_hash(g),
        edges,
        verdict: Verdict::Valid,
        offending_vertex: None,
        offending_edge: None,
    };
    if let Some(v) = (0..n).find(|&v| deg[v] > r - 1) {
        cert.verdict = Verdict::NotStarFree;
        cert.offending_vertex = Some(v);
        return Ok(cert);
    }
    let present: HashSet<Edge> = cert.edges.iter().copied().collect();
    if let Some(e) = g
        .edges()
        .find(|&(u, v)| deg[u] < r - 1 && deg[v] < r - 1 && !present.contains(&(u, v)))
    {
        cert.verdict = Verdict::NotEdgeMaximal;
        cert.offending_edge = Some(e);
    }
    Ok(cert)
}

/// Builds an edge-maximal `K_{1,r}`-free subgraph by scanning `order` (a
/// permutation of the host edges) and keeping each edge whose endpoints both
/// have degree at most `r - 2` so far.
pub fn greedy_saturated(g: &Graph, r: usize, order: &[Edge]) -> Result<SaturationCertificate> {
    check_r(r)?;
    if order.len() != g.m() {
        return Err(Error::Domain(format!(
            "edge order has {} entries, host has {} edges",
            order.len(),
            g.m()
        )));
    }
    let mut seen = HashSet::with_capacity(order.len());
    for &(u, v) in order {
        g.check_vertices(&[u, v])?;
        let e = edge(u, v);
        if !g.has_edge(u, v) {
            return Err(Error::NotInHost(e.0, e.1));
        }
        if !seen.insert(e) {
            return Err(Error::Domain(format!("edge ({}, {}) repeated in order", e.0, e.1)));
        }
    }
    let mut deg = vec![0usize; g.n()];
    let mut kept = Vec::new();
    for &(u, v) in order {
        if deg[u] + 2 <= r && deg[v] + 2 <= r {
            deg[u] += 1;
            deg[v] += 1;
            kept.push(edge(u, v));
        }
    }
    let cert = check_certificate(&kept, g, r)?;
    debug_assert!(cert.is_valid());
    Ok(cert)
}

/// [`greedy_saturated`] over the host edges in lexicographic order.
pub fn greedy_saturated_lex(g: &Graph, r: usize) -> Result<SaturationCertificate> {
    let order: Vec<Edge> = g.edges().collect();
    greedy_saturated(g, r, &order)
}
