//! Simple undirected graphs on dense vertex ids `0..n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An edge stored with `u < v`.
pub type Edge = (usize, usize);

/// Normalizes an unordered pair so that the smaller id comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A finite simple undirected graph.
///
/// Adjacency lists are kept sorted, so neighbor queries are binary searches
/// and edge iteration is lexicographic. Graphs are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph {
            adj,
            m: n * n.saturating_sub(1) / 2,
        }
    }

    /// The cycle `C_n` with edges `i ~ i+1 (mod n)`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// The star `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are valid")
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, edges).expect("petersen edges are valid")
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                let dup = list.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
                let (a, b) = edge(v, dup);
                return Err(Error::Domain(format!("duplicate edge ({a}, {b})")));
            }
        }
        let g = Graph { adj, m };
        g.debug_check();
        Ok(g)
    }

    /// Builds a graph from adjacency lists that are already sorted, symmetric
    /// and loop-free. Used by generators that produce edges in order.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let g = Graph { adj, m };
        g.debug_check();
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Returns an error naming the first vertex id that is not `< n`.
    pub fn check_vertices(&self, vertices: &[usize]) -> Result<()> {
        match vertices.iter().find(|&&v| v >= self.n()) {
            Some(&vertex) => Err(Error::InvalidVertex { vertex, n: self.n() }),
            None => Ok(()),
        }
    }

    /// Induced subgraph on `vertices`, relabelled `0..|S|` by increasing
    /// original id. Duplicate ids in `vertices` are ignored.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph> {
        self.check_vertices(vertices)?;
        let mut original = vertices.to_vec();
        original.sort_unstable();
        original.dedup();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in original.iter().enumerate() {
            index[v] = i;
        }
        let adj = original
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (index[u] != usize::MAX).then_some(index[u]))
                    .collect()
            })
            .collect();
        Ok(InducedSubgraph {
            graph: Graph::from_sorted_adjacency(adj),
            original,
        })
    }

    /// Checks the structural invariants: sorted, symmetric, loop-free,
    /// duplicate-free adjacency with `m = sum(deg) / 2`.
    pub fn validate(&self) -> bool {
        let n = self.n();
        let mut total = 0;
        for (v, list) in self.adj.iter().enumerate() {
            total += list.len();
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &u in list {
                if u >= n || u == v || self.adj[u].binary_search(&v).is_err() {
                    return false;
                }
            }
        }
        total == 2 * self.m
    }

    #[inline]
    fn debug_check(&self) {
        debug_assert!(self.validate(), "graph invariants violated");
    }
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the id in the parent graph of vertex `i`.
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    /// Maps an edge of the subgraph back to parent ids.
    pub fn lift(&self, (u, v): Edge) -> Edge {
        edge(self.original[u], self.original[v])
    }
}

/// A `d`-regular circulant graph on `m` vertices.
///
/// Vertex `i` is joined to `i ± j (mod m)` for `j = 1..=d/2`, and to
/// `i + m/2` when `d` is odd.
pub fn regular_circulant(m: usize, d: usize) -> Result<Graph> {
    if m <= d {
        return Err(Error::Infeasible(format!(
            "no {d}-regular graph on {m} vertices (need m > d)"
        )));
    }
    if (m * d) % 2 == 1 {
        return Err(Error::Infeasible(format!(
            "no {d}-regular graph on {m} vertices (m*d is odd)"
        )));
    }
    let mut edges = Vec::with_capacity(m * d / 2);
    for i in 0..m {
        for j in 1..=d / 2 {
            edges.push(edge(i, (i + j) % m));
        }
        if d % 2 == 1 && i < m / 2 {
            edges.push((i, i + m / 2));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let g = Graph::from_edges(m, edges)?;
    debug_assert!((0..m).all(|v| g.degree(v) == d));
    Ok(g)
}
