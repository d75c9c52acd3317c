//! d-factor search by reduction to perfect matching.
//!
//! Each vertex `v` of degree `deg(v)` becomes `deg(v)` outer vertices, one per
//! incident edge, plus `deg(v) - d` inner vertices joined to all of `v`'s
//! outer vertices. Host edge `uv` joins the matching outer pair. A perfect
//! matching of the gadget leaves exactly `d` outer vertices of every `v`
//! matched across host edges, and those edges form a d-factor.
//!
//! Dense hosts make the gadget quadratic in the degree, so the search first
//! runs on spanning subgraphs that keep a bounded number of neighbours per
//! vertex, doubling the bound until it covers the whole host. A factor of a
//! spanning subgraph is a factor of the host, so only the final full-host
//! attempt can answer "no".

use super::matching::{mate_to_edges, Blossom, NONE};
use super::FactorResult;
use crate::graph::{edge, Edge, Graph};

/// Finds a `d`-regular spanning subgraph of `g`, or reports that none exists.
pub fn d_factor(g: &Graph, d: usize) -> FactorResult {
    let n = g.n();
    if d == 0 || n == 0 {
        return FactorResult {
            found: true,
            edges: Vec::new(),
            d,
        };
    }
    if (n * d) % 2 == 1 || g.min_degree() < d {
        return FactorResult::not_found(d);
    }
    let result = if d == 1 {
        perfect_matching(g)
    } else {
        let mut keep = 2 * d + 2;
        loop {
            if keep >= g.max_degree() {
                break factor_via_gadget(g, d);
            }
            let sparse = sparsify(g, keep);
            if sparse.min_degree() >= d {
                let r = factor_via_gadget(&sparse, d);
                if r.found {
                    break r;
                }
            }
            keep *= 2;
        }
    };
    debug_assert!(result.is_valid_for(g));
    result
}

fn perfect_matching(g: &Graph) -> FactorResult {
    let m = super::max_matching(g);
    if 2 * m.len() == g.n() {
        FactorResult {
            found: true,
            edges: m,
            d: 1,
        }
    } else {
        FactorResult::not_found(1)
    }
}

/// Spanning subgraph in which every vertex keeps (at least) its `keep`
/// cyclically-next neighbours `v+1, v+2, ... (mod n)`.
fn sparsify(g: &Graph, keep: usize) -> Graph {
    let n = g.n();
    let mut edges: Vec<Edge> = Vec::with_capacity(n * keep);
    for v in 0..n {
        let nb = g.neighbors(v);
        let split = nb.partition_point(|&u| u < v);
        edges.extend(
            nb[split..]
                .iter()
                .chain(&nb[..split])
                .take(keep)
                .map(|&u| edge(u, v)),
        );
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, edges).expect("subgraph of a valid graph")
}

fn factor_via_gadget(g: &Graph, d: usize) -> FactorResult {
    let n = g.n();
    // outer vertex for (v, i-th neighbour of v): outer_start[v] + i
    let mut outer_start = vec![0; n + 1];
    for v in 0..n {
        outer_start[v + 1] = outer_start[v] + g.degree(v);
    }
    let outer_total = outer_start[n];
    let mut inner_start = vec![outer_total; n + 1];
    for v in 0..n {
        inner_start[v + 1] = inner_start[v] + (g.degree(v) - d);
    }
    let total = inner_start[n];

    let outer_of = |v: usize, u: usize| -> usize {
        outer_start[v] + g.neighbors(v).binary_search(&u).expect("edge present")
    };

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    for v in 0..n {
        let inners = inner_start[v]..inner_start[v + 1];
        for (i, &u) in g.neighbors(v).iter().enumerate() {
            let o = outer_start[v] + i;
            adj[o].push(outer_of(u, v));
            adj[o].extend(inners.clone());
            for x in inners.clone() {
                adj[x].push(o);
            }
        }
    }

    // Warm start from a greedy partial factor.
    let mut mate = vec![NONE; total];
    let mut fdeg = vec![0; n];
    for (u, v) in g.edges() {
        if fdeg[u] < d && fdeg[v] < d {
            fdeg[u] += 1;
            fdeg[v] += 1;
            let (a, b) = (outer_of(u, v), outer_of(v, u));
            mate[a] = b;
            mate[b] = a;
        }
    }
    for v in 0..n {
        let free_outer = (outer_start[v]..outer_start[v + 1]).filter(|&o| mate[o] == NONE);
        for (x, o) in (inner_start[v]..inner_start[v + 1]).zip(free_outer.collect::<Vec<_>>()) {
            mate[x] = o;
            mate[o] = x;
        }
    }

    let mate = Blossom::new(&adj, mate).run(true);
    if mate.contains(&NONE) {
        return FactorResult::not_found(d);
    }
    let mut edges: Vec<Edge> = mate_to_edges(&mate)
        .into_iter()
        .filter(|&(a, b)| a < outer_total && b < outer_total)
        .map(|(a, b)| {
            let owner = |o: usize| outer_start.partition_point(|&s| s <= o) - 1;
            edge(owner(a), owner(b))
        })
        .collect();
    edges.sort_unstable();
    FactorResult {
        found: true,
        edges,
        d,
    }
}
