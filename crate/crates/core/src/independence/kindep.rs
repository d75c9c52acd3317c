use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default node-expansion limit for the exact solvers.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

const SMALL_EXACT: usize = 20;

/// A vertex set whose induced subgraph has maximum degree at most `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KIndependentWitness {
    pub k: usize,
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
}

impl KIndependentWitness {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// True iff every vertex of `G[S]` has at most `k` neighbours inside `S`.
pub fn is_k_independent(g: &Graph, s: &[usize], k: usize) -> Result<bool> {
    g.check_vertices(s)?;
    let mut member = vec![false; g.n()];
    for &v in s {
        member[v] = true;
    }
    Ok(s.iter()
        .all(|&v| g.neighbors(v).iter().filter(|&&u| member[u]).count() <= k))
}

/// Scans `order` and keeps each vertex whose addition preserves
/// k-independence. The result is maximal.
pub fn greedy_k_independent(g: &Graph, k: usize, order: &[usize]) -> Result<KIndependentWitness> {
    let n = g.n();
    g.check_vertices(order)?;
    let mut seen = vec![false; n];
    for &v in order {
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::Domain(format!("vertex {v} repeated in order")));
        }
    }
    if order.len() != n {
        return Err(Error::Domain("order is not a permutation of the vertices".into()));
    }
    let mut member = vec![false; n];
    // deg_in[v] = number of neighbours of v inside the current set
    let mut deg_in = vec![0usize; n];
    let mut chosen = Vec::new();
    for &v in order {
        let ok = deg_in[v] <= k
            && g
                .neighbors(v)
                .iter()
                .all(|&u| !member[u] || deg_in[u] < k);
        if ok {
            member[v] = true;
            chosen.push(v);
            for &u in g.neighbors(v) {
                deg_in[u] += 1;
            }
        }
    }
    chosen.sort_unstable();
    Ok(KIndependentWitness { k, vertices: chosen })
}

/// [`greedy_k_independent`] over vertices sorted by increasing degree
/// (ties by id).
pub fn greedy_k_independent_by_degree(g: &Graph, k: usize) -> KIndependentWitness {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    greedy_k_independent(g, k, &order).expect("degree order is a permutation")
}

/// Upper bound on `alpha_k(G)` from a greedy clique cover: a clique holds at
/// most `k + 1` vertices of any k-independent set.
pub fn alpha_k_cover_bound(g: &Graph, k: usize) -> usize {
    let n = g.n();
    let mut uncovered: Vec<bool> = vec![true; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut bound = 0;
    for &v in &order {
        if !uncovered[v] {
            continue;
        }
        uncovered[v] = false;
        let mut clique = vec![v];
        for &u in g.neighbors(v) {
            if uncovered[u] && clique.iter().all(|&w| g.has_edge(u, w)) {
                uncovered[u] = false;
                clique.push(u);
            }
        }
        bound += clique.len().min(k + 1);
    }
    bound
}

/// Outcome of [`alpha_k_exact`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlphaResult {
    pub witness: KIndependentWitness,
    /// False when the budget ran out; `witness` is then only a lower bound.
    pub exact: bool,
    pub expansions: u64,
}

/// Maximum k-independent set by branch and bound.
///
/// Candidates are covered greedily by cliques of `G`; a clique can hold at
/// most `k + 1` vertices of a k-independent set, which bounds each prefix of
/// the colour order. Nodes are additionally pruned by charging candidates
/// adjacent to a partially saturated chosen vertex `u` against `u`'s
/// remaining slack. The greedy set seeds the incumbent.
pub fn alpha_k_exact(g: &Graph, k: usize, budget: u64) -> AlphaResult {
    let n = g.n();
    if k >= g.max_degree() {
        return AlphaResult {
            witness: KIndependentWitness {
                k,
                vertices: (0..n).collect(),
            },
            exact: true,
            expansions: 0,
        };
    }
    let greedy = greedy_k_independent_by_degree(g, k);

    // Relabel so that low-degree vertices come first; they are coloured
    // first and therefore branched on last.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&v| (g.degree(v), v));
    let mut pos = vec![0; n];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    let adj_list: Vec<Vec<usize>> = perm
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|&u| pos[u]).collect())
        .collect();
    let adj: Vec<Bitset> = adj_list
        .iter()
        .map(|list| {
            let mut b = Bitset::new(n);
            for &u in list {
                b.insert(u);
            }
            b
        })
        .collect();

    let mut solver = Solver {
        k,
        adj,
        adj_list,
        deg_in: vec![0; n],
        in_set: vec![false; n],
        set: Vec::new(),
        best: greedy.vertices.iter().map(|&v| pos[v]).collect(),
        budget,
        expansions: 0,
        exhausted: false,
    };
    solver.expand(Bitset::full(n));

    let mut vertices: Vec<usize> = solver.best.iter().map(|&i| perm[i]).collect();
    vertices.sort_unstable();
    debug_assert!(is_k_independent(g, &vertices, k).unwrap());
    AlphaResult {
        witness: KIndependentWitness { k, vertices },
        exact: !solver.exhausted,
        expansions: solver.expansions,
    }
}

struct Solver {
    k: usize,
    adj: Vec<Bitset>,
    adj_list: Vec<Vec<usize>>,
    deg_in: Vec<usize>,
    in_set: Vec<bool>,
    set: Vec<usize>,
    best: Vec<usize>,
    budget: u64,
    expansions: u64,
    exhausted: bool,
}

impl Solver {
    /// Orders `cands` into parts with a cap on how many vertices of each part
    /// a k-independent extension can use, and returns the order together with
    /// the bound for every prefix.
    ///
    /// Parts come first from chosen vertices with remaining slack (their
    /// candidate neighbours can contribute at most the slack), then from a
    /// greedy clique cover of what is left (at most `k + 1` per clique).
    fn partition(&self, cands: &Bitset) -> (Vec<usize>, Vec<usize>, usize) {
        let cap = self.k + 1;
        let mut rest = cands.clone();
        let mut order = Vec::with_capacity(cands.count());
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut total = 0;

        if self.k > 0 {
            let mut open: Vec<usize> = self
                .set
                .iter()
                .copied()
                .filter(|&u| self.deg_in[u] < self.k)
                .collect();
            loop {
                let pick = open
                    .iter()
                    .enumerate()
                    .map(|(i, &u)| {
                        let hit = rest.intersection_count(&self.adj[u]);
                        (hit as isize - (self.k - self.deg_in[u]) as isize, i)
                    })
                    .max();
                let Some((gain, i)) = pick else { break };
                if gain <= 0 {
                    break;
                }
                let u = open.swap_remove(i);
                let slack = self.k - self.deg_in[u];
                let mut group = rest.clone();
                group.intersect_with(&self.adj[u]);
                rest.difference_with(&group);
                for (j, v) in group.ones().enumerate() {
                    order.push(v);
                    bounds.push(total + (j + 1).min(slack));
                }
                total += slack;
            }
        }

        let rest_total_before = total;
        let rest_set = rest.clone();
        while !rest.is_empty() {
            let mut q = rest.clone();
            let mut size = 0;
            while let Some(v) = q.first() {
                q.intersect_with(&self.adj[v]);
                rest.remove(v);
                size += 1;
                order.push(v);
                bounds.push(total + size.min(cap));
            }
            total += size.min(cap);
        }
        let node_bound = if rest_set.count() <= SMALL_EXACT && total > rest_total_before {
            rest_total_before + self.small_alpha(&rest_set)
        } else {
            total
        };
        (order, bounds, node_bound)
    }

    /// Exact `alpha_k` of a small induced subgraph by plain enumeration.
    fn small_alpha(&self, part: &Bitset) -> usize {
        let verts: Vec<usize> = part.ones().collect();
        let m = verts.len();
        let masks: Vec<u32> = verts
            .iter()
            .map(|&v| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.adj[v].contains(u))
                    .fold(0u32, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        struct Small<'a> {
            masks: &'a [u32],
            k: u32,
            best: u32,
        }
        impl Small<'_> {
            // `open`: undecided vertices still compatible; `full`: chosen
            // vertices with no slack left.
            fn go(&mut self, open: u32, chosen: u32, full: u32, size: u32) {
                if size > self.best {
                    self.best = size;
                }
                if open == 0 || size + open.count_ones() <= self.best {
                    return;
                }
                let i = open.trailing_zeros() as usize;
                let bit = 1u32 << i;
                let rest = open & !bit;
                // include i
                let chosen2 = chosen | bit;
                let mut full2 = full;
                if (self.masks[i] & chosen).count_ones() == self.k {
                    full2 |= bit;
                }
                let mut nb = self.masks[i] & chosen;
                while nb != 0 {
                    let j = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if (self.masks[j] & chosen2).count_ones() == self.k {
                        full2 |= 1 << j;
                    }
                }
                let mut open2 = rest;
                let mut f = full2;
                while f != 0 {
                    let j = f.trailing_zeros() as usize;
                    f &= f - 1;
                    open2 &= !self.masks[j];
                }
                let mut o = open2;
                while o != 0 {
                    let j = o.trailing_zeros() as usize;
                    o &= o - 1;
                    if (self.masks[j] & chosen2).count_ones() > self.k {
                        open2 &= !(1 << j);
                    }
                }
                self.go(open2, chosen2, full2, size + 1);
                self.go(rest, chosen, full, size);
            }
        }
        let mut small = Small {
            masks: &masks,
            k: self.k as u32,
            best: 0,
        };
        let all = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
        small.go(all, 0, 0, 0);
        small.best as usize
    }

    fn expand(&mut self, mut cands: Bitset) {
        self.expansions += 1;
        if self.expansions > self.budget {
            self.exhausted = true;
            return;
        }
        if self.set.len() > self.best.len() {
            self.best = self.set.clone();
        }
        if cands.is_empty() {
            return;
        }
        let (order, bounds, node_bound) = self.partition(&cands);
        if self.set.len() + node_bound <= self.best.len() {
            return;
        }
        for i in (0..order.len()).rev() {
            if self.exhausted || self.set.len() + bounds[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            cands.remove(v);
            let next = self.include(v, &cands);
            self.expand(next);
            self.exclude_last();
        }
    }

    /// Adds `v` to the set and returns the candidates still compatible.
    fn include(&mut self, v: usize, cands: &Bitset) -> Bitset {
        let k = self.k;
        let mut next = cands.clone();
        self.set.push(v);
        self.in_set[v] = true;
        if self.deg_in[v] == k {
            next.difference_with(&self.adj[v]);
        }
        for i in 0..self.adj_list[v].len() {
            let u = self.adj_list[v][i];
            self.deg_in[u] += 1;
            if self.in_set[u] {
                if self.deg_in[u] == k {
                    next.difference_with(&self.adj[u]);
                }
            } else if self.deg_in[u] > k {
                next.remove(u);
            }
        }
        next
    }

    fn exclude_last(&mut self) {
        let v = self.set.pop().expect("non-empty set");
        self.in_set[v] = false;
        for &u in &self.adj_list[v] {
            self.deg_in[u] -= 1;
        }
    }
}
