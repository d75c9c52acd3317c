//! Exact star-saturation numbers for small graphs.
//!
//! A subgraph `H` with `Δ(H) <= r - 1` is saturated iff the set `A` of
//! vertices with `H`-degree at most `r - 2` satisfies `G[A] ⊆ H`; then `A`
//! is `(r-2)`-independent and every vertex of `B = V \ A` has degree
//! exactly `r - 1`. With `x` the number of `A`-`B` edges of `H`,
//!
//! ```text
//! |E(H)| = e(G[A]) + ((r-1)|B| + x) / 2.
//! ```
//!
//! The solver enumerates `A` and, for each, finds the least `x` for which the
//! remaining degrees can be realised.

use serde::{Deserialize, Serialize};

use super::certificate::{check_certificate, check_r, greedy_saturated_lex, SaturationCertificate};
use super::construct::{construct_upper, IsMethod};
use super::lower::{sat_lower_bound, AlphaSource};
use crate::error::{Error, Result};
use crate::factor::max_matching;
use crate::graph::{edge, Edge, Graph};

/// Largest host accepted by [`sat_exact`].
pub const EXACT_MAX_N: usize = 64;

/// Outcome of [`sat_exact`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExactSat {
    /// Best saturated subgraph found; equals `sat(G, K_{1,r})` when `exact`.
    pub value: usize,
    /// Proven lower bound; equals `value` when `exact`.
    pub lower: u64,
    pub exact: bool,
    pub expansions: u64,
    pub certificate: SaturationCertificate,
}

/// `sat(G, K_{1,r})` with a witness, by enumeration of the low-degree set.
///
/// The incumbent starts from [`construct_upper`] and the greedy
/// construction. A partial set `A` is abandoned when
/// `e(G[A]) + (r-1)(n - |A| - c)/2` reaches the incumbent, `c` being the
/// number of vertices that could still join `A`. If the budget runs out the
/// result carries the incumbent and the `alpha_{r-2}` lower bound with
/// `exact = false`.
pub fn sat_exact(g: &Graph, r: usize, budget: u64) -> Result<ExactSat> {
    check_r(r)?;
    let n = g.n();
    if n > EXACT_MAX_N {
        return Err(Error::SizeGuard(format!(
            "sat_exact accepts at most {EXACT_MAX_N} vertices, got {n}"
        )));
    }
    let lower = sat_lower_bound(g, r, AlphaSource::Exact, budget)?.ceiled;
    let greedy = greedy_saturated_lex(g, r)?;
    let built = construct_upper(g, r, IsMethod::Exact, budget)?.certificate;
    let start = if built.num_edges() < greedy.num_edges() { built } else { greedy };

    let mut search = Search::new(g, r, budget, start.num_edges(), start.edges.clone());
    if (start.num_edges() as u64) > lower {
        search.outer(0);
    }
    let value = search.best;
    let certificate = check_certificate(&search.best_edges, g, r)?;
    debug_assert!(certificate.is_valid() && certificate.num_edges() == value);
    let exact = !search.exhausted;
    Ok(ExactSat {
        value,
        lower: if exact { value as u64 } else { lower },
        exact,
        expansions: search.expansions,
        certificate,
    })
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    d: usize,
    k: usize,
    adj: Vec<u64>,
    in_a: u64,
    a_size: usize,
    e_a: usize,
    deg_a: Vec<usize>,
    best: usize,
    best_edges: Vec<Edge>,
    budget: u64,
    expansions: u64,
    exhausted: bool,
    // inner state
    dem: Vec<usize>,
    cap: Vec<usize>,
    chosen: Vec<Edge>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, r: usize, budget: u64, best: usize, best_edges: Vec<Edge>) -> Self {
        let n = g.n();
        let adj = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
            .collect();
        Search {
            g,
            n,
            d: r - 1,
            k: r - 2,
            adj,
            in_a: 0,
            a_size: 0,
            e_a: 0,
            deg_a: vec![0; n],
            best,
            best_edges,
            budget,
            expansions: 0,
            exhausted: false,
            dem: vec![0; n],
            cap: vec![0; n],
            chosen: Vec::new(),
        }
    }

    fn tick(&mut self) -> bool {
        self.expansions += 1;
        if self.expansions > self.budget {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn can_join(&self, v: usize) -> bool {
        if self.deg_a[v] > self.k {
            return false;
        }
        let mut nb = self.adj[v] & self.in_a;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if self.deg_a[u] >= self.k {
                return false;
            }
        }
        true
    }

    /// Twice the smallest value reachable with `extra` more vertices in `A`.
    fn twice_floor(&self, extra: usize) -> usize {
        2 * self.e_a + self.d * (self.n - self.a_size - extra)
    }

    fn outer(&mut self, from: usize) {
        if !self.tick() {
            return;
        }
        if self.twice_floor(0) < 2 * self.best {
            self.evaluate();
        }
        let cands: Vec<usize> = (from..self.n).filter(|&v| self.can_join(v)).collect();
        for (i, &v) in cands.iter().enumerate() {
            if self.exhausted || self.twice_floor(cands.len() - i) >= 2 * self.best {
                return;
            }
            if !self.can_join(v) {
                continue;
            }
            let nb = self.adj[v] & self.in_a;
            self.in_a |= 1 << v;
            self.a_size += 1;
            self.e_a += nb.count_ones() as usize;
            for &u in self.g.neighbors(v) {
                self.deg_a[u] += 1;
            }
            self.outer(v + 1);
            for &u in self.g.neighbors(v) {
                self.deg_a[u] -= 1;
            }
            self.e_a -= nb.count_ones() as usize;
            self.a_size -= 1;
            self.in_a &= !(1 << v);
        }
    }

    fn a_edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.e_a);
        for v in 0..self.n {
            if self.in_a >> v & 1 == 1 {
                let mut nb = self.adj[v] & self.in_a & !((2u64 << v) - 1);
                while nb != 0 {
                    let u = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    out.push((v, u));
                }
            }
        }
        out
    }

    /// Tries `A = in_a` exactly and records any improvement.
    fn evaluate(&mut self) {
        let b: Vec<usize> = (0..self.n).filter(|&v| self.in_a >> v & 1 == 0).collect();
        if self.k == 0 {
            // r = 2: caps are all zero, so H restricted to B is a perfect matching
            let sub = match self.g.induced_subgraph(&b) {
                Ok(sub) => sub,
                Err(_) => unreachable!("B holds valid vertices"),
            };
            let m = max_matching(&sub.graph);
            if 2 * m.len() == b.len() {
                self.best = b.len() / 2;
                self.best_edges = m.iter().map(|&e| sub.lift(e)).collect();
            }
            return;
        }
        // need e_a + (d|B| + x)/2 < best, i.e. x < limit
        let limit = 2 * self.best - self.twice_floor(0);
        for v in 0..self.n {
            if self.in_a >> v & 1 == 1 {
                self.dem[v] = 0;
                self.cap[v] = self.k - self.deg_a[v];
            } else {
                self.dem[v] = self.d;
                self.cap[v] = 0;
            }
        }
        self.chosen.clear();
        let mut found = None;
        self.inner(0, limit, &mut found);
        if let Some((x, edges)) = found {
            let mut all = self.a_edges();
            all.extend(edges);
            all.sort_unstable();
            debug_assert_eq!(2 * all.len(), self.twice_floor(0) + x);
            self.best = all.len();
            self.best_edges = all;
        }
    }

    /// Lower bound on the `A`-`B` edges still needed, respecting parity.
    fn inner_bound(&self, active: u64, cap_mask: u64) -> usize {
        let mut need = 0;
        let mut total = 0;
        let mut rest = active;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let peers = (self.adj[b] & active).count_ones() as usize;
            total += self.dem[b];
            need += self.dem[b].saturating_sub(peers);
            let reach = peers + (self.adj[b] & cap_mask).count_ones() as usize;
            if reach < self.dem[b] {
                return usize::MAX;
            }
        }
        if (total - need.min(total)) % 2 == 1 {
            need += 1;
        }
        need
    }

    /// Realises the remaining demands with fewer than `limit` `A`-`B` edges
    /// in total (`x` counts those already chosen).
    fn inner(&mut self, x: usize, limit: usize, found: &mut Option<(usize, Vec<Edge>)>) {
        if !self.tick() {
            return;
        }
        let mut active = 0u64;
        let mut cap_mask = 0u64;
        for v in 0..self.n {
            if self.dem[v] > 0 {
                active |= 1 << v;
            }
            if self.cap[v] > 0 {
                cap_mask |= 1 << v;
            }
        }
        if active == 0 {
            *found = Some((x, self.chosen.clone()));
            return;
        }
        let lb = self.inner_bound(active, cap_mask);
        let limit = found.as_ref().map_or(limit, |(fx, _)| (*fx).min(limit));
        if lb == usize::MAX || x + lb >= limit {
            return;
        }
        // most constrained active vertex
        let mut pick = (usize::MAX, 0);
        let mut rest = active;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let reach = ((self.adj[b] & active).count_ones() + (self.adj[b] & cap_mask).count_ones()) as usize;
            pick = pick.min((reach - self.dem[b], b));
        }
        let b = pick.1;
        let mut partners: Vec<usize> = Vec::new();
        let mut peers = self.adj[b] & active;
        while peers != 0 {
            partners.push(peers.trailing_zeros() as usize);
            peers &= peers - 1;
        }
        let n_peers = partners.len();
        let mut caps = self.adj[b] & cap_mask;
        while caps != 0 {
            partners.push(caps.trailing_zeros() as usize);
            caps &= caps - 1;
        }
        let need = self.dem[b];
        self.dem[b] = 0;
        self.choose(b, &partners, n_peers, 0, need, x, limit, found);
        self.dem[b] = need;
    }

    /// Picks `need` partners of `b` from `partners[i..]`; entries before
    /// `n_peers` are active `B` vertices, the rest are `A` vertices.
    #[allow(clippy::too_many_arguments)]
    fn choose(
        &mut self,
        b: usize,
        partners: &[usize],
        n_peers: usize,
        i: usize,
        need: usize,
        x: usize,
        limit: usize,
        found: &mut Option<(usize, Vec<Edge>)>,
    ) {
        if self.exhausted {
            return;
        }
        if need == 0 {
            self.inner(x, limit, found);
            return;
        }
        if partners.len() - i < need {
            return;
        }
        let u = partners[i];
        let is_a = i >= n_peers;
        let bound = found.as_ref().map_or(limit, |(fx, _)| (*fx).min(limit));
        if !is_a || x + 1 < bound {
            if is_a {
                self.cap[u] -= 1;
            } else {
                self.dem[u] -= 1;
            }
            self.chosen.push(edge(b, u));
            self.choose(b, partners, n_peers, i + 1, need - 1, x + usize::from(is_a), limit, found);
            self.chosen.pop();
            if is_a {
                self.cap[u] += 1;
            } else {
                self.dem[u] += 1;
            }
        }
        self.choose(b, partners, n_peers, i + 1, need, x, limit, found);
    }
}

/// Size of a smallest maximal matching, by enumerating all matchings.
/// Equals `sat(G, K_{1,2})`. Refuses hosts with more than 12 vertices.
pub fn min_maximal_matching_bruteforce(g: &Graph) -> Result<usize> {
    if g.n() > 12 {
        return Err(Error::SizeGuard(format!(
            "matching enumeration accepts at most 12 vertices, got {}",
            g.n()
        )));
    }
    let edges: Vec<Edge> = g.edges().collect();
    fn walk(edges: &[Edge], i: usize, used: &mut Vec<bool>, size: usize, best: &mut usize) {
        if i == edges.len() {
            let maximal = edges.iter().all(|&(u, v)| used[u] || used[v]);
            if maximal {
                *best = (*best).min(size);
            }
            return;
        }
        let (u, v) = edges[i];
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            walk(edges, i + 1, used, size + 1, best);
            used[u] = false;
            used[v] = false;
        }
        walk(edges, i + 1, used, size, best);
    }
    let mut best = usize::MAX;
    walk(&edges, 0, &mut vec![false; g.n()], 0, &mut best);
    Ok(best)
}
