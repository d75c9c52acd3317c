//! Maximum-cardinality matching in general graphs (Edmonds' blossom
//! algorithm, with blossom bases tracked in a union-find forest).

use std::collections::VecDeque;

use crate::graph::{Edge, Graph};

pub(crate) const NONE: usize = usize::MAX;

const UNSEEN: u8 = 0;
const EVEN: u8 = 1;
const ODD: u8 = 2;

/// Returns a maximum matching of `g` as sorted edges `(u, v)`, `u < v`.
pub fn max_matching(g: &Graph) -> Vec<Edge> {
    let adj: Vec<&[usize]> = (0..g.n()).map(|v| g.neighbors(v)).collect();
    let mate = greedy_matching(&adj);
    let mate = Blossom::new(&adj, mate).run(false);
    mate_to_edges(&mate)
}

pub(crate) fn mate_to_edges(mate: &[usize]) -> Vec<Edge> {
    mate.iter()
        .enumerate()
        .filter(|&(v, &u)| u != NONE && v < u)
        .map(|(v, &u)| (v, u))
        .collect()
}

/// Matches each vertex, in order of increasing degree, to its unmatched
/// neighbour of least degree.
pub(crate) fn greedy_matching<A: AsRef<[usize]>>(adj: &[A]) -> Vec<usize> {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (adj[v].as_ref().len(), v));
    for v in order {
        if mate[v] != NONE {
            continue;
        }
        if let Some(&u) = adj[v]
            .as_ref()
            .iter()
            .filter(|&&u| mate[u] == NONE)
            .min_by_key(|&&u| (adj[u].as_ref().len(), u))
        {
            mate[v] = u;
            mate[u] = v;
        }
    }
    mate
}

pub(crate) struct Blossom<'a, A> {
    adj: &'a [A],
    mate: Vec<usize>,
    label: Vec<u8>,
    parent: Vec<usize>,
    base: Vec<usize>,
    stamp: Vec<u64>,
    clock: u64,
    touched: Vec<usize>,
    queue: VecDeque<usize>,
}

impl<'a, A: AsRef<[usize]>> Blossom<'a, A> {
    pub fn new(adj: &'a [A], mate: Vec<usize>) -> Self {
        let n = adj.len();
        debug_assert_eq!(mate.len(), n);
        Blossom {
            adj,
            mate,
            label: vec![UNSEEN; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            stamp: vec![0; n],
            clock: 0,
            touched: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    /// Augments from every free vertex once. With `stop_on_failure` the run
    /// ends at the first free vertex that cannot be augmented, which is
    /// enough to refute a perfect matching.
    pub fn run(mut self, stop_on_failure: bool) -> Vec<usize> {
        for root in 0..self.adj.len() {
            if self.mate[root] == NONE && !self.augment_from(root) && stop_on_failure {
                break;
            }
        }
        self.mate
    }

    fn find(&mut self, mut v: usize) -> usize {
        let mut root = v;
        while self.base[root] != root {
            root = self.base[root];
        }
        while self.base[v] != root {
            let next = self.base[v];
            self.base[v] = root;
            v = next;
        }
        root
    }

    fn touch(&mut self, v: usize) {
        if self.label[v] == UNSEEN {
            self.touched.push(v);
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.label[v] = UNSEEN;
            self.parent[v] = NONE;
            self.base[v] = v;
        }
        self.touched.clear();
        self.queue.clear();
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.clock += 1;
        loop {
            if a != NONE {
                if self.stamp[a] == self.clock {
                    return a;
                }
                self.stamp[a] = self.clock;
                a = if self.mate[a] == NONE {
                    NONE
                } else {
                    let p = self.parent[self.mate[a]];
                    self.find(p)
                };
            }
            std::mem::swap(&mut a, &mut b);
        }
    }

    fn contract(&mut self, mut v: usize, mut w: usize, b: usize) {
        while self.find(v) != b {
            self.parent[v] = w;
            w = self.mate[v];
            if self.label[w] == ODD {
                self.label[w] = EVEN;
                self.queue.push_back(w);
            }
            let (rv, rw) = (self.find(v), self.find(w));
            self.base[rv] = b;
            self.base[rw] = b;
            v = self.parent[w];
        }
    }

    fn augment_from(&mut self, root: usize) -> bool {
        self.touch(root);
        self.label[root] = EVEN;
        self.queue.push_back(root);
        while let Some(x) = self.queue.pop_front() {
            for i in 0..self.adj[x].as_ref().len() {
                let y = self.adj[x].as_ref()[i];
                if self.label[y] == UNSEEN {
                    self.touch(y);
                    self.parent[y] = x;
                    self.label[y] = ODD;
                    let z = self.mate[y];
                    if z == NONE {
                        self.flip(y);
                        self.reset();
                        return true;
                    }
                    self.touch(z);
                    self.label[z] = EVEN;
                    self.queue.push_back(z);
                } else if self.label[y] == EVEN {
                    let (bx, by) = (self.find(x), self.find(y));
                    if bx != by {
                        let b = self.lca(bx, by);
                        self.contract(x, y, b);
                        self.contract(y, x, b);
                    }
                }
            }
        }
        self.reset();
        false
    }

    fn flip(&mut self, mut y: usize) {
        while y != NONE {
            let x = self.parent[y];
            let next = self.mate[x];
            self.mate[y] = x;
            self.mate[x] = y;
            y = next;
        }
    }
}
