//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, O(n³)).

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.g.degree(v) {
                let to = self.g.neighbors(v)[idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.g.order();
        // greedy warm start
        for u in 0..n {
            if self.mate[u] == NONE {
                if let Some(&v) = self.g.neighbors(u).iter().find(|&&v| self.mate[v] == NONE) {
                    self.mate[u] = v;
                    self.mate[v] = u;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let ppv = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = ppv;
                }
            }
        }
        self.mate
    }
}

/// A maximum matching as a list of edges `(u, v)`, `u < v`.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mate = Blossom::new(g).run();
    mate.iter()
        .enumerate()
        .filter(|&(u, &v)| v != NONE && u < v)
        .map(|(u, &v)| (u, v))
        .collect()
}

/// Matching number μ(G).
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}
