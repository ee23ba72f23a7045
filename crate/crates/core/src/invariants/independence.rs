//! Exact independence number by branch and bound.
//!
//! Vertices of degree 0 or 1 in the remaining subgraph are always taken
//! (some maximum independent set contains them), so forests never branch.
//! Otherwise the solver branches on a maximum-degree vertex and prunes with
//! `α ≤ |V| − ν_greedy`, where `ν_greedy` is a greedy maximal matching.

use super::bitset::VertexSet;
use super::warn_if_large;
use crate::graph::Graph;

struct Solver {
    nbrs: Vec<VertexSet>,
    best: usize,
}

impl Solver {
    fn degree_in(&self, v: usize, cand: &VertexSet) -> usize {
        self.nbrs[v].intersection_len(cand)
    }

    fn upper_bound(&self, cand: &VertexSet) -> usize {
        let mut free = cand.clone();
        let mut matched = 0;
        for u in cand.iter() {
            if !free.contains(u) {
                continue;
            }
            if let Some(v) = self.nbrs[u].iter().find(|&v| free.contains(v)) {
                free.remove(u);
                free.remove(v);
                matched += 1;
            }
        }
        cand.len() - matched
    }

    fn search(&mut self, mut cand: VertexSet, mut size: usize) {
        // take low-degree vertices until none remain
        loop {
            let low = cand.iter().find_map(|v| match self.degree_in(v, &cand) {
                0 => Some((v, None)),
                1 => Some((v, self.nbrs[v].iter().find(|&w| cand.contains(w)))),
                _ => None,
            });
            match low {
                Some((v, other)) => {
                    cand.remove(v);
                    if let Some(w) = other {
                        cand.remove(w);
                    }
                    size += 1;
                }
                None => break,
            }
        }
        if cand.is_empty() {
            self.best = self.best.max(size);
            return;
        }
        if size + self.upper_bound(&cand) <= self.best {
            return;
        }
        let pivot = cand
            .iter()
            .max_by_key(|&v| (self.degree_in(v, &cand), std::cmp::Reverse(v)))
            .expect("non-empty");

        let mut with = cand.difference(&self.nbrs[pivot]);
        with.remove(pivot);
        self.search(with, size + 1);

        let mut without = cand;
        without.remove(pivot);
        self.search(without, size);
    }
}

/// Independence number α(G).
pub fn independence_number(g: &Graph) -> usize {
    let n = g.order();
    if g.size() + 1 != n || !g.is_connected() {
        warn_if_large("independence number", n);
    }
    let nbrs = (0..n)
        .map(|v| {
            let mut s = VertexSet::empty(n);
            g.neighbors(v).iter().for_each(|&w| s.insert(w));
            s
        })
        .collect();
    let mut solver = Solver { nbrs, best: 0 };
    solver.search(VertexSet::full(n), 0);
    solver.best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(independence_number(&Graph::complete(5).unwrap()), 1);
        assert_eq!(independence_number(&Graph::star(6).unwrap()), 5);
        assert_eq!(independence_number(&Graph::path(7).unwrap()), 4);
        assert_eq!(independence_number(&Graph::cycle(7).unwrap()), 3);
        assert_eq!(independence_number(&Graph::empty(4).unwrap()), 4);
    }

    #[test]
    fn petersen() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(independence_number(&g), 4);
    }
}
