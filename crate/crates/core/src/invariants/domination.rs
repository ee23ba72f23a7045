//! Exact domination number: a linear dynamic program on trees and a
//! set-cover branch and bound for everything else.

use super::bitset::VertexSet;
use super::warn_if_large;
use crate::graph::Graph;

/// Domination number γ(G).
pub fn domination_number(g: &Graph) -> usize {
    if g.is_tree() {
        tree_domination_number(g)
    } else {
        warn_if_large("domination number", g.order());
        general_domination_number(g)
    }
}

/// Three-state DP over a rooted tree. For each vertex `v`:
/// `taken` — `v` in the set; `covered` — `v` out, dominated by a child;
/// `open` — `v` out and undominated (its parent must take care of it).
pub(crate) fn tree_domination_number(t: &Graph) -> usize {
    const INF: usize = usize::MAX / 4;
    let n = t.order();
    if n == 1 {
        return 1;
    }
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }

    let mut taken = vec![INF; n];
    let mut covered = vec![INF; n];
    let mut open = vec![INF; n];
    for &v in order.iter().rev() {
        let children = t.neighbors(v).iter().copied().filter(|&w| w != parent[v]);
        let mut take = 1usize;
        let mut leave_open = 0usize;
        let mut base = 0usize;
        let mut extra = INF;
        let mut leaf = true;
        for c in children {
            leaf = false;
            take += taken[c].min(covered[c]).min(open[c]);
            leave_open = (leave_open + covered[c]).min(INF);
            base += taken[c].min(covered[c]);
            extra = extra.min(taken[c].saturating_sub(covered[c]));
        }
        taken[v] = take;
        open[v] = leave_open;
        covered[v] = if leaf { INF } else { base + extra };
    }
    taken[0].min(covered[0])
}

struct SetCover {
    closed: Vec<VertexSet>,
    best: usize,
}

impl SetCover {
    fn search(&mut self, undominated: &VertexSet, chosen: usize) {
        if undominated.is_empty() {
            self.best = self.best.min(chosen);
            return;
        }
        let max_gain = self
            .closed
            .iter()
            .map(|c| c.intersection_len(undominated))
            .max()
            .unwrap_or(0);
        if max_gain == 0 {
            return;
        }
        let lower = undominated.len().div_ceil(max_gain);
        if chosen + lower >= self.best {
            return;
        }
        // the undominated vertex with the fewest ways to be dominated
        let target = undominated
            .iter()
            .min_by_key(|&u| self.closed[u].len())
            .expect("non-empty");
        let mut options: Vec<usize> = self.closed[target].iter().collect();
        options.sort_by_key(|&w| std::cmp::Reverse(self.closed[w].intersection_len(undominated)));
        for w in options {
            let rest = undominated.difference(&self.closed[w]);
            self.search(&rest, chosen + 1);
        }
    }
}

pub(crate) fn general_domination_number(g: &Graph) -> usize {
    let n = g.order();
    let closed: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut s = VertexSet::empty(n);
            s.insert(v);
            g.neighbors(v).iter().for_each(|&w| s.insert(w));
            s
        })
        .collect();
    let mut solver = SetCover { closed, best: n };
    solver.search(&VertexSet::full(n), 0);
    solver.best
}
