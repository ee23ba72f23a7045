//! Undirected simple graphs on vertices `0..n`.

mod distance;
mod format;
mod moves;

pub use distance::{all_pairs_distances, DistanceMatrix};
pub use format::{decode_graph6, encode_graph6, export_dot};
pub use moves::{apply_move, legal_moves, random_playout, removal_moves, Move, SearchSpace};

use std::collections::{BinaryHeap, VecDeque};
use std::cmp::Reverse;
use std::fmt;

use thiserror::Error;

use crate::rng::SeededRng;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid move {mv:?}: {reason}")]
    InvalidMove { mv: Move, reason: &'static str },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: &'static str },
}

/// An undirected simple graph with at least one vertex.
///
/// Neighbor lists are kept sorted and free of duplicates and self-loops.
/// Values are immutable; every edit produces a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Named graph families with a canonical labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Named {
    Path,
    Star,
    Complete,
    Cycle,
}

impl Graph {
    /// The edgeless graph on `n ≥ 1` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidParameter("graph order must be at least 1".into()));
        }
        Ok(Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::InvalidParameter(format!(
                    "edge {u}-{v} out of range for order {n}"
                )));
            }
            if u == v {
                return Err(GraphError::InvalidParameter(format!("self-loop at {u}")));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::InvalidParameter(format!("duplicate edge {u}-{v}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn named(kind: Named, n: usize) -> Result<Self, GraphError> {
        match kind {
            Named::Path => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
            Named::Star => Graph::from_edges(n, (1..n).map(|i| (0, i))),
            Named::Complete => {
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            Named::Cycle => {
                if n < 3 {
                    return Err(GraphError::InvalidParameter(format!(
                        "cycle needs at least 3 vertices, got {n}"
                    )));
                }
                Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
        }
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::named(Named::Path, n)
    }

    pub fn star(n: usize) -> Result<Self, GraphError> {
        Graph::named(Named::Star, n)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Graph::named(Named::Complete, n)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        Graph::named(Named::Cycle, n)
    }

    /// Uniformly random labeled tree, decoded from a random Prüfer sequence.
    pub fn random_tree(n: usize, rng: &mut SeededRng) -> Result<Self, GraphError> {
        if n <= 2 {
            return Graph::path(n);
        }
        let code: Vec<usize> = (0..n - 2).map(|_| rng.index(n)).collect();
        Ok(Graph::from_prufer(n, &code))
    }

    fn from_prufer(n: usize, code: &[usize]) -> Graph {
        let mut remaining = vec![1usize; n];
        for &c in code {
            remaining[c] += 1;
        }
        let mut leaves: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
        let mut g = Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        };
        for &c in code {
            let Reverse(leaf) = leaves.pop().expect("Prüfer decoding always has a leaf");
            g.insert_edge(leaf, c);
            remaining[c] -= 1;
            if remaining[c] == 1 {
                leaves.push(Reverse(c));
            }
        }
        let Reverse(a) = leaves.pop().expect("two leaves remain");
        let Reverse(b) = leaves.pop().expect("two leaves remain");
        g.insert_edge(a, b);
        g
    }

    /// Disjoint union of `self` and `other` plus the edge `u`–`v'`, where
    /// `v'` is `v` shifted past the vertices of `self`.
    pub fn connect_at(&self, other: &Graph, u: usize, v: usize) -> Result<Self, GraphError> {
        if u >= self.order() || v >= other.order() {
            return Err(GraphError::InvalidParameter(format!(
                "join vertices {u}/{v} out of range for orders {}/{}",
                self.order(),
                other.order()
            )));
        }
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&w| w + shift).collect::<Vec<_>>()),
        );
        let mut g = Graph {
            adj,
            edge_count: self.edge_count + other.edge_count,
        };
        g.insert_edge(u, v + shift);
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Non-edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn complement_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.order() && self.is_connected()
    }

    pub(crate) fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.order();
        let mut a = vec![vec![0i64; n]; n];
        for (u, v) in self.edges() {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    /// Dense Laplacian `Deg - A`, row-major.
    pub fn laplacian_matrix(&self) -> Vec<Vec<i64>> {
        let mut l = self.adjacency_matrix();
        for (v, row) in l.iter_mut().enumerate() {
            for x in row.iter_mut() {
                *x = -*x;
            }
            row[v] = self.degree(v) as i64;
        }
        l
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.edge_count += 1;
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        let pos = self.adj[u].binary_search(&v).expect("edge present");
        self.adj[u].remove(pos);
        let pos = self.adj[v].binary_search(&u).expect("edge present");
        self.adj[v].remove(pos);
        self.edge_count -= 1;
    }

    pub(crate) fn push_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Deletes `v` and its incident edges; labels above `v` shift down by one.
    pub(crate) fn remove_vertex(&mut self, v: usize) {
        let removed = self.adj.remove(v);
        self.edge_count -= removed.len();
        for nbrs in &mut self.adj {
            nbrs.retain(|&w| w != v);
            for w in nbrs.iter_mut() {
                if *w > v {
                    *w -= 1;
                }
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
