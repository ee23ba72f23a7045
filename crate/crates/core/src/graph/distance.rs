use std::collections::VecDeque;

use super::{Graph, GraphError};

/// Shortest-path distances of a connected graph, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn max(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    pub fn row_sum(&self, u: usize) -> u64 {
        self.row(u).iter().map(|&d| d as u64).sum()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| self.row(u).iter().map(|&d| d as i64).collect())
            .collect()
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    let n = g.order();
    let mut data = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut data[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &v in g.neighbors(u) {
                if row[v] == u32::MAX {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        if row.contains(&u32::MAX) {
            return Err(GraphError::Disconnected);
        }
    }
    Ok(DistanceMatrix { n, data })
}
