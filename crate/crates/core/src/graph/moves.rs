use super::{Graph, GraphError};
use crate::rng::SeededRng;

/// One atomic edit of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// Attach a new pendant vertex to `v`.
    AddLeaf(usize),
    /// Replace edge `uv` by a path `u w v` through a new vertex `w`.
    Subdivide(usize, usize),
    /// Join two non-adjacent vertices.
    AddEdge(usize, usize),
    /// Delete a degree-1 vertex.
    RemoveLeaf(usize),
    /// Delete a degree-2 vertex and join its two (non-adjacent) neighbors.
    Smooth(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchSpace {
    Trees,
    ConnectedGraphs,
}

impl SearchSpace {
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            SearchSpace::Trees => g.is_tree(),
            SearchSpace::ConnectedGraphs => g.is_connected(),
        }
    }

    /// Number of forward moves available from `g`.
    pub fn move_count(self, g: &Graph) -> usize {
        let n = g.order();
        match self {
            SearchSpace::Trees => n + g.size(),
            SearchSpace::ConnectedGraphs => n + n * (n - 1) / 2,
        }
    }
}

/// Forward moves from a connected graph: a leaf on every vertex, a
/// subdivision of every edge, and (outside tree space) every missing edge.
pub fn legal_moves(g: &Graph, space: SearchSpace) -> Result<Vec<Move>, GraphError> {
    g.require_connected()?;
    let mut moves = Vec::with_capacity(space.move_count(g));
    moves.extend((0..g.order()).map(Move::AddLeaf));
    moves.extend(g.edges().map(|(u, v)| Move::Subdivide(u, v)));
    if space == SearchSpace::ConnectedGraphs {
        moves.extend(g.complement_edges().map(|(u, v)| Move::AddEdge(u, v)));
    }
    Ok(moves)
}

/// Pruning moves: every leaf, then every smoothable degree-2 vertex.
///
/// Removing either kind keeps a connected graph connected and a tree a tree.
/// A single vertex has nothing removable.
pub fn removal_moves(g: &Graph) -> Vec<Move> {
    if g.order() < 2 {
        return Vec::new();
    }
    let leaves = (0..g.order()).filter(|&v| g.degree(v) == 1).map(Move::RemoveLeaf);
    let smooth = (0..g.order())
        .filter(|&w| g.degree(w) == 2 && is_smoothable(g, w))
        .map(Move::Smooth);
    leaves.chain(smooth).collect()
}

fn is_smoothable(g: &Graph, w: usize) -> bool {
    match g.neighbors(w) {
        [a, b] => !g.has_edge(*a, *b),
        _ => false,
    }
}

pub fn apply_move(g: &Graph, mv: Move) -> Result<Graph, GraphError> {
    let n = g.order();
    let invalid = |reason| Err(GraphError::InvalidMove { mv, reason });
    let mut out = g.clone();
    match mv {
        Move::AddLeaf(v) => {
            if v >= n {
                return invalid("vertex out of range");
            }
            let w = out.push_vertex();
            out.insert_edge(v, w);
        }
        Move::Subdivide(u, v) => {
            if u >= n || v >= n || !g.has_edge(u, v) {
                return invalid("not an edge");
            }
            out.delete_edge(u, v);
            let w = out.push_vertex();
            out.insert_edge(u, w);
            out.insert_edge(v, w);
        }
        Move::AddEdge(u, v) => {
            if u >= n || v >= n || u == v || g.has_edge(u, v) {
                return invalid("not a missing edge");
            }
            out.insert_edge(u, v);
        }
        Move::RemoveLeaf(v) => {
            if v >= n || g.degree(v) != 1 {
                return invalid("not a leaf");
            }
            out.remove_vertex(v);
        }
        Move::Smooth(w) => {
            if w >= n || g.degree(w) != 2 || !is_smoothable(g, w) {
                return invalid("not a smoothable degree-2 vertex");
            }
            let (a, b) = (g.neighbors(w)[0], g.neighbors(w)[1]);
            out.insert_edge(a, b);
            out.remove_vertex(w);
        }
    }
    Ok(out)
}

/// Draws one move uniformly from `legal_moves(g, space)` without
/// materializing the list.
pub(crate) fn sample_move(g: &Graph, space: SearchSpace, rng: &mut SeededRng) -> Move {
    let n = g.order();
    let r = rng.index(space.move_count(g));
    if r < n {
        return Move::AddLeaf(r);
    }
    match space {
        SearchSpace::Trees => {
            let (u, v) = g.edges().nth(r - n).expect("edge index in range");
            Move::Subdivide(u, v)
        }
        SearchSpace::ConnectedGraphs => {
            let (u, v) = unrank_pair(n, r - n);
            if g.has_edge(u, v) {
                Move::Subdivide(u, v)
            } else {
                Move::AddEdge(u, v)
            }
        }
    }
}

/// The `idx`-th pair `(u, v)`, `u < v`, in lexicographic order.
fn unrank_pair(n: usize, mut idx: usize) -> (usize, usize) {
    for u in 0..n {
        let row = n - 1 - u;
        if idx < row {
            return (u, u + 1 + idx);
        }
        idx -= row;
    }
    unreachable!("pair index out of range")
}

/// Applies `depth` uniformly drawn forward moves.
pub fn random_playout(g: &Graph, depth: usize, space: SearchSpace, rng: &mut SeededRng) -> Graph {
    let mut cur = g.clone();
    for _ in 0..depth {
        let mv = sample_move(&cur, space, rng);
        cur = apply_move(&cur, mv).expect("sampled moves are legal");
    }
    cur
}
