//! The ten conjectures: hypotheses, search defaults and score functions.
//!
//! A graph satisfying a conjecture's hypotheses refutes it exactly when its
//! score is positive.

mod score;
mod verify;

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, SearchSpace};
use crate::invariants::InvariantError;
use crate::rng::SeededRng;

pub use score::{fast_score, is_counterexample, score, Score, Term, DEFAULT_TAU};
pub use verify::{verify_strict, Verdict, Verification};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConjectureError {
    #[error("unknown conjecture id {0} (expected 1..=10)")]
    UnknownId(u8),
    #[error("hypotheses violated: {}", join(.0))]
    Hypotheses(Vec<Violation>),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConjectureId(u8);

impl ConjectureId {
    pub fn new(id: u8) -> Result<Self, ConjectureError> {
        if (1..=10).contains(&id) {
            Ok(ConjectureId(id))
        } else {
            Err(ConjectureError::UnknownId(id))
        }
    }

    pub fn all() -> impl Iterator<Item = ConjectureId> {
        (1..=10).map(ConjectureId)
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn spec(self) -> &'static ConjectureSpec {
        &REGISTRY[self.0 as usize - 1]
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Recipe for a starting graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitialGraph {
    Path(usize),
    Star(usize),
    Complete(usize),
    RandomTree(usize),
}

impl InitialGraph {
    pub fn build(self, rng: &mut SeededRng) -> Graph {
        let g = match self {
            InitialGraph::Path(n) => Graph::path(n),
            InitialGraph::Star(n) => Graph::star(n),
            InitialGraph::Complete(n) => Graph::complete(n),
            InitialGraph::RandomTree(n) => Graph::random_tree(n, rng),
        };
        g.expect("initial recipes have positive order")
    }
}

impl fmt::Display for InitialGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitialGraph::Path(n) => write!(f, "path:{n}"),
            InitialGraph::Star(n) => write!(f, "star:{n}"),
            InitialGraph::Complete(n) => write!(f, "complete:{n}"),
            InitialGraph::RandomTree(n) => write!(f, "random-tree:{n}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConjectureSpec {
    pub id: u8,
    pub name: &'static str,
    /// The claimed inequality, in plain text.
    pub statement: &'static str,
    /// The score whose positivity refutes the statement.
    pub formula: &'static str,
    pub space: SearchSpace,
    pub min_order: usize,
    pub requires_tree: bool,
    pub default_initial: InitialGraph,
}

impl ConjectureSpec {
    pub fn id(&self) -> ConjectureId {
        ConjectureId(self.id)
    }

    pub fn requires_connected(&self) -> bool {
        // every conjecture except the harmonic one is stated for connected graphs
        self.id != 4
    }
}

static REGISTRY: [ConjectureSpec; 10] = [
    ConjectureSpec {
        id: 1,
        name: "spectral radius plus matching number",
        statement: "lambda1 + mu >= sqrt(n-1) + 1 (connected, n >= 3)",
        formula: "s1 = sqrt(n-1) + 1 - lambda1 - mu",
        space: SearchSpace::ConnectedGraphs,
        min_order: 3,
        requires_tree: false,
        default_initial: InitialGraph::RandomTree(5),
    },
    ConjectureSpec {
        id: 2,
        name: "proximity plus distance eigenvalue",
        statement: "pi + dist_eig[floor(2D/3)] > 0 (connected, n >= 4)",
        formula: "s2 = -pi - dist_eig[floor(2D/3)]",
        space: SearchSpace::Trees,
        min_order: 4,
        requires_tree: false,
        default_initial: InitialGraph::Path(13),
    },
    ConjectureSpec {
        id: 3,
        name: "peaks of adjacency and distance characteristic polynomials",
        statement: "p_A/m = 1 - p_D/n (trees)",
        formula: "s3 = |p_A/m - (1 - p_D/n)|",
        space: SearchSpace::Trees,
        min_order: 2,
        requires_tree: true,
        default_initial: InitialGraph::RandomTree(5),
    },
    ConjectureSpec {
        id: 4,
        name: "second eigenvalue versus harmonic index",
        statement: "lambda2 <= H (any graph)",
        formula: "s4 = lambda2 - H",
        space: SearchSpace::Trees,
        min_order: 1,
        requires_tree: false,
        default_initial: InitialGraph::Star(5),
    },
    ConjectureSpec {
        id: 5,
        name: "modified second Zagreb upper bound",
        statement: "mM2 <= (n+1)/4 (trees)",
        formula: "s5 = mM2 - (n+1)/4",
        space: SearchSpace::Trees,
        min_order: 2,
        requires_tree: true,
        default_initial: InitialGraph::RandomTree(5),
    },
    ConjectureSpec {
        id: 6,
        name: "modified second Zagreb versus domination number",
        statement: "mM2 >= -(gamma-1)/(2(n-gamma)) + (gamma+1)/2 (trees)",
        formula: "s6 = -(gamma-1)/(2(n-gamma)) + (gamma+1)/2 - mM2",
        space: SearchSpace::Trees,
        min_order: 2,
        requires_tree: true,
        default_initial: InitialGraph::RandomTree(5),
    },
    ConjectureSpec {
        id: 7,
        name: "spectral radius times proximity",
        statement: "lambda1 * pi <= n - 1 (connected, n >= 3)",
        formula: "s7 = lambda1 * pi - n + 1",
        space: SearchSpace::ConnectedGraphs,
        min_order: 3,
        requires_tree: false,
        default_initial: InitialGraph::RandomTree(10),
    },
    ConjectureSpec {
        id: 8,
        name: "algebraic connectivity times proximity",
        statement: "a * pi >= B(n) (connected, n >= 3)",
        formula: "s8 = B(n) - a * pi, B(n) = n^2 (1 - cos(pi/n)) / (2(n-1)) for even n, (n+1)(1 - cos(pi/n))/2 otherwise",
        space: SearchSpace::ConnectedGraphs,
        min_order: 3,
        requires_tree: false,
        default_initial: InitialGraph::RandomTree(5),
    },
    ConjectureSpec {
        id: 9,
        name: "spectral radius minus independence number",
        statement: "lambda1 - alpha >= sqrt(n-1) - n + 1 (connected, n >= 3)",
        formula: "s9 = sqrt(n-1) - n + 1 - lambda1 + alpha",
        space: SearchSpace::ConnectedGraphs,
        min_order: 3,
        requires_tree: false,
        default_initial: InitialGraph::RandomTree(5),
    },
    ConjectureSpec {
        id: 10,
        name: "Randic index plus independence number",
        statement: "R + alpha <= n - 1 + sqrt(n-1) (connected, n >= 3)",
        formula: "s10 = R + alpha - n + 1 - sqrt(n-1)",
        space: SearchSpace::ConnectedGraphs,
        min_order: 3,
        requires_tree: false,
        default_initial: InitialGraph::RandomTree(5),
    },
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    MinOrder { needed: usize, got: usize },
    NotConnected,
    NotATree,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MinOrder { needed, got } => write!(f, "n ≥ {needed} violated (n = {got})"),
            Violation::NotConnected => write!(f, "connected graph required"),
            Violation::NotATree => write!(f, "tree required"),
        }
    }
}

/// Every hypothesis of the conjecture that `g` fails; empty iff admissible.
pub fn check_hypotheses(id: ConjectureId, g: &Graph) -> Vec<Violation> {
    let spec = id.spec();
    let mut out = Vec::new();
    if g.order() < spec.min_order {
        out.push(Violation::MinOrder { needed: spec.min_order, got: g.order() });
    }
    let connected = g.is_connected();
    if spec.requires_connected() && !connected {
        out.push(Violation::NotConnected);
    }
    if spec.requires_tree && !(connected && g.size() + 1 == g.order()) {
        out.push(Violation::NotATree);
    }
    out
}

/// Tab-separated catalog of all conjectures, one row per id.
pub fn catalog() -> String {
    let mut out = String::from("id\tname\tspace\tmin_order\ttree_required\tdefault_initial\tstatement\tscore\n");
    for c in &REGISTRY {
        let space = match c.space {
            SearchSpace::Trees => "trees",
            SearchSpace::ConnectedGraphs => "connected",
        };
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            c.id, c.name, space, c.min_order, c.requires_tree, c.default_initial, c.statement, c.formula
        ));
    }
    out
}
