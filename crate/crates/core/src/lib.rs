//! Counterexample search for graph theory conjectures.
//!
//! The crate is organized bottom-up: [`graph`] holds the search state and
//! its move set, [`invariants`] computes every quantity the conjecture
//! scores need, [`conjectures`] defines the ten score functions and the
//! strict verifier, [`search`] implements nested and adaptive Monte Carlo
//! search, and [`families`] builds the infinite counterexample families.

pub mod graph;
pub mod rng;

pub use graph::{Graph, GraphError, Move, SearchSpace};
pub use rng::SeededRng;
pub mod invariants;
pub mod conjectures;
pub mod search;
pub mod families;
