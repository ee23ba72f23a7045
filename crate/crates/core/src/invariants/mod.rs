//! Graph invariants used by the conjecture scores.

mod bitset;
mod charpoly;
mod domination;
mod independence;
mod indices;
mod matching;
mod metric;
mod spectrum;

use std::sync::atomic::{AtomicUsize, Ordering};

use thiserror::Error;

use crate::graph::GraphError;

pub use charpoly::{adjacency_char_poly, char_poly_exact, distance_char_poly, peak_stats, CharPoly, PeakStats};
pub use domination::domination_number;
pub use independence::independence_number;
pub use indices::{
    harmonic, harmonic_exact, modified_zagreb, modified_zagreb_exact, randic, randic_exact, randic_general,
};
pub use matching::{matching_number, maximum_matching};
pub use metric::{diameter, proximity};
pub(crate) use metric::{proximity_f64_from, proximity_from};
pub use spectrum::{
    adjacency_spectrum, algebraic_connectivity, distance_spectrum, laplacian_spectrum, spectral_radius,
    symmetric_eigenvalues, symmetric_spectrum, Spectrum, SpectrumOrder, DEFAULT_RESIDUAL_TARGET,
    STRICT_RESIDUAL_TARGET,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InvariantError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("need at least {needed} vertices, got {got}")]
    TooSmall { needed: usize, got: usize },
    #[error("eigensolver did not converge (residual {residual:e})")]
    NoConvergence { residual: f64 },
}

impl From<GraphError> for InvariantError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Disconnected => InvariantError::Disconnected,
            other => unreachable!("distance computation only fails on connectivity: {other}"),
        }
    }
}

static SIZE_GUARD: AtomicUsize = AtomicUsize::new(64);

/// Order above which the exponential solvers log a performance warning.
pub fn set_size_guard(n: usize) {
    SIZE_GUARD.store(n, Ordering::Relaxed);
}

pub fn size_guard() -> usize {
    SIZE_GUARD.load(Ordering::Relaxed)
}

fn warn_if_large(what: &str, n: usize) {
    if n > size_guard() {
        log::warn!("exact {what} on {n} vertices exceeds the size guard of {}; this may be slow", size_guard());
    }
}
