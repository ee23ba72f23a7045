use num_bigint::BigInt;
use num_rational::BigRational;

use super::InvariantError;
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};

pub fn diameter(g: &Graph) -> Result<u32, InvariantError> {
    Ok(all_pairs_distances(g)?.max())
}

/// Minimum over vertices of the average distance to all other vertices.
pub fn proximity(g: &Graph) -> Result<BigRational, InvariantError> {
    proximity_from(&all_pairs_distances(g)?)
}

pub(crate) fn proximity_from(d: &DistanceMatrix) -> Result<BigRational, InvariantError> {
    let n = d.order();
    if n < 2 {
        return Err(InvariantError::TooSmall { needed: 2, got: n });
    }
    let min_sum = (0..n).map(|u| d.row_sum(u)).min().expect("n ≥ 2");
    Ok(BigRational::new(BigInt::from(min_sum), BigInt::from(n - 1)))
}

pub(crate) fn proximity_f64_from(d: &DistanceMatrix) -> f64 {
    let n = d.order();
    let min_sum = (0..n).map(|u| d.row_sum(u)).min().unwrap_or(0);
    min_sum as f64 / (n - 1) as f64
}
