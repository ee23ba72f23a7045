//! Real spectra of the adjacency, distance and Laplacian matrices.

use nalgebra::{DMatrix, SymmetricEigen};

use super::InvariantError;
use crate::graph::{all_pairs_distances, Graph};

/// Default accepted residual, relative to the Frobenius norm of the matrix.
pub const DEFAULT_RESIDUAL_TARGET: f64 = 1e-10;
/// Residual target used when certifying counterexamples.
pub const STRICT_RESIDUAL_TARGET: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumOrder {
    Descending,
    Ascending,
}

/// Eigenvalues of a symmetric matrix together with two accuracy figures.
///
/// `residual_bound` is the largest eigenpair residual `‖Mv − λv‖`.
/// `error_bound` bounds the distance between each computed eigenvalue and
/// the true eigenvalue of the same rank (Weyl), accounting for the residual
/// block, the loss of orthogonality of the computed eigenvectors, and the
/// rounding of the check itself.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    order: SpectrumOrder,
    residual_bound: f64,
    error_bound: f64,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn order(&self) -> SpectrumOrder {
        self.order
    }

    pub fn residual_bound(&self) -> f64 {
        self.residual_bound
    }

    pub fn error_bound(&self) -> f64 {
        self.error_bound
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-based access in the spectrum's own ordering.
    pub fn nth(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

fn to_dmatrix(rows: &[Vec<i64>]) -> DMatrix<f64> {
    let n = rows.len();
    DMatrix::from_fn(n, n, |i, j| rows[i][j] as f64)
}

/// Full eigen-decomposition with a posteriori accuracy bounds.
pub fn symmetric_spectrum(
    rows: &[Vec<i64>],
    order: SpectrumOrder,
    target: f64,
) -> Result<Spectrum, InvariantError> {
    let n = rows.len();
    let m = to_dmatrix(rows);
    let norm = m.norm();
    let eig = SymmetricEigen::try_new(m.clone(), f64::EPSILON, 0).ok_or(InvariantError::NoConvergence {
        residual: f64::INFINITY,
    })?;
    let vecs = &eig.eigenvectors;
    let vals = &eig.eigenvalues;

    let residual = &m * vecs - vecs * DMatrix::from_diagonal(vals);
    let residual_bound = residual
        .column_iter()
        .map(|c| c.norm())
        .fold(0.0, f64::max);
    let ortho = (vecs.transpose() * vecs - DMatrix::<f64>::identity(n, n)).norm();
    let max_abs = vals.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
    let rounding = (n as f64) * f64::EPSILON * (norm + max_abs) * 4.0;
    let error_bound = residual.norm() * (1.0 + ortho) + (norm + max_abs) * ortho + rounding;

    if residual_bound.is_nan() || residual_bound > target * norm.max(1.0) {
        return Err(InvariantError::NoConvergence { residual: residual_bound });
    }

    let mut values: Vec<f64> = vals.iter().copied().collect();
    sort(&mut values, order);
    Ok(Spectrum {
        values,
        order,
        residual_bound,
        error_bound,
    })
}

/// Eigenvalues only, without eigenvectors or accuracy bounds.
pub fn symmetric_eigenvalues(rows: &[Vec<i64>], order: SpectrumOrder) -> Vec<f64> {
    let m = to_dmatrix(rows);
    let mut values: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    sort(&mut values, order);
    values
}

fn sort(values: &mut [f64], order: SpectrumOrder) {
    match order {
        SpectrumOrder::Ascending => values.sort_by(f64::total_cmp),
        SpectrumOrder::Descending => values.sort_by(|a, b| b.total_cmp(a)),
    }
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum, InvariantError> {
    symmetric_spectrum(&g.adjacency_matrix(), SpectrumOrder::Descending, DEFAULT_RESIDUAL_TARGET)
}

pub fn distance_spectrum(g: &Graph) -> Result<Spectrum, InvariantError> {
    let d = all_pairs_distances(g)?;
    symmetric_spectrum(&d.to_rows(), SpectrumOrder::Descending, DEFAULT_RESIDUAL_TARGET)
}

pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum, InvariantError> {
    symmetric_spectrum(&g.laplacian_matrix(), SpectrumOrder::Ascending, DEFAULT_RESIDUAL_TARGET)
}

/// Largest adjacency eigenvalue λ1.
pub fn spectral_radius(g: &Graph) -> f64 {
    symmetric_eigenvalues(&g.adjacency_matrix(), SpectrumOrder::Descending)[0]
}

/// Second smallest Laplacian eigenvalue a(G).
pub fn algebraic_connectivity(g: &Graph) -> Result<f64, InvariantError> {
    if g.order() < 2 {
        return Err(InvariantError::TooSmall { needed: 2, got: g.order() });
    }
    Ok(symmetric_eigenvalues(&g.laplacian_matrix(), SpectrumOrder::Ascending)[1])
}
