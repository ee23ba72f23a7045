//! Exact characteristic polynomials and the peak statistics of trees.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::InvariantError;
use crate::graph::{all_pairs_distances, Graph};

/// Coefficients `c_0..c_n` of `det(xI − M) = Σ c_i x^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    /// Horner evaluation in floating point.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

/// Division-free characteristic polynomial (Berkowitz).
///
/// Works over the leading principal submatrices: if `p_{r-1}` is the
/// polynomial of the top-left block `B`, and the next row/column are `R`,
/// `C` with corner `a`, then `p_r = T · p_{r-1}` where `T` is the lower
/// triangular Toeplitz matrix with first column
/// `1, −a, −RC, −RBC, −RB²C, …`.
pub fn char_poly_exact(m: &[Vec<i64>]) -> CharPoly {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    // coefficients from the highest power down
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        // column of the Toeplitz matrix, length r + 2
        let mut col: Vec<BigInt> = Vec::with_capacity(r + 2);
        col.push(BigInt::one());
        col.push(BigInt::from(-m[r][r]));
        let mut v: Vec<BigInt> = (0..r).map(|i| BigInt::from(m[i][r])).collect();
        for _ in 0..r {
            let rc: BigInt = (0..r)
                .filter(|&j| m[r][j] != 0)
                .map(|j| &v[j] * m[r][j])
                .sum();
            col.push(-rc);
            v = (0..r)
                .map(|i| {
                    (0..r)
                        .filter(|&j| m[i][j] != 0)
                        .map(|j| &v[j] * m[i][j])
                        .sum()
                })
                .collect();
        }
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| {
                (0..p.len().min(i + 1))
                    .filter(|&j| !p[j].is_zero() && !col[i - j].is_zero())
                    .map(|j| &col[i - j] * &p[j])
                    .sum()
            })
            .collect();
        p = next;
    }
    p.reverse();
    CharPoly { coeffs: p }
}

pub fn adjacency_char_poly(g: &Graph) -> CharPoly {
    char_poly_exact(&g.adjacency_matrix())
}

pub fn distance_char_poly(g: &Graph) -> Result<CharPoly, InvariantError> {
    Ok(char_poly_exact(&all_pairs_distances(g)?.to_rows()))
}

/// Peak positions of the coefficient sequences of a tree's adjacency and
/// distance characteristic polynomials. All indices are 0-based and ties go
/// to the smallest index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeakStats {
    /// Peak of `|a_i|` over the non-zero adjacency coefficients, ascending
    /// exponent order.
    pub p_a: usize,
    /// Last index of that non-zero sequence (count − 1).
    pub m: usize,
    /// Peak of the normalized distance coefficients `d_0..d_{n−2}`.
    pub p_d: usize,
    /// Peak of `d_1..d_{n−2}`, reported as an index into the same sequence.
    pub p_d_from_one: usize,
    pub n: usize,
}

pub fn peak_stats(t: &Graph) -> Result<PeakStats, InvariantError> {
    if !t.is_tree() {
        return Err(InvariantError::NotATree);
    }
    let n = t.order();
    if n < 3 {
        return Err(InvariantError::TooSmall { needed: 3, got: n });
    }

    let cpa = adjacency_char_poly(t);
    let nonzero: Vec<BigInt> = cpa.coeffs().iter().filter(|c| !c.is_zero()).map(|c| c.abs()).collect();
    let p_a = first_argmax(&nonzero);
    let m = nonzero.len() - 1;

    // d_i = 2^i |δ_i| / 2^(n−2); the common denominator does not move the peak
    let cpd = distance_char_poly(t)?;
    let scaled: Vec<BigInt> = (0..=n - 2).map(|i| cpd.coeff(i).abs() << i).collect();
    let p_d = first_argmax(&scaled);
    let p_d_from_one = 1 + first_argmax(&scaled[1..]);
    if p_d != p_d_from_one {
        log::debug!("distance peak differs by range: 0-based start {p_d}, 1-based start {p_d_from_one}");
    }

    Ok(PeakStats { p_a, m, p_d, p_d_from_one, n })
}

fn first_argmax(xs: &[BigInt]) -> usize {
    let mut best = 0;
    for (i, x) in xs.iter().enumerate().skip(1) {
        if x > &xs[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_adjacency_polynomials() {
        assert_eq!(adjacency_char_poly(&Graph::empty(1).unwrap()).coeffs(), ints(&[0, 1]));
        assert_eq!(adjacency_char_poly(&Graph::path(2).unwrap()).coeffs(), ints(&[-1, 0, 1]));
        assert_eq!(
            adjacency_char_poly(&Graph::path(4).unwrap()).coeffs(),
            ints(&[1, 0, -3, 0, 1])
        );
        // K3: (x − 2)(x + 1)^2 = x^3 − 3x − 2
        assert_eq!(
            adjacency_char_poly(&Graph::complete(3).unwrap()).coeffs(),
            ints(&[-2, -3, 0, 1])
        );
    }

    #[test]
    fn non_symmetric_input() {
        // [[1,2],[3,4]]: x^2 − 5x − 2
        let p = char_poly_exact(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(p.coeffs(), ints(&[-2, -5, 1]));
    }

    #[test]
    fn distance_polynomial_of_p3() {
        // D(P3) = [[0,1,2],[1,0,1],[2,1,0]]: x^3 − 6x − 4
        let p = distance_char_poly(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(p.coeffs(), ints(&[-4, -6, 0, 1]));
    }

    #[test]
    fn peak_examples() {
        let p4 = peak_stats(&Graph::path(4).unwrap()).unwrap();
        assert_eq!((p4.p_a, p4.m), (1, 2));
        assert!(p4.p_d <= 2);

        let p3 = peak_stats(&Graph::path(3).unwrap()).unwrap();
        assert_eq!((p3.p_a, p3.m), (0, 1));
        // scaled |δ| = [4, 12]: peak at 1
        assert_eq!(p3.p_d, 1);

        assert_eq!(peak_stats(&Graph::cycle(4).unwrap()), Err(InvariantError::NotATree));
        assert!(matches!(peak_stats(&Graph::path(2).unwrap()), Err(InvariantError::TooSmall { .. })));
    }

    #[test]
    fn eval_vanishes_at_eigenvalues() {
        let p = adjacency_char_poly(&Graph::path(4).unwrap());
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert!(p.eval(golden).abs() < 1e-12);
    }
}
