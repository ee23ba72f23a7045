//! Degree-based topological indices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::Graph;

/// Generalized Randić index `Σ_{uv ∈ E} (d_u d_v)^alpha`.
pub fn randic_general(g: &Graph, alpha: f64) -> f64 {
    g.edges()
        .map(|(u, v)| ((g.degree(u) * g.degree(v)) as f64).powf(alpha))
        .sum()
}

/// Generalized Randić index for an integer exponent, in exact arithmetic.
/// `alpha = −1` is the modified second Zagreb index, `alpha = 1` the second
/// Zagreb index.
pub fn randic_exact(g: &Graph, alpha: i32) -> BigRational {
    let mut total = BigRational::zero();
    for (u, v) in g.edges() {
        let prod = BigInt::from(g.degree(u) * g.degree(v));
        let term = if alpha >= 0 {
            BigRational::from_integer(num_traits::pow(prod, alpha as usize))
        } else {
            BigRational::new(BigInt::one(), num_traits::pow(prod, alpha.unsigned_abs() as usize))
        };
        total += term;
    }
    total
}

/// Randić index, `alpha = −1/2`.
pub fn randic(g: &Graph) -> f64 {
    g.edges()
        .map(|(u, v)| 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt())
        .sum()
}

/// Modified second Zagreb index `Σ 1/(d_u d_v)`.
pub fn modified_zagreb(g: &Graph) -> f64 {
    g.edges()
        .map(|(u, v)| 1.0 / (g.degree(u) * g.degree(v)) as f64)
        .sum()
}

pub fn modified_zagreb_exact(g: &Graph) -> BigRational {
    randic_exact(g, -1)
}

/// Harmonic index `Σ 2/(d_u + d_v)`.
pub fn harmonic(g: &Graph) -> f64 {
    g.edges()
        .map(|(u, v)| 2.0 / (g.degree(u) + g.degree(v)) as f64)
        .sum()
}

pub fn harmonic_exact(g: &Graph) -> BigRational {
    let mut total = BigRational::zero();
    for (u, v) in g.edges() {
        total += BigRational::new(BigInt::from(2), BigInt::from(g.degree(u) + g.degree(v)));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn star_values() {
        let s5 = Graph::star(5).unwrap();
        assert!((randic(&s5) - 2.0).abs() < 1e-15);
        assert!((randic_general(&s5, -0.5) - 2.0).abs() < 1e-15);
        assert_eq!(harmonic_exact(&s5), ratio(8, 5));
        assert_eq!(randic_exact(&s5, 1), ratio(16, 1));
        assert_eq!(modified_zagreb_exact(&s5), ratio(1, 1));
    }

    #[test]
    fn harmonic_small_cases() {
        assert_eq!(harmonic_exact(&Graph::complete(2).unwrap()), ratio(1, 1));
        for n in 3..12 {
            let c = Graph::cycle(n).unwrap();
            assert_eq!(harmonic_exact(&c), ratio(n as i64, 2));
        }
    }

    #[test]
    fn modified_zagreb_of_p5() {
        // ends 1/2 + 1/2, inner 1/4 + 1/4
        let p5 = Graph::path(5).unwrap();
        assert_eq!(modified_zagreb_exact(&p5), ratio(3, 2));
        assert!((modified_zagreb(&p5) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn exact_and_float_agree() {
        let g = Graph::complete(4).unwrap().connect_at(&Graph::star(6).unwrap(), 2, 0).unwrap();
        let h = harmonic_exact(&g).to_f64().unwrap();
        assert!((h - harmonic(&g)).abs() < 1e-12);
        let m = modified_zagreb_exact(&g).to_f64().unwrap();
        assert!((m - randic_general(&g, -1.0)).abs() < 1e-12);
        let z = randic_exact(&g, 1).to_f64().unwrap();
        assert!((z - randic_general(&g, 1.0)).abs() < 1e-9);
    }
}
