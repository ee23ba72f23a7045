use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::{check_hypotheses, ConjectureError, ConjectureId};
use crate::graph::{all_pairs_distances, Graph};
use crate::invariants::{
    self, domination_number, independence_number, matching_number, peak_stats, symmetric_eigenvalues,
    symmetric_spectrum, InvariantError, SpectrumOrder, DEFAULT_RESIDUAL_TARGET,
};

/// Scores at or below this threshold do not count as counterexamples.
pub const DEFAULT_TAU: f64 = 1e-9;

/// One named ingredient of a score.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub symbol: &'static str,
    pub value: f64,
    pub exact: Option<BigRational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Score {
    /// The score, or −∞ when it is undefined for the graph.
    pub value: f64,
    /// The score itself when every ingredient is rational.
    pub exact: Option<BigRational>,
    pub terms: Vec<Term>,
    /// Bound on the error contributed by eigenvalue computations.
    pub spectral_error_bound: f64,
    order: usize,
}

impl Score {
    pub fn is_invalid(&self) -> bool {
        self.value == f64::NEG_INFINITY
    }

    /// Spectral error plus a floating-point rounding allowance for the
    /// remaining arithmetic. Zero for exact scores.
    pub fn error_bound(&self) -> f64 {
        if self.exact.is_some() || self.is_invalid() {
            return 0.0;
        }
        let magnitude: f64 = self.terms.iter().map(|t| t.value.abs()).sum();
        self.spectral_error_bound + 16.0 * f64::EPSILON * (1.0 + self.order as f64 + magnitude)
    }

    pub fn term(&self, symbol: &str) -> Option<&Term> {
        self.terms.iter().find(|t| t.symbol == symbol)
    }
}

#[derive(Clone, Copy)]
pub(crate) enum Mode {
    Fast,
    Full { target: f64 },
}

struct Eval<'g> {
    g: &'g Graph,
    mode: Mode,
    terms: Vec<Term>,
    spectral_error: f64,
}

enum Matrix {
    Adjacency,
    Distance(Vec<Vec<i64>>),
    Laplacian,
}

impl<'g> Eval<'g> {
    fn exact(&self) -> bool {
        matches!(self.mode, Mode::Full { .. })
    }

    fn real(&mut self, symbol: &'static str, value: f64) -> f64 {
        self.terms.push(Term { symbol, value, exact: None });
        value
    }

    fn int(&mut self, symbol: &'static str, value: usize) -> f64 {
        let exact = self.exact().then(|| BigRational::from_integer(BigInt::from(value)));
        self.terms.push(Term { symbol, value: value as f64, exact });
        value as f64
    }

    /// Records a rational term; `exact` is only evaluated in full mode.
    fn rational(&mut self, symbol: &'static str, approx: f64, exact: impl FnOnce() -> BigRational) -> f64 {
        if self.exact() {
            let q = exact();
            let value = q.to_f64().unwrap_or(approx);
            self.terms.push(Term { symbol, value, exact: Some(q) });
            value
        } else {
            self.real(symbol, approx)
        }
    }

    fn eigenvalues(&mut self, m: Matrix, order: SpectrumOrder) -> Result<Vec<f64>, InvariantError> {
        let rows = match m {
            Matrix::Adjacency => self.g.adjacency_matrix(),
            Matrix::Distance(rows) => rows,
            Matrix::Laplacian => self.g.laplacian_matrix(),
        };
        match self.mode {
            Mode::Fast => Ok(symmetric_eigenvalues(&rows, order)),
            Mode::Full { target } => {
                let s = symmetric_spectrum(&rows, order, target)?;
                self.spectral_error = self.spectral_error.max(s.error_bound());
                Ok(s.values().to_vec())
            }
        }
    }

    fn rational_value(&self, q: impl FnOnce() -> BigRational) -> Option<BigRational> {
        self.exact().then(q)
    }
}

fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Evaluates the score of conjecture `id` on `g`.
pub(crate) fn evaluate(id: ConjectureId, g: &Graph, mode: Mode) -> Result<Score, InvariantError> {
    let n = g.order();
    let nf = n as f64;
    let mut ev = Eval { g, mode, terms: Vec::new(), spectral_error: 0.0 };
    let mut exact: Option<BigRational> = None;
    let mut err_scale = 1.0;

    let value = match id.get() {
        1 => {
            let lambda1 = ev.eigenvalues(Matrix::Adjacency, SpectrumOrder::Descending)?[0];
            ev.real("lambda1", lambda1);
            let mu = ev.int("mu", matching_number(g));
            (nf - 1.0).sqrt() + 1.0 - lambda1 - mu
        }
        2 => {
            let d = all_pairs_distances(g)?;
            let diam = d.max() as usize;
            ev.int("D", diam);
            let k = 2 * diam / 3;
            ev.int("k", k);
            let pi = ev.rational("pi", invariants::proximity_f64_from(&d), || {
                invariants::proximity_from(&d).expect("n ≥ 2 when D ≥ 1")
            });
            if k < 1 {
                return Ok(invalid(ev, n));
            }
            let spectrum = ev.eigenvalues(Matrix::Distance(d.to_rows()), SpectrumOrder::Descending)?;
            let dk = ev.real("dist_eig_k", spectrum[k - 1]);
            -pi - dk
        }
        3 => {
            let stats = peak_stats(g)?;
            ev.int("p_A", stats.p_a);
            ev.int("m", stats.m);
            ev.int("p_D", stats.p_d);
            ev.int("p_D(from 1)", stats.p_d_from_one);
            if stats.m == 0 {
                return Ok(invalid(ev, n));
            }
            let (pa, m, pd, nn) = (stats.p_a as f64, stats.m as f64, stats.p_d as f64, nf);
            exact = ev.rational_value(|| {
                (ratio(stats.p_a as i64, stats.m as i64) - (ratio(1, 1) - ratio(stats.p_d as i64, n as i64))).abs()
            });
            (pa / m - (1.0 - pd / nn)).abs()
        }
        4 => {
            let h = ev.rational("H", invariants::harmonic(g), || invariants::harmonic_exact(g));
            if n < 2 {
                return Ok(invalid(ev, n));
            }
            let lambda2 = ev.eigenvalues(Matrix::Adjacency, SpectrumOrder::Descending)?[1];
            ev.real("lambda2", lambda2);
            lambda2 - h
        }
        5 => {
            let mm2 = ev.rational("mM2", invariants::modified_zagreb(g), || invariants::modified_zagreb_exact(g));
            exact = ev
                .terms
                .last()
                .and_then(|t| t.exact.clone())
                .map(|q| q - ratio(n as i64 + 1, 4));
            mm2 - (nf + 1.0) / 4.0
        }
        6 => {
            let gamma = domination_number(g);
            ev.int("gamma", gamma);
            let mm2 = ev.rational("mM2", invariants::modified_zagreb(g), || invariants::modified_zagreb_exact(g));
            if gamma == n {
                return Ok(invalid(ev, n));
            }
            let gf = gamma as f64;
            exact = ev.terms.last().and_then(|t| t.exact.clone()).map(|m| {
                let (gi, ni) = (gamma as i64, n as i64);
                -ratio(gi - 1, 2 * (ni - gi)) + ratio(gi + 1, 2) - m
            });
            -(gf - 1.0) / (2.0 * (nf - gf)) + (gf + 1.0) / 2.0 - mm2
        }
        7 => {
            let d = all_pairs_distances(g)?;
            let pi = ev.rational("pi", invariants::proximity_f64_from(&d), || {
                invariants::proximity_from(&d).expect("n ≥ 2")
            });
            let lambda1 = ev.eigenvalues(Matrix::Adjacency, SpectrumOrder::Descending)?[0];
            ev.real("lambda1", lambda1);
            err_scale = pi;
            lambda1 * pi - nf + 1.0
        }
        8 => {
            let d = all_pairs_distances(g)?;
            let pi = ev.rational("pi", invariants::proximity_f64_from(&d), || {
                invariants::proximity_from(&d).expect("n ≥ 2")
            });
            let a = ev.eigenvalues(Matrix::Laplacian, SpectrumOrder::Ascending)?[1];
            ev.real("a", a);
            let b = ev.real("B(n)", connectivity_bound(n));
            err_scale = pi;
            b - a * pi
        }
        9 => {
            let lambda1 = ev.eigenvalues(Matrix::Adjacency, SpectrumOrder::Descending)?[0];
            ev.real("lambda1", lambda1);
            let alpha = ev.int("alpha", independence_number(g));
            (nf - 1.0).sqrt() - nf + 1.0 - lambda1 + alpha
        }
        10 => {
            let r = ev.real("R", invariants::randic(g));
            let alpha = ev.int("alpha", independence_number(g));
            r + alpha - nf + 1.0 - (nf - 1.0).sqrt()
        }
        _ => unreachable!("ConjectureId is validated"),
    };

    let value = match &exact {
        Some(q) => q.to_f64().unwrap_or(value),
        None => value,
    };
    Ok(Score {
        value,
        exact,
        spectral_error_bound: ev.spectral_error * err_scale,
        terms: ev.terms,
        order: n,
    })
}

fn invalid(ev: Eval<'_>, n: usize) -> Score {
    Score {
        value: f64::NEG_INFINITY,
        exact: None,
        terms: ev.terms,
        spectral_error_bound: 0.0,
        order: n,
    }
}

/// The path-extremal lower bound on `a(G)·π(G)`.
fn connectivity_bound(n: usize) -> f64 {
    let nf = n as f64;
    let c = 1.0 - (std::f64::consts::PI / nf).cos();
    if n.is_multiple_of(2) {
        nf * nf * c / (2.0 * (nf - 1.0))
    } else {
        (nf + 1.0) * c / 2.0
    }
}

/// Full score with exact sub-terms and a spectral error bound.
pub fn score(id: ConjectureId, g: &Graph) -> Result<Score, ConjectureError> {
    let violations = check_hypotheses(id, g);
    if !violations.is_empty() {
        return Err(ConjectureError::Hypotheses(violations));
    }
    Ok(evaluate(id, g, Mode::Full { target: DEFAULT_RESIDUAL_TARGET })?)
}

/// Floating-point score for search. Graphs outside the hypotheses and
/// undefined or failed evaluations score −∞.
pub fn fast_score(id: ConjectureId, g: &Graph) -> f64 {
    if !check_hypotheses(id, g).is_empty() {
        return f64::NEG_INFINITY;
    }
    match evaluate(id, g, Mode::Fast) {
        Ok(s) if !s.value.is_nan() => s.value,
        _ => f64::NEG_INFINITY,
    }
}

pub fn is_counterexample(id: ConjectureId, g: &Graph, tau: f64) -> bool {
    match score(id, g) {
        Ok(s) => match &s.exact {
            Some(q) => q.is_positive() && s.value > tau,
            None => s.value > tau,
        },
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(k: u8) -> ConjectureId {
        ConjectureId::new(k).unwrap()
    }

    #[test]
    fn boundary_cases() {
        let p3 = Graph::path(3).unwrap();
        assert!(score(id(1), &p3).unwrap().value.abs() < 1e-12);
        assert!(!is_counterexample(id(1), &p3, DEFAULT_TAU));
        assert!(score(id(8), &p3).unwrap().value.abs() < 1e-12);

        let s5 = Graph::star(5).unwrap();
        assert!(score(id(9), &s5).unwrap().value.abs() < 1e-12);
        assert!(score(id(10), &s5).unwrap().value.abs() < 1e-12);
    }

    #[test]
    fn s5_of_p5_is_negative_and_exact() {
        let s = score(id(5), &Graph::path(5).unwrap()).unwrap();
        assert_eq!(s.exact, Some(ratio(3, 2) - ratio(6, 4)));
        // mM2(P5) = 3/2 and (n+1)/4 = 3/2
        assert_eq!(s.value, 0.0);
        assert!(!is_counterexample(id(5), &Graph::path(5).unwrap(), DEFAULT_TAU));
    }

    #[test]
    fn hypothesis_errors() {
        let e = score(id(5), &Graph::cycle(4).unwrap()).unwrap_err();
        assert!(matches!(e, ConjectureError::Hypotheses(_)));
        assert!(e.to_string().contains("tree required"));
    }

    #[test]
    fn sentinels() {
        // the only 4-vertex graph with D = 1 is K4: floor(2/3) = 0
        let s = score(id(2), &Graph::complete(4).unwrap()).unwrap();
        assert!(s.is_invalid());
        assert_eq!(fast_score(id(2), &Graph::complete(4).unwrap()), f64::NEG_INFINITY);
        // K2 has γ = 1 < n, P2 is the same graph; a single edge star S2
        let s = score(id(6), &Graph::star(2).unwrap()).unwrap();
        assert!(!s.is_invalid());
        assert!(score(id(4), &Graph::empty(1).unwrap()).unwrap().is_invalid());
    }

    #[test]
    fn fast_and_full_agree() {
        let g = Graph::star(4).unwrap().connect_at(&Graph::path(6).unwrap(), 0, 0).unwrap();
        for k in ConjectureId::all() {
            let full = score(k, &g).unwrap();
            let fast = fast_score(k, &g);
            assert!((full.value - fast).abs() < 1e-10, "conjecture {k}: {} vs {fast}", full.value);
        }
    }
}
