//! Infinite families of counterexample trees and their closed forms.
//!
//! * `T1(k)`: a spine `w_1 … w_k` where every `w_i` carries the pendant
//!   paths `w_i v_i u_i` and `w_i x_i y_i`; order `5k`.
//! * `T2(k)`: `T1(k)` without the `y` vertices; order `4k`.
//! * `T(2, b)`: the centers of two stars on `b` vertices joined to a new
//!   vertex; order `2b + 1`.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::conjectures::{score, ConjectureError, ConjectureId};
use crate::graph::Graph;
use crate::invariants::{domination_number, independence_number, modified_zagreb_exact, randic, spectral_radius};

/// Tolerance for closed forms involving square roots.
pub const REAL_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?} (expected T1, T2 or T2B)")]
    UnknownFamily(String),
    #[error("unknown quantity {0:?}")]
    UnknownQuantity(String),
    #[error("{family} has no closed form for {quantity}")]
    NoClosedForm { family: Family, quantity: Quantity },
    #[error("{family}: {quantity} needs {param} >= {min}, got {got}")]
    OutOfDomain {
        family: Family,
        quantity: Quantity,
        param: &'static str,
        min: usize,
        got: usize,
    },
    #[error("{family} needs {param} >= 1, got {got}")]
    InvalidParameter { family: Family, param: &'static str, got: usize },
    #[error(transparent)]
    Conjecture(#[from] ConjectureError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    T1,
    T2,
    T2B,
}

impl Family {
    pub fn all() -> [Family; 3] {
        [Family::T1, Family::T2, Family::T2B]
    }

    pub fn spec(self) -> FamilySpec {
        use Quantity::*;
        match self {
            Family::T1 => FamilySpec {
                family: self,
                param_name: "k",
                min_param: 1,
                order_formula: "5k",
                closed_forms: &[(Mm2, "21k/16 + 7/48", 3), (S5, "k/16 - 5/48", 3)],
            },
            Family::T2 => FamilySpec {
                family: self,
                param_name: "k",
                min_param: 1,
                order_formula: "4k",
                closed_forms: &[
                    (Mm2, "15k/16 + 11/48", 3),
                    (Gamma, "2k", 1),
                    (S6, "k/16 + 1/(4k) - 11/48", 3),
                ],
            },
            Family::T2B => FamilySpec {
                family: self,
                param_name: "b",
                min_param: 1,
                order_formula: "2b + 1",
                closed_forms: &[
                    (Lambda1, "sqrt(b + 1)", 1),
                    (Randic, "(2b - 2 + sqrt 2) / sqrt b", 1),
                    (Alpha, "2b - 1", 2),
                    (S9, "sqrt(2b) - sqrt(b + 1) - 1", 2),
                    (S10, "sqrt(b) (2 - sqrt 2) - (2 - sqrt 2) / sqrt(b) - 1", 2),
                ],
            },
        }
    }

    pub fn order(self, p: usize) -> usize {
        match self {
            Family::T1 => 5 * p,
            Family::T2 => 4 * p,
            Family::T2B => 2 * p + 1,
        }
    }

    /// The conjecture whose score diverges along the family.
    pub fn refuted_scores(self) -> &'static [Quantity] {
        match self {
            Family::T1 => &[Quantity::S5],
            Family::T2 => &[Quantity::S6],
            Family::T2B => &[Quantity::S9, Quantity::S10],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::T1 => "T1",
            Family::T2 => "T2",
            Family::T2B => "T2B",
        })
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "T1" => Ok(Family::T1),
            "T2" => Ok(Family::T2),
            "T2B" | "T(2,B)" => Ok(Family::T2B),
            _ => Err(FamilyError::UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    Mm2,
    Gamma,
    Alpha,
    Lambda1,
    Randic,
    S5,
    S6,
    S9,
    S10,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Mm2 => "mM2",
            Quantity::Gamma => "gamma",
            Quantity::Alpha => "alpha",
            Quantity::Lambda1 => "lambda1",
            Quantity::Randic => "R",
            Quantity::S5 => "s5",
            Quantity::S6 => "s6",
            Quantity::S9 => "s9",
            Quantity::S10 => "s10",
        }
    }

    fn conjecture(self) -> Option<u8> {
        match self {
            Quantity::S5 => Some(5),
            Quantity::S6 => Some(6),
            Quantity::S9 => Some(9),
            Quantity::S10 => Some(10),
            _ => None,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            Quantity::Mm2,
            Quantity::Gamma,
            Quantity::Alpha,
            Quantity::Lambda1,
            Quantity::Randic,
            Quantity::S5,
            Quantity::S6,
            Quantity::S9,
            Quantity::S10,
        ]
        .into_iter()
        .find(|q| q.name().eq_ignore_ascii_case(s))
        .ok_or_else(|| FamilyError::UnknownQuantity(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub family: Family,
    pub param_name: &'static str,
    pub min_param: usize,
    pub order_formula: &'static str,
    /// `(quantity, expression, smallest parameter the expression holds for)`.
    pub closed_forms: &'static [(Quantity, &'static str, usize)],
}

pub fn build_family(family: Family, p: usize) -> Result<Graph, FamilyError> {
    if p < 1 {
        return Err(FamilyError::InvalidParameter { family, param: family.spec().param_name, got: p });
    }
    let mut edges = Vec::new();
    match family {
        Family::T1 | Family::T2 => {
            let width = if family == Family::T1 { 5 } else { 4 };
            // per block: u, v, w, x (, y)
            for i in 0..p {
                let b = width * i;
                edges.extend([(b, b + 1), (b + 1, b + 2), (b + 2, b + 3)]);
                if family == Family::T1 {
                    edges.push((b + 3, b + 4));
                }
                if i + 1 < p {
                    edges.push((b + 2, b + width + 2));
                }
            }
        }
        Family::T2B => {
            // u_1 .. u_b, v, w_1 .. w_b
            let (v, w1) = (p, p + 1);
            edges.extend((1..p).map(|i| (0, i)));
            edges.extend([(0, v), (v, w1)]);
            edges.extend((1..p).map(|i| (w1, w1 + i)));
        }
    }
    Ok(Graph::from_edges(family.order(p), edges).expect("family edges are valid"))
}

#[derive(Debug, Clone, PartialEq)]
pub enum ClosedForm {
    Exact(BigRational),
    Real(f64),
}

impl ClosedForm {
    pub fn to_f64(&self) -> f64 {
        match self {
            ClosedForm::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            ClosedForm::Real(x) => *x,
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::Exact(q) => write!(f, "{q}"),
            ClosedForm::Real(x) => write!(f, "{x}"),
        }
    }
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn closed_form(family: Family, quantity: Quantity, p: usize) -> Result<ClosedForm, FamilyError> {
    let spec = family.spec();
    let &(_, _, min) = spec
        .closed_forms
        .iter()
        .find(|(q, _, _)| *q == quantity)
        .ok_or(FamilyError::NoClosedForm { family, quantity })?;
    if p < min {
        return Err(FamilyError::OutOfDomain { family, quantity, param: spec.param_name, min, got: p });
    }
    let k = p as i64;
    let b = p as f64;
    let r2 = std::f64::consts::SQRT_2;
    Ok(match quantity {
        Quantity::Mm2 if family == Family::T1 => ClosedForm::Exact(ratio(21 * k, 16) + ratio(7, 48)),
        Quantity::Mm2 => ClosedForm::Exact(ratio(15 * k, 16) + ratio(11, 48)),
        Quantity::S5 => ClosedForm::Exact(ratio(k, 16) - ratio(5, 48)),
        Quantity::S6 => ClosedForm::Exact(ratio(k, 16) + ratio(1, 4 * k) - ratio(11, 48)),
        Quantity::Gamma => ClosedForm::Exact(ratio(2 * k, 1)),
        Quantity::Alpha => ClosedForm::Exact(ratio(2 * k - 1, 1)),
        Quantity::Lambda1 => ClosedForm::Real((b + 1.0).sqrt()),
        Quantity::Randic => ClosedForm::Real((2.0 * b - 2.0 + r2) / b.sqrt()),
        Quantity::S9 => ClosedForm::Real((2.0 * b).sqrt() - (b + 1.0).sqrt() - 1.0),
        Quantity::S10 => ClosedForm::Real(b.sqrt() * (2.0 - r2) - (2.0 - r2) / b.sqrt() - 1.0),
    })
}

/// Computes `quantity` on `g` with the general invariant code.
pub fn compute(quantity: Quantity, g: &Graph) -> Result<ClosedForm, FamilyError> {
    Ok(match quantity {
        Quantity::Mm2 => ClosedForm::Exact(modified_zagreb_exact(g)),
        Quantity::Gamma => ClosedForm::Exact(BigRational::from_integer(domination_number(g).into())),
        Quantity::Alpha => ClosedForm::Exact(BigRational::from_integer(independence_number(g).into())),
        Quantity::Lambda1 => ClosedForm::Real(spectral_radius(g)),
        Quantity::Randic => ClosedForm::Real(randic(g)),
        _ => {
            let id = ConjectureId::new(quantity.conjecture().expect("score quantity"))?;
            let s = score(id, g)?;
            match s.exact {
                Some(q) => ClosedForm::Exact(q),
                None => ClosedForm::Real(s.value),
            }
        }
    })
}

fn matches(expected: &ClosedForm, computed: &ClosedForm) -> bool {
    match (expected, computed) {
        (ClosedForm::Exact(a), ClosedForm::Exact(b)) => a == b,
        _ => (expected.to_f64() - computed.to_f64()).abs() <= REAL_TOLERANCE,
    }
}

#[derive(Debug, Clone)]
pub struct CheckLine {
    pub quantity: String,
    pub param: usize,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}",
            self.quantity,
            self.param,
            self.expected,
            self.computed,
            if self.passed { "ok" } else { "MISMATCH" }
        )
    }
}

#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub family: Family,
    pub lines: Vec<CheckLine>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| !l.passed)
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "quantity\t{}\texpected\tcomputed\tstatus", self.family.spec().param_name)?;
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Checks every closed form of `family` against direct computation for each
/// parameter in `params` inside the form's domain, then checks that each
/// refuted score increases strictly from its first positive value on.
pub fn verify_family(family: Family, params: RangeInclusive<usize>) -> Result<FamilyReport, FamilyError> {
    let spec = family.spec();
    if *params.start() < spec.min_param {
        return Err(FamilyError::InvalidParameter { family, param: spec.param_name, got: *params.start() });
    }
    let mut lines = Vec::new();
    let mut scores: Vec<(Quantity, usize, f64)> = Vec::new();
    for p in params {
        let g = build_family(family, p)?;
        lines.push(CheckLine {
            quantity: "order".into(),
            param: p,
            expected: family.order(p).to_string(),
            computed: g.order().to_string(),
            passed: g.order() == family.order(p) && g.is_tree(),
        });
        for &(q, _, min) in spec.closed_forms {
            if p < min {
                continue;
            }
            let expected = closed_form(family, q, p)?;
            let computed = compute(q, &g)?;
            if family.refuted_scores().contains(&q) {
                scores.push((q, p, computed.to_f64()));
            }
            lines.push(CheckLine {
                quantity: q.name().into(),
                param: p,
                passed: matches(&expected, &computed),
                expected: expected.to_string(),
                computed: computed.to_string(),
            });
        }
    }
    for &q in family.refuted_scores() {
        let series: Vec<(usize, f64)> = scores.iter().filter(|s| s.0 == q).map(|s| (s.1, s.2)).collect();
        let Some(first) = series.iter().position(|s| s.1 > 0.0) else {
            continue;
        };
        let tail = &series[first..];
        let increasing = tail.windows(2).all(|w| w[1].1 > w[0].1);
        lines.push(CheckLine {
            quantity: format!("{}-increasing", q.name()),
            param: tail[0].0,
            expected: "strictly increasing".into(),
            computed: if increasing { "strictly increasing" } else { "not increasing" }.into(),
            passed: increasing,
        });
    }
    Ok(FamilyReport { family, lines })
}
