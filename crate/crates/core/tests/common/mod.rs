//! Brute-force oracles, independently built fixture graphs and the shared
//! checks behind the acceptance report.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Mutex;

use amcs_core::conjectures::{fast_score, score, verify_strict, ConjectureId, Verdict};
use amcs_core::families::{build_family, Family};
use amcs_core::graph::{decode_graph6, encode_graph6};
use amcs_core::invariants::{
    adjacency_char_poly, adjacency_spectrum, domination_number, independence_number, laplacian_spectrum,
    matching_number, modified_zagreb_exact, spectral_radius,
};
use amcs_core::search::{amcs, nmcs, SearchParams};
use amcs_core::{Graph, SearchSpace, SeededRng};
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn id(k: u8) -> ConjectureId {
    ConjectureId::new(k).unwrap()
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn load(text: &str) -> Vec<Graph> {
    text.lines().map(|l| decode_graph6(l).unwrap()).collect()
}

/// Every connected graph on 1 to 7 vertices, one per isomorphism class.
pub fn connected_upto7() -> Vec<Graph> {
    load(include_str!("../data/connected_upto7.g6"))
}

/// Every tree on 1 to 10 vertices, one per isomorphism class.
pub fn trees_upto10() -> Vec<Graph> {
    load(include_str!("../data/trees_upto10.g6"))
}

// ---------------------------------------------------------------- oracles

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

pub fn brute_independence_number(g: &Graph) -> usize {
    let adj = masks(g);
    (0u32..1 << g.order())
        .filter(|&s| (0..g.order()).all(|v| s & 1 << v == 0 || adj[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_domination_number(g: &Graph) -> usize {
    let n = g.order();
    let closed: Vec<u32> = masks(g).iter().enumerate().map(|(v, m)| m | 1 << v).collect();
    let all = (1u32 << n) - 1;
    (0u32..1 << n)
        .filter(|&s| (0..n).filter(|v| s & 1 << v != 0).fold(0, |c, v| c | closed[v]) == all)
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// `counts[k]` = number of matchings with `k` edges.
pub fn matching_counts(g: &Graph) -> Vec<u64> {
    fn rec(g: &Graph, used: &mut [bool], from: usize, size: usize, counts: &mut Vec<u64>) {
        let Some(v) = (from..g.order()).find(|&v| !used[v]) else {
            if counts.len() <= size {
                counts.resize(size + 1, 0);
            }
            counts[size] += 1;
            return;
        };
        used[v] = true;
        rec(g, used, v + 1, size, counts);
        for &w in g.neighbors(v) {
            if !used[w] {
                used[w] = true;
                rec(g, used, v + 1, size + 1, counts);
                used[w] = false;
            }
        }
        used[v] = false;
    }
    let mut counts = Vec::new();
    rec(g, &mut vec![false; g.order()], 0, 0, &mut counts);
    counts
}

pub fn brute_matching_number(g: &Graph) -> usize {
    matching_counts(g).len() - 1
}

// ------------------------------------------------------------- fixtures

/// Builds a graph from named vertices, in first-seen order.
pub struct Labeled {
    names: BTreeMap<String, usize>,
    edges: Vec<(usize, usize)>,
}

impl Labeled {
    pub fn new() -> Self {
        Labeled { names: BTreeMap::new(), edges: Vec::new() }
    }

    fn vertex(&mut self, name: &str) -> usize {
        let next = self.names.len();
        *self.names.entry(name.to_string()).or_insert(next)
    }

    pub fn edge(&mut self, a: &str, b: &str) -> &mut Self {
        let (u, v) = (self.vertex(a), self.vertex(b));
        self.edges.push((u, v));
        self
    }

    pub fn star(&mut self, prefix: &str, order: usize) -> &mut Self {
        self.vertex(&format!("{prefix}0"));
        for i in 1..order {
            self.edge(&format!("{prefix}0"), &format!("{prefix}{i}"));
        }
        self
    }

    pub fn path(&mut self, prefix: &str, order: usize) -> &mut Self {
        self.vertex(&format!("{prefix}0"));
        for i in 1..order {
            self.edge(&format!("{prefix}{}", i - 1), &format!("{prefix}{i}"));
        }
        self
    }

    pub fn build(&self) -> Graph {
        Graph::from_edges(self.names.len(), self.edges.iter().copied()).unwrap()
    }
}

/// Star on 191 vertices whose center is joined to an end of P7 and an end of P5.
pub fn spider_191_7_5() -> Graph {
    Labeled::new().star("s", 191).path("p", 7).path("q", 5).edge("s0", "p0").edge("s0", "q0").build()
}

/// Centers of stars on 15 and 19 vertices joined to a new vertex.
pub fn joined_stars_15_19() -> Graph {
    Labeled::new().star("a", 15).star("b", 19).edge("a0", "v").edge("b0", "v").build()
}

/// K5 joined to an end of P7.
pub fn k5_with_tail() -> Graph {
    let mut l = Labeled::new();
    for i in 0..5 {
        for j in i + 1..5 {
            l.edge(&format!("k{i}"), &format!("k{j}"));
        }
    }
    l.path("p", 7).edge("k0", "p0").build()
}

/// The families, built from their vertex and edge lists.
pub fn t1(k: usize) -> Graph {
    t_family(k, true)
}

pub fn t2(k: usize) -> Graph {
    t_family(k, false)
}

fn t_family(k: usize, with_y: bool) -> Graph {
    let mut l = Labeled::new();
    for i in 1..=k {
        l.edge(&format!("u{i}"), &format!("v{i}"))
            .edge(&format!("v{i}"), &format!("w{i}"))
            .edge(&format!("w{i}"), &format!("x{i}"));
        if with_y {
            l.edge(&format!("x{i}"), &format!("y{i}"));
        }
        if i > 1 {
            l.edge(&format!("w{}", i - 1), &format!("w{i}"));
        }
    }
    l.build()
}

pub fn t2b(b: usize) -> Graph {
    let mut l = Labeled::new();
    l.star("u", b).star("w", b).edge("u0", "v").edge("v", "w0");
    l.build()
}

/// Degree-pair multiset; equal for isomorphic graphs.
pub fn degree_signature(g: &Graph) -> Vec<(usize, usize)> {
    let mut s: Vec<_> = g
        .edges()
        .map(|(u, v)| {
            let (a, b) = (g.degree(u), g.degree(v));
            (a.min(b), a.max(b))
        })
        .collect();
    s.sort_unstable();
    s
}

pub fn random_graph(n: usize, p: f64, rng: &mut SeededRng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.unit() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_connected(n: usize, extra: usize, rng: &mut SeededRng) -> Graph {
    let t = Graph::random_tree(n, rng).unwrap();
    let mut edges: Vec<_> = t.edges().collect();
    for _ in 0..extra {
        let (u, v) = (rng.index(n), rng.index(n));
        if u != v && !edges.contains(&(u.min(v), u.max(v))) {
            edges.push((u.min(v), u.max(v)));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

// ------------------------------------------------------- criterion checks

#[derive(Default)]
pub struct Checks {
    pub lines: Vec<(String, bool)>,
}

impl Checks {
    pub fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.lines.push((name.into(), ok));
    }

    pub fn within(&mut self, name: &str, got: f64, want: f64, tol: f64) {
        let ok = (got - want).abs() <= tol;
        self.check(format!("{name}: got {got}, want {want} ± {tol}"), ok);
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.1)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.lines.iter().filter(|l| !l.1).map(|l| l.0.as_str()).collect()
    }
}

pub fn fixture_scores() -> Checks {
    let mut c = Checks::default();
    c.within("spider_191_7_5 s2", score(id(2), &spider_191_7_5()).unwrap().value, 0.00028, 5e-5);
    c.within("joined_stars_15_19 s4", score(id(4), &joined_stars_15_19()).unwrap().value, 0.07950, 1e-4);
    c.within("k5_with_tail s7", score(id(7), &k5_with_tail()).unwrap().value, 0.05923, 1e-4);
    let s5 = score(id(5), &t1(2)).unwrap();
    c.check(format!("T1(2) s5 exact = {:?}", s5.exact), s5.exact == Some(q(1, 36)));
    let float = fast_score(id(5), &t1(2));
    c.within("T1(2) s5 float", float, 0.02778, 1e-6);
    c.within("T1(2) s5 float vs 1/36", float, 1.0 / 36.0, 1e-6);
    let s6 = score(id(6), &t2(2)).unwrap();
    c.check(format!("T2(2) s6 exact = {:?}", s6.exact), s6.exact == Some(q(1, 72)));
    c
}

pub fn theorem_formulas() -> Checks {
    let mut c = Checks::default();
    for k in 3..=20 {
        let ki = k as i64;
        c.check(
            format!("mM2(T1({k})) = 21k/16 + 7/48"),
            modified_zagreb_exact(&t1(k)) == q(21 * ki, 16) + q(7, 48),
        );
        c.check(
            format!("mM2(T2({k})) = 15k/16 + 11/48"),
            modified_zagreb_exact(&t2(k)) == q(15 * ki, 16) + q(11, 48),
        );
    }
    for k in 1..=10 {
        let gamma = domination_number(&t2(k));
        c.check(format!("gamma(T2({k})) = {gamma}, want {}", 2 * k), gamma == 2 * k);
    }
    for b in 1..=50 {
        let alpha = independence_number(&t2b(b));
        c.check(format!("alpha(T(2,{b})) = {alpha}, want {}", 2 * b - 1), alpha == 2 * b - 1);
        let l = spectral_radius(&t2b(b));
        c.within(&format!("lambda1(T(2,{b}))"), l, ((b + 1) as f64).sqrt(), 1e-10);
    }
    c.within("s9(T(2,9))", score(id(9), &t2b(9)).unwrap().value, 18f64.sqrt() - 10f64.sqrt() - 1.0, 1e-10);
    c.within("s10(T(2,5))", score(id(10), &t2b(5)).unwrap().value, 0.04789, 1e-4);
    c
}

pub fn family_builders_match() -> Checks {
    let mut c = Checks::default();
    for p in 1..=12 {
        for (f, g) in [(Family::T1, t1(p)), (Family::T2, t2(p)), (Family::T2B, t2b(p))] {
            let built = build_family(f, p).unwrap();
            c.check(
                format!("{f}({p}) matches its vertex/edge description"),
                built.order() == g.order() && degree_signature(&built) == degree_signature(&g) && built.is_tree(),
            );
        }
    }
    c
}

pub fn oracle_equivalence() -> Checks {
    let mut c = Checks::default();
    let mut bad = Vec::new();
    for g in connected_upto7() {
        let (mu, alpha, gamma) = (matching_number(&g), independence_number(&g), domination_number(&g));
        let want = (brute_matching_number(&g), brute_independence_number(&g), brute_domination_number(&g));
        if (mu, alpha, gamma) != want {
            bad.push(encode_graph6(&g));
        }
    }
    c.check(format!("mu, alpha, gamma on 996 connected graphs (mismatches {bad:?})"), bad.is_empty());

    let mut bad = Vec::new();
    for t in trees_upto10() {
        if domination_number(&t) != brute_domination_number(&t) {
            bad.push(encode_graph6(&t));
        }
    }
    c.check(format!("tree domination on 201 trees (mismatches {bad:?})"), bad.is_empty());

    let mut bad = Vec::new();
    for t in trees_upto10().into_iter().filter(|t| t.order() <= 9) {
        if !char_poly_counts_matchings(&t) {
            bad.push(encode_graph6(&t));
        }
    }
    c.check(format!("char poly vs matching counts on trees ≤ 9 (mismatches {bad:?})"), bad.is_empty());
    c
}

/// For a forest, the coefficient of `x^(n-2k)` is `(-1)^k` times the number
/// of k-matchings and every other coefficient vanishes.
pub fn char_poly_counts_matchings(t: &Graph) -> bool {
    let n = t.order();
    let cp = adjacency_char_poly(t);
    let counts = matching_counts(t);
    let mut expected = vec![BigInt::from(0); n + 1];
    for (k, &m) in counts.iter().enumerate() {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        expected[n - 2 * k] = BigInt::from(sign * m as i64);
    }
    cp.coeffs() == expected.as_slice()
}

pub fn numerical_consistency() -> Checks {
    let mut c = Checks::default();
    let mut rng = SeededRng::new(500);
    let (mut worst_poly, mut worst_trace_a, mut worst_trace_l) = (0.0f64, 0.0f64, 0.0f64);
    let mut poly_ok = true;
    for i in 0..500 {
        let n = 1 + i % 12;
        let p = 0.1 + 0.8 * rng.unit();
        let g = random_graph(n, p, &mut rng);
        let spec = adjacency_spectrum(&g).unwrap();
        let cp = adjacency_char_poly(&g);
        for &l in spec.values() {
            let r = cp.eval(l).abs() / (1.0 + l.abs()).powi(n as i32);
            worst_poly = worst_poly.max(r);
            poly_ok &= r <= 1e-8;
        }
        worst_trace_a = worst_trace_a.max(spec.sum().abs());
        let deg: usize = g.degrees().iter().sum();
        worst_trace_l = worst_trace_l.max((laplacian_spectrum(&g).unwrap().sum() - deg as f64).abs());
    }
    c.check(format!("|CPA(lambda)| <= 1e-8 (1+|lambda|)^n on 500 graphs (worst ratio {worst_poly:e})"), poly_ok);
    c.check(format!("trace of A within 1e-9 (worst {worst_trace_a:e})"), worst_trace_a <= 1e-9);
    c.check(format!("trace of L within 1e-9 (worst {worst_trace_l:e})"), worst_trace_l <= 1e-9);
    c
}

// ------------------------------------------------------------ properties

/// Runs AMCS with a recording score and checks closure, the order floor,
/// strict monotonicity of accepted scores, the `found` flag and
/// reproducibility under the same seed.
pub fn check_search_run(initial: &Graph, conj: u8, params: &SearchParams) -> Result<(), String> {
    let seen = Mutex::new(Vec::new());
    let space = params.space();
    let recording = |g: &Graph| {
        seen.lock().unwrap().push((space.contains(g), g.order()));
        fast_score(id(conj), g)
    };
    let r = amcs(initial, params, &recording).map_err(|e| e.to_string())?;
    let seen = seen.into_inner().unwrap();
    if let Some(&(_, n)) = seen.iter().find(|s| !s.0) {
        return Err(format!("evaluated a graph outside {space:?} (order {n})"));
    }
    if let Some(&(_, n)) = seen.iter().find(|s| s.1 < initial.order()) {
        return Err(format!("evaluated a graph of order {n} below the floor {}", initial.order()));
    }
    if !r.trace.windows(2).all(|w| w[0].score < w[1].score) {
        return Err("accepted scores not strictly increasing".into());
    }
    if r.found != (r.best_score > params.tau) {
        return Err("found flag disagrees with best score".into());
    }
    if !space.contains(&r.best_graph) {
        return Err("best graph outside the search space".into());
    }
    let again = amcs(initial, params, &|g: &Graph| fast_score(id(conj), g)).map_err(|e| e.to_string())?;
    let lines = |t: &[amcs_core::search::TraceRecord]| t.iter().map(|x| x.to_line(false)).collect::<Vec<_>>();
    if lines(&r.trace) != lines(&again.trace) || r.best_graph != again.best_graph {
        return Err("same seed gave a different run".into());
    }
    Ok(())
}

pub fn check_nmcs_not_worse(g: &Graph, conj: u8, depth: usize, level: usize, space: SearchSpace, seed: u64) -> Result<(), String> {
    let f = |h: &Graph| fast_score(id(conj), h);
    let (best, s) = nmcs(g, depth, level, &f, space, &mut SeededRng::new(seed)).map_err(|e| e.to_string())?;
    if s < f(g) {
        return Err(format!("nmcs returned {s} < {}", f(g)));
    }
    if !space.contains(&best) {
        return Err("nmcs left the search space".into());
    }
    Ok(())
}

pub fn check_graph6_round_trip(g: &Graph) -> Result<(), String> {
    let s = encode_graph6(g);
    match decode_graph6(&s) {
        Ok(h) if h == *g => Ok(()),
        Ok(_) => Err(format!("{s} decodes to a different graph")),
        Err(e) => Err(format!("{s}: {e}")),
    }
}

pub fn check_tree_identity(t: &Graph) -> Result<(), String> {
    let n = t.order();
    if matching_number(t) + independence_number(t) != n {
        return Err("mu + alpha != n".into());
    }
    let (s1, s9) = (fast_score(id(1), t), fast_score(id(9), t));
    if (s1 - s9).abs() > 1e-9 {
        return Err(format!("s1 = {s1}, s9 = {s9}"));
    }
    Ok(())
}

pub fn check_star_equality(n: usize) -> Result<(), String> {
    let s = Graph::star(n).unwrap();
    for k in [9, 10] {
        let v = score(id(k), &s).unwrap().value;
        if v.abs() > 1e-9 {
            return Err(format!("s{k}(S{n}) = {v}"));
        }
        if verify_strict(id(k), &s).verdict == Verdict::Certified {
            return Err(format!("S{n} certified for conjecture {k}"));
        }
    }
    Ok(())
}

/// Seeded property sweep used by the acceptance report.
pub fn property_suites() -> Checks {
    let mut c = Checks::default();
    let mut rng = SeededRng::new(6);
    let mut run = |name: &str, results: Vec<Result<(), String>>| {
        let errs: Vec<String> = results.into_iter().filter_map(Result::err).collect();
        c.check(format!("{name} ({} failures{})", errs.len(), errs.first().map(|e| format!(": {e}")).unwrap_or_default()), errs.is_empty());
    };

    let mut search = Vec::new();
    for (conj, trees) in [(1u8, false), (4, true), (5, true), (6, true), (7, false), (9, false), (10, false), (3, true)] {
        for seed in 0..3 {
            let initial = Graph::random_tree(5, &mut rng).unwrap();
            let params = SearchParams { max_depth: 3, max_level: 2, trees_only: trees, seed, ..SearchParams::default() };
            search.push(check_search_run(&initial, conj, &params));
        }
    }
    run("search closure, order floor, monotonicity, determinism", search);

    let mut nm = Vec::new();
    for i in 0..200u64 {
        let t = Graph::random_tree(3 + (i as usize % 6), &mut rng).unwrap();
        let space = if i % 2 == 0 { SearchSpace::Trees } else { SearchSpace::ConnectedGraphs };
        let conj = [1u8, 4, 7, 9, 10][i as usize % 5];
        nm.push(check_nmcs_not_worse(&t, conj, (i % 4) as usize, 1 + (i % 2) as usize, space, i));
    }
    run("nmcs never worse than its input (200 trials)", nm);

    let mut rt = Vec::new();
    for i in 0..1000 {
        let g = if i % 2 == 0 {
            Graph::random_tree(1 + i % 80, &mut rng).unwrap()
        } else {
            random_graph(1 + i % 70, rng.unit(), &mut rng)
        };
        rt.push(check_graph6_round_trip(&g));
    }
    run("graph6 round trip (1000 graphs)", rt);

    let mut ti = Vec::new();
    for t in trees_upto10().into_iter().filter(|t| t.order() >= 3) {
        ti.push(check_tree_identity(&t));
    }
    for i in 0..100 {
        ti.push(check_tree_identity(&Graph::random_tree(11 + i % 30, &mut rng).unwrap()));
    }
    run("tree identity s1 = s9", ti);

    run("star equality s9 = s10 = 0 for S3..S30", (3..=30).map(check_star_equality).collect());
    c
}
