//! Nested Monte Carlo search and its adaptive outer loop.
//!
//! Scores are maximized; a graph scoring above `tau` is a counterexample.
//! Score functions are plain closures so callers can wrap them, and a NaN
//! score is read as −∞.

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{apply_move, legal_moves, random_playout, removal_moves, Graph, SearchSpace};
use crate::rng::SeededRng;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("invalid search parameter: {0}")]
    InvalidParams(String),
    #[error("graph is not in the search space {0:?}")]
    NotInSpace(SearchSpace),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchParams {
    pub max_depth: usize,
    pub max_level: usize,
    pub trees_only: bool,
    pub seed: u64,
    pub time_budget: Option<Duration>,
    pub tau: f64,
    /// Evaluate the children of each top-level NMCS call on the rayon pool.
    /// The result is identical to the sequential run.
    pub parallel: bool,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            max_depth: 5,
            max_level: 3,
            trees_only: false,
            seed: 0,
            time_budget: None,
            tau: 1e-9,
            parallel: false,
        }
    }
}

impl SearchParams {
    pub fn space(&self) -> SearchSpace {
        if self.trees_only {
            SearchSpace::Trees
        } else {
            SearchSpace::ConnectedGraphs
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.max_level < 1 {
            return Err(SearchError::InvalidParams("max_level must be at least 1".into()));
        }
        if !self.tau.is_finite() {
            return Err(SearchError::InvalidParams("tau must be finite".into()));
        }
        Ok(())
    }
}

/// Snapshot of an accepted graph. Record 0 is the initial graph.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRecord {
    pub iteration: usize,
    pub depth: usize,
    pub level: usize,
    pub order: usize,
    pub size: usize,
    pub score: f64,
    pub elapsed: Duration,
}

impl TraceRecord {
    /// One `key=value` line. Without the timestamp the line depends only on
    /// the seed and parameters.
    pub fn to_line(&self, with_elapsed: bool) -> String {
        let mut line = format!(
            "iteration={} depth={} level={} n={} m={} score={}",
            self.iteration, self.depth, self.level, self.order, self.size, self.score
        );
        if with_elapsed {
            line.push_str(&format!(" elapsed_ms={}", self.elapsed.as_millis()));
        }
        line
    }
}

impl fmt::Display for TraceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line(true))
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub best_graph: Graph,
    pub best_score: f64,
    pub found: bool,
    /// Outer-loop passes that accepted a new graph.
    pub iterations: usize,
    /// All outer-loop passes.
    pub loop_passes: usize,
    /// Top-level NMCS invocations.
    pub nmcs_calls: usize,
    /// Score function calls, including nested ones.
    pub evaluations: u64,
    pub elapsed: Duration,
    pub budget_exhausted: bool,
    pub trace: Vec<TraceRecord>,
}

struct Ctx<'a, F> {
    score: &'a F,
    space: SearchSpace,
    deadline: Option<Instant>,
    exhausted: AtomicBool,
    evaluations: AtomicU64,
}

impl<'a, F> Ctx<'a, F>
where
    F: Fn(&Graph) -> f64 + Sync,
{
    fn new(score: &'a F, space: SearchSpace, deadline: Option<Instant>) -> Self {
        Ctx {
            score,
            space,
            deadline,
            exhausted: AtomicBool::new(false),
            evaluations: AtomicU64::new(0),
        }
    }

    fn eval(&self, g: &Graph) -> f64 {
        self.evaluations.fetch_add(1, Ordering::Relaxed);
        let s = (self.score)(g);
        if s.is_nan() {
            f64::NEG_INFINITY
        } else {
            s
        }
    }

    fn expired(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return true;
        }
        match self.deadline {
            Some(d) if Instant::now() >= d => {
                self.exhausted.store(true, Ordering::Relaxed);
                true
            }
            _ => false,
        }
    }

    fn nmcs(&self, g: Graph, score: f64, depth: usize, level: usize, rng: &mut SeededRng, parallel: bool) -> (Graph, f64) {
        if level == 0 {
            if depth == 0 || self.expired() {
                return (g, score);
            }
            let p = random_playout(&g, depth, self.space, rng);
            let ps = self.eval(&p);
            return if ps > score { (p, ps) } else { (g, score) };
        }

        let moves = legal_moves(&g, self.space).expect("search graphs stay connected");
        let base = rng.next_u64();
        let child = |i: usize| -> Option<(Graph, f64)> {
            if self.expired() {
                return None;
            }
            let c = apply_move(&g, moves[i]).expect("enumerated moves are legal");
            let cs = self.eval(&c);
            let mut crng = SeededRng::derived(base, i as u64);
            Some(self.nmcs(c, cs, depth, level - 1, &mut crng, false))
        };

        let mut best: Option<(Graph, f64)> = None;
        let mut best_score = score;
        let mut consider = |r: (Graph, f64)| {
            if r.1 > best_score {
                best_score = r.1;
                best = Some(r);
            }
        };
        if parallel {
            let results: Vec<_> = (0..moves.len()).into_par_iter().map(child).collect();
            results.into_iter().flatten().for_each(&mut consider);
        } else {
            for i in 0..moves.len() {
                match child(i) {
                    Some(r) => consider(r),
                    None => break,
                }
            }
        }
        best.unwrap_or((g, score))
    }
}

/// Nested Monte Carlo search from `g`.
///
/// Level 0 is one random playout of `depth` moves, kept only if it strictly
/// improves on `g`. Level `l ≥ 1` applies every legal move in enumeration
/// order, runs a level `l − 1` search from each child and returns the best
/// graph seen; ties keep the earlier graph. Returns the graph and its score.
pub fn nmcs<F>(
    g: &Graph,
    depth: usize,
    level: usize,
    score_fn: &F,
    space: SearchSpace,
    rng: &mut SeededRng,
) -> Result<(Graph, f64), SearchError>
where
    F: Fn(&Graph) -> f64 + Sync,
{
    if !space.contains(g) {
        return Err(SearchError::NotInSpace(space));
    }
    let ctx = Ctx::new(score_fn, space, None);
    let s = ctx.eval(g);
    Ok(ctx.nmcs(g.clone(), s, depth, level, rng, false))
}

/// Randomly removes leaves and smoothable vertices while the order exceeds
/// `min_order`; each removal is gated by a draw below `depth / (depth + 1)`.
pub fn prune(g: &Graph, min_order: usize, depth: usize, rng: &mut SeededRng) -> Graph {
    let gate = depth as f64 / (depth as f64 + 1.0);
    let mut g = g.clone();
    while g.order() > min_order {
        if rng.unit() >= gate {
            break;
        }
        let moves = removal_moves(&g);
        if moves.is_empty() {
            break;
        }
        let mv = moves[rng.index(moves.len())];
        g = apply_move(&g, mv).expect("removal moves are legal");
    }
    g
}

/// Adaptive Monte Carlo search.
///
/// Starting from depth 0 and level 1, each pass prunes a copy of the
/// incumbent and runs NMCS on it. A strict improvement replaces the
/// incumbent and resets depth and level; otherwise depth grows up to
/// `max_depth`, after which it wraps to 0 and the level grows. The search
/// stops once the score exceeds `tau`, the level exceeds `max_level`, or the
/// time budget runs out.
pub fn amcs<F>(initial: &Graph, params: &SearchParams, score_fn: &F) -> Result<SearchResult, SearchError>
where
    F: Fn(&Graph) -> f64 + Sync,
{
    params.validate()?;
    let space = params.space();
    if !space.contains(initial) {
        return Err(SearchError::NotInSpace(space));
    }
    let start = Instant::now();
    let ctx = Ctx::new(score_fn, space, params.time_budget.map(|b| start + b));
    let mut rng = SeededRng::new(params.seed);

    let mut g = initial.clone();
    let mut s = ctx.eval(&g);
    let min_order = g.order();
    let (mut depth, mut level) = (0, 1);
    let mut trace = vec![record(0, depth, level, &g, s, start)];
    let (mut iterations, mut loop_passes, mut nmcs_calls) = (0, 0, 0);

    while s <= params.tau && level <= params.max_level {
        if ctx.expired() {
            break;
        }
        loop_passes += 1;
        let pruned = prune(&g, min_order, depth, &mut rng);
        let ps = if pruned == g { s } else { ctx.eval(&pruned) };
        nmcs_calls += 1;
        let (cand, cs) = ctx.nmcs(pruned, ps, depth, level, &mut rng, params.parallel);
        if cs > s {
            iterations += 1;
            g = cand;
            s = cs;
            let r = record(iterations, depth, level, &g, s, start);
            log::info!("{r}");
            trace.push(r);
            depth = 0;
            level = 1;
        } else if depth < params.max_depth {
            depth += 1;
        } else {
            depth = 0;
            level += 1;
        }
    }

    Ok(SearchResult {
        found: s > params.tau,
        best_graph: g,
        best_score: s,
        iterations,
        loop_passes,
        nmcs_calls,
        evaluations: ctx.evaluations.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
        budget_exhausted: ctx.exhausted.load(Ordering::Relaxed),
        trace,
    })
}

fn record(iteration: usize, depth: usize, level: usize, g: &Graph, score: f64, start: Instant) -> TraceRecord {
    TraceRecord {
        iteration,
        depth,
        level,
        order: g.order(),
        size: g.size(),
        score,
        elapsed: start.elapsed(),
    }
}
