//! Run report persisted as TOML next to the best graph.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub config: RunConfig,
    pub result: RunResult,
    pub verification: VerificationRecord,
    /// Every ingredient of the strict score of the best graph.
    pub terms: Vec<TermRecord>,
    /// One entry per seed tried, in seed order.
    pub seed_runs: Vec<SeedRun>,
    /// Accepted graphs, one line each, without timestamps.
    pub trace: Vec<String>,
}

/// Everything needed to repeat the run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub conjecture: u8,
    pub initial: String,
    pub initial_graph6: String,
    pub max_depth: usize,
    pub max_level: usize,
    pub trees_only: bool,
    pub seed: u64,
    pub time_budget_ms: Option<u64>,
    pub tau: f64,
    pub parallel: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub found: bool,
    pub initial_score: f64,
    pub best_score: f64,
    pub best_graph6: String,
    pub order: usize,
    pub size: usize,
    pub iterations: usize,
    pub loop_passes: usize,
    pub nmcs_calls: usize,
    pub evaluations: u64,
    pub budget_exhausted: bool,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub verdict: String,
    pub error_bound: f64,
    pub score: Option<f64>,
    pub exact: Option<String>,
    pub violations: Vec<String>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub symbol: String,
    pub value: f64,
    pub exact: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedRun {
    pub seed: u64,
    pub found: bool,
    pub best_score: f64,
    pub verdict: String,
    pub elapsed_ms: u64,
}
