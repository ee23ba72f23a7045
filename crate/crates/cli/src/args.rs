use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use amcs_core::conjectures::{InitialGraph, DEFAULT_TAU};
use clap::{ArgAction, Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "amcs", version, about = "Search for counterexamples to graph theory conjectures")]
pub struct Cli {
    /// Log progress to stderr (-v for accepted graphs, -vv for more).
    #[arg(short, long, global = true, action = ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run an adaptive Monte Carlo search for a counterexample.
    Refute(RefuteArgs),
    /// Print every ingredient of a graph's score.
    Score(GraphArgs),
    /// Decide with a strict error bound whether a graph is a counterexample.
    Verify(GraphArgs),
    /// Write members of a counterexample family, optionally checking closed forms.
    Family(FamilyArgs),
    /// List the conjectures with their search defaults.
    List,
}

#[derive(Debug, Args)]
pub struct RefuteArgs {
    /// Conjecture to attack (1-10).
    #[arg(short, long, required_unless_present = "replay", value_parser = clap::value_parser!(u8).range(1..=10))]
    pub conjecture: Option<u8>,
    /// Starting graph: path:N, star:N, complete:N, random-tree:N or file:PATH (graph6).
    /// Defaults to the conjecture's own starting graph.
    #[arg(long)]
    pub initial: Option<InitialRecipe>,
    #[arg(long, default_value_t = 5)]
    pub max_depth: usize,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_level: u64,
    /// Restrict the search to trees. Defaults to the conjecture's search space.
    #[arg(long)]
    pub trees_only: Option<bool>,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u64).range(0..=i64::MAX as u64))]
    pub seed: u64,
    /// Try seeds seed, seed+1, ... until one yields a certified counterexample.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1_000_000))]
    pub seeds: u64,
    /// Wall-clock budget per seed, e.g. 90s or 30m.
    #[arg(long, value_parser = humantime::parse_duration)]
    pub time_budget: Option<Duration>,
    /// Scores above this count as counterexamples.
    #[arg(long, default_value_t = DEFAULT_TAU)]
    pub tau: f64,
    /// Evaluate top-level children on all cores (same result as sequential).
    #[arg(long)]
    pub parallel: bool,
    /// Re-run the configuration stored in a previous report.
    #[arg(long, conflicts_with_all = ["conjecture", "initial", "max_depth", "max_level", "trees_only", "seed", "seeds", "time_budget", "tau", "parallel"])]
    pub replay: Option<PathBuf>,
    /// Output directory for the report and graph files.
    #[arg(long, default_value = "amcs-out")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(short, long, value_parser = clap::value_parser!(u8).range(1..=10))]
    pub conjecture: u8,
    /// File holding one graph in graph6 format.
    pub graph: PathBuf,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// T1, T2 or T2B.
    pub name: String,
    /// A parameter such as 5, or an inclusive range such as 3..20.
    #[arg(value_parser = parse_range)]
    pub params: RangeInclusive<usize>,
    /// Check the closed forms against direct computation.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, default_value = "amcs-out")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq)]
pub enum InitialRecipe {
    Named(InitialGraph),
    File(PathBuf),
}

impl FromStr for InitialRecipe {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| format!("expected KIND:ARG, got {s:?}"))?;
        if kind == "file" {
            return Ok(InitialRecipe::File(PathBuf::from(arg)));
        }
        let n: usize = arg.parse().map_err(|_| format!("invalid order {arg:?}"))?;
        if n == 0 {
            return Err("order must be positive".into());
        }
        let g = match kind {
            "path" => InitialGraph::Path(n),
            "star" => InitialGraph::Star(n),
            "complete" => InitialGraph::Complete(n),
            "random-tree" => InitialGraph::RandomTree(n),
            _ => return Err(format!("unknown graph kind {kind:?}")),
        };
        Ok(InitialRecipe::Named(g))
    }
}

impl fmt::Display for InitialRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitialRecipe::Named(g) => write!(f, "{g}"),
            InitialRecipe::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid parameter {t:?}"));
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => {
            let p = num(s)?;
            p..=p
        }
    };
    if r.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(r)
}
