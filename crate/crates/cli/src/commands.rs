use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use amcs_core::conjectures::{
    catalog, check_hypotheses, fast_score, score, verify_strict, ConjectureId, Score, Verdict,
    Verification,
};
use amcs_core::families::{build_family, verify_family, Family};
use amcs_core::graph::{decode_graph6, encode_graph6, export_dot};
use amcs_core::search::{amcs, SearchParams, SearchResult};
use amcs_core::{Graph, SearchSpace, SeededRng};

use crate::args::{FamilyArgs, GraphArgs, InitialRecipe, RefuteArgs};
use crate::report::{RunConfig, RunReport, RunResult, SeedRun, TermRecord, VerificationRecord, SCHEMA_VERSION};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NOT_FOUND: u8 = 2;
pub const EXIT_UNCERTIFIED: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;
pub const EXIT_IO: u8 = 74;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Data(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |e| CliError::Io(format!("{}: {e}", path.display()))
}

fn conjecture(id: u8) -> Result<ConjectureId, CliError> {
    ConjectureId::new(id).map_err(|e| CliError::Usage(e.to_string()))
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    decode_graph6(line.trim()).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn write(path: PathBuf, contents: &str) -> Result<(), CliError> {
    fs::write(&path, contents).map_err(io_err(&path))
}

fn exact_str<T: ToString>(q: &Option<T>) -> Option<String> {
    q.as_ref().map(ToString::to_string)
}

pub fn list() -> Result<u8, CliError> {
    print!("{}", catalog());
    Ok(EXIT_OK)
}

pub fn score_cmd(args: &GraphArgs) -> Result<u8, CliError> {
    let id = conjecture(args.conjecture)?;
    let g = read_graph(&args.graph)?;
    let s = match score(id, &g) {
        Ok(s) => s,
        Err(e) => return Err(CliError::Data(e.to_string())),
    };
    println!("conjecture {id}: {}", id.spec().statement);
    println!("graph: n = {}, m = {}", g.order(), g.size());
    for t in &s.terms {
        match &t.exact {
            Some(q) => println!("  {} = {} (exact {q})", t.symbol, t.value),
            None => println!("  {} = {}", t.symbol, t.value),
        }
    }
    println!("{}", score_line(id, &s));
    println!("error bound {:e}", s.error_bound());
    Ok(EXIT_OK)
}

fn score_line(id: ConjectureId, s: &Score) -> String {
    if s.is_invalid() {
        return format!("s{id} = undefined");
    }
    match &s.exact {
        Some(q) => format!("s{id} = {} (exact {q})", s.value),
        None => format!("s{id} = {}", s.value),
    }
}

pub fn verify_cmd(args: &GraphArgs) -> Result<u8, CliError> {
    let id = conjecture(args.conjecture)?;
    let g = read_graph(&args.graph)?;
    let v = verify_strict(id, &g);
    if v.violations.is_empty() {
        println!("hypotheses: ok");
    } else {
        for violation in &v.violations {
            println!("hypotheses: {violation}");
        }
    }
    if let Some(s) = &v.score {
        println!("{} ± {:e}", score_line(id, s), v.error_bound);
    }
    if let Some(note) = &v.note {
        println!("note: {note}");
    }
    println!("verdict: {}", v.verdict);
    Ok(match v.verdict {
        Verdict::Certified => EXIT_OK,
        Verdict::Rejected => EXIT_NOT_FOUND,
        Verdict::Uncertain => EXIT_UNCERTIFIED,
    })
}

pub fn family_cmd(args: &FamilyArgs) -> Result<u8, CliError> {
    let family: Family = args.name.parse().map_err(|e: amcs_core::families::FamilyError| CliError::Usage(e.to_string()))?;
    if *args.params.start() < 1 {
        return Err(CliError::Usage(format!("{family} needs a positive parameter")));
    }
    fs::create_dir_all(&args.out).map_err(io_err(&args.out))?;
    for p in args.params.clone() {
        let g = build_family(family, p).map_err(|e| CliError::Usage(e.to_string()))?;
        let stem = format!("{family}-{p}");
        write(args.out.join(format!("{stem}.g6")), &format!("{}\n", encode_graph6(&g)))?;
        write(args.out.join(format!("{stem}.dot")), &export_dot(&g))?;
        println!("{family}({p}): n = {}, m = {} -> {}", g.order(), g.size(), args.out.join(format!("{stem}.g6")).display());
    }
    if !args.verify {
        return Ok(EXIT_OK);
    }
    let report = verify_family(family, args.params.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
    print!("{report}");
    if report.passed() {
        println!("all checks passed");
        Ok(EXIT_OK)
    } else {
        println!("{} checks failed", report.failures().count());
        Ok(EXIT_DATA)
    }
}

struct Outcome {
    config: RunConfig,
    result: SearchResult,
    verification: Verification,
}

impl Outcome {
    fn certified(&self) -> bool {
        self.result.found && self.verification.verdict == Verdict::Certified
    }
}

fn initial_graph(recipe: &InitialRecipe, seed: u64) -> Result<Graph, CliError> {
    match recipe {
        InitialRecipe::Named(g) => Ok(g.build(&mut SeededRng::derived(seed, 1))),
        InitialRecipe::File(p) => read_graph(p),
    }
}

fn run_one(config: &RunConfig, initial: &Graph) -> Result<Outcome, CliError> {
    let id = conjecture(config.conjecture)?;
    let violations = check_hypotheses(id, initial);
    if !violations.is_empty() {
        let msg: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(CliError::Data(format!("initial graph: {}", msg.join("; "))));
    }
    let params = SearchParams {
        max_depth: config.max_depth,
        max_level: config.max_level,
        trees_only: config.trees_only,
        seed: config.seed,
        time_budget: config.time_budget_ms.map(Duration::from_millis),
        tau: config.tau,
        parallel: config.parallel,
    };
    let result =
        amcs(initial, &params, &|g: &Graph| fast_score(id, g)).map_err(|e| CliError::Data(format!("initial graph: {e}")))?;
    let verification = verify_strict(id, &result.best_graph);
    Ok(Outcome { config: config.clone(), result, verification })
}

pub fn refute(args: &RefuteArgs) -> Result<u8, CliError> {
    let (base, recipe, seeds) = match &args.replay {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(io_err(path))?;
            let report: RunReport =
                toml::from_str(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
            if report.schema_version != SCHEMA_VERSION {
                return Err(CliError::Data(format!(
                    "{}: unsupported schema version {}",
                    path.display(),
                    report.schema_version
                )));
            }
            (report.config, None, 1)
        }
        None => {
            let id = conjecture(args.conjecture.expect("clap requires a conjecture"))?;
            let spec = id.spec();
            let recipe = args.initial.clone().unwrap_or(InitialRecipe::Named(spec.default_initial));
            let config = RunConfig {
                conjecture: id.get(),
                initial: recipe.to_string(),
                initial_graph6: String::new(),
                max_depth: args.max_depth,
                max_level: args.max_level as usize,
                trees_only: args.trees_only.unwrap_or(spec.space == SearchSpace::Trees),
                seed: args.seed,
                time_budget_ms: args.time_budget.map(|d| d.as_millis() as u64),
                tau: args.tau,
                parallel: args.parallel,
            };
            (config, Some(recipe), args.seeds)
        }
    };

    let mut runs: Vec<Outcome> = Vec::new();
    for seed in (base.seed..).take(seeds as usize) {
        let initial = match &recipe {
            Some(r) => initial_graph(r, seed)?,
            None => decode_graph6(&base.initial_graph6)
                .map_err(|e| CliError::Data(format!("stored initial graph: {e}")))?,
        };
        let config = RunConfig { seed, initial_graph6: encode_graph6(&initial), ..base.clone() };
        let outcome = run_one(&config, &initial)?;
        log::info!(
            "seed {seed}: found = {}, best score {}, verdict {}",
            outcome.result.found,
            outcome.result.best_score,
            outcome.verification.verdict
        );
        let done = outcome.certified();
        runs.push(outcome);
        if done {
            break;
        }
    }

    let chosen = runs
        .iter()
        .position(Outcome::certified)
        .or_else(|| runs.iter().position(|o| o.result.found))
        .unwrap_or_else(|| {
            // highest best score, earliest seed on ties
            let mut best = 0;
            for (i, o) in runs.iter().enumerate() {
                if o.result.best_score > runs[best].result.best_score {
                    best = i;
                }
            }
            best
        });
    let report = build_report(&runs, chosen);
    let outcome = &runs[chosen];
    write_outputs(&args.out, &report, &outcome.result.best_graph)?;
    print_summary(&report, &args.out);

    Ok(if !outcome.result.found {
        EXIT_NOT_FOUND
    } else if outcome.verification.verdict == Verdict::Certified {
        EXIT_OK
    } else {
        EXIT_UNCERTIFIED
    })
}

fn build_report(runs: &[Outcome], chosen: usize) -> RunReport {
    let o = &runs[chosen];
    let r = &o.result;
    let v = &o.verification;
    let terms = v
        .score
        .iter()
        .flat_map(|s| &s.terms)
        .map(|t| TermRecord { symbol: t.symbol.to_string(), value: t.value, exact: exact_str(&t.exact) })
        .collect();
    RunReport {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        config: o.config.clone(),
        result: RunResult {
            found: r.found,
            initial_score: r.trace[0].score,
            best_score: r.best_score,
            best_graph6: encode_graph6(&r.best_graph),
            order: r.best_graph.order(),
            size: r.best_graph.size(),
            iterations: r.iterations,
            loop_passes: r.loop_passes,
            nmcs_calls: r.nmcs_calls,
            evaluations: r.evaluations,
            budget_exhausted: r.budget_exhausted,
            elapsed_ms: r.elapsed.as_millis() as u64,
        },
        verification: VerificationRecord {
            verdict: v.verdict.to_string(),
            error_bound: v.error_bound,
            score: v.score.as_ref().map(|s| s.value),
            exact: v.score.as_ref().and_then(|s| exact_str(&s.exact)),
            violations: v.violations.iter().map(ToString::to_string).collect(),
            note: v.note.clone(),
        },
        terms,
        seed_runs: runs
            .iter()
            .map(|o| SeedRun {
                seed: o.config.seed,
                found: o.result.found,
                best_score: o.result.best_score,
                verdict: o.verification.verdict.to_string(),
                elapsed_ms: o.result.elapsed.as_millis() as u64,
            })
            .collect(),
        trace: r.trace.iter().map(|t| t.to_line(false)).collect(),
    }
}

fn write_outputs(out: &Path, report: &RunReport, best: &Graph) -> Result<(), CliError> {
    fs::create_dir_all(out).map_err(io_err(out))?;
    let toml = toml::to_string(report).map_err(|e| CliError::Data(format!("serializing report: {e}")))?;
    write(out.join("report.toml"), &toml)?;
    write(out.join("best.g6"), &format!("{}\n", encode_graph6(best)))?;
    write(out.join("best.dot"), &export_dot(best))?;
    let mut trace = report.trace.join("\n");
    trace.push('\n');
    write(out.join("trace.txt"), &trace)
}

fn print_summary(report: &RunReport, out: &Path) {
    let c = &report.config;
    let r = &report.result;
    println!("conjecture {} from {} (seed {})", c.conjecture, c.initial, c.seed);
    let status = if r.found {
        "found"
    } else if r.budget_exhausted {
        "not found (time budget exhausted)"
    } else {
        "not found"
    };
    println!(
        "{status} after {} iterations, {} NMCS calls, {:.2} s",
        r.iterations,
        r.nmcs_calls,
        r.elapsed_ms as f64 / 1000.0
    );
    println!("best score {} on n = {}, m = {}", r.best_score, r.order, r.size);
    println!("graph6 {}", r.best_graph6);
    println!("verdict {}", report.verification.verdict);
    if report.seed_runs.len() > 1 {
        println!("seeds tried: {}", report.seed_runs.len());
    }
    println!("report written to {}", out.join("report.toml").display());
}
