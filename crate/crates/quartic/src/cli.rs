//! Command-line front end.

use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quartic_core::connectivity::{edge_connectivity, vertex_connectivity};
use quartic_core::constructions::assembly::zigzag_family;
use quartic_core::constructions::{
    assemble_hg, block_ring, find_gadget, meredith_expand, perfect_matchings, petersen, synthesize_ladder_pattern,
    triangle_family, CandidateSpace, FamilyParams, GadgetSearchError, GadgetSpec, LadderPattern, SearchSummary,
    SynthesisError,
};
use quartic_core::constructions::double_one_factor;
use quartic_core::hamilton::{frontier, CountEngine, HamiltonError};
use quartic_core::verify::{certify_family, finalize, property_suite, verify_conditions_timed, FamilyBudget};
use quartic_core::{graph6, EdgeRef, MultiGraph};
use serde_json::json;

use crate::corpus::{regular_corpus, DEFAULT_SEED};
use crate::io::{read_graph, write_dot, write_json, FormatError};
use crate::parallel::{count_parallel, ParallelOptions};
use crate::pattern::{read_block_template, read_gadget, read_pattern, write_gadget, PatternError};
use crate::report::{ms, RunReport, SystemClock};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "quartic", version, about = "4-regular graphs with a bounded number of Hamiltonian cycles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph from one of the families.
    Generate(GenerateArgs),
    /// Count Hamiltonian cycles.
    Count(CountArgs),
    /// Check gadget conditions, certify a family, or run a property suite.
    Verify(VerifyArgs),
    /// Convert a graph between graph6, JSON and DOT.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Petersen,
    Gadget,
    Hg,
    Finalized,
    Triangle,
    Fig1,
    Meredith,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// graph6 for simple unlabelled graphs, JSON otherwise.
    Auto,
    Graph6,
    Json,
    Dot,
}

#[derive(Debug, Clone, Args)]
pub struct GadgetSource {
    /// Gadget JSON; defaults to the first gadget of the certified space.
    #[arg(long)]
    pub gadget: Option<PathBuf>,
    /// Ladder pattern JSON; defaults to the synthesized pattern.
    #[arg(long)]
    pub pattern: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Stretching parameter for `hg` and `finalized`.
    #[arg(long, default_value_t = 2)]
    pub ell: usize,
    /// Number of triangle replacements.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Number of blocks for `fig1`.
    #[arg(long, default_value_t = 3)]
    pub m: usize,
    /// Block template JSON for `fig1`.
    #[arg(long)]
    pub template: Option<PathBuf>,
    /// Which perfect matching of Petersen to double for `meredith`.
    #[arg(long, default_value_t = 0)]
    pub matching: usize,
    #[command(flatten)]
    pub source: GadgetSource,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    pub format: Format,
    /// Graph output path; stdout if absent.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    /// Run report output path.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Backtrack,
    Frontier,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// graph6 or multigraph JSON; `-` reads stdin.
    pub input: PathBuf,
    /// Count only cycles through this edge, written `u-v`.
    #[arg(long)]
    pub through_edge: Option<String>,
    /// Include every cycle in the report.
    #[arg(long)]
    pub enumerate: bool,
    /// Node budget per search task.
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long, value_enum, default_value_t = Engine::Backtrack)]
    pub engine: Engine,
    /// State budget for the frontier engine.
    #[arg(long)]
    pub max_states: Option<usize>,
    #[arg(long, default_value_t = ParallelOptions::default().split_depth)]
    pub split_depth: usize,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Gadget,
    Family,
    Connectivity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Smith,
    Thomason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    /// Petersen with a doubled perfect matching.
    Default,
    /// The certified widened space.
    Widened,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: Option<Target>,
    /// Graph for `connectivity`.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, conflicts_with = "target")]
    pub suite: Option<Suite>,
    /// Candidate space searched when no `--gadget` is given.
    #[arg(long, value_enum, default_value_t = Space::Widened)]
    pub space: Space,
    #[command(flatten)]
    pub source: GadgetSource,
    #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
    pub ell_set: Vec<usize>,
    /// Largest order in the suite corpus.
    #[arg(long, default_value_t = 16)]
    pub n: usize,
    /// Corpus size.
    #[arg(long, default_value_t = 50)]
    pub count: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Node budget for enumerating each `H_G`.
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Construction(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Construction(_) => EXIT_CHECK_FAILED,
            _ => EXIT_INPUT,
        }
    }
}

/// What a command produced: text for stdout and the exit status.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
    pub report: RunReport,
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Generate(a) => generate(a),
        Command::Count(a) => count(a),
        Command::Verify(a) => verify(a),
        Command::Export(a) => export(a),
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, CliError> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(|source| CliError::Read { path: path.into(), source })?;
        return Ok(buf);
    }
    fs::read(path).map_err(|source| CliError::Read { path: path.into(), source })
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Write { path: path.into(), source })
}

fn render(g: &MultiGraph, format: Format) -> Result<String, CliError> {
    let labelled = g.labels().next().is_some();
    Ok(match format {
        Format::Auto if g.is_simple() && !labelled => format!("{}\n", graph6::write_string(g).expect("simple")),
        Format::Auto | Format::Json => format!("{}\n", write_json(g)),
        Format::Graph6 => format!("{}\n", graph6::write_string(g).map_err(FormatError::from)?),
        Format::Dot => write_dot(g),
    })
}

fn space_of(space: Space) -> CandidateSpace {
    match space {
        Space::Default => CandidateSpace::DoubledPetersen,
        Space::Widened => CandidateSpace::widened(),
    }
}

fn summary_json(s: &SearchSummary) -> serde_json::Value {
    let r = &s.rejected;
    json!({
        "graphs": s.graphs,
        "paths_per_graph": s.paths_per_graph,
        "candidates": s.candidates,
        "rejected": {
            "not_quartic": r.not_quartic,
            "edge_connectivity": r.edge_connectivity,
            "(i) hamiltonian": r.hamiltonian,
            "(ii) no split 2-factor": r.no_split_factor,
            "(iii-a) marked path": r.marked_path,
            "(iii-b) marked path after deletion": r.marked_path_minus,
        }
    })
}

/// The gadget from `--gadget`, or the first one found in `space`.
fn load_gadget(source: &GadgetSource, space: Space) -> Result<(GadgetSpec, Option<SearchSummary>), CliError> {
    match &source.gadget {
        Some(path) => Ok((read_gadget(&read_text(path)?)?, None)),
        None => match find_gadget(&space_of(space)) {
            Ok((spec, summary)) => Ok((spec, Some(summary))),
            Err(e @ GadgetSearchError::Exhausted(_)) => Err(CliError::Construction(e.to_string())),
        },
    }
}

/// The pattern from `--pattern`, or the first zig-zag pattern that
/// certifies on `ℓ = 2, 3, 4`.
fn load_pattern(source: &GadgetSource, spec: &GadgetSpec) -> Result<LadderPattern, CliError> {
    match &source.pattern {
        Some(path) => Ok(read_pattern(&read_text(path)?)?),
        None => match synthesize_ladder_pattern(spec, &[2, 3, 4], &zigzag_family(), None) {
            Ok((p, _)) => Ok(p),
            Err(SynthesisError::NoPattern { near_misses, .. }) => Err(CliError::Construction(format!(
                "no ladder pattern qualifies; near misses: {}",
                near_misses.iter().map(|m| format!("{} ({}: {})", m.criterion, m.pattern, m.detail)).collect::<Vec<_>>().join("; ")
            ))),
            Err(e) => Err(CliError::Construction(e.to_string())),
        },
    }
}

fn build_hg(source: &GadgetSource, ell: usize) -> Result<MultiGraph, CliError> {
    let (spec, _) = load_gadget(source, Space::Widened)?;
    let pattern = load_pattern(source, &spec)?;
    assemble_hg(&spec, &FamilyParams { ell, pattern }).map(|h| h.graph).map_err(|e| CliError::Construction(e.to_string()))
}

fn generate(a: GenerateArgs) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let mut report = RunReport::new(format!("generate {:?}", a.family).to_lowercase());
    let g = match a.family {
        Family::Petersen => petersen(),
        Family::Triangle => triangle_family(a.k),
        Family::Meredith => {
            let p = petersen();
            let ms = perfect_matchings(&p);
            let m = ms.get(a.matching).ok_or_else(|| CliError::Usage(format!("Petersen has {} perfect matchings", ms.len())))?;
            let d = double_one_factor(&p, m).expect("perfect matching");
            let all: Vec<usize> = (0..d.n()).collect();
            meredith_expand(&d, &all).expect("4-regular").graph
        }
        Family::Gadget => {
            let (spec, summary) = load_gadget(&a.source, Space::Widened)?;
            report.results.detail = Some(json!({
                "path": spec.path(),
                "gadget": serde_json::from_str::<serde_json::Value>(&write_gadget(&spec)).expect("json"),
                "search": summary.as_ref().map(summary_json),
            }));
            spec.graph
        }
        Family::Hg => build_hg(&a.source, a.ell)?,
        Family::Finalized => finalize(&build_hg(&a.source, a.ell)?),
        Family::Fig1 => {
            let template = match &a.template {
                Some(p) => Some(read_block_template(&read_text(p)?)?),
                None => None,
            };
            block_ring(template.as_ref(), a.m).map_err(|e| CliError::Construction(e.to_string()))?
        }
    };
    let text = render(&g, a.format)?;
    report = report.with_graph(&g);
    report.stats.elapsed_ms = Some(ms(start.elapsed()));
    let stdout = match &a.out {
        Some(path) => {
            write_file(path, &text)?;
            String::new()
        }
        None => text,
    };
    if let Some(path) = &a.report {
        write_file(path, &report.to_json())?;
    }
    Ok(Outcome { stdout, code: EXIT_PASS, report })
}

fn parse_edge(s: &str) -> Result<EdgeRef, CliError> {
    let bad = || CliError::Usage(format!("edge must be written u-v, got {s:?}"));
    let (u, v) = s.split_once('-').ok_or_else(bad)?;
    let (u, v): (usize, usize) = (u.trim().parse().map_err(|_| bad())?, v.trim().parse().map_err(|_| bad())?);
    if u == v {
        return Err(bad());
    }
    Ok(EdgeRef::first(u, v))
}

fn count(a: CountArgs) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let bytes = read_input(&a.input)?;
    let g = read_graph(&bytes)?;
    let mut report = RunReport::new("count").with_input(&bytes).with_graph(&g);
    let forced: Vec<EdgeRef> = a.through_edge.as_deref().map(parse_edge).transpose()?.into_iter().collect();
    let missing = |e: HamiltonError| CliError::Usage(e.to_string());
    let mut code = EXIT_PASS;
    match a.engine {
        Engine::Backtrack => {
            let opts = ParallelOptions {
                workers: a.workers,
                split_depth: a.split_depth,
                max_nodes_per_task: a.budget,
                retain: a.enumerate,
            };
            let rep = count_parallel(&g, &forced, &opts).map_err(missing)?;
            report.results.ham_count = Some(rep.count);
            report.results.budget_exhausted = Some(rep.budget_exhausted);
            report.stats.nodes_expanded = Some(rep.nodes_expanded);
            if let Some(cycles) = rep.cycles {
                let seqs: Vec<Vec<usize>> = cycles.iter().map(|c| c.vertex_sequence()).collect();
                report.results.detail = Some(json!({ "engine": "backtrack", "cycles": seqs }));
            } else {
                report.results.detail = Some(json!({ "engine": "backtrack" }));
            }
            if rep.budget_exhausted {
                code = EXIT_BUDGET;
            }
            debug_assert_eq!(rep.engine, CountEngine::Backtrack);
        }
        Engine::Frontier => {
            if !forced.is_empty() || a.enumerate {
                return Err(CliError::Usage("the frontier engine neither enumerates nor forces edges".into()));
            }
            match frontier::count(&g, a.max_states) {
                Ok(c) => {
                    report.results.ham_count = Some(c.count);
                    report.results.budget_exhausted = Some(false);
                    report.results.detail = Some(json!({
                        "engine": "frontier", "width": c.width, "peak_states": c.peak_states, "transitions": c.transitions
                    }));
                }
                Err(HamiltonError::StateBudget(max)) => {
                    report.results.budget_exhausted = Some(true);
                    report.results.detail = Some(json!({ "engine": "frontier", "state_budget": max }));
                    code = EXIT_BUDGET;
                }
                Err(e) => return Err(CliError::Construction(e.to_string())),
            }
        }
    }
    report.stats.elapsed_ms = Some(ms(start.elapsed()));
    if let Some(path) = &a.report {
        write_file(path, &report.to_json())?;
    }
    let stdout = match report.results.ham_count {
        Some(c) if code == EXIT_PASS => format!("{c}\n"),
        Some(c) => format!("at least {c} (budget exhausted)\n"),
        None => "unknown (budget exhausted)\n".into(),
    };
    Ok(Outcome { stdout, code, report })
}

fn verify(a: VerifyArgs) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let clock = SystemClock::new();
    let mut report;
    if let Some(suite) = a.suite {
        report = RunReport::new(format!("verify --suite {suite:?}").to_lowercase());
        let corpus = match suite {
            Suite::Smith => cubic_sizes(a.n).map(|s| regular_corpus(a.count, 3, &s, a.seed)),
            Suite::Thomason => {
                let cubic = cubic_sizes(a.n).map(|s| regular_corpus(a.count, 3, &s, a.seed));
                let quintic = quintic_sizes(a.n.min(14)).map(|s| regular_corpus(a.count.min(20), 5, &s, a.seed ^ 5));
                cubic.map(|mut c| {
                    c.extend(quintic.unwrap_or_default());
                    c
                })
            }
        }
        .ok_or_else(|| CliError::Usage(format!("no corpus orders available up to n = {}", a.n)))?;
        let cert = property_suite(&corpus, &clock);
        let wanted = match suite {
            Suite::Smith => "smith parity",
            Suite::Thomason => "thomason second cycle",
        };
        let mut only = cert.clone();
        only.checks.retain(|c| c.name == wanted);
        report.absorb(&only);
        report.results.detail = Some(json!({ "corpus": corpus.len(), "seed": a.seed }));
    } else {
        match a.target.ok_or_else(|| CliError::Usage("verify needs a target or --suite".into()))? {
            Target::Gadget => {
                report = RunReport::new("verify gadget");
                match load_gadget(&a.source, a.space) {
                    Ok((spec, summary)) => {
                        report = report.with_graph(&spec.graph);
                        report.absorb(&verify_conditions_timed(&spec, &clock));
                        report.results.detail = Some(json!({
                            "path": spec.path(),
                            "search": summary.as_ref().map(summary_json),
                        }));
                    }
                    Err(CliError::Construction(msg)) => {
                        report.results.overall = Some(false);
                        let summary = match find_gadget(&space_of(a.space)) {
                            Err(GadgetSearchError::Exhausted(s)) => Some(summary_json(&s)),
                            Ok(_) => None,
                        };
                        report.results.detail = Some(json!({ "error": msg, "search": summary }));
                    }
                    Err(e) => return Err(e),
                }
            }
            Target::Family => {
                report = RunReport::new("verify family");
                let (spec, _) = load_gadget(&a.source, Space::Widened)?;
                let pattern = load_pattern(&a.source, &spec)?;
                let budget = FamilyBudget { max_nodes: a.budget.or(FamilyBudget::default().max_nodes), ..Default::default() };
                let cert = certify_family(&spec, &pattern, &a.ell_set, budget, &clock)
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                report.absorb(&cert);
                report.results.detail = Some(json!({ "pattern": pattern.name, "ell_set": a.ell_set }));
            }
            Target::Connectivity => {
                let path = a.input.as_ref().ok_or_else(|| CliError::Usage("verify connectivity needs an input graph".into()))?;
                let bytes = read_input(path)?;
                let g = read_graph(&bytes)?;
                report = RunReport::new("verify connectivity").with_input(&bytes).with_graph(&g);
                let e = edge_connectivity(&g);
                report.results.edge_connectivity = Some(e.value);
                let mut detail = json!({ "edge_cut": e.cut.iter().map(|x| [x.u, x.v, x.copy as usize]).collect::<Vec<_>>() });
                match vertex_connectivity(&g) {
                    Ok(v) => {
                        report.results.vertex_connectivity = Some(v.value);
                        detail["vertex_cut"] = json!(v.cut);
                    }
                    Err(err) => detail["vertex_connectivity"] = json!(err.to_string()),
                }
                report.results.detail = Some(detail);
                report.results.overall = Some(true);
            }
        }
    }
    report.stats.elapsed_ms = Some(ms(start.elapsed()));
    if let Some(path) = &a.report {
        write_file(path, &report.to_json())?;
    }
    let pass = report.results.overall.unwrap_or(false);
    let exhausted = report.results.checks.values().any(|c| {
        !c.pass && c.witness.as_ref().is_some_and(|w| w.to_string().contains("budget"))
    });
    let code = if pass {
        EXIT_PASS
    } else if exhausted {
        EXIT_BUDGET
    } else {
        EXIT_CHECK_FAILED
    };
    Ok(Outcome { stdout: format!("{}\n", report.to_json()), code, report })
}

/// Even cubic orders from 8 up to `n`.
fn cubic_sizes(n: usize) -> Option<Vec<usize>> {
    let s: Vec<usize> = (8..=n).step_by(2).collect();
    (!s.is_empty()).then_some(s)
}

fn quintic_sizes(n: usize) -> Option<Vec<usize>> {
    let s: Vec<usize> = (8..=n).step_by(2).collect();
    (!s.is_empty()).then_some(s)
}

fn export(a: ExportArgs) -> Result<Outcome, CliError> {
    let bytes = read_input(&a.input)?;
    let g = read_graph(&bytes)?;
    let text = render(&g, a.format)?;
    let report = RunReport::new("export").with_input(&bytes).with_graph(&g);
    let stdout = match &a.out {
        Some(path) => {
            write_file(path, &text)?;
            String::new()
        }
        None => text,
    };
    Ok(Outcome { stdout, code: EXIT_PASS, report })
}
