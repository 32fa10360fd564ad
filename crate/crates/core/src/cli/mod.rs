//! Command-line front end: argument parsing, JSON output, exit codes and the
//! result cache. [`run_command`] does all the work; the `trikit` binary only
//! forwards its output.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 invalid input,
//! 3 an ambiguous numeric verdict or an exhausted search budget.

pub mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::bounds::{build_construction, count_construction, upper_bound, BoundsError, ConstructionKind, SizePolicy};
use crate::geometry::{
    classify_triangle, congruence_hypergraph, CongruenceMode, GeometryError, Point, PointConfig, ToleranceParams,
    Triangle, TriangleType,
};
use crate::hypergraph::{enumerate_classes, NamedGraph, ThreeGraph};
use crate::lagrangian::{certify_upper_bound, maximize_seeded, LagrangianError};
use crate::realizability::{
    build_forbidden_catalog, find_realizations, realizable_point_sets, RealizabilityError, Verdict,
};
use crate::turan::{TuranError, TuranSearch};

/// Classification tolerance for user-supplied side lengths.
pub const CLI_CLASSIFY_TOL: f64 = 1e-6;

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "TRIKIT_CACHE_DIR";

/// Time budget of `turan --extended`.
pub const EXTENDED_TURAN_BUDGET: Duration = Duration::from_secs(600);

#[derive(Debug, Parser)]
#[command(name = "trikit", version, about = "Triangle-congruence 3-graphs and their extremal numbers")]
struct Cli {
    /// Seed for every randomized procedure.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker cap. Accepted for compatibility; all commands run sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Cache directory for JSON results.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    /// Include wall times in verification reports.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Eps,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a triangle given by its side lengths.
    Classify {
        #[arg(long)]
        sides: String,
    },
    /// Build the congruence 3-graph of a point set.
    CongruenceGraph {
        /// Points as `x,y;x,y;...`.
        #[arg(long, conflicts_with = "points_file")]
        points: Option<String>,
        /// JSON file holding `[[x,y],...]` or `{"points":[[x,y],...]}`.
        #[arg(long)]
        points_file: Option<PathBuf>,
        #[arg(long)]
        sides: String,
        #[arg(long, default_value_t = 0.01)]
        eps: f64,
        /// Absolute side tolerance of exact mode.
        #[arg(long, default_value_t = CLI_CLASSIFY_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
    },
    /// Forbidden-graph catalog for a triangle.
    Forbidden {
        #[arg(long)]
        sides: String,
    },
    /// Realizations of a graph, or all realizable point sets.
    Realize {
        #[arg(long)]
        sides: String,
        /// Named graph or JSON file; omit to list realizable point sets.
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, default_value_t = 7)]
        max_size: usize,
    },
    /// Lagrangian of a 3-graph.
    Lagrangian {
        /// Named graph or JSON file.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        certify: Option<f64>,
        #[arg(long, default_value_t = crate::lagrangian::DEFAULT_RESTARTS)]
        restarts: usize,
        #[arg(long, default_value_t = crate::lagrangian::DEFAULT_CERTIFY_DEPTH)]
        depth: usize,
    },
    /// Lower and upper bounds on the number of near-congruent triangles.
    Bounds {
        #[arg(long)]
        sides: String,
        #[arg(long)]
        n: usize,
    },
    /// Build a cluster construction and count its triangles.
    Construct {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sides: String,
        /// Write the sampled points as JSON to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
        #[arg(long, default_value_t = crate::bounds::DEFAULT_EPS)]
        eps: f64,
        /// Distribute points greedily when `n` misses the divisibility condition.
        #[arg(long)]
        greedy: bool,
    },
    /// Exact Turán number for a forbidden family.
    Turan {
        #[arg(long)]
        n: usize,
        /// Comma-separated named graphs.
        #[arg(long)]
        forbid: String,
        #[arg(long)]
        witnesses: bool,
        /// Allow n = 7 with a ten-minute budget.
        #[arg(long)]
        extended: bool,
    },
    /// Isomorphism classes of small 3-graphs.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        forbid: Option<String>,
        #[arg(long)]
        contains: Option<String>,
        #[arg(long)]
        complete_shadow: bool,
        #[arg(long, default_value_t = 0)]
        min_edges: usize,
    },
    /// Run lemma checks.
    Verify {
        /// Lemma id or `all`.
        #[arg(long, default_value = "all")]
        lemma: String,
    },
}

/// Exit code, standard output and standard error of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Ambiguous(String),
    #[error("{message}")]
    Failed { message: String, output: Value },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Io(_) => 2,
            CliError::Failed { .. } => 1,
            CliError::Ambiguous(_) => 3,
        }
    }
}

fn invalid(e: impl ToString) -> CliError {
    CliError::Invalid(e.to_string())
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::AmbiguousClassification { .. } => CliError::Ambiguous(e.to_string()),
            _ => invalid(e),
        }
    }
}

impl From<RealizabilityError> for CliError {
    fn from(e: RealizabilityError) -> Self {
        match e {
            RealizabilityError::Ambiguous(_) => CliError::Ambiguous(e.to_string()),
            RealizabilityError::Geometry(g) => g.into(),
            _ => invalid(e),
        }
    }
}

impl From<LagrangianError> for CliError {
    fn from(e: LagrangianError) -> Self {
        match e {
            LagrangianError::DepthExceeded { .. } => CliError::Ambiguous(e.to_string()),
            _ => invalid(e),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::Geometry(g) => g.into(),
            BoundsError::Realizability(r) => r.into(),
            BoundsError::Lagrangian(l) => l.into(),
            _ => invalid(e),
        }
    }
}

impl From<TuranError> for CliError {
    fn from(e: TuranError) -> Self {
        match e {
            TuranError::BudgetExceeded(_) => CliError::Ambiguous(e.to_string()),
            _ => invalid(e),
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns what the
/// binary should print and exit with.
pub fn run_command<I, S>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandOutput { code, stdout: text, stderr: String::new() }
            } else {
                CommandOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let key = cache_key(&cli);
    let cached = cli.cache_dir.as_deref().filter(|_| is_cacheable(&cli.command));
    if let Some(stdout) = cached.and_then(|dir| fs::read_to_string(cache_path(dir, &key)).ok()) {
        return CommandOutput { code: 0, stdout, stderr: String::new() };
    }
    match dispatch(&cli) {
        Ok(value) => {
            let stdout = format!("{value}\n");
            let stderr = match cached.map(|dir| store(dir, &key, &stdout)) {
                Some(Err(e)) => format!("warning: cache write failed: {e}\n"),
                _ => String::new(),
            };
            CommandOutput { code: 0, stdout, stderr }
        }
        Err(e) => {
            let stdout = match &e {
                CliError::Failed { output, .. } => format!("{output}\n"),
                _ => String::new(),
            };
            CommandOutput { code: e.code(), stdout, stderr: format!("error: {e}\n") }
        }
    }
}

fn is_cacheable(cmd: &Command) -> bool {
    !matches!(cmd, Command::Construct { .. })
}

fn cache_key(cli: &Cli) -> String {
    let text = format!("{}|{}|{}|{:?}", env!("CARGO_PKG_VERSION"), cli.seed, cli.timings, cli.command);
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

fn cache_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.json"))
}

fn store(dir: &Path, key: &str, stdout: &str) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!("{key}.tmp"));
    fs::write(&tmp, stdout)?;
    fs::rename(tmp, cache_path(dir, key))
}

/// Compact JSON with object keys sorted.
fn to_value(x: &impl Serialize) -> Result<Value, CliError> {
    serde_json::to_value(x).map_err(invalid)
}

fn parse_floats(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| invalid(format!("not a number: `{t}`"))))
        .collect()
}

fn parse_sides(s: &str) -> Result<[f64; 3], CliError> {
    let v = parse_floats(s)?;
    v.try_into()
        .map_err(|v: Vec<f64>| invalid(format!("expected 3 side lengths, got {}", v.len())))
}

/// Replaces the sides by the exact representative of their type, keeping the
/// shortest side, so that near-miss input is not silently generic.
fn snapped_triangle(sides: &str) -> Result<(Triangle, TriangleType), CliError> {
    let raw = Triangle::new(parse_sides(sides)?)?;
    let kind = classify_triangle(raw.sides(), CLI_CLASSIFY_TOL)?;
    let t = match kind.angles() {
        Some(angles) => Triangle::from_angles(angles)?.scaled(raw.min_side())?,
        None if kind == TriangleType::Right => {
            let [a, b, _] = raw.sides();
            Triangle::new([a, b, a.hypot(b)])?
        }
        None => raw,
    };
    Ok((t, kind))
}

fn parse_points(s: &str) -> Result<Vec<Point>, CliError> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| match parse_floats(p)?.as_slice() {
            [x, y] => Ok(Point::new(*x, *y)),
            _ => Err(invalid(format!("expected `x,y`, got `{p}`"))),
        })
        .collect()
}

fn read_points_file(path: &Path) -> Result<Vec<Point>, CliError> {
    let text = fs::read_to_string(path)?;
    if let Ok(pts) = serde_json::from_str::<Vec<Point>>(&text) {
        return Ok(pts);
    }
    serde_json::from_str::<PointConfig>(&text)
        .map(|c| c.points)
        .map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn parse_graph(spec: &str) -> Result<ThreeGraph, CliError> {
    if let Ok(g) = spec.parse::<NamedGraph>() {
        return Ok(g.graph());
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(invalid(format!("`{spec}` is neither a named graph nor a file")));
    }
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| invalid(format!("{spec}: {e}")))
}

fn parse_named_list(s: &str) -> Result<Vec<NamedGraph>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<NamedGraph>().map_err(invalid))
        .collect()
}

fn graph_entry(g: &ThreeGraph) -> Value {
    let name = NamedGraph::ALL.iter().find(|c| c.graph().is_isomorphic(g)).map(|c| c.name());
    json!({"graph": g, "edge_count": g.edge_count(), "name": name})
}

fn dispatch(cli: &Cli) -> Result<Value, CliError> {
    match &cli.command {
        Command::Classify { sides } => {
            let kind = classify_triangle(parse_sides(sides)?, CLI_CLASSIFY_TOL)?;
            Ok(json!({"type": kind}))
        }
        Command::CongruenceGraph { points, points_file, sides, eps, tol, mode } => {
            let pts = match (points, points_file) {
                (Some(p), _) => parse_points(p)?,
                (None, Some(f)) => read_points_file(f)?,
                (None, None) => return Err(invalid("one of --points or --points-file is required")),
            };
            let (t, _) = snapped_triangle(sides)?;
            let params = ToleranceParams::new(*eps, *tol);
            let mode = match mode {
                ModeArg::Exact => CongruenceMode::Exact,
                ModeArg::Eps => CongruenceMode::Eps,
            };
            let h = congruence_hypergraph(&PointConfig::new(pts), &t, &params, mode)?;
            Ok(graph_entry(&h))
        }
        Command::Forbidden { sides } => {
            let (t, _) = snapped_triangle(sides)?;
            let catalog = build_forbidden_catalog(&t)?;
            if catalog.verdicts.values().any(|v| matches!(v, Verdict::Ambiguous(_))) {
                return Err(CliError::Ambiguous(format!(
                    "ambiguous verdict in catalog: {}",
                    to_value(&catalog)?
                )));
            }
            to_value(&catalog)
        }
        Command::Realize { sides, graph, max_size } => {
            let (t, kind) = snapped_triangle(sides)?;
            match graph {
                Some(spec) => {
                    let h = parse_graph(spec)?;
                    let realizations = find_realizations(&h, &t, crate::geometry::DEFAULT_TOL)?;
                    let forbidden = !crate::realizability::has_distinct_realization(&realizations);
                    Ok(json!({
                        "triangle_type": kind,
                        "graph": h,
                        "exactly_forbidden": forbidden,
                        "realizations": realizations,
                    }))
                }
                None => {
                    let sets = realizable_point_sets(&t, *max_size)?;
                    let params = ToleranceParams::default();
                    let configs = sets
                        .iter()
                        .map(|c| {
                            let h = congruence_hypergraph(c, &t, &params, CongruenceMode::Exact)?;
                            let mut entry = graph_entry(&h);
                            entry["points"] = to_value(&c.points)?;
                            Ok(entry)
                        })
                        .collect::<Result<Vec<_>, CliError>>()?;
                    Ok(json!({"triangle_type": kind, "max_size": max_size, "configurations": configs}))
                }
            }
        }
        Command::Lagrangian { graph, certify, restarts, depth } => {
            let h = parse_graph(graph)?;
            let mut result = maximize_seeded(&h, *restarts, crate::lagrangian::DEFAULT_MAX_ITERS, cli.seed);
            let mut certified = None;
            if let Some(bound) = certify {
                let ok = certify_upper_bound(&h, *bound, *depth)?;
                if ok {
                    result.certified_upper = Some(*bound);
                }
                certified = Some(ok);
            }
            let mut v = to_value(&result)?;
            if let Some(ok) = certified {
                v["certified"] = json!(ok);
            }
            Ok(v)
        }
        Command::Bounds { sides, n } => {
            let (t, _) = snapped_triangle(sides)?;
            to_value(&upper_bound(&t, *n)?)
        }
        Command::Construct { kind, n, sides, emit, eps, greedy } => {
            let (t, _) = snapped_triangle(sides)?;
            let kind: ConstructionKind = kind.parse()?;
            let policy = if *greedy { SizePolicy::Greedy } else { SizePolicy::Exact };
            let c = build_construction(kind, &t, *n, policy, *eps)?;
            let count = count_construction(&c, &t);
            let points = c.sample_points(cli.seed);
            if let Some(path) = emit {
                fs::write(path, format!("{}\n", to_value(&points)?))?;
            }
            Ok(json!({
                "construction": c,
                "n": n,
                "count": count,
                "seed": cli.seed,
                "emitted": emit.as_ref().map(|p| p.display().to_string()),
            }))
        }
        Command::Turan { n, forbid, witnesses, extended } => {
            if *n >= crate::turan::TURAN_MAX_VERTICES && !extended {
                return Err(invalid(format!("n = {n} needs --extended")));
            }
            let family: Vec<ThreeGraph> = parse_named_list(forbid)?.iter().map(|g| g.graph()).collect();
            if family.is_empty() {
                return Err(invalid("--forbid needs at least one graph"));
            }
            let mut search = TuranSearch::new(*n, &family).witnesses(*witnesses);
            if *extended {
                search = search.budget(EXTENDED_TURAN_BUDGET);
            }
            to_value(&search.run()?)
        }
        Command::Enumerate { n, forbid, contains, complete_shadow, min_edges } => {
            let forbid: Vec<ThreeGraph> =
                parse_named_list(forbid.as_deref().unwrap_or(""))?.iter().map(|g| g.graph()).collect();
            let contains: Vec<ThreeGraph> =
                parse_named_list(contains.as_deref().unwrap_or(""))?.iter().map(|g| g.graph()).collect();
            let classes = enumerate_classes(*n, |g| {
                g.edge_count() >= *min_edges
                    && (!complete_shadow || g.has_complete_shadow())
                    && g.is_family_free(&forbid)
                    && contains.iter().all(|f| g.contains_subgraph(f))
            })
            .map_err(invalid)?;
            let entries: Vec<Value> = classes.iter().map(graph_entry).collect();
            Ok(json!({"n": n, "count": entries.len(), "classes": entries}))
        }
        Command::Verify { lemma } => {
            let mut reports = verify::verify_suite(lemma, cli.seed)
                .ok_or_else(|| invalid(format!("unknown lemma `{lemma}`; known: all, {}", verify::LEMMAS.join(", "))))?;
            if !cli.timings {
                reports.iter_mut().for_each(|r| r.wall_time_ms = None);
            }
            let output = to_value(&reports)?;
            let failed: Vec<&str> = reports
                .iter()
                .filter(|r| r.status == verify::Status::Fail)
                .map(|r| r.lemma.as_str())
                .collect();
            if reports.iter().any(|r| r.status == verify::Status::Ambiguous) {
                return Err(CliError::Ambiguous(format!("ambiguous verdict: {output}")));
            }
            if !failed.is_empty() {
                return Err(CliError::Failed { message: format!("failed: {}", failed.join(", ")), output });
            }
            Ok(output)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CommandOutput {
        run_command(std::iter::once("trikit").chain(args.iter().copied()))
    }

    #[test]
    fn classify_equilateral() {
        let out = run(&["classify", "--sides", "1,1,1"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "{\"type\":\"equilateral\"}\n");
    }

    #[test]
    fn malformed_input_exits_2() {
        assert_eq!(run(&["classify", "--sides", "1,1"]).code, 2);
        assert_eq!(run(&["classify", "--sides", "1,1,3"]).code, 2);
        assert_eq!(run(&["frobnicate"]).code, 2);
        assert_eq!(run(&["verify", "--lemma", "nonexistent"]).code, 2);
    }

    #[test]
    fn near_miss_classification_exits_3() {
        assert_eq!(run(&["classify", "--sides", "1,1,1.000003"]).code, 3);
    }

    #[test]
    fn snapping_keeps_shortest_side() {
        let (t, kind) = snapped_triangle("2,3.4641016,4").unwrap();
        assert_eq!(kind, TriangleType::Right306090);
        assert!((t.sides()[1] - 2.0 * 3f64.sqrt()).abs() < 1e-12);
        let (t, kind) = snapped_triangle("1,2,2.2360679").unwrap();
        assert_eq!(kind, TriangleType::Right);
        assert_eq!(t.sides()[2], 5f64.sqrt());
    }

    #[test]
    fn points_parse() {
        assert_eq!(parse_points("0,0; 1,0;").unwrap(), vec![Point::ORIGIN, Point::new(1.0, 0.0)]);
        assert!(parse_points("0,0,1").is_err());
    }

    #[test]
    fn congruence_graph_of_rounded_triangle() {
        let out = run(&["congruence-graph", "--points", "0,0;1,0;0.5,0.8660254", "--sides", "1,1,1"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("\"edge_count\":1"), "{}", out.stdout);
    }

    #[test]
    fn turan_seven_needs_flag() {
        assert_eq!(run(&["turan", "--n", "7", "--forbid", "F5,K4_3minus"]).code, 2);
    }
}
