//! Command-line front end: generation, enumeration, coloring, verification,
//! exact solving, surveys, and export of cubic Halin graphs.
//!
//! Exit codes: 0 success/valid/Sat; 3 Unsat or invalid coloring; 4 Unknown
//! (limits hit); 64 usage or parse error; 65 invalid input graph. Machine
//! output goes to stdout, diagnostics to stderr.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use halin_packing::constructive::{color_1123, color_122222, lemma1_tree_coloring};
use halin_packing::dot::to_dot;
use halin_packing::error::Error;
use halin_packing::generators::{
    enumerate_cubic_halin, named_instance, random_cubic_halin, InstanceName, PlaneCubicTree,
};
use halin_packing::json::{
    closure_from_json, coloring_from_json, coloring_to_json, halin_from_json, halin_to_json,
    FORMAT_VERSION,
};
use halin_packing::solver::{decide, SearchConfig, SolveStatus};
use halin_packing::survey::{survey, survey_csv, SurveyMode};
use halin_packing::{all_pairs_distances, verify_packing, GenericGraph, SPacking};

const EXIT_OK: u8 = 0;
const EXIT_UNSAT: u8 = 3;
const EXIT_UNKNOWN: u8 = 4;
const EXIT_USAGE: u8 = 64;
const EXIT_BAD_GRAPH: u8 = 65;
const EXIT_INTERNAL: u8 = 70;

#[derive(Parser)]
#[command(name = "halinpack", about = "S-packing colorings of cubic Halin graphs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one cubic Halin graph as JSON on stdout.
    Gen(GenArgs),
    /// Stream all isomorphism classes up to --max vertices, one JSON per line.
    Enum {
        #[arg(long)]
        max: usize,
    },
    /// Color a graph constructively (schedules: 1123, 122222, lemma1).
    Color {
        #[arg(long)]
        schedule: String,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Verify a coloring against a schedule.
    Verify {
        #[arg(long)]
        schedule: String,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        /// Check against tree distances only (for lemma1 colorings).
        #[arg(long)]
        tree: bool,
    },
    /// Decide S-packing colorability exactly.
    Solve {
        #[arg(long)]
        schedule: String,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        node_limit: Option<u64>,
        /// Time limit in seconds.
        #[arg(long)]
        time_limit: Option<u64>,
    },
    /// Run a schedule batch over the enumeration and write CSV.
    Survey {
        #[arg(long)]
        max: usize,
        /// Comma-separated schedules, e.g. 1-1-2-4,1-2-2-2-2.
        #[arg(long)]
        schedules: String,
        #[arg(long, value_parser = ["exact", "crosscheck"])]
        mode: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render a graph as DOT or canonical JSON.
    Export {
        #[arg(long, value_parser = ["dot", "json"])]
        format: String,
        #[arg(long)]
        graph: PathBuf,
        /// Optional coloring for vertex labels (DOT only).
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenArgs {
    /// Number of internal tree vertices.
    #[arg(long, required_unless_present = "name")]
    internal: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Named instance (K4, prism6, G1) instead of random growth.
    #[arg(long)]
    name: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap's help/version output is not an error.
            if err.use_stderr() {
                eprint!("{err}");
                return ExitCode::from(EXIT_USAGE);
            }
            print!("{err}");
            return ExitCode::from(EXIT_OK);
        }
    };
    configure_threads();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("halinpack: {err}");
            ExitCode::from(classify(&err))
        }
    }
}

/// Optional HALIN_PACKER_THREADS caps survey parallelism.
fn configure_threads() {
    if let Ok(value) = std::env::var("HALIN_PACKER_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.max(1))
                .build_global();
        }
    }
}

fn classify(err: &Error) -> u8 {
    match err {
        Error::Json(_) | Error::BadSchedule(_) | Error::InvalidInput(_) | Error::UnknownName(_) => {
            EXIT_USAGE
        }
        Error::InvalidSize(_) | Error::BoundTooLarge { .. } => EXIT_USAGE,
        Error::NotATree(_)
        | Error::BadDegree { .. }
        | Error::OrderTooSmall(_)
        | Error::CycleMismatch(_)
        | Error::NonPlanarOrder(_, _)
        | Error::Disconnected
        | Error::BadTree(_) => EXIT_BAD_GRAPH,
        Error::OracleTooLarge { .. } | Error::ScheduleTooLong(_, _) => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Gen(args) => {
            let graph = match args.name {
                Some(name) => named_instance(name.parse::<InstanceName>()?),
                None => random_cubic_halin(args.internal.expect("required by clap"), args.seed)?,
            };
            println!("{}", serde_json::to_string(&halin_to_json(&graph))?);
            Ok(EXIT_OK)
        }
        Command::Enum { max } => {
            for graph in enumerate_cubic_halin(max)? {
                println!("{}", serde_json::to_string(&halin_to_json(&graph))?);
            }
            Ok(EXIT_OK)
        }
        Command::Color { schedule, input } => {
            let graph = halin_from_json(&read(&input)?)?;
            let (s_values, coloring, diagnostics) = match schedule.as_str() {
                "1123" => {
                    let (c, d) = color_1123(&graph)?;
                    (vec![1, 1, 2, 3], c, Some(d))
                }
                "122222" => {
                    let (c, d) = color_122222(&graph)?;
                    (vec![1, 2, 2, 2, 2, 2], c, Some(d))
                }
                "lemma1" => {
                    let tree = PlaneCubicTree::from_halin(&graph);
                    (vec![1, 2, 2, 2], lemma1_tree_coloring(&tree), None)
                }
                other => {
                    return Err(Error::BadSchedule(format!(
                        "color supports 1123, 122222, lemma1; got {other:?}"
                    )))
                }
            };
            let s = SPacking::new(s_values)?;
            let doc = coloring_to_json(&s, &coloring, graph.names(), diagnostics.as_ref());
            println!("{}", serde_json::to_string(&doc)?);
            Ok(EXIT_OK)
        }
        Command::Verify {
            schedule,
            graph,
            coloring,
            tree,
        } => {
            let closure = closure_from_json(&read(&graph)?)?;
            let target = if tree {
                tree_only_graph(&closure.tree_edges, closure.names.len())?
            } else {
                closure.graph.clone()
            };
            let s: SPacking = schedule.parse()?;
            let (embedded, parsed) = coloring_from_json(&read(&coloring)?, &closure.names)?;
            if embedded != s {
                eprintln!(
                    "halinpack: note: coloring file declares schedule {embedded}, checking {s}"
                );
            }
            let oracle = all_pairs_distances(&target)?;
            let report = verify_packing(&target, &s, &parsed, &oracle)?;
            let doc = json!({
                "format_version": FORMAT_VERSION,
                "valid": report.valid(),
                "violations": report.violations.iter().map(|v| json!({
                    "u": closure.names[v.u],
                    "v": closure.names[v.v],
                    "class": v.class,
                    "distance": v.distance,
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string(&doc)?);
            Ok(if report.valid() { EXIT_OK } else { EXIT_UNSAT })
        }
        Command::Solve {
            schedule,
            graph,
            node_limit,
            time_limit,
        } => {
            let closure = closure_from_json(&read(&graph)?)?;
            let s: SPacking = schedule.parse()?;
            let mut cfg = SearchConfig::default();
            if let Some(limit) = node_limit {
                cfg.node_limit = limit;
            }
            if let Some(secs) = time_limit {
                cfg.time_limit = Duration::from_secs(secs);
            }
            let result = decide(&closure.graph, &s, &cfg)?;
            let mut doc = json!({
                "format_version": FORMAT_VERSION,
                "schedule": s.values(),
                "status": result.status.name(),
                "nodes_explored": result.nodes_explored,
                "elapsed_ms": result.elapsed.as_millis() as u64,
            });
            let code = match &result.status {
                SolveStatus::Sat(c) => {
                    let colors: serde_json::Map<String, serde_json::Value> = closure
                        .names
                        .iter()
                        .enumerate()
                        .filter_map(|(v, name)| {
                            c.class_of(v).map(|class| (name.clone(), json!(class)))
                        })
                        .collect();
                    doc["coloring"] = serde_json::Value::Object(colors);
                    EXIT_OK
                }
                SolveStatus::Unsat => EXIT_UNSAT,
                SolveStatus::Unknown => EXIT_UNKNOWN,
            };
            println!("{}", serde_json::to_string(&doc)?);
            Ok(code)
        }
        Command::Survey {
            max,
            schedules,
            mode,
            out,
        } => {
            let graphs = enumerate_cubic_halin(max)?;
            let parsed: Vec<SPacking> = schedules
                .split(',')
                .map(|part| part.trim().parse::<SPacking>())
                .collect::<Result<_, _>>()?;
            let mode = if mode == "exact" {
                SurveyMode::Exact
            } else {
                SurveyMode::ConstructiveCrossCheck
            };
            let rows = survey(&graphs, &parsed, &SearchConfig::default(), mode);
            let csv = survey_csv(&rows);
            fs::write(&out, &csv).map_err(|e| {
                Error::InvalidInput(format!("cannot write {}: {e}", out.display()))
            })?;
            eprintln!("halinpack: wrote {} rows to {}", rows.len(), out.display());
            Ok(EXIT_OK)
        }
        Command::Export {
            format,
            graph,
            coloring,
        } => {
            let h = halin_from_json(&read(&graph)?)?;
            match format.as_str() {
                "json" => println!("{}", serde_json::to_string(&halin_to_json(&h))?),
                _ => {
                    let parsed = match coloring {
                        Some(path) => Some(coloring_from_json(&read(&path)?, h.names())?),
                        None => None,
                    };
                    let labeled = parsed.as_ref().map(|(s, c)| (s, c));
                    print!("{}", to_dot(&h, labeled));
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn tree_only_graph(
    tree_edges: &[(usize, usize)],
    vertex_count: usize,
) -> Result<GenericGraph, Error> {
    GenericGraph::from_edges(vertex_count, tree_edges)
}
