//! The `coeul` command-line tool.
//!
//! Every subcommand reads JSON files and prints one JSON document to stdout.
//! Exit codes: 0 success (or "halts"), 2 invalid input, 3 diverges,
//! 4 undecided within the step cap.

pub mod json;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use coeulerian::chipfiring::{decide_halting_coeulerian, stabilize_with_sink, HaltingDecider};
use coeulerian::construct::{laplacian_from_lattice, reduce_rank_to_halting};
use coeulerian::generate::random_strongly_connected;
use coeulerian::invariants::{pham_index, GraphInvariants};
use coeulerian::sandpile::SandpileGroup;
use coeulerian::{ChipConfig, DirectedMultigraph, HaltStatus};
use num_traits::One;
use serde_json::{json, Value};
use thiserror::Error;

use crate::json::{
    chips_value, compact_vec, decimal, decimal_vec, graph_value, matrix_value, object, parse_config, parse_graph,
    parse_lattice, parse_vector, ConfigDoc,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DIVERGES: i32 = 3;
pub const EXIT_UNKNOWN: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("{0}: invalid JSON: {1}")]
    Json(String, serde_json::Error),
    #[error("invalid document: {0}")]
    Schema(String),
    #[error(transparent)]
    Core(#[from] coeulerian::Error),
}

#[derive(Debug, Parser)]
#[command(name = "coeul", version, about = "Chip-firing and sandpile invariants of directed multigraphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tree counts, Pham index, period vector and classification.
    Classify { graph: PathBuf },
    /// Decide whether a chip configuration stabilizes.
    Halts {
        graph: PathBuf,
        config: PathBuf,
        /// Answer by chip count alone when the graph is coEulerian.
        #[arg(long)]
        fast_if_coeulerian: bool,
        /// Give up (exit 4) after this many firings.
        #[arg(long, env = "COEUL_MAX_STEPS")]
        max_steps: Option<u64>,
        /// Write one JSON line {step, vertex, config} per firing.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Stabilize a sandpile with a sink.
    Stabilize {
        graph: PathBuf,
        config: PathBuf,
        #[arg(long)]
        sink: Option<usize>,
    },
    /// Sandpile group of a sink.
    Group {
        graph: PathBuf,
        #[arg(long)]
        sink: usize,
    },
    /// Build a graph whose Laplacian lattice is the given zero-sum lattice.
    Lattice2graph {
        lattice: PathBuf,
        /// Also write the bare graph document here.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Reduce a nonnegative-rank instance to a halting instance.
    Reduce {
        lattice: PathBuf,
        /// Config file, or an inline JSON array such as "[1,-1]".
        sigma: String,
        #[arg(long)]
        graph_out: Option<PathBuf>,
        #[arg(long)]
        config_out: Option<PathBuf>,
    },
    /// Seeded random strongly connected multigraph.
    RandomGraph {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        max_multiplicity: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((value, code)) => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"));
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn write_json(path: &Path, value: &Value) -> Result<(), CliError> {
    let io = |e| CliError::Io(path.display().to_string(), e);
    let mut f = File::create(path).map_err(io)?;
    writeln!(f, "{}", serde_json::to_string_pretty(value).expect("serializable")).map_err(io)
}

fn total_config(doc: ConfigDoc, g: &DirectedMultigraph) -> Result<ChipConfig, CliError> {
    match doc {
        ConfigDoc::Chips(c) => Ok(c),
        ConfigDoc::Sand { .. } => Err(CliError::Schema("expected a total configuration {\"chips\": [...]}".into())),
    }
    .and_then(|c| {
        if c.len() == g.n() {
            Ok(c)
        } else {
            Err(coeulerian::Error::DimensionMismatch { expected: g.n(), found: c.len() }.into())
        }
    })
}

fn execute(command: Command) -> Result<(Value, i32), CliError> {
    match command {
        Command::Classify { graph } => {
            let g = parse_graph(&json::read(&graph)?)?;
            let inv = GraphInvariants::compute(&g);
            Ok((
                object(vec![
                    ("kappa", decimal_vec(&inv.kappa)),
                    ("pham_index", decimal(&inv.pham_index)),
                    ("period", decimal_vec(&inv.period)),
                    ("eulerian", json!(inv.is_eulerian)),
                    ("coeulerian", json!(inv.is_coeulerian)),
                    ("cactus", json!(inv.is_cactus)),
                    ("cokernel_order", decimal(&inv.cokernel_order)),
                ]),
                EXIT_OK,
            ))
        }
        Command::Halts { graph, config, fast_if_coeulerian, max_steps, trace } => {
            let g = parse_graph(&json::read(&graph)?)?;
            let sigma = total_config(parse_config(&json::read(&config)?)?, &g)?;
            halts(&g, &sigma, fast_if_coeulerian, max_steps, trace.as_deref())
        }
        Command::Stabilize { graph, config, sink } => {
            let g = parse_graph(&json::read(&graph)?)?;
            let (eta, sink) = match (parse_config(&json::read(&config)?)?, sink) {
                (ConfigDoc::Sand { sink: s, .. }, Some(flag)) if s != flag => {
                    return Err(CliError::Schema(format!("config sink {s} disagrees with --sink {flag}")));
                }
                (ConfigDoc::Sand { sand, sink }, _) => (sand, sink),
                (ConfigDoc::Chips(c), Some(s)) => {
                    g.check_vertex(s)?;
                    if c.len() != g.n() {
                        return Err(coeulerian::Error::DimensionMismatch { expected: g.n(), found: c.len() }.into());
                    }
                    (c.restrict(s), s)
                }
                (ConfigDoc::Chips(_), None) => {
                    return Err(CliError::Schema("--sink is required for a total configuration".into()));
                }
            };
            let st = stabilize_with_sink(&g, sink, &eta)?;
            Ok((
                object(vec![
                    ("sink", json!(sink)),
                    ("stable", compact_vec(&st.stable)),
                    ("odometer", decimal_vec(&st.odometer)),
                    ("grains_to_sink", decimal(&st.grains_to_sink)),
                ]),
                EXIT_OK,
            ))
        }
        Command::Group { graph, sink } => {
            let g = parse_graph(&json::read(&graph)?)?;
            let grp = SandpileGroup::new(&g, sink)?;
            let desc = grp.describe()?;
            let gamma = grp.gamma();
            Ok((
                object(vec![
                    ("sink", json!(sink)),
                    ("order", decimal(&desc.order)),
                    ("invariant_factors", decimal_vec(&desc.invariant_factors)),
                    ("beta", compact_vec(&desc.beta)),
                    ("order_of_beta", decimal(&desc.order_of_beta)),
                    ("identity", compact_vec(grp.identity())),
                    ("gamma", compact_vec(&gamma)),
                    ("gamma_order", decimal(&grp.element_order(&gamma)?)),
                    ("coset_count", decimal(&grp.coset_count()?)),
                ]),
                EXIT_OK,
            ))
        }
        Command::Lattice2graph { lattice, graph_out } => {
            let basis = parse_lattice(&json::read(&lattice)?)?;
            let (g, trace) = laplacian_from_lattice(&basis)?;
            if let Some(path) = graph_out {
                write_json(&path, &graph_value(&g))?;
            }
            let trace = json!({
                "a": matrix_value(&trace.a),
                "h": matrix_value(&trace.h),
                "d": decimal(&trace.d),
                "k": decimal_vec(&trace.k),
                "b": matrix_value(&trace.b),
                "laplacian": matrix_value(&trace.laplacian),
            });
            Ok((object(vec![("graph", graph_value(&g)), ("trace", trace)]), EXIT_OK))
        }
        Command::Reduce { lattice, sigma, graph_out, config_out } => {
            let basis = parse_lattice(&json::read(&lattice)?)?;
            let sigma = match serde_json::from_str::<Value>(&sigma) {
                Ok(v @ Value::Array(_)) => parse_vector(&v)?,
                _ => match parse_config(&json::read(Path::new(&sigma))?)? {
                    ConfigDoc::Chips(c) => c.0,
                    ConfigDoc::Sand { .. } => {
                        return Err(CliError::Schema("sigma must be a total configuration".into()));
                    }
                },
            };
            let (g, config) = reduce_rank_to_halting(&basis, &sigma)?;
            if let Some(path) = graph_out {
                write_json(&path, &graph_value(&g))?;
            }
            if let Some(path) = config_out {
                write_json(&path, &chips_value(&config))?;
            }
            Ok((object(vec![("graph", graph_value(&g)), ("config", chips_value(&config))]), EXIT_OK))
        }
        Command::RandomGraph { n, max_multiplicity, seed } => {
            if n == 0 {
                return Err(coeulerian::Error::Empty.into());
            }
            Ok((graph_value(&random_strongly_connected(n, max_multiplicity, seed)), EXIT_OK))
        }
    }
}

fn halts(
    g: &DirectedMultigraph,
    sigma: &ChipConfig,
    fast_if_coeulerian: bool,
    max_steps: Option<u64>,
    trace: Option<&Path>,
) -> Result<(Value, i32), CliError> {
    if fast_if_coeulerian && trace.is_none() && pham_index(g).is_one() {
        let halts = decide_halting_coeulerian(g, sigma);
        let status = if halts { "halts" } else { "diverges" };
        let value = object(vec![
            ("status", json!(status)),
            ("method", json!("chip-count")),
            ("chips", decimal(&sigma.total())),
            ("excess", decimal(&g.excess())),
        ]);
        return Ok((value, if halts { EXIT_OK } else { EXIT_DIVERGES }));
    }
    let decider = HaltingDecider::new(g).step_cap(max_steps);
    let verdict = match trace {
        None => decider.run(sigma)?,
        Some(path) => {
            let io = |e| CliError::Io(path.display().to_string(), e);
            let mut w = BufWriter::new(File::create(path).map_err(io)?);
            let mut failure = None;
            let verdict = decider.run_traced(sigma, |step, vertex, config| {
                if failure.is_none() {
                    let line = json!({ "step": step, "vertex": vertex, "config": compact_vec(config) });
                    if let Err(e) = writeln!(w, "{line}") {
                        failure = Some(e);
                    }
                }
            })?;
            if let Some(e) = failure {
                return Err(io(e));
            }
            w.flush().map_err(io)?;
            verdict
        }
    };
    let (status, code) = match verdict.status {
        HaltStatus::Halts => ("halts", EXIT_OK),
        HaltStatus::Diverges => ("diverges", EXIT_DIVERGES),
        HaltStatus::Unknown => ("unknown", EXIT_UNKNOWN),
    };
    let value = object(vec![
        ("status", json!(status)),
        ("method", json!("simulation")),
        ("steps", json!(verdict.steps)),
        ("odometer", decimal_vec(&verdict.odometer)),
        ("threshold", decimal_vec(&verdict.threshold)),
        ("config", compact_vec(&verdict.config)),
    ]);
    Ok((value, code))
}
