//! Command-line front end: `show`, `mutate`, `enumerate`, `verify`, `export-dot`.
//!
//! A source is either a builtin seed name or a path to a TOML seed file.
//! Mutation directions are 0-based cluster positions.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::catalog;
use crate::error::{Error, GraphError};
use crate::exgraph::{self, ExchangeGraph};
use crate::seed::{IntMatrix, QuantumSeed};
use crate::seedfile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_VERIFY_FAILED: i32 = 4;
pub const EXIT_BOUND: i32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "qcluster", about = "Quantum cluster algebra engine")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a seed, its quiver and the compatibility diagonal.
    Show { source: String },
    /// Mutate at the given cluster positions, left to right.
    Mutate {
        source: String,
        #[arg(required = true)]
        directions: Vec<usize>,
    },
    /// Enumerate the exchange graph.
    Enumerate {
        source: String,
        #[arg(long, default_value_t = 10_000)]
        max: usize,
        /// Also write the graph as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Verify a builtin example in its presented algebra.
    Verify {
        name: String,
        #[arg(long, default_value_t = 8)]
        degree_bound: usize,
    },
    /// Write the exchange graph (or the quiver) as DOT.
    ExportDot {
        source: String,
        #[arg(long)]
        quiver: bool,
        #[arg(long, default_value_t = 10_000)]
        max: usize,
        /// Output path; standard output when omitted.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Graph(GraphError::BoundExceeded(_)) => EXIT_BOUND,
        Error::Parse(_) | Error::Seed(_) | Error::UnknownExample(_) | Error::NoRealization(_) => {
            EXIT_VALIDATION
        }
        Error::Graph(GraphError::Seed(_)) => EXIT_VALIDATION,
        _ => EXIT_OTHER,
    }
}

/// Loads a builtin seed by name, or a seed file by path.
pub fn load_source(source: &str) -> Result<QuantumSeed, Error> {
    let path = Path::new(source);
    if path.exists() || source.ends_with(".toml") {
        seedfile::load(path)
    } else {
        Ok(catalog::builtin_seed(source)?.seed)
    }
}

/// Parses arguments and runs one command, writing to `out` and `err`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cli: &Cli) -> Result<(String, i32), Error> {
    let machine = cli.format == Format::Machine;
    match &cli.command {
        Command::Show { source } => Ok((show(&load_source(source)?, machine)?, EXIT_OK)),
        Command::Mutate { source, directions } => {
            Ok((mutate(&load_source(source)?, directions, machine)?, EXIT_OK))
        }
        Command::Enumerate { source, max, dot } => {
            let seed = load_source(source)?;
            let graph = exgraph::enumerate(&seed, *max)?;
            if let Some(path) = dot {
                std::fs::write(path, graph.to_dot())?;
            }
            Ok((enumerate_summary(&graph, machine), EXIT_OK))
        }
        Command::Verify { name, degree_bound } => {
            let report = catalog::verify_example(name, *degree_bound)?;
            let code = if report.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            let text = if machine {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report).expect("serializable")
                )
            } else {
                report.render()
            };
            Ok((text, code))
        }
        Command::ExportDot {
            source,
            quiver,
            max,
            dot,
        } => {
            let seed = load_source(source)?;
            let text = if *quiver {
                seed.quiver().to_dot()
            } else {
                exgraph::enumerate(&seed, *max)?.to_dot()
            };
            match dot {
                Some(path) => {
                    std::fs::write(path, text)?;
                    Ok((String::new(), EXIT_OK))
                }
                None => Ok((text, EXIT_OK)),
            }
        }
    }
}

fn render_matrix(m: &IntMatrix) -> String {
    let width = m
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in m {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        let _ = writeln!(out, "  [{}]", cells.join(" "));
    }
    out
}

pub fn show(seed: &QuantumSeed, machine: bool) -> Result<String, Error> {
    let diagonal = seed.compatibility();
    if machine {
        let v = json!({
            "names": seed.names(),
            "mutable": seed.exchange_matrix().mutable_rows(),
            "B": seed.exchange_matrix().entries(),
            "L": seed.quasi_commutation().entries(),
            "quiver": seed.quiver().arrows.iter().map(|a| (a.from, a.to, a.weight)).collect::<Vec<_>>(),
            "diagonal": diagonal.as_ref().ok(),
            "compatibility_error": diagonal.as_ref().err().map(|e| e.to_string()),
        });
        return Ok(format!(
            "{}\n",
            serde_json::to_string_pretty(&v).expect("json")
        ));
    }
    let mut out = String::new();
    let _ = writeln!(out, "cluster: ({})", seed.names().join(", "));
    let mutable: Vec<&str> = seed
        .exchange_matrix()
        .mutable_rows()
        .iter()
        .map(|&r| seed.names()[r].as_str())
        .collect();
    let _ = writeln!(out, "mutable: ({})", mutable.join(", "));
    let _ = write!(
        out,
        "B =\n{}",
        render_matrix(seed.exchange_matrix().entries())
    );
    let _ = write!(
        out,
        "L =\n{}",
        render_matrix(seed.quasi_commutation().entries())
    );
    let _ = writeln!(out, "quiver: {}", seed.quiver());
    match diagonal {
        Ok(d) => {
            let _ = write!(
                out,
                "B^T L =\n{}",
                render_matrix(
                    &seed
                        .exchange_matrix()
                        .transpose_times(seed.quasi_commutation())
                )
            );
            let _ = writeln!(out, "compatible, diagonal {d:?}");
        }
        Err(e) => {
            let _ = writeln!(out, "not compatible: {e}");
        }
    }
    Ok(out)
}

pub fn mutate(seed: &QuantumSeed, directions: &[usize], machine: bool) -> Result<String, Error> {
    let initial_names = seed.names().to_vec();
    let mut current = seed.clone();
    let mut steps = Vec::new();
    let mut out = String::new();
    for &row in directions {
        let m = current.mutate_row(row)?;
        let new_name = &m.seed.names()[row];
        let relation = m.relation.render(current.names(), new_name);
        let expansion = m.seed.expansions().expect("tracked")[row].render(&initial_names);
        let _ = writeln!(out, "mutate at {row} ({}):", current.names()[row]);
        let _ = writeln!(out, "  {relation}");
        let _ = writeln!(out, "  {new_name} = {expansion}");
        steps.push(json!({
            "row": row,
            "relation": relation,
            "terms": m.relation.terms,
            "new_variable": new_name,
            "expansion": expansion,
        }));
        current = m.seed;
    }
    if machine {
        let v = json!({
            "steps": steps,
            "names": current.names(),
            "B": current.exchange_matrix().entries(),
            "L": current.quasi_commutation().entries(),
        });
        return Ok(format!(
            "{}\n",
            serde_json::to_string_pretty(&v).expect("json")
        ));
    }
    out.push_str(&show(&current, false)?);
    Ok(out)
}

pub fn enumerate_summary(graph: &ExchangeGraph, machine: bool) -> String {
    let (mutable, frozen) = graph.collect_variables();
    let roots: Vec<(String, String)> = mutable
        .iter()
        .map(|v| {
            let d = exgraph::denominator_vector(&v.expansion, &graph.initial);
            (v.label.clone(), exgraph::render_root(&d))
        })
        .collect();
    if machine {
        let v = json!({
            "vertices": graph.vertex_count(),
            "directed_edges": graph.directed_edge_count(),
            "undirected_edges": graph.undirected_edges().len(),
            "mutable_variables": mutable.iter().map(|v| &v.label).collect::<Vec<_>>(),
            "frozen_variables": frozen.iter().map(|v| &v.label).collect::<Vec<_>>(),
            "type": graph.classify().to_string(),
            "roots": roots,
            "adjacency": graph.adjacency(),
        });
        return format!("{}\n", serde_json::to_string_pretty(&v).expect("json"));
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} vertices, {} directed edges ({} undirected)",
        graph.vertex_count(),
        graph.directed_edge_count(),
        graph.undirected_edges().len()
    );
    let _ = writeln!(
        out,
        "{} variables: {} mutable, {} frozen",
        mutable.len() + frozen.len(),
        mutable.len(),
        frozen.len()
    );
    let labels: Vec<&str> = frozen.iter().map(|v| v.label.as_str()).collect();
    let _ = writeln!(out, "frozen: {}", labels.join(", "));
    let _ = writeln!(out, "type: {}", graph.classify());
    for (label, root) in roots {
        let _ = writeln!(out, "  {label}: {root}");
    }
    out
}
