//! The `spath` command line.
//!
//! Exit codes: 0 on success, 1 when `route` finds no path or `check` finds a
//! disagreement, 2 for usage, file, parse and validation errors.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use spath_core::oracle::{enumerate_min_bounded, DEFAULT_BOUND};
use spath_core::{
    reconstruct_path, run, run_heap, Label, RunMode, StopReason, VertexId, WeightedDigraph,
};

use crate::graph_file::{parse_graph_file, ParseError};
use crate::render::{render_labels, render_route, weight_text, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_FOUND: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "spath", version, about = "Shortest paths on weighted digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphArgs {
    /// Graph file (mode line, then `from to weight` lines)
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
    #[arg(long, value_name = "VERTEX")]
    source: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal-cost path between two vertices
    Route {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_name = "VERTEX")]
        target: String,
        /// Print every settling step
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Final label and predecessor of every vertex
    Sssp {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cross-check the engine against exhaustive path enumeration
    Check {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_name = "VERTEX")]
        target: String,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Graph(#[from] spath_core::Error),
}

fn load(path: &PathBuf) -> Result<WeightedDigraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.clone(),
        source,
    })?;
    parse_graph_file(&text).map_err(|source| CliError::Parse {
        path: path.clone(),
        source,
    })
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_INVALID
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let code = match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    };
    let _ = out.flush();
    let _ = err.flush();
    code
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Route {
            graph,
            target,
            trace,
            format,
        } => {
            let g = load(&graph.graph)?;
            let s = g.vertex_or_err(&graph.source)?;
            let t = g.vertex_or_err(&target)?;
            let (result, events) = run(&g, s, Some(t), RunMode::ToTarget, trace)?;
            let path = reconstruct_path(&result, t)?;
            let found = match (&path, result.label(t)) {
                (Some(p), Label::Finite(w)) => Some((w, p)),
                _ => None,
            };
            let text = render_route(&g, s, t, found, events.as_deref(), format);
            write_out(out, &text);
            Ok(if found.is_some() {
                EXIT_OK
            } else {
                EXIT_NOT_FOUND
            })
        }
        Command::Sssp { graph, format } => {
            let g = load(&graph.graph)?;
            let s = g.vertex_or_err(&graph.source)?;
            let (result, _) = run(&g, s, None, RunMode::Exhaustive, false)?;
            write_out(out, &render_labels(&g, &result, format));
            Ok(EXIT_OK)
        }
        Command::Check { graph, target } => {
            let g = load(&graph.graph)?;
            let s = g.vertex_or_err(&graph.source)?;
            let t = g.vertex_or_err(&target)?;
            let report = check(&g, s, t)?;
            write_out(out, &report.lines.join("\n"));
            write_out(out, "\n");
            for problem in &report.problems {
                let _ = writeln!(err, "mismatch: {problem}");
            }
            Ok(if report.problems.is_empty() {
                EXIT_OK
            } else {
                EXIT_NOT_FOUND
            })
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) {
    let _ = out.write_all(text.as_bytes());
}

struct CheckReport {
    lines: Vec<String>,
    problems: Vec<String>,
}

fn check(g: &WeightedDigraph, s: VertexId, t: VertexId) -> Result<CheckReport, CliError> {
    let mut lines = Vec::new();
    let mut problems = Vec::new();

    let (result, _) = run(g, s, Some(t), RunMode::ToTarget, false)?;
    let engine = match result.stop_reason {
        StopReason::TargetSettled => result.label(t).cost(),
        _ => None,
    };
    let path = reconstruct_path(&result, t)?;
    match &path {
        Some(p) => {
            let names: Vec<_> = p.vertices().iter().map(|&v| g.name(v).unwrap()).collect();
            lines.push(format!(
                "engine  {}  {}",
                weight_text(engine),
                names.join(" ")
            ));
            let summed = g.path_weight(p)?;
            if Some(summed) != engine {
                problems.push(format!(
                    "reconstructed path weighs {summed:?}, label says {}",
                    weight_text(engine)
                ));
            }
        }
        None => {
            lines.push("engine  no path".to_string());
            if engine.is_some() {
                problems.push("target settled but no path reconstructed".to_string());
            }
        }
    }

    let heap = run_heap(g, s, Some(t), RunMode::ToTarget)?;
    if !heap.same_outcome(&result) {
        problems.push("heap engine disagrees with linear-scan engine".to_string());
    }

    if g.vertex_count() <= DEFAULT_BOUND {
        let ans = enumerate_min_bounded(g, s, t, DEFAULT_BOUND)?;
        lines.push(match ans.min_weight {
            Some(w) => format!(
                "oracle  {}  ({} paths)",
                weight_text(Some(w)),
                ans.path_count
            ),
            None => "oracle  no path".to_string(),
        });
        if ans.min_weight != engine {
            problems.push(format!(
                "engine {} vs oracle {}",
                weight_text(engine),
                weight_text(ans.min_weight)
            ));
        }
    } else {
        lines.push(format!(
            "oracle  skipped ({} vertices > {DEFAULT_BOUND})",
            g.vertex_count()
        ));
    }

    lines.push(
        if problems.is_empty() {
            "ok"
        } else {
            "MISMATCH"
        }
        .to_string(),
    );
    Ok(CheckReport { lines, problems })
}
