//! Text and JSON output for traces and query results.
//!
//! Trace costs use the shortest decimal form (`5`, `2.25`, `inf`). Result
//! weights always keep a fractional part (`6.0`) so they read as costs.
//! JSON renders unreachable costs as `null`.

use std::fmt::Write as _;

use serde::Serialize;
use spath_core::{Path, RunResult, TraceEvent, VertexId, WeightedDigraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// `6.0`, `2.25`, `inf`.
pub fn weight_text(cost: Option<f64>) -> String {
    match cost {
        Some(c) => format!("{c:?}"),
        None => "inf".to_string(),
    }
}

fn name(g: &WeightedDigraph, v: VertexId) -> &str {
    g.name(v).expect("vertex belongs to the graph")
}

#[derive(Serialize)]
struct JsonRelaxation<'a> {
    vertex: &'a str,
    old: Option<f64>,
    new: Option<f64>,
    adopted: bool,
}

#[derive(Serialize)]
pub(crate) struct JsonEvent<'a> {
    iteration: usize,
    settle: &'a str,
    cost: Option<f64>,
    relaxations: Vec<JsonRelaxation<'a>>,
}

pub(crate) fn json_events<'a>(g: &'a WeightedDigraph, events: &[TraceEvent]) -> Vec<JsonEvent<'a>> {
    events
        .iter()
        .map(|ev| JsonEvent {
            iteration: ev.iteration,
            settle: name(g, ev.entering),
            cost: ev.entering_cost.cost(),
            relaxations: ev
                .relaxations
                .iter()
                .map(|r| JsonRelaxation {
                    vertex: name(g, r.neighbor),
                    old: r.old.cost(),
                    new: r.new.cost(),
                    adopted: r.adopted,
                })
                .collect(),
        })
        .collect()
}

/// One block per iteration in text form, one JSON object per line in JSON
/// form. An empty trace renders as the empty string.
pub fn render_trace(g: &WeightedDigraph, events: &[TraceEvent], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for ev in events {
                let _ = writeln!(
                    out,
                    "[{}] settle {} cost={}",
                    ev.iteration,
                    name(g, ev.entering),
                    ev.entering_cost
                );
                for r in &ev.relaxations {
                    let verdict = if r.adopted { "adopted" } else { "kept" };
                    let _ = writeln!(
                        out,
                        "  relax {}: {} -> {} ({verdict})",
                        name(g, r.neighbor),
                        r.old,
                        r.new
                    );
                }
            }
        }
        Format::Json => {
            for ev in json_events(g, events) {
                out.push_str(&serde_json::to_string(&ev).expect("plain data serializes"));
                out.push('\n');
            }
        }
    }
    out
}

pub fn path_names<'a>(g: &'a WeightedDigraph, path: &Path) -> Vec<&'a str> {
    path.vertices().iter().map(|&v| name(g, v)).collect()
}

#[derive(Serialize)]
struct JsonRoute<'a> {
    source: &'a str,
    target: &'a str,
    weight: Option<f64>,
    path: Option<Vec<&'a str>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<JsonEvent<'a>>>,
}

/// Result of a routing query. `found` is `None` when no path exists.
pub fn render_route(
    g: &WeightedDigraph,
    source: VertexId,
    target: VertexId,
    found: Option<(f64, &Path)>,
    trace: Option<&[TraceEvent]>,
    format: Format,
) -> String {
    match format {
        Format::Text => {
            let mut out = trace
                .map(|t| render_trace(g, t, Format::Text))
                .unwrap_or_default();
            match found {
                Some((w, path)) => {
                    let _ = writeln!(
                        out,
                        "{}  {}",
                        weight_text(Some(w)),
                        path_names(g, path).join(" ")
                    );
                }
                None => out.push_str("no path\n"),
            }
            out
        }
        Format::Json => {
            let doc = JsonRoute {
                source: name(g, source),
                target: name(g, target),
                weight: found.map(|(w, _)| w),
                path: found.map(|(_, p)| path_names(g, p)),
                trace: trace.map(|t| json_events(g, t)),
            };
            serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
        }
    }
}

#[derive(Serialize)]
struct JsonVertex<'a> {
    vertex: &'a str,
    cost: Option<f64>,
    pred: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonSssp<'a> {
    source: &'a str,
    vertices: Vec<JsonVertex<'a>>,
}

/// Final label and predecessor of every vertex, in ordinal order. Text lines
/// read `<vertex> <cost> <pred>` with `-` for a missing predecessor.
pub fn render_labels(g: &WeightedDigraph, result: &RunResult, format: Format) -> String {
    let rows = g.vertices().map(|v| {
        let label = result.labels[v.index()];
        (name(g, v), label.cost, label.pred.map(|p| name(g, p)))
    });
    match format {
        Format::Text => {
            let mut out = String::new();
            for (v, cost, pred) in rows {
                let _ = writeln!(
                    out,
                    "{v} {} {}",
                    weight_text(cost.cost()),
                    pred.unwrap_or("-")
                );
            }
            out
        }
        Format::Json => {
            let doc = JsonSssp {
                source: name(g, result.source),
                vertices: rows
                    .map(|(vertex, cost, pred)| JsonVertex {
                        vertex,
                        cost: cost.cost(),
                        pred,
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
        }
    }
}
