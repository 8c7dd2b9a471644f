//! Single-source shortest paths on finite digraphs with strictly positive
//! edge weights.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! * [`graph`]: an immutable weighted digraph with name interning, path
//!   weights and deterministic adjacency order.
//! * [`engine`]: the label-setting search (linear scan over the unsettled
//!   set, plus a binary-heap twin), predecessor labels, path reconstruction
//!   and per-iteration traces.
//! * [`oracle`]: exhaustive simple-path enumeration used as ground truth on
//!   small graphs, and a seeded random graph generator.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod engine;
mod error;
pub mod graph;
pub mod oracle;

#[cfg(test)]
mod fixtures;

pub use engine::{
    reconstruct_path, run, run_heap, shortest_path_weight, Label, PredecessorLabel, Relaxation,
    RunMode, RunResult, StopReason, TraceEvent,
};
pub use error::Error;
pub use graph::{build_graph, GraphBuilder, Mode, Path, VertexId, Weight, WeightedDigraph};
pub use oracle::{enumerate_min, random_graph, OracleAnswer, RandomGraphConfig};

pub type Result<T, E = Error> = core::result::Result<T, E>;
