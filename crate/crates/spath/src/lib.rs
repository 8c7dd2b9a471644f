//! File formats, trace rendering and the command-line front end for
//! [`spath_core`].

pub mod cli;
pub mod graph_file;
pub mod render;

pub use graph_file::{parse_graph_file, serialize_graph, ParseError};
pub use render::{render_trace, Format};
