//! Plain-text graph files.
//!
//! ```text
//! # comment
//! directed            <- mode line: `directed` or `undirected`, exactly once, first
//! a b 1               <- edge: from, to, weight
//! island              <- a lone token declares a vertex with no edges
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. LF and CRLF line
//! endings are both accepted. Vertices are numbered in order of first
//! mention, which fixes the tie-breaking order used by the engine.

use std::fmt::Write as _;

use spath_core::{GraphBuilder, Mode, WeightedDigraph};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {reason}")]
    Syntax {
        line: usize,
        column: usize,
        reason: String,
    },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        source: spath_core::Error,
    },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. } | ParseError::Graph { line, .. } => *line,
        }
    }
}

fn syntax(line: usize, column: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        reason: reason.into(),
    }
}

fn parse_mode(token: &str) -> Option<Mode> {
    match token {
        "directed" => Some(Mode::Directed),
        "undirected" => Some(Mode::Undirected),
        _ => None,
    }
}

/// 1-based column of `token`, which must be a subslice of `line`.
fn column_of(line: &str, token: &str) -> usize {
    token.as_ptr() as usize - line.as_ptr() as usize + 1
}

pub fn parse_graph_file(text: &str) -> Result<WeightedDigraph, ParseError> {
    let mut builder: Option<GraphBuilder> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();

        let Some(b) = builder.as_mut() else {
            match (tokens.as_slice(), parse_mode(tokens[0])) {
                ([_], Some(mode)) => {
                    builder = Some(GraphBuilder::new(mode));
                    continue;
                }
                _ => {
                    return Err(syntax(
                        lineno,
                        column_of(line, tokens[0]),
                        "expected mode line `directed` or `undirected`",
                    ))
                }
            }
        };

        match tokens.as_slice() {
            [single] if parse_mode(single).is_some() => {
                return Err(syntax(
                    lineno,
                    column_of(line, single),
                    "duplicate mode line",
                ));
            }
            [name] => {
                b.add_vertex(name);
            }
            [u, v, w] => {
                let weight: f64 = w.parse().map_err(|_| {
                    syntax(lineno, column_of(line, w), format!("invalid weight `{w}`"))
                })?;
                b.add_edge(u, v, weight)
                    .map_err(|source| ParseError::Graph {
                        line: lineno,
                        source,
                    })?;
            }
            _ => {
                return Err(syntax(
                    lineno,
                    column_of(line, tokens[0]),
                    format!("expected `from to weight`, found {} fields", tokens.len()),
                ))
            }
        }
    }

    builder
        .map(GraphBuilder::build)
        .ok_or_else(|| syntax(1, 1, "missing mode line"))
}

/// Writes `g` in canonical form: the mode line, then edges ordered by source
/// and target ordinal (each undirected edge once). If edge order alone would
/// not reproduce the vertex numbering, every vertex is declared up front.
pub fn serialize_graph(g: &WeightedDigraph) -> String {
    let edges: Vec<_> = g
        .edges()
        .filter(|(u, v, _)| g.mode() == Mode::Directed || u < v)
        .collect();

    let mut seen = vec![false; g.vertex_count()];
    let mut order = Vec::with_capacity(g.vertex_count());
    for &(u, v, _) in &edges {
        for x in [u, v] {
            if !std::mem::replace(&mut seen[x.index()], true) {
                order.push(x);
            }
        }
    }
    let edges_suffice = order.iter().copied().eq(g.vertices());

    let mut out = String::new();
    out.push_str(match g.mode() {
        Mode::Directed => "directed\n",
        Mode::Undirected => "undirected\n",
    });
    if !edges_suffice {
        for v in g.vertices() {
            out.push_str(g.name(v).unwrap());
            out.push('\n');
        }
    }
    for (u, v, w) in edges {
        let _ = writeln!(
            out,
            "{} {} {}",
            g.name(u).unwrap(),
            g.name(v).unwrap(),
            w.get()
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use spath_core::{Error, VertexId};

    #[test]
    fn single_edge() {
        let g = parse_graph_file("directed\na z 5.0\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(
            g.weight(VertexId::new(0), VertexId::new(1)).unwrap().get(),
            5.0
        );
    }

    #[test]
    fn undirected_pair() {
        let g = parse_graph_file("undirected\na b 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(
            g.weight(VertexId::new(1), VertexId::new(0)).unwrap().get(),
            2.0
        );
    }

    #[test]
    fn self_loop_reports_line() {
        let err = parse_graph_file("directed\na a 1\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Graph {
                line: 2,
                source: Error::SelfLoop("a".into())
            }
        );
        assert_eq!(err.to_string(), "line 2: self-loop on vertex `a`");
    }

    #[test]
    fn comments_blanks_and_crlf() {
        let text = "# header\r\n\r\n  # indented comment\r\nundirected\r\na b 1.5\r\n\r\nc\r\n";
        let g = parse_graph_file(text).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.name(VertexId::new(2)), Some("c"));
        assert_eq!(
            g.weight(VertexId::new(0), VertexId::new(1)).unwrap().get(),
            1.5
        );
    }

    #[test]
    fn syntax_errors() {
        let cases = [
            ("", 1, "missing mode line"),
            ("# only a comment\n", 1, "missing mode line"),
            ("a b 1\n", 1, "expected mode line"),
            ("directed extra\n", 1, "expected mode line"),
            ("directed\ndirected\n", 2, "duplicate mode line"),
            ("directed\na b\n", 2, "found 2 fields"),
            ("directed\na b 1 2\n", 2, "found 4 fields"),
            ("directed\na b one\n", 2, "invalid weight `one`"),
        ];
        for (text, line, reason) in cases {
            let err = parse_graph_file(text).unwrap_err();
            assert_eq!(err.line(), line, "{text:?}");
            assert!(err.to_string().contains(reason), "{text:?}: {err}");
        }
        let err = parse_graph_file("directed\na b   x1\n").unwrap_err();
        assert_eq!(err, syntax(2, 7, "invalid weight `x1`"));
    }

    #[test]
    fn graph_errors_carry_lines() {
        let err = parse_graph_file("directed\na b 1\n\nb c -3\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Graph {
                line: 4,
                source: Error::BadWeight(-3.0)
            }
        );
        let err = parse_graph_file("undirected\na b 1\nb a 1\n").unwrap_err();
        assert_eq!(err.line(), 3);
        assert!(matches!(
            err,
            ParseError::Graph {
                source: Error::DuplicateEdge(..),
                ..
            }
        ));
        for w in ["0", "inf", "NaN"] {
            let err = parse_graph_file(&format!("directed\na b {w}\n")).unwrap_err();
            assert!(matches!(
                err,
                ParseError::Graph {
                    line: 2,
                    source: Error::BadWeight(_)
                }
            ));
        }
    }

    #[test]
    fn canonical_forms() {
        let text = "directed\na b 1\na c 4\nb c 2\nb z 6\nc z 3\n";
        assert_eq!(serialize_graph(&parse_graph_file(text).unwrap()), text);

        let text = "undirected\nx y 0.25\nx z 2\n";
        assert_eq!(serialize_graph(&parse_graph_file(text).unwrap()), text);

        // Edge order alone would number `c` before `b`.
        let text = "directed\na\nb\nc\na c 1\n";
        assert_eq!(serialize_graph(&parse_graph_file(text).unwrap()), text);

        assert_eq!(
            serialize_graph(&parse_graph_file("directed\n").unwrap()),
            "directed\n"
        );
    }
}
