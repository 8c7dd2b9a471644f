//! Weighted digraphs with strictly positive edge weights.
//!
//! Vertices are interned by name in first-mention order. The resulting dense
//! ordinal is the tie-breaking order used everywhere else in the crate, so two
//! builds from the same input always number vertices identically.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Dense 0-based vertex ordinal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(usize);

impl VertexId {
    pub const fn new(index: usize) -> Self {
        VertexId(index)
    }

    pub const fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A finite, strictly positive edge cost.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Weight(f64);

impl Weight {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Weight(value))
        } else {
            Err(Error::BadWeight(value))
        }
    }

    pub const fn get(self) -> f64 {
        self.0
    }
}

impl From<Weight> for f64 {
    fn from(w: Weight) -> f64 {
        w.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Directed,
    /// Every edge is installed in both directions with the same weight.
    Undirected,
}

/// A walk `x_0, x_1, ..., x_m` with `m >= 1`.
///
/// Edge membership is checked against a graph by
/// [`WeightedDigraph::path_weight`], not at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<VertexId>,
}

impl Path {
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::PathTooShort);
        }
        Ok(Path { vertices })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn source(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn target(&self) -> VertexId {
        self.vertices[self.vertices.len() - 1]
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Joins `self` (u to w) with `other` (w to v). Returns `None` when the
    /// endpoints do not meet.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target() != other.source() {
            return None;
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Some(Path { vertices })
    }
}

/// Immutable finite digraph. Adjacency lists are sorted by neighbor ordinal.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDigraph {
    mode: Mode,
    names: Vec<String>,
    index: BTreeMap<String, VertexId>,
    adjacency: Vec<Vec<(VertexId, Weight)>>,
    edge_count: usize,
}

impl WeightedDigraph {
    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    /// Number of ordered pairs in the edge set. An undirected edge counts twice.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.0 < self.names.len()
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub fn vertex_or_err(&self, name: &str) -> Result<VertexId> {
        self.vertex(name)
            .ok_or_else(|| Error::UnknownVertexName(name.to_string()))
    }

    pub fn name(&self, v: VertexId) -> Option<&str> {
        self.names.get(v.0).map(String::as_str)
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> {
        (0..self.names.len()).map(VertexId)
    }

    pub fn neighbors(&self, u: VertexId) -> Result<&[(VertexId, Weight)]> {
        self.adjacency
            .get(u.0)
            .map(Vec::as_slice)
            .ok_or(Error::UnknownVertex(u))
    }

    pub fn weight(&self, u: VertexId, v: VertexId) -> Option<Weight> {
        let adj = self.adjacency.get(u.0)?;
        adj.binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| adj[i].1)
    }

    /// All ordered edges `(u, v, w)`, by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, Weight)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().map(move |&(v, w)| (VertexId(u), v, w)))
    }

    /// Sum of the edge weights along `path`, accumulated from the first edge.
    pub fn path_weight(&self, path: &Path) -> Result<f64> {
        let mut total = 0.0;
        for pair in path.vertices().windows(2) {
            let (u, v) = (pair[0], pair[1]);
            for x in [u, v] {
                if !self.contains(x) {
                    return Err(Error::UnknownVertex(x));
                }
            }
            let w = self.weight(u, v).ok_or(Error::MissingEdge(u, v))?;
            total += w.get();
        }
        Ok(total)
    }
}

/// Incremental construction of a [`WeightedDigraph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    mode: Mode,
    names: Vec<String>,
    index: BTreeMap<String, VertexId>,
    adjacency: Vec<Vec<(VertexId, Weight)>>,
    edge_count: usize,
}

impl GraphBuilder {
    pub fn new(mode: Mode) -> Self {
        GraphBuilder {
            mode,
            names: Vec::new(),
            index: BTreeMap::new(),
            adjacency: Vec::new(),
            edge_count: 0,
        }
    }

    /// Interns `name`, returning its existing ordinal if already known.
    pub fn add_vertex(&mut self, name: &str) -> VertexId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = VertexId(self.names.len());
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        self.adjacency.push(Vec::new());
        id
    }

    /// Adds `u -> v` (and `v -> u` when undirected). On error the builder is
    /// left unchanged apart from possibly interning the two names.
    pub fn add_edge(&mut self, u: &str, v: &str, weight: f64) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u.to_string()));
        }
        let weight = Weight::new(weight)?;
        let (ui, vi) = (self.add_vertex(u), self.add_vertex(v));

        let pos_uv = self.slot(ui, vi).map_err(|_| self.duplicate(ui, vi))?;
        if self.mode == Mode::Undirected {
            let pos_vu = self.slot(vi, ui).map_err(|_| self.duplicate(vi, ui))?;
            self.adjacency[vi.0].insert(pos_vu, (ui, weight));
            self.edge_count += 1;
        }
        self.adjacency[ui.0].insert(pos_uv, (vi, weight));
        self.edge_count += 1;
        Ok(())
    }

    fn slot(&self, u: VertexId, v: VertexId) -> core::result::Result<usize, ()> {
        match self.adjacency[u.0].binary_search_by_key(&v, |&(x, _)| x) {
            Ok(_) => Err(()),
            Err(pos) => Ok(pos),
        }
    }

    fn duplicate(&self, u: VertexId, v: VertexId) -> Error {
        Error::DuplicateEdge(self.names[u.0].clone(), self.names[v.0].clone())
    }

    pub fn build(self) -> WeightedDigraph {
        WeightedDigraph {
            mode: self.mode,
            names: self.names,
            index: self.index,
            adjacency: self.adjacency,
            edge_count: self.edge_count,
        }
    }
}

/// Builds a graph from `(from, to, weight)` triples.
pub fn build_graph<I, S>(edges: I, mode: Mode) -> Result<WeightedDigraph>
where
    I: IntoIterator<Item = (S, S, f64)>,
    S: AsRef<str>,
{
    let mut builder = GraphBuilder::new(mode);
    for (u, v, w) in edges {
        builder.add_edge(u.as_ref(), v.as_ref(), w)?;
    }
    Ok(builder.build())
}
