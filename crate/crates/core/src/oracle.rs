//! Brute-force ground truth for small graphs.
//!
//! The oracle enumerates simple paths by depth-first search and keeps the
//! cheapest. With strictly positive weights any walk that repeats a vertex
//! contains a cycle of positive cost that can be cut out, leaving a cheaper
//! walk between the same endpoints. Some minimal-cost path is therefore simple,
//! and the minimum over simple paths is the exact shortest-path cost. Nothing
//! here shares code with [`crate::engine`].
//!
//! Enumeration is exponential, so graphs above a vertex bound
//! ([`DEFAULT_BOUND`] unless overridden) are refused.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{GraphBuilder, Mode, Path, VertexId, WeightedDigraph};
use crate::{Error, Result};

pub const DEFAULT_BOUND: usize = 12;

/// Spacing of the weight grid used by [`random_graph`]. Multiples of a power
/// of two sum exactly in binary floating point at these magnitudes.
pub const DEFAULT_GRID: f64 = 0.25;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleAnswer {
    /// `None` when no path exists.
    pub min_weight: Option<f64>,
    /// First minimal path met in ordinal DFS order.
    pub witness: Option<Path>,
    pub path_count: usize,
}

fn check_bound(g: &WeightedDigraph, bound: usize) -> Result<()> {
    if g.vertex_count() > bound {
        Err(Error::GraphTooLarge(g.vertex_count(), bound))
    } else {
        Ok(())
    }
}

/// Calls `visit(vertices, weight)` for every simple path that starts at
/// `source` and has at least one edge. Each path's weight is accumulated
/// edge by edge from the source.
pub fn for_each_simple_path<F>(
    g: &WeightedDigraph,
    source: VertexId,
    bound: usize,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&[VertexId], f64),
{
    check_bound(g, bound)?;
    if !g.contains(source) {
        return Err(Error::UnknownVertex(source));
    }
    let mut on_path = vec![false; g.vertex_count()];
    let mut stack = vec![source];
    on_path[source.index()] = true;
    extend(g, &mut stack, &mut on_path, 0.0, &mut |p, w| {
        visit(p, w);
        true
    });
    Ok(())
}

/// DFS step. `visit` returns whether to keep extending the path it was given.
fn extend<F>(
    g: &WeightedDigraph,
    stack: &mut Vec<VertexId>,
    on_path: &mut [bool],
    weight: f64,
    visit: &mut F,
) where
    F: FnMut(&[VertexId], f64) -> bool,
{
    let u = *stack.last().expect("path is never empty");
    let Ok(adj) = g.neighbors(u) else { return };
    for &(v, w) in adj {
        if on_path[v.index()] {
            continue;
        }
        let total = weight + w.get();
        stack.push(v);
        if visit(stack, total) {
            on_path[v.index()] = true;
            extend(g, stack, on_path, total, visit);
            on_path[v.index()] = false;
        }
        stack.pop();
    }
}

/// Exact minimal cost from `source` to `target` over all simple paths.
pub fn enumerate_min(
    g: &WeightedDigraph,
    source: VertexId,
    target: VertexId,
) -> Result<OracleAnswer> {
    enumerate_min_bounded(g, source, target, DEFAULT_BOUND)
}

pub fn enumerate_min_bounded(
    g: &WeightedDigraph,
    source: VertexId,
    target: VertexId,
    bound: usize,
) -> Result<OracleAnswer> {
    check_bound(g, bound)?;
    for v in [source, target] {
        if !g.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    if source == target {
        return Err(Error::SourceEqualsTarget);
    }

    let mut best: Option<(f64, Vec<VertexId>)> = None;
    let mut path_count = 0;
    let mut on_path = vec![false; g.vertex_count()];
    on_path[source.index()] = true;
    let mut stack = vec![source];
    extend(
        g,
        &mut stack,
        &mut on_path,
        0.0,
        &mut |p: &[VertexId], w| {
            if *p.last().unwrap() != target {
                return true;
            }
            path_count += 1;
            if best.as_ref().is_none_or(|(b, _)| w < *b) {
                best = Some((w, p.to_vec()));
            }
            // Simple paths end at the target.
            false
        },
    );

    Ok(match best {
        Some((w, p)) => OracleAnswer {
            min_weight: Some(w),
            witness: Some(Path::new(p)?),
            path_count,
        },
        None => OracleAnswer {
            min_weight: None,
            witness: None,
            path_count,
        },
    })
}

/// Minimal cost from `source` to every vertex, `Some(0.0)` for the source.
pub fn min_costs_from(
    g: &WeightedDigraph,
    source: VertexId,
    bound: usize,
) -> Result<Vec<Option<f64>>> {
    let mut best: Vec<Option<f64>> = vec![None; g.vertex_count()];
    for_each_simple_path(g, source, bound, |p, w| {
        let slot = &mut best[p.last().unwrap().index()];
        if slot.is_none_or(|b| w < b) {
            *slot = Some(w);
        }
    })?;
    best[source.index()] = Some(0.0);
    Ok(best)
}

// `f64::ceil` lives in std.
fn ceil_u64(x: f64) -> u64 {
    let t = x as u64;
    if (t as f64) < x {
        t + 1
    } else {
        t
    }
}

/// Parameters for [`RandomGraphConfig::generate`].
#[derive(Debug, Clone, PartialEq)]
pub struct RandomGraphConfig {
    pub n: usize,
    /// Chance that each ordered pair (directed) or unordered pair
    /// (undirected) becomes an edge.
    pub edge_probability: f64,
    /// Inclusive.
    pub weight_range: (f64, f64),
    pub mode: Mode,
    pub seed: u64,
    /// Draw weights from multiples of this spacing inside `weight_range`;
    /// `None` draws from the continuous range.
    pub grid: Option<f64>,
}

impl RandomGraphConfig {
    pub fn new(n: usize, edge_probability: f64, mode: Mode, seed: u64) -> Self {
        RandomGraphConfig {
            n,
            edge_probability,
            weight_range: (0.25, 10.0),
            mode,
            seed,
            grid: Some(DEFAULT_GRID),
        }
    }

    /// Vertices are named `v0 .. v{n-1}` and interned in that order, so
    /// `VertexId::new(i)` is `v{i}`.
    pub fn generate(&self) -> Result<WeightedDigraph> {
        let (low, high) = self.weight_range;
        if !(low.is_finite() && high.is_finite() && low > 0.0 && low <= high) {
            return Err(Error::BadWeightRange(low, high));
        }
        if !(0.0..=1.0).contains(&self.edge_probability) {
            return Err(Error::BadProbability(self.edge_probability));
        }
        if self.n == 0 {
            return Err(Error::EmptyRandomGraph);
        }
        let steps = match self.grid {
            Some(step) if step.is_finite() && step > 0.0 => {
                let lo = ceil_u64(low / step);
                let hi = (high / step) as u64;
                if lo > hi {
                    return Err(Error::BadWeightRange(low, high));
                }
                Some((step, lo, hi))
            }
            Some(_) => return Err(Error::BadWeightRange(low, high)),
            None => None,
        };

        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut builder = GraphBuilder::new(self.mode);
        let names: Vec<_> = (0..self.n).map(|i| format!("v{i}")).collect();
        for name in &names {
            builder.add_vertex(name);
        }
        for u in 0..self.n {
            let first = match self.mode {
                Mode::Directed => 0,
                Mode::Undirected => u + 1,
            };
            for v in first..self.n {
                if u == v || !rng.gen_bool(self.edge_probability) {
                    continue;
                }
                let w = match steps {
                    Some((step, lo, hi)) => rng.gen_range(lo..=hi) as f64 * step,
                    None => rng.gen_range(low..=high),
                };
                builder.add_edge(&names[u], &names[v], w)?;
            }
        }
        Ok(builder.build())
    }
}

/// Seeded random graph with weights on the default grid.
pub fn random_graph(
    n: usize,
    edge_probability: f64,
    weight_range: (f64, f64),
    mode: Mode,
    seed: u64,
) -> Result<WeightedDigraph> {
    RandomGraphConfig {
        weight_range,
        ..RandomGraphConfig::new(n, edge_probability, mode, seed)
    }
    .generate()
}
