//! Label-setting shortest paths.
//!
//! Every vertex carries a tentative cost and a predecessor. Each iteration
//! settles the unsettled vertex with the least cost, taking the smallest
//! ordinal among equal costs, then relaxes its unsettled out-neighbors. A
//! neighbor's label changes only on strict improvement, and cost and
//! predecessor are written together, so a final `(cost, pred)` pair always
//! describes the edge that produced it.
//!
//! [`run`] selects by scanning the unsettled set, [`run_heap`] by a binary
//! heap keyed on `(cost, ordinal)`. Both pick the same vertex at every step.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::graph::{Path, VertexId, WeightedDigraph};
use crate::{Error, Result};

/// Tentative cost of reaching a vertex. `Unreachable` orders above every
/// finite cost.
#[derive(Debug, Clone, Copy)]
pub enum Label {
    Finite(f64),
    Unreachable,
}

impl Label {
    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }

    pub fn cost(self) -> Option<f64> {
        match self {
            Label::Finite(c) => Some(c),
            Label::Unreachable => None,
        }
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Label::Finite(a), Label::Finite(b)) => a.total_cmp(b),
            (Label::Finite(_), Label::Unreachable) => Ordering::Less,
            (Label::Unreachable, Label::Finite(_)) => Ordering::Greater,
            (Label::Unreachable, Label::Unreachable) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Label {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Label {}

/// Shortest decimal form for finite costs, `inf` otherwise.
impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(c) => write!(f, "{c}"),
            Label::Unreachable => f.write_str("inf"),
        }
    }
}

/// Cost plus the vertex whose settling produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PredecessorLabel {
    pub cost: Label,
    /// `None` for the source and for unreached vertices.
    pub pred: Option<VertexId>,
}

impl PredecessorLabel {
    const UNREACHED: Self = PredecessorLabel {
        cost: Label::Unreachable,
        pred: None,
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunMode {
    /// Stop as soon as the target is settled.
    ToTarget,
    /// Settle everything reachable.
    Exhaustive,
    /// Settle every vertex. Unreachable vertices are never settled, so this
    /// behaves like [`RunMode::Exhaustive`] and ends with `AllSettled`
    /// exactly when every vertex is reachable from the source.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    TargetSettled,
    /// Every unsettled vertex is unreachable.
    Exhausted,
    AllSettled,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub labels: Vec<PredecessorLabel>,
    /// Settled vertices in the order they entered.
    pub settled: Vec<VertexId>,
    pub stop_reason: StopReason,
    pub source: VertexId,
    pub target: Option<VertexId>,
}

impl RunResult {
    pub fn label(&self, v: VertexId) -> Label {
        self.labels
            .get(v.index())
            .map_or(Label::Unreachable, |l| l.cost)
    }

    pub fn is_settled(&self, v: VertexId) -> bool {
        self.settled.contains(&v)
    }

    /// Whether two runs agree on every label and on the settled set,
    /// ignoring visit order.
    pub fn same_outcome(&self, other: &RunResult) -> bool {
        let mut a = self.settled.clone();
        let mut b = other.settled.clone();
        a.sort_unstable();
        b.sort_unstable();
        self.labels == other.labels && a == b
    }
}

/// One relaxation attempt: `new` is the candidate cost through the entering
/// vertex, adopted only if strictly below `old`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relaxation {
    pub neighbor: VertexId,
    pub old: Label,
    pub new: Label,
    pub adopted: bool,
}

/// Record of one settling iteration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEvent {
    /// 1-based.
    pub iteration: usize,
    pub entering: VertexId,
    pub entering_cost: Label,
    /// Unsettled out-neighbors of `entering`, by ordinal.
    pub relaxations: Vec<Relaxation>,
}

trait Frontier {
    /// The unsettled vertex with the least `(label, ordinal)`, if any has a
    /// finite label.
    fn pop_min(&mut self, labels: &[PredecessorLabel], settled: &[bool]) -> Option<VertexId>;

    fn decreased(&mut self, v: VertexId, cost: f64);
}

struct LinearScan;

impl Frontier for LinearScan {
    fn pop_min(&mut self, labels: &[PredecessorLabel], settled: &[bool]) -> Option<VertexId> {
        let mut best: Option<(Label, usize)> = None;
        for (i, l) in labels.iter().enumerate() {
            if settled[i] {
                continue;
            }
            // Strict comparison keeps the first (smallest ordinal) minimum.
            if best.is_none_or(|(b, _)| l.cost < b) {
                best = Some((l.cost, i));
            }
        }
        match best {
            Some((Label::Finite(_), i)) => Some(VertexId::new(i)),
            _ => None,
        }
    }

    fn decreased(&mut self, _v: VertexId, _cost: f64) {}
}

#[derive(Debug, Clone, Copy)]
struct HeapEntry {
    cost: f64,
    vertex: VertexId,
}

impl Ord for HeapEntry {
    // Reversed so `BinaryHeap` pops the least (cost, ordinal) first.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .cost
            .total_cmp(&self.cost)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HeapEntry {}

struct Heap(BinaryHeap<HeapEntry>);

impl Frontier for Heap {
    fn pop_min(&mut self, labels: &[PredecessorLabel], settled: &[bool]) -> Option<VertexId> {
        while let Some(HeapEntry { cost, vertex }) = self.0.pop() {
            let i = vertex.index();
            // Skip stale entries left behind by later improvements.
            if settled[i] || labels[i].cost != Label::Finite(cost) {
                continue;
            }
            return Some(vertex);
        }
        None
    }

    fn decreased(&mut self, v: VertexId, cost: f64) {
        self.0.push(HeapEntry { cost, vertex: v });
    }
}

fn check_args(
    g: &WeightedDigraph,
    source: VertexId,
    target: Option<VertexId>,
    mode: RunMode,
) -> Result<()> {
    if !g.contains(source) {
        return Err(Error::UnknownVertex(source));
    }
    if let Some(t) = target {
        if !g.contains(t) {
            return Err(Error::UnknownVertex(t));
        }
    }
    if mode == RunMode::ToTarget {
        match target {
            None => return Err(Error::MissingTarget),
            Some(t) if t == source => return Err(Error::SourceEqualsTarget),
            Some(_) => {}
        }
    }
    Ok(())
}

fn search<F: Frontier>(
    g: &WeightedDigraph,
    source: VertexId,
    target: Option<VertexId>,
    mode: RunMode,
    mut frontier: F,
    mut trace: Option<&mut Vec<TraceEvent>>,
) -> Result<RunResult> {
    check_args(g, source, target, mode)?;
    let n = g.vertex_count();
    let stop_at = if mode == RunMode::ToTarget {
        target
    } else {
        None
    };

    let mut labels = vec![PredecessorLabel::UNREACHED; n];
    let mut is_settled = vec![false; n];
    let mut settled = Vec::with_capacity(n);
    labels[source.index()].cost = Label::Finite(0.0);
    frontier.decreased(source, 0.0);

    let stop_reason = loop {
        if settled.len() == n {
            break StopReason::AllSettled;
        }
        let Some(u) = frontier.pop_min(&labels, &is_settled) else {
            break StopReason::Exhausted;
        };
        let Label::Finite(cost_u) = labels[u.index()].cost else {
            unreachable!("frontier returned an unreached vertex");
        };
        is_settled[u.index()] = true;
        settled.push(u);

        let mut relaxations = Vec::new();
        if stop_at != Some(u) {
            for &(v, w) in g.neighbors(u)? {
                if is_settled[v.index()] {
                    continue;
                }
                let old = labels[v.index()].cost;
                let candidate = cost_u + w.get();
                let adopted = Label::Finite(candidate) < old;
                if adopted {
                    labels[v.index()] = PredecessorLabel {
                        cost: Label::Finite(candidate),
                        pred: Some(u),
                    };
                    frontier.decreased(v, candidate);
                }
                if trace.is_some() {
                    relaxations.push(Relaxation {
                        neighbor: v,
                        old,
                        new: Label::Finite(candidate),
                        adopted,
                    });
                }
            }
        }
        if let Some(events) = trace.as_deref_mut() {
            events.push(TraceEvent {
                iteration: settled.len(),
                entering: u,
                entering_cost: Label::Finite(cost_u),
                relaxations,
            });
        }
        if stop_at == Some(u) {
            break StopReason::TargetSettled;
        }
    };

    Ok(RunResult {
        labels,
        settled,
        stop_reason,
        source,
        target,
    })
}

/// Runs the search with a linear scan over unsettled vertices.
///
/// `target` is required and must differ from `source` in
/// [`RunMode::ToTarget`]; in the other modes it is only recorded. When
/// `trace` is set, one [`TraceEvent`] is returned per settled vertex.
pub fn run(
    g: &WeightedDigraph,
    source: VertexId,
    target: Option<VertexId>,
    mode: RunMode,
    trace: bool,
) -> Result<(RunResult, Option<Vec<TraceEvent>>)> {
    let mut events = trace.then(Vec::new);
    let result = search(g, source, target, mode, LinearScan, events.as_mut())?;
    Ok((result, events))
}

/// Same contract as [`run`], selecting through a binary heap.
pub fn run_heap(
    g: &WeightedDigraph,
    source: VertexId,
    target: Option<VertexId>,
    mode: RunMode,
) -> Result<RunResult> {
    let heap = Heap(BinaryHeap::with_capacity(g.vertex_count()));
    search(g, source, target, mode, heap, None)
}

/// Minimal path cost from `source` to `target`, or `None` if there is no path.
pub fn shortest_path_weight(
    g: &WeightedDigraph,
    source: VertexId,
    target: VertexId,
) -> Result<Option<f64>> {
    let (result, _) = run(g, source, Some(target), RunMode::ToTarget, false)?;
    Ok(match result.stop_reason {
        StopReason::TargetSettled => result.label(target).cost(),
        _ => None,
    })
}

/// Walks predecessor links back from `target`. Returns `None` when `target`
/// was not settled with a finite cost, or is the source itself.
pub fn reconstruct_path(result: &RunResult, target: VertexId) -> Result<Option<Path>> {
    if target.index() >= result.labels.len() {
        return Err(Error::UnknownVertex(target));
    }
    if target == result.source || !result.label(target).is_finite() || !result.is_settled(target) {
        return Ok(None);
    }
    let mut vertices = vec![target];
    let mut cur = target;
    while cur != result.source {
        // A settled vertex's predecessor was settled before it, so the walk
        // cannot revisit a vertex; the bound only guards corrupted input.
        if vertices.len() > result.labels.len() {
            return Ok(None);
        }
        match result.labels[cur.index()].pred {
            Some(p) => {
                vertices.push(p);
                cur = p;
            }
            None => return Ok(None),
        }
    }
    vertices.reverse();
    Path::new(vertices).map(Some)
}
