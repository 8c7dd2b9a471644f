//! Small graphs shared by unit tests.

use crate::graph::{build_graph, Mode, VertexId, WeightedDigraph};

/// a->b 1, a->c 4, b->c 2, b->z 6, c->z 3. Unique optimum a,b,c,z of cost 6.
pub fn g1() -> WeightedDigraph {
    build_graph(
        [
            ("a", "b", 1.0),
            ("a", "c", 4.0),
            ("b", "c", 2.0),
            ("b", "z", 6.0),
            ("c", "z", 3.0),
        ],
        Mode::Directed,
    )
    .unwrap()
}

pub fn single_edge() -> WeightedDigraph {
    build_graph([("a", "z", 5.0)], Mode::Directed).unwrap()
}

pub fn named<const N: usize>(g: &WeightedDigraph, names: [&str; N]) -> [VertexId; N] {
    names.map(|n| g.vertex(n).unwrap())
}
