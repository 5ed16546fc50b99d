//! The two known 2-geodetic degree-2 digraphs of minimum excess: order 9,
//! which is the directed Moore bound M(2,2) = 7 plus excess 2. Stored as
//! source-level constants; the test suites re-verify every structural claim
//! (diregularity, geodecity, outlier counts, non-isomorphism) on each run.

use crate::digraph::{Digraph, Vertex};

pub const LEFT_CAGE_ARCS: [(Vertex, Vertex); 18] = [
    (0, 1),
    (0, 2),
    (1, 3),
    (1, 4),
    (2, 5),
    (2, 6),
    (3, 2),
    (3, 7),
    (4, 5),
    (4, 6),
    (5, 0),
    (5, 8),
    (6, 1),
    (6, 7),
    (7, 0),
    (7, 8),
    (8, 3),
    (8, 4),
];

pub const RIGHT_CAGE_ARCS: [(Vertex, Vertex); 18] = [
    (0, 1),
    (0, 2),
    (1, 3),
    (1, 4),
    (2, 5),
    (2, 6),
    (3, 0),
    (3, 8),
    (4, 5),
    (4, 7),
    (5, 1),
    (5, 8),
    (6, 0),
    (6, 4),
    (7, 2),
    (7, 3),
    (8, 6),
    (8, 7),
];

pub fn left_cage() -> Digraph {
    Digraph::from_arcs(9, &LEFT_CAGE_ARCS).expect("embedded left cage is a valid simple digraph")
}

pub fn right_cage() -> Digraph {
    Digraph::from_arcs(9, &RIGHT_CAGE_ARCS).expect("embedded right cage is a valid simple digraph")
}

/// Both cages, left first.
pub fn embedded_cages() -> (Digraph, Digraph) {
    (left_cage(), right_cage())
}
