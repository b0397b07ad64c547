//! Hand-built topologies shared by unit tests. The edge indexing of the two
//! 6-leaf fixtures is pinned so the per-edge path-count vectors come out in
//! the documented order.

use crate::topology::Topology;

pub(crate) fn star3() -> Topology {
    Topology::from_edges(3, vec![(0, 3), (1, 3), (2, 3)]).unwrap()
}

/// Caterpillar on 6 leaves: internal path 6-7-8-9, cherries {1,2} and {5,6},
/// single leaves 3 and 4 in the middle. Edge order gives
/// q = (5,5,8,5,9,5,8,5,5).
pub(crate) fn caterpillar6() -> Topology {
    Topology::from_edges(
        6,
        vec![(0, 6), (1, 6), (6, 7), (2, 7), (7, 8), (3, 8), (8, 9), (4, 9), (5, 9)],
    )
    .unwrap()
}

/// Snowflake on 6 leaves: cherries {1,2}, {3,4}, {5,6} on hub 9. Edge order
/// gives q = (5,5,5,8,8,5,8,5,5).
pub(crate) fn snowflake6() -> Topology {
    Topology::from_edges(
        6,
        vec![(0, 6), (1, 6), (2, 7), (6, 9), (7, 9), (3, 7), (8, 9), (4, 8), (5, 8)],
    )
    .unwrap()
}
