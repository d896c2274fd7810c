//! Small standard graphs used as fixtures and oracle corpora.

use alloc::vec::Vec;

use crate::graph::MultiGraph;

pub fn complete(n: usize) -> MultiGraph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    MultiGraph::from_edges(n, &e, false).expect("valid")
}

/// Parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> MultiGraph {
    let mut e = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            e.push((u, v));
        }
    }
    MultiGraph::from_edges(a + b, &e, false).expect("valid")
}

pub fn cycle(n: usize) -> MultiGraph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    MultiGraph::from_edges(n, &e, n == 2).expect("valid")
}

pub fn path(n: usize) -> MultiGraph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    MultiGraph::from_edges(n, &e, false).expect("valid")
}

/// Triangular prism: two triangles joined by a perfect matching.
pub fn prism() -> MultiGraph {
    MultiGraph::from_edges(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        false,
    )
    .expect("valid")
}
