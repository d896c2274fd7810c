//! Vertex replacements: `K_{3,4}` for degree-4 vertices and triangles for
//! degree-3 vertices.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{MultiGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExpansionError {
    #[error("vertex {v} has degree {degree}, expected {expected}")]
    Degree { v: VertexId, degree: u32, expected: u32 },
    #[error("vertex {0} does not exist")]
    NoSuchVertex(VertexId),
    #[error("vertex {0} has a parallel edge in its neighbourhood")]
    NotSimpleAround(VertexId),
}

/// Result of replacing vertices by gadgets: the new graph and, for each
/// original vertex, either its new id or the ids of its replacement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub graph: MultiGraph,
    pub kept: Vec<Option<VertexId>>,
    /// Per expanded vertex (in increasing original id): the 4-side then the
    /// 3-side of its `K_{3,4}`.
    pub blocks: Vec<(VertexId, [VertexId; 7])>,
}

/// Replaces each target by `K_{3,4}`. Surviving vertices keep their relative
/// order and come first; each block then occupies seven fresh ids, 4-side
/// first. The edge-ends at a target are attached to its 4-side in order of
/// far-end original id, then copy.
pub fn meredith_expand(g: &MultiGraph, targets: &[VertexId]) -> Result<Expansion, ExpansionError> {
    let mut targets: Vec<VertexId> = targets.to_vec();
    targets.sort_unstable();
    targets.dedup();
    for &v in &targets {
        if v >= g.n() {
            return Err(ExpansionError::NoSuchVertex(v));
        }
        if g.degree(v) != 4 {
            return Err(ExpansionError::Degree { v, degree: g.degree(v), expected: 4 });
        }
    }
    let (mut out, kept) = g.remove_vertices(&targets);
    let mut blocks = Vec::with_capacity(targets.len());
    for &v in &targets {
        let tag = g.label(v).map_or_else(|| format!("{v}"), |l| l.into());
        let mut ids = [0; 7];
        for (i, id) in ids.iter_mut().enumerate() {
            let side = if i < 4 { format!("K4.{i}") } else { format!("K3.{}", i - 4) };
            *id = out.add_vertex(Some(format!("{tag}/{side}")));
        }
        for &x in &ids[..4] {
            for &y in &ids[4..] {
                out.add_edge(x, y).expect("fresh vertices");
            }
        }
        blocks.push((v, ids));
    }
    // Port of each edge-end: (vertex, far end, copy) -> new endpoint.
    let port = |v: VertexId, far: VertexId, copy: u32| -> VertexId {
        match kept[v] {
            Some(id) => id,
            None => {
                let (_, ids) = blocks.iter().find(|(t, _)| *t == v).expect("target");
                let mut slot = 0;
                for &(w, m) in g.neighbors(v) {
                    if w == far {
                        slot += copy as usize;
                        break;
                    }
                    slot += m as usize;
                }
                ids[slot]
            }
        }
    };
    for (u, v, m) in g.edges() {
        if kept[u].is_some() && kept[v].is_some() {
            continue;
        }
        for copy in 0..m {
            out.add_edge(port(u, v, copy), port(v, u, copy)).expect("distinct blocks");
        }
    }
    Ok(Expansion { graph: out, kept, blocks })
}

impl Expansion {
    /// Carries a vertex order of the original graph over to the expanded
    /// one. Each block is placed where its vertex was: first the 4-side
    /// vertices already joined to placed vertices, then the 3-side, then
    /// the rest of the 4-side.
    pub fn lift_order(&self, order: &[VertexId]) -> Vec<VertexId> {
        let g = &self.graph;
        let mut placed = vec![false; g.n()];
        let mut out = Vec::with_capacity(g.n());
        for &v in order {
            if let Some(k) = self.kept[v] {
                placed[k] = true;
                out.push(k);
                continue;
            }
            let (_, ids) = self.blocks.iter().find(|(t, _)| *t == v).expect("expanded vertex");
            let (early, late): (Vec<VertexId>, Vec<VertexId>) =
                ids[..4].iter().partition(|&&x| g.neighbors(x).iter().any(|&(w, _)| placed[w]));
            for &x in early.iter().chain(&ids[4..]).chain(&late) {
                placed[x] = true;
                out.push(x);
            }
        }
        out
    }
}

/// Replaces a degree-3 vertex by a triangle; triangle vertex `i` takes the
/// `i`-th neighbour. The triangle is appended after the other vertices.
pub fn triangle_replace(g: &MultiGraph, v: VertexId) -> Result<MultiGraph, ExpansionError> {
    if v >= g.n() {
        return Err(ExpansionError::NoSuchVertex(v));
    }
    if g.degree(v) != 3 {
        return Err(ExpansionError::Degree { v, degree: g.degree(v), expected: 3 });
    }
    if g.neighbors(v).len() != 3 {
        return Err(ExpansionError::NotSimpleAround(v));
    }
    let nbrs: Vec<VertexId> = g.neighbors(v).iter().map(|&(w, _)| w).collect();
    let (mut out, kept) = g.remove_vertices(&[v]);
    let t: Vec<VertexId> = (0..3).map(|_| out.add_vertex(None)).collect();
    for i in 0..3 {
        out.add_edge(t[i], t[(i + 1) % 3]).expect("fresh");
        out.add_edge(t[i], kept[nbrs[i]].expect("neighbour kept")).expect("fresh");
    }
    Ok(out)
}

/// `K_4` after `k` triangle replacements, each at vertex 0.
pub fn triangle_family(k: usize) -> MultiGraph {
    let mut g = super::catalog::complete(4);
    for _ in 0..k {
        g = triangle_replace(&g, 0).expect("cubic and simple");
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, double_one_factor, perfect_matchings, petersen};
    use crate::hamilton::{brute_force_count, count_hamiltonian_cycles, hamiltonian_path, CountOptions};

    #[test]
    fn k34_paths_between_four_side() {
        let k = catalog::complete_bipartite(3, 4);
        // Parts: 0..3 is the 3-side, 3..7 the 4-side.
        let mut paths = 0;
        // Oracle: every ordering of the 3-side interleaved with the two
        // remaining 4-side vertices in the middle.
        let (x, y) = (3, 4);
        let perm3 = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for p in perm3 {
            for mid in [[5, 6], [6, 5]] {
                let seq = [x, p[0], mid[0], p[1], mid[1], p[2], y];
                assert!(crate::hamilton::is_hamiltonian_path(&k, &seq, x, y));
                paths += 1;
            }
        }
        assert_eq!(paths, 12);
        assert!(hamiltonian_path(&k, x, y).unwrap().is_some());
        // Forcing the path through an added edge counts it.
        let mut closed = k.clone();
        closed.add_edge(x, y).unwrap();
        assert_eq!(brute_force_count(&closed).unwrap() - brute_force_count(&k).unwrap(), 12);
    }

    #[test]
    fn meredith_graph_shape() {
        let p = petersen();
        let d = double_one_factor(&p, &perfect_matchings(&p)[0]).unwrap();
        let all: Vec<VertexId> = (0..10).collect();
        let m = meredith_expand(&d, &all).unwrap();
        assert_eq!(m.graph.n(), 70);
        assert!(m.graph.is_simple());
        assert!(m.graph.is_regular(4));
        assert_eq!(m.graph.edge_count(), 140);
    }

    #[test]
    fn expansion_is_local() {
        let p = petersen();
        let d = double_one_factor(&p, &perfect_matchings(&p)[0]).unwrap();
        let m = meredith_expand(&d, &[3]).unwrap();
        assert_eq!(m.graph.n(), 16);
        assert!(m.graph.is_regular(4));
        for (u, v, k) in d.edges() {
            if u != 3 && v != 3 {
                assert_eq!(m.graph.multiplicity(m.kept[u].unwrap(), m.kept[v].unwrap()), k);
            }
        }
        assert!(matches!(
            meredith_expand(&p, &[0]),
            Err(ExpansionError::Degree { v: 0, degree: 3, expected: 4 })
        ));
    }

    #[test]
    fn triangle_family_has_three_cycles() {
        assert_eq!(triangle_family(1).n(), 6);
        for k in 0..=6 {
            let g = triangle_family(k);
            assert_eq!(g.n(), 4 + 2 * k);
            assert!(g.is_regular(3));
            assert_eq!(count_hamiltonian_cycles(&g, &CountOptions::default()).count, 3);
        }
        assert_eq!(brute_force_count(&triangle_family(1)).unwrap(), 3);
    }
}
