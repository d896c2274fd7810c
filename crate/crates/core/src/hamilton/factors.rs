//! 2-factor enumeration on top of the edge-state engine.

use alloc::vec;
use alloc::vec::Vec;

use super::search::{EdgeIndex, Engine, Limits, Mode, SearchState};
use super::HamiltonError;
use crate::graph::{EdgeRef, MultiGraph, VertexId};

/// A spanning 2-regular sub-multigraph split into its cycles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoFactor {
    /// Each component's edge units, sorted; components ordered by their
    /// smallest vertex.
    pub components: Vec<Vec<EdgeRef>>,
    pub component_lengths: Vec<usize>,
}

impl TwoFactor {
    pub fn from_edges(n: usize, edges: &[EdgeRef]) -> Self {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for e in edges {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
        let mut components: Vec<Vec<EdgeRef>> = Vec::new();
        let mut order: Vec<usize> = Vec::new();
        for e in edges {
            let r = roots[e.u];
            let slot = match order.iter().position(|&x| x == r) {
                Some(i) => i,
                None => {
                    order.push(r);
                    components.push(Vec::new());
                    order.len() - 1
                }
            };
            components[slot].push(*e);
        }
        let mut paired: Vec<(usize, Vec<EdgeRef>)> = order.into_iter().zip(components).collect();
        paired.sort_by_key(|(r, _)| *r);
        let components: Vec<Vec<EdgeRef>> = paired
            .into_iter()
            .map(|(_, mut c)| {
                c.sort();
                c
            })
            .collect();
        let component_lengths = components.iter().map(|c| c.len()).collect();
        TwoFactor { components, component_lengths }
    }

    pub fn edges(&self) -> Vec<EdgeRef> {
        let mut all: Vec<EdgeRef> = self.components.iter().flatten().copied().collect();
        all.sort();
        all
    }

    pub fn component_of(&self, e: &EdgeRef) -> Option<usize> {
        self.components.iter().position(|c| c.binary_search(e).is_ok())
    }

    /// Vertex sequence of each component (lowest id first, lower neighbour
    /// second).
    pub fn vertex_cycles(&self) -> Vec<Vec<VertexId>> {
        self.components.iter().map(|c| super::walk_cycle(c)).collect()
    }

    /// Spanning, 2-regular, built from existing edge units of `g`.
    pub fn is_valid_for(&self, g: &MultiGraph) -> bool {
        let edges = self.edges();
        if edges.windows(2).any(|w| w[0] == w[1]) || !edges.iter().all(|e| g.has_edge(e)) {
            return false;
        }
        let mut deg = vec![0u32; g.n()];
        for e in &edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg.iter().all(|&d| d == 2)
    }
}

#[derive(Debug, Clone, Default)]
pub struct TwoFactorList {
    pub factors: Vec<TwoFactor>,
    pub truncated: bool,
}

fn enumerate_with(
    g: &MultiGraph,
    forced: &[EdgeRef],
    limit: Option<usize>,
) -> Result<TwoFactorList, HamiltonError> {
    let idx = EdgeIndex::new(g);
    let mut ids = Vec::new();
    for e in forced {
        ids.push(idx.id_of(e).ok_or(HamiltonError::MissingEdge(*e))?);
    }
    let Some(root) = SearchState::root(&idx, Mode::TwoFactor, &ids, &[]) else {
        return Ok(TwoFactorList::default());
    };
    let limits = Limits {
        max_nodes: None,
        stop_after: limit.map(|l| l as u64 + 1),
        retain: true,
    };
    let out = Engine::new(&idx, Mode::TwoFactor, limits).run(root);
    let mut sorted: Vec<Vec<EdgeRef>> = out
        .solutions
        .iter()
        .map(|s| {
            let mut e: Vec<EdgeRef> = s.iter().map(|&i| idx.edge(i)).collect();
            e.sort();
            e
        })
        .collect();
    sorted.sort();
    let truncated = limit.is_some_and(|l| sorted.len() > l);
    if let Some(l) = limit {
        sorted.truncate(l);
    }
    Ok(TwoFactorList {
        factors: sorted.iter().map(|e| TwoFactor::from_edges(g.n(), e)).collect(),
        truncated,
    })
}

/// All 2-factors, ordered lexicographically by sorted edge list. With a
/// limit, at most `limit` are returned and `truncated` reports whether more
/// exist (the kept ones are then the smallest among those found, not
/// necessarily globally).
pub fn enumerate_two_factors(g: &MultiGraph, limit: Option<usize>) -> TwoFactorList {
    enumerate_with(g, &[], limit).expect("no forced edges")
}

/// The lexicographically first 2-factor with exactly two components, one
/// containing `e` and the other `f`.
pub fn exists_split_two_factor(
    g: &MultiGraph,
    e: &EdgeRef,
    f: &EdgeRef,
) -> Result<Option<TwoFactor>, HamiltonError> {
    let (e, f) = (EdgeRef::new(e.u, e.v, e.copy), EdgeRef::new(f.u, f.v, f.copy));
    if e == f {
        return Err(HamiltonError::SameEdge);
    }
    let all = enumerate_with(g, &[e, f], None)?;
    Ok(all.factors.into_iter().find(|tf| {
        tf.components.len() == 2
            && matches!((tf.component_of(&e), tf.component_of(&f)), (Some(x), Some(y)) if x != y)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, petersen};

    #[test]
    fn cycle_has_one() {
        let c = catalog::cycle(7);
        let l = enumerate_two_factors(&c, None);
        assert_eq!(l.factors.len(), 1);
        assert_eq!(l.factors[0].component_lengths, [7]);
    }

    #[test]
    fn k4_subset_oracle() {
        // Oracle: every 4-subset of the 6 edges with all degrees 2.
        let k4 = catalog::complete(4);
        let edges = k4.edge_refs();
        let mut oracle = 0;
        for mask in 0u32..64 {
            if mask.count_ones() != 4 {
                continue;
            }
            let mut deg = [0; 4];
            for (i, e) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    deg[e.u] += 1;
                    deg[e.v] += 1;
                }
            }
            if deg == [2; 4] {
                oracle += 1;
            }
        }
        let l = enumerate_two_factors(&k4, None);
        assert_eq!(l.factors.len(), oracle);
        assert_eq!(oracle, 3);
        assert!(l.factors.iter().all(|f| f.component_lengths == [4]));
        assert!(l.factors.windows(2).all(|w| w[0].edges() < w[1].edges()));
    }

    #[test]
    fn petersen_two_factors_are_pairs_of_pentagons() {
        let l = enumerate_two_factors(&petersen(), None);
        assert_eq!(l.factors.len(), 6);
        for f in &l.factors {
            assert!(f.is_valid_for(&petersen()));
            assert_eq!(f.component_lengths, [5, 5]);
        }
        let t = enumerate_two_factors(&petersen(), Some(2));
        assert_eq!(t.factors.len(), 2);
        assert!(t.truncated);
    }

    #[test]
    fn digons_count_as_components() {
        let g = MultiGraph::from_edges(2, &[(0, 1), (0, 1)], true).unwrap();
        let l = enumerate_two_factors(&g, None);
        assert_eq!(l.factors.len(), 1);
        assert_eq!(l.factors[0].component_lengths, [2]);
    }

    #[test]
    fn split_factor() {
        let two = MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)], false).unwrap();
        let tf = exists_split_two_factor(&two, &EdgeRef::first(0, 1), &EdgeRef::first(3, 4))
            .unwrap()
            .unwrap();
        assert_eq!(tf.component_lengths, [3, 3]);
        let c6 = catalog::cycle(6);
        assert_eq!(
            exists_split_two_factor(&c6, &EdgeRef::first(0, 1), &EdgeRef::first(3, 4)).unwrap(),
            None
        );
        assert_eq!(
            exists_split_two_factor(&c6, &EdgeRef::first(0, 1), &EdgeRef::first(1, 0)),
            Err(HamiltonError::SameEdge)
        );
    }
}
