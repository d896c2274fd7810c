use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EdgeRef, MultiGraph, VertexId};

/// Outer 5-cycle `0..5`, inner pentagram `5..10` (`5+i ~ 5+(i+2)%5`),
/// spokes `i ~ i+5`.
pub fn petersen() -> MultiGraph {
    let mut e = Vec::with_capacity(15);
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((5 + i, 5 + (i + 2) % 5));
        e.push((i, i + 5));
    }
    MultiGraph::from_edges(10, &e, false).expect("valid")
}

/// All perfect matchings of the underlying simple graph, each as a sorted
/// list of copy-0 edge references; the list itself is sorted.
pub fn perfect_matchings(g: &MultiGraph) -> Vec<Vec<EdgeRef>> {
    fn rec(g: &MultiGraph, covered: &mut [bool], chosen: &mut Vec<EdgeRef>, out: &mut Vec<Vec<EdgeRef>>) {
        let Some(v) = covered.iter().position(|&c| !c) else {
            out.push(chosen.clone());
            return;
        };
        covered[v] = true;
        for &(w, _) in g.neighbors(v) {
            if !covered[w] {
                covered[w] = true;
                chosen.push(EdgeRef::first(v, w));
                rec(g, covered, chosen, out);
                chosen.pop();
                covered[w] = false;
            }
        }
        covered[v] = false;
    }
    let mut out = Vec::new();
    if g.n() % 2 == 0 {
        rec(g, &mut vec![false; g.n()], &mut Vec::new(), &mut out);
    }
    for m in &mut out {
        m.sort();
    }
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatchingError {
    #[error("edge {0} is not in the graph")]
    MissingEdge(EdgeRef),
    #[error("not a perfect matching: uncovered {uncovered:?}, over-covered {over:?}")]
    NotPerfect {
        uncovered: Vec<VertexId>,
        over: Vec<VertexId>,
    },
}

/// Raises the multiplicity of every matching edge by one.
pub fn double_one_factor(g: &MultiGraph, matching: &[EdgeRef]) -> Result<MultiGraph, MatchingError> {
    let mut cover = vec![0u32; g.n()];
    for e in matching {
        if e.u >= g.n() || e.v >= g.n() || g.multiplicity(e.u, e.v) == 0 {
            return Err(MatchingError::MissingEdge(*e));
        }
        cover[e.u] += 1;
        cover[e.v] += 1;
    }
    let uncovered: Vec<_> = (0..g.n()).filter(|&v| cover[v] == 0).collect();
    let over: Vec<_> = (0..g.n()).filter(|&v| cover[v] > 1).collect();
    if !uncovered.is_empty() || !over.is_empty() {
        return Err(MatchingError::NotPerfect { uncovered, over });
    }
    let mut out = g.clone();
    for e in matching {
        out.add_edge(e.u, e.v).expect("checked");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamilton::{count_hamiltonian_cycles, enumerate_two_factors, CountOptions};

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.is_regular(3));
        assert!(p.is_simple());
        assert_eq!(count_hamiltonian_cycles(&p, &CountOptions::default()).count, 0);
    }

    #[test]
    fn six_matchings_complement_two_pentagons() {
        let p = petersen();
        let ms = perfect_matchings(&p);
        assert_eq!(ms.len(), 6);
        for m in &ms {
            let rest = p.delete_edges(m).unwrap();
            assert!(rest.is_regular(2));
            let tf = enumerate_two_factors(&rest, None);
            assert_eq!(tf.factors.len(), 1);
            assert_eq!(tf.factors[0].component_lengths, [5, 5]);
        }
    }

    #[test]
    fn doubling() {
        let p = petersen();
        let m = &perfect_matchings(&p)[0];
        let d = double_one_factor(&p, m).unwrap();
        assert!(d.is_regular(4));
        assert_eq!(d.edge_count(), 20);
        assert_eq!(d.parallel_pairs().len(), 5);
        assert_eq!(count_hamiltonian_cycles(&d, &CountOptions::default()).count, 0);

        let bad = double_one_factor(&p, &m[..4]).unwrap_err();
        assert!(matches!(bad, MatchingError::NotPerfect { ref uncovered, .. } if uncovered.len() == 2));
        assert_eq!(
            double_one_factor(&p, &[EdgeRef::first(0, 2)]),
            Err(MatchingError::MissingEdge(EdgeRef::first(0, 2)))
        );
    }
}
