//! Non-enumerative Hamiltonian cycle counting by dynamic programming over a
//! moving vertex frontier.
//!
//! Edges are processed one at a time in an order derived from a greedy
//! vertex ordering. A vertex is on the frontier between its first and last
//! incident edge. A state records, per frontier slot, whether the vertex has
//! chosen degree 0, 2, or 1 together with the slot of the opposite end of
//! its path fragment. Identical states are merged and their counts summed,
//! so graphs with astronomically many cycles are counted in time governed
//! by the frontier width rather than by the answer.

use alloc::vec;
use alloc::vec::Vec;

use super::HamiltonError;
use crate::graph::{EdgeRef, MultiGraph, VertexId};

const DEG0: u8 = 0;
const DEG2: u8 = 1;
const MATE: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierCount {
    pub count: u128,
    /// Largest number of simultaneously live vertices.
    pub width: usize,
    /// Largest number of distinct states held after any edge.
    pub peak_states: usize,
    /// Sum over edges of the states processed.
    pub transitions: u64,
}

/// Greedy order: start at a least-degree vertex (lowest id), then always
/// take the unplaced vertex with the most edge units into the placed set,
/// ties broken by fewer edges to unplaced vertices, then by id.
pub fn vertex_order(g: &MultiGraph) -> Vec<VertexId> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut into = vec![0u32; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let unplaced = (0..n).filter(|&v| !placed[v]);
        let best = unplaced
            .clone()
            .min_by_key(|&v| (core::cmp::Reverse(into[v]), g.degree(v) - into[v], v))
            .unwrap();
        let next = if into[best] == 0 {
            // First vertex, or a new component.
            unplaced.min_by_key(|&v| (g.degree(v), v)).unwrap()
        } else {
            best
        };
        placed[next] = true;
        order.push(next);
        for &(w, m) in g.neighbors(next) {
            into[w] += m;
        }
    }
    order
}

/// Exact number of Hamiltonian cycles. `max_states` bounds the state table.
pub fn count(g: &MultiGraph, max_states: Option<usize>) -> Result<FrontierCount, HamiltonError> {
    count_in_order(g, &vertex_order(g), max_states)
}

pub fn count_in_order(
    g: &MultiGraph,
    order: &[VertexId],
    max_states: Option<usize>,
) -> Result<FrontierCount, HamiltonError> {
    let n = g.n();
    let mut result = FrontierCount { count: 0, width: 0, peak_states: 1, transitions: 0 };
    if n < 3 || g.min_degree() < 2 {
        return Ok(result);
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges: Vec<EdgeRef> = g.edge_refs();
    edges.sort_by_key(|e| {
        let (a, b) = (pos[e.u].min(pos[e.v]), pos[e.u].max(pos[e.v]));
        (b, a, e.copy)
    });
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0usize; n];
    for (i, e) in edges.iter().enumerate() {
        for w in [e.u, e.v] {
            first[w] = first[w].min(i);
            last[w] = i;
        }
    }
    let all_entered = *first.iter().max().unwrap();

    // Slot assignment is a property of the edge order, shared by all states.
    let mut slot_of = vec![usize::MAX; n];
    let mut occupied: Vec<bool> = Vec::new();
    let mut plan: Vec<(usize, usize, Vec<usize>)> = Vec::with_capacity(edges.len());
    let mut occupancy: Vec<Vec<bool>> = Vec::with_capacity(edges.len());
    for (i, e) in edges.iter().enumerate() {
        for w in [e.u, e.v] {
            if first[w] == i {
                let s = match occupied.iter().position(|&o| !o) {
                    Some(s) => s,
                    None => {
                        occupied.push(false);
                        occupied.len() - 1
                    }
                };
                occupied[s] = true;
                slot_of[w] = s;
            }
        }
        result.width = result.width.max(occupied.iter().filter(|&&o| o).count());
        occupancy.push(occupied.clone());
        let mut leaving = Vec::new();
        for w in [e.u, e.v] {
            if last[w] == i && !leaving.contains(&slot_of[w]) {
                leaving.push(slot_of[w]);
                occupied[slot_of[w]] = false;
            }
        }
        plan.push((slot_of[e.u], slot_of[e.v], leaving));
    }
    let width = occupied.len();
    if width > (u8::MAX - MATE) as usize {
        return Err(HamiltonError::TooLarge { n: width, max: (u8::MAX - MATE) as usize });
    }

    let mut states: Vec<(Vec<u8>, u128)> = vec![(vec![DEG0; width], 1)];
    for (i, (su, sv, leaving)) in plan.iter().enumerate() {
        let (su, sv) = (*su, *sv);
        let occ = &occupancy[i];
        let mut next: Vec<(Vec<u8>, u128)> = Vec::with_capacity(states.len() * 2);
        result.transitions += states.len() as u64;
        for (st, c) in states {
            let (du, dv) = (st[su], st[sv]);
            if du != DEG2 && dv != DEG2 {
                if du >= MATE && du - MATE == sv as u8 {
                    // Joining the two ends of one fragment closes a cycle; it
                    // counts only if it spans every vertex.
                    let spans = i >= all_entered
                        && (0..width).all(|s| s == su || s == sv || !occ[s] || st[s] == DEG2);
                    if spans {
                        result.count = result.count.checked_add(c).ok_or(HamiltonError::Overflow)?;
                    }
                } else {
                    let mut t = st.clone();
                    let a = if du == DEG0 { su } else { (du - MATE) as usize };
                    let b = if dv == DEG0 { sv } else { (dv - MATE) as usize };
                    if du != DEG0 {
                        t[su] = DEG2;
                    }
                    if dv != DEG0 {
                        t[sv] = DEG2;
                    }
                    t[a] = MATE + b as u8;
                    t[b] = MATE + a as u8;
                    if leaving.iter().all(|&s| t[s] == DEG2) {
                        for &s in leaving {
                            t[s] = DEG0;
                        }
                        next.push((t, c));
                    }
                }
            }
            // Skip the edge.
            let mut st = st;
            if leaving.iter().all(|&s| st[s] == DEG2) {
                for &s in leaving {
                    st[s] = DEG0;
                }
                next.push((st, c));
            }
        }
        next.sort_unstable_by(|x, y| x.0.cmp(&y.0));
        let mut merged: Vec<(Vec<u8>, u128)> = Vec::with_capacity(next.len());
        for (k, c) in next {
            match merged.last_mut() {
                Some((lk, lc)) if *lk == k => {
                    *lc = lc.checked_add(c).ok_or(HamiltonError::Overflow)?;
                }
                _ => merged.push((k, c)),
            }
        }
        result.peak_states = result.peak_states.max(merged.len());
        if let Some(max) = max_states {
            if merged.len() > max {
                return Err(HamiltonError::StateBudget(max));
            }
        }
        states = merged;
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, petersen};
    use crate::hamilton::brute_force_count;

    #[test]
    fn agrees_with_oracle_on_catalog() {
        let mut graphs = vec![
            catalog::complete(4),
            catalog::complete(5),
            catalog::complete(7),
            catalog::complete_bipartite(3, 3),
            catalog::complete_bipartite(4, 4),
            petersen(),
            catalog::cycle(9),
            MultiGraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (2, 0)], true).unwrap(),
        ];
        graphs.push(MultiGraph::from_edges(4, &[(0, 1), (0, 1), (1, 2), (1, 2), (2, 3), (3, 0), (0, 2)], true).unwrap());
        for g in &graphs {
            assert_eq!(count(g, None).unwrap().count, brute_force_count(g).unwrap());
        }
    }

    #[test]
    fn large_complete_graph() {
        // (n-1)!/2 for K_12 without enumerating 20 million cycles.
        let c = count(&catalog::complete(12), None).unwrap();
        assert_eq!(c.count, 19_958_400);
    }

    #[test]
    fn state_budget() {
        assert_eq!(
            count(&catalog::complete(10), Some(3)),
            Err(HamiltonError::StateBudget(3))
        );
    }
}
