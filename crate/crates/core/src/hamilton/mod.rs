//! Exact Hamiltonian cycle / path counting and 2-factor enumeration.
//!
//! A Hamiltonian cycle is identified with its edge multiset: two parallel
//! edges between consecutive vertices give two different cycles, and a cycle
//! equals its reversal. Graphs with fewer than three vertices have none.

mod brute;
mod factors;
pub mod frontier;
pub mod search;

use alloc::vec;
use alloc::vec::Vec;
use core::time::Duration;

use crate::graph::{EdgeRef, MultiGraph, VertexId};
use search::{EdgeIndex, Engine, Limits, Mode, SearchState};

pub use brute::{brute_force_count, BRUTE_FORCE_MAX_N};
pub use factors::{enumerate_two_factors, exists_split_two_factor, TwoFactor, TwoFactorList};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HamiltonError {
    #[error("edge {0} does not exist")]
    MissingEdge(EdgeRef),
    #[error("{n} vertices exceed the limit of {max} for this method")]
    TooLarge { n: usize, max: usize },
    #[error("the two edges must differ")]
    SameEdge,
    #[error("endpoints must be distinct vertices of the graph")]
    BadEndpoints,
    #[error("count does not fit in 128 bits")]
    Overflow,
    #[error("state budget of {0} exhausted")]
    StateBudget(usize),
}

/// One Hamiltonian cycle as a sorted list of edge units.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HamCycle {
    pub edges: Vec<EdgeRef>,
}

impl HamCycle {
    /// Vertex order starting at the lowest id, lower neighbour second.
    pub fn vertex_sequence(&self) -> Vec<VertexId> {
        walk_cycle(&self.edges)
    }

    pub fn contains(&self, e: &EdgeRef) -> bool {
        self.edges.binary_search(e).is_ok()
    }
}

pub(crate) fn walk_cycle(edges: &[EdgeRef]) -> Vec<VertexId> {
    if edges.is_empty() {
        return Vec::new();
    }
    let start = edges.iter().map(|e| e.u).min().unwrap();
    let mut used = vec![false; edges.len()];
    let mut seq = vec![start];
    // Lower neighbour of the start vertex goes second.
    let first = edges
        .iter()
        .enumerate()
        .filter(|(_, e)| e.touches(start))
        .min_by_key(|(_, e)| e.other(start))
        .map(|(i, _)| i)
        .unwrap();
    used[first] = true;
    let mut cur = edges[first].other(start);
    while cur != start {
        seq.push(cur);
        let Some(i) = (0..edges.len()).find(|&i| !used[i] && edges[i].touches(cur)) else {
            break;
        };
        used[i] = true;
        cur = edges[i].other(cur);
    }
    seq
}

/// Which counter produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountEngine {
    Backtrack,
    Frontier,
}

#[derive(Debug, Clone)]
pub struct HamiltonReport {
    /// Exact when `budget_exhausted` is false, otherwise a lower bound.
    pub count: u128,
    /// Present when retention was requested; sorted.
    pub cycles: Option<Vec<HamCycle>>,
    pub nodes_expanded: u64,
    pub budget_exhausted: bool,
    pub engine: CountEngine,
    /// Filled in by callers that own a clock.
    pub elapsed: Option<Duration>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CountOptions {
    /// Node budget for the backtracking engine.
    pub max_nodes: Option<u64>,
    pub retain: bool,
    /// Stop after this many cycles (the count is then a lower bound only if
    /// the search was cut short, which `budget_exhausted` does not flag).
    pub stop_after: Option<u64>,
}

/// Edge index and propagated root for a search with the given edges forced
/// into every cycle. The root is `None` when no cycle can exist.
pub fn prepare(
    g: &MultiGraph,
    forced: &[EdgeRef],
) -> Result<(EdgeIndex, Option<SearchState>), HamiltonError> {
    let idx = EdgeIndex::new(g);
    let mut ids = Vec::with_capacity(forced.len());
    for e in forced {
        ids.push(idx.id_of(e).ok_or(HamiltonError::MissingEdge(*e))?);
    }
    if g.n() < 3 {
        return Ok((idx, None));
    }
    let root = SearchState::root(&idx, Mode::Hamiltonian, &ids, &[]);
    Ok((idx, root))
}

/// Converts engine edge-id solutions into sorted cycles.
pub fn cycles_from_solutions(idx: &EdgeIndex, solutions: &[Vec<u32>]) -> Vec<HamCycle> {
    let mut out: Vec<HamCycle> = solutions
        .iter()
        .map(|s| {
            let mut edges: Vec<EdgeRef> = s.iter().map(|&e| idx.edge(e)).collect();
            edges.sort();
            HamCycle { edges }
        })
        .collect();
    out.sort();
    out
}

/// Counts Hamiltonian cycles containing every edge of `forced`.
pub fn count_with_forced(
    g: &MultiGraph,
    forced: &[EdgeRef],
    opts: &CountOptions,
) -> Result<HamiltonReport, HamiltonError> {
    let (idx, root) = prepare(g, forced)?;
    let limits = Limits {
        max_nodes: opts.max_nodes,
        stop_after: opts.stop_after,
        retain: opts.retain,
    };
    let outcome = match root {
        Some(root) => Engine::new(&idx, Mode::Hamiltonian, limits).run(root),
        None => Default::default(),
    };
    Ok(HamiltonReport {
        count: outcome.count as u128,
        cycles: opts.retain.then(|| cycles_from_solutions(&idx, &outcome.solutions)),
        nodes_expanded: outcome.nodes,
        budget_exhausted: outcome.exhausted,
        engine: CountEngine::Backtrack,
        elapsed: None,
    })
}

/// Counts (and optionally retains) all Hamiltonian cycles by backtracking.
pub fn count_hamiltonian_cycles(g: &MultiGraph, opts: &CountOptions) -> HamiltonReport {
    count_with_forced(g, &[], opts).expect("no forced edges")
}

/// Number of Hamiltonian cycles through the edge unit `e`.
pub fn count_through_edge(g: &MultiGraph, e: &EdgeRef) -> Result<u128, HamiltonError> {
    Ok(count_with_forced(g, &[*e], &CountOptions::default())?.count)
}

/// A spanning path with endpoints exactly `u` and `v`, as a vertex sequence
/// from `u` to `v`.
pub fn hamiltonian_path(
    g: &MultiGraph,
    u: VertexId,
    v: VertexId,
) -> Result<Option<Vec<VertexId>>, HamiltonError> {
    if u == v || u >= g.n() || v >= g.n() {
        return Err(HamiltonError::BadEndpoints);
    }
    // A new vertex adjacent to u and v only: its two edges are forced, so
    // spanning cycles of the augmented graph are exactly u–v spanning paths.
    let mut aug = g.clone();
    let w = aug.add_vertex(None);
    aug.add_edge(w, u).expect("valid");
    aug.add_edge(w, v).expect("valid");
    let opts = CountOptions { retain: true, stop_after: Some(1), ..Default::default() };
    let report = count_hamiltonian_cycles(&aug, &opts);
    let Some(cycle) = report.cycles.and_then(|c| c.into_iter().next()) else {
        return Ok(None);
    };
    let mut seq = cycle.vertex_sequence();
    let at = seq.iter().position(|&x| x == w).expect("w on cycle");
    seq.rotate_left(at);
    seq.remove(0);
    if seq[0] != u {
        seq.reverse();
    }
    Ok(Some(seq))
}

pub fn has_hamiltonian_path(g: &MultiGraph, u: VertexId, v: VertexId) -> Result<bool, HamiltonError> {
    hamiltonian_path(g, u, v).map(|p| p.is_some())
}

/// Checks that `path` is a spanning path of `g` from `u` to `v`.
pub fn is_hamiltonian_path(g: &MultiGraph, path: &[VertexId], u: VertexId, v: VertexId) -> bool {
    if path.len() != g.n() || path.first() != Some(&u) || path.last() != Some(&v) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &x in path {
        if x >= g.n() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    path.windows(2).all(|w| g.multiplicity(w[0], w[1]) > 0)
}

/// Checks that `cycle` is a spanning cycle of `g` using existing edge units.
pub fn is_hamiltonian_cycle(g: &MultiGraph, cycle: &HamCycle) -> bool {
    let n = g.n();
    if n < 3 || cycle.edges.len() != n {
        return false;
    }
    if cycle.edges.windows(2).any(|w| w[0] == w[1]) || !cycle.edges.iter().all(|e| g.has_edge(e)) {
        return false;
    }
    let mut deg = vec![0u32; n];
    for e in &cycle.edges {
        deg[e.u] += 1;
        deg[e.v] += 1;
    }
    deg.iter().all(|&d| d == 2) && cycle.vertex_sequence().len() == n
}
