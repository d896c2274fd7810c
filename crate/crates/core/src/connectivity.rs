//! Vertex and edge connectivity via unit-capacity max-flow, with exhaustive
//! oracles for small graphs.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EdgeRef, MultiGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConnectivityError {
    #[error("vertex connectivity is defined for simple graphs only; expand parallel edges first (e.g. {0}-{1})")]
    NotSimple(VertexId, VertexId),
    #[error("oracle limited to n <= {max}, got {n}")]
    TooLarge { n: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    pub value: u32,
    /// Edge units crossing the cut, sorted.
    pub cut: Vec<EdgeRef>,
    /// Side containing vertex 0.
    pub side: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCut {
    pub value: u32,
    /// `None` for complete graphs, whose value is `n - 1`.
    pub cut: Option<Vec<VertexId>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityCertificate {
    pub vertex_connectivity: u32,
    pub edge_connectivity: u32,
    pub witness_vertex_cut: Option<Vec<VertexId>>,
    pub witness_edge_cut: Vec<EdgeRef>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairScan {
    /// Fixed source plus pairs inside its neighbourhood.
    #[default]
    Neighborhood,
    /// Every non-adjacent pair.
    AllPairs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Vertex,
    Edge,
}

pub const ORACLE_MAX_N: usize = 12;

struct Flow {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
    next: Vec<usize>,
}

const NIL: usize = usize::MAX;

impl Flow {
    fn new(nodes: usize) -> Self {
        Flow { head: vec![NIL; nodes], to: Vec::new(), cap: Vec::new(), next: Vec::new() }
    }

    fn arc(&mut self, u: usize, v: usize, c: u32, back: u32) {
        for (x, y, k) in [(u, v, c), (v, u, back)] {
            self.to.push(y);
            self.cap.push(k);
            self.next.push(self.head[x]);
            self.head[x] = self.to.len() - 1;
        }
    }

    /// Max-flow by BFS augmenting paths, stopping early once `limit` is
    /// reached.
    fn run(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut total = 0;
        let mut pred = vec![NIL; self.head.len()];
        while total < limit {
            pred.iter_mut().for_each(|p| *p = NIL);
            let mut queue = VecDeque::from([s]);
            let mut seen = vec![false; self.head.len()];
            seen[s] = true;
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                let mut a = self.head[x];
                while a != NIL {
                    let y = self.to[a];
                    if self.cap[a] > 0 && !seen[y] {
                        seen[y] = true;
                        pred[y] = a;
                        queue.push_back(y);
                    }
                    a = self.next[a];
                }
            }
            if !seen[t] {
                break;
            }
            let mut x = t;
            while x != s {
                let a = pred[x];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                x = self.to[a ^ 1];
            }
            total += 1;
        }
        total
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let mut a = self.head[x];
            while a != NIL {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
                a = self.next[a];
            }
        }
        seen
    }
}

fn edge_cut_of(g: &MultiGraph, side: &[bool]) -> Vec<EdgeRef> {
    let mut cut = Vec::new();
    for (u, v, m) in g.edges() {
        if side[u] != side[v] {
            cut.extend((0..m).map(|c| EdgeRef::new(u, v, c)));
        }
    }
    cut
}

/// Minimum edge cut, counting parallel copies separately.
pub fn edge_connectivity(g: &MultiGraph) -> EdgeCut {
    let n = g.n();
    if n <= 1 {
        return EdgeCut { value: 0, cut: Vec::new(), side: (0..n).collect() };
    }
    let (comp, count) = g.components();
    if count > 1 {
        let side = (0..n).filter(|&v| comp[v] == comp[0]).collect();
        return EdgeCut { value: 0, cut: Vec::new(), side };
    }
    let mut best: Option<(u32, Vec<bool>)> = None;
    for t in 1..n {
        let mut f = Flow::new(n);
        for (u, v, m) in g.edges() {
            f.arc(u, v, m, m);
        }
        let limit = best.as_ref().map_or(u32::MAX, |b| b.0);
        let value = f.run(0, t, limit);
        if value < limit {
            best = Some((value, f.reachable(0)));
        }
    }
    let (value, side) = best.expect("n >= 2");
    EdgeCut {
        value,
        cut: edge_cut_of(g, &side),
        side: (0..n).filter(|&v| side[v]).collect(),
    }
}

/// Local vertex connectivity of a non-adjacent pair with a minimum
/// separator.
fn local_vertex_cut(g: &MultiGraph, s: VertexId, t: VertexId, limit: u32) -> (u32, Vec<VertexId>) {
    let n = g.n();
    let big = n as u32;
    let mut f = Flow::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        f.arc(2 * v, 2 * v + 1, c, 0);
    }
    for (u, v, _) in g.edges() {
        f.arc(2 * u + 1, 2 * v, big, 0);
        f.arc(2 * v + 1, 2 * u, big, 0);
    }
    let value = f.run(2 * s + 1, 2 * t, limit);
    let seen = f.reachable(2 * s + 1);
    let cut = (0..n).filter(|&v| seen[2 * v] && !seen[2 * v + 1]).collect();
    (value, cut)
}

pub fn vertex_connectivity(g: &MultiGraph) -> Result<VertexCut, ConnectivityError> {
    vertex_connectivity_with(g, PairScan::Neighborhood)
}

pub fn vertex_connectivity_with(g: &MultiGraph, scan: PairScan) -> Result<VertexCut, ConnectivityError> {
    if let Some(&(u, v)) = g.parallel_pairs().first() {
        return Err(ConnectivityError::NotSimple(u, v));
    }
    let n = g.n();
    if n <= 1 {
        return Ok(VertexCut { value: 0, cut: None });
    }
    if !g.is_connected() {
        return Ok(VertexCut { value: 0, cut: Some(Vec::new()) });
    }
    let pairs: Vec<(VertexId, VertexId)> = match scan {
        PairScan::AllPairs => (0..n)
            .flat_map(|s| (s + 1..n).map(move |t| (s, t)))
            .filter(|&(s, t)| !g.has_edge(&EdgeRef::first(s, t)))
            .collect(),
        PairScan::Neighborhood => {
            let s = 0;
            let nb: Vec<VertexId> = g.neighbors(s).iter().map(|&(w, _)| w).collect();
            let mut pairs: Vec<_> = (1..n).filter(|t| !nb.contains(t)).map(|t| (s, t)).collect();
            for (i, &x) in nb.iter().enumerate() {
                for &y in &nb[i + 1..] {
                    if g.multiplicity(x, y) == 0 {
                        pairs.push((x, y));
                    }
                }
            }
            pairs
        }
    };
    let mut best: Option<(u32, Vec<VertexId>)> = None;
    for (s, t) in pairs {
        let limit = best.as_ref().map_or(u32::MAX, |b| b.0);
        let (value, cut) = local_vertex_cut(g, s, t, limit);
        if value < limit {
            best = Some((value, cut));
        }
    }
    Ok(match best {
        Some((value, cut)) => VertexCut { value, cut: Some(cut) },
        None => VertexCut { value: n as u32 - 1, cut: None },
    })
}

pub fn certify(g: &MultiGraph) -> Result<ConnectivityCertificate, ConnectivityError> {
    let v = vertex_connectivity(g)?;
    let e = edge_connectivity(g);
    Ok(ConnectivityCertificate {
        vertex_connectivity: v.value,
        edge_connectivity: e.value,
        witness_vertex_cut: v.cut,
        witness_edge_cut: e.cut,
    })
}

/// Does removing `cut` leave a disconnected graph (at least two vertices in
/// different components)?
pub fn vertex_cut_disconnects(g: &MultiGraph, cut: &[VertexId]) -> bool {
    let (rest, _) = g.remove_vertices(cut);
    rest.n() >= 2 && !rest.is_connected()
}

pub fn edge_cut_disconnects(g: &MultiGraph, cut: &[EdgeRef]) -> bool {
    g.delete_edges(cut).is_ok_and(|rest| !rest.is_connected())
}

/// Smallest separating subset by exhaustive enumeration: vertex subsets in
/// increasing size, or all vertex bipartitions for edges.
pub fn oracle_connectivity(g: &MultiGraph, mode: Mode) -> Result<u32, ConnectivityError> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(ConnectivityError::TooLarge { n, max: ORACLE_MAX_N });
    }
    if n <= 1 {
        return Ok(0);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &(w, _)| m | 1 << w))
        .collect();
    let full = (1u32 << n) - 1;
    let connected = |alive: u32| -> bool {
        let start = alive & alive.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & alive & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == alive
    };
    match mode {
        Mode::Vertex => {
            let mut by_size: Vec<u32> = (0..=full).collect();
            by_size.sort_by_key(|s| (s.count_ones(), *s));
            for s in by_size {
                let alive = full & !s;
                if alive.count_ones() >= 2 && !connected(alive) {
                    return Ok(s.count_ones());
                }
            }
            Ok(n as u32 - 1)
        }
        Mode::Edge => {
            let mut best = u32::MAX;
            for side in (1..=full).filter(|s| s & 1 == 1 && *s != full) {
                let mut crossing = 0;
                for (u, v, m) in g.edges() {
                    if (side >> u & 1) != (side >> v & 1) {
                        crossing += m;
                    }
                }
                best = best.min(crossing);
            }
            Ok(best)
        }
    }
}
