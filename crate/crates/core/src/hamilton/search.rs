//! Backtracking over edge states with constraint propagation.
//!
//! Each node holds, per edge, undecided / in / out; per vertex, the number of
//! chosen edges and the number still available; and for every endpoint of a
//! chosen path fragment, the opposite endpoint. Propagation rules:
//!
//! * a vertex with two chosen edges drops its remaining edges;
//! * a vertex with exactly two available edges takes both;
//! * an edge joining the two ends of one fragment is dropped unless it closes
//!   a spanning cycle (in two-factor mode it closes a component instead);
//! * in Hamiltonian mode the graph of non-dropped edges must stay connected.
//!
//! Branching picks the most constrained fragment end (fewest undecided edges;
//! a fresh vertex of least degree when nothing is chosen yet) and splits on
//! its first undecided edge: take it, or drop it.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EdgeRef, MultiGraph};

const UNDECIDED: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

/// Edge-unit view of a multigraph: one id per parallel copy.
#[derive(Debug, Clone)]
pub struct EdgeIndex {
    pub(crate) n: usize,
    pub(crate) ends: Vec<(u32, u32)>,
    pub(crate) refs: Vec<EdgeRef>,
    pub(crate) inc: Vec<Vec<u32>>,
}

impl EdgeIndex {
    pub fn new(g: &MultiGraph) -> Self {
        let refs = g.edge_refs();
        let mut inc = vec![Vec::new(); g.n()];
        let mut ends = Vec::with_capacity(refs.len());
        for (i, e) in refs.iter().enumerate() {
            ends.push((e.u as u32, e.v as u32));
            inc[e.u].push(i as u32);
            inc[e.v].push(i as u32);
        }
        EdgeIndex { n: g.n(), ends, refs, inc }
    }

    pub fn id_of(&self, e: &EdgeRef) -> Option<u32> {
        let e = EdgeRef::new(e.u, e.v, e.copy);
        self.refs.binary_search(&e).ok().map(|i| i as u32)
    }

    pub fn edge(&self, id: u32) -> EdgeRef {
        self.refs[id as usize]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Spanning cycles only.
    Hamiltonian,
    /// Spanning 2-regular sub-multigraphs (digons allowed).
    TwoFactor,
}

#[derive(Debug, Clone)]
pub struct SearchState {
    status: Vec<u8>,
    deg_in: Vec<u32>,
    avail: Vec<u32>,
    mate: Vec<u32>,
    included: u32,
    closed: bool,
}

struct Dead;

impl SearchState {
    /// Root state with `forced` edges taken and `forbidden` dropped, fully
    /// propagated. `None` when that is already contradictory.
    pub fn root(idx: &EdgeIndex, mode: Mode, forced: &[u32], forbidden: &[u32]) -> Option<Self> {
        let n = idx.n;
        let mut s = SearchState {
            status: vec![UNDECIDED; idx.ends.len()],
            deg_in: vec![0; n],
            avail: idx.inc.iter().map(|l| l.len() as u32).collect(),
            mate: (0..n as u32).collect(),
            included: 0,
            closed: false,
        };
        let mut queue: Vec<u32> = (0..n as u32).collect();
        let ok = (|| {
            for &e in forbidden {
                s.exclude(idx, e, &mut queue)?;
            }
            for &e in forced {
                s.include(idx, mode, e, &mut queue)?;
            }
            s.propagate(idx, mode, &mut queue)?;
            s.check_connected(idx, mode)
        })();
        ok.ok().map(|_| s)
    }

    fn exclude(&mut self, idx: &EdgeIndex, e: u32, queue: &mut Vec<u32>) -> Result<(), Dead> {
        match self.status[e as usize] {
            OUT => return Ok(()),
            IN => return Err(Dead),
            _ => {}
        }
        self.status[e as usize] = OUT;
        let (u, v) = idx.ends[e as usize];
        for w in [u, v] {
            self.avail[w as usize] -= 1;
            if self.avail[w as usize] < 2 {
                return Err(Dead);
            }
            queue.push(w);
        }
        Ok(())
    }

    fn include(&mut self, idx: &EdgeIndex, mode: Mode, e: u32, queue: &mut Vec<u32>) -> Result<(), Dead> {
        match self.status[e as usize] {
            IN => return Ok(()),
            OUT => return Err(Dead),
            _ => {}
        }
        let (u, v) = idx.ends[e as usize];
        let (ui, vi) = (u as usize, v as usize);
        if self.deg_in[ui] == 2 || self.deg_in[vi] == 2 {
            return Err(Dead);
        }
        let n = idx.n as u32;
        self.status[e as usize] = IN;
        let closing = self.deg_in[ui] == 1 && self.deg_in[vi] == 1 && self.mate[ui] == v;
        self.deg_in[ui] += 1;
        self.deg_in[vi] += 1;
        self.included += 1;
        queue.push(u);
        queue.push(v);
        if closing {
            match mode {
                Mode::Hamiltonian => {
                    if self.included != n {
                        return Err(Dead);
                    }
                    self.closed = true;
                }
                Mode::TwoFactor => {
                    if self.included == n {
                        self.closed = true;
                    }
                }
            }
            return Ok(());
        }
        let a = self.mate[ui];
        let b = self.mate[vi];
        self.mate[a as usize] = b;
        self.mate[b as usize] = a;
        if mode == Mode::Hamiltonian && self.included + 1 < n {
            // Short-cycle cut: nothing may join the two ends of one fragment.
            let (small, other) = if idx.inc[a as usize].len() <= idx.inc[b as usize].len() {
                (a, b)
            } else {
                (b, a)
            };
            for &f in &idx.inc[small as usize] {
                if self.status[f as usize] == UNDECIDED {
                    let (x, y) = idx.ends[f as usize];
                    if (x == small && y == other) || (y == small && x == other) {
                        self.exclude(idx, f, queue)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn propagate(&mut self, idx: &EdgeIndex, mode: Mode, queue: &mut Vec<u32>) -> Result<(), Dead> {
        while let Some(w) = queue.pop() {
            let wi = w as usize;
            if self.avail[wi] < 2 {
                return Err(Dead);
            }
            let undecided = self.avail[wi] - self.deg_in[wi];
            if undecided == 0 {
                continue;
            }
            if self.deg_in[wi] == 2 {
                for &f in &idx.inc[wi] {
                    if self.status[f as usize] == UNDECIDED {
                        self.exclude(idx, f, queue)?;
                    }
                }
            } else if self.avail[wi] == 2 {
                for &f in &idx.inc[wi] {
                    if self.status[f as usize] == UNDECIDED {
                        self.include(idx, mode, f, queue)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn check_connected(&self, idx: &EdgeIndex, mode: Mode) -> Result<(), Dead> {
        if mode != Mode::Hamiltonian || self.closed || idx.n == 0 {
            return Ok(());
        }
        let mut seen = vec![false; idx.n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &f in &idx.inc[x as usize] {
                if self.status[f as usize] == OUT {
                    continue;
                }
                let (a, b) = idx.ends[f as usize];
                let y = if a == x { b } else { a };
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        if count == idx.n {
            Ok(())
        } else {
            Err(Dead)
        }
    }

    fn is_solution(&self, idx: &EdgeIndex) -> bool {
        self.closed && self.included as usize == idx.n
    }

    fn branch_edge(&self, idx: &EdgeIndex) -> Option<u32> {
        let mut best: Option<(u32, u32, usize)> = None;
        for v in 0..idx.n {
            let undecided = self.avail[v] - self.deg_in[v];
            if undecided == 0 || self.deg_in[v] == 2 {
                continue;
            }
            // Fragment ends first, then fewest options, then lowest id.
            let key = (if self.deg_in[v] == 1 { 0 } else { 1 }, undecided, v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let (_, _, v) = best?;
        idx.inc[v]
            .iter()
            .copied()
            .find(|&f| self.status[f as usize] == UNDECIDED)
    }

    fn chosen(&self) -> Vec<u32> {
        (0..self.status.len() as u32)
            .filter(|&e| self.status[e as usize] == IN)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Limits {
    pub max_nodes: Option<u64>,
    pub stop_after: Option<u64>,
    pub retain: bool,
}

/// Result of running the engine on one root.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub count: u64,
    pub nodes: u64,
    pub exhausted: bool,
    pub solutions: Vec<Vec<u32>>,
}

impl Outcome {
    pub fn absorb(&mut self, other: Outcome) {
        self.count += other.count;
        self.nodes += other.nodes;
        self.exhausted |= other.exhausted;
        self.solutions.extend(other.solutions);
    }
}

/// A subtree of the search, in depth-first order.
#[derive(Debug, Clone)]
pub enum Task {
    Open(SearchState),
    Solved(Vec<u32>),
}

pub struct Engine<'a> {
    idx: &'a EdgeIndex,
    mode: Mode,
    limits: Limits,
    out: Outcome,
    stopped: bool,
}

impl<'a> Engine<'a> {
    pub fn new(idx: &'a EdgeIndex, mode: Mode, limits: Limits) -> Self {
        Engine { idx, mode, limits, out: Outcome::default(), stopped: false }
    }

    pub fn run(mut self, root: SearchState) -> Outcome {
        self.visit(root);
        self.out
    }

    /// Walks the tree to `depth`, counting nodes above it, and returns the
    /// subtrees below it in the order a sequential run would visit them.
    /// Running every task and absorbing in order reproduces `run` exactly.
    pub fn split(idx: &'a EdgeIndex, mode: Mode, root: SearchState, depth: usize) -> (Vec<Task>, u64) {
        let mut tasks = Vec::new();
        let mut nodes = 0;
        let mut stack = vec![(root, 0usize)];
        while let Some((state, d)) = stack.pop() {
            if d == depth {
                tasks.push(Task::Open(state));
                continue;
            }
            nodes += 1;
            if state.is_solution(idx) {
                tasks.push(Task::Solved(state.chosen()));
                continue;
            }
            let children = Self::children(idx, mode, &state);
            for child in children.into_iter().rev() {
                stack.push((child, d + 1));
            }
        }
        (tasks, nodes)
    }

    fn children(idx: &EdgeIndex, mode: Mode, state: &SearchState) -> Vec<SearchState> {
        let mut out = Vec::with_capacity(2);
        let Some(e) = state.branch_edge(idx) else {
            return out;
        };
        let mut queue = Vec::new();
        let mut take = state.clone();
        if take.include(idx, mode, e, &mut queue).is_ok()
            && take.propagate(idx, mode, &mut queue).is_ok()
            && take.check_connected(idx, mode).is_ok()
        {
            out.push(take);
        }
        queue.clear();
        let mut drop = state.clone();
        if drop.exclude(idx, e, &mut queue).is_ok()
            && drop.propagate(idx, mode, &mut queue).is_ok()
            && drop.check_connected(idx, mode).is_ok()
        {
            out.push(drop);
        }
        out
    }

    fn visit(&mut self, state: SearchState) {
        if self.stopped {
            return;
        }
        if let Some(max) = self.limits.max_nodes {
            if self.out.nodes >= max {
                self.out.exhausted = true;
                self.stopped = true;
                return;
            }
        }
        self.out.nodes += 1;
        if state.is_solution(self.idx) {
            self.out.count += 1;
            if self.limits.retain {
                self.out.solutions.push(state.chosen());
            }
            if self.limits.stop_after.is_some_and(|k| self.out.count >= k) {
                self.stopped = true;
            }
            return;
        }
        for child in Self::children(self.idx, self.mode, &state) {
            self.visit(child);
            if self.stopped {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> MultiGraph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        MultiGraph::from_edges(n, &e, false).unwrap()
    }

    fn count(g: &MultiGraph, mode: Mode) -> u64 {
        let idx = EdgeIndex::new(g);
        match SearchState::root(&idx, mode, &[], &[]) {
            Some(root) => Engine::new(&idx, mode, Limits::default()).run(root).count,
            None => 0,
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(&complete(4), Mode::Hamiltonian), 3);
        assert_eq!(count(&complete(5), Mode::Hamiltonian), 12);
        assert_eq!(count(&complete(4), Mode::TwoFactor), 3);
    }

    #[test]
    fn split_reproduces_sequential_run() {
        let g = complete(7);
        let idx = EdgeIndex::new(&g);
        let root = SearchState::root(&idx, Mode::Hamiltonian, &[], &[]).unwrap();
        let limits = Limits { retain: true, ..Limits::default() };
        let seq = Engine::new(&idx, Mode::Hamiltonian, limits).run(root.clone());
        for depth in 0..6 {
            let (tasks, nodes) = Engine::split(&idx, Mode::Hamiltonian, root.clone(), depth);
            let mut acc = Outcome { nodes, ..Outcome::default() };
            for t in tasks {
                match t {
                    Task::Open(s) => acc.absorb(Engine::new(&idx, Mode::Hamiltonian, limits).run(s)),
                    Task::Solved(sol) => {
                        acc.count += 1;
                        acc.solutions.push(sol);
                    }
                }
            }
            assert_eq!(acc.count, seq.count);
            assert_eq!(acc.nodes, seq.nodes);
            assert_eq!(acc.solutions, seq.solutions);
        }
    }
}
