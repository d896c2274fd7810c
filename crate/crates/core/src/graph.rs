//! Undirected loopless multigraph with edge multiplicities.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

/// One unit of a (possibly parallel) edge. Always stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub u: VertexId,
    pub v: VertexId,
    pub copy: u32,
}

impl EdgeRef {
    pub fn new(u: VertexId, v: VertexId, copy: u32) -> Self {
        if u <= v {
            EdgeRef { u, v, copy }
        } else {
            EdgeRef { u: v, v: u, copy }
        }
    }

    /// Copy 0 of the edge `uv`.
    pub fn first(u: VertexId, v: VertexId) -> Self {
        Self::new(u, v, 0)
    }

    pub fn other(&self, w: VertexId) -> VertexId {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}#{}", self.u, self.v, self.copy)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: VertexId, n: usize },
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("parallel edge {u}-{v} while parallel edges are disallowed")]
    Parallel { u: VertexId, v: VertexId },
    #[error("edge {0} does not exist")]
    MissingEdge(EdgeRef),
    #[error("path length must be at least 1")]
    ZeroLengthPath,
}

/// Undirected loopless multigraph on the dense vertex set `0..n`.
///
/// Adjacency rows are kept sorted by neighbour, so equality, iteration and
/// every serialisation are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiGraph {
    adj: Vec<Vec<(VertexId, u32)>>,
    labels: Vec<Option<String>>,
}

impl MultiGraph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        MultiGraph {
            adj: vec![Vec::new(); n],
            labels: vec![None; n],
        }
    }

    /// Builds a graph from an edge list; a pair listed `k` times gets
    /// multiplicity `k`.
    pub fn from_edges(
        n: usize,
        edges: &[(VertexId, VertexId)],
        allow_parallel: bool,
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            if !allow_parallel && g.multiplicity(u, v) > 0 {
                return Err(GraphError::Parallel { u, v });
            }
            g.add_edge_unchecked(u, v, 1);
        }
        Ok(g)
    }

    /// Builds a graph from `(u, v, multiplicity)` triples.
    pub fn from_multiplicities(
        n: usize,
        triples: &[(VertexId, VertexId, u32)],
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v, m) in triples {
            g.check_pair(u, v)?;
            g.add_edge_unchecked(u, v, m);
        }
        Ok(g)
    }

    fn check_pair(&self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { v: w, n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        Ok(())
    }

    fn add_edge_unchecked(&mut self, u: VertexId, v: VertexId, m: u32) {
        if m == 0 {
            return;
        }
        for (x, y) in [(u, v), (v, u)] {
            let row = &mut self.adj[x];
            match row.binary_search_by_key(&y, |&(w, _)| w) {
                Ok(i) => row[i].1 += m,
                Err(i) => row.insert(i, (y, m)),
            }
        }
    }

    /// Adds one unit of `uv` in place.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        self.add_edge_unchecked(u, v, 1);
        Ok(())
    }

    /// Removes one unit of `uv` in place.
    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if u >= self.n() || v >= self.n() || self.multiplicity(u, v) == 0 {
            return Err(GraphError::MissingEdge(EdgeRef::first(u, v)));
        }
        for (x, y) in [(u, v), (v, u)] {
            let row = &mut self.adj[x];
            let i = row.binary_search_by_key(&y, |&(w, _)| w).unwrap();
            row[i].1 -= 1;
            if row[i].1 == 0 {
                row.remove(i);
            }
        }
        Ok(())
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self, label: Option<String>) -> VertexId {
        self.adj.push(Vec::new());
        self.labels.push(label);
        self.adj.len() - 1
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> u32 {
        match self.adj.get(u) {
            Some(row) => row
                .binary_search_by_key(&v, |&(w, _)| w)
                .map(|i| row[i].1)
                .unwrap_or(0),
            None => 0,
        }
    }

    pub fn has_edge(&self, e: &EdgeRef) -> bool {
        e.copy < self.multiplicity(e.u, e.v)
    }

    /// Degree counting multiplicity.
    pub fn degree(&self, v: VertexId) -> u32 {
        self.adj[v].iter().map(|&(_, m)| m).sum()
    }

    pub fn degrees(&self) -> Vec<u32> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> u32 {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Distinct neighbours with multiplicities, sorted by neighbour.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, u32)] {
        &self.adj[v]
    }

    /// Total number of edge units.
    pub fn edge_count(&self) -> u64 {
        self.adj.iter().flatten().map(|&(_, m)| m as u64).sum::<u64>() / 2
    }

    /// `(u, v, multiplicity)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId, u32)> {
        let mut out = Vec::new();
        for (u, row) in self.adj.iter().enumerate() {
            for &(v, m) in row {
                if u < v {
                    out.push((u, v, m));
                }
            }
        }
        out
    }

    /// Every edge unit, sorted by `(u, v, copy)`.
    pub fn edge_refs(&self) -> Vec<EdgeRef> {
        let mut out = Vec::new();
        for (u, v, m) in self.edges() {
            for copy in 0..m {
                out.push(EdgeRef { u, v, copy });
            }
        }
        out
    }

    pub fn is_simple(&self) -> bool {
        self.adj.iter().flatten().all(|&(_, m)| m <= 1)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<u32> {
        let mut it = (0..self.n()).map(|v| self.degree(v));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_regular(&self, k: u32) -> bool {
        (0..self.n()).all(|v| self.degree(v) == k)
    }

    /// Pairs `(u, v)` with multiplicity at least two.
    pub fn parallel_pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.edges()
            .into_iter()
            .filter(|&(_, _, m)| m >= 2)
            .map(|(u, v, _)| (u, v))
            .collect()
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(v).and_then(|l| l.as_deref())
    }

    pub fn set_label(&mut self, v: VertexId, label: impl Into<String>) {
        self.labels[v] = Some(label.into());
    }

    pub fn labels(&self) -> impl Iterator<Item = (VertexId, &str)> {
        self.labels
            .iter()
            .enumerate()
            .filter_map(|(v, l)| l.as_deref().map(|l| (v, l)))
    }

    /// First vertex carrying exactly this label.
    pub fn find_label(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l.as_deref() == Some(label))
    }

    /// Component index per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().1 == 1
    }

    /// Removes one unit per reference. References are interpreted against
    /// the original graph, so deleting copies 0 and 1 of a double edge
    /// clears it.
    pub fn delete_edges(&self, refs: &[EdgeRef]) -> Result<MultiGraph, GraphError> {
        let mut g = self.clone();
        let mut sorted: Vec<EdgeRef> = refs.iter().map(|e| EdgeRef::new(e.u, e.v, e.copy)).collect();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::MissingEdge(w[1]));
            }
        }
        for e in &sorted {
            if !self.has_edge(e) {
                return Err(GraphError::MissingEdge(*e));
            }
        }
        for e in &sorted {
            g.remove_edge(e.u, e.v)?;
        }
        Ok(g)
    }

    /// `self` followed by `other`, whose vertex `i` becomes `self.n() + i`.
    /// Labels of `other` get `suffix` appended. Returns the offset.
    pub fn disjoint_union(&self, other: &MultiGraph, suffix: &str) -> (MultiGraph, usize) {
        let offset = self.n();
        let mut g = self.clone();
        for v in 0..other.n() {
            let label = other.labels[v].as_ref().map(|l| {
                let mut s = l.clone();
                s.push_str(suffix);
                s
            });
            g.add_vertex(label);
        }
        for (u, v, m) in other.edges() {
            g.add_edge_unchecked(u + offset, v + offset, m);
        }
        (g, offset)
    }

    /// Joins `u` and `v` by a path of `length` edges whose `length - 1`
    /// fresh internal vertices are appended in order from `u` and labelled
    /// `"{tag}:{i}"` for `i = 1..length`.
    pub fn add_path(
        &self,
        u: VertexId,
        v: VertexId,
        length: usize,
        tag: &str,
        allow_parallel: bool,
    ) -> Result<(MultiGraph, Vec<VertexId>), GraphError> {
        self.check_pair(u, v)?;
        if length == 0 {
            return Err(GraphError::ZeroLengthPath);
        }
        if length == 1 && !allow_parallel && self.multiplicity(u, v) > 0 {
            return Err(GraphError::Parallel { u, v });
        }
        let mut g = self.clone();
        let mut internal = Vec::with_capacity(length - 1);
        let mut prev = u;
        for i in 1..length {
            let x = g.add_vertex(Some(alloc::format!("{tag}:{i}")));
            g.add_edge_unchecked(prev, x, 1);
            internal.push(x);
            prev = x;
        }
        g.add_edge_unchecked(prev, v, 1);
        Ok((g, internal))
    }

    /// Deletes the given vertices and renumbers the rest densely, keeping
    /// their relative order. Returns the old → new map.
    pub fn remove_vertices(&self, gone: &[VertexId]) -> (MultiGraph, Vec<Option<VertexId>>) {
        let n = self.n();
        let mut map = vec![None; n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !gone.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut g = MultiGraph::empty(next);
        for v in 0..n {
            if let Some(nv) = map[v] {
                g.labels[nv] = self.labels[v].clone();
            }
        }
        for (u, v, m) in self.edges() {
            if let (Some(a), Some(b)) = (map[u], map[v]) {
                g.add_edge_unchecked(a, b, m);
            }
        }
        (g, map)
    }

    /// Underlying simple graph.
    pub fn simplified(&self) -> MultiGraph {
        let mut g = self.clone();
        for row in &mut g.adj {
            for e in row.iter_mut() {
                e.1 = 1;
            }
        }
        g
    }

    /// Same edges, labels dropped.
    pub fn without_labels(&self) -> MultiGraph {
        MultiGraph {
            adj: self.adj.clone(),
            labels: vec![None; self.n()],
        }
    }
}
