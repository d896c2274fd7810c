//! Two copies of a gadget joined by four connector paths and two zig-zag
//! ladders.
//!
//! Vertex layout: the gadget `G` keeps ids `0..n`, its copy `G'` takes
//! `n..2n`, then the internal vertices of `P_a`, `P_b`, `P_c`, `P_d` in that
//! order, each from its `G` end. Connector paths join `a–c'`, `b–b'`, `c–a'`
//! and `d–d'`; `P_a` and `P_d` have length `ℓ + 1`, `P_b` and `P_c` length
//! `ℓ`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::gadget::GadgetSpec;
use crate::graph::{EdgeRef, GraphError, MultiGraph, VertexId};

/// One of the four connector paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strand {
    A,
    B,
    C,
    D,
}

impl Strand {
    pub const ALL: [Strand; 4] = [Strand::A, Strand::B, Strand::C, Strand::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Strand::A => "P_a",
            Strand::B => "P_b",
            Strand::C => "P_c",
            Strand::D => "P_d",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Strand::ALL.into_iter().find(|t| t.name() == s || t.short() == s)
    }

    pub fn short(self) -> &'static str {
        match self {
            Strand::A => "a",
            Strand::B => "b",
            Strand::C => "c",
            Strand::D => "d",
        }
    }

    /// Number of edges for stretching parameter `ell`.
    pub fn length(self, ell: usize) -> usize {
        match self {
            Strand::A | Strand::D => ell + 1,
            Strand::B | Strand::C => ell,
        }
    }
}

/// A position on a strand counted from its `G` end (`Start(0)` is the
/// gadget vertex) or from its `G'` end (`End(0)` is the copy vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum At {
    Start(usize),
    End(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrandPos {
    pub strand: Strand,
    pub at: At,
}

impl StrandPos {
    pub fn start(strand: Strand, k: usize) -> Self {
        StrandPos { strand, at: At::Start(k) }
    }

    pub fn end(strand: Strand, k: usize) -> Self {
        StrandPos { strand, at: At::End(k) }
    }

    /// Index along the strand for a given `ell`, if in range.
    pub fn index(&self, ell: usize) -> Option<usize> {
        let len = self.strand.length(ell);
        match self.at {
            At::Start(k) if k <= len => Some(k),
            At::End(k) if k <= len => Some(len - k),
            _ => None,
        }
    }
}

impl fmt::Display for StrandPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.at {
            At::Start(k) => write!(f, "{}[{}]", self.strand.name(), k),
            At::End(k) => write!(f, "{}[-{}]", self.strand.name(), k),
        }
    }
}

/// One ingredient of a ladder pattern.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rung {
    /// Zig-zag over the internal vertices of two strands:
    /// `X_1 Y_1 X_2 Y_2 ...`, continuing while the next vertex exists.
    Alternate { first: Strand, second: Strand },
    /// A single extra edge that must not parallel an existing one.
    Edge(StrandPos, StrandPos),
    /// An extra copy of an edge that already exists.
    Double(StrandPos, StrandPos),
}

/// The extra edges that restore 4-regularity around the connector paths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LadderPattern {
    pub name: String,
    pub min_ell: usize,
    pub rungs: Vec<Rung>,
}

impl LadderPattern {
    /// Concrete vertex pairs for `ell`, split into plain and doubled.
    pub fn resolve(&self, paths: &ConnectorPaths) -> Result<(Vec<(VertexId, VertexId)>, Vec<(VertexId, VertexId)>), AssemblyError> {
        let ell = paths.ell;
        let vertex = |p: &StrandPos| -> Result<VertexId, AssemblyError> {
            let i = p.index(ell).ok_or(AssemblyError::BadPosition(*p))?;
            Ok(paths.strands[p.strand.index()][i])
        };
        let mut plain = Vec::new();
        let mut doubled = Vec::new();
        for rung in &self.rungs {
            match rung {
                Rung::Alternate { first, second } => {
                    let x = paths.internal(*first);
                    let y = paths.internal(*second);
                    let mut seq = Vec::new();
                    for i in 0..x.len().max(y.len()) {
                        if i < x.len() {
                            seq.push(x[i]);
                        } else {
                            break;
                        }
                        if i < y.len() {
                            seq.push(y[i]);
                        } else {
                            break;
                        }
                    }
                    for w in seq.windows(2) {
                        plain.push((w[0], w[1]));
                    }
                }
                Rung::Edge(p, q) => plain.push((vertex(p)?, vertex(q)?)),
                Rung::Double(p, q) => doubled.push((vertex(p)?, vertex(q)?)),
            }
        }
        Ok((plain, doubled))
    }
}

/// Full vertex sequences of the four connector paths, `G` end first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectorPaths {
    pub ell: usize,
    pub strands: [Vec<VertexId>; 4],
}

impl ConnectorPaths {
    pub fn strand(&self, s: Strand) -> &[VertexId] {
        &self.strands[s.index()]
    }

    pub fn internal(&self, s: Strand) -> &[VertexId] {
        let v = self.strand(s);
        &v[1..v.len() - 1]
    }

    /// Consecutive vertex pairs of every connector path.
    pub fn edge_pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.strands
            .iter()
            .flat_map(|s| s.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    pub ell: usize,
    pub pattern: LadderPattern,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssembledHG {
    pub graph: MultiGraph,
    pub paths: ConnectorPaths,
    /// Vertex ids of `G` and `G'` as `(v, v')`.
    pub copy_offset: usize,
    /// Parallel pairs declared by the pattern.
    pub declared_doubles: Vec<(VertexId, VertexId)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AssemblyError {
    #[error("ℓ = {ell} is below the pattern minimum {min}")]
    EllTooSmall { ell: usize, min: usize },
    #[error("position {0} does not exist for this ℓ")]
    BadPosition(StrandPos),
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
    #[error("before ladders, expected b, c, b', c' at degree 3, other gadget vertices at 4 and path internals at 2; off: {0:?}")]
    Deficiency(Vec<(VertexId, u32)>),
    #[error("degree check failed: deficient {deficient:?}, overfull {overfull:?}")]
    Degree {
        deficient: Vec<(VertexId, u32)>,
        overfull: Vec<(VertexId, u32)>,
    },
    #[error("edge {0}-{1} would become parallel without being declared")]
    UndeclaredParallel(VertexId, VertexId),
    #[error("declared double {0}-{1} has no existing edge to double")]
    NothingToDouble(VertexId, VertexId),
    #[error("assembled graph is disconnected")]
    Disconnected,
    #[error("parallel pairs {found:?} differ from inherited plus declared {expected:?}")]
    ParallelMismatch {
        found: Vec<(VertexId, VertexId)>,
        expected: Vec<(VertexId, VertexId)>,
    },
}

/// Builds `H_G` for `spec` and `params`, enforcing every postcondition.
pub fn assemble_hg(spec: &GadgetSpec, params: &FamilyParams) -> Result<AssembledHG, AssemblyError> {
    let ell = params.ell;
    if ell < params.pattern.min_ell.max(1) {
        return Err(AssemblyError::EllTooSmall { ell, min: params.pattern.min_ell.max(1) });
    }
    let (g, n) = label_copies(&spec.graph);
    let (a, b, c, d) = (spec.a, spec.b, spec.c, spec.d);
    let p = |v: VertexId| v + n;
    let mut g = g.delete_edges(&[
        EdgeRef::first(a, b),
        EdgeRef::first(b, c),
        EdgeRef::first(c, d),
        EdgeRef::first(p(a), p(b)),
        EdgeRef::first(p(b), p(c)),
        EdgeRef::first(p(c), p(d)),
    ])?;

    let ends = [(a, p(c)), (b, p(b)), (c, p(a)), (d, p(d))];
    let mut strands: [Vec<VertexId>; 4] = Default::default();
    for (s, &(from, to)) in Strand::ALL.iter().zip(ends.iter()) {
        let (next, internal) = g.add_path(from, to, s.length(ell), s.name(), true)?;
        g = next;
        let mut seq = vec![from];
        seq.extend(internal);
        seq.push(to);
        strands[s.index()] = seq;
    }
    let paths = ConnectorPaths { ell, strands };

    let expected_low = [b, c, p(b), p(c)];
    let off: Vec<(VertexId, u32)> = (0..g.n())
        .filter_map(|v| {
            let want = if v >= 2 * n {
                2
            } else if expected_low.contains(&v) {
                3
            } else {
                4
            };
            let have = g.degree(v);
            (have != want).then_some((v, have))
        })
        .collect();
    if !off.is_empty() {
        return Err(AssemblyError::Deficiency(off));
    }

    let (plain, doubled) = params.pattern.resolve(&paths)?;
    for &(u, v) in &plain {
        if g.multiplicity(u, v) > 0 {
            return Err(AssemblyError::UndeclaredParallel(u.min(v), u.max(v)));
        }
        g.add_edge(u, v)?;
    }
    let mut declared = Vec::new();
    for &(u, v) in &doubled {
        if g.multiplicity(u, v) == 0 {
            return Err(AssemblyError::NothingToDouble(u.min(v), u.max(v)));
        }
        g.add_edge(u, v)?;
        declared.push((u.min(v), u.max(v)));
    }
    declared.sort();

    let deficient: Vec<_> = (0..g.n()).map(|v| (v, g.degree(v))).filter(|&(_, d)| d < 4).collect();
    let overfull: Vec<_> = (0..g.n()).map(|v| (v, g.degree(v))).filter(|&(_, d)| d > 4).collect();
    if !deficient.is_empty() || !overfull.is_empty() {
        return Err(AssemblyError::Degree { deficient, overfull });
    }
    if !g.is_connected() {
        return Err(AssemblyError::Disconnected);
    }

    // Parallel pairs: the gadget's, minus any cleared by the deletions,
    // in both copies, plus the declared ones.
    let mut expected = Vec::new();
    for (u, v) in spec.graph.parallel_pairs() {
        let deleted = [(a, b), (b, c), (c, d)]
            .iter()
            .filter(|&&(x, y)| (x.min(y), x.max(y)) == (u, v))
            .count() as u32;
        if spec.graph.multiplicity(u, v) - deleted >= 2 {
            expected.push((u, v));
            expected.push((p(u), p(v)));
        }
    }
    expected.extend(declared.iter().copied());
    expected.sort();
    expected.dedup();
    let found = g.parallel_pairs();
    if found != expected {
        return Err(AssemblyError::ParallelMismatch { found, expected });
    }

    Ok(AssembledHG { graph: g, paths, copy_offset: n, declared_doubles: declared })
}

/// Disjoint union of the gadget with itself; vertices labelled `g{v}` and
/// `g{v}'`.
fn label_copies(gadget: &MultiGraph) -> (MultiGraph, usize) {
    let mut base = gadget.without_labels();
    for v in 0..base.n() {
        base.set_label(v, alloc::format!("g{v}"));
    }
    base.disjoint_union(&base, "'")
}

/// Edge pairs of `H_G` missed by `cycle_pairs` among the connector path
/// edges; empty when the cycle contains every connector path.
pub fn missing_path_edges(paths: &ConnectorPaths, cycle_pairs: &[(VertexId, VertexId)]) -> Vec<(VertexId, VertexId)> {
    paths
        .edge_pairs()
        .into_iter()
        .filter(|pr| !cycle_pairs.contains(pr))
        .collect()
}

/// Zig-zag ends that still need one edge each: the first and last internal
/// vertices of `P_a` and `P_d`.
pub const ZIGZAG_ENDS: [StrandPos; 4] = [
    StrandPos { strand: Strand::A, at: At::Start(1) },
    StrandPos { strand: Strand::A, at: At::End(1) },
    StrandPos { strand: Strand::D, at: At::Start(1) },
    StrandPos { strand: Strand::D, at: At::End(1) },
];

/// The deficient strand endpoints `b`, `c`, `b'`, `c'`.
pub const TERMINI: [StrandPos; 4] = [
    StrandPos { strand: Strand::B, at: At::Start(0) },
    StrandPos { strand: Strand::C, at: At::Start(0) },
    StrandPos { strand: Strand::B, at: At::End(0) },
    StrandPos { strand: Strand::A, at: At::End(0) },
];

fn terminus_name(p: &StrandPos) -> &'static str {
    match (p.strand, p.at) {
        (Strand::B, At::Start(0)) => "b",
        (Strand::C, At::Start(0)) => "c",
        (Strand::B, At::End(0)) => "b'",
        (Strand::A, At::End(0)) => "c'",
        _ => "?",
    }
}

/// Two monotone zig-zags, over the internal vertices of `P_a`/`P_b` and of
/// `P_d`/`P_c`, whose four loose ends are matched to `b`, `c`, `b'`, `c'`
/// by `assignment` (index into `TERMINI` for each entry of `ZIGZAG_ENDS`).
/// An end joined to its own path neighbour doubles that path edge.
pub fn zigzag_pattern(assignment: [usize; 4]) -> LadderPattern {
    let mut rungs = vec![
        Rung::Alternate { first: Strand::A, second: Strand::B },
        Rung::Alternate { first: Strand::D, second: Strand::C },
    ];
    let mut name = String::from("zigzag");
    for (end, &t) in ZIGZAG_ENDS.iter().zip(assignment.iter()) {
        let term = TERMINI[t];
        let adjacent = end.strand == term.strand
            && matches!((end.at, term.at), (At::End(1), At::End(0)) | (At::Start(1), At::Start(0)));
        rungs.push(if adjacent { Rung::Double(*end, term) } else { Rung::Edge(*end, term) });
        name.push(' ');
        name.push_str(&alloc::format!("{}={}", end, terminus_name(&term)));
    }
    LadderPattern { name, min_ell: 2, rungs }
}

/// All 24 terminus assignments, in lexicographic order of the assignment.
pub fn zigzag_family() -> Vec<LadderPattern> {
    let mut out = Vec::new();
    for p0 in 0..4 {
        for p1 in 0..4 {
            for p2 in 0..4 {
                for p3 in 0..4 {
                    let a = [p0, p1, p2, p3];
                    if (0..4).all(|i| !a[i + 1..].contains(&a[i])) {
                        out.push(zigzag_pattern(a));
                    }
                }
            }
        }
    }
    out
}
