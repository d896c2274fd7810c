//! Gadget graphs with a marked path `abcd`, and the candidate spaces they
//! are searched in.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::expansion::triangle_replace;
use super::petersen::{double_one_factor, perfect_matchings, petersen};
use crate::connectivity::edge_connectivity;
use crate::graph::{EdgeRef, MultiGraph, VertexId};
use crate::hamilton::{count_hamiltonian_cycles, exists_split_two_factor, CountOptions, TwoFactor};
use crate::verify::{marked_path, marked_path_minus};

/// A 4-regular gadget with a marked path `a b c d` and a 2-factor whose two
/// cycles separate `ab` from `cd`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetSpec {
    pub graph: MultiGraph,
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
    pub d: VertexId,
    pub two_factor: TwoFactor,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GadgetError {
    #[error("path vertices must be distinct vertices of the graph")]
    BadPath,
    #[error("edge {0}-{1} of the marked path is missing")]
    MissingPathEdge(VertexId, VertexId),
    #[error("vertex {v} has degree {degree}, expected 4")]
    NotQuartic { v: VertexId, degree: u32 },
    #[error("stored 2-factor is not a spanning 2-regular subgraph of the gadget")]
    InvalidFactor,
    #[error("stored 2-factor must have two cycles, one through ab and the other through cd")]
    FactorDoesNotSplit,
}

impl GadgetSpec {
    pub fn path(&self) -> [VertexId; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Checks the structural preconditions: distinct path vertices, path
    /// edges present, 4-regular, and a splitting 2-factor.
    pub fn validate(&self) -> Result<(), GadgetError> {
        let g = &self.graph;
        let p = self.path();
        if p.iter().any(|&v| v >= g.n()) || (0..4).any(|i| p[i + 1..].contains(&p[i])) {
            return Err(GadgetError::BadPath);
        }
        for w in p.windows(2) {
            if g.multiplicity(w[0], w[1]) == 0 {
                return Err(GadgetError::MissingPathEdge(w[0], w[1]));
            }
        }
        if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 4) {
            return Err(GadgetError::NotQuartic { v, degree: g.degree(v) });
        }
        if !self.two_factor.is_valid_for(g) {
            return Err(GadgetError::InvalidFactor);
        }
        if !factor_splits(&self.two_factor, self.a, self.b, self.c, self.d) {
            return Err(GadgetError::FactorDoesNotSplit);
        }
        Ok(())
    }
}

/// Two components, one using an `ab` unit and the other a `cd` unit.
pub fn factor_splits(tf: &TwoFactor, a: VertexId, b: VertexId, c: VertexId, d: VertexId) -> bool {
    let holds = |comp: &Vec<EdgeRef>, x: VertexId, y: VertexId| {
        comp.iter().any(|e| (e.u, e.v) == (x.min(y), x.max(y)))
    };
    tf.components.len() == 2
        && ((holds(&tf.components[0], a, b) && holds(&tf.components[1], c, d))
            || (holds(&tf.components[1], a, b) && holds(&tf.components[0], c, d)))
}

/// Every directed path `a b c d` on distinct vertices, in lexicographic
/// order.
pub fn directed_paths(g: &MultiGraph) -> Vec<[VertexId; 4]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for &(b, _) in g.neighbors(a) {
            for &(c, _) in g.neighbors(b) {
                if c == a {
                    continue;
                }
                for &(d, _) in g.neighbors(c) {
                    if d != a && d != b {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// Where [`find_gadget`] looks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateSpace {
    /// Petersen with one of its six perfect matchings doubled, every marked
    /// path.
    DoubledPetersen,
    /// Each cubic host with each of its perfect matchings doubled; marked
    /// paths use only undoubled edges.
    DoubledCubic(Vec<MultiGraph>),
    /// Explicit graphs, every marked path.
    Graphs(Vec<MultiGraph>),
}

impl CandidateSpace {
    /// The space the family is certified with.
    pub fn widened() -> Self {
        CandidateSpace::DoubledCubic(petersen_triangle_hosts())
    }
}

/// Petersen with vertex 0 replaced by a triangle, then that graph with each
/// of its vertices in turn replaced by a triangle (duplicates dropped).
pub fn petersen_triangle_hosts() -> Vec<MultiGraph> {
    let once = triangle_replace(&petersen(), 0).expect("cubic");
    let mut seen = BTreeSet::new();
    let mut out = vec![once.clone()];
    for v in 0..once.n() {
        let twice = triangle_replace(&once, v).expect("cubic");
        if seen.insert(twice.edges()) {
            out.push(twice);
        }
    }
    out
}

/// Rejections by the first failing condition, counted per (graph, path)
/// candidate.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Rejections {
    pub not_quartic: usize,
    pub edge_connectivity: usize,
    pub hamiltonian: usize,
    pub no_split_factor: usize,
    pub marked_path: usize,
    pub marked_path_minus: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchSummary {
    pub graphs: usize,
    /// Marked paths examined in each graph, in search order.
    pub paths_per_graph: Vec<usize>,
    pub candidates: usize,
    pub rejected: Rejections,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GadgetSearchError {
    #[error(
        "no gadget among {} candidates: not 4-regular {}, edge connectivity < 4 {}, hamiltonian {}, \
         no split 2-factor {}, marked path in G-bc {}, marked path in G-v-bc {}",
        .0.candidates, .0.rejected.not_quartic, .0.rejected.edge_connectivity, .0.rejected.hamiltonian,
        .0.rejected.no_split_factor, .0.rejected.marked_path, .0.rejected.marked_path_minus
    )]
    Exhausted(SearchSummary),
}

/// Searches `space` in its deterministic order and returns the first
/// gadget passing every condition, with the tally up to that point.
pub fn find_gadget(space: &CandidateSpace) -> Result<(GadgetSpec, SearchSummary), GadgetSearchError> {
    let mut summary = SearchSummary::default();
    let mut found = None;
    match space {
        CandidateSpace::DoubledPetersen => {
            let p = petersen();
            for m in perfect_matchings(&p) {
                let g = double_one_factor(&p, &m).expect("perfect matching");
                if let Some(spec) = search_graph(&g, |_| true, &mut summary) {
                    found = Some(spec);
                    break;
                }
            }
        }
        CandidateSpace::DoubledCubic(hosts) => {
            'hosts: for host in hosts {
                for m in perfect_matchings(host) {
                    let Ok(g) = double_one_factor(host, &m) else { continue };
                    let single = |p: &[VertexId; 4]| p.windows(2).all(|w| g.multiplicity(w[0], w[1]) == 1);
                    if let Some(spec) = search_graph(&g, single, &mut summary) {
                        found = Some(spec);
                        break 'hosts;
                    }
                }
            }
        }
        CandidateSpace::Graphs(list) => {
            for g in list {
                if let Some(spec) = search_graph(g, |_| true, &mut summary) {
                    found = Some(spec);
                    break;
                }
            }
        }
    }
    match found {
        Some(spec) => Ok((spec, summary)),
        None => Err(GadgetSearchError::Exhausted(summary)),
    }
}

fn search_graph(
    g: &MultiGraph,
    keep: impl Fn(&[VertexId; 4]) -> bool,
    summary: &mut SearchSummary,
) -> Option<GadgetSpec> {
    let paths: Vec<[VertexId; 4]> = directed_paths(g).into_iter().filter(|p| keep(p)).collect();
    summary.graphs += 1;
    summary.paths_per_graph.push(paths.len());
    summary.candidates += paths.len();
    let r = &mut summary.rejected;
    if !g.is_regular(4) {
        r.not_quartic += paths.len();
        return None;
    }
    if edge_connectivity(g).value < 4 {
        r.edge_connectivity += paths.len();
        return None;
    }
    let opts = CountOptions { stop_after: Some(1), ..Default::default() };
    if count_hamiltonian_cycles(g, &opts).count > 0 {
        r.hamiltonian += paths.len();
        return None;
    }
    for [a, b, c, d] in paths {
        let split = exists_split_two_factor(g, &EdgeRef::first(a, b), &EdgeRef::first(c, d)).expect("distinct edges");
        let Some(two_factor) = split else {
            r.no_split_factor += 1;
            continue;
        };
        let spec = GadgetSpec { graph: g.clone(), a, b, c, d, two_factor };
        if marked_path(&spec).is_some() {
            r.marked_path += 1;
        } else if marked_path_minus(&spec).is_some() {
            r.marked_path_minus += 1;
        } else {
            return Some(spec);
        }
    }
    None
}

#[cfg(test)]
fn doubled_petersen() -> MultiGraph {
    let p = petersen();
    let m = perfect_matchings(&p).remove(0);
    double_one_factor(&p, &m).expect("perfect matching")
}

#[cfg(test)]
pub(crate) mod tests_support {
    use super::*;

    /// Petersen with its first matching doubled and path `0 1 2 3`; fails
    /// the path conditions but is structurally valid.
    pub fn default_spec() -> GadgetSpec {
        let g = doubled_petersen();
        let tf = exists_split_two_factor(&g, &EdgeRef::first(0, 1), &EdgeRef::first(2, 3)).unwrap().unwrap();
        GadgetSpec { graph: g, a: 0, b: 1, c: 2, d: 3, two_factor: tf }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_spec_validates() {
        let spec = tests_support::default_spec();
        assert_eq!(spec.validate(), Ok(()));
        let mut bad = spec.clone();
        bad.d = bad.a;
        assert_eq!(bad.validate(), Err(GadgetError::BadPath));
        let mut missing = spec.clone();
        missing.d = 9;
        assert!(matches!(missing.validate(), Err(GadgetError::MissingPathEdge(2, 9))));
    }

    #[test]
    fn directed_paths_are_simple() {
        let g = doubled_petersen();
        let paths = directed_paths(&g);
        // 10 starts, 3 neighbours each, then 2 and 2 fresh choices.
        assert_eq!(paths.len(), 10 * 3 * 2 * 2);
        assert!(paths.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn default_space_is_exhausted() {
        let Err(GadgetSearchError::Exhausted(s)) = find_gadget(&CandidateSpace::DoubledPetersen) else {
            panic!("default space produced a gadget");
        };
        assert_eq!(s.graphs, 6);
        assert_eq!(s.paths_per_graph, vec![120; 6]);
        let r = &s.rejected;
        assert_eq!(r.not_quartic + r.edge_connectivity + r.hamiltonian, 0);
        assert_eq!(r.no_split_factor + r.marked_path + r.marked_path_minus, 720);
        assert!(r.marked_path > 0);
    }

    #[test]
    fn triangle_hosts() {
        let hosts = petersen_triangle_hosts();
        assert_eq!(hosts[0].n(), 12);
        assert!(hosts[1..].iter().all(|h| h.n() == 14));
        for h in &hosts {
            assert!(h.is_regular(3) && h.is_simple());
            assert_eq!(count_hamiltonian_cycles(h, &CountOptions::default()).count, 0);
        }
    }

    #[test]
    fn widened_space_yields_gadget() {
        let (spec, summary) = find_gadget(&CandidateSpace::widened()).unwrap();
        assert_eq!(spec.validate(), Ok(()));
        assert_eq!(spec.graph.n(), 14);
        assert_eq!(spec.path(), [9, 8, 13, 12]);
        assert!(summary.graphs > 1);
        assert!(crate::verify::verify_conditions(&spec).overall());
        for w in spec.path().windows(2) {
            assert_eq!(spec.graph.multiplicity(w[0], w[1]), 1);
        }
    }

    #[test]
    fn tietze_host_fails() {
        let hosts = petersen_triangle_hosts();
        let Err(GadgetSearchError::Exhausted(s)) = find_gadget(&CandidateSpace::DoubledCubic(vec![hosts[0].clone()])) else {
            panic!("single-triangle host produced a gadget");
        };
        assert!(s.candidates > 0);
        assert_eq!(s.rejected.hamiltonian, 0);
    }
}
