//! Multigraph JSON, DOT, and input sniffing.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use quartic_core::graph6;
use quartic_core::{GraphError, MultiGraph};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("invalid graph6: {0}")]
    Graph6(#[from] graph6::Graph6Error),
    #[error("edge triple {0:?} has multiplicity 0")]
    ZeroMultiplicity([usize; 3]),
    #[error("label for vertex {id} but n = {n}")]
    LabelOutOfRange { id: usize, n: usize },
}

/// `{"n": .., "edges": [[u, v, mult], ..], "labels": {id: tag}}` with edges
/// sorted and `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<usize, String>,
}

impl GraphJson {
    pub fn from_graph(g: &MultiGraph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v, m)| [u, v, m as usize]).collect(),
            labels: g.labels().map(|(v, l)| (v, l.to_string())).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<MultiGraph, FormatError> {
        let mut triples = Vec::with_capacity(self.edges.len());
        for t in &self.edges {
            if t[2] == 0 {
                return Err(FormatError::ZeroMultiplicity(*t));
            }
            triples.push((t[0], t[1], t[2] as u32));
        }
        let mut g = MultiGraph::from_multiplicities(self.n, &triples)?;
        for (&id, tag) in &self.labels {
            if id >= self.n {
                return Err(FormatError::LabelOutOfRange { id, n: self.n });
            }
            g.set_label(id, tag.clone());
        }
        Ok(g)
    }
}

pub fn write_json(g: &MultiGraph) -> String {
    serde_json::to_string(&GraphJson::from_graph(g)).expect("serializable")
}

pub fn read_json(text: &str) -> Result<MultiGraph, FormatError> {
    serde_json::from_str::<GraphJson>(text)?.to_graph()
}

/// Undirected DOT with one edge statement per edge unit.
pub fn write_dot(g: &MultiGraph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        match g.label(v) {
            Some(l) => writeln!(s, "  {v} [label=\"{}\"];", l.replace('"', "\\\"")).unwrap(),
            None => writeln!(s, "  {v};").unwrap(),
        }
    }
    for (u, v, m) in g.edges() {
        for _ in 0..m {
            writeln!(s, "  {u} -- {v};").unwrap();
        }
    }
    s.push_str("}\n");
    s
}

/// JSON if the first non-blank byte is `{`, otherwise graph6 (first line).
pub fn read_graph(bytes: &[u8]) -> Result<MultiGraph, FormatError> {
    let text = String::from_utf8_lossy(bytes);
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        read_json(trimmed)
    } else {
        let line = trimmed.lines().next().unwrap_or("");
        Ok(graph6::parse(line.trim_end().as_bytes())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_edge_json() {
        let g = MultiGraph::from_edges(2, &[(0, 1), (0, 1)], true).unwrap();
        assert_eq!(write_json(&g), r#"{"n":2,"edges":[[0,1,2]]}"#);
        assert_eq!(read_json(&write_json(&g)).unwrap(), g);
    }

    #[test]
    fn labels_round_trip() {
        let mut g = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (1, 2)], true).unwrap();
        g.set_label(2, "P_a:1");
        let text = write_json(&g);
        assert!(text.contains(r#""labels":{"2":"P_a:1"}"#));
        assert_eq!(read_json(&text).unwrap(), g);
    }

    #[test]
    fn dot_statements() {
        let t = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)], false).unwrap();
        assert_eq!(write_dot(&t).matches(" -- ").count(), 3);
        let d = MultiGraph::from_edges(2, &[(0, 1), (0, 1)], true).unwrap();
        assert_eq!(write_dot(&d).matches(" -- ").count(), 2);
    }

    #[test]
    fn sniffing() {
        assert_eq!(read_graph(b"C~\n").unwrap().edge_count(), 6);
        assert_eq!(read_graph(br#" {"n":3,"edges":[[0,1,1]]}"#).unwrap().edge_count(), 1);
        assert!(read_graph(b"{oops").is_err());
        assert!(read_json(r#"{"n":2,"edges":[[0,0,1]]}"#).is_err());
    }
}
