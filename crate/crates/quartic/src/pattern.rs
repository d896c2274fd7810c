//! JSON descriptions of ladder patterns, block templates and gadgets.
//!
//! Strand positions are written `P_a[k]` (k steps from the `G` end) or
//! `P_a[-k]` (k steps from the `G'` end), so `P_b[0]` is `b` and `P_a[-0]`
//! is `c'`.
//!
//! ```json
//! {
//!   "name": "example",
//!   "min_ell": 2,
//!   "zigzags": [["P_a", "P_b"], ["P_d", "P_c"]],
//!   "edges": [["P_a[1]", "P_b[0]"]],
//!   "doubled": [["P_d[-1]", "P_d[-0]"]]
//! }
//! ```

use quartic_core::constructions::{At, BlockTemplate, GadgetSpec, LadderPattern, Rung, Strand, StrandPos};
use quartic_core::hamilton::TwoFactor;
use quartic_core::{EdgeRef, VertexId};
use serde::{Deserialize, Serialize};

use crate::io::{FormatError, GraphJson};

#[derive(Debug, thiserror::Error)]
pub enum PatternError {
    #[error("bad strand position {0:?}")]
    Position(String),
    #[error("unknown strand {0:?}")]
    Strand(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("gadget: {0}")]
    Gadget(#[from] quartic_core::constructions::GadgetError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternJson {
    pub name: String,
    pub min_ell: usize,
    #[serde(default)]
    pub zigzags: Vec<[String; 2]>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
    #[serde(default)]
    pub doubled: Vec<[String; 2]>,
}

pub fn parse_position(s: &str) -> Result<StrandPos, PatternError> {
    let bad = || PatternError::Position(s.to_string());
    let (name, rest) = s.split_once('[').ok_or_else(bad)?;
    let inner = rest.strip_suffix(']').ok_or_else(bad)?;
    let strand = Strand::from_name(name).ok_or_else(|| PatternError::Strand(name.to_string()))?;
    let at = match inner.strip_prefix('-') {
        Some(k) => At::End(k.parse().map_err(|_| bad())?),
        None => At::Start(inner.parse().map_err(|_| bad())?),
    };
    Ok(StrandPos { strand, at })
}

fn strand(s: &str) -> Result<Strand, PatternError> {
    Strand::from_name(s).ok_or_else(|| PatternError::Strand(s.to_string()))
}

impl PatternJson {
    pub fn from_pattern(p: &LadderPattern) -> Self {
        let mut out = PatternJson { name: p.name.clone(), min_ell: p.min_ell, zigzags: vec![], edges: vec![], doubled: vec![] };
        for r in &p.rungs {
            match r {
                Rung::Alternate { first, second } => out.zigzags.push([first.name().into(), second.name().into()]),
                Rung::Edge(x, y) => out.edges.push([x.to_string(), y.to_string()]),
                Rung::Double(x, y) => out.doubled.push([x.to_string(), y.to_string()]),
            }
        }
        out
    }

    pub fn to_pattern(&self) -> Result<LadderPattern, PatternError> {
        let mut rungs = Vec::new();
        for [x, y] in &self.zigzags {
            rungs.push(Rung::Alternate { first: strand(x)?, second: strand(y)? });
        }
        for [x, y] in &self.edges {
            rungs.push(Rung::Edge(parse_position(x)?, parse_position(y)?));
        }
        for [x, y] in &self.doubled {
            rungs.push(Rung::Double(parse_position(x)?, parse_position(y)?));
        }
        Ok(LadderPattern { name: self.name.clone(), min_ell: self.min_ell, rungs })
    }
}

pub fn read_pattern(text: &str) -> Result<LadderPattern, PatternError> {
    serde_json::from_str::<PatternJson>(text)?.to_pattern()
}

pub fn write_pattern(p: &LadderPattern) -> String {
    serde_json::to_string_pretty(&PatternJson::from_pattern(p)).expect("serializable")
}

/// `{"block": <graph>, "links": [[out, in], ..], "min_m": 3}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockTemplateJson {
    pub block: GraphJson,
    pub links: Vec<[VertexId; 2]>,
    pub min_m: usize,
}

pub fn read_block_template(text: &str) -> Result<BlockTemplate, PatternError> {
    let t: BlockTemplateJson = serde_json::from_str(text)?;
    Ok(BlockTemplate { block: t.block.to_graph()?, links: t.links.iter().map(|l| (l[0], l[1])).collect(), min_m: t.min_m })
}

/// `{"graph": <graph>, "path": [a, b, c, d], "two_factor": [[u, v, copy], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetJson {
    pub graph: GraphJson,
    pub path: [VertexId; 4],
    pub two_factor: Vec<[usize; 3]>,
}

impl GadgetJson {
    pub fn from_spec(spec: &GadgetSpec) -> Self {
        GadgetJson {
            graph: GraphJson::from_graph(&spec.graph),
            path: spec.path(),
            two_factor: spec.two_factor.edges().iter().map(|e| [e.u, e.v, e.copy as usize]).collect(),
        }
    }

    /// The gadget, structurally validated.
    pub fn to_spec(&self) -> Result<GadgetSpec, PatternError> {
        let graph = self.graph.to_graph()?;
        let edges: Vec<EdgeRef> = self.two_factor.iter().map(|t| EdgeRef::new(t[0], t[1], t[2] as u32)).collect();
        let [a, b, c, d] = self.path;
        let spec = GadgetSpec { two_factor: TwoFactor::from_edges(graph.n(), &edges), graph, a, b, c, d };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn read_gadget(text: &str) -> Result<GadgetSpec, PatternError> {
    serde_json::from_str::<GadgetJson>(text)?.to_spec()
}

pub fn write_gadget(spec: &GadgetSpec) -> String {
    serde_json::to_string(&GadgetJson::from_spec(spec)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use quartic_core::constructions::assembly::zigzag_family;

    #[test]
    fn positions() {
        assert_eq!(parse_position("P_b[0]").unwrap(), StrandPos::start(Strand::B, 0));
        assert_eq!(parse_position("P_a[-0]").unwrap(), StrandPos::end(Strand::A, 0));
        assert_eq!(parse_position("P_d[-12]").unwrap(), StrandPos::end(Strand::D, 12));
        for bad in ["P_a", "P_a[x]", "P_e[1]", "P_a[1", "P_a[--1]"] {
            assert!(parse_position(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn family_round_trips() {
        for mut p in zigzag_family() {
            let mut back = read_pattern(&write_pattern(&p)).unwrap();
            back.rungs.sort();
            p.rungs.sort();
            assert_eq!(back, p);
        }
    }

    proptest! {
        #[test]
        fn position_display_parses(s in 0usize..4, k in 0usize..50, end in any::<bool>()) {
            let pos = StrandPos { strand: Strand::ALL[s], at: if end { At::End(k) } else { At::Start(k) } };
            prop_assert_eq!(parse_position(&pos.to_string()).unwrap(), pos);
        }
    }
}
