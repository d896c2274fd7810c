//! The JSON run report shared by every command.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use quartic_core::verify::{CertificationReport, Clock, Witness};
use quartic_core::MultiGraph;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: u64,
    /// Common degree if the graph is regular.
    pub regular: Option<u32>,
    pub simple: bool,
}

impl GraphSummary {
    pub fn of(g: &MultiGraph) -> Self {
        GraphSummary { n: g.n(), edges: g.edge_count(), regular: g.regular_degree(), simple: g.is_simple() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub pass: bool,
    pub witness: Option<Value>,
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Results {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ham_count: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget_exhausted: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_connectivity: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_connectivity: Option<u32>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub checks: BTreeMap<String, CheckEntry>,
    /// Measured counts keyed by `"{name} l={ell}"`.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub constants: BTreeMap<String, u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub overall: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub nodes_expanded: Option<u64>,
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub schema: u32,
    pub command: String,
    pub input_sha: Option<String>,
    pub graph: Option<GraphSummary>,
    pub results: Results,
    pub stats: Stats,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            version: env!("CARGO_PKG_VERSION").into(),
            schema: SCHEMA_VERSION,
            command: command.into(),
            input_sha: None,
            graph: None,
            results: Results::default(),
            stats: Stats::default(),
        }
    }

    pub fn with_graph(mut self, g: &MultiGraph) -> Self {
        self.graph = Some(GraphSummary::of(g));
        self
    }

    pub fn with_input(mut self, bytes: &[u8]) -> Self {
        self.input_sha = Some(sha256_hex(bytes));
        self
    }

    pub fn absorb(&mut self, report: &CertificationReport) {
        for c in &report.checks {
            self.results.checks.insert(
                c.name.clone(),
                CheckEntry {
                    pass: c.pass,
                    witness: c.witness.as_ref().map(witness_json),
                    elapsed_ms: c.elapsed.map(ms),
                },
            );
        }
        for k in &report.constants {
            self.results.constants.insert(format!("{} l={}", k.name, k.ell), k.count);
        }
        let prior = self.results.overall.unwrap_or(true);
        self.results.overall = Some(prior && report.overall());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// The report with every timing removed, for byte comparisons.
    pub fn canonical(&self) -> String {
        let mut r = self.clone();
        r.stats.elapsed_ms = None;
        for c in r.results.checks.values_mut() {
            c.elapsed_ms = None;
        }
        r.to_json()
    }
}

/// Monotonic clock for per-check timings.
pub struct SystemClock(Instant);

impl SystemClock {
    pub fn new() -> Self {
        SystemClock(Instant::now())
    }
}

impl Default for SystemClock {
    fn default() -> Self {
        Self::new()
    }
}

impl Clock for SystemClock {
    fn now(&self) -> Option<Duration> {
        Some(self.0.elapsed())
    }
}

pub fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Degree { vertex, degree } => json!({"degree": {"vertex": vertex, "degree": degree}}),
        Witness::EdgeCut(cut) => json!({"edge_cut": cut.iter().map(|e| [e.u, e.v, e.copy as usize]).collect::<Vec<_>>()}),
        Witness::VertexCut(cut) => json!({ "vertex_cut": cut }),
        Witness::Cycle(seq) => json!({ "cycle": seq }),
        Witness::Path { deleted, path } => json!({"path": path, "deleted": deleted}),
        Witness::Factor(cycles) => json!({ "two_factor": cycles }),
        Witness::Counts(c) => json!({"counts": c.iter().map(|(l, n)| json!({"ell": l, "count": n})).collect::<Vec<_>>()}),
        Witness::Mismatch { left, right } => json!({"mismatch": [
            {"ell": left.0, "count": left.1},
            {"ell": right.0, "count": right.1}
        ]}),
        Witness::Graph6(s) => json!({ "graph6": s }),
        Witness::Note(s) => json!({ "note": s }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use quartic_core::verify::Check;

    #[test]
    fn canonical_drops_timings() {
        let mut a = RunReport::new("count").with_input(b"C~");
        a.stats.elapsed_ms = Some(1.5);
        let mut b = a.clone();
        b.stats.elapsed_ms = Some(99.0);
        assert_ne!(a.to_json(), b.to_json());
        assert_eq!(a.canonical(), b.canonical());
        assert_eq!(a.input_sha.as_deref().map(str::len), Some(64));
    }

    #[test]
    fn absorb_checks() {
        let cert = CertificationReport {
            checks: vec![Check { name: "x".into(), pass: false, witness: Some(Witness::Cycle(vec![0, 1, 2])), elapsed: None }],
            constants: vec![],
        };
        let mut r = RunReport::new("verify");
        r.absorb(&cert);
        assert_eq!(r.results.overall, Some(false));
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["results"]["checks"]["x"]["witness"]["cycle"], json!([0, 1, 2]));
        assert_eq!(v["schema"], json!(SCHEMA_VERSION));
    }
}
