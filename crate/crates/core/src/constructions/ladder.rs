//! Choosing a ladder pattern by certification over a probe range.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::assembly::{assemble_hg, missing_path_edges, FamilyParams, LadderPattern};
use super::gadget::GadgetSpec;
use crate::graph::VertexId;
use crate::hamilton::{count_hamiltonian_cycles, CountOptions};

/// Outcome of one pattern on the probe range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternTrial {
    pub pattern: String,
    /// Count per probe value; `None` where assembly failed or the budget ran
    /// out.
    pub counts: Vec<(usize, Option<u128>)>,
    /// Enumerated cycles missing some connector path edge, over all probes.
    pub stray_cycles: u128,
    pub errors: Vec<String>,
}

impl PatternTrial {
    fn complete(&self) -> bool {
        self.counts.iter().all(|c| c.1.is_some())
    }

    pub fn qualifies(&self) -> bool {
        let first = self.counts.first().and_then(|c| c.1);
        self.complete()
            && self.stray_cycles == 0
            && first.is_some_and(|c| c > 0)
            && self.counts.iter().all(|c| c.1 == first)
    }

    /// Largest count over smallest, `None` unless every count is positive.
    fn spread(&self) -> Option<(u128, u128)> {
        let counts: Vec<u128> = self.counts.iter().map(|c| c.1).collect::<Option<_>>()?;
        let lo = *counts.iter().min()?;
        let hi = *counts.iter().max()?;
        (lo > 0).then_some((hi, lo))
    }
}

/// Closest pattern for one criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearMiss {
    pub criterion: &'static str,
    pub pattern: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SynthesisError {
    #[error("probe range must hold at least three consecutive values, got {0:?}")]
    ProbeRange(Vec<usize>),
    #[error("no pattern among {} qualifies", .trials.len())]
    NoPattern { trials: Vec<PatternTrial>, near_misses: Vec<NearMiss> },
}

/// Runs one pattern on every probe value.
pub fn try_pattern(spec: &GadgetSpec, pattern: &LadderPattern, probe: &[usize], max_nodes: Option<u64>) -> PatternTrial {
    let mut trial = PatternTrial { pattern: pattern.name.clone(), counts: Vec::new(), stray_cycles: 0, errors: Vec::new() };
    for &ell in probe {
        let params = FamilyParams { ell, pattern: pattern.clone() };
        let h = match assemble_hg(spec, &params) {
            Ok(h) => h,
            Err(e) => {
                trial.errors.push(format!("l={ell}: {e}"));
                trial.counts.push((ell, None));
                continue;
            }
        };
        let rep = count_hamiltonian_cycles(&h.graph, &CountOptions { retain: true, max_nodes, ..Default::default() });
        if rep.budget_exhausted {
            trial.errors.push(format!("l={ell}: node budget exhausted"));
            trial.counts.push((ell, None));
            continue;
        }
        for cycle in rep.cycles.unwrap_or_default() {
            let pairs: Vec<(VertexId, VertexId)> = cycle.edges.iter().map(|e| (e.u, e.v)).collect();
            if !missing_path_edges(&h.paths, &pairs).is_empty() {
                trial.stray_cycles += 1;
            }
        }
        trial.counts.push((ell, Some(rep.count)));
    }
    trial
}

/// First pattern of `family` that assembles for every probe value, whose
/// cycles all run through the four connector paths, and whose count is one
/// positive constant.
pub fn synthesize_ladder_pattern(
    spec: &GadgetSpec,
    probe: &[usize],
    family: &[LadderPattern],
    max_nodes: Option<u64>,
) -> Result<(LadderPattern, Vec<PatternTrial>), SynthesisError> {
    if probe.len() < 3 || probe.windows(2).any(|w| w[1] != w[0] + 1) {
        return Err(SynthesisError::ProbeRange(probe.to_vec()));
    }
    let mut trials = Vec::new();
    for pattern in family {
        let trial = try_pattern(spec, pattern, probe, max_nodes);
        let ok = trial.qualifies();
        trials.push(trial);
        if ok {
            return Ok((pattern.clone(), trials));
        }
    }
    let near_misses = near_misses(&trials);
    Err(SynthesisError::NoPattern { trials, near_misses })
}

fn near_misses(trials: &[PatternTrial]) -> Vec<NearMiss> {
    let mut out = Vec::new();
    if let Some(t) = trials.iter().max_by_key(|t| (t.counts.iter().filter(|c| c.1.is_some()).count(), core::cmp::Reverse(t.errors.len()))) {
        let done = t.counts.iter().filter(|c| c.1.is_some()).count();
        out.push(NearMiss { criterion: "assembly", pattern: t.pattern.clone(), detail: format!("{done} of {} probes", t.counts.len()) });
    }
    if let Some(t) = trials.iter().filter(|t| t.complete()).min_by_key(|t| t.stray_cycles) {
        out.push(NearMiss {
            criterion: "path containment",
            pattern: t.pattern.clone(),
            detail: format!("{} cycles miss a connector path edge", t.stray_cycles),
        });
    }
    // Compare hi/lo ratios by cross-multiplication.
    let best = trials.iter().filter_map(|t| t.spread().map(|s| (t, s))).min_by(|(_, a), (_, b)| {
        (a.0.saturating_mul(b.1)).cmp(&b.0.saturating_mul(a.1))
    });
    if let Some((t, _)) = best {
        out.push(NearMiss { criterion: "constancy", pattern: t.pattern.clone(), detail: format!("counts {:?}", t.counts) });
    }
    out
}
