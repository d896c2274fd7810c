//! Rings of identical blocks.

use alloc::vec::Vec;

use crate::graph::{GraphError, MultiGraph, VertexId};

/// One block of a ring and how consecutive blocks are wired: each link
/// `(out, inn)` joins `out` in block `i` to `inn` in block `i + 1 mod m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTemplate {
    pub block: MultiGraph,
    pub links: Vec<(VertexId, VertexId)>,
    pub min_m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("figure transcription required: no block template is configured")]
    TranscriptionRequired,
    #[error("ring needs at least {min} blocks, got {m}")]
    TooFewBlocks { m: usize, min: usize },
    #[error("link endpoint {0} is outside the block")]
    BadLink(VertexId),
    #[error("block vertex {v} ends with degree {degree}, expected 4")]
    NotQuartic { v: VertexId, degree: u32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `m` copies of the template's block chained into a ring. Block `i`
/// occupies ids `i*k..(i+1)*k`. The result must be 4-regular.
pub fn block_ring(template: Option<&BlockTemplate>, m: usize) -> Result<MultiGraph, RingError> {
    let t = template.ok_or(RingError::TranscriptionRequired)?;
    if m < t.min_m.max(1) {
        return Err(RingError::TooFewBlocks { m, min: t.min_m.max(1) });
    }
    let k = t.block.n();
    if let Some(&(x, y)) = t.links.iter().find(|&&(x, y)| x >= k || y >= k) {
        return Err(RingError::BadLink(if x >= k { x } else { y }));
    }
    let mut g = MultiGraph::empty(k * m);
    for i in 0..m {
        for (u, v, mult) in t.block.edges() {
            for _ in 0..mult {
                g.add_edge(i * k + u, i * k + v)?;
            }
        }
        let next = (i + 1) % m;
        for &(out, inn) in &t.links {
            g.add_edge(i * k + out, next * k + inn)?;
        }
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 4) {
        return Err(RingError::NotQuartic { v: v % k, degree: g.degree(v) });
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::hamilton::{count_hamiltonian_cycles, CountOptions};

    #[test]
    fn missing_template() {
        assert_eq!(block_ring(None, 3), Err(RingError::TranscriptionRequired));
    }

    #[test]
    fn complete_links() {
        // Each vertex links to both vertices of the next block.
        let t = BlockTemplate { block: MultiGraph::empty(2), links: vec![(0, 0), (0, 1), (1, 1), (1, 0)], min_m: 3 };
        let g = block_ring(Some(&t), 3).unwrap();
        assert!(g.is_regular(4));
        assert_eq!(block_ring(Some(&t), 2), Err(RingError::TooFewBlocks { m: 2, min: 3 }));
        let bad = BlockTemplate { links: vec![(0, 2)], ..t.clone() };
        assert_eq!(block_ring(Some(&bad), 3), Err(RingError::BadLink(2)));
        let short = BlockTemplate { links: vec![(0, 1)], ..t };
        assert!(matches!(block_ring(Some(&short), 3), Err(RingError::NotQuartic { .. })));
    }

    #[test]
    fn ring_counts_are_finite() {
        let t = BlockTemplate { block: MultiGraph::from_edges(2, &[(0, 1)], false).unwrap(), links: vec![(0, 0), (1, 1), (0, 1)], min_m: 3 };
        let g = block_ring(Some(&t), 4).unwrap();
        assert_eq!(g.n(), 8);
        assert!(count_hamiltonian_cycles(&g, &CountOptions::default()).count > 0);
    }
}
