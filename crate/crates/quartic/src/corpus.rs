//! Seeded random graph corpora.

use quartic_core::MultiGraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 20_240_417;

/// Uniform-ish random simple `d`-regular graph on `n` vertices by the
/// pairing model with rejection; `None` if no attempt succeeds.
pub fn random_regular(n: usize, d: usize, rng: &mut impl Rng) -> Option<MultiGraph> {
    if n * d % 2 == 1 || d >= n {
        return None;
    }
    for _ in 0..10_000 {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
        points.shuffle(rng);
        let pairs: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = MultiGraph::from_edges(n, &pairs, false) {
            return Some(g);
        }
    }
    None
}

/// Connected random simple `d`-regular graphs with `n` drawn from `sizes`.
pub fn regular_corpus(count: usize, d: usize, sizes: &[usize], seed: u64) -> Vec<MultiGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = *sizes.choose(&mut rng).expect("sizes");
        if let Some(g) = random_regular(n, d, &mut rng) {
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

/// Random loopless multigraph: each pair independently gets multiplicity
/// 0 with probability `1 - p`, else 1 or 2.
pub fn random_multigraph(n: usize, p: f64, rng: &mut impl Rng) -> MultiGraph {
    let mut triples = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                triples.push((u, v, if rng.gen_bool(0.25) { 2 } else { 1 }));
            }
        }
    }
    MultiGraph::from_multiplicities(n, &triples).expect("valid pairs")
}

/// `count` random multigraphs with `3 <= n <= max_n` and varied density.
pub fn multigraph_corpus(count: usize, max_n: usize, seed: u64) -> Vec<MultiGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(3..=max_n);
            let p = rng.gen_range(0.3..0.9);
            random_multigraph(n, p, &mut rng)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_and_seeded() {
        let a = regular_corpus(5, 3, &[8, 10, 12], 7);
        let b = regular_corpus(5, 3, &[8, 10, 12], 7);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| g.is_regular(3) && g.is_simple() && g.is_connected()));
        let five = regular_corpus(3, 5, &[10, 12], 1);
        assert!(five.iter().all(|g| g.is_regular(5)));
    }

    #[test]
    fn multigraphs_vary() {
        let c = multigraph_corpus(50, 9, 3);
        assert!(c.iter().any(|g| !g.is_simple()));
        assert!(c.iter().all(|g| g.n() >= 3 && g.n() <= 9));
    }
}
