//! Permutation oracle: independent of the backtracking engine.

use alloc::vec;

use super::HamiltonError;
use crate::graph::MultiGraph;

pub const BRUTE_FORCE_MAX_N: usize = 11;

/// Sums, over all vertex orders starting at vertex 0, the product of the
/// multiplicities of consecutive pairs (closing pair included), then halves
/// for the two orientations.
pub fn brute_force_count(g: &MultiGraph) -> Result<u128, HamiltonError> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(HamiltonError::TooLarge { n, max: BRUTE_FORCE_MAX_N });
    }
    if n < 3 {
        return Ok(0);
    }
    let mut order = vec![0usize; n];
    let mut used = vec![false; n];
    used[0] = true;
    let total = extend(g, &mut order, &mut used, 1, 1);
    Ok(total / 2)
}

fn extend(g: &MultiGraph, order: &mut [usize], used: &mut [bool], len: usize, weight: u128) -> u128 {
    let n = order.len();
    if len == n {
        return weight * g.multiplicity(order[n - 1], order[0]) as u128;
    }
    let mut sum = 0;
    for v in 1..n {
        if used[v] {
            continue;
        }
        let m = g.multiplicity(order[len - 1], v) as u128;
        if m == 0 {
            continue;
        }
        used[v] = true;
        order[len] = v;
        sum += extend(g, order, used, len + 1, weight * m);
        used[v] = false;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog;

    #[test]
    fn oracle_values() {
        assert_eq!(brute_force_count(&catalog::complete(4)).unwrap(), 3);
        assert_eq!(brute_force_count(&catalog::complete(5)).unwrap(), 12);
        assert_eq!(brute_force_count(&catalog::complete_bipartite(3, 3)).unwrap(), 6);
        let t = MultiGraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (2, 0)], true).unwrap();
        assert_eq!(brute_force_count(&t).unwrap(), 2);
        assert!(matches!(
            brute_force_count(&catalog::cycle(12)),
            Err(HamiltonError::TooLarge { n: 12, max: 11 })
        ));
    }
}
