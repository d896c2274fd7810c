use proptest::prelude::*;
use quartic_core::connectivity::{edge_connectivity, oracle_connectivity, vertex_connectivity, Mode};
use quartic_core::constructions::{catalog, double_one_factor, perfect_matchings, petersen, triangle_family};
use quartic_core::hamilton::{brute_force_count, count_hamiltonian_cycles, frontier, CountOptions};
use quartic_core::MultiGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_multigraph(rng: &mut impl Rng, max_n: usize) -> MultiGraph {
    let n = rng.gen_range(3..=max_n);
    let p = rng.gen_range(0.3..0.95);
    let mut triples = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                triples.push((u, v, rng.gen_range(1..=3)));
            }
        }
    }
    MultiGraph::from_multiplicities(n, &triples).unwrap()
}

fn catalog() -> Vec<MultiGraph> {
    let p = petersen();
    let m = perfect_matchings(&p).remove(0);
    let mut out = vec![
        catalog::complete(3),
        catalog::complete(4),
        catalog::complete(5),
        catalog::complete(6),
        catalog::complete_bipartite(3, 3),
        catalog::complete_bipartite(3, 4),
        catalog::complete_bipartite(4, 4),
        catalog::prism(),
        catalog::path(6),
        p.clone(),
        double_one_factor(&p, &m).unwrap(),
        triangle_family(2),
    ];
    out.extend((3..=12).map(catalog::cycle));
    out
}

#[test]
fn counter_matches_permutation_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(91);
    let mut graphs: Vec<MultiGraph> = (0..250).map(|_| random_multigraph(&mut rng, 9)).collect();
    graphs.extend(catalog().into_iter().filter(|g| g.n() <= 10));
    let mut nonzero = 0;
    for g in &graphs {
        let expected = brute_force_count(g).unwrap();
        let got = count_hamiltonian_cycles(g, &CountOptions::default());
        assert!(!got.budget_exhausted);
        assert_eq!(got.count, expected, "{:?}", g.edges());
        assert_eq!(frontier::count(g, None).unwrap().count, expected, "{:?}", g.edges());
        nonzero += (expected > 0) as usize;
    }
    assert!(nonzero > 50);
}

#[test]
fn connectivity_matches_cut_oracle() {
    for g in catalog().iter().filter(|g| g.n() <= 12) {
        let e = edge_connectivity(g);
        assert_eq!(e.value, oracle_connectivity(g, Mode::Edge).unwrap(), "{:?}", g.edges());
        if g.is_simple() {
            let v = vertex_connectivity(g).unwrap();
            assert_eq!(v.value, oracle_connectivity(g, Mode::Vertex).unwrap(), "{:?}", g.edges());
        }
    }
}

#[test]
fn doubled_matchings_are_four_edge_connected() {
    let p = petersen();
    for m in perfect_matchings(&p) {
        let d = double_one_factor(&p, &m).unwrap();
        assert_eq!(edge_connectivity(&d).value, 4);
        assert_eq!(oracle_connectivity(&d, Mode::Edge).unwrap(), 4);
        assert_eq!(count_hamiltonian_cycles(&d, &CountOptions::default()).count, 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelling_preserves_counts(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_multigraph(&mut rng, 8);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let triples: Vec<_> = g.edges().into_iter().map(|(u, v, m)| (perm[u], perm[v], m)).collect();
        let h = MultiGraph::from_multiplicities(g.n(), &triples).unwrap();
        let opts = CountOptions::default();
        prop_assert_eq!(count_hamiltonian_cycles(&g, &opts).count, count_hamiltonian_cycles(&h, &opts).count);
        prop_assert_eq!(edge_connectivity(&g).value, edge_connectivity(&h).value);
    }

    #[test]
    fn connectivity_ordering(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_multigraph(&mut rng, 9).simplified();
        let v = vertex_connectivity(&g).unwrap().value;
        let e = edge_connectivity(&g).value;
        prop_assert!(v <= e && e <= g.min_degree());
    }
}
