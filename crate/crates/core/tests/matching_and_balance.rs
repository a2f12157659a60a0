mod common;

use common::{
    all_cycles_balanced, arb_gain_graph, simple_cycles, subset_matching_number, walk_gain,
};
use gainspec::gain::{BalanceCertificate, GainGraph, SwitchingFunction, BALANCE_TOLERANCE};
use gainspec::graph::{self, Graph, NamedGraph};
use gainspec::matching::{has_perfect_matching, matching_oracle, maximum_matching};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn assert_matching(g: &Graph) {
    let m = maximum_matching(g);
    let mut used = vec![false; g.n()];
    for &(u, v) in &m.matched_edges {
        assert!(u < v && g.has_edge(u, v));
        assert!(!used[u] && !used[v], "{g:?}");
        used[u] = true;
        used[v] = true;
    }
    let oracle = subset_matching_number(g);
    assert_eq!(m.mu, oracle, "{g:?}");
    assert_eq!(matching_oracle(g).unwrap(), oracle, "{g:?}");
    assert_eq!(has_perfect_matching(g), 2 * oracle == g.n());
}

#[test]
fn blossom_matches_subset_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..1500 {
        let n = rng.random_range(0..=12);
        let p = rng.random_range(0.05..0.9);
        assert_matching(&graph::gnp(n, p, &mut rng));
    }
}

#[test]
fn blossom_on_named_and_structured_graphs() {
    for g in [
        NamedGraph::Petersen,
        NamedGraph::C6Tilde,
        NamedGraph::Complete(9),
        NamedGraph::Cycle(11),
        NamedGraph::Star(7),
        NamedGraph::CompleteBipartite(3, 7),
    ] {
        assert_matching(&g.build().unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=12 {
        assert_matching(&graph::random_tree(n, &mut rng));
    }
    // odd cycles joined by a bridge, then a pendant on each: blossoms on both sides
    let c3 = NamedGraph::Cycle(3).build().unwrap();
    let c5 = NamedGraph::Cycle(5).build().unwrap();
    let mut g = c3.disjoint_union(&c5).disjoint_union(&Graph::empty(2));
    g.add_edge(0, 3).unwrap();
    g.add_edge(1, 8).unwrap();
    g.add_edge(5, 9).unwrap();
    assert_matching(&g);
    assert_eq!(maximum_matching(&g).mu, 5);
}

#[test]
fn balance_matches_cycle_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut balanced_seen = 0;
    for i in 0..600 {
        let n = rng.random_range(1..=8);
        let g = graph::gnp(n, rng.random_range(0.2..0.9), &mut rng);
        let phi = match i % 3 {
            0 => GainGraph::random_gains(g, &mut rng),
            1 => {
                let zeta = SwitchingFunction::random(n, &mut rng);
                GainGraph::all_ones(g).switch(&zeta).unwrap()
            }
            // {±1} gains: balanced only when every cycle has an even number of -1
            _ => {
                let edges: Vec<_> = g
                    .edges()
                    .map(|(u, v)| {
                        (
                            u,
                            v,
                            if rng.random_bool(0.2) {
                                common::unit(std::f64::consts::PI)
                            } else {
                                common::unit(0.0)
                            },
                        )
                    })
                    .collect();
                GainGraph::from_gains(n, &edges).unwrap()
            }
        };
        let cert = phi.balance();
        assert_eq!(
            cert.is_balanced(),
            all_cycles_balanced(&phi, BALANCE_TOLERANCE),
            "{phi:?}"
        );
        assert!(cert.verify(&phi));
        match cert {
            BalanceCertificate::Balanced { switching } => {
                balanced_seen += 1;
                let switched = phi.switch(&switching).unwrap();
                for (_, _, z) in switched.gained_edges() {
                    assert!((z.to_complex() - 1.0).norm() <= BALANCE_TOLERANCE);
                }
            }
            BalanceCertificate::Unbalanced { cycle, gain } => {
                let closed = &cycle[..cycle.len() - 1];
                assert!(closed.len() >= 3);
                let mut distinct = closed.to_vec();
                distinct.sort_unstable();
                distinct.dedup();
                assert_eq!(
                    distinct.len(),
                    closed.len(),
                    "witness is not a simple cycle"
                );
                let z = walk_gain(&phi, closed);
                assert!((z - gain.to_complex()).norm() < 1e-9);
                assert!((z - 1.0).norm() > BALANCE_TOLERANCE);
            }
        }
    }
    assert!(balanced_seen > 100);
}

#[test]
fn cycle_oracle_counts() {
    // K4 has 7 cycles, each listed in both directions
    assert_eq!(
        simple_cycles(&NamedGraph::Complete(4).build().unwrap()).len(),
        14
    );
    assert_eq!(
        simple_cycles(&NamedGraph::Cycle(6).build().unwrap()).len(),
        2
    );
    assert!(!simple_cycles(&NamedGraph::Petersen.build().unwrap()).is_empty());
    assert!(simple_cycles(&graph::random_tree(8, &mut ChaCha8Rng::seed_from_u64(1))).is_empty());
}

proptest! {
    #[test]
    fn forests_are_balanced(n in 1usize..12, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = GainGraph::random_gains(graph::random_tree(n, &mut rng), &mut rng);
        prop_assert!(phi.is_balanced());
    }

    #[test]
    fn balance_is_switching_invariant(phi in arb_gain_graph(8), seed in any::<u64>()) {
        let zeta = SwitchingFunction::random(phi.n(), &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(phi.is_balanced(), phi.switch(&zeta).unwrap().is_balanced());
    }

    #[test]
    fn matching_number_is_additive_over_unions(a in arb_gain_graph(6), b in arb_gain_graph(6)) {
        let u = a.disjoint_union(&b);
        let (ma, mb) = (maximum_matching(a.graph()).mu, maximum_matching(b.graph()).mu);
        prop_assert_eq!(maximum_matching(u.graph()).mu, ma + mb);
    }
}
