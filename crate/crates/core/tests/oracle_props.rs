mod common;

use grundy_core::generators::{complete, path, random_block_graph, random_connected, random_tree, star};
use grundy_core::graph::{degree_profile, BlockCutTree};
use grundy_core::oracle::{first_fit, is_grundy_coloring, Oracle};
use grundy_core::Graph;
use proptest::prelude::*;
use proptest::sample::subsequence;

#[test]
fn spectra_examples() {
    let o = Oracle::default();
    let p3 = path(3);
    assert_eq!(o.color_spectrum(&p3, 1).unwrap().achievable.into_iter().collect::<Vec<_>>(), vec![1, 2]);
    for n in 1..=6 {
        assert_eq!(o.brute_force_gamma_at(&complete(n), 0).unwrap(), n);
    }
    let s = o.color_spectrum(&star(3), 0).unwrap();
    assert_eq!(s.achievable.into_iter().collect::<Vec<_>>(), vec![1, 2]);
}

#[test]
fn checker_examples() {
    let p3 = path(3);
    assert!(is_grundy_coloring(&p3, &[1, 2, 1]));
    assert!(!is_grundy_coloring(&p3, &[1, 3, 1]));
}

#[test]
fn generators_are_deterministic() {
    assert_eq!(random_tree(6, 1), random_tree(6, 1));
    assert_eq!(random_block_graph(9, 4, 3).unwrap(), random_block_graph(9, 4, 3).unwrap());
}

fn order_strategy() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (1usize..=12, 0usize..=10, any::<u64>()).prop_flat_map(|(n, extra, seed)| {
        let g = random_connected(n, extra, seed);
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(common::config(1000))]

    #[test]
    fn first_fit_output_is_grundy((g, order) in order_strategy()) {
        let c = first_fit(&g, &order).unwrap();
        prop_assert!(is_grundy_coloring(&g, c.colors()));
    }
}

proptest! {
    #![proptest_config(common::config(120))]

    #[test]
    fn gamma_between_omega_and_delta2((n, seed) in (2usize..=9, any::<u64>())) {
        let g = random_block_graph(n, 4, seed).unwrap();
        let gamma = Oracle::default().brute_force_gamma(&g).unwrap();
        prop_assert!(gamma <= degree_profile(&g).delta2 + 1);
        prop_assert!(gamma >= BlockCutTree::new(&g).unwrap().max_block_size());
        let h = random_connected(n, 3, seed);
        prop_assert!(Oracle::default().brute_force_gamma(&h).unwrap() <= degree_profile(&h).delta2 + 1);
    }

    #[test]
    fn spectra_are_prefixes((n, extra, seed) in (1usize..=8, 0usize..=6, any::<u64>())) {
        let g = random_connected(n, extra, seed);
        let o = Oracle::default();
        for s in o.spectra(&g).unwrap() {
            prop_assert!(s.is_prefix());
            prop_assert_eq!(s.max(), o.brute_force_gamma_at(&g, s.vertex).unwrap());
        }
    }

    #[test]
    fn induced_subgraphs_do_not_raise_gamma(
        (g, keep) in (2usize..=8, 0usize..=6, any::<u64>())
            .prop_map(|(n, e, s)| random_connected(n, e, s))
            .prop_flat_map(|g| { let n = g.n(); (Just(g), subsequence((0..n).collect::<Vec<_>>(), 1..=n)) })
    ) {
        let o = Oracle::default();
        let sub = g.induced_subgraph(&keep);
        prop_assert!(o.brute_force_gamma(&sub).unwrap() <= o.brute_force_gamma(&g).unwrap());
    }
}

#[test]
fn best_ordering_realizes_gamma() {
    for g in common::small_corpus(8) {
        let (gamma, order) = Oracle::default().best_ordering(&g).unwrap();
        assert_eq!(first_fit(&g, &order).unwrap().num_colors(), gamma);
    }
}
