mod common;

use grundy_core::generators::{cycle, petersen, random_connected, random_tree};
use grundy_core::graph::{bfs_ball, clique_blowup, degree_profile, girth, is_block_graph, BlockCutTree};
use grundy_core::{Girth, Graph};
use proptest::prelude::*;

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (3usize..=10, 0usize..=6, any::<u64>()).prop_map(|(n, extra, seed)| random_connected(n, extra, seed))
}

#[test]
fn petersen_girth_and_diameter() {
    assert_eq!(common::shortest_cycle_by_enumeration(&petersen()), Some(5));
    assert_eq!(girth(&petersen()), Girth::Finite(5));
    for u in 0..10 {
        assert_eq!(bfs_ball(&petersen(), u, 2).len(), 10);
    }
}

#[test]
fn path_ball() {
    let b = bfs_ball(&grundy_core::generators::path(5), 2, 1);
    let mut vs = b.vertices.clone();
    vs.sort();
    assert_eq!(vs, vec![1, 2, 3]);
}

proptest! {
    #![proptest_config(common::config(300))]

    #[test]
    fn girth_matches_cycle_enumeration(g in graph_strategy()) {
        let expected = match common::shortest_cycle_by_enumeration(&g) {
            Some(l) => Girth::Finite(l),
            None => Girth::Infinite,
        };
        prop_assert_eq!(girth(&g), expected);
    }

    #[test]
    fn blocks_cover_edges_once(g in graph_strategy()) {
        let bct = BlockCutTree::new(&g).unwrap();
        for (u, v) in g.edges() {
            let holders = bct.blocks.iter().filter(|b| b.contains(&u) && b.contains(&v)).count();
            prop_assert_eq!(holders, 1);
        }
        for (i, a) in bct.blocks.iter().enumerate() {
            for b in &bct.blocks[i + 1..] {
                let common: Vec<_> = a.iter().filter(|x| b.contains(x)).collect();
                prop_assert!(common.len() <= 1);
                if let Some(&&x) = common.first() {
                    prop_assert!(bct.is_cut_vertex(x));
                }
            }
        }
        for &c in &bct.cut_vertices {
            let count = bct.blocks.iter().filter(|b| b.contains(&c)).count();
            prop_assert_eq!(bct.block_degree(c), count);
            prop_assert_eq!(bct.incidence.iter().filter(|(v, _)| *v == c).count(), count);
        }
    }

    #[test]
    fn block_size_sum(g in graph_strategy()) {
        let bct = BlockCutTree::new(&g).unwrap();
        let sum: usize = bct.blocks.iter().map(|b| b.len() - 1).sum();
        prop_assert_eq!(sum, g.n() - 1);
        let all_edges = bct.blocks.iter().all(|b| b.len() == 2);
        prop_assert_eq!(all_edges, g.is_tree());
    }

    #[test]
    fn blowup_is_idempotent_block_graph(g in graph_strategy()) {
        let b = clique_blowup(&g);
        prop_assert!(is_block_graph(&b));
        prop_assert_eq!(clique_blowup(&b), b.clone());
        prop_assert_eq!(b.n(), g.n());
        if is_block_graph(&g) {
            prop_assert_eq!(b, g);
        }
    }

    #[test]
    fn degree_profile_definition(g in graph_strategy()) {
        let p = degree_profile(&g);
        prop_assert!(p.delta2 <= p.max_degree);
        for u in g.vertices() {
            prop_assert!(p.local[u] <= p.degree[u]);
            for &v in g.neighbors(u) {
                if p.degree[v] <= p.degree[u] {
                    prop_assert!(p.degree[v] <= p.local[u]);
                }
            }
        }
    }

    #[test]
    fn ball_levels_are_distances(g in graph_strategy(), r in 0usize..4) {
        let u = 0;
        let ball = bfs_ball(&g, u, r);
        let all = bfs_ball(&g, u, g.n());
        for (i, &v) in ball.vertices.iter().enumerate() {
            prop_assert_eq!(Some(ball.level[i]), all.level_of(v));
            prop_assert!(ball.level[i] <= r);
        }
        prop_assert_eq!(ball.len(), all.level.iter().filter(|&&l| l <= r).count());
        for &x in &ball.vertices {
            for &y in g.neighbors(x) {
                if let (Some(a), Some(b)) = (ball.level_of(x), ball.level_of(y)) {
                    prop_assert!(a.abs_diff(b) <= 1);
                }
            }
        }
    }

    #[test]
    fn trees_are_block_graphs(n in 1usize..30, seed in any::<u64>()) {
        let t = random_tree(n, seed);
        prop_assert!(is_block_graph(&t));
        prop_assert_eq!(girth(&t), Girth::Infinite);
    }
}

#[test]
fn cycles_are_not_block_graphs() {
    assert!(!is_block_graph(&cycle(4)));
}
