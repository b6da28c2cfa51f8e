#![allow(dead_code)]

use grundy_core::generators::{cycle, path, random_block_graph, random_connected, random_tree, star};
use grundy_core::Graph;
use proptest::test_runner::{Config, RngSeed};

/// Deterministic proptest configuration.
pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x6772_756e_6479),
        failure_persistence: None,
        ..Config::default()
    }
}

/// Small connected graphs of every kind used by the oracle comparisons.
pub fn small_corpus(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        out.push(cycle(n));
        out.push(path(n));
        out.push(star(n - 1));
        out.push(grundy_core::generators::complete(n));
    }
    for seed in 0..20 {
        let n = 4 + (seed as usize % (max_n - 3));
        out.push(random_tree(n, seed));
        out.push(random_block_graph(n, 4, seed).unwrap());
        out.push(random_connected(n, 1 + seed as usize % 4, seed));
    }
    out
}

/// Length of a shortest cycle by enumerating simple paths; `None` for forests.
pub fn shortest_cycle_by_enumeration(g: &Graph) -> Option<usize> {
    fn dfs(g: &Graph, s: usize, v: usize, len: usize, on: &mut Vec<bool>, best: &mut Option<usize>) {
        for &x in g.neighbors(v) {
            if x == s && len >= 3 {
                *best = Some(best.map_or(len, |b: usize| b.min(len)));
            } else if x > s && !on[x] {
                on[x] = true;
                dfs(g, s, x, len + 1, on, best);
                on[x] = false;
            }
        }
    }
    let mut best = None;
    let mut on = vec![false; g.n()];
    for s in g.vertices() {
        on[s] = true;
        dfs(g, s, s, 1, &mut on, &mut best);
        on[s] = false;
    }
    best
}

/// Largest `t` such that `{1..t}` has distinct representatives from prefix
/// lists of the given lengths, by augmenting paths.
pub fn max_prefix_sdr(lengths: &[usize]) -> usize {
    fn augment(c: usize, lengths: &[usize], owner: &mut Vec<Option<usize>>, seen: &mut Vec<bool>) -> bool {
        for i in 0..lengths.len() {
            if lengths[i] >= c && !seen[i] {
                seen[i] = true;
                let free = match owner[i] {
                    None => true,
                    Some(prev) => augment(prev, lengths, owner, seen),
                };
                if free {
                    owner[i] = Some(c);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; lengths.len()];
    let mut t = 0;
    loop {
        let mut seen = vec![false; lengths.len()];
        if !augment(t + 1, lengths, &mut owner, &mut seen) {
            return t;
        }
        t += 1;
    }
}
