//! Deterministic graph generators and fixed fixtures.
//!
//! Random generators take an explicit `u64` seed and draw from ChaCha8
//! (`rand_chacha::ChaCha8Rng::seed_from_u64`), so the same seed yields the
//! same graph on every platform.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GrundyError, Result};
use crate::graph::{degree_profile, girth, Graph, Vertex};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn build(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator edges are valid")
}

/// Path `0 - 1 - … - (n-1)`.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Center 0 with `legs` paths of `leg_len` vertices each.
pub fn spider(legs: usize, leg_len: usize) -> Graph {
    let n = 1 + legs * leg_len;
    let mut edges = Vec::new();
    for l in 0..legs {
        let first = 1 + l * leg_len;
        if leg_len > 0 {
            edges.push((0, first));
        }
        for i in 1..leg_len {
            edges.push((first + i - 1, first + i));
        }
    }
    build(n, edges)
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, edges)
}

/// The `d`-dimensional hypercube.
pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    build(n, (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b))).filter(|(u, w)| u < w)))
}

/// Root of [`figure2_fixture`]: the cut-vertex whose list reaches `{1,…,5}`.
pub const FIGURE2_ROOT: Vertex = 7;

/// Worked block-graph example: triangles `{0,1,2}`, `{2,3,4}`, `{10,11,12}`,
/// the clique `{4,5,7,8}` and pendant edges `5-6`, `8-9`, `7-10`, `12-13`.
pub fn figure2_fixture() -> Graph {
    build(
        14,
        [
            (0, 1),
            (0, 2),
            (1, 2),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 5),
            (4, 7),
            (4, 8),
            (5, 7),
            (5, 8),
            (7, 8),
            (5, 6),
            (8, 9),
            (7, 10),
            (10, 11),
            (10, 12),
            (11, 12),
            (12, 13),
        ],
    )
}

/// Uniform random labelled tree on `n` vertices via a Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    if n <= 2 {
        return path(n);
    }
    let mut r = rng(seed);
    let code: Vec<Vertex> = (0..n - 2).map(|_| r.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // smallest current leaf, maintained with a pointer and a fast path
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &c in &code {
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 && c < ptr {
            leaf = c;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    build(n, edges)
}

/// Random connected block graph on `n` vertices: a tree of cliques grown by
/// attaching cliques of random size `2..=max_block` at random existing vertices.
pub fn random_block_graph(n: usize, max_block: usize, seed: u64) -> Result<Graph> {
    if max_block < 2 {
        return Err(GrundyError::InvalidParameter("max_block must be at least 2".into()));
    }
    if n <= 1 {
        return Ok(Graph::empty(n));
    }
    let mut r = rng(seed);
    let mut edges = Vec::new();
    let first = r.random_range(2..=max_block.min(n));
    let mut count = first;
    let clique = |members: &[Vertex], edges: &mut Vec<(Vertex, Vertex)>| {
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                edges.push((a, b));
            }
        }
    };
    clique(&(0..first).collect::<Vec<_>>(), &mut edges);
    while count < n {
        let attach = r.random_range(0..count);
        let size = r.random_range(2..=max_block.min(n - count + 1));
        let mut members = vec![attach];
        members.extend(count..count + size - 1);
        count += size - 1;
        clique(&members, &mut edges);
    }
    Ok(build(n, edges))
}

/// Random connected graph: a random tree plus up to `extra` random chords.
pub fn random_connected(n: usize, extra: usize, seed: u64) -> Graph {
    let tree = random_tree(n, seed);
    let mut r = rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut edges: Vec<_> = tree.edges().collect();
    let possible = n * n.saturating_sub(1) / 2 - edges.len();
    let mut added = 0;
    while added < extra.min(possible) {
        let u = r.random_range(0..n);
        let v = r.random_range(0..n);
        if u != v && !edges.contains(&(u.min(v), u.max(v))) {
            edges.push((u.min(v), u.max(v)));
            added += 1;
        }
    }
    build(n, edges)
}

/// Replaces every edge by a path of two edges.
pub fn subdivide(g: &Graph) -> Graph {
    let n = g.n();
    let edges: Vec<_> = g.edges().collect();
    let mut out = Vec::with_capacity(2 * edges.len());
    for (i, (u, v)) in edges.iter().enumerate() {
        out.push((*u, n + i));
        out.push((n + i, *v));
    }
    build(n + edges.len(), out)
}

/// Random unicyclic graph on at most `max_n` vertices whose girth is at
/// least `2Δ₂ + 1`: a cycle of length `5..=max_n` with random pendant
/// vertices hung on it, rejecting attachments that break the girth bound.
pub fn random_large_girth(max_n: usize, seed: u64) -> Result<Graph> {
    if max_n < 5 {
        return Err(GrundyError::InvalidParameter("max_n must be at least 5".into()));
    }
    let mut r = rng(seed);
    let len = r.random_range(5..=max_n);
    let target = r.random_range(len..=max_n);
    let mut edges: Vec<(Vertex, Vertex)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    let mut n = len;
    let mut attempts = 0;
    while n < target && attempts < 200 {
        attempts += 1;
        let candidates: Vec<Vertex> = (0..n).collect();
        let at = *candidates.choose(&mut r).unwrap();
        edges.push((at, n));
        let g = build(n + 1, edges.iter().copied());
        if girth(&g).at_least(2 * degree_profile(&g).delta2 + 1) {
            n += 1;
        } else {
            edges.pop();
        }
    }
    Ok(build(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_block_graph;

    #[test]
    fn random_tree_is_deterministic_tree() {
        for n in 1..20 {
            let a = random_tree(n, 1);
            assert_eq!(a, random_tree(n, 1));
            assert!(a.is_tree(), "n={n}");
        }
        assert_ne!(random_tree(12, 1), random_tree(12, 2));
    }

    #[test]
    fn random_block_graphs_are_block_graphs() {
        for seed in 0..500 {
            let g = random_block_graph(9, 4, seed).unwrap();
            assert_eq!(g.n(), 9);
            assert!(g.is_connected());
            assert!(is_block_graph(&g), "seed {seed}");
        }
    }

    #[test]
    fn fixtures_have_expected_sizes() {
        assert_eq!(petersen().m(), 15);
        assert!(petersen().vertices().all(|v| petersen().degree(v) == 3));
        let f = figure2_fixture();
        assert_eq!((f.n(), f.m()), (14, 19));
        assert!(is_block_graph(&f));
        assert_eq!(spider(3, 2).n(), 7);
        assert_eq!(hypercube(3).m(), 12);
    }

    #[test]
    fn large_girth_generator_meets_bound() {
        for seed in 0..50 {
            let g = random_large_girth(10, seed).unwrap();
            assert!(g.n() <= 10);
            assert!(girth(&g).at_least(2 * degree_profile(&g).delta2 + 1));
        }
    }

    #[test]
    fn subdivision_doubles_edges() {
        let g = subdivide(&star(3));
        assert_eq!((g.n(), g.m()), (7, 6));
        assert!(g.is_tree());
    }
}
