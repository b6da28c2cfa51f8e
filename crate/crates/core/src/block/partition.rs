use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{GrundyError, Result};
use crate::graph::{BlockCutTree, Graph, Vertex};

/// Ordered partition `F₁, …, F_k` of a connected block graph relative to a
/// root `w`: `F₁` holds the non-cut-vertices, each later level the
/// non-cut-vertices of what remains (the root excepted), and `F_k = {w}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelPartition {
    pub root: Vertex,
    /// `levels[i]` is `F_{i+1}`, sorted ascending.
    pub levels: Vec<Vec<Vertex>>,
    /// Level index (1-based) of every vertex.
    pub f_value: Vec<usize>,
}

impl LevelPartition {
    /// Level by level, ascending id inside a level; the root comes last.
    pub fn processing_order(&self) -> Vec<Vertex> {
        self.levels.iter().flatten().copied().collect()
    }
}

/// Computes the partition for a connected block graph and a cut-vertex `w`.
pub fn level_partition(g: &Graph, w: Vertex) -> Result<LevelPartition> {
    let bct = super::check_block_graph(g)?;
    g.check_vertex(w)?;
    if !bct.is_cut_vertex(w) {
        return Err(GrundyError::NotCutVertex(w));
    }
    Ok(level_partition_unchecked(g, w))
}

/// Same partition for any root of a connected block graph (trees included).
///
/// A BFS tree rooted at `w` hangs every block below its vertex nearest to
/// `w`, so peeling non-cut-vertices round by round removes exactly the
/// vertices of BFS-subtree height 0, then height 1, and so on. Scanning the
/// BFS levels bottom-up gives `f(u) = 1 + max f(child)`, with `f(w)` forced
/// to one more than every other value. O(m).
pub(crate) fn level_partition_unchecked(g: &Graph, w: Vertex) -> LevelPartition {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([w]);
    seen[w] = true;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut f_value = vec![1usize; n];
    for &x in order.iter().rev() {
        if x != w && parent[x] != w {
            let p = parent[x];
            f_value[p] = f_value[p].max(f_value[x] + 1);
        }
    }
    let top = order.iter().filter(|&&x| x != w).map(|&x| f_value[x]).max().unwrap_or(0);
    f_value[w] = top + 1;
    let mut levels = vec![Vec::new(); top + 1];
    for v in g.vertices() {
        levels[f_value[v] - 1].push(v);
    }
    LevelPartition { root: w, levels, f_value }
}

#[allow(dead_code)]
pub(crate) fn partition_matches_peeling(g: &Graph, p: &LevelPartition) -> bool {
    // F_i = non-cut-vertices of G \ (F_1 ∪ … ∪ F_{i-1}), root excluded
    let mut remaining: Vec<Vertex> = g.vertices().collect();
    for (i, level) in p.levels.iter().enumerate() {
        let sub = g.induced_subgraph(&remaining);
        let bct = BlockCutTree::decompose(&sub);
        let mut expect: Vec<Vertex> = if i + 1 == p.levels.len() {
            vec![p.root]
        } else {
            (0..remaining.len())
                .filter(|&j| !bct.is_cut_vertex(j) && remaining[j] != p.root)
                .map(|j| remaining[j])
                .collect()
        };
        expect.sort_unstable();
        if &expect != level {
            return false;
        }
        remaining.retain(|v| !level.contains(v));
    }
    remaining.is_empty()
}
