//! Turning list assignments into colorings.
//!
//! The root receives its target color. Colored vertices are then expanded in
//! decreasing rank: every color below a vertex's own color that none of its
//! neighbors holds yet is handed to an uncolored lower-ranked candidate whose
//! list contains it and which has no neighbor of that color. Candidates are
//! tried shortest list first; dead ends backtrack, up to a step budget.

use std::collections::BTreeSet;

use crate::graph::{Graph, Vertex};

pub(crate) const SEARCH_BUDGET: usize = 1_000_000;

struct Frame {
    v: Vertex,
    demands: Vec<usize>,
    candidates: Vec<Vertex>,
    choice: Vec<usize>,
}

/// `rank[v]` orders the participating vertices (`usize::MAX` elsewhere),
/// `len[v]` is the list size of `v`, and `candidates(v)` yields the vertices
/// that may serve `v`. Returns a partial Grundy coloring (0 = uncolored).
pub(crate) fn realize<C>(
    g: &Graph,
    root: Vertex,
    target: usize,
    rank: &[usize],
    len: &[usize],
    candidates: C,
) -> Option<Vec<usize>>
where
    C: Fn(Vertex) -> Vec<Vertex>,
{
    let mut colors = vec![0usize; g.n()];
    colors[root] = target;
    let mut pending = BTreeSet::from([(rank[root], root)]);
    let mut frames: Vec<Frame> = Vec::new();
    let mut steps = 0;

    let fits = |colors: &[usize], x: Vertex, d: usize| {
        colors[x] == 0 && len[x] >= d && g.neighbors(x).iter().all(|&y| colors[y] != d)
    };

    loop {
        let top_done = frames.last().is_none_or(|f| f.choice.len() == f.demands.len());
        if top_done {
            let Some((_, v)) = pending.pop_last() else {
                return Some(colors);
            };
            let c = colors[v];
            let mut present = vec![false; c];
            for &x in g.neighbors(v) {
                if colors[x] > 0 && colors[x] < c {
                    present[colors[x]] = true;
                }
            }
            let mut cands = candidates(v);
            cands.sort_by_key(|&x| (len[x], x));
            frames.push(Frame {
                v,
                demands: (1..c).filter(|&d| !present[d]).collect(),
                candidates: cands,
                choice: Vec::new(),
            });
            continue;
        }

        // extend the top frame by one demand, or backtrack
        let mut start = 0;
        loop {
            let f = frames.last_mut().expect("frame present");
            let k = f.choice.len();
            let d = f.demands[k];
            let found = (start..f.candidates.len()).find(|&i| {
                steps += 1;
                fits(&colors, f.candidates[i], d)
            });
            if steps > SEARCH_BUDGET {
                return None;
            }
            if let Some(i) = found {
                let x = f.candidates[i];
                colors[x] = d;
                pending.insert((rank[x], x));
                f.choice.push(i);
                break;
            }
            // undo the previous choice of this frame, or drop the frame
            loop {
                let f = frames.last_mut()?;
                if let Some(i) = f.choice.pop() {
                    let x = f.candidates[i];
                    colors[x] = 0;
                    pending.remove(&(rank[x], x));
                    start = i + 1;
                    break;
                }
                let f = frames.pop().expect("frame present");
                pending.insert((rank[f.v], f.v));
                if frames.is_empty() {
                    return None;
                }
            }
        }
    }
}
