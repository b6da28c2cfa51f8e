//! Exact Γ for graphs of girth at least `2Δ₂+1` through local BFS trees, the
//! test `Γ ≥ k` for `k ≤ (g+1)/2`, and the approximation built on both.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::block::{grundy_block_unchecked, witness_coloring_block, ListAssignment};
use crate::error::{GrundyError, Result};
use crate::graph::{bfs_ball, degree_profile, girth, Ball, DegreeProfile, Girth, Graph, Vertex};
use crate::oracle::{extend_first_fit, is_grundy_coloring, is_partial_grundy, GrundyColoring};
use crate::witness::realize;
use crate::SolveOptions;

/// BFS tree `T_{u,r}` of the ball `B(u, r)`. Local vertex `i` is
/// `ball.vertices[i]`; the center is local 0.
#[derive(Clone, Debug)]
pub struct LocalTree {
    pub ball: Ball,
    pub tree: Graph,
}

impl LocalTree {
    pub fn new(g: &Graph, u: Vertex, radius: usize) -> Self {
        let ball = bfs_ball(g, u, radius);
        let tree = ball.tree();
        LocalTree { ball, tree }
    }

    pub fn center(&self) -> Vertex {
        self.ball.center
    }

    pub fn radius(&self) -> usize {
        self.ball.radius
    }

    pub fn to_global(&self, local: Vertex) -> Vertex {
        self.ball.vertices[local]
    }
}

/// Lists of a tree rooted at any vertex `u`; `|L(u)| = Γ_T(u)`.
pub fn grundy_tree(t: &Graph, u: Vertex) -> Result<ListAssignment> {
    t.check_vertex(u)?;
    if !t.is_tree() {
        return Err(GrundyError::NotATree);
    }
    Ok(grundy_block_unchecked(t, u))
}

/// Grundy coloring of the tree with the root colored `|L(root)|`.
pub fn witness_coloring_tree(t: &Graph, assignment: &ListAssignment) -> Result<GrundyColoring> {
    witness_coloring_block(t, assignment)
}

fn check_girth(g: &Graph, profile: &DegreeProfile) -> Result<Girth> {
    let gg = girth(g);
    let required = 2 * profile.delta2 + 1;
    if !gg.at_least(required) {
        return Err(GrundyError::GirthTooSmall { girth: gg, required });
    }
    Ok(gg)
}

/// Γ_{G(u)}(u) where `G(u)` is the ball of radius Δ(u).
pub fn gamma_local(g: &Graph, u: Vertex) -> Result<usize> {
    g.check_vertex(u)?;
    let profile = degree_profile(g);
    check_girth(g, &profile)?;
    Ok(local_gamma_at(g, u, profile.local[u]).1.root_gamma())
}

fn local_gamma_at(g: &Graph, u: Vertex, radius: usize) -> (LocalTree, ListAssignment) {
    let lt = LocalTree::new(g, u, radius);
    let a = grundy_block_unchecked(&lt.tree, 0);
    (lt, a)
}

/// Colors `g` so that the center of `lt` gets `target`, serving each vertex
/// from its children in the BFS tree, then extends by First-Fit.
fn local_witness(
    g: &Graph,
    lt: &LocalTree,
    a: &ListAssignment,
    target: usize,
) -> Result<GrundyColoring> {
    let mut rank = vec![usize::MAX; g.n()];
    let mut len = vec![0; g.n()];
    for (i, &v) in a.order.iter().enumerate() {
        rank[lt.to_global(v)] = i;
        len[lt.to_global(v)] = a.lists[v].len();
    }
    let t = &lt.tree;
    let colors = realize(g, lt.center(), target, &rank, &len, |gv| {
        let v = lt.ball.position(gv).expect("served vertices lie in the ball");
        t.neighbors(v)
            .iter()
            .map(|&x| lt.to_global(x))
            .filter(|&x| rank[x] < rank[gv])
            .collect()
    })
    .ok_or_else(|| {
        GrundyError::WitnessFailed(format!("no coloring gives vertex {} color {target}", lt.center()))
    })?;
    if !is_partial_grundy(g, &colors) {
        return Err(GrundyError::WitnessFailed("local coloring is not valid in the graph".into()));
    }
    let coloring = extend_first_fit(g, &colors)?;
    if coloring.color(lt.center()) != target || !is_grundy_coloring(g, coloring.colors()) {
        return Err(GrundyError::WitnessFailed("extension changed the witness".into()));
    }
    Ok(coloring)
}

/// Γ(G) = max over u of Γ_{G(u)}(u), with a checked witness using Γ colors.
pub fn exact_gamma_large_girth(g: &Graph) -> Result<(usize, GrundyColoring)> {
    exact_gamma_large_girth_with(g, &SolveOptions::default())
}

pub fn exact_gamma_large_girth_with(
    g: &Graph,
    opts: &SolveOptions,
) -> Result<(usize, GrundyColoring)> {
    let profile = degree_profile(g);
    check_girth(g, &profile)?;
    if g.is_empty() {
        return Ok((0, GrundyColoring::from_colors(Vec::new())));
    }
    let cap = profile.delta2 + 1;
    let mut best = 0;
    let mut argmax = 0;
    if opts.threads > 1 {
        let all: Vec<Vertex> = g.vertices().collect();
        let values = opts.map(&all, |&u| local_gamma_at(g, u, profile.local[u]).1.root_gamma());
        for (u, v) in values.into_iter().enumerate() {
            if v > best {
                best = v;
                argmax = u;
            }
        }
    } else {
        for u in g.vertices() {
            if opts.pruning && (profile.degree[u] + 1 <= best || best == cap) {
                continue;
            }
            let v = local_gamma_at(g, u, profile.local[u]).1.root_gamma();
            if v > best {
                best = v;
                argmax = u;
            }
        }
    }
    let (lt, a) = local_gamma_at(g, argmax, profile.local[argmax]);
    let coloring = local_witness(g, &lt, &a, best)?;
    if coloring.num_colors() != best {
        return Err(GrundyError::WitnessFailed(format!(
            "witness uses {} colors, expected {best}",
            coloring.num_colors()
        )));
    }
    Ok((best, coloring))
}

/// Whether Γ(G) ≥ k, for `1 ≤ k ≤ (g+1)/2`. Returns a witness with a vertex
/// colored `k` when the answer is yes.
pub fn decide_gamma_at_least(g: &Graph, k: usize) -> Result<Option<GrundyColoring>> {
    decide_gamma_at_least_with(g, k, &SolveOptions::default())
}

pub fn decide_gamma_at_least_with(
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<Option<GrundyColoring>> {
    if k == 0 {
        return Err(GrundyError::InvalidParameter("k must be at least 1".into()));
    }
    let gg = girth(g);
    if let Girth::Finite(gv) = gg {
        if 2 * k > gv + 1 {
            return Err(GrundyError::KTooLargeForGirth { k, girth: gg });
        }
    }
    let profile = degree_profile(g);
    let centers: Vec<Vertex> = g
        .vertices()
        .filter(|&u| !opts.pruning || profile.local[u] + 1 >= k)
        .collect();
    let hit = if opts.threads > 1 {
        let ok = opts.map(&centers, |&u| local_gamma_at(g, u, k - 1).1.root_gamma() >= k);
        centers.iter().zip(ok).find(|(_, ok)| *ok).map(|(&u, _)| u)
    } else {
        centers.iter().copied().find(|&u| local_gamma_at(g, u, k - 1).1.root_gamma() >= k)
    };
    match hit {
        None => Ok(None),
        Some(u) => {
            let (lt, a) = local_gamma_at(g, u, k - 1);
            local_witness(g, &lt, &a, k).map(Some)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ApproxMode {
    Exact,
    LowerBoundHalfGirth,
}

/// `value ≤ Γ ≤ value / ratio_guarantee`; `ratio_guarantee = 1` in exact mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApproxReport {
    pub mode: ApproxMode,
    pub value: usize,
    #[serde(serialize_with = "ratio_as_string")]
    pub ratio_guarantee: Ratio<usize>,
    pub girth: Girth,
    pub delta2: usize,
    pub witness: Option<GrundyColoring>,
}

fn ratio_as_string<S: Serializer>(r: &Ratio<usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

impl ApproxReport {
    /// `⌊value / ratio_guarantee⌋`, the upper end of the sandwich.
    pub fn upper(&self) -> usize {
        (Ratio::from_integer(self.value) / self.ratio_guarantee).to_integer()
    }

    pub fn ratio_f64(&self) -> f64 {
        *self.ratio_guarantee.numer() as f64 / *self.ratio_guarantee.denom() as f64
    }
}

/// Exact when the girth allows it or when Γ < ⌊(g+1)/2⌋; otherwise the
/// lower bound ⌊(g+1)/2⌋ with guarantee `min(1, ⌊(g+1)/2⌋ / (Δ₂+1))`.
pub fn approx_gamma(g: &Graph) -> Result<ApproxReport> {
    approx_gamma_with(g, &SolveOptions::default())
}

pub fn approx_gamma_with(g: &Graph, opts: &SolveOptions) -> Result<ApproxReport> {
    let profile = degree_profile(g);
    let gg = girth(g);
    let exact = |value, witness| ApproxReport {
        mode: ApproxMode::Exact,
        value,
        ratio_guarantee: Ratio::from_integer(1),
        girth: gg,
        delta2: profile.delta2,
        witness,
    };
    if gg.at_least(2 * profile.delta2 + 1) {
        let (value, w) = exact_gamma_large_girth_with(g, opts)?;
        return Ok(exact(value, Some(w)));
    }
    let gv = gg.finite().expect("forests take the exact path");
    let k0 = (gv + 1) / 2;
    if let Some(w) = decide_gamma_at_least_with(g, k0, opts)? {
        let ratio = Ratio::new(k0, profile.delta2 + 1).min(Ratio::from_integer(1));
        return Ok(ApproxReport {
            mode: if ratio == Ratio::from_integer(1) { ApproxMode::Exact } else { ApproxMode::LowerBoundHalfGirth },
            value: k0,
            ratio_guarantee: ratio,
            girth: gg,
            delta2: profile.delta2,
            witness: Some(w),
        });
    }
    // largest k < k0 with a yes answer; k = 1 always holds
    let (mut lo, mut hi) = (1, k0 - 1);
    let mut witness = decide_gamma_at_least_with(g, 1, opts)?;
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        match decide_gamma_at_least_with(g, mid, opts)? {
            Some(w) => {
                lo = mid;
                witness = Some(w);
            }
            None => hi = mid - 1,
        }
    }
    Ok(exact(lo, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, petersen, spider, star};
    use crate::oracle::Oracle;

    #[test]
    fn tree_roots() {
        assert_eq!(grundy_tree(&path(4), 0).unwrap().root_gamma(), 2);
        let bin = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(grundy_tree(&bin, 0).unwrap().root_gamma(), 3);
        assert_eq!(grundy_tree(&Graph::empty(1), 0).unwrap().root_gamma(), 1);
        assert_eq!(grundy_tree(&cycle(4), 0), Err(GrundyError::NotATree));
    }

    #[test]
    fn tree_witnesses() {
        let g = spider(3, 2);
        let a = grundy_tree(&g, 0).unwrap();
        let c = witness_coloring_tree(&g, &a).unwrap();
        assert_eq!(c.color(0), 3);
        let e = path(2);
        let c = witness_coloring_tree(&e, &grundy_tree(&e, 1).unwrap()).unwrap();
        assert_eq!(c.colors(), &[1, 2]);
    }

    #[test]
    fn local_values() {
        for u in 0..7 {
            assert_eq!(gamma_local(&cycle(7), u).unwrap(), 3);
        }
        assert_eq!(gamma_local(&star(4), 0).unwrap(), 2);
        assert!(matches!(gamma_local(&complete(4), 0), Err(GrundyError::GirthTooSmall { .. })));
    }

    #[test]
    fn exact_on_cycles() {
        for n in [5, 6, 7, 10] {
            let (gamma, w) = exact_gamma_large_girth(&cycle(n)).unwrap();
            assert_eq!(gamma, 3);
            assert_eq!(w.num_colors(), 3);
        }
        let (gamma, _) = exact_gamma_large_girth(&cycle(4)).unwrap_or((0, GrundyColoring::from_colors(vec![])));
        assert_eq!(gamma, 0);
    }

    #[test]
    fn pruning_is_output_invariant() {
        let off = SolveOptions { pruning: false, ..Default::default() };
        for seed in 0..40 {
            let g = crate::generators::random_large_girth(14, seed).unwrap();
            assert_eq!(
                exact_gamma_large_girth(&g).unwrap().0,
                exact_gamma_large_girth_with(&g, &off).unwrap().0
            );
        }
    }

    #[test]
    fn decisions() {
        assert!(decide_gamma_at_least(&petersen(), 3).unwrap().is_some());
        assert!(decide_gamma_at_least(&cycle(5), 3).unwrap().is_some());
        assert!(decide_gamma_at_least(&cycle(6), 3).unwrap().is_some());
        assert!(decide_gamma_at_least(&path(5), 1).unwrap().is_some());
        assert!(matches!(
            decide_gamma_at_least(&cycle(6), 4),
            Err(GrundyError::KTooLargeForGirth { k: 4, .. })
        ));
        assert!(decide_gamma_at_least(&cycle(6), 0).is_err());
    }

    #[test]
    fn approximations() {
        let r = approx_gamma(&cycle(5)).unwrap();
        assert_eq!((r.mode, r.value), (ApproxMode::Exact, 3));
        let r = approx_gamma(&petersen()).unwrap();
        assert_eq!((r.mode, r.value), (ApproxMode::LowerBoundHalfGirth, 3));
        assert_eq!(r.ratio_guarantee, Ratio::new(3, 4));
        assert_eq!(r.upper(), 4);
        let r = approx_gamma(&complete(4)).unwrap();
        assert_eq!((r.value, r.ratio_guarantee), (2, Ratio::new(1, 2)));
        assert!(r.value <= 4 && 4 <= r.upper());
    }

    #[test]
    fn even_girth_guarantee() {
        let q3 = crate::generators::hypercube(3);
        let r = approx_gamma(&q3).unwrap();
        let gamma = Oracle::new(8).unwrap().brute_force_gamma(&q3).unwrap();
        assert!(r.value <= gamma && gamma <= r.upper());
    }
}
