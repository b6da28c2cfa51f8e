//! Exact Grundy numbers of block graphs by list assignment, plus the
//! upper bounds it yields for graphs with cut-vertices.

mod assign;
mod partition;

use serde::Serialize;

use crate::error::{GrundyError, Result};
use crate::graph::{clique_blowup, BlockCutTree, Graph, Vertex};
use crate::oracle::{extend_first_fit, is_grundy_coloring, GrundyColoring};
use crate::witness::realize;
use crate::SolveOptions;

pub use assign::{assign_list, ColorList, ListSelection};
pub use partition::{level_partition, LevelPartition};
pub(crate) use partition::level_partition_unchecked;

/// Lists produced by one rooted run of the level-by-level assignment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListAssignment {
    pub root: Vertex,
    pub lists: Vec<ColorList>,
    /// For `v` with `L(v) = {1,…,t+1}`: neighbors `u₁,…,u_t` with `i ∈ L(uᵢ)`.
    pub representatives: Vec<Vec<Vertex>>,
    /// Order in which lists were assigned; the root is last.
    pub order: Vec<Vertex>,
}

impl ListAssignment {
    /// `|L(root)|`.
    pub fn root_gamma(&self) -> usize {
        self.lists[self.root].len()
    }
}

pub(crate) fn check_block_graph(g: &Graph) -> Result<BlockCutTree> {
    let bct = BlockCutTree::new(g)?;
    if !(0..bct.blocks.len()).all(|b| bct.is_complete_block(b)) {
        return Err(GrundyError::NotBlockGraph);
    }
    Ok(bct)
}

/// Assigns lists in `order`: each vertex receives [`assign_list`] of the
/// lists already held by its earlier neighbors.
pub fn assign_in_order(g: &Graph, root: Vertex, order: Vec<Vertex>) -> ListAssignment {
    let n = g.n();
    let mut rank = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut lists = vec![ColorList::SINGLE; n];
    let mut representatives = vec![Vec::new(); n];
    // incoming lists, in arrival order
    let mut incoming: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut buf = Vec::new();
    for &u in &order {
        buf.clear();
        buf.extend(incoming[u].iter().map(|&x| lists[x]));
        let sel = assign_list(&buf);
        lists[u] = sel.list;
        representatives[u] = sel.representatives.iter().map(|&i| incoming[u][i]).collect();
        for &v in g.neighbors(u) {
            if rank[v] > rank[u] {
                incoming[v].push(u);
            }
        }
    }
    ListAssignment { root, lists, representatives, order }
}

/// Runs the level-partition list assignment at any root of a connected block
/// graph. At a cut-vertex this is [`grundy_block`]; at a non-cut-vertex `w`
/// in block `B` it yields `|B|`.
pub fn grundy_block_rooted(g: &Graph, w: Vertex) -> Result<ListAssignment> {
    check_block_graph(g)?;
    g.check_vertex(w)?;
    Ok(grundy_block_unchecked(g, w))
}

pub(crate) fn grundy_block_unchecked(g: &Graph, w: Vertex) -> ListAssignment {
    let partition = level_partition_unchecked(g, w);
    assign_in_order(g, w, partition.processing_order())
}

/// Γ_G(w) for a cut-vertex `w` of a connected block graph: the size of the
/// list the root receives.
pub fn grundy_block(g: &Graph, w: Vertex) -> Result<ListAssignment> {
    let bct = check_block_graph(g)?;
    g.check_vertex(w)?;
    if !bct.is_cut_vertex(w) {
        return Err(GrundyError::NotCutVertex(w));
    }
    Ok(grundy_block_unchecked(g, w))
}

/// Result of [`gamma_block_graph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockGamma {
    pub gamma: usize,
    /// ω: size of a largest block.
    pub omega: usize,
    pub cut_vertices: Vec<Vertex>,
    /// Γ_G(v) for every vertex: list size at cut-vertices, `|B|` elsewhere.
    pub per_vertex: Vec<usize>,
    /// A vertex attaining Γ.
    pub argmax: Vertex,
}

/// Γ of a block graph with any number of components:
/// `max(ω, max over cut-vertices w of Γ(w))`, one rooted run per cut-vertex.
pub fn gamma_block_graph(g: &Graph) -> Result<BlockGamma> {
    gamma_block_graph_with(g, &SolveOptions::default())
}

pub fn gamma_block_graph_with(g: &Graph, opts: &SolveOptions) -> Result<BlockGamma> {
    let bct = BlockCutTree::decompose(g);
    if !(0..bct.blocks.len()).all(|b| bct.is_complete_block(b)) {
        return Err(GrundyError::NotBlockGraph);
    }
    let mut per_vertex = vec![0; g.n()];
    for block in &bct.blocks {
        for &v in block {
            if !bct.is_cut_vertex(v) {
                per_vertex[v] = block.len();
            }
        }
    }
    // one induced component per cut-vertex root
    let comps = g.components();
    let mut comp_of = vec![0; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let subgraphs: Vec<Graph> = comps.iter().map(|c| g.induced_subgraph(c)).collect();
    let values = opts.map(&bct.cut_vertices, |&w| {
        let c = comp_of[w];
        let local = comps[c].binary_search(&w).unwrap();
        grundy_block_unchecked(&subgraphs[c], local).root_gamma()
    });
    for (&w, gw) in bct.cut_vertices.iter().zip(values) {
        per_vertex[w] = gw;
    }
    let argmax = (0..g.n()).max_by_key(|&v| (per_vertex[v], std::cmp::Reverse(v))).unwrap_or(0);
    Ok(BlockGamma {
        gamma: per_vertex.iter().copied().max().unwrap_or(0),
        omega: bct.max_block_size(),
        cut_vertices: bct.cut_vertices.clone(),
        per_vertex,
        argmax,
    })
}

/// Partial Grundy coloring realizing `target ≤ |L(root)|` at the root
/// (0 = uncolored). A vertex may only be served by neighbors assigned
/// before it.
pub fn partial_witness(
    g: &Graph,
    assignment: &ListAssignment,
    target: usize,
) -> Result<Vec<usize>> {
    if target == 0 || target > assignment.root_gamma() {
        return Err(GrundyError::InvalidParameter(format!(
            "target color {target} outside 1..={}",
            assignment.root_gamma()
        )));
    }
    let mut rank = vec![usize::MAX; g.n()];
    for (i, &v) in assignment.order.iter().enumerate() {
        rank[v] = i;
    }
    let len: Vec<usize> = assignment.lists.iter().map(|l| l.len()).collect();
    realize(g, assignment.root, target, &rank, &len, |v| {
        g.neighbors(v).iter().copied().filter(|&x| rank[x] < rank[v]).collect()
    })
    .ok_or_else(|| {
        GrundyError::WitnessFailed(format!(
            "no coloring gives vertex {} color {target}",
            assignment.root
        ))
    })
}

/// A Grundy coloring of `g` with the root colored `|L(root)|`, extended to
/// all vertices by First-Fit and checked before it is returned.
pub fn witness_coloring_block(g: &Graph, assignment: &ListAssignment) -> Result<GrundyColoring> {
    witness_with_root_color(g, assignment, assignment.root_gamma())
}

/// As [`witness_coloring_block`] but for any root color `1..=|L(root)|`.
pub fn witness_with_root_color(
    g: &Graph,
    assignment: &ListAssignment,
    target: usize,
) -> Result<GrundyColoring> {
    let partial = partial_witness(g, assignment, target)?;
    let coloring = extend_first_fit(g, &partial)?;
    if !is_grundy_coloring(g, coloring.colors()) || coloring.color(assignment.root) != target {
        return Err(GrundyError::WitnessFailed("extension changed the witness".into()));
    }
    Ok(coloring)
}

/// Γ of a block graph together with a checked coloring using Γ colors.
pub fn witness_block_graph(g: &Graph, opts: &SolveOptions) -> Result<(BlockGamma, GrundyColoring)> {
    let table = gamma_block_graph_with(g, opts)?;
    if g.is_empty() {
        return Ok((table, GrundyColoring::from_colors(Vec::new())));
    }
    let comps = g.components();
    let roots = std::iter::once(table.argmax)
        .chain(g.vertices().filter(|&v| v != table.argmax && table.per_vertex[v] == table.gamma));
    for w in roots {
        let comp = comps.iter().find(|c| c.binary_search(&w).is_ok()).unwrap();
        let sub = g.induced_subgraph(comp);
        let local = comp.binary_search(&w).unwrap();
        let assignment = grundy_block_unchecked(&sub, local);
        let Ok(partial_local) = partial_witness(&sub, &assignment, table.gamma) else {
            continue;
        };
        let mut partial = vec![0; g.n()];
        for (i, &v) in comp.iter().enumerate() {
            partial[v] = partial_local[i];
        }
        let coloring = extend_first_fit(g, &partial)?;
        if coloring.num_colors() == table.gamma && is_grundy_coloring(g, coloring.colors()) {
            return Ok((table, coloring));
        }
    }
    Err(GrundyError::WitnessFailed(format!(
        "no coloring with {} colors found for the list value",
        table.gamma
    )))
}

/// `(β − 1)·Δ̃ + 1` for a connected graph with at least one cut-vertex.
pub fn bound_block_cutpoint(g: &Graph) -> Result<usize> {
    let bct = BlockCutTree::new(g)?;
    if bct.cut_vertices.is_empty() {
        return Err(GrundyError::NoCutVertex);
    }
    Ok((bct.max_block_size() - 1) * bct.max_cut_degree() + 1)
}

/// Γ(G↑𝓑), a certified upper bound on Γ(G).
pub fn upper_bound_via_blowup(g: &Graph) -> Result<usize> {
    Ok(gamma_block_graph(&clique_blowup(g))?.gamma)
}

/// `G_{1,p} = K_p`; `G_{t,p}` attaches a fresh `K_p` at every vertex of
/// `G_{t−1,p}`. Γ(G_{t,p}) = t(p−1)+1.
pub fn generate_clique_family(t: usize, p: usize) -> Result<Graph> {
    if t == 0 || p < 2 {
        return Err(GrundyError::InvalidParameter("need t ≥ 1 and p ≥ 2".into()));
    }
    let mut n = p;
    let mut edges: Vec<(Vertex, Vertex)> =
        (0..p).flat_map(|a| (a + 1..p).map(move |b| (a, b))).collect();
    for _ in 1..t {
        let old = n;
        for v in 0..old {
            let fresh: Vec<Vertex> = (n..n + p - 1).collect();
            n += p - 1;
            for (i, &a) in fresh.iter().enumerate() {
                edges.push((v, a));
                for &b in &fresh[i + 1..] {
                    edges.push((a, b));
                }
            }
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, figure2_fixture, path, spider, FIGURE2_ROOT};
    use crate::oracle::Oracle;

    #[test]
    fn figure2_root() {
        let g = figure2_fixture();
        let a = grundy_block(&g, FIGURE2_ROOT).unwrap();
        assert_eq!(a.root_gamma(), 5);
        assert_eq!(gamma_block_graph(&g).unwrap().gamma, 5);
        let c = witness_coloring_block(&g, &a).unwrap();
        assert_eq!(c.color(FIGURE2_ROOT), 5);
    }

    #[test]
    fn small_rooted_runs() {
        assert_eq!(grundy_block(&path(3), 1).unwrap().root_gamma(), 2);
        assert_eq!(grundy_block(&spider(3, 2), 0).unwrap().root_gamma(), 3);
        assert_eq!(grundy_block(&path(3), 0), Err(GrundyError::NotCutVertex(0)));
    }

    #[test]
    fn p3_witness() {
        let g = path(3);
        let a = grundy_block(&g, 1).unwrap();
        assert_eq!(witness_coloring_block(&g, &a).unwrap().colors(), &[1, 2, 1]);
    }

    #[test]
    fn clique_lists_climb() {
        let g = complete(4);
        let a = grundy_block_rooted(&g, 3).unwrap();
        let labels: Vec<usize> = a.order.iter().map(|&v| a.lists[v].len()).collect();
        assert_eq!(labels, vec![1, 2, 3, 4]);
        let c = witness_coloring_block(&g, &a).unwrap();
        let seq: Vec<usize> = a.order.iter().map(|&v| c.color(v)).collect();
        assert_eq!(seq, vec![1, 2, 3, 4]);
    }

    #[test]
    fn gamma_of_cliques_and_edges() {
        assert_eq!(gamma_block_graph(&complete(7)).unwrap().gamma, 7);
        assert_eq!(gamma_block_graph(&path(2)).unwrap().gamma, 2);
        assert_eq!(gamma_block_graph(&Graph::empty(1)).unwrap().gamma, 1);
        assert_eq!(gamma_block_graph(&crate::generators::cycle(5)), Err(GrundyError::NotBlockGraph));
    }

    #[test]
    fn disconnected_block_graph() {
        let g = Graph::from_edges(7, [(0, 1), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        let r = gamma_block_graph(&g).unwrap();
        assert_eq!(r.gamma, 3);
        let (_, c) = witness_block_graph(&g, &SolveOptions::default()).unwrap();
        assert_eq!(c.num_colors(), 3);
    }

    #[test]
    fn bounds() {
        let tt = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(bound_block_cutpoint(&tt).unwrap(), 5);
        assert_eq!(bound_block_cutpoint(&path(5)).unwrap(), 3);
        assert_eq!(bound_block_cutpoint(&complete(4)), Err(GrundyError::NoCutVertex));
        assert_eq!(upper_bound_via_blowup(&crate::generators::cycle(5)).unwrap(), 5);
        let c4c4 = Graph::from_edges(
            7,
            [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)],
        )
        .unwrap();
        assert_eq!(upper_bound_via_blowup(&c4c4).unwrap(), 4);
        assert!(Oracle::default().brute_force_gamma(&c4c4).unwrap() <= 7);
    }

    #[test]
    fn clique_family() {
        assert_eq!(generate_clique_family(1, 4).unwrap(), complete(4));
        let g = generate_clique_family(2, 3).unwrap();
        assert_eq!(gamma_block_graph(&g).unwrap().gamma, 5);
        assert_eq!(bound_block_cutpoint(&g).unwrap(), 5);
        let t = generate_clique_family(3, 2).unwrap();
        assert!(t.is_tree());
        assert_eq!(t.n(), 8);
        assert_eq!(gamma_block_graph(&t).unwrap().gamma, 4);
        assert_eq!(Oracle::default().brute_force_gamma(&t).unwrap(), 4);
        assert!(generate_clique_family(0, 3).is_err());
    }

    #[test]
    fn intra_level_order_is_irrelevant_on_trees() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for seed in 0..200 {
            let g = crate::generators::random_tree(12, seed);
            for w in g.vertices() {
                let p = level_partition_unchecked(&g, w);
                let base = assign_in_order(&g, w, p.processing_order());
                for _ in 0..3 {
                    let mut order = Vec::new();
                    for level in &p.levels {
                        let mut l = level.clone();
                        l.shuffle(&mut rng);
                        order.extend(l);
                    }
                    assert_eq!(assign_in_order(&g, w, order).lists, base.lists);
                }
            }
        }
    }

    // Same-level vertices can share a block, and then the order inside a
    // level matters. Here 0 and 2 share level 2 under root 1.
    fn shared_level_graph() -> Graph {
        Graph::from_edges(
            9,
            [
                (0, 1), (0, 2), (0, 5), (0, 6), (0, 7), (1, 2), (1, 3),
                (1, 4), (2, 8), (3, 4), (5, 6), (5, 7), (6, 7),
            ],
        )
        .unwrap()
    }

    #[test]
    fn intra_level_order_matters_in_blocks() {
        let g = shared_level_graph();
        let p = level_partition(&g, 1).unwrap();
        assert_eq!(p.levels[1], vec![0, 2]);
        assert_eq!(assign_in_order(&g, 1, vec![3, 4, 5, 6, 7, 8, 0, 2, 1]).root_gamma(), 5);
        assert_eq!(assign_in_order(&g, 1, vec![3, 4, 5, 6, 7, 8, 2, 0, 1]).root_gamma(), 4);
    }

    #[test]
    fn list_value_can_exceed_the_grundy_number() {
        let g = shared_level_graph();
        assert_eq!(grundy_block(&g, 1).unwrap().root_gamma(), 5);
        assert_eq!(Oracle::default().brute_force_gamma_at(&g, 1).unwrap(), 4);
        let a = grundy_block(&g, 1).unwrap();
        assert!(matches!(witness_coloring_block(&g, &a), Err(GrundyError::WitnessFailed(_))));
        assert!(matches!(
            witness_block_graph(&g, &SolveOptions::default()),
            Err(GrundyError::WitnessFailed(_))
        ));
    }
}
