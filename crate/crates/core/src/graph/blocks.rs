use serde::Serialize;

use super::{Graph, Vertex};
use crate::error::{GrundyError, Result};

/// Blocks and cut-vertices of a graph.
///
/// A block is a maximal 2-connected subgraph or a bridge (stored as a
/// 2-vertex block). An isolated vertex forms a single-vertex block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCutTree {
    /// Vertex sets, each sorted ascending; blocks ordered by their vertex lists.
    pub blocks: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
    /// `(cut-vertex, block index)` pairs of the bipartite block-cutpoint graph.
    pub incidence: Vec<(Vertex, usize)>,
    #[serde(skip)]
    block_edges: Vec<usize>,
    #[serde(skip)]
    vertex_blocks: Vec<Vec<usize>>,
}

impl BlockCutTree {
    /// Decomposes a connected graph.
    pub fn new(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(GrundyError::DisconnectedInput);
        }
        Ok(Self::decompose(g))
    }

    /// Decomposes every component of `g`; never fails.
    pub fn decompose(g: &Graph) -> Self {
        let raw = biconnected_components(g);
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by(|&a, &b| raw[a].0.cmp(&raw[b].0));
        let blocks: Vec<Vec<Vertex>> = order.iter().map(|&i| raw[i].0.clone()).collect();
        let block_edges: Vec<usize> = order.iter().map(|&i| raw[i].1).collect();
        let mut vertex_blocks = vec![Vec::new(); g.n()];
        for (b, vs) in blocks.iter().enumerate() {
            for &v in vs {
                vertex_blocks[v].push(b);
            }
        }
        let cut_vertices: Vec<Vertex> =
            g.vertices().filter(|&v| vertex_blocks[v].len() >= 2).collect();
        let incidence = cut_vertices
            .iter()
            .flat_map(|&v| vertex_blocks[v].iter().map(move |&b| (v, b)))
            .collect();
        BlockCutTree { blocks, cut_vertices, incidence, block_edges, vertex_blocks }
    }

    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.vertex_blocks[v].len() >= 2
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: Vertex) -> &[usize] {
        &self.vertex_blocks[v]
    }

    /// Number of blocks through `v` (its degree in the block-cutpoint graph
    /// when `v` is a cut-vertex).
    pub fn block_degree(&self, v: Vertex) -> usize {
        self.vertex_blocks[v].len()
    }

    /// β: size of a largest block.
    pub fn max_block_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Δ̃: largest number of blocks through one cut-vertex (0 without cut-vertices).
    pub fn max_cut_degree(&self) -> usize {
        self.cut_vertices.iter().map(|&v| self.block_degree(v)).max().unwrap_or(0)
    }

    /// Index of the block holding edge `uv`.
    pub fn block_of_edge(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let bv = &self.vertex_blocks[v];
        self.vertex_blocks[u].iter().copied().find(|b| bv.contains(b))
    }

    /// Number of graph edges inside block `b`.
    pub fn edge_count(&self, b: usize) -> usize {
        self.block_edges[b]
    }

    pub fn is_complete_block(&self, b: usize) -> bool {
        let s = self.blocks[b].len();
        self.block_edges[b] == s * (s - 1) / 2
    }
}

/// Hopcroft–Tarjan with an explicit stack. Returns `(sorted vertices, edge count)`
/// per block.
fn biconnected_components(g: &Graph) -> Vec<(Vec<Vertex>, usize)> {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut frames: Vec<(Vertex, Vertex, usize)> = Vec::new();
    let mut mark = vec![false; n];

    for root in g.vertices() {
        if disc[root] != UNSEEN {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = time;
            time += 1;
            out.push((vec![root], 0));
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        frames.push((root, UNSEEN, 0));
        while let Some(frame) = frames.last_mut() {
            let (v, parent, idx) = *frame;
            if idx < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[idx];
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if parent == UNSEEN {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                let mut vertices = Vec::new();
                let mut edges = 0;
                while let Some((a, b)) = edge_stack.pop() {
                    edges += 1;
                    for x in [a, b] {
                        if !mark[x] {
                            mark[x] = true;
                            vertices.push(x);
                        }
                    }
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                for &x in &vertices {
                    mark[x] = false;
                }
                vertices.sort_unstable();
                out.push((vertices, edges));
            }
        }
    }
    out
}

/// True iff every block of every component induces a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    let bct = BlockCutTree::decompose(g);
    (0..bct.blocks.len()).all(|b| bct.is_complete_block(b))
}

/// `G↑𝓑`: completes every block into a clique. The vertex set is unchanged.
pub fn clique_blowup(g: &Graph) -> Graph {
    let bct = BlockCutTree::decompose(g);
    let edges = bct.blocks.iter().flat_map(|block| {
        block
            .iter()
            .enumerate()
            .flat_map(move |(i, &u)| block[i + 1..].iter().map(move |&v| (u, v)))
    });
    Graph::from_edges(g.n(), edges).expect("block vertices are valid and distinct")
}
