//! Immutable simple undirected graphs and the structural analyses the
//! Grundy engines consume.
//!
//! Vertices are dense ids `0..n`. Every adjacency list is sorted ascending,
//! so every traversal in the crate visits vertices in a fixed order and all
//! outputs are deterministic.

mod blocks;
mod degree;
mod traversal;

use std::collections::VecDeque;

use crate::error::{GrundyError, Result};

pub use blocks::{clique_blowup, is_block_graph, BlockCutTree};
pub use degree::{degree_profile, DegreeProfile};
pub use traversal::{bfs_ball, girth, Ball, Girth};

pub type Vertex = usize;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

/// Incremental construction that deduplicates repeated edges and counts them.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { n, edges: Vec::new() }
    }

    /// Grows the vertex count if needed.
    pub fn ensure_vertices(&mut self, n: usize) {
        self.n = self.n.max(n);
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(GrundyError::SelfLoop(u));
        }
        for x in [u, v] {
            if x >= self.n {
                return Err(GrundyError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        self.edges.push((u.min(v), u.max(v)));
        Ok(())
    }

    /// Finishes the graph, returning it with the number of duplicate edges dropped.
    pub fn build(mut self) -> (Graph, usize) {
        self.edges.sort_unstable();
        let before = self.edges.len();
        self.edges.dedup();
        let duplicates = before - self.edges.len();
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        (Graph { adj, m: self.edges.len() }, duplicates)
    }
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut builder = GraphBuilder::new(n);
        for (u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build().0)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GrundyError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// True for connected acyclic graphs (the single vertex included).
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    /// Subgraph induced by `vertices`; local vertex `i` is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut m = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for &x in &self.adj[v] {
                if local[x] != usize::MAX {
                    adj[i].push(local[x]);
                    if local[x] > i {
                        m += 1;
                    }
                }
            }
            adj[i].sort_unstable();
        }
        Graph { adj, m }
    }
}
