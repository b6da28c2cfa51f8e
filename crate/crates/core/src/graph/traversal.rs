use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use super::{Graph, Vertex};

/// Length of a shortest cycle, or `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    /// `true` when the girth is at least `bound`. Forests satisfy every bound.
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Exact girth: one BFS per start vertex, each abandoned as soon as its
/// frontier is too deep to close a cycle shorter than the best one found.
/// O(n·m) overall.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        dist[s] = 0;
        touched.push(s);
        queue.push_back(s);
        'bfs: while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    touched.push(y);
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                    if 2 * dist[x] + 1 >= best {
                        break 'bfs;
                    }
                }
            }
        }
        for v in touched.drain(..) {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
        queue.clear();
        if best == 3 {
            break;
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// The ball `B(u, r)` with its BFS tree.
///
/// `vertices` lists the ball in BFS order starting with the center;
/// `parent` and `level` are aligned with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub center: Vertex,
    pub radius: usize,
    pub vertices: Vec<Vertex>,
    pub parent: Vec<Option<Vertex>>,
    pub level: Vec<usize>,
    position: HashMap<Vertex, usize>,
}

impl Ball {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.position.contains_key(&v)
    }

    /// Index of `v` in `vertices`.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.position.get(&v).copied()
    }

    pub fn level_of(&self, v: Vertex) -> Option<usize> {
        self.position(v).map(|i| self.level[i])
    }

    /// BFS tree edges as a graph on local ids (`i` is `vertices[i]`, the
    /// center is local vertex 0).
    pub fn tree(&self) -> Graph {
        let edges = self
            .parent
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (self.position[&p], i)));
        Graph::from_edges(self.len(), edges).expect("BFS tree edges are simple")
    }
}

/// Vertices within distance `radius` of `u`, with BFS parents and levels.
pub fn bfs_ball(g: &Graph, u: Vertex, radius: usize) -> Ball {
    let mut vertices = vec![u];
    let mut parent = vec![None];
    let mut level = vec![0];
    let mut position = HashMap::from([(u, 0)]);
    let mut head = 0;
    while head < vertices.len() {
        let x = vertices[head];
        let lx = level[head];
        head += 1;
        if lx == radius {
            continue;
        }
        for &y in g.neighbors(x) {
            if !position.contains_key(&y) {
                position.insert(y, vertices.len());
                vertices.push(y);
                parent.push(Some(x));
                level.push(lx + 1);
            }
        }
    }
    Ball { center: u, radius, vertices, parent, level, position }
}
