use serde::Serialize;

use super::{Graph, Vertex};

/// Degrees, the local bound `Δ(u)` and the graph parameter `Δ₂`.
///
/// `Δ(u)` is the largest degree among neighbors `v` of `u` with
/// `d(v) ≤ d(u)`, or 0 when no neighbor qualifies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degree: Vec<usize>,
    pub local: Vec<usize>,
    pub delta2: usize,
    pub max_degree: usize,
}

impl DegreeProfile {
    pub fn local_bound(&self, u: Vertex) -> usize {
        self.local[u]
    }
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let local: Vec<usize> = g
        .vertices()
        .map(|u| {
            g.neighbors(u)
                .iter()
                .map(|&v| degree[v])
                .filter(|&d| d <= degree[u])
                .max()
                .unwrap_or(0)
        })
        .collect();
    DegreeProfile {
        delta2: local.iter().copied().max().unwrap_or(0),
        max_degree: degree.iter().copied().max().unwrap_or(0),
        degree,
        local,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, star};

    #[test]
    fn cycles_are_two_regular() {
        let p = degree_profile(&cycle(6));
        assert!(p.local.iter().all(|&d| d == 2));
        assert_eq!(p.delta2, 2);
    }

    #[test]
    fn star_center_and_leaves() {
        let p = degree_profile(&star(5));
        assert_eq!(p.local[0], 1);
        assert!(p.local[1..].iter().all(|&d| d == 0));
        assert_eq!(p.delta2, 1);
        assert_eq!(p.max_degree, 5);
    }

    #[test]
    fn complete_graph() {
        assert_eq!(degree_profile(&complete(4)).delta2, 3);
    }

    #[test]
    fn isolated_vertex_has_zero_bound() {
        let p = degree_profile(&Graph::empty(2));
        assert_eq!(p.local, vec![0, 0]);
        assert_eq!(p.delta2, 0);
    }
}
