//! Ground truth at desk scale: First-Fit simulation, Grundy-coloring
//! validation, and exhaustive Γ computation by enumerating orderings.

use std::collections::BTreeSet;

use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::error::{GrundyError, Result};
use crate::graph::{degree_profile, Graph, Vertex};

/// A vertex coloring with colors starting at 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrundyColoring {
    colors: Vec<usize>,
}

impl GrundyColoring {
    /// Wraps a color vector. Validity is not checked; see [`is_grundy_coloring`].
    pub fn from_colors(colors: Vec<usize>) -> Self {
        GrundyColoring { colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    pub fn num_colors(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn into_colors(self) -> Vec<usize> {
        self.colors
    }
}

/// The set of colors a vertex receives over all Grundy colorings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorSpectrum {
    pub vertex: Vertex,
    pub achievable: BTreeSet<usize>,
}

impl ColorSpectrum {
    pub fn max(&self) -> usize {
        self.achievable.iter().next_back().copied().unwrap_or(0)
    }

    /// `true` when the achievable set is `{1, …, max}`.
    pub fn is_prefix(&self) -> bool {
        self.achievable.iter().copied().eq(1..=self.max())
    }
}

fn smallest_missing(g: &Graph, v: Vertex, colors: &[usize]) -> usize {
    let mut used = vec![false; g.degree(v) + 2];
    for &x in g.neighbors(v) {
        let c = colors[x];
        if c < used.len() {
            used[c] = true;
        }
    }
    (1..).find(|&c| !used[c]).unwrap()
}

/// Greedy coloring in the given order: each vertex takes the smallest color
/// absent from its already-colored neighbors.
pub fn first_fit(g: &Graph, order: &[Vertex]) -> Result<GrundyColoring> {
    let mut seen = vec![false; g.n()];
    if order.len() != g.n() {
        return Err(GrundyError::NotAPermutation);
    }
    for &v in order {
        if v >= g.n() || seen[v] {
            return Err(GrundyError::NotAPermutation);
        }
        seen[v] = true;
    }
    let mut colors = vec![0; g.n()];
    for &v in order {
        colors[v] = smallest_missing(g, v, &colors);
    }
    Ok(GrundyColoring { colors })
}

/// Checks a partial coloring (`0` = uncolored): colored vertices are
/// properly colored among themselves and every vertex of color `j` has a
/// colored neighbor of every color `i < j`.
pub fn is_partial_grundy(g: &Graph, colors: &[usize]) -> bool {
    if colors.len() != g.n() {
        return false;
    }
    g.vertices().filter(|&v| colors[v] > 0).all(|v| {
        let c = colors[v];
        let mut seen = vec![false; c];
        for &x in g.neighbors(v) {
            let cx = colors[x];
            if cx == c {
                return false;
            }
            if cx > 0 && cx < c {
                seen[cx] = true;
            }
        }
        seen[1..].iter().all(|&s| s)
    })
}

/// True iff `colors` colors every vertex with a positive integer, is proper,
/// and has the Grundy property.
pub fn is_grundy_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && colors.iter().all(|&c| c >= 1) && is_partial_grundy(g, colors)
}

/// Extends a partial Grundy coloring to the whole graph by First-Fit:
/// colored vertices first by ascending color (then id), the rest by id.
/// Colored vertices keep their colors.
pub fn extend_first_fit(g: &Graph, partial: &[usize]) -> Result<GrundyColoring> {
    if !is_partial_grundy(g, partial) {
        return Err(GrundyError::WitnessFailed("partial coloring is not Grundy".into()));
    }
    let mut order: Vec<Vertex> = g.vertices().filter(|&v| partial[v] > 0).collect();
    order.sort_by_key(|&v| (partial[v], v));
    order.extend(g.vertices().filter(|&v| partial[v] == 0));
    let coloring = first_fit(g, &order)?;
    debug_assert!(g.vertices().all(|v| partial[v] == 0 || coloring.color(v) == partial[v]));
    Ok(coloring)
}

/// Default vertex cap for exhaustive enumeration.
pub const DEFAULT_ORACLE_CAP: usize = 9;
/// Largest cap supported by the packed state encoding.
pub const MAX_ORACLE_CAP: usize = 24;

const BITS: u32 = 5;

/// Exhaustive Grundy computations over all First-Fit orderings.
///
/// Orderings are explored depth-first; two prefixes that leave the same
/// partial coloring behave identically afterwards, so each partial coloring
/// (packed 5 bits per vertex) is expanded once.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_ORACLE_CAP }
    }
}

struct Search<'a> {
    g: &'a Graph,
    seen: FxHashSet<u128>,
    colors: Vec<usize>,
    order: Vec<Vertex>,
    // pruning state for the Γ search
    prune: bool,
    ceiling: usize,
    best: usize,
    best_order: Vec<Vertex>,
    // spectrum collection
    spectra: Vec<u32>,
    // stop once this vertex receives this color
    target: Option<(Vertex, usize)>,
    found: Option<Vec<Vertex>>,
}

impl Search<'_> {
    fn key(&self) -> u128 {
        self.colors
            .iter()
            .enumerate()
            .fold(0u128, |acc, (v, &c)| acc | ((c as u128) << (BITS * v as u32)))
    }

    fn run(&mut self) {
        if self.found.is_some() {
            return;
        }
        let n = self.g.n();
        if self.order.len() == n {
            let used = self.colors.iter().copied().max().unwrap_or(0);
            if used > self.best {
                self.best = used;
                self.best_order = self.order.clone();
            }
            return;
        }
        if self.prune {
            if self.best >= self.ceiling {
                return;
            }
            let current = self.colors.iter().copied().max().unwrap_or(0);
            let reachable = self
                .g
                .vertices()
                .filter(|&v| self.colors[v] == 0)
                .map(|v| self.g.degree(v) + 1)
                .max()
                .unwrap_or(0)
                .max(current);
            if reachable <= self.best {
                return;
            }
        }
        for v in 0..n {
            if self.colors[v] != 0 {
                continue;
            }
            let c = smallest_missing(self.g, v, &self.colors);
            self.spectra[v] |= 1 << c;
            if self.target == Some((v, c)) {
                let mut order = self.order.clone();
                order.push(v);
                order.extend((0..n).filter(|&x| x != v && self.colors[x] == 0));
                self.found = Some(order);
                return;
            }
            self.colors[v] = c;
            let key = self.key();
            if self.seen.insert(key) {
                self.order.push(v);
                self.run();
                self.order.pop();
            }
            self.colors[v] = 0;
        }
    }
}

impl Oracle {
    pub fn new(cap: usize) -> Result<Self> {
        if cap == 0 || cap > MAX_ORACLE_CAP {
            return Err(GrundyError::InvalidParameter(format!(
                "oracle cap must be in 1..={MAX_ORACLE_CAP}"
            )));
        }
        Ok(Oracle { cap })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.n() > self.cap {
            return Err(GrundyError::TooLarge { n: g.n(), cap: self.cap });
        }
        Ok(())
    }

    fn search<'a>(&self, g: &'a Graph, prune: bool) -> Search<'a> {
        self.search_for(g, prune, None)
    }

    fn search_for<'a>(&self, g: &'a Graph, prune: bool, target: Option<(Vertex, usize)>) -> Search<'a> {
        let mut s = Search {
            g,
            seen: FxHashSet::default(),
            colors: vec![0; g.n()],
            order: Vec::with_capacity(g.n()),
            prune,
            ceiling: degree_profile(g).delta2 + 1,
            best: 0,
            best_order: Vec::new(),
            spectra: vec![0; g.n()],
            target,
            found: None,
        };
        s.run();
        s
    }

    /// Γ(G) together with an ordering on which First-Fit uses Γ(G) colors.
    pub fn best_ordering(&self, g: &Graph) -> Result<(usize, Vec<Vertex>)> {
        self.check(g)?;
        let s = self.search(g, true);
        Ok((s.best, s.best_order))
    }

    /// Γ(G): the maximum number of colors First-Fit uses over all orderings.
    pub fn brute_force_gamma(&self, g: &Graph) -> Result<usize> {
        self.best_ordering(g).map(|(gamma, _)| gamma)
    }

    /// `A_G(u)` for every vertex, by recording each vertex's color over every
    /// reachable partial First-Fit state.
    pub fn spectra(&self, g: &Graph) -> Result<Vec<ColorSpectrum>> {
        self.check(g)?;
        let s = self.search(g, false);
        Ok(s.spectra
            .iter()
            .enumerate()
            .map(|(vertex, &mask)| ColorSpectrum {
                vertex,
                achievable: (1..32).filter(|c| mask & (1 << c) != 0).collect(),
            })
            .collect())
    }

    pub fn color_spectrum(&self, g: &Graph, u: Vertex) -> Result<ColorSpectrum> {
        g.check_vertex(u)?;
        Ok(self.spectra(g)?.swap_remove(u))
    }

    /// An ordering on which First-Fit gives `u` color `k`, if one exists.
    pub fn ordering_with_color(&self, g: &Graph, u: Vertex, k: usize) -> Result<Option<Vec<Vertex>>> {
        self.check(g)?;
        g.check_vertex(u)?;
        Ok(self.search_for(g, false, Some((u, k))).found)
    }

    /// Γ_G(u): the largest color `u` receives in a Grundy coloring of `g`.
    pub fn brute_force_gamma_at(&self, g: &Graph, u: Vertex) -> Result<usize> {
        Ok(self.color_spectrum(g, u)?.max())
    }

    /// Γ_G(u) for every vertex.
    pub fn gamma_per_vertex(&self, g: &Graph) -> Result<Vec<usize>> {
        Ok(self.spectra(g)?.iter().map(ColorSpectrum::max).collect())
    }
}

/// Γ(G) by enumeration with the default cap.
pub fn brute_force_gamma(g: &Graph) -> Result<usize> {
    Oracle::default().brute_force_gamma(g)
}

/// Γ_G(u) by enumeration with the default cap.
pub fn brute_force_gamma_at(g: &Graph, u: Vertex) -> Result<usize> {
    Oracle::default().brute_force_gamma_at(g, u)
}

/// `A_G(u)` by enumeration with the default cap.
pub fn color_spectrum(g: &Graph, u: Vertex) -> Result<ColorSpectrum> {
    Oracle::default().color_spectrum(g, u)
}
