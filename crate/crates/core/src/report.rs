//! Structural summaries, method routing and the versioned JSON report shared
//! by the CLI and the Python bindings.

use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::block::witness_block_graph;
use crate::error::{GrundyError, Result};
use crate::girth::{approx_gamma_with, decide_gamma_at_least_with, exact_gamma_large_girth_with, ApproxMode};
use crate::graph::{clique_blowup, degree_profile, girth, BlockCutTree, Girth, Graph};
use crate::oracle::{first_fit, is_grundy_coloring, GrundyColoring, Oracle};
use crate::SolveOptions;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub components: usize,
    pub girth: Girth,
    pub max_degree: usize,
    pub delta2: usize,
    pub is_block_graph: bool,
    /// Largest block size, reported only for block graphs.
    pub omega: Option<usize>,
    pub beta: usize,
    pub delta_tilde: usize,
    pub cut_vertices: usize,
}

pub fn summarize(g: &Graph) -> GraphSummary {
    let profile = degree_profile(g);
    let bct = BlockCutTree::decompose(g);
    let is_block = (0..bct.blocks.len()).all(|b| bct.is_complete_block(b));
    GraphSummary {
        n: g.n(),
        m: g.m(),
        components: g.components().len(),
        girth: girth(g),
        max_degree: profile.max_degree,
        delta2: profile.delta2,
        is_block_graph: is_block,
        omega: is_block.then(|| bct.max_block_size()),
        beta: bct.max_block_size(),
        delta_tilde: bct.max_cut_degree(),
        cut_vertices: bct.cut_vertices.len(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    BlockExact,
    LargeGirthExact,
    Approx,
    OracleExact,
}

impl Method {
    pub fn is_exact(self) -> bool {
        self != Method::Approx
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MethodChoice {
    #[default]
    Auto,
    Block,
    Girth,
    Approx,
    Oracle,
}

impl FromStr for MethodChoice {
    type Err = GrundyError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(MethodChoice::Auto),
            "block" => Ok(MethodChoice::Block),
            "girth" => Ok(MethodChoice::Girth),
            "approx" => Ok(MethodChoice::Approx),
            "oracle" => Ok(MethodChoice::Oracle),
            other => Err(GrundyError::InvalidParameter(format!("unknown method {other:?}"))),
        }
    }
}

/// Seconds spent per phase.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Timing {
    pub parse: f64,
    pub decompose: f64,
    pub solve: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub summary: GraphSummary,
    pub method: Method,
    /// Set when `lower == upper`.
    pub gamma: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    /// Guarantee of the lower bound as a fraction, `"1"` for exact answers.
    pub ratio: String,
    pub witness_path: Option<String>,
    pub timing: Timing,
    #[serde(skip)]
    pub witness: Option<GrundyColoring>,
}

fn route(summary: &GraphSummary, choice: MethodChoice) -> Result<Method> {
    let large_girth = summary.girth.at_least(2 * summary.delta2 + 1);
    match choice {
        MethodChoice::Auto if summary.is_block_graph => Ok(Method::BlockExact),
        MethodChoice::Auto if large_girth => Ok(Method::LargeGirthExact),
        MethodChoice::Auto | MethodChoice::Approx => Ok(Method::Approx),
        MethodChoice::Block if summary.is_block_graph => Ok(Method::BlockExact),
        MethodChoice::Block => Err(GrundyError::MethodMismatch("graph is not a block graph".into())),
        MethodChoice::Girth if large_girth => Ok(Method::LargeGirthExact),
        MethodChoice::Girth => Err(GrundyError::MethodMismatch(format!(
            "girth {} is below 2Δ₂+1 = {}",
            summary.girth,
            2 * summary.delta2 + 1
        ))),
        MethodChoice::Oracle => Ok(Method::OracleExact),
    }
}

/// Computes Γ or bounds on it with the chosen method. `oracle` is only used
/// by [`MethodChoice::Oracle`]; a graph above its cap is a method mismatch.
pub fn gamma_report(
    g: &Graph,
    choice: MethodChoice,
    opts: &SolveOptions,
    oracle: &Oracle,
) -> Result<Report> {
    let t0 = Instant::now();
    let summary = summarize(g);
    let decompose = t0.elapsed().as_secs_f64();
    let method = route(&summary, choice)?;
    let t1 = Instant::now();
    let (lower, upper, ratio, witness) = match method {
        Method::BlockExact => {
            let (table, c) = witness_block_graph(g, opts)?;
            (table.gamma, table.gamma, "1".to_string(), c)
        }
        Method::LargeGirthExact => {
            let (gamma, c) = exact_gamma_large_girth_with(g, opts)?;
            (gamma, gamma, "1".to_string(), c)
        }
        Method::OracleExact => {
            if g.n() > oracle.cap() {
                return Err(GrundyError::MethodMismatch(format!(
                    "{} vertices exceed the oracle cap {}",
                    g.n(),
                    oracle.cap()
                )));
            }
            let (gamma, order) = oracle.best_ordering(g)?;
            (gamma, gamma, "1".to_string(), first_fit(g, &order)?)
        }
        Method::Approx => {
            let r = approx_gamma_with(g, opts)?;
            let upper = if r.mode == ApproxMode::Exact {
                r.value
            } else {
                let blowup = crate::block::gamma_block_graph_with(&clique_blowup(g), opts)?.gamma;
                r.upper().min(summary.delta2 + 1).min(blowup)
            };
            let w = r.witness.clone().unwrap_or_else(|| GrundyColoring::from_colors(Vec::new()));
            (r.value, upper, r.ratio_guarantee.to_string(), w)
        }
    };
    let solve = t1.elapsed().as_secs_f64();
    if !is_grundy_coloring(g, witness.colors()) || witness.num_colors() < lower {
        return Err(GrundyError::WitnessFailed("final witness rejected by the checker".into()));
    }
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        summary,
        method,
        gamma: (lower == upper).then_some(lower),
        lower,
        upper,
        ratio,
        witness_path: None,
        timing: Timing { parse: 0.0, decompose, solve },
        witness: Some(witness),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecideReport {
    pub schema_version: u32,
    pub summary: GraphSummary,
    pub k: usize,
    pub answer: bool,
    pub witness_path: Option<String>,
    pub timing: Timing,
    #[serde(skip)]
    pub witness: Option<GrundyColoring>,
}

pub fn decide_report(g: &Graph, k: usize, opts: &SolveOptions) -> Result<DecideReport> {
    let t0 = Instant::now();
    let summary = summarize(g);
    let decompose = t0.elapsed().as_secs_f64();
    let t1 = Instant::now();
    let witness = decide_gamma_at_least_with(g, k, opts)?;
    let solve = t1.elapsed().as_secs_f64();
    Ok(DecideReport {
        schema_version: SCHEMA_VERSION,
        summary,
        k,
        answer: witness.is_some(),
        witness_path: None,
        timing: Timing { parse: 0.0, decompose, solve },
        witness,
    })
}
