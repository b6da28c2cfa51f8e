//! `grundy`: analyze graphs and compute or bound their Grundy number.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use grundy_core::block::generate_clique_family;
use grundy_core::generators::{random_block_graph, random_tree};
use grundy_core::io::{read_graph, write_dimacs, write_edge_list, write_witness, GraphFormat, ParsedGraph};
use grundy_core::oracle::{Oracle, DEFAULT_ORACLE_CAP};
use grundy_core::report::{decide_report, gamma_report, summarize, GraphSummary, MethodChoice, Timing, SCHEMA_VERSION};
use grundy_core::{Graph, GrundyColoring, GrundyError, SolveOptions};

#[derive(Parser)]
#[command(name = "grundy", version, about = "Grundy number of graphs: exact for block graphs and large girth, bounded otherwise")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Input {
    /// Graph file (edge list or DIMACS).
    input: PathBuf,
    /// Input format; detected from the contents when omitted.
    #[arg(long, value_parser = parse_format)]
    format: Option<GraphFormat>,
}

#[derive(Subcommand)]
enum Command {
    /// Structural statistics only.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Γ exactly, or certified bounds on it.
    Gamma {
        #[command(flatten)]
        input: Input,
        /// auto, block, girth, approx or oracle.
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: MethodChoice,
        /// Write the checked witness coloring as `v color` lines.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Whether Γ ≥ k, for k ≤ (g+1)/2.
    Decide {
        #[command(flatten)]
        input: Input,
        k: usize,
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Print a generated graph as an edge list.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, default_value_t = 0, global = true)]
        seed: u64,
        /// Emit DIMACS instead of an edge list.
        #[arg(long, global = true)]
        dimacs: bool,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Uniform random tree.
    Tree { n: usize },
    /// Random block graph with blocks of at most `max_block` vertices.
    Blockgraph {
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_block: usize,
    },
    /// The clique family G_{t,p} with Γ = t(p−1)+1.
    Cliquefamily { t: usize, p: usize },
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse().map_err(|e: GrundyError| e.to_string())
}

fn parse_method(s: &str) -> Result<MethodChoice, String> {
    s.parse().map_err(|e: GrundyError| e.to_string())
}

fn exit_code(err: &GrundyError) -> u8 {
    match err {
        GrundyError::MethodMismatch(_) => 2,
        GrundyError::KTooLargeForGirth { .. } => 3,
        _ => 1,
    }
}

fn load(input: &Input) -> Result<(ParsedGraph, f64), GrundyError> {
    let t0 = Instant::now();
    let parsed = read_graph(&input.input, input.format)?;
    Ok((parsed, t0.elapsed().as_secs_f64()))
}

fn oracle_from_env() -> Result<Oracle, GrundyError> {
    match std::env::var("GRUNDY_ORACLE_CAP") {
        Ok(v) => {
            let cap = v
                .trim()
                .parse()
                .map_err(|_| GrundyError::InvalidParameter(format!("GRUNDY_ORACLE_CAP={v} is not a number")))?;
            Oracle::new(cap)
        }
        Err(_) => Oracle::new(DEFAULT_ORACLE_CAP),
    }
}

fn save_witness(path: &Path, c: &GrundyColoring) -> Result<String, GrundyError> {
    std::fs::write(path, write_witness(c))?;
    Ok(path.display().to_string())
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn print_summary(s: &GraphSummary) {
    println!("vertices        {}", s.n);
    println!("edges           {}", s.m);
    println!("components      {}", s.components);
    println!("girth           {}", s.girth);
    println!("max degree      {}", s.max_degree);
    println!("delta2          {}", s.delta2);
    println!("block graph     {}", if s.is_block_graph { "yes" } else { "no" });
    println!("omega           {}", opt(s.omega));
    println!("beta            {}", s.beta);
    println!("delta tilde     {}", s.delta_tilde);
    println!("cut vertices    {}", s.cut_vertices);
}

fn print_timing(t: &Timing) {
    println!("time            parse {:.6}s decompose {:.6}s solve {:.6}s", t.parse, t.decompose, t.solve);
}

fn warn_duplicates(parsed: &ParsedGraph) {
    if parsed.duplicates > 0 {
        eprintln!("note: dropped {} repeated edges", parsed.duplicates);
    }
}

fn emit_graph(g: &Graph, dimacs: bool) {
    print!("{}", if dimacs { write_dimacs(g) } else { write_edge_list(g) });
}

fn run(cli: Cli) -> Result<(), GrundyError> {
    match cli.command {
        Command::Analyze { input, json: as_json } => {
            let (parsed, parse) = load(&input)?;
            warn_duplicates(&parsed);
            let t0 = Instant::now();
            let summary = summarize(&parsed.graph);
            let timing = Timing { parse, decompose: t0.elapsed().as_secs_f64(), solve: 0.0 };
            if as_json {
                let out = serde_json::json!({
                    "schema_version": SCHEMA_VERSION,
                    "summary": summary,
                    "timing": timing,
                });
                println!("{}", serde_json::to_string_pretty(&out).expect("reports serialize"));
            } else {
                print_summary(&summary);
                print_timing(&timing);
            }
        }
        Command::Gamma { input, method, witness, json: as_json, threads } => {
            let (parsed, parse) = load(&input)?;
            warn_duplicates(&parsed);
            let opts = SolveOptions::with_threads(threads);
            let mut report = gamma_report(&parsed.graph, method, &opts, &oracle_from_env()?)?;
            report.timing.parse = parse;
            if let (Some(path), Some(c)) = (&witness, &report.witness) {
                report.witness_path = Some(save_witness(path, c)?);
            }
            if as_json {
                println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
            } else {
                print_summary(&report.summary);
                println!("method          {:?}", report.method);
                println!("gamma           {}", opt(report.gamma));
                println!("bounds          {} <= gamma <= {}", report.lower, report.upper);
                println!("ratio           {}", report.ratio);
                if let Some(p) = &report.witness_path {
                    println!("witness         {p}");
                }
                print_timing(&report.timing);
            }
        }
        Command::Decide { input, k, witness, json: as_json, threads } => {
            let (parsed, parse) = load(&input)?;
            warn_duplicates(&parsed);
            let mut report = decide_report(&parsed.graph, k, &SolveOptions::with_threads(threads))?;
            report.timing.parse = parse;
            if let (Some(path), Some(c)) = (&witness, &report.witness) {
                report.witness_path = Some(save_witness(path, c)?);
            }
            if as_json {
                println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
            } else {
                println!("gamma >= {k}: {}", if report.answer { "yes" } else { "no" });
                if let Some(p) = &report.witness_path {
                    println!("witness         {p}");
                }
                print_timing(&report.timing);
            }
        }
        Command::Gen { kind, seed, dimacs } => {
            let g = match kind {
                GenKind::Tree { n } => random_tree(n, seed),
                GenKind::Blockgraph { n, max_block } => random_block_graph(n, max_block, seed)?,
                GenKind::Cliquefamily { t, p } => generate_clique_family(t, p)?,
            };
            emit_graph(&g, dimacs);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
