//! Command-line driver: ring facts, ideal lattices, the two annihilator
//! graphs with DOT export, and theorem verification over single rings or
//! exhaustively generated corpora.
//!
//! Exit codes: 0 on success (all checks hold), 1 when at least one theorem
//! check fails (the witness is printed), 2 on usage, parse, or input errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use annigraph::corpus::{generate_corpus, CorpusConfig};
use annigraph::graph::{extra_edges, ExtNat, GraphKind, IdealGraph};
use annigraph::ringspec::RingSpec;
use annigraph::verify::{run_all, run_check, run_corpus, RingAnalysis, Status, TheoremId};

#[derive(Parser)]
#[command(
    name = "annigraph",
    version,
    about = "Finite commutative rings, their ideal lattices, and the annihilating-ideal / annihilator-ideal graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Ag,
    Ai,
}

impl From<KindArg> for GraphKind {
    fn from(k: KindArg) -> GraphKind {
        match k {
            KindArg::Ag => GraphKind::Ag,
            KindArg::Ai => GraphKind::Ai,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Ring facts: order, reducedness, Nil(R), Z(R), locality, ideal count
    Info { spec: String },
    /// List the complete ideal lattice (vertices of the graphs marked *)
    Ideals { spec: String },
    /// Graph shape, girth, diameter and edges; optional DOT export
    Graph {
        spec: String,
        /// Which graph to inspect; both are summarized when omitted
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        /// Write the graph in DOT format to this path (A_I when --kind is omitted)
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// List the A_I edges that are not AG edges
    Compare { spec: String },
    /// Run the theorem checks on one ring or over a generated corpus
    Verify {
        spec: Option<String>,
        /// Restrict to a single theorem id (e.g. T-girt)
        #[arg(long)]
        theorem: Option<String>,
        /// Verify every generated ring up to this order instead of one ring
        #[arg(long, conflicts_with = "spec")]
        corpus: Option<u64>,
        /// Worker threads for corpus verification
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the corpus JSON report to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn analyze(spec_text: &str) -> Result<RingAnalysis, String> {
    let spec = RingSpec::parse(spec_text).map_err(|e| e.to_string())?;
    let ring = spec.build().map_err(|e| e.to_string())?;
    Ok(RingAnalysis::new(ring))
}

fn diam_str(d: Option<ExtNat>) -> String {
    match d {
        None => "na".to_string(),
        Some(x) => x.to_string(),
    }
}

fn graph_line(g: &IdealGraph) -> String {
    format!(
        "shape={} girth={} diam={}",
        g.classify(),
        g.girth(),
        diam_str(g.diameter())
    )
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Info { spec } => {
            let a = analyze(&spec)?;
            let lat = &a.lattice;
            let ring = &a.ring;
            println!("ring: {}", ring.label());
            println!("order: {}", ring.order());
            println!("reduced: {}", ring.is_reduced());
            println!("nilradical: {}", ring.nilradical());
            println!("zero_divisors: {}", ring.zero_divisor_set());
            println!("zero_divisors_ideal: {}", ring.is_zr_ideal());
            println!("local: {}", lat.is_local(ring));
            println!("minimal_primes: {}", a.minimal_prime_count());
            println!("ideals: {}", lat.len());
            println!("vertices: {}", a.vertex_count());
            Ok(ExitCode::SUCCESS)
        }
        Command::Ideals { spec } => {
            let a = analyze(&spec)?;
            println!(
                "ideals of {} ({} total, {} vertices):",
                a.ring.label(),
                a.lattice.len(),
                a.vertex_count()
            );
            let vertex_sets: Vec<&[usize]> =
                a.ai.vertices().iter().map(|v| v.elements()).collect();
            for ideal in a.lattice.ideals() {
                let marker = if vertex_sets.contains(&ideal.elements()) { "*" } else { " " };
                println!("{marker} {ideal}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Graph { spec, kind, dot } => {
            let a = analyze(&spec)?;
            match kind {
                Some(k) => {
                    let g = match GraphKind::from(k) {
                        GraphKind::Ag => &a.ag,
                        GraphKind::Ai => &a.ai,
                    };
                    println!("{}", graph_line(g));
                    println!("vertices: {}", g.vertex_count());
                    for v in g.vertices() {
                        println!("  {v}");
                    }
                    let edges = g.edges();
                    println!("edges: {}", edges.len());
                    for (i, j) in edges {
                        println!("  {} -- {}", g.vertices()[i], g.vertices()[j]);
                    }
                    if let Some(path) = dot {
                        std::fs::write(&path, g.to_dot())
                            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    }
                }
                None => {
                    println!("A_I: {}", graph_line(&a.ai));
                    println!("AG: {}", graph_line(&a.ag));
                    println!("extra edges: {}", a.extra_edges().len());
                    if let Some(path) = dot {
                        std::fs::write(&path, a.ai.to_dot())
                            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare { spec } => {
            let a = analyze(&spec)?;
            println!("ring: {}", a.ring.label());
            println!("AG edges: {}", a.ag.edge_count());
            println!("A_I edges: {}", a.ai.edge_count());
            let extra = extra_edges(&a.ag, &a.ai);
            println!("extra (A_I \\ AG): {}", extra.len());
            for (i, j) in extra {
                println!("  {} -- {}", a.ai.vertices()[i], a.ai.vertices()[j]);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { spec, theorem, corpus, jobs, json } => {
            let theorem = match theorem {
                Some(t) => Some(TheoremId::from_id(&t).ok_or_else(|| {
                    let ids: Vec<&str> = TheoremId::ALL.iter().map(|t| t.id()).collect();
                    format!("unknown theorem id {t:?}; known ids: {}", ids.join(", "))
                })?),
                None => None,
            };
            match (spec, corpus) {
                (Some(spec), None) => verify_one(&spec, theorem, json.as_deref()),
                (None, Some(max_order)) => {
                    verify_corpus(max_order, theorem, jobs, json.as_deref())
                }
                (None, None) => Err("give a ring spec or --corpus <max_order>".into()),
                (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
            }
        }
    }
}

fn verify_one(
    spec: &str,
    theorem: Option<TheoremId>,
    json: Option<&std::path::Path>,
) -> Result<ExitCode, String> {
    if json.is_some() {
        return Err("--json is only available with --corpus".into());
    }
    let a = analyze(spec)?;
    let reports = match theorem {
        Some(id) => vec![run_check(&a, id)],
        None => run_all(&a),
    };
    let mut counts = (0usize, 0usize, 0usize);
    for r in &reports {
        println!("{}  {:<20} {}", r.ring, r.theorem.id(), r.status);
        match r.status {
            Status::Holds => counts.0 += 1,
            Status::Fails => counts.1 += 1,
            Status::NotApplicable => counts.2 += 1,
        }
        if let Some(w) = &r.witness {
            let payload = serde_json::to_string(w).map_err(|e| e.to_string())?;
            println!("    witness: {payload}");
        }
    }
    println!(
        "summary: {} holds, {} fails, {} not-applicable",
        counts.0, counts.1, counts.2
    );
    Ok(if counts.1 == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn verify_corpus(
    max_order: u64,
    theorem: Option<TheoremId>,
    jobs: usize,
    json: Option<&std::path::Path>,
) -> Result<ExitCode, String> {
    if max_order < 2 {
        return Err("--corpus needs a maximum order of at least 2".into());
    }
    let rings = generate_corpus(&CorpusConfig::all(max_order)).map_err(|e| e.to_string())?;
    println!("corpus: {} rings (max order {max_order})", rings.len());
    let summary = run_corpus(rings, jobs.max(1));
    for (id, c) in &summary.counts {
        if theorem.is_some_and(|t| t != *id) {
            continue;
        }
        println!(
            "{:<20} {:>5} holds {:>5} fails {:>5} n/a",
            id.id(),
            c.holds,
            c.fails,
            c.not_applicable
        );
    }
    let mut failures = 0usize;
    for f in &summary.failures {
        if theorem.is_some_and(|t| t.id() != f.theorem) {
            continue;
        }
        failures += 1;
        let payload = serde_json::to_string(&f.witness).map_err(|e| e.to_string())?;
        println!("FAIL {} {}: {payload}", f.ring, f.theorem);
    }
    if let Some(path) = json {
        let mut text = serde_json::to_string_pretty(&summary.json_report())
            .map_err(|e| e.to_string())?;
        text.push('\n');
        std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    let mut line = String::new();
    if failures == 0 {
        write!(line, "result: ok ({} rings, 0 failures)", summary.entries.len()).unwrap();
    } else {
        write!(line, "result: FAILED ({failures} failures)").unwrap();
    }
    println!("{line}");
    Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
