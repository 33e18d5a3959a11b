//! `qktw`: build q-Kneser graphs, tree decompositions and verification reports.
//!
//! Exit codes: 0 when every check passed, 1 when a check failed, 2 for usage
//! or input errors, 3 when a size or search budget was exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use qkneser::exact::{mis_exact, treewidth_exact, SolveBudget};
use qkneser::graph::Graph;
use qkneser::kneser::{alpha_value, build_kneser_graph, star_independent_vertices, theorem_verdict, KneserParams};
use qkneser::quadric::build_quadric_graph;
use qkneser::treedec::{read_gr, read_td, star_decomposition, validate_td, write_gr, write_td};
use qkneser::verify::{run_suite, verify_all, Suite};
use qkneser::Error;

#[derive(Parser)]
#[command(name = "qktw", version, about = "Treewidth toolkit for generalized q-Kneser graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct ParamArgs {
    /// Field order (a prime power)
    #[arg(short)]
    q: u64,
    /// Ambient dimension
    #[arg(short)]
    n: usize,
    /// Subspace dimension
    #[arg(short)]
    k: usize,
    /// Adjacent when the intersection has dimension below t
    #[arg(short)]
    t: usize,
}

impl ParamArgs {
    fn params(self) -> qkneser::Result<KneserParams> {
        KneserParams::new(self.q, self.n, self.k, self.t)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write K_q(n,k,t), or the quadric graph with --quadric, as a .gr file
    Gen {
        #[arg(short)]
        q: u64,
        #[arg(short, required_unless_present = "quadric")]
        n: Option<usize>,
        #[arg(short, required_unless_present = "quadric")]
        k: Option<usize>,
        #[arg(short, required_unless_present = "quadric")]
        t: Option<usize>,
        /// Non-perpendicularity graph of Q+(5,q) instead of a Kneser graph
        #[arg(long)]
        quadric: bool,
        #[arg(short, long)]
        output: PathBuf,
        /// Also write a label file: one "index label" line per vertex
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Which known results determine the treewidth, as JSON
    Verdict(ParamArgs),
    /// Independence number: formula, and exact search when within budget
    Alpha {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = SolveBudget::MIS.max_vertices)]
        max_vertices: usize,
    },
    /// Star tree decomposition from the canonical maximum independent set
    TdBuild {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check a .td file against a .gr file
    TdValidate { graph: PathBuf, decomposition: PathBuf },
    /// Exact treewidth of a small .gr graph
    TwExact {
        graph: PathBuf,
        #[arg(long, default_value_t = SolveBudget::TREEWIDTH.max_vertices)]
        max_vertices: usize,
        /// Seconds
        #[arg(long)]
        time_limit: Option<u64>,
        /// Write the optimal decomposition here
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run one lemma suite: gauss-bounds, parabola, bridge, pair-count,
    /// counting, grid, klein or perp-census
    Verify {
        suite: String,
        /// Restrict the sweep to this field order
        #[arg(short)]
        q: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run every suite
    VerifyAll {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(_) | Error::SizeLimit { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_err(path, e))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_err(path, e))
}

/// Prints `value` as pretty JSON (and writes it to `output` if given).
fn emit(value: &impl Serialize, output: Option<&Path>) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    if let Some(path) = output {
        write(path, &text)?;
    }
    print!("{text}");
    Ok(())
}

fn label_file(g: &Graph) -> String {
    g.labels().iter().enumerate().map(|(i, l)| format!("{} {l}\n", i + 1)).collect()
}

/// Returns whether every check passed.
fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Gen { q, n, k, t, quadric, output, labels } => {
            let g = if quadric {
                build_quadric_graph(q)?
            } else {
                let (n, k, t) = (n.unwrap_or_default(), k.unwrap_or_default(), t.unwrap_or_default());
                build_kneser_graph(&KneserParams::new(q, n, k, t)?)?
            };
            write(&output, &write_gr(&g))?;
            if let Some(path) = labels {
                write(&path, &label_file(&g))?;
            }
            emit(&json!({"vertices": g.vertex_count(), "edges": g.edge_count(), "output": output}), None)?;
            Ok(true)
        }
        Command::Verdict(args) => {
            emit(&theorem_verdict(&args.params()?), None)?;
            Ok(true)
        }
        Command::Alpha { params, max_vertices } => {
            let p = params.params()?;
            let formula = alpha_value(&p);
            let vertices = p.vertex_count();
            let exact: Option<Value> = if vertices <= max_vertices.into() {
                let g = build_kneser_graph(&p)?;
                let r = mis_exact(&g, SolveBudget::vertices(max_vertices))?;
                Some(json!({"size": r.size, "witness": r.witness}))
            } else {
                None
            };
            let agree = exact.as_ref().map(|e| e["size"].as_u64().map(Into::into) == Some(formula.clone()));
            emit(&json!({"params": p, "formula": formula.to_string(), "exact": exact, "agree": agree}), None)?;
            Ok(agree != Some(false))
        }
        Command::TdBuild { params, output } => {
            let p = params.params()?;
            let g = build_kneser_graph(&p)?;
            let a = star_independent_vertices(&g, &p)?;
            let td = star_decomposition(&g, &a)?;
            let report = validate_td(&g, &td);
            write(&output, &write_td(&td, g.vertex_count()))?;
            emit(&json!({"params": p, "bags": td.node_count(), "width": report.width, "valid": report.valid}), None)?;
            Ok(report.valid)
        }
        Command::TdValidate { graph, decomposition } => {
            let g = read_gr(&read(&graph)?)?;
            let (td, n) = read_td(&read(&decomposition)?)?;
            if n != g.vertex_count() {
                return Err(Failure::Usage(format!("decomposition is for {n} vertices, graph has {}", g.vertex_count())));
            }
            let report = validate_td(&g, &td);
            emit(&report, None)?;
            Ok(report.valid)
        }
        Command::TwExact { graph, max_vertices, time_limit, output } => {
            let g = read_gr(&read(&graph)?)?;
            let mut budget = SolveBudget::vertices(max_vertices);
            if let Some(s) = time_limit {
                budget = budget.with_time_limit(Duration::from_secs(s));
            }
            let r = treewidth_exact(&g, budget)?;
            if let Some(path) = output {
                write(&path, &write_td(&r.decomposition, g.vertex_count()))?;
            }
            let ordering: Vec<usize> = r.ordering.iter().map(|v| v + 1).collect();
            emit(&json!({"vertices": g.vertex_count(), "treewidth": r.treewidth, "ordering": ordering}), None)?;
            Ok(true)
        }
        Command::Verify { suite, q, output } => {
            let suite: Suite = suite.parse()?;
            let report = run_suite(suite, q)?;
            emit(&report, output.as_deref())?;
            Ok(report.passed())
        }
        Command::VerifyAll { output } => {
            let reports = verify_all()?;
            let passed = reports.iter().all(|r| r.passed());
            emit(&reports, output.as_deref())?;
            Ok(passed)
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("QKTW_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).filter(|&n| n > 0) {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
