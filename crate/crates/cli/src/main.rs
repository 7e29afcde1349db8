//! Command-line interface: construct labelings, verify labeling files,
//! solve small instances exactly, and run batch scans or conjecture
//! checks.
//!
//! Exit codes: 0 when everything verified or matched, 1 when a
//! violation or mismatch was found, 2 on usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fs;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use coprime_core::conjectures::{check_conjectures, CheckOutcome, ConjectureId};
use coprime_core::graphs::{build, to_dot, GraphFamily};
use coprime_core::labeling::{to_dot_labeled, verify, LabelingDocument};
use coprime_core::scan::{scan_family, ScanFamily};
use coprime_core::solver::{solve, SolverConfig, VertexOrder};
use coprime_core::{label_gp2, label_gpstar, label_prism, label_y3, label_y5};

#[derive(Parser)]
#[command(
    name = "coprime",
    about = "Minimum coprime labelings of prisms, generalized Petersen graphs, and stacked prisms",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Prism,
    Gp2,
    Y3,
    Y5,
    Gpstar,
}

impl Family {
    fn scan_family(self) -> ScanFamily {
        match self {
            Family::Prism => ScanFamily::Prism,
            Family::Gp2 => ScanFamily::Gp2,
            Family::Y3 => ScanFamily::Y3,
            Family::Y5 => ScanFamily::Y5,
            Family::Gpstar => ScanFamily::GpStar,
        }
    }
}

#[derive(Args)]
struct FamilyParam {
    #[arg(long, value_enum)]
    family: Family,
    /// Cycle length for prism/gp2, layer count for y3/y5.
    #[arg(long)]
    n: Option<u64>,
    /// Inner-ring skip parameter for gpstar.
    #[arg(long)]
    k: Option<u64>,
}

impl FamilyParam {
    fn parameter(&self) -> Result<u64, String> {
        match self.family {
            Family::Gpstar => self.k.ok_or_else(|| "gpstar requires --k".to_string()),
            _ => self.n.ok_or_else(|| "this family requires --n".to_string()),
        }
    }

    fn graph_family(&self) -> Result<GraphFamily, String> {
        Ok(self.family.scan_family().graph_family(self.parameter()?))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build the labeling for one instance and print it as JSON or DOT.
    Construct {
        #[command(flatten)]
        family: FamilyParam,
        /// Emit the JSON labeling document (default).
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        /// Emit DOT with labels as node text.
        #[arg(long)]
        dot: bool,
        /// Emit DOT of the bare graph, without a labeling.
        #[arg(long, conflicts_with_all = ["json", "dot"])]
        graph: bool,
    },
    /// Verify a labeling document produced by `construct --json`.
    Verify {
        /// Path to the JSON labeling file ("-" for stdin).
        #[arg(long = "in", value_name = "FILE")]
        input: String,
    },
    /// Compute the minimum coprime number exactly.
    Solve {
        #[command(flatten)]
        family: FamilyParam,
        /// Node budget for the exhaustive search.
        #[arg(long, default_value_t = 400_000_000)]
        budget: u64,
        /// Largest maximum label to try (0 = automatic).
        #[arg(long, default_value_t = 0)]
        cap: u64,
        /// Split the root branching across threads (0 = sequential).
        #[arg(long, default_value_t = 0)]
        parallel: usize,
        /// Vertex assignment order.
        #[arg(long, value_enum, default_value_t = OrderArg::DegreeDesc)]
        order: OrderArg,
    },
    /// Construct and verify every instance in a parameter range,
    /// streaming one JSON line per instance.
    Scan {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Also confirm small instances with the exact solver.
        #[arg(long)]
        solver_confirm: bool,
        /// Vertex-count cap for solver confirmation.
        #[arg(long, default_value_t = 20)]
        confirm_cap: u64,
    },
    /// Check conjectured minimum coprime numbers against the exact
    /// solver on all instances under a vertex cap.
    Conjectures {
        /// Comma-separated subset of c3_7,c4_3,c4_4,c5_3 (default all).
        #[arg(long, value_delimiter = ',')]
        which: Vec<String>,
        /// Vertex-count cap per instance.
        #[arg(long, default_value_t = 20)]
        cap: u64,
        #[arg(long, default_value_t = 400_000_000)]
        budget: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    DegreeDesc,
    Input,
}

fn construct_labeling(
    family: &FamilyParam,
) -> Result<(GraphFamily, coprime_core::Labeling, coprime_core::Certificate), String> {
    let p = family.parameter()?;
    let built = match family.family {
        Family::Prism => label_prism(p),
        Family::Gp2 => label_gp2(p),
        Family::Y3 => label_y3(p),
        Family::Y5 => label_y5(p),
        Family::Gpstar => label_gpstar(p),
    };
    let (labeling, cert) = built.map_err(|e| e.to_string())?;
    Ok((family.graph_family()?, labeling, cert))
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());

    match cli.command {
        Command::Construct {
            family,
            json: _,
            dot,
            graph,
        } => {
            if graph {
                let g = build(family.graph_family()?).map_err(|e| e.to_string())?;
                write!(out, "{}", to_dot(&g)).ok();
                return Ok(true);
            }
            let (gf, labeling, cert) = construct_labeling(&family)?;
            let g = build(gf).map_err(|e| e.to_string())?;
            let report = verify(&g, &labeling).map_err(|e| e.to_string())?;
            if dot {
                write!(out, "{}", to_dot_labeled(&g, &labeling).unwrap()).ok();
            } else {
                let doc = LabelingDocument::new(&g, &labeling, cert, report.is_coprime());
                writeln!(out, "{}", serde_json::to_string(&doc).unwrap()).ok();
            }
            Ok(report.is_coprime())
        }
        Command::Verify { input } => {
            let text = if input == "-" {
                io::read_to_string(io::stdin()).map_err(|e| e.to_string())?
            } else {
                fs::read_to_string(&input).map_err(|e| format!("{input}: {e}"))?
            };
            let doc: LabelingDocument =
                serde_json::from_str(&text).map_err(|e| format!("bad labeling document: {e}"))?;
            let gf = doc
                .graph_family()
                .ok_or_else(|| "unknown family in document".to_string())?;
            let labeling = doc
                .labeling()
                .ok_or_else(|| "bad vertex ids or labels in document".to_string())?;
            let g = build(gf).map_err(|e| e.to_string())?;
            let report = verify(&g, &labeling).map_err(|e| e.to_string())?;
            let ok = report.is_coprime();
            writeln!(
                out,
                "{}",
                serde_json::json!({
                    "family": doc.family,
                    "max_label": labeling.max_label(),
                    "coprime": ok,
                    "prime": report.prime,
                    "violations": report.violations,
                    "duplicate_labels": report.duplicate_labels,
                })
            )
            .ok();
            Ok(ok)
        }
        Command::Solve {
            family,
            budget,
            cap,
            parallel,
            order,
        } => {
            let gf = family.graph_family()?;
            let g = build(gf).map_err(|e| e.to_string())?;
            let cfg = SolverConfig {
                max_label_cap: cap,
                node_budget: budget,
                vertex_order: match order {
                    OrderArg::DegreeDesc => VertexOrder::DegreeDesc,
                    OrderArg::Input => VertexOrder::Input,
                },
                parallel_width: parallel,
            };
            let report = solve(&g, cfg).map_err(|e| e.to_string())?;
            let labels: Vec<serde_json::Value> = report
                .optimal_labeling
                .iter()
                .map(|(v, l)| serde_json::json!({"id": v.to_string(), "label": l.get()}))
                .collect();
            writeln!(
                out,
                "{}",
                serde_json::json!({
                    "family": gf.name(),
                    "pr": report.pr_value,
                    "proven_optimal": report.proven_optimal,
                    "lower_bound": report.lower_bound_used,
                    "nodes_explored": report.nodes_explored,
                    "labeling": labels,
                })
            )
            .ok();
            Ok(true)
        }
        Command::Scan {
            family,
            from,
            to,
            solver_confirm,
            confirm_cap,
        } => {
            let cap = solver_confirm.then_some(confirm_cap);
            let summary = scan_family(family.scan_family(), from, to, cap, |row| {
                writeln!(out, "{}", serde_json::to_string(row).unwrap()).ok();
            });
            out.flush().ok();
            eprintln!(
                "scanned {} instances, {} failures, {} fallback uses",
                summary.scanned,
                summary.failures.len(),
                summary.fallback_uses
            );
            Ok(summary.failures.is_empty())
        }
        Command::Conjectures { which, cap, budget } => {
            let ids: Vec<ConjectureId> = if which.is_empty() {
                ConjectureId::ALL.to_vec()
            } else {
                which
                    .iter()
                    .map(|s| {
                        ConjectureId::parse(s).ok_or_else(|| format!("unknown conjecture: {s}"))
                    })
                    .collect::<Result<_, _>>()?
            };
            let cfg = SolverConfig {
                node_budget: budget,
                ..SolverConfig::default()
            };
            let checks = check_conjectures(&ids, cap, cfg);
            let mut all_ok = true;
            for check in &checks {
                all_ok &= check.outcome.consistent();
                if matches!(check.outcome, CheckOutcome::Inconclusive { .. }) {
                    all_ok = false;
                }
                writeln!(out, "{}", serde_json::to_string(check).unwrap()).ok();
            }
            Ok(all_ok)
        }
    }
}

fn main() -> ExitCode {
    // Scans fan out over a bounded worker pool; the count comes from
    // the environment when set.
    if let Ok(workers) = std::env::var("COPRIME_WORKERS") {
        if let Ok(count) = workers.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(count.max(1))
                .build_global();
        }
    }
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
