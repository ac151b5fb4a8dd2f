//! `aec` — acyclic edge coloring toolkit front end.
//!
//! Exit codes are part of the contract: 0 success / colorable / valid,
//! 1 negative verdict (not colorable, invalid, violations found),
//! 2 unknown (budget exhausted or not applicable),
//! 64 usage error, 65 input parse error.

use std::io::Read;
use std::process::exit;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use aec::coloring::{self, VerifyOutcome};
use aec::graph::{self, Graph, GraphFormat};
use aec::heuristic::{self, Fallback, HeuristicConfig};
use aec::solver::{self, IndexResult, Minimality, SolveStatus, SolverConfig};
use aec::structure::{
    discharge_mad4, hunt_counterexamples, lemma_audit, max_average_degree, AuditConfig,
    ClassFilter, HuntConfig, KappaRule, LemmaReport, Rational,
};

const EXIT_OK: i32 = 0;
const EXIT_NEGATIVE: i32 = 1;
const EXIT_UNKNOWN: i32 = 2;
const EXIT_USAGE: i32 = 64;
const EXIT_DATA: i32 = 65;

#[derive(Parser)]
#[command(name = "aec", version, about = "Acyclic edge coloring toolkit")]
struct Cli {
    /// Emit line-delimited JSON records instead of prose.
    #[arg(long, global = true)]
    records: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    /// One `u v` pair per line, `#` comments.
    EdgeList,
    /// Standard graph6 (short form).
    Graph6,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> GraphFormat {
        match f {
            FormatArg::EdgeList => GraphFormat::EdgeList,
            FormatArg::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Exact,
    Heuristic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RuleArg {
    Delta,
    #[value(name = "delta+1")]
    DeltaPlus1,
    #[value(name = "delta+2")]
    DeltaPlus2,
}

impl From<RuleArg> for KappaRule {
    fn from(r: RuleArg) -> KappaRule {
        match r {
            RuleArg::Delta => KappaRule::Delta,
            RuleArg::DeltaPlus1 => KappaRule::DeltaPlusOne,
            RuleArg::DeltaPlus2 => KappaRule::DeltaPlusTwo,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassArg {
    Mad4,
    Subcubic,
    Delta4,
    #[value(name = "3plus-indep")]
    ThreePlusIndep,
    All,
}

impl From<ClassArg> for ClassFilter {
    fn from(c: ClassArg) -> ClassFilter {
        match c {
            ClassArg::Mad4 => ClassFilter::Mad4,
            ClassArg::Subcubic => ClassFilter::Subcubic,
            ClassArg::Delta4 => ClassFilter::Delta4,
            ClassArg::ThreePlusIndep => ClassFilter::ThreePlusIndep,
            ClassArg::All => ClassFilter::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Find an acyclic edge coloring with a given number of colors.
    Color {
        /// Graph file, or `-` for stdin.
        graph: String,
        #[arg(long)]
        kappa: u32,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        /// RNG seed for heuristic mode (required with --records).
        #[arg(long)]
        seed: Option<u64>,
        /// Search-node budget, 0 = unlimited.
        #[arg(long, default_value_t = 0)]
        budget: u64,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: FormatArg,
    },
    /// Check that a coloring file is a proper acyclic coloring of the graph.
    Verify {
        graph: String,
        coloring: String,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: FormatArg,
    },
    /// Exact acyclic chromatic index (or a bracket under a budget).
    Index {
        graph: String,
        #[arg(long, default_value_t = 0)]
        budget: u64,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: FormatArg,
    },
    /// Maximum average degree as an exact rational p/q.
    Mad {
        graph: String,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: FormatArg,
    },
    /// Certify kappa-deletion-minimality.
    Minimal {
        graph: String,
        #[arg(long)]
        kappa: u32,
        #[arg(long, default_value_t = 0)]
        budget: u64,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: FormatArg,
    },
    /// Audit the structural lemmas against the graph.
    Audit {
        graph: String,
        #[arg(long)]
        kappa: usize,
        /// The caller certifies deletion-minimality (else informational).
        #[arg(long)]
        assume_minimal: bool,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: FormatArg,
    },
    /// Vertex discharging ledger (initial charge deg - 4, rules R1-R3).
    Discharge {
        graph: String,
        #[arg(long)]
        kappa: usize,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: FormatArg,
    },
    /// Enumerate small graphs in a class and hunt for rule violations.
    Hunt {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum)]
        rule: RuleArg,
        #[arg(long, value_enum, default_value = "all")]
        class: ClassArg,
        /// Worker threads across independent graphs.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Per-decision node budget, 0 = unlimited.
        #[arg(long, default_value_t = 0)]
        budget: u64,
        /// Lift the default enumeration cap of 8 vertices (hard cap 9).
        #[arg(long)]
        allow_large: bool,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are not usage errors.
            use clap::error::ErrorKind;
            let benign = matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            let _ = err.print();
            exit(if benign { EXIT_OK } else { EXIT_USAGE });
        }
    };
    match run(cli) {
        Ok(code) => exit(code),
        Err(failure) => {
            eprintln!("aec: {}", failure.message);
            exit(failure.code);
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn data(message: impl Into<String>) -> Self {
        Failure { code: EXIT_DATA, message: message.into() }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::data(format!("reading stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::data(format!("reading {path}: {e}")))
}

fn load_graph(path: &str, format: FormatArg) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    graph::parse_graph(&text, format.into()).map_err(|e| Failure::data(format!("{path}: {e}")))
}

fn ratio_str(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn status_str(status: SolveStatus) -> &'static str {
    match status {
        SolveStatus::Colorable => "colorable",
        SolveStatus::NotColorable => "not-colorable",
        SolveStatus::BudgetExhausted => "budget-exhausted",
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Color { graph, kappa, mode, seed, budget, format } => {
            if kappa == 0 || kappa > 64 {
                return Err(Failure::usage("--kappa must be in 1..=64"));
            }
            if cli.records && matches!(mode, ModeArg::Heuristic) && seed.is_none() {
                return Err(Failure::usage("--seed is required with --records in heuristic mode"));
            }
            let g = load_graph(&graph, format)?;
            let result = match mode {
                ModeArg::Exact => {
                    solver::decide_colorable(&g, &SolverConfig::with_budget(kappa, budget))
                }
                ModeArg::Heuristic => {
                    let mut cfg = HeuristicConfig::new(kappa);
                    cfg.seed = seed.unwrap_or(0);
                    cfg.fallback = Fallback::Exact;
                    heuristic::color_with_restarts(&g, &cfg)
                }
            };
            match result.status {
                SolveStatus::Colorable => {
                    print!("{}", coloring::write_coloring(&result.coloring.unwrap(), &g));
                    Ok(EXIT_OK)
                }
                SolveStatus::NotColorable => {
                    eprintln!("not colorable with {kappa} colors ({} nodes)", result.nodes);
                    Ok(EXIT_NEGATIVE)
                }
                SolveStatus::BudgetExhausted => {
                    eprintln!("budget exhausted after {} nodes", result.nodes);
                    Ok(EXIT_UNKNOWN)
                }
            }
        }

        Command::Verify { graph, coloring: coloring_path, format } => {
            let g = load_graph(&graph, format)?;
            let text = read_input(&coloring_path)?;
            let c = coloring::parse_coloring(&text, &g)
                .map_err(|e| Failure::data(format!("{coloring_path}: {e}")))?;
            let outcome = coloring::verify_acyclic(&c, &g)
                .map_err(|e| Failure::data(format!("{coloring_path}: {e}")))?;
            emit_verify(&outcome, cli.records);
            Ok(if outcome.is_acyclic() { EXIT_OK } else { EXIT_NEGATIVE })
        }

        Command::Index { graph, budget, format } => {
            let g = load_graph(&graph, format)?;
            if g.edge_count() > 64 {
                return Err(Failure::usage("exact index supports at most 64 edges"));
            }
            let result =
                solver::acyclic_chromatic_index(&g, &SolverConfig::with_budget(1, budget));
            emit_index(&g, &result, cli.records);
            Ok(match result {
                IndexResult::Exact { .. } => EXIT_OK,
                IndexResult::Unknown { .. } => EXIT_UNKNOWN,
            })
        }

        Command::Mad { graph, format } => {
            let g = load_graph(&graph, format)?;
            let mad = max_average_degree(&g).map_err(|e| Failure::data(e.to_string()))?;
            if cli.records {
                println!("{}", serde_json::json!({ "mad": ratio_str(&mad) }));
            } else {
                println!("{}", ratio_str(&mad));
            }
            Ok(EXIT_OK)
        }

        Command::Minimal { graph, kappa, budget, format } => {
            if kappa == 0 || kappa > 64 {
                return Err(Failure::usage("--kappa must be in 1..=64"));
            }
            let g = load_graph(&graph, format)?;
            let verdict = solver::is_deletion_minimal(&g, kappa, budget);
            emit_minimal(&verdict, kappa, cli.records);
            Ok(match verdict {
                Minimality::Minimal { .. } => EXIT_OK,
                Minimality::AlreadyColorable { .. } | Minimality::NotMinimal { .. } => {
                    EXIT_NEGATIVE
                }
                Minimality::NotApplicable { .. } | Minimality::BudgetExhausted => EXIT_UNKNOWN,
            })
        }

        Command::Audit { graph, kappa, assume_minimal, format } => {
            let g = load_graph(&graph, format)?;
            let report =
                lemma_audit(&g, kappa, &AuditConfig { assume_minimal, ..AuditConfig::default() });
            emit_audit(&report, cli.records);
            Ok(if report.all_applicable_hold() { EXIT_OK } else { EXIT_NEGATIVE })
        }

        Command::Discharge { graph, kappa, format } => {
            let g = load_graph(&graph, format)?;
            let ledger = discharge_mad4(&g, kappa);
            emit_discharge(&g, &ledger, cli.records);
            Ok(EXIT_OK)
        }

        Command::Hunt { max_n, rule, class, jobs, budget, allow_large } => {
            let cfg = HuntConfig {
                max_n,
                rule: rule.into(),
                class: class.into(),
                node_budget: budget,
                jobs,
                connected_only: true,
                allow_large,
            };
            let report = hunt_counterexamples(&cfg).map_err(|e| Failure::usage(e.to_string()))?;
            emit_hunt(&report, cli.records);
            Ok(if report.violations > 0 {
                EXIT_NEGATIVE
            } else if report.budget_exhausted > 0 {
                EXIT_UNKNOWN
            } else {
                EXIT_OK
            })
        }
    }
}

// ============================================================================
// Output formatting. Record mode is line-delimited JSON with the field order
// fixed by the struct declarations below.
// ============================================================================

#[derive(Serialize)]
struct VerifyRecord {
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    improper_vertex: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    improper_color: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle_edges: Option<Vec<usize>>,
}

fn emit_verify(outcome: &VerifyOutcome, records: bool) {
    if records {
        let rec = match outcome {
            VerifyOutcome::Acyclic => VerifyRecord {
                valid: true,
                improper_vertex: None,
                improper_color: None,
                cycle_edges: None,
            },
            VerifyOutcome::Improper { vertex, color } => VerifyRecord {
                valid: false,
                improper_vertex: Some(*vertex),
                improper_color: Some(*color),
                cycle_edges: None,
            },
            VerifyOutcome::BichromaticCycle { edges } => VerifyRecord {
                valid: false,
                improper_vertex: None,
                improper_color: None,
                cycle_edges: Some(edges.clone()),
            },
        };
        println!("{}", serde_json::to_string(&rec).expect("serializable record"));
        return;
    }
    match outcome {
        VerifyOutcome::Acyclic => println!("valid acyclic edge coloring"),
        VerifyOutcome::Improper { vertex, color } => {
            println!("invalid: color {color} repeats at vertex {vertex}")
        }
        VerifyOutcome::BichromaticCycle { edges } => {
            println!("invalid: bichromatic cycle through edges {edges:?}")
        }
    }
}

#[derive(Serialize)]
struct IndexRecord {
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper: Option<usize>,
    nodes: u64,
}

fn emit_index(g: &Graph, result: &IndexResult, records: bool) {
    if records {
        let rec = match *result {
            IndexResult::Exact { index, nodes } => IndexRecord {
                n: g.vertex_count(),
                m: g.edge_count(),
                index: Some(index),
                lower: None,
                upper: None,
                nodes,
            },
            IndexResult::Unknown { lower, upper, nodes } => IndexRecord {
                n: g.vertex_count(),
                m: g.edge_count(),
                index: None,
                lower: Some(lower),
                upper: Some(upper),
                nodes,
            },
        };
        println!("{}", serde_json::to_string(&rec).expect("serializable record"));
        return;
    }
    match *result {
        IndexResult::Exact { index, .. } => println!("{index}"),
        IndexResult::Unknown { lower, upper, .. } => println!("{lower}..{upper}"),
    }
}

#[derive(Serialize)]
struct MinimalRecord {
    kappa: u32,
    minimal: Option<bool>,
    detail: String,
}

fn emit_minimal(verdict: &Minimality, kappa: u32, records: bool) {
    let (minimal, detail) = match verdict {
        Minimality::Minimal { certificates } => {
            (Some(true), format!("{} per-edge certificates", certificates.len()))
        }
        Minimality::AlreadyColorable { .. } => {
            (Some(false), format!("already colorable with {kappa} colors"))
        }
        Minimality::NotMinimal { edge } => {
            (Some(false), format!("deleting edge {edge} still needs more than {kappa} colors"))
        }
        Minimality::NotApplicable { max_degree } => {
            (None, format!("max degree {max_degree} exceeds kappa {kappa}"))
        }
        Minimality::BudgetExhausted => (None, "budget exhausted".to_string()),
    };
    if records {
        let rec = MinimalRecord { kappa, minimal, detail };
        println!("{}", serde_json::to_string(&rec).expect("serializable record"));
    } else {
        match minimal {
            Some(true) => println!("minimal: yes ({detail})"),
            Some(false) => println!("minimal: no ({detail})"),
            None => println!("minimal: unknown ({detail})"),
        }
    }
}

#[derive(Serialize)]
struct AuditRecord<'a> {
    lemma: &'static str,
    applicable: bool,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_vertices: Option<&'a [usize]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_detail: Option<&'a str>,
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    notes: &'a [String],
}

fn emit_audit(report: &LemmaReport, records: bool) {
    if !records {
        println!(
            "lemma audit at kappa = {}{}:",
            report.kappa,
            if report.assume_minimal { " (assumed minimal)" } else { " (informational)" }
        );
    }
    for entry in &report.entries {
        if records {
            let rec = AuditRecord {
                lemma: entry.lemma.label(),
                applicable: entry.applicable,
                holds: entry.holds,
                witness_vertices: entry.witness.as_ref().map(|w| w.vertices.as_slice()),
                witness_detail: entry.witness.as_ref().map(|w| w.detail.as_str()),
                notes: &entry.notes,
            };
            println!("{}", serde_json::to_string(&rec).expect("serializable record"));
        } else {
            let status = if !entry.applicable {
                "not applicable".to_string()
            } else if entry.holds {
                "holds".to_string()
            } else {
                let detail = entry.witness.as_ref().map(|w| w.detail.as_str()).unwrap_or("");
                format!("VIOLATED ({detail})")
            };
            println!("  {:<14} {}", entry.lemma.label(), status);
            for note in &entry.notes {
                println!("      note: {note}");
            }
        }
    }
}

#[derive(Serialize)]
struct ChargeRecord {
    vertex: usize,
    degree: usize,
    initial: String,
    received: String,
    sent: String,
    #[serde(rename = "final")]
    final_charge: String,
}

fn emit_discharge(g: &Graph, ledger: &aec::structure::ChargeLedger, records: bool) {
    use aec::structure::Rational as R;
    let n = g.vertex_count();
    let zero: R = num_ratio_zero();
    let mut received = vec![zero; n];
    let mut sent = vec![zero; n];
    for t in &ledger.transfers {
        received[t.to] += t.amount;
        sent[t.from] += t.amount;
    }
    if !records {
        println!("discharging at kappa = {} (initial charge deg - 4):", ledger.kappa);
    }
    for v in 0..n {
        if records {
            let rec = ChargeRecord {
                vertex: v,
                degree: g.degree(v),
                initial: ratio_str(&ledger.initial[v]),
                received: ratio_str(&received[v]),
                sent: ratio_str(&sent[v]),
                final_charge: ratio_str(&ledger.final_charges[v]),
            };
            println!("{}", serde_json::to_string(&rec).expect("serializable record"));
        } else {
            println!(
                "  vertex {v} (deg {}): {} + {} - {} = {}",
                g.degree(v),
                ratio_str(&ledger.initial[v]),
                ratio_str(&received[v]),
                ratio_str(&sent[v]),
                ratio_str(&ledger.final_charges[v]),
            );
        }
    }
    let total = ledger.total_final();
    if records {
        println!(
            "{}",
            serde_json::json!({
                "total": ratio_str(&total),
                "transfers": ledger.transfers.len(),
            })
        );
    } else {
        println!("  total: {} over {} transfers", ratio_str(&total), ledger.transfers.len());
    }
}

fn num_ratio_zero() -> Rational {
    Rational::from_integer(0)
}

#[derive(Serialize)]
struct HuntGraphRecord<'a> {
    graph: &'a str,
    n: usize,
    m: usize,
    delta: usize,
    kappa: usize,
    status: &'static str,
    nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lemmas: Option<Vec<String>>,
}

fn emit_hunt(report: &aec::structure::HuntReport, records: bool) {
    if records {
        for r in &report.records {
            let lemmas = r.audit.as_ref().map(|audit| {
                audit
                    .entries
                    .iter()
                    .map(|e| {
                        let status = if !e.applicable {
                            "na"
                        } else if e.holds {
                            "holds"
                        } else {
                            "violated"
                        };
                        format!("{}:{}", e.lemma.label(), status)
                    })
                    .collect()
            });
            let rec = HuntGraphRecord {
                graph: &r.graph6,
                n: r.n,
                m: r.m,
                delta: r.delta,
                kappa: r.kappa,
                status: status_str(r.status),
                nodes: r.nodes,
                minimal: r.minimal,
                lemmas,
            };
            println!("{}", serde_json::to_string(&rec).expect("serializable record"));
        }
        println!(
            "{}",
            serde_json::json!({
                "rule": report.rule.label(),
                "class": report.class.label(),
                "graphs": report.graphs_in_class,
                "violations": report.violations,
                "budget_exhausted": report.budget_exhausted,
            })
        );
        return;
    }
    for r in &report.records {
        if r.status != SolveStatus::Colorable {
            let tag = match r.status {
                SolveStatus::NotColorable => "violation",
                SolveStatus::BudgetExhausted => "budget",
                SolveStatus::Colorable => unreachable!(),
            };
            let minimal = match r.minimal {
                Some(true) => ", deletion-minimal",
                Some(false) => ", not minimal",
                None => "",
            };
            println!(
                "  {tag}: {} (n={}, m={}, delta={}, kappa={}{minimal})",
                r.graph6, r.n, r.m, r.delta, r.kappa
            );
            if let Some(audit) = &r.audit {
                for entry in &audit.entries {
                    if entry.applicable {
                        println!(
                            "      {:<14} {}",
                            entry.lemma.label(),
                            if entry.holds { "holds" } else { "VIOLATED" }
                        );
                    }
                }
            }
        }
    }
    println!(
        "{} violations among {} graphs (rule {}, class {}, {} budget-exhausted)",
        report.violations,
        report.graphs_in_class,
        report.rule.label(),
        report.class.label(),
        report.budget_exhausted,
    );
}
