//! Counterexample hunt: enumerate small graphs in a class, decide whether the
//! acyclic chromatic index stays within a degree-based bound, and audit every
//! deletion-minimal graph found along the way.

use num_rational::Ratio;
use rayon::prelude::*;

use super::enumerate::{enumerate_graphs, EnumerateError};
use super::lemmas::{lemma_audit, AuditConfig, LemmaReport};
use super::mad::max_average_degree;
use super::predicates;
use crate::graph::{self, Graph, GraphFormat};
use crate::solver::{self, SolveStatus, SolverConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KappaRule {
    Delta,
    DeltaPlusOne,
    DeltaPlusTwo,
}

impl KappaRule {
    pub fn kappa(&self, delta: usize) -> usize {
        match self {
            KappaRule::Delta => delta,
            KappaRule::DeltaPlusOne => delta + 1,
            KappaRule::DeltaPlusTwo => delta + 2,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            KappaRule::Delta => "delta",
            KappaRule::DeltaPlusOne => "delta+1",
            KappaRule::DeltaPlusTwo => "delta+2",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassFilter {
    /// mad(G) < 4.
    Mad4,
    /// Max degree <= 3 and not 3-regular.
    Subcubic,
    /// Max degree <= 4 and not 4-regular.
    Delta4,
    /// Max degree >= 3 and no two adjacent 3+-vertices.
    ThreePlusIndep,
    All,
}

impl ClassFilter {
    pub fn matches(&self, g: &Graph) -> bool {
        match self {
            ClassFilter::Mad4 => {
                max_average_degree(g).map(|mad| mad < Ratio::from_integer(4)).unwrap_or(false)
            }
            ClassFilter::Subcubic => predicates::is_subcubic_non_regular(g).value,
            ClassFilter::Delta4 => predicates::is_delta4_non_regular(g).value,
            ClassFilter::ThreePlusIndep => {
                g.max_degree().unwrap_or(0) >= 3 && predicates::three_plus_independent(g).value
            }
            ClassFilter::All => true,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            ClassFilter::Mad4 => "mad4",
            ClassFilter::Subcubic => "subcubic",
            ClassFilter::Delta4 => "delta4",
            ClassFilter::ThreePlusIndep => "3plus-indep",
            ClassFilter::All => "all",
        }
    }
}

#[derive(Clone, Debug)]
pub struct HuntConfig {
    pub max_n: usize,
    pub rule: KappaRule,
    pub class: ClassFilter,
    /// Per-decision node budget; 0 = unlimited.
    pub node_budget: u64,
    /// Worker threads across independent graphs; 0 or 1 = sequential.
    pub jobs: usize,
    pub connected_only: bool,
    pub allow_large: bool,
}

impl HuntConfig {
    pub fn new(max_n: usize, rule: KappaRule, class: ClassFilter) -> Self {
        HuntConfig {
            max_n,
            rule,
            class,
            node_budget: 0,
            jobs: 1,
            connected_only: true,
            allow_large: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct HuntRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub kappa: usize,
    pub status: SolveStatus,
    pub nodes: u64,
    /// Deletion-minimality verdict, computed for rule violators only.
    pub minimal: Option<bool>,
    /// Full audit, attached to certified-minimal graphs.
    pub audit: Option<LemmaReport>,
}

#[derive(Clone, Debug)]
pub struct HuntReport {
    pub rule: KappaRule,
    pub class: ClassFilter,
    pub graphs_in_class: usize,
    /// Graphs in class whose index exceeds the rule bound.
    pub violations: usize,
    pub budget_exhausted: usize,
    pub records: Vec<HuntRecord>,
}

/// Runs the hunt. Records are ordered by (vertex count, canonical graph6).
pub fn hunt_counterexamples(cfg: &HuntConfig) -> Result<HuntReport, EnumerateError> {
    let graphs: Vec<Graph> = enumerate_graphs(cfg.max_n, cfg.connected_only, cfg.allow_large)?
        .into_iter()
        .filter(|g| cfg.class.matches(g))
        .collect();
    let records: Vec<HuntRecord> = if cfg.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .expect("thread pool construction");
        pool.install(|| graphs.par_iter().map(|g| process(g, cfg)).collect())
    } else {
        graphs.iter().map(|g| process(g, cfg)).collect()
    };
    let mut records = records;
    records.sort_by(|a, b| (a.n, &a.graph6).cmp(&(b.n, &b.graph6)));
    Ok(HuntReport {
        rule: cfg.rule,
        class: cfg.class,
        graphs_in_class: records.len(),
        violations: records.iter().filter(|r| r.status == SolveStatus::NotColorable).count(),
        budget_exhausted: records
            .iter()
            .filter(|r| r.status == SolveStatus::BudgetExhausted)
            .count(),
        records,
    })
}

fn process(g: &Graph, cfg: &HuntConfig) -> HuntRecord {
    let delta = g.max_degree().unwrap_or(0);
    let kappa = cfg.rule.kappa(delta).max(1);
    let solve = solver::decide_colorable(g, &SolverConfig::with_budget(kappa as u32, cfg.node_budget));
    let mut minimal = None;
    let mut audit = None;
    if solve.status == SolveStatus::NotColorable {
        let verdict = solver::is_deletion_minimal(g, kappa as u32, cfg.node_budget);
        minimal = Some(verdict.is_minimal());
        if verdict.is_minimal() {
            audit = Some(lemma_audit(
                g,
                kappa,
                &AuditConfig { assume_minimal: true, ..AuditConfig::default() },
            ));
        }
    }
    HuntRecord {
        graph6: graph::write_graph(g, GraphFormat::Graph6).expect("desk-scale graphs encode"),
        n: g.vertex_count(),
        m: g.edge_count(),
        delta,
        kappa,
        status: solve.status,
        nodes: solve.nodes,
        minimal,
        audit,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_mad4_hunt_finds_no_violations() {
        let cfg = HuntConfig::new(4, KappaRule::DeltaPlusTwo, ClassFilter::Mad4);
        let report = hunt_counterexamples(&cfg).unwrap();
        assert!(report.graphs_in_class > 0);
        assert_eq!(report.violations, 0);
        assert_eq!(report.budget_exhausted, 0);
    }

    #[test]
    fn delta_rule_hunt_finds_minimal_graphs_with_clean_audits() {
        // At rule Delta the violators include C3, C4 (minimal: subgraphs are
        // path forests) and K4 (not minimal: K4 - e already needs 4 colors).
        let cfg = HuntConfig::new(4, KappaRule::Delta, ClassFilter::All);
        let report = hunt_counterexamples(&cfg).unwrap();
        let violators: Vec<&HuntRecord> =
            report.records.iter().filter(|r| r.status == SolveStatus::NotColorable).collect();
        assert!(!violators.is_empty());
        assert!(violators.iter().any(|v| v.minimal == Some(true)));
        let k4 = violators.iter().find(|v| v.graph6 == "C~").expect("K4 violates rule Delta");
        assert_eq!(k4.minimal, Some(false));
        for v in violators {
            assert_eq!(v.minimal.is_some(), true);
            if v.minimal == Some(true) {
                let audit = v.audit.as_ref().unwrap();
                assert!(audit.all_applicable_hold(), "audit failed on {}", v.graph6);
            } else {
                assert!(v.audit.is_none());
            }
        }
    }

    #[test]
    fn parallel_hunt_matches_sequential() {
        let mut cfg = HuntConfig::new(5, KappaRule::DeltaPlusOne, ClassFilter::Subcubic);
        let seq = hunt_counterexamples(&cfg).unwrap();
        cfg.jobs = 3;
        let par = hunt_counterexamples(&cfg).unwrap();
        assert_eq!(seq.graphs_in_class, par.graphs_in_class);
        assert_eq!(seq.violations, par.violations);
        let seq_keys: Vec<&String> = seq.records.iter().map(|r| &r.graph6).collect();
        let par_keys: Vec<&String> = par.records.iter().map(|r| &r.graph6).collect();
        assert_eq!(seq_keys, par_keys);
    }

    #[test]
    fn class_filters_behave() {
        let k4 = Graph::complete(4);
        assert!(ClassFilter::Mad4.matches(&k4)); // mad(K4) = 3 < 4
        assert!(!ClassFilter::Subcubic.matches(&k4));
        assert!(ClassFilter::Delta4.matches(&k4));
        assert!(!ClassFilter::ThreePlusIndep.matches(&k4));
        assert!(ClassFilter::ThreePlusIndep.matches(&Graph::star(3)));
        assert!(ClassFilter::All.matches(&k4));
    }
}
