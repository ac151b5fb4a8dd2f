//! Structural analysis of candidate minimal graphs: exact maximum average
//! degree, vertex classification, per-lemma audits, vertex discharging,
//! graph-class predicates, small-graph enumeration up to isomorphism, and the
//! counterexample hunt driver.

pub mod classify;
pub mod discharge;
pub mod enumerate;
pub mod hunt;
pub mod lemmas;
pub mod mad;
pub mod predicates;

pub use classify::{classify_vertices, VertexClass};
pub use discharge::{discharge_mad4, ChargeLedger, DischargeRule, Transfer};
pub use enumerate::{enumerate_graphs, EnumerateError};
pub use hunt::{hunt_counterexamples, ClassFilter, HuntConfig, HuntRecord, HuntReport, KappaRule};
pub use lemmas::{lemma_audit, AuditConfig, LemmaEntry, LemmaId, LemmaReport};
pub use mad::{max_average_degree, MadError, Rational};
pub use predicates::PredicateResult;

use crate::graph::{EdgeId, VertexId};

/// Concrete structure backing a violated check or a found configuration.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub detail: String,
}

impl Witness {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeId>, detail: impl Into<String>) -> Self {
        Witness { vertices, edges, detail: detail.into() }
    }
}
