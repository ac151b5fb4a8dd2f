//! Acyclic edge coloring toolkit.
//!
//! An *acyclic edge coloring* of a simple graph is a proper edge coloring in
//! which the union of any two color classes is a linear forest (no bichromatic
//! cycles). The least number of colors admitting one is the acyclic chromatic
//! index of the graph.
//!
//! The crate provides:
//!
//! - [`graph`]: immutable simple graphs with stable vertex/edge ids, subgraph
//!   construction, 2-connectivity, and edge-list / graph6 I/O;
//! - [`coloring`]: partial edge colorings, color-set queries, maximal
//!   dichromatic paths, candidate/valid color tests, and the acyclicity
//!   verifier;
//! - [`solver`]: exact backtracking decision procedure and exact index
//!   computation, deletion-minimality certification;
//! - [`heuristic`]: greedy coloring with a local-repair move set and
//!   randomized restarts;
//! - [`structure`]: maximum average degree, vertex classification, structural
//!   lemma audits, vertex discharging, graph-class predicates, small-graph
//!   enumeration up to isomorphism, and a counterexample hunt driver.
//!
//! Everything is sized for desk-scale graphs (n up to roughly 12, enumeration
//! up to n = 8 by default).

pub mod coloring;
pub mod graph;
pub mod heuristic;
pub mod solver;
pub mod structure;

pub use coloring::{Color, ColorSet, EdgeColoring, PathQuery};
pub use graph::{EdgeId, Graph, GraphFormat, VertexId};
pub use solver::{SolveResult, SolveStatus, SolverConfig};
