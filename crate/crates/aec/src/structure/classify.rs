//! Vertex classification relative to a palette size kappa.
//!
//! A 3-vertex is *special* when it is adjacent to a vertex of degree exactly
//! kappa - Delta + 2, and *normal* otherwise.

use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexClass {
    /// Degree 0 or 1.
    UnderTwo(usize),
    Two,
    SpecialThree,
    NormalThree,
    Four,
    /// Degree five or more (exact degree carried).
    FivePlus(usize),
}

impl VertexClass {
    pub fn degree(&self) -> usize {
        match *self {
            VertexClass::UnderTwo(d) => d,
            VertexClass::Two => 2,
            VertexClass::SpecialThree | VertexClass::NormalThree => 3,
            VertexClass::Four => 4,
            VertexClass::FivePlus(d) => d,
        }
    }
}

/// Per-vertex classification; the special-3 test is against vertices of
/// degree exactly kappa - Delta + 2.
pub fn classify_vertices(g: &Graph, kappa: usize) -> Vec<VertexClass> {
    let delta = g.max_degree().unwrap_or(0) as i64;
    let special_target = kappa as i64 - delta + 2;
    (0..g.vertex_count())
        .map(|v| classify_one(g, v, special_target))
        .collect()
}

fn classify_one(g: &Graph, v: VertexId, special_target: i64) -> VertexClass {
    match g.degree(v) {
        d @ (0 | 1) => VertexClass::UnderTwo(d),
        2 => VertexClass::Two,
        3 => {
            let special = g.neighbors(v).any(|w| g.degree(w) as i64 == special_target);
            if special {
                VertexClass::SpecialThree
            } else {
                VertexClass::NormalThree
            }
        }
        4 => VertexClass::Four,
        d => VertexClass::FivePlus(d),
    }
}
