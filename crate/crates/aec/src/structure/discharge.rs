//! Vertex discharging with initial charge deg(v) - 4 and the three transfer
//! rules used at kappa = Delta + 2:
//!
//! - R1: every 2-vertex receives 1 from each 6+-neighbor;
//! - R2: every special 3-vertex receives 1/2 from each 5+-neighbor;
//! - R3: every normal 3-vertex receives 1/3 from each 5+-neighbor.
//!
//! Transfers conserve charge, so the final total is exactly 2m - 4n.

use num_rational::Ratio;

use super::classify::{classify_vertices, VertexClass};
use super::mad::Rational;
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DischargeRule {
    R1,
    R2,
    R3,
}

impl DischargeRule {
    pub fn label(&self) -> &'static str {
        match self {
            DischargeRule::R1 => "R1",
            DischargeRule::R2 => "R2",
            DischargeRule::R3 => "R3",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transfer {
    pub from: VertexId,
    pub to: VertexId,
    pub amount: Rational,
    pub rule: DischargeRule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeLedger {
    pub kappa: usize,
    /// deg(v) - 4 per vertex.
    pub initial: Vec<Rational>,
    pub transfers: Vec<Transfer>,
    pub final_charges: Vec<Rational>,
}

impl ChargeLedger {
    pub fn total_initial(&self) -> Rational {
        self.initial.iter().sum()
    }

    pub fn total_final(&self) -> Rational {
        self.final_charges.iter().sum()
    }

    pub fn min_final(&self) -> Option<Rational> {
        self.final_charges.iter().copied().min()
    }
}

/// Applies R1-R3 against the vertex classification for `kappa` and returns
/// the full ledger. Meant for the kappa = Delta + 2 context but total for any
/// kappa.
pub fn discharge_mad4(g: &Graph, kappa: usize) -> ChargeLedger {
    let n = g.vertex_count();
    let classes = classify_vertices(g, kappa);
    let initial: Vec<Rational> =
        (0..n).map(|v| Ratio::from_integer(g.degree(v) as i64 - 4)).collect();
    let mut transfers = Vec::new();
    for v in 0..n {
        let (rule, amount, donor_min) = match classes[v] {
            VertexClass::Two => (DischargeRule::R1, Ratio::from_integer(1), 6),
            VertexClass::SpecialThree => (DischargeRule::R2, Ratio::new(1, 2), 5),
            VertexClass::NormalThree => (DischargeRule::R3, Ratio::new(1, 3), 5),
            _ => continue,
        };
        for w in g.neighbors(v) {
            if g.degree(w) >= donor_min {
                transfers.push(Transfer { from: w, to: v, amount, rule });
            }
        }
    }
    let mut final_charges = initial.clone();
    for t in &transfers {
        final_charges[t.from] -= t.amount;
        final_charges[t.to] += t.amount;
    }
    ChargeLedger { kappa, initial, transfers, final_charges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    /// Attaches `count` fresh leaves to `v`, growing the graph.
    fn with_leaves(edges: &mut Vec<(usize, usize)>, next: &mut usize, v: usize, count: usize) {
        for _ in 0..count {
            edges.push((v, *next));
            *next += 1;
        }
    }

    #[test]
    fn two_vertex_with_two_six_plus_neighbors_ends_at_zero() {
        // v = 0 of degree 2; neighbors 1 and 2 of degree 6 each.
        let mut edges = vec![(0, 1), (0, 2)];
        let mut next = 3;
        with_leaves(&mut edges, &mut next, 1, 5);
        with_leaves(&mut edges, &mut next, 2, 5);
        let g = Graph::new(next, edges).unwrap();
        assert_eq!(g.degree(1), 6);
        let kappa = g.max_degree().unwrap() + 2;
        let ledger = discharge_mad4(&g, kappa);
        // 2 - 4 + 2 * 1 = 0.
        assert_eq!(ledger.final_charges[0], Ratio::from_integer(0));
        assert_eq!(
            ledger.transfers.iter().filter(|t| t.to == 0 && t.rule == DischargeRule::R1).count(),
            2
        );
    }

    #[test]
    fn special_three_vertex_ends_at_zero() {
        // v = 0 of degree 3 adjacent to w = 1 with deg(w) = kappa - Delta + 2 = 4
        // and to two 5-vertices; kappa = Delta + 2 with Delta = 5.
        let mut edges = vec![(0, 1), (0, 2), (0, 3)];
        let mut next = 4;
        with_leaves(&mut edges, &mut next, 1, 3); // deg 4
        with_leaves(&mut edges, &mut next, 2, 4); // deg 5
        with_leaves(&mut edges, &mut next, 3, 4); // deg 5
        let g = Graph::new(next, edges).unwrap();
        assert_eq!(g.max_degree(), Some(5));
        let ledger = discharge_mad4(&g, 7);
        // 3 - 4 + 2 * 1/2 = 0: the 4-vertex donates nothing.
        assert_eq!(ledger.final_charges[0], Ratio::from_integer(0));
        assert_eq!(
            ledger.transfers.iter().filter(|t| t.to == 0 && t.rule == DischargeRule::R2).count(),
            2
        );
    }

    #[test]
    fn normal_three_vertex_ends_at_zero() {
        // v = 0 of degree 3 with three 5-neighbors; no 4-vertices anywhere,
        // so v is normal at kappa = Delta + 2 = 7.
        let mut edges = vec![(0, 1), (0, 2), (0, 3)];
        let mut next = 4;
        for w in 1..=3 {
            with_leaves(&mut edges, &mut next, w, 4); // deg 5 each
        }
        let g = Graph::new(next, edges).unwrap();
        let ledger = discharge_mad4(&g, 7);
        // 3 - 4 + 3 * 1/3 = 0.
        assert_eq!(ledger.final_charges[0], Ratio::from_integer(0));
        assert_eq!(
            ledger.transfers.iter().filter(|t| t.to == 0 && t.rule == DischargeRule::R3).count(),
            3
        );
    }

    #[test]
    fn four_vertex_keeps_its_zero_charge() {
        let star = Graph::star(4);
        let kappa = 6;
        let ledger = discharge_mad4(&star, kappa);
        assert_eq!(ledger.initial[0], Ratio::from_integer(0));
        assert_eq!(ledger.final_charges[0], Ratio::from_integer(0));
    }

    #[test]
    fn charge_is_conserved() {
        for g in [
            Graph::complete(5),
            Graph::cycle(7),
            Graph::star(6),
            Graph::complete_bipartite(3, 4),
        ] {
            let ledger = discharge_mad4(&g, g.max_degree().unwrap() + 2);
            let expected = Ratio::from_integer(
                2 * g.edge_count() as i64 - 4 * g.vertex_count() as i64,
            );
            assert_eq!(ledger.total_initial(), expected);
            assert_eq!(ledger.total_final(), expected);
        }
    }
}
