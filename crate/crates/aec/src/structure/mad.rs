//! Exact maximum average degree: the largest 2|E(H)|/|V(H)| over nonempty
//! subgraphs H. Induced subgraphs suffice, since filling in edges over a fixed
//! vertex set never lowers the density.

use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use crate::graph::Graph;

pub type Rational = Ratio<i64>;

/// Exhaustive subset scan is exact arithmetic over 2^n subsets.
pub const MAX_VERTICES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MadError {
    EmptyGraph,
    TooLarge { n: usize },
}

impl fmt::Display for MadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MadError::EmptyGraph => write!(f, "mad is undefined on the empty graph"),
            MadError::TooLarge { n } => {
                write!(f, "exact mad supports n <= {MAX_VERTICES}, got {n}")
            }
        }
    }
}

impl std::error::Error for MadError {}

/// mad(G) as an exact rational, by exhaustive scan over induced vertex
/// subsets with incremental bitmask edge counting.
pub fn max_average_degree(g: &Graph) -> Result<Rational, MadError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(MadError::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(MadError::TooLarge { n });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |acc, w| acc | (1 << w)))
        .collect();
    let mut best: Rational = Ratio::zero();
    for mask in 1u32..(1u32 << n) {
        let mut edges = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // Count neighbors inside the subset with smaller id: each edge once.
            edges += (adj[v] & mask & ((1u32 << v) - 1)).count_ones();
        }
        let density = Ratio::new(2 * edges as i64, mask.count_ones() as i64);
        if density > best {
            best = density;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn mad_of_standard_graphs() {
        assert_eq!(max_average_degree(&Graph::complete(4)).unwrap(), Ratio::new(3, 1));
        assert_eq!(max_average_degree(&Graph::cycle(6)).unwrap(), Ratio::new(2, 1));
        assert_eq!(max_average_degree(&Graph::star(5)).unwrap(), Ratio::new(5, 3));
        assert_eq!(max_average_degree(&Graph::path(2)).unwrap(), Ratio::new(1, 1));
    }

    #[test]
    fn pendant_vertex_does_not_lower_mad() {
        // K4 plus a pendant vertex: the densest subgraph is still K4.
        let mut edges = Vec::new();
        for v in 0..4 {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        edges.push((0, 4));
        let g = Graph::new(5, edges).unwrap();
        assert_eq!(max_average_degree(&g).unwrap(), Ratio::new(3, 1));
    }

    #[test]
    fn mad_bounds() {
        for g in [Graph::complete(5), Graph::cycle(5), Graph::star(4), Graph::path(6)] {
            let mad = max_average_degree(&g).unwrap();
            let avg = Ratio::new(2 * g.edge_count() as i64, g.vertex_count() as i64);
            assert!(mad >= avg);
            // Any induced subgraph has mad at most mad(G).
            let sub = g.induced_subgraph(&[0, 1, 2]);
            if sub.graph.vertex_count() > 0 {
                assert!(max_average_degree(&sub.graph).unwrap() <= mad);
            }
        }
    }

    #[test]
    fn errors() {
        assert_eq!(
            max_average_degree(&Graph::new(0, vec![]).unwrap()),
            Err(MadError::EmptyGraph)
        );
        assert!(matches!(
            max_average_degree(&Graph::path(21)),
            Err(MadError::TooLarge { n: 21 })
        ));
    }
}
