//! Graph-class predicates: triangle/short-cycle adjacency, 5-cycle edge
//! budgets, intersecting triangles, independence of 3+-vertices, and the
//! bounded-degree non-regular classes. Cycle enumeration is exhaustive, which
//! is fine at desk scale.

use super::Witness;
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredicateResult {
    pub value: bool,
    pub witness: Option<Witness>,
}

impl PredicateResult {
    fn plain(value: bool) -> Self {
        PredicateResult { value, witness: None }
    }
}

/// All simple cycles of exactly `len` vertices, canonical: the smallest
/// vertex first, oriented toward its smaller neighbor.
pub fn cycles_of_length(g: &Graph, len: usize) -> Vec<Vec<VertexId>> {
    assert!(len >= 3);
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(len);
    let mut used = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        path.push(s);
        used[s] = true;
        extend_cycle(g, s, len, &mut path, &mut used, &mut out);
        used[s] = false;
        path.pop();
    }
    out
}

fn extend_cycle(
    g: &Graph,
    start: VertexId,
    len: usize,
    path: &mut Vec<VertexId>,
    used: &mut [bool],
    out: &mut Vec<Vec<VertexId>>,
) {
    if path.len() == len {
        if g.has_edge(*path.last().unwrap(), start) && path[1] < path[len - 1] {
            out.push(path.clone());
        }
        return;
    }
    let last = *path.last().unwrap();
    for w in g.neighbors(last) {
        // Only vertices above the start can join: makes the start minimal.
        if w > start && !used[w] {
            path.push(w);
            used[w] = true;
            extend_cycle(g, start, len, path, used, out);
            used[w] = false;
            path.pop();
        }
    }
}

/// Triangles as sorted vertex triples.
pub fn triangles(g: &Graph) -> Vec<[VertexId; 3]> {
    cycles_of_length(g, 3).into_iter().map(|c| [c[0], c[1], c[2]]).collect()
}

fn cycle_edges(g: &Graph, cycle: &[VertexId]) -> Vec<EdgeId> {
    let k = cycle.len();
    (0..k)
        .map(|i| {
            g.edge_between(cycle[i], cycle[(i + 1) % k])
                .expect("consecutive cycle vertices are adjacent")
        })
        .collect()
}

/// True iff some triangle shares an edge with another cycle of length 3 or 4.
pub fn has_triangle_adjacent_short_cycle(g: &Graph) -> PredicateResult {
    let tris = triangles(g);
    for len in [3usize, 4] {
        let cycles = if len == 3 {
            tris.iter().map(|t| t.to_vec()).collect::<Vec<_>>()
        } else {
            cycles_of_length(g, 4)
        };
        for t in &tris {
            let t_edges = cycle_edges(g, t);
            for c in &cycles {
                if len == 3 && c[..] == t[..] {
                    continue;
                }
                let c_edges = cycle_edges(g, c);
                if let Some(&shared) = c_edges.iter().find(|e| t_edges.contains(e)) {
                    let mut vertices = t.to_vec();
                    vertices.extend(c);
                    return PredicateResult {
                        value: true,
                        witness: Some(Witness::new(
                            vertices,
                            vec![shared],
                            format!("triangle {t:?} shares an edge with {len}-cycle {c:?}"),
                        )),
                    };
                }
            }
        }
    }
    PredicateResult::plain(false)
}

/// True iff every 5-cycle has at most three of its edges inside triangles.
pub fn five_cycles_ok(g: &Graph) -> PredicateResult {
    let mut in_triangle = vec![false; g.edge_count()];
    for t in triangles(g) {
        for e in cycle_edges(g, &t) {
            in_triangle[e] = true;
        }
    }
    for c in cycles_of_length(g, 5) {
        let edges = cycle_edges(g, &c);
        let count = edges.iter().filter(|&&e| in_triangle[e]).count();
        if count > 3 {
            return PredicateResult {
                value: false,
                witness: Some(Witness::new(
                    c.clone(),
                    edges,
                    format!("5-cycle {c:?} has {count} edges contained in triangles"),
                )),
            };
        }
    }
    PredicateResult::plain(true)
}

/// True iff two distinct triangles share at least one vertex.
pub fn has_intersecting_triangles(g: &Graph) -> PredicateResult {
    let tris = triangles(g);
    for (i, a) in tris.iter().enumerate() {
        for b in &tris[i + 1..] {
            if let Some(&shared) = a.iter().find(|v| b.contains(v)) {
                let mut vertices = a.to_vec();
                vertices.extend(b);
                return PredicateResult {
                    value: true,
                    witness: Some(Witness::new(
                        vertices,
                        vec![],
                        format!("triangles {a:?} and {b:?} share vertex {shared}"),
                    )),
                };
            }
        }
    }
    PredicateResult::plain(false)
}

/// True iff no edge joins two vertices of degree 3 or more.
pub fn three_plus_independent(g: &Graph) -> PredicateResult {
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if g.degree(u) >= 3 && g.degree(v) >= 3 {
            return PredicateResult {
                value: false,
                witness: Some(Witness::new(
                    vec![u, v],
                    vec![e],
                    format!("edge {u}-{v} joins two 3+-vertices"),
                )),
            };
        }
    }
    PredicateResult::plain(true)
}

/// Max degree at most 3 and not 3-regular.
pub fn is_subcubic_non_regular(g: &Graph) -> PredicateResult {
    let max = g.max_degree().unwrap_or(0);
    let min = g.min_degree().unwrap_or(0);
    PredicateResult::plain(max <= 3 && !(max == 3 && min == 3))
}

/// Max degree at most 4 and not 4-regular.
pub fn is_delta4_non_regular(g: &Graph) -> PredicateResult {
    let max = g.max_degree().unwrap_or(0);
    let min = g.min_degree().unwrap_or(0);
    PredicateResult::plain(max <= 4 && !(max == 4 && min == 4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn cycle_counts_on_k5() {
        let k5 = Graph::complete(5);
        assert_eq!(cycles_of_length(&k5, 3).len(), 10);
        assert_eq!(cycles_of_length(&k5, 4).len(), 15);
        assert_eq!(cycles_of_length(&k5, 5).len(), 12);
    }

    #[test]
    fn k4_triggers_triangle_predicates() {
        let k4 = Graph::complete(4);
        let adj = has_triangle_adjacent_short_cycle(&k4);
        assert!(adj.value);
        assert!(adj.witness.is_some());
        let intersecting = has_intersecting_triangles(&k4);
        assert!(intersecting.value);
    }

    #[test]
    fn c5_has_no_triangles() {
        let c5 = Graph::cycle(5);
        assert!(!has_triangle_adjacent_short_cycle(&c5).value);
        assert!(!has_intersecting_triangles(&c5).value);
        assert!(five_cycles_ok(&c5).value);
        assert_eq!(triangles(&c5).len(), 0);
    }

    #[test]
    fn five_cycle_budget_violation_detected() {
        // C5 on 0..5 with apex vertices forming triangles over four of its
        // five edges: four edges of the 5-cycle lie in triangles.
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        let mut next = 5;
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 4)] {
            edges.push((a, next));
            edges.push((b, next));
            next += 1;
        }
        let g = Graph::new(next, edges).unwrap();
        let res = five_cycles_ok(&g);
        assert!(!res.value);
        let witness = res.witness.unwrap();
        assert_eq!(witness.vertices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn star_center_is_independent_three_plus() {
        let star = Graph::star(4);
        assert!(three_plus_independent(&star).value);
        let k4 = Graph::complete(4);
        let res = three_plus_independent(&k4);
        assert!(!res.value);
        assert!(res.witness.is_some());
    }

    #[test]
    fn degree_class_predicates() {
        assert!(is_subcubic_non_regular(&Graph::path(4)).value);
        assert!(!is_subcubic_non_regular(&Graph::complete(4)).value);
        assert!(is_subcubic_non_regular(&Graph::cycle(5)).value);
        assert!(is_delta4_non_regular(&Graph::complete(4)).value);
        assert!(!is_delta4_non_regular(&Graph::complete(5)).value);
        assert!(!is_delta4_non_regular(&Graph::star(5)).value);
    }

    #[test]
    fn witnesses_are_genuine_cycles() {
        let k4 = Graph::complete(4);
        for len in [3, 4] {
            for c in cycles_of_length(&k4, len) {
                assert_eq!(c.len(), len);
                for i in 0..len {
                    assert!(k4.has_edge(c[i], c[(i + 1) % len]));
                }
            }
        }
    }
}
