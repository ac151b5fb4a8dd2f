//! Enumeration of small simple graphs up to isomorphism.
//!
//! Connected graphs are generated level by level: every connected graph on
//! k+1 vertices arises from a connected graph on k vertices by adding one
//! vertex joined to a nonempty subset (delete a non-cut vertex to see this),
//! so extending canonical representatives and deduplicating by canonical form
//! is complete. Disconnected graphs are multisets of connected components.
//!
//! Canonical form: the lexicographically least lower-triangle row encoding
//! over all vertex orderings that sort the (degree, neighbor-degree) classes,
//! found by depth-first search with prefix pruning. Exhaustive but fine at
//! desk scale; the default cap is 8 vertices, the hard cap 9.

use std::collections::HashSet;
use std::fmt;

use crate::graph::Graph;

pub const DEFAULT_CAP: usize = 8;
pub const HARD_CAP: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerateError {
    CapExceeded { requested: usize, cap: usize, hard: bool },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::CapExceeded { requested, cap, hard } => {
                if *hard {
                    write!(f, "enumeration supports at most {cap} vertices, got {requested}")
                } else {
                    write!(
                        f,
                        "enumeration beyond {cap} vertices needs the override flag, got {requested}"
                    )
                }
            }
        }
    }
}

impl std::error::Error for EnumerateError {}

/// Compact adjacency for canonicalization; rows beyond `n` stay zero so the
/// derived ordering is (n, rows).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct SmallGraph {
    n: usize,
    rows: [u16; HARD_CAP],
}

impl SmallGraph {
    fn single() -> Self {
        SmallGraph { n: 1, rows: [0; HARD_CAP] }
    }

    fn add_vertex(&self, mask: u16) -> Self {
        debug_assert!(self.n < HARD_CAP);
        debug_assert_eq!(mask & !((1 << self.n) - 1), 0);
        let mut rows = self.rows;
        for i in 0..self.n {
            if mask >> i & 1 == 1 {
                rows[i] |= 1 << self.n;
            }
        }
        rows[self.n] = mask;
        SmallGraph { n: self.n + 1, rows }
    }

    fn to_graph(self) -> Graph {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.rows[i] >> j & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(self.n, edges).expect("small graphs are simple by construction")
    }
}

/// Canonical relabeling: minimize the lower-triangle rows over all
/// class-respecting vertex orderings.
fn canonical(g: &SmallGraph) -> SmallGraph {
    let n = g.n;
    if n <= 1 {
        return *g;
    }
    let deg: Vec<usize> = (0..n).map(|v| g.rows[v].count_ones() as usize).collect();
    let keys: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> =
                (0..n).filter(|&w| g.rows[v] >> w & 1 == 1).map(|w| deg[w]).collect();
            nd.sort_unstable_by(|a, b| b.cmp(a));
            (deg[v], nd)
        })
        .collect();
    // Vertices sorted by key descending give the class layout and a seed.
    let mut seed: Vec<usize> = (0..n).collect();
    seed.sort_by(|&a, &b| keys[b].cmp(&keys[a]).then(a.cmp(&b)));
    let pos_key: Vec<&(usize, Vec<usize>)> = seed.iter().map(|&v| &keys[v]).collect();

    let rows_of = |perm: &[usize]| -> Vec<u16> {
        let mut rows = vec![0u16; n];
        for p in 0..n {
            for q in 0..p {
                if g.rows[perm[p]] >> perm[q] & 1 == 1 {
                    rows[p] |= 1 << q;
                }
            }
        }
        rows
    };
    let mut best = rows_of(&seed);

    fn dfs(
        g: &SmallGraph,
        keys: &[(usize, Vec<usize>)],
        pos_key: &[&(usize, Vec<usize>)],
        p: usize,
        perm: &mut Vec<usize>,
        used: &mut u16,
        rows: &mut Vec<u16>,
        best: &mut Vec<u16>,
    ) {
        let n = g.n;
        if p == n {
            if rows.as_slice() < best.as_slice() {
                best.copy_from_slice(rows);
            }
            return;
        }
        for x in 0..n {
            if *used >> x & 1 == 1 || keys[x] != *pos_key[p] {
                continue;
            }
            let mut row = 0u16;
            for (q, &pq) in perm.iter().enumerate() {
                if g.rows[x] >> pq & 1 == 1 {
                    row |= 1 << q;
                }
            }
            rows.push(row);
            // Fresh prefix compare: `best` may have shrunk inside siblings.
            if rows.as_slice() <= &best[..=p] {
                perm.push(x);
                *used |= 1 << x;
                dfs(g, keys, pos_key, p + 1, perm, used, rows, best);
                perm.pop();
                *used &= !(1 << x);
            }
            rows.pop();
        }
    }

    let mut perm = Vec::with_capacity(n);
    let mut used = 0u16;
    let mut rows = Vec::with_capacity(n);
    dfs(g, &keys, &pos_key, 0, &mut perm, &mut used, &mut rows, &mut best);

    let mut out = [0u16; HARD_CAP];
    for p in 0..n {
        for q in 0..p {
            if best[p] >> q & 1 == 1 {
                out[p] |= 1 << q;
                out[q] |= 1 << p;
            }
        }
    }
    SmallGraph { n, rows: out }
}

/// Canonical connected graphs grouped by exact vertex count (index = n).
fn connected_levels(max_n: usize) -> Vec<Vec<SmallGraph>> {
    let mut levels: Vec<Vec<SmallGraph>> = vec![Vec::new(); max_n + 1];
    if max_n == 0 {
        return levels;
    }
    levels[1] = vec![SmallGraph::single()];
    for k in 1..max_n {
        let mut next: HashSet<SmallGraph> = HashSet::new();
        for g in &levels[k] {
            for mask in 1u16..(1 << k) {
                next.insert(canonical(&g.add_vertex(mask)));
            }
        }
        let mut sorted: Vec<SmallGraph> = next.into_iter().collect();
        sorted.sort_unstable();
        levels[k + 1] = sorted;
    }
    levels
}

fn check_cap(max_n: usize, allow_large: bool) -> Result<(), EnumerateError> {
    if max_n > HARD_CAP {
        return Err(EnumerateError::CapExceeded { requested: max_n, cap: HARD_CAP, hard: true });
    }
    if max_n > DEFAULT_CAP && !allow_large {
        return Err(EnumerateError::CapExceeded {
            requested: max_n,
            cap: DEFAULT_CAP,
            hard: false,
        });
    }
    Ok(())
}

/// All simple graphs with 1..=max_n vertices up to isomorphism, ordered by
/// (vertex count, canonical encoding). `connected_only` restricts to
/// connected graphs; otherwise disconnected graphs are assembled as multisets
/// of connected components. `allow_large` lifts the default cap of 8 up to
/// the hard cap of 9.
pub fn enumerate_graphs(
    max_n: usize,
    connected_only: bool,
    allow_large: bool,
) -> Result<Vec<Graph>, EnumerateError> {
    check_cap(max_n, allow_large)?;
    let levels = connected_levels(max_n);
    let mut out = Vec::new();
    if connected_only {
        for level in &levels {
            out.extend(level.iter().map(|g| g.to_graph()));
        }
        return Ok(out);
    }
    for total in 1..=max_n {
        let mut combos: Vec<Vec<(usize, usize)>> = Vec::new();
        component_combos(&levels, total, None, &mut Vec::new(), &mut combos);
        // Deterministic order: by the assembled adjacency, smallest first.
        let mut graphs: Vec<SmallGraph> =
            combos.iter().map(|combo| assemble(&levels, combo)).collect();
        graphs.sort_unstable();
        graphs.dedup();
        out.extend(graphs.into_iter().map(|g| g.to_graph()));
    }
    Ok(out)
}

/// Chooses component (size, index) multisets: sizes non-increasing, indices
/// non-decreasing within a size, so each multiset appears exactly once.
fn component_combos(
    levels: &[Vec<SmallGraph>],
    remaining: usize,
    previous: Option<(usize, usize)>,
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    let max_size = previous.map_or(remaining, |(s, _)| s.min(remaining));
    for size in (1..=max_size).rev() {
        let start = match previous {
            Some((s, i)) if s == size => i,
            _ => 0,
        };
        for idx in start..levels[size].len() {
            current.push((size, idx));
            component_combos(levels, remaining - size, Some((size, idx)), current, out);
            current.pop();
        }
    }
}

fn assemble(levels: &[Vec<SmallGraph>], combo: &[(usize, usize)]) -> SmallGraph {
    let mut rows = [0u16; HARD_CAP];
    let mut offset = 0usize;
    for &(size, idx) in combo {
        let comp = &levels[size][idx];
        for i in 0..size {
            rows[offset + i] = comp.rows[i] << offset;
        }
        offset += size;
    }
    canonical(&SmallGraph { n: offset, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn connected_exact(n: usize) -> usize {
        enumerate_graphs(n, true, false)
            .unwrap()
            .iter()
            .filter(|g| g.vertex_count() == n)
            .count()
    }

    fn all_exact(n: usize) -> usize {
        enumerate_graphs(n, false, false)
            .unwrap()
            .iter()
            .filter(|g| g.vertex_count() == n)
            .count()
    }

    #[test]
    fn connected_counts_up_to_isomorphism() {
        assert_eq!(connected_exact(1), 1);
        assert_eq!(connected_exact(2), 1);
        assert_eq!(connected_exact(3), 2); // P3 and K3
        assert_eq!(connected_exact(4), 6);
        assert_eq!(connected_exact(5), 21);
        assert_eq!(connected_exact(6), 112);
    }

    #[test]
    fn all_graph_counts_up_to_isomorphism() {
        assert_eq!(all_exact(1), 1);
        assert_eq!(all_exact(2), 2);
        assert_eq!(all_exact(3), 4);
        assert_eq!(all_exact(4), 11);
        assert_eq!(all_exact(5), 34);
    }

    #[test]
    fn subcubic_filter_at_four_excludes_k4() {
        let graphs = enumerate_graphs(4, true, false).unwrap();
        let four: Vec<&Graph> = graphs.iter().filter(|g| g.vertex_count() == 4).collect();
        assert_eq!(four.len(), 6);
        let subcubic_non_regular = four
            .iter()
            .filter(|g| super::super::predicates::is_subcubic_non_regular(g).value)
            .count();
        assert_eq!(subcubic_non_regular, 5);
    }

    #[test]
    fn enumerated_graphs_are_connected_and_simple() {
        for g in enumerate_graphs(5, true, false).unwrap() {
            assert!(g.is_connected());
            let total: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }

    #[test]
    fn cap_errors() {
        assert!(matches!(
            enumerate_graphs(9, true, false),
            Err(EnumerateError::CapExceeded { requested: 9, cap: DEFAULT_CAP, hard: false })
        ));
        assert!(matches!(
            enumerate_graphs(10, true, true),
            Err(EnumerateError::CapExceeded { requested: 10, cap: HARD_CAP, hard: true })
        ));
    }

    #[test]
    fn canonical_form_is_isomorphism_invariant() {
        // Relabelings of the paw graph all canonicalize identically.
        let paw = SmallGraph { n: 4, rows: rows_from(&[(0, 1), (1, 2), (2, 0), (2, 3)]) };
        let relabeled = SmallGraph { n: 4, rows: rows_from(&[(3, 2), (2, 0), (0, 3), (0, 1)]) };
        assert_eq!(canonical(&paw), canonical(&relabeled));
        // And a non-isomorphic graph with the same degree sequence of sums...
        let path = SmallGraph { n: 4, rows: rows_from(&[(0, 1), (1, 2), (2, 3)]) };
        assert_ne!(canonical(&paw), canonical(&path));
    }

    fn rows_from(edges: &[(usize, usize)]) -> [u16; HARD_CAP] {
        let mut rows = [0u16; HARD_CAP];
        for &(u, v) in edges {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        rows
    }
}
