//! Exact decision procedure and exact acyclic chromatic index by backtracking
//! with validity pruning and color symmetry breaking.
//!
//! The search keeps its own incremental state (per-vertex color masks plus a
//! color-to-edge lookup) so that the cycle-closure test per candidate color is
//! a single O(path length) walk. Returned colorings are always re-verified
//! through [`coloring::verify_acyclic`] before they leave this module.

use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coloring::{self, Color, ColorSet, ColoringError, EdgeColoring};
use crate::graph::{EdgeId, Graph};

/// Order in which the search colors edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOrder {
    /// Edge-id order.
    Static,
    /// Descending endpoint degree sum, ties by edge id (fail-first).
    DegreeSumDescending,
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub kappa: u32,
    /// Maximum number of color-assignment attempts; 0 means unlimited.
    pub node_budget: u64,
    pub edge_order: EdgeOrder,
    pub symmetry_breaking: bool,
}

impl SolverConfig {
    pub fn new(kappa: u32) -> Self {
        SolverConfig {
            kappa,
            node_budget: 0,
            edge_order: EdgeOrder::DegreeSumDescending,
            symmetry_breaking: true,
        }
    }

    pub fn with_budget(kappa: u32, node_budget: u64) -> Self {
        SolverConfig { node_budget, ..Self::new(kappa) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Colorable,
    NotColorable,
    /// The node budget ran out before the search finished; not a verdict.
    BudgetExhausted,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Present iff status is `Colorable`; passes `verify_acyclic`.
    pub coloring: Option<EdgeColoring>,
    /// Color-assignment attempts spent.
    pub nodes: u64,
}

/// Edges sorted by descending endpoint degree sum, ties by id.
pub fn degree_sum_order(g: &Graph) -> Vec<EdgeId> {
    let mut order: Vec<EdgeId> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.endpoints(e);
        (std::cmp::Reverse(g.degree(u) + g.degree(v)), e)
    });
    order
}

fn edge_order(g: &Graph, order: EdgeOrder) -> Vec<EdgeId> {
    match order {
        EdgeOrder::Static => (0..g.edge_count()).collect(),
        EdgeOrder::DegreeSumDescending => degree_sum_order(g),
    }
}

// ============================================================================
// Incremental search state
// ============================================================================

struct SearchState<'g> {
    g: &'g Graph,
    kappa: u32,
    colors: Vec<u32>,
    /// Per-vertex mask of incident colors (bit c-1).
    used: Vec<u64>,
    /// `at[v][c-1]` = edge id + 1 of the unique c-colored edge at v, or 0.
    at: Vec<Vec<u32>>,
}

impl<'g> SearchState<'g> {
    fn new(g: &'g Graph, kappa: u32) -> Self {
        assert!((1..=64).contains(&kappa), "kappa {kappa} outside 1..=64");
        SearchState {
            g,
            kappa,
            colors: vec![0; g.edge_count()],
            used: vec![0; g.vertex_count()],
            at: vec![vec![0; kappa as usize]; g.vertex_count()],
        }
    }

    fn from_partial(g: &'g Graph, partial: &EdgeColoring) -> Self {
        let mut state = SearchState::new(g, partial.kappa());
        for e in 0..g.edge_count() {
            if let Some(c) = partial.get(e) {
                state.assign(e, c);
            }
        }
        state
    }

    fn assign(&mut self, e: EdgeId, c: Color) {
        debug_assert_eq!(self.colors[e], 0);
        let (u, v) = self.g.endpoints(e);
        let bit = 1u64 << (c - 1);
        debug_assert_eq!(self.used[u] & bit, 0, "color {c} already at {u}");
        debug_assert_eq!(self.used[v] & bit, 0, "color {c} already at {v}");
        self.colors[e] = c;
        self.used[u] |= bit;
        self.used[v] |= bit;
        self.at[u][(c - 1) as usize] = e as u32 + 1;
        self.at[v][(c - 1) as usize] = e as u32 + 1;
    }

    fn unassign(&mut self, e: EdgeId) {
        let c = self.colors[e];
        debug_assert_ne!(c, 0);
        let (u, v) = self.g.endpoints(e);
        let bit = 1u64 << (c - 1);
        self.colors[e] = 0;
        self.used[u] &= !bit;
        self.used[v] &= !bit;
        self.at[u][(c - 1) as usize] = 0;
        self.at[v][(c - 1) as usize] = 0;
    }

    fn full_mask(&self) -> u64 {
        if self.kappa >= 64 {
            !0
        } else {
            (1u64 << self.kappa) - 1
        }
    }

    /// Walks the (beta, alpha)-alternating chain from `u`; true iff it reaches
    /// `v`, i.e. assigning alpha to uv would close a bichromatic cycle.
    /// Requires alpha absent at both u and v (it is a candidate).
    fn closes_cycle(&self, u: usize, v: usize, alpha: Color, beta: Color) -> bool {
        let mut x = u;
        let mut col = beta;
        loop {
            let slot = self.at[x][(col - 1) as usize];
            if slot == 0 {
                return false;
            }
            let e = (slot - 1) as usize;
            let y = self.g.other_endpoint(e, x);
            if y == v {
                return true;
            }
            x = y;
            col = if col == beta { alpha } else { beta };
        }
    }

    /// Mask of valid colors for the uncolored edge `e`: candidates that close
    /// no bichromatic cycle.
    fn valid_mask(&self, e: EdgeId) -> u64 {
        let (u, v) = self.g.endpoints(e);
        let candidates = self.full_mask() & !self.used[u] & !self.used[v];
        let common = self.used[u] & self.used[v];
        let mut valid = 0u64;
        let mut rest = candidates;
        while rest != 0 {
            let alpha = rest.trailing_zeros() + 1;
            rest &= rest - 1;
            let mut ok = true;
            let mut betas = common;
            while betas != 0 {
                let beta = betas.trailing_zeros() + 1;
                betas &= betas - 1;
                if self.closes_cycle(u, v, alpha, beta) {
                    ok = false;
                    break;
                }
            }
            if ok {
                valid |= 1u64 << (alpha - 1);
            }
        }
        valid
    }

    fn to_coloring(&self) -> EdgeColoring {
        let mut c = EdgeColoring::new(self.colors.len(), self.kappa)
            .expect("kappa validated at construction");
        for (e, &col) in self.colors.iter().enumerate() {
            if col != 0 {
                c.set(e, col);
            }
        }
        c
    }
}

/// Test seam: the incremental valid set for an uncolored edge of a partial
/// coloring, for cross-checking against [`coloring::valid_colors`].
#[doc(hidden)]
pub fn incremental_valid_colors(g: &Graph, partial: &EdgeColoring, e: EdgeId) -> ColorSet {
    let state = SearchState::from_partial(g, partial);
    let mut set = ColorSet::empty();
    let mut mask = state.valid_mask(e);
    while mask != 0 {
        set.insert(mask.trailing_zeros() + 1);
        mask &= mask - 1;
    }
    set
}

// ============================================================================
// Decision procedure
// ============================================================================

enum Dfs {
    Found,
    Exhausted,
    OutOfBudget,
}

fn dfs(
    state: &mut SearchState,
    order: &[EdgeId],
    idx: usize,
    max_used: u32,
    symmetry: bool,
    budget: u64,
    nodes: &mut u64,
) -> Dfs {
    if idx == order.len() {
        return Dfs::Found;
    }
    let e = order[idx];
    let mut mask = state.valid_mask(e);
    if symmetry {
        // Quotient color permutations: next edge may only open one new color.
        let cap = (max_used + 1).min(state.kappa);
        mask &= if cap >= 64 { !0 } else { (1u64 << cap) - 1 };
    }
    while mask != 0 {
        let c = mask.trailing_zeros() + 1;
        mask &= mask - 1;
        *nodes += 1;
        if budget > 0 && *nodes > budget {
            return Dfs::OutOfBudget;
        }
        state.assign(e, c);
        match dfs(state, order, idx + 1, max_used.max(c), symmetry, budget, nodes) {
            Dfs::Found => return Dfs::Found,
            Dfs::Exhausted => state.unassign(e),
            Dfs::OutOfBudget => {
                state.unassign(e);
                return Dfs::OutOfBudget;
            }
        }
    }
    Dfs::Exhausted
}

/// Decides whether `g` has an acyclic edge coloring with `cfg.kappa` colors.
/// Exact when the budget suffices; any returned coloring re-verifies.
pub fn decide_colorable(g: &Graph, cfg: &SolverConfig) -> SolveResult {
    assert!(cfg.kappa >= 1, "kappa must be at least 1");
    if g.edge_count() == 0 {
        let coloring = EdgeColoring::new(0, cfg.kappa.min(64).max(1)).expect("valid kappa");
        return SolveResult { status: SolveStatus::Colorable, coloring: Some(coloring), nodes: 0 };
    }
    let delta = g.max_degree().unwrap_or(0);
    if (cfg.kappa as usize) < delta {
        // A proper coloring needs at least Delta colors.
        return SolveResult { status: SolveStatus::NotColorable, coloring: None, nodes: 0 };
    }
    assert!(cfg.kappa <= 64, "palettes beyond 64 colors are unsupported");
    let order = edge_order(g, cfg.edge_order);
    let mut state = SearchState::new(g, cfg.kappa);
    let mut nodes = 0u64;
    match dfs(&mut state, &order, 0, 0, cfg.symmetry_breaking, cfg.node_budget, &mut nodes) {
        Dfs::Found => {
            let coloring = state.to_coloring();
            let verdict = coloring::verify_acyclic(&coloring, g)
                .expect("search produces total colorings");
            assert!(verdict.is_acyclic(), "solver produced a non-acyclic coloring: {verdict:?}");
            SolveResult { status: SolveStatus::Colorable, coloring: Some(coloring), nodes }
        }
        Dfs::Exhausted => SolveResult { status: SolveStatus::NotColorable, coloring: None, nodes },
        Dfs::OutOfBudget => {
            SolveResult { status: SolveStatus::BudgetExhausted, coloring: None, nodes }
        }
    }
}

/// Exact index, or a bracket when the per-decision budget ran out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexResult {
    Exact { index: usize, nodes: u64 },
    /// Budget-limited: the index lies in `lower..=upper`.
    Unknown { lower: usize, upper: usize, nodes: u64 },
}

impl IndexResult {
    pub fn nodes(&self) -> u64 {
        match *self {
            IndexResult::Exact { nodes, .. } | IndexResult::Unknown { nodes, .. } => nodes,
        }
    }
}

/// Least kappa admitting an acyclic edge coloring, searching upward from the
/// trivial lower bound Delta. The all-distinct coloring caps the search at
/// kappa = m, so a bracket is always finite.
pub fn acyclic_chromatic_index(g: &Graph, cfg_template: &SolverConfig) -> IndexResult {
    let m = g.edge_count();
    if m == 0 {
        return IndexResult::Exact { index: 0, nodes: 0 };
    }
    assert!(m <= 64, "exact index is supported up to 64 edges");
    let delta = g.max_degree().unwrap_or(0).max(1);
    let mut nodes = 0u64;
    let mut first_unknown: Option<usize> = None;
    for kappa in delta..=m.max(delta) {
        let cfg = SolverConfig { kappa: kappa as u32, ..cfg_template.clone() };
        let res = decide_colorable(g, &cfg);
        nodes += res.nodes;
        match res.status {
            SolveStatus::Colorable => {
                return match first_unknown {
                    None => IndexResult::Exact { index: kappa, nodes },
                    Some(lower) => IndexResult::Unknown { lower, upper: kappa, nodes },
                };
            }
            SolveStatus::NotColorable => continue,
            SolveStatus::BudgetExhausted => {
                first_unknown.get_or_insert(kappa);
            }
        }
    }
    // All kappa <= m were budget-limited or refuted; m distinct colors always
    // work (every cycle then sees at least three colors).
    match first_unknown {
        None => IndexResult::Exact { index: m, nodes },
        Some(lower) if lower >= m => IndexResult::Exact { index: m, nodes },
        Some(lower) => IndexResult::Unknown { lower, upper: m, nodes },
    }
}

// ============================================================================
// Deletion-minimality
// ============================================================================

/// Certification outcome for kappa-deletion-minimality. A graph is minimal
/// when it is not kappa-colorable but every proper subgraph is; single-edge
/// deletions suffice because colorability is monotone under subgraphs (a
/// restriction of an acyclic coloring stays acyclic).
#[derive(Clone, Debug)]
pub enum Minimality {
    /// Max degree exceeds kappa; the notion does not apply.
    NotApplicable { max_degree: usize },
    /// The graph itself is kappa-colorable, hence not minimal.
    AlreadyColorable { coloring: EdgeColoring },
    /// Some single-edge deletion is still not kappa-colorable.
    NotMinimal { edge: EdgeId },
    /// Certified minimal; `certificates[e]` is an acyclic coloring of G - e,
    /// stored over G's edge ids with edge e uncolored.
    Minimal { certificates: Vec<EdgeColoring> },
    BudgetExhausted,
}

impl Minimality {
    pub fn is_minimal(&self) -> bool {
        matches!(self, Minimality::Minimal { .. })
    }
}

pub fn is_deletion_minimal(g: &Graph, kappa: u32, node_budget: u64) -> Minimality {
    let delta = g.max_degree().unwrap_or(0);
    if delta > kappa as usize {
        return Minimality::NotApplicable { max_degree: delta };
    }
    let cfg = SolverConfig::with_budget(kappa, node_budget);
    let whole = decide_colorable(g, &cfg);
    match whole.status {
        SolveStatus::Colorable => {
            return Minimality::AlreadyColorable {
                coloring: whole.coloring.expect("colorable result carries a coloring"),
            }
        }
        SolveStatus::BudgetExhausted => return Minimality::BudgetExhausted,
        SolveStatus::NotColorable => {}
    }
    let mut certificates = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        let sub = g.delete_edge(e);
        let res = decide_colorable(&sub.graph, &cfg);
        match res.status {
            SolveStatus::NotColorable => return Minimality::NotMinimal { edge: e },
            SolveStatus::BudgetExhausted => return Minimality::BudgetExhausted,
            SolveStatus::Colorable => {
                let sub_coloring = res.coloring.expect("colorable result carries a coloring");
                let mut lifted =
                    EdgeColoring::new(g.edge_count(), kappa).expect("kappa validated");
                for (j, &parent) in sub.edge_map.iter().enumerate() {
                    if let Some(c) = sub_coloring.get(j) {
                        lifted.set(parent, c);
                    }
                }
                certificates.push(lifted);
            }
        }
    }
    Minimality::Minimal { certificates }
}

/// True iff the acyclic coloring `c` of G - e (stored over G's edges with `e`
/// uncolored) admits no valid color for `e`. Errors when `c` is not acyclic
/// on its colored edges or does not cover exactly G - e.
pub fn check_no_valid_extension(
    g: &Graph,
    e: EdgeId,
    c: &EdgeColoring,
    kappa: u32,
) -> Result<bool, ColoringError> {
    if c.kappa() != kappa {
        return Err(ColoringError::KappaOutOfRange { kappa });
    }
    if c.get(e).is_some() {
        return Err(ColoringError::AlreadyColored { edge: e });
    }
    for f in 0..g.edge_count() {
        if f != e && c.get(f).is_none() {
            return Err(ColoringError::PartialColoring { edge: f });
        }
    }
    if !coloring::verify_colored_edges(c, g).is_acyclic() {
        return Err(ColoringError::NotAcyclic);
    }
    Ok(coloring::valid_colors(c, g, e)?.is_empty())
}

// ============================================================================
// Sampling and exhaustive enumeration
// ============================================================================

fn sample_dfs(state: &mut SearchState, order: &[EdgeId], idx: usize, rng: &mut ChaCha8Rng) -> bool {
    if idx == order.len() {
        return true;
    }
    let e = order[idx];
    let mut colors: Vec<Color> = {
        let mut mask = state.valid_mask(e);
        let mut v = Vec::new();
        while mask != 0 {
            v.push(mask.trailing_zeros() + 1);
            mask &= mask - 1;
        }
        v
    };
    colors.shuffle(rng);
    for c in colors {
        state.assign(e, c);
        if sample_dfs(state, order, idx + 1, rng) {
            return true;
        }
        state.unassign(e);
    }
    false
}

/// A pseudorandom total acyclic coloring, deterministic in `seed`; `None`
/// when the graph is not kappa-colorable.
pub fn sample_acyclic_coloring(g: &Graph, kappa: u32, seed: u64) -> Option<EdgeColoring> {
    if g.edge_count() == 0 {
        return EdgeColoring::new(0, kappa).ok();
    }
    if (kappa as usize) < g.max_degree().unwrap_or(0) {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<EdgeId> = (0..g.edge_count()).collect();
    order.shuffle(&mut rng);
    let mut state = SearchState::new(g, kappa);
    if sample_dfs(&mut state, &order, 0, &mut rng) {
        let c = state.to_coloring();
        debug_assert!(coloring::verify_acyclic(&c, g).unwrap().is_acyclic());
        Some(c)
    } else {
        None
    }
}

/// Exhaustive-enumeration summary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Total acyclic colorings visited.
    pub count: u64,
    /// False when the visit limit or the callback stopped the enumeration.
    pub complete: bool,
}

/// Visits every total acyclic kappa-coloring of `g` (no symmetry breaking,
/// so color-permuted variants are distinct). `limit` of 0 means unlimited.
pub fn for_each_acyclic_coloring<F>(g: &Graph, kappa: u32, limit: u64, mut f: F) -> Enumeration
where
    F: FnMut(&EdgeColoring) -> ControlFlow<()>,
{
    fn rec<F>(
        state: &mut SearchState,
        idx: usize,
        limit: u64,
        count: &mut u64,
        f: &mut F,
    ) -> ControlFlow<bool>
    where
        F: FnMut(&EdgeColoring) -> ControlFlow<()>,
    {
        if idx == state.colors.len() {
            *count += 1;
            if f(&state.to_coloring()).is_break() {
                return ControlFlow::Break(true);
            }
            if limit > 0 && *count >= limit {
                return ControlFlow::Break(false);
            }
            return ControlFlow::Continue(());
        }
        let mut mask = state.valid_mask(idx);
        while mask != 0 {
            let c = mask.trailing_zeros() + 1;
            mask &= mask - 1;
            state.assign(idx, c);
            let out = rec(state, idx + 1, limit, count, f);
            state.unassign(idx);
            out?;
        }
        ControlFlow::Continue(())
    }

    if (kappa as usize) < g.max_degree().unwrap_or(0) {
        return Enumeration { count: 0, complete: true };
    }
    let mut state = SearchState::new(g, kappa);
    let mut count = 0u64;
    let complete = match rec(&mut state, 0, limit, &mut count, &mut f) {
        ControlFlow::Continue(()) => true,
        ControlFlow::Break(_) => false,
    };
    Enumeration { count, complete }
}

// ============================================================================
// Fact-2 style audit over sampled colorings of G - uv
// ============================================================================

/// One sampled coloring of G - uv, with the quantities the audit checks.
#[derive(Clone, Debug)]
pub struct Fact2Sample {
    pub edge: EdgeId,
    /// s = |U(u) ∩ U(v)|.
    pub common: usize,
    pub no_valid_extension: bool,
    /// When s = 0: deg(u) + deg(v) == kappa + 2 held.
    pub degree_sum_exact: Option<bool>,
    /// deg(u)+deg(v)+sum of deg over W(uv) >= kappa + 2s + 2, reading W at u.
    pub inequality_w_uv: bool,
    /// Same inequality with the roles swapped (W read at v).
    pub inequality_w_vu: bool,
}

#[derive(Clone, Debug)]
pub struct Fact2Report {
    pub samples: Vec<Fact2Sample>,
    /// Edges whose deleted graph admitted no kappa-coloring at all.
    pub unsampled_edges: Vec<EdgeId>,
    pub all_no_extension: bool,
    pub all_s0_exact: bool,
    pub all_inequality_w_uv: bool,
    pub all_inequality_w_vu: bool,
}

/// Samples `per_edge` acyclic colorings of G - uv for every edge uv and checks
/// the no-valid-extension property plus the degree-sum laws, under both
/// readings of the W set.
pub fn fact2_audit(g: &Graph, kappa: u32, per_edge: usize, seed: u64) -> Fact2Report {
    let mut samples = Vec::new();
    let mut unsampled = Vec::new();
    for e in 0..g.edge_count() {
        let sub = g.delete_edge(e);
        let mut produced = false;
        for i in 0..per_edge {
            let sample_seed = seed
                .wrapping_mul(0x9e37_79b9_7f4a_7c15)
                .wrapping_add((e as u64) << 32)
                .wrapping_add(i as u64);
            let Some(sub_coloring) = sample_acyclic_coloring(&sub.graph, kappa, sample_seed)
            else {
                break;
            };
            produced = true;
            let mut c = EdgeColoring::new(g.edge_count(), kappa).expect("kappa validated");
            for (j, &parent) in sub.edge_map.iter().enumerate() {
                if let Some(col) = sub_coloring.get(j) {
                    c.set(parent, col);
                }
            }
            samples.push(fact2_sample(g, e, &c, kappa));
        }
        if !produced {
            unsampled.push(e);
        }
    }
    Fact2Report {
        all_no_extension: samples.iter().all(|s| s.no_valid_extension),
        all_s0_exact: samples.iter().all(|s| s.degree_sum_exact.unwrap_or(true)),
        all_inequality_w_uv: samples.iter().all(|s| s.inequality_w_uv),
        all_inequality_w_vu: samples.iter().all(|s| s.inequality_w_vu),
        samples,
        unsampled_edges: unsampled,
    }
}

fn fact2_sample(g: &Graph, e: EdgeId, c: &EdgeColoring, kappa: u32) -> Fact2Sample {
    let (u, v) = g.endpoints(e);
    let used_u = coloring::used_colors(c, g, u);
    let used_v = coloring::used_colors(c, g, v);
    let s = used_u.intersection(used_v).len();
    let deg_sum = g.degree(u) + g.degree(v);
    // W over the uncolored edge uv: neighbors of u whose edge color lies in
    // U(v) (there is no color on uv itself to drop).
    let w_sum = |a: usize, other_used: ColorSet| -> usize {
        g.adjacency(a)
            .iter()
            .filter(|&&(_, f)| c.get(f).is_some_and(|col| other_used.contains(col)))
            .map(|&(w, _)| g.degree(w))
            .sum()
    };
    let bound = kappa as usize + 2 * s + 2;
    Fact2Sample {
        edge: e,
        common: s,
        no_valid_extension: check_no_valid_extension(g, e, c, kappa)
            .expect("sampled colorings are acyclic on G - e"),
        degree_sum_exact: (s == 0).then_some(deg_sum == kappa as usize + 2),
        inequality_w_uv: deg_sum + w_sum(u, used_v) >= bound,
        inequality_w_vu: deg_sum + w_sum(v, used_u) >= bound,
    }
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use proptest::prelude::*;

    #[test]
    fn k4_needs_five_colors() {
        let k4 = Graph::complete(4);
        assert_eq!(decide_colorable(&k4, &SolverConfig::new(4)).status, SolveStatus::NotColorable);
        let res = decide_colorable(&k4, &SolverConfig::new(5));
        assert_eq!(res.status, SolveStatus::Colorable);
        assert!(coloring::verify_acyclic(res.coloring.as_ref().unwrap(), &k4)
            .unwrap()
            .is_acyclic());
    }

    #[test]
    fn c4_needs_three_colors() {
        let c4 = Graph::cycle(4);
        assert_eq!(decide_colorable(&c4, &SolverConfig::new(2)).status, SolveStatus::NotColorable);
        assert_eq!(decide_colorable(&c4, &SolverConfig::new(3)).status, SolveStatus::Colorable);
    }

    #[test]
    fn forests_color_at_delta() {
        // Greedy on forests never creates a cycle, so kappa = Delta works.
        for g in [Graph::path(7), Graph::star(5), Graph::path(2)] {
            let delta = g.max_degree().unwrap() as u32;
            assert_eq!(
                decide_colorable(&g, &SolverConfig::new(delta)).status,
                SolveStatus::Colorable
            );
        }
    }

    #[test]
    fn index_of_standard_graphs() {
        let cfg = SolverConfig::new(1);
        match acyclic_chromatic_index(&Graph::complete_bipartite(3, 3), &cfg) {
            IndexResult::Exact { index, .. } => assert_eq!(index, 5),
            other => panic!("expected exact index, got {other:?}"),
        }
        match acyclic_chromatic_index(&Graph::cycle(5), &cfg) {
            IndexResult::Exact { index, .. } => assert_eq!(index, 3),
            other => panic!("expected exact index, got {other:?}"),
        }
        match acyclic_chromatic_index(&Graph::star(6), &cfg) {
            IndexResult::Exact { index, .. } => assert_eq!(index, 6),
            other => panic!("expected exact index, got {other:?}"),
        }
        assert_eq!(
            acyclic_chromatic_index(&Graph::new(3, vec![]).unwrap(), &cfg),
            IndexResult::Exact { index: 0, nodes: 0 }
        );
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let k33 = Graph::complete_bipartite(3, 3);
        let res = decide_colorable(&k33, &SolverConfig::with_budget(4, 3));
        assert_eq!(res.status, SolveStatus::BudgetExhausted);
        assert!(res.nodes > 3);
        match acyclic_chromatic_index(&k33, &SolverConfig::with_budget(1, 2)) {
            IndexResult::Unknown { lower, upper, .. } => {
                assert!(lower >= 3 && upper >= lower);
            }
            IndexResult::Exact { .. } => panic!("a 2-node budget cannot settle K33"),
        }
    }

    #[test]
    fn deletion_minimality_certificates() {
        match is_deletion_minimal(&Graph::complete(4), 4, 0) {
            Minimality::Minimal { certificates } => {
                assert_eq!(certificates.len(), 6);
                for (e, cert) in certificates.iter().enumerate() {
                    assert_eq!(cert.get(e), None);
                    assert_eq!(cert.colored_count(), 5);
                }
            }
            other => panic!("K4 should be 4-deletion-minimal, got {other:?}"),
        }
        assert!(is_deletion_minimal(&Graph::cycle(4), 2, 0).is_minimal());
        assert!(matches!(
            is_deletion_minimal(&Graph::cycle(4), 3, 0),
            Minimality::AlreadyColorable { .. }
        ));
        assert!(matches!(
            is_deletion_minimal(&Graph::star(5), 3, 0),
            Minimality::NotApplicable { max_degree: 5 }
        ));
        // C5 at kappa = 2 is not colorable, but neither is it minimal at
        // kappa 2: C5 minus an edge is P5, 2-colorable... every subgraph of a
        // cycle is a path, so C5 *is* minimal at 2.
        assert!(is_deletion_minimal(&Graph::cycle(5), 2, 0).is_minimal());
    }

    #[test]
    fn no_valid_extension_cases() {
        // C4 minus its last edge colored 1,2,1 with kappa 2: both colors
        // touch the endpoints, so the candidate set is empty.
        let c4 = Graph::cycle(4);
        let mut c = EdgeColoring::new(4, 2).unwrap();
        c.set(0, 1);
        c.set(1, 2);
        c.set(2, 1);
        assert!(check_no_valid_extension(&c4, 3, &c, 2).unwrap());

        // Tree minus a leaf edge at kappa = Delta + 1 always extends.
        let star = Graph::star(3);
        let mut c = EdgeColoring::new(3, 4).unwrap();
        c.set(0, 1);
        c.set(1, 2);
        assert!(!check_no_valid_extension(&star, 2, &c, 4).unwrap());

        // Non-acyclic input is rejected: C4 plus a pendant edge, with the
        // cycle colored 1,2,1,2 and the pendant left blank.
        let kite = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let mut bad = EdgeColoring::new(5, 4).unwrap();
        bad.set(0, 1);
        bad.set(1, 2);
        bad.set(2, 1);
        bad.set(3, 2);
        assert_eq!(check_no_valid_extension(&kite, 4, &bad, 4), Err(ColoringError::NotAcyclic));
    }

    #[test]
    fn k4_minus_e_never_extends_at_four() {
        // Every acyclic 4-coloring of K4 - e refuses the missing edge;
        // otherwise K4 itself would be 4-colorable.
        let k4 = Graph::complete(4);
        let sub = k4.delete_edge(0);
        let enumeration = for_each_acyclic_coloring(&sub.graph, 4, 0, |sub_coloring| {
            let mut lifted = EdgeColoring::new(6, 4).unwrap();
            for (j, &parent) in sub.edge_map.iter().enumerate() {
                lifted.set(parent, sub_coloring.get(j).unwrap());
            }
            assert!(check_no_valid_extension(&k4, 0, &lifted, 4).unwrap());
            std::ops::ControlFlow::Continue(())
        });
        assert!(enumeration.complete);
        assert!(enumeration.count > 0);
    }

    #[test]
    fn sampling_is_deterministic_and_verified() {
        let k33 = Graph::complete_bipartite(3, 3);
        let a = sample_acyclic_coloring(&k33, 5, 7).unwrap();
        let b = sample_acyclic_coloring(&k33, 5, 7).unwrap();
        assert_eq!(a, b);
        assert!(sample_acyclic_coloring(&k33, 4, 7).is_none());
        assert!(coloring::verify_acyclic(&a, &k33).unwrap().is_acyclic());
    }

    #[test]
    fn fact2_on_certified_minimal_c4() {
        let c4 = Graph::cycle(4);
        let report = fact2_audit(&c4, 2, 20, 11);
        assert!(report.unsampled_edges.is_empty());
        assert!(report.all_no_extension);
        assert!(report.all_s0_exact);
        assert!(report.all_inequality_w_uv);
        assert!(report.all_inequality_w_vu);
    }

    proptest! {
        // The incremental solver valid set must match the engine's definition
        // on arbitrary partial acyclic colorings.
        #[test]
        fn incremental_valid_agrees_with_engine(seed in 0u64..500) {
            let g = Graph::complete_bipartite(3, 3);
            let kappa = 5;
            // Build a random partial acyclic coloring by truncating a sample.
            let full = sample_acyclic_coloring(&g, kappa, seed).unwrap();
            let keep = (seed % 9) as usize;
            let mut partial = EdgeColoring::new(g.edge_count(), kappa).unwrap();
            for e in 0..keep {
                partial.set(e, full.get(e).unwrap());
            }
            for e in keep..g.edge_count() {
                let engine = coloring::valid_colors(&partial, &g, e).unwrap();
                let fast = incremental_valid_colors(&g, &partial, e);
                prop_assert_eq!(engine, fast);
            }
        }
    }
}
