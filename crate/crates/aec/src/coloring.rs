//! Partial edge colorings and the machinery around them: per-vertex color
//! sets, maximal dichromatic paths, critical/alternating path tests,
//! candidate and valid colors, and the acyclicity verifier.
//!
//! Colors are 1-based integers in `1..=kappa`. Properness is *not* an
//! invariant of [`EdgeColoring`] — recoloring moves go through improper
//! intermediates on purpose — it is a queryable property instead.

use std::fmt;

use crate::graph::{EdgeId, Graph, VertexId};

/// A color in `1..=kappa`.
pub type Color = u32;

/// Bitmask set of colors; supports kappa up to 64.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const MAX_KAPPA: u32 = 64;

    pub fn empty() -> Self {
        ColorSet(0)
    }

    /// The full palette `{1, ..., kappa}`.
    pub fn full(kappa: u32) -> Self {
        debug_assert!(kappa <= Self::MAX_KAPPA);
        if kappa >= 64 {
            ColorSet(!0)
        } else {
            ColorSet((1u64 << kappa) - 1)
        }
    }

    fn bit(c: Color) -> u64 {
        debug_assert!((1..=Self::MAX_KAPPA).contains(&c), "color {c} out of range");
        1u64 << (c - 1)
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 & Self::bit(c) != 0
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= Self::bit(c);
    }

    pub fn remove(&mut self, c: Color) {
        self.0 &= !Self::bit(c);
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Colors in ascending order.
    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let c = rest.trailing_zeros() + 1;
                rest &= rest - 1;
                Some(c)
            }
        })
    }

    /// Smallest color in the set, if any.
    pub fn min(self) -> Option<Color> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() + 1)
        }
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<T: IntoIterator<Item = Color>>(iter: T) -> Self {
        let mut s = ColorSet::empty();
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// Partial or total assignment of colors `1..=kappa` to edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    kappa: u32,
    // 0 = uncolored; otherwise the color.
    colors: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringError {
    KappaOutOfRange { kappa: u32 },
    EdgeCountMismatch { edges: usize, expected: usize },
    UncoloredEdge { edge: EdgeId },
    AlreadyColored { edge: EdgeId },
    NoSuchEdge { u: VertexId, v: VertexId },
    /// Two incident edges of the same color at a vertex.
    ImproperAt { vertex: VertexId, color: Color },
    /// Identical colors where two distinct colors are required.
    EqualColors { color: Color },
    /// A total coloring was required.
    PartialColoring { edge: EdgeId },
    /// An acyclic partial coloring was required.
    NotAcyclic,
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::KappaOutOfRange { kappa } => {
                write!(f, "kappa {kappa} out of supported range 1..=64")
            }
            ColoringError::EdgeCountMismatch { edges, expected } => {
                write!(f, "coloring covers {edges} edges but the graph has {expected}")
            }
            ColoringError::UncoloredEdge { edge } => write!(f, "edge {edge} is uncolored"),
            ColoringError::AlreadyColored { edge } => write!(f, "edge {edge} is already colored"),
            ColoringError::NoSuchEdge { u, v } => write!(f, "no edge {u}-{v} in the graph"),
            ColoringError::ImproperAt { vertex, color } => {
                write!(f, "improper coloring: color {color} repeats at vertex {vertex}")
            }
            ColoringError::EqualColors { color } => {
                write!(f, "two distinct colors required, got {color} twice")
            }
            ColoringError::PartialColoring { edge } => {
                write!(f, "total coloring required but edge {edge} is uncolored")
            }
            ColoringError::NotAcyclic => write!(f, "coloring is not acyclic on colored edges"),
        }
    }
}

impl std::error::Error for ColoringError {}

impl EdgeColoring {
    /// Fully uncolored assignment over `edges` edge ids with palette `1..=kappa`.
    pub fn new(edges: usize, kappa: u32) -> Result<Self, ColoringError> {
        if kappa == 0 || kappa > ColorSet::MAX_KAPPA {
            return Err(ColoringError::KappaOutOfRange { kappa });
        }
        Ok(EdgeColoring { kappa, colors: vec![0; edges] })
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        match self.colors[e] {
            0 => None,
            c => Some(c),
        }
    }

    /// Assigns `color` to edge `e`. Panics on a color outside the palette.
    pub fn set(&mut self, e: EdgeId, color: Color) {
        assert!(
            (1..=self.kappa).contains(&color),
            "color {color} outside palette 1..={}",
            self.kappa
        );
        self.colors[e] = color;
    }

    pub fn unset(&mut self, e: EdgeId) {
        self.colors[e] = 0;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c != 0)
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c != 0).count()
    }

    /// First uncolored edge id, if any.
    pub fn first_uncolored(&self) -> Option<EdgeId> {
        self.colors.iter().position(|&c| c == 0)
    }
}

/// Result of a maximal dichromatic path traversal.
///
/// The vertex/edge sequences are canonical: an open path is oriented from its
/// smaller-id endpoint; a closed one starts at its smallest vertex and moves
/// toward that vertex's smaller-id cycle neighbor. Repeated queries from any
/// vertex of the same two-color component therefore return identical
/// sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathQuery {
    pub alpha: Color,
    pub beta: Color,
    /// The queried vertex.
    pub origin: VertexId,
    pub vertices: Vec<VertexId>,
    /// `edges[i]` joins `vertices[i]` and `vertices[i+1]` (wrapping when closed).
    pub edges: Vec<EdgeId>,
    /// True iff the two-color component through `origin` is a cycle.
    pub closed: bool,
}

fn check_edge_counts(c: &EdgeColoring, g: &Graph) {
    assert_eq!(
        c.edge_count(),
        g.edge_count(),
        "coloring and graph disagree on edge count"
    );
}

/// U(v): colors on the edges incident with `v`.
pub fn used_colors(c: &EdgeColoring, g: &Graph, v: VertexId) -> ColorSet {
    check_edge_counts(c, g);
    g.adjacency(v).iter().filter_map(|&(_, e)| c.get(e)).collect()
}

/// C(v) = [kappa] \ U(v).
pub fn free_colors(c: &EdgeColoring, g: &Graph, v: VertexId) -> ColorSet {
    ColorSet::full(c.kappa()).difference(used_colors(c, g, v))
}

/// Upsilon(uv) = U(v) \ {color of uv}. Asymmetric: Upsilon(uv) != Upsilon(vu)
/// in general. The edge `uv` must exist and be colored.
pub fn upsilon(
    c: &EdgeColoring,
    g: &Graph,
    u: VertexId,
    v: VertexId,
) -> Result<ColorSet, ColoringError> {
    let e = g.edge_between(u, v).ok_or(ColoringError::NoSuchEdge { u, v })?;
    let col = c.get(e).ok_or(ColoringError::UncoloredEdge { edge: e })?;
    let mut set = used_colors(c, g, v);
    set.remove(col);
    Ok(set)
}

/// W(uv): neighbors of `u` whose connecting edge carries a color in
/// Upsilon(uv). Returned sorted by vertex id.
pub fn w_set(
    c: &EdgeColoring,
    g: &Graph,
    u: VertexId,
    v: VertexId,
) -> Result<Vec<VertexId>, ColoringError> {
    let ups = upsilon(c, g, u, v)?;
    let mut out: Vec<VertexId> = g
        .adjacency(u)
        .iter()
        .filter(|&&(_, e)| c.get(e).is_some_and(|col| ups.contains(col)))
        .map(|&(w, _)| w)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// The unique edge at `x` colored `col`, as `(edge, other endpoint)`.
/// Errors if two incident edges carry `col` (improper coloring).
fn edge_at(
    c: &EdgeColoring,
    g: &Graph,
    x: VertexId,
    col: Color,
) -> Result<Option<(EdgeId, VertexId)>, ColoringError> {
    let mut found = None;
    for &(w, e) in g.adjacency(x) {
        if c.get(e) == Some(col) {
            if found.is_some() {
                return Err(ColoringError::ImproperAt { vertex: x, color: col });
            }
            found = Some((e, w));
        }
    }
    Ok(found)
}

/// One direction of a dichromatic walk: vertices visited after `start`
/// (excluded) and the edges taken, following `first` then alternating.
struct Walk {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
    /// Walk returned to `start` (the component is a cycle).
    closed: bool,
}

fn walk_from(
    c: &EdgeColoring,
    g: &Graph,
    start: VertexId,
    first: Color,
    second: Color,
) -> Result<Walk, ColoringError> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut x = start;
    let mut col = first;
    loop {
        match edge_at(c, g, x, col)? {
            None => return Ok(Walk { vertices, edges, closed: false }),
            Some((e, y)) => {
                edges.push(e);
                if y == start {
                    return Ok(Walk { vertices, edges, closed: true });
                }
                vertices.push(y);
                x = y;
                col = if col == first { second } else { first };
            }
        }
    }
}

/// The maximal path whose edges alternate between `alpha` and `beta` and which
/// contains `v` — the two-color component through `v`, unique for a proper
/// coloring. Returns the single-vertex path when `v` touches neither color.
pub fn maximal_dichromatic_path(
    c: &EdgeColoring,
    g: &Graph,
    v: VertexId,
    alpha: Color,
    beta: Color,
) -> Result<PathQuery, ColoringError> {
    check_edge_counts(c, g);
    if alpha == beta {
        return Err(ColoringError::EqualColors { color: alpha });
    }
    let wa = walk_from(c, g, v, alpha, beta)?;
    if wa.closed {
        return Ok(canonical_cycle(v, alpha, beta, wa));
    }
    let wb = walk_from(c, g, v, beta, alpha)?;
    debug_assert!(!wb.closed, "a two-color component cannot close on one side only");

    // Assemble endpoint-to-endpoint: reverse of the beta-side, then v, then
    // the alpha-side.
    let mut vertices: Vec<VertexId> = wb.vertices.iter().rev().copied().collect();
    vertices.push(v);
    vertices.extend(&wa.vertices);
    let mut edges: Vec<EdgeId> = wb.edges.iter().rev().copied().collect();
    edges.extend(&wa.edges);
    if vertices[0] > *vertices.last().expect("path contains v") {
        vertices.reverse();
        edges.reverse();
    }
    Ok(PathQuery { alpha, beta, origin: v, vertices, edges, closed: false })
}

fn canonical_cycle(origin: VertexId, alpha: Color, beta: Color, walk: Walk) -> PathQuery {
    // walk.vertices excludes the start; the cycle is origin, v1, ..., vk, origin.
    let mut cycle = Vec::with_capacity(walk.vertices.len() + 1);
    cycle.push(origin);
    cycle.extend(&walk.vertices);
    let mut edges = walk.edges;
    let k = cycle.len();
    // Rotate so the smallest vertex leads; then pick the direction whose
    // second vertex is smaller. edges[i] joins cycle[i] and cycle[i+1 mod k].
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(start);
    edges.rotate_left(start);
    if k > 2 && cycle[1] > cycle[k - 1] {
        // Reverse direction: vertices become c0, c_{k-1}, ..., c1 and edge i
        // must join the new positions i and i+1, which is plain reversal.
        cycle[1..].reverse();
        edges.reverse();
    }
    PathQuery { alpha, beta, origin, vertices: cycle, edges, closed: true }
}

/// True iff the (alpha, beta)-maximal path starts at `u` with an alpha edge
/// and ends at `v` with an alpha edge.
pub fn exists_critical_path(
    c: &EdgeColoring,
    g: &Graph,
    alpha: Color,
    beta: Color,
    u: VertexId,
    v: VertexId,
) -> Result<bool, ColoringError> {
    check_edge_counts(c, g);
    if alpha == beta {
        return Err(ColoringError::EqualColors { color: alpha });
    }
    if u == v {
        return Ok(false);
    }
    // The maximal path starts at u only if u is an endpoint: it must miss beta.
    if edge_at(c, g, u, beta)?.is_some() || edge_at(c, g, u, alpha)?.is_none() {
        return Ok(false);
    }
    let walk = walk_from(c, g, u, alpha, beta)?;
    if walk.closed {
        return Ok(false);
    }
    // Last edge color alternates alpha, beta, alpha, ...: odd length ends alpha.
    let ends_with_alpha = walk.edges.len() % 2 == 1;
    Ok(ends_with_alpha && walk.vertices.last() == Some(&v))
}

/// True iff some dichromatic path starts at `u` with an alpha edge and ends at
/// `v` with a beta edge (the path need not be maximal).
pub fn exists_alternating_path(
    c: &EdgeColoring,
    g: &Graph,
    alpha: Color,
    beta: Color,
    u: VertexId,
    v: VertexId,
) -> Result<bool, ColoringError> {
    check_edge_counts(c, g);
    if alpha == beta {
        return Err(ColoringError::EqualColors { color: alpha });
    }
    if u == v {
        return Ok(false);
    }
    let walk = walk_from(c, g, u, alpha, beta)?;
    // Arrival i (0-based) is via alpha when even, beta when odd.
    for (i, &x) in walk.vertices.iter().enumerate() {
        if x == v {
            return Ok(i % 2 == 1);
        }
    }
    // A closed walk's final arrival is back at u, never v.
    Ok(false)
}

/// Candidate colors for an uncolored edge: the palette minus every color on an
/// adjacent edge.
pub fn candidate_colors(
    c: &EdgeColoring,
    g: &Graph,
    e: EdgeId,
) -> Result<ColorSet, ColoringError> {
    check_edge_counts(c, g);
    if c.get(e).is_some() {
        return Err(ColoringError::AlreadyColored { edge: e });
    }
    let (u, v) = g.endpoints(e);
    Ok(ColorSet::full(c.kappa())
        .difference(used_colors(c, g, u))
        .difference(used_colors(c, g, v)))
}

/// Valid colors for an uncolored edge: candidates whose assignment closes no
/// bichromatic cycle.
///
/// The caller guarantees the partial coloring is acyclic on colored edges (the
/// solver maintains this inductively); an improper coloring is detected and
/// reported during path walks.
pub fn valid_colors(c: &EdgeColoring, g: &Graph, e: EdgeId) -> Result<ColorSet, ColoringError> {
    let candidates = candidate_colors(c, g, e)?;
    let (u, v) = g.endpoints(e);
    let common = used_colors(c, g, u).intersection(used_colors(c, g, v));
    let mut valid = ColorSet::empty();
    'next: for alpha in candidates.iter() {
        // Assigning alpha to uv closes an (alpha, beta) cycle iff a maximal
        // (beta, alpha) path runs from u to v; beta must appear at both ends.
        for beta in common.iter() {
            if exists_critical_path(c, g, beta, alpha, u, v)? {
                continue 'next;
            }
        }
        valid.insert(alpha);
    }
    Ok(valid)
}

/// Properness violation, if any: a vertex with two incident edges of one color.
pub fn proper_violation(c: &EdgeColoring, g: &Graph) -> Option<(VertexId, Color)> {
    check_edge_counts(c, g);
    for v in 0..g.vertex_count() {
        let mut seen = ColorSet::empty();
        for &(_, e) in g.adjacency(v) {
            if let Some(col) = c.get(e) {
                if seen.contains(col) {
                    return Some((v, col));
                }
                seen.insert(col);
            }
        }
    }
    None
}

/// Verifier verdict. A verdict other than `Acyclic` carries its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyOutcome {
    Acyclic,
    Improper { vertex: VertexId, color: Color },
    BichromaticCycle { edges: Vec<EdgeId> },
}

impl VerifyOutcome {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, VerifyOutcome::Acyclic)
    }
}

/// Checks a *total* coloring: proper, and every two color classes induce a
/// forest. Errors on a partial coloring.
pub fn verify_acyclic(c: &EdgeColoring, g: &Graph) -> Result<VerifyOutcome, ColoringError> {
    check_edge_counts(c, g);
    if let Some(e) = c.first_uncolored() {
        return Err(ColoringError::PartialColoring { edge: e });
    }
    Ok(verify_colored_edges(c, g))
}

/// Same checks restricted to the colored edges; partial colorings allowed.
pub fn verify_colored_edges(c: &EdgeColoring, g: &Graph) -> VerifyOutcome {
    check_edge_counts(c, g);
    if let Some((vertex, color)) = proper_violation(c, g) {
        return VerifyOutcome::Improper { vertex, color };
    }
    let mut present = ColorSet::empty();
    for e in 0..g.edge_count() {
        if let Some(col) = c.get(e) {
            present.insert(col);
        }
    }
    let palette: Vec<Color> = present.iter().collect();
    for (i, &alpha) in palette.iter().enumerate() {
        for &beta in &palette[i + 1..] {
            if let Some(edges) = bichromatic_cycle(c, g, alpha, beta) {
                return VerifyOutcome::BichromaticCycle { edges };
            }
        }
    }
    VerifyOutcome::Acyclic
}

/// Finds a cycle in the two-color subgraph, if one exists. The caller has
/// already established properness, so each component is a path or a cycle and
/// a single walk per component suffices.
fn bichromatic_cycle(c: &EdgeColoring, g: &Graph, alpha: Color, beta: Color) -> Option<Vec<EdgeId>> {
    let proper = "properness was checked before scanning for cycles";
    let mut visited = vec![false; g.vertex_count()];
    for v in 0..g.vertex_count() {
        if visited[v] {
            continue;
        }
        let has_alpha = edge_at(c, g, v, alpha).expect(proper).is_some();
        let has_beta = edge_at(c, g, v, beta).expect(proper).is_some();
        if !has_alpha && !has_beta {
            visited[v] = true;
            continue;
        }
        // Walk one direction; if it closes, the component is a cycle through v.
        let first = if has_alpha { alpha } else { beta };
        let second = if first == alpha { beta } else { alpha };
        let walk = walk_from(c, g, v, first, second).expect(proper);
        visited[v] = true;
        for &x in &walk.vertices {
            visited[x] = true;
        }
        if walk.closed {
            return Some(walk.edges);
        }
        // Mark the other direction too so the component is not rescanned.
        let back = walk_from(c, g, v, second, first).expect(proper);
        for &x in &back.vertices {
            visited[x] = true;
        }
    }
    None
}

/// Exchanges the colors of two colored edges. The result may be improper or
/// cyclic; callers re-check with [`proper_violation`] / [`verify_colored_edges`].
pub fn swap_colors(
    c: &EdgeColoring,
    e1: EdgeId,
    e2: EdgeId,
) -> Result<EdgeColoring, ColoringError> {
    let c1 = c.get(e1).ok_or(ColoringError::UncoloredEdge { edge: e1 })?;
    let c2 = c.get(e2).ok_or(ColoringError::UncoloredEdge { edge: e2 })?;
    let mut out = c.clone();
    out.set(e1, c2);
    out.set(e2, c1);
    Ok(out)
}

// ============================================================================
// Coloring file format: header "k <kappa>", then "u v c" per edge in edge-id
// order, c = 0 for uncolored.
// ============================================================================

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringParseError {
    MissingHeader,
    BadHeader { line: usize },
    BadLine { line: usize },
    /// Line count does not match the graph's edge count.
    EdgeCount { expected: usize, got: usize },
    /// The line's endpoints do not match the edge with that id.
    EdgeMismatch { line: usize, u: VertexId, v: VertexId },
    ColorOutOfRange { line: usize, color: u32, kappa: u32 },
}

impl fmt::Display for ColoringParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringParseError::MissingHeader => write!(f, "missing `k <kappa>` header"),
            ColoringParseError::BadHeader { line } => write!(f, "line {line}: bad header"),
            ColoringParseError::BadLine { line } => {
                write!(f, "line {line}: expected `u v c`")
            }
            ColoringParseError::EdgeCount { expected, got } => {
                write!(f, "expected {expected} edge lines, got {got}")
            }
            ColoringParseError::EdgeMismatch { line, u, v } => {
                write!(f, "line {line}: edge {u}-{v} does not match the graph")
            }
            ColoringParseError::ColorOutOfRange { line, color, kappa } => {
                write!(f, "line {line}: color {color} outside 0..={kappa}")
            }
        }
    }
}

impl std::error::Error for ColoringParseError {}

/// Serializes a coloring against its graph, deterministically by edge id.
pub fn write_coloring(c: &EdgeColoring, g: &Graph) -> String {
    check_edge_counts(c, g);
    let mut out = format!("k {}\n", c.kappa());
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        out.push_str(&format!("{} {} {}\n", u, v, c.get(e).unwrap_or(0)));
    }
    out
}

/// Parses a coloring file and validates it against `g`.
pub fn parse_coloring(input: &str, g: &Graph) -> Result<EdgeColoring, ColoringParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(ColoringParseError::MissingHeader)?;
    let kappa: u32 = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["k", num] => num.parse().map_err(|_| ColoringParseError::BadHeader { line: hline })?,
        _ => return Err(ColoringParseError::BadHeader { line: hline }),
    };
    let mut coloring = EdgeColoring::new(g.edge_count(), kappa)
        .map_err(|_| ColoringParseError::BadHeader { line: hline })?;
    let mut count = 0usize;
    for (line_no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(ColoringParseError::BadLine { line: line_no });
        }
        let u: VertexId =
            toks[0].parse().map_err(|_| ColoringParseError::BadLine { line: line_no })?;
        let v: VertexId =
            toks[1].parse().map_err(|_| ColoringParseError::BadLine { line: line_no })?;
        let col: u32 =
            toks[2].parse().map_err(|_| ColoringParseError::BadLine { line: line_no })?;
        if count >= g.edge_count() {
            return Err(ColoringParseError::EdgeCount {
                expected: g.edge_count(),
                got: count + 1,
            });
        }
        let (a, b) = g.endpoints(count);
        if (u, v) != (a, b) && (u, v) != (b, a) {
            return Err(ColoringParseError::EdgeMismatch { line: line_no, u, v });
        }
        if col > kappa {
            return Err(ColoringParseError::ColorOutOfRange { line: line_no, color: col, kappa });
        }
        if col > 0 {
            coloring.set(count, col);
        }
        count += 1;
    }
    if count != g.edge_count() {
        return Err(ColoringParseError::EdgeCount { expected: g.edge_count(), got: count });
    }
    Ok(coloring)
}

// ============================================================================
// Tests
// ============================================================================
