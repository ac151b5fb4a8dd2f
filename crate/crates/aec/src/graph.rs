//! Immutable simple undirected graphs with stable vertex and edge indices.
//!
//! Vertices are dense 0-based ids; edges are 0-based ids in construction
//! order. Stable ids let colorings live in flat arrays indexed by edge id.
//! Graphs are immutable after construction; subgraph operations return a new
//! graph together with id remapping tables back to the parent.

use std::collections::HashSet;
use std::fmt;

pub type VertexId = usize;
pub type EdgeId = usize;

/// A finite simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

/// Construction errors: the type only ever represents simple graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: VertexId, n: usize },
    SelfLoop { vertex: VertexId },
    DuplicateEdge { u: VertexId, v: VertexId },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex id {vertex} out of range (n = {n})")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
        }
    }
}

impl std::error::Error for GraphError {}

/// Result of a subgraph operation: the new graph plus maps from its ids back
/// to the parent's ids.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `vertex_map[new_vertex] = parent_vertex`
    pub vertex_map: Vec<VertexId>,
    /// `edge_map[new_edge] = parent_edge`
    pub edge_map: Vec<EdgeId>,
}

/// Outcome of the 2-connectivity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoConnectivity {
    /// Fewer than 3 vertices: the notion does not apply.
    TooSmall,
    Disconnected,
    /// Connected but has a cut vertex (the witness).
    CutVertex(VertexId),
    TwoConnected,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Edge ids follow list
    /// order. Rejects self-loops, duplicate edges and out-of-range endpoints.
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e` in construction order.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`. Panics if `v` is not an endpoint.
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if v == a {
            b
        } else {
            assert_eq!(v, b, "vertex {v} is not an endpoint of edge {e}");
            a
        }
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Adjacency list of `v` as `(neighbor, edge id)` pairs.
    pub fn adjacency(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// Number of incident edges of `v`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree; `None` on the empty graph.
    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// Minimum degree; `None` on the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Edge id of `uv` if present.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Connectivity; graphs with at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Connected with no cut vertex. Requires n >= 3 to be meaningful.
    pub fn two_connectivity(&self) -> TwoConnectivity {
        if self.n < 3 {
            return TwoConnectivity::TooSmall;
        }
        if !self.is_connected() {
            return TwoConnectivity::Disconnected;
        }
        // Depth-first lowpoint computation for articulation points.
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut timer = 0usize;
        // Iterative DFS from vertex 0; (vertex, adjacency position) frames.
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        let mut root_children = 0usize;
        while let Some(&mut (v, ref mut pos)) = stack.last_mut() {
            if *pos < self.adj[v].len() {
                let (w, _) = self.adj[v][*pos];
                *pos += 1;
                if disc[w] == usize::MAX {
                    parent[w] = v;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == 0 {
                        root_children += 1;
                    }
                    stack.push((w, 0));
                } else if w != parent[v] {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != 0 && low[v] >= disc[p] {
                        return TwoConnectivity::CutVertex(p);
                    }
                }
            }
        }
        if root_children > 1 {
            return TwoConnectivity::CutVertex(0);
        }
        TwoConnectivity::TwoConnected
    }

    /// `Some(true)` iff 2-connected; `None` when n < 3.
    pub fn is_two_connected(&self) -> Option<bool> {
        match self.two_connectivity() {
            TwoConnectivity::TooSmall => None,
            TwoConnectivity::TwoConnected => Some(true),
            _ => Some(false),
        }
    }

    /// New graph with edge `e` removed; vertex ids are unchanged.
    pub fn delete_edge(&self, e: EdgeId) -> Subgraph {
        assert!(e < self.edges.len(), "edge id {e} out of range");
        let mut edges = Vec::with_capacity(self.edges.len() - 1);
        let mut edge_map = Vec::with_capacity(self.edges.len() - 1);
        for (id, &pair) in self.edges.iter().enumerate() {
            if id != e {
                edges.push(pair);
                edge_map.push(id);
            }
        }
        let graph = Graph::new(self.n, edges).expect("edge deletion keeps the graph simple");
        Subgraph { graph, vertex_map: (0..self.n).collect(), edge_map }
    }

    /// New graph with vertex `v` and its incident edges removed.
    pub fn delete_vertex(&self, v: VertexId) -> Subgraph {
        assert!(v < self.n, "vertex id {v} out of range");
        let keep: Vec<VertexId> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Subgraph induced by the given vertex set (duplicates ignored).
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Subgraph {
        let mut keep: Vec<VertexId> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            assert!(v < self.n, "vertex id {v} out of range");
        }
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            back[old] = new;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if back[u] != usize::MAX && back[v] != usize::MAX {
                edges.push((back[u], back[v]));
                edge_map.push(id);
            }
        }
        let graph = Graph::new(keep.len(), edges).expect("induced subgraph stays simple");
        Subgraph { graph, vertex_map: keep, edge_map }
    }

    // ---- small standard graphs used throughout the test corpora ----

    /// Path on `n` vertices (n-1 edges).
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, edges).unwrap()
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)).collect()).unwrap()
    }

    /// Complete bipartite graph with parts {0..a} and {a..a+b}.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::new(a + b, edges).unwrap()
    }
}

/// Cheap class flags recomputable from the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphClassLabel {
    pub connected: bool,
    /// Maximum degree at most 3.
    pub subcubic: bool,
    /// `Some(k)` iff the graph is k-regular (delta = Delta = k).
    pub regular: Option<usize>,
}

impl GraphClassLabel {
    pub fn compute(g: &Graph) -> Self {
        let max = g.max_degree();
        let min = g.min_degree();
        GraphClassLabel {
            connected: g.is_connected(),
            subcubic: max.unwrap_or(0) <= 3,
            regular: match (min, max) {
                (Some(lo), Some(hi)) if lo == hi => Some(hi),
                _ => None,
            },
        }
    }
}

// ============================================================================
// File formats
// ============================================================================

/// Supported graph serializations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// One edge per line, two decimal vertex ids separated by whitespace.
    /// `#` starts a comment; vertex count is implied by the largest id.
    EdgeList,
    /// Standard graph6 (short form, n <= 62).
    Graph6,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphParseError {
    /// Edge-list line does not consist of exactly two tokens.
    MalformedLine { line: usize },
    /// Edge-list token is not a vertex id.
    InvalidVertex { line: usize, token: String },
    /// Edge-list self-loop.
    SelfLoop { line: usize, vertex: VertexId },
    /// Edge repeated in the input.
    DuplicateEdge { line: usize, u: VertexId, v: VertexId },
    /// graph6: empty input.
    Graph6Empty,
    /// graph6: byte outside the printable range 63..=126.
    Graph6InvalidByte { offset: usize, byte: u8 },
    /// graph6: long-form size header (n > 62), outside supported range.
    Graph6TooLarge,
    /// graph6: wrong number of data bytes for the declared vertex count.
    Graph6Length { expected: usize, got: usize },
    /// graph6: nonzero padding bits.
    Graph6Padding,
}

impl fmt::Display for GraphParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphParseError::MalformedLine { line } => {
                write!(f, "line {line}: expected two vertex ids")
            }
            GraphParseError::InvalidVertex { line, token } => {
                write!(f, "line {line}: invalid vertex id {token:?}")
            }
            GraphParseError::SelfLoop { line, vertex } => {
                write!(f, "line {line}: self-loop at vertex {vertex}")
            }
            GraphParseError::DuplicateEdge { line, u, v } => {
                write!(f, "line {line}: duplicate edge {u}-{v}")
            }
            GraphParseError::Graph6Empty => write!(f, "graph6: empty input"),
            GraphParseError::Graph6InvalidByte { offset, byte } => {
                write!(f, "graph6: invalid byte {byte} at offset {offset}")
            }
            GraphParseError::Graph6TooLarge => {
                write!(f, "graph6: only the short form (n <= 62) is supported")
            }
            GraphParseError::Graph6Length { expected, got } => {
                write!(f, "graph6: expected {expected} data bytes, got {got}")
            }
            GraphParseError::Graph6Padding => write!(f, "graph6: nonzero padding bits"),
        }
    }
}

impl std::error::Error for GraphParseError {}

/// Parses a graph from text in the given format.
pub fn parse_graph(input: &str, format: GraphFormat) -> Result<Graph, GraphParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(input),
        GraphFormat::Graph6 => parse_graph6(input),
    }
}

/// Serializes a graph. Round-trips to the identical edge set in both formats.
pub fn write_graph(g: &Graph, format: GraphFormat) -> Result<String, GraphParseError> {
    match format {
        GraphFormat::EdgeList => Ok(write_edge_list(g)),
        GraphFormat::Graph6 => write_graph6(g),
    }
}

fn parse_edge_list(input: &str) -> Result<Graph, GraphParseError> {
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut seen = HashSet::new();
    let mut max_id: Option<usize> = None;
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(GraphParseError::MalformedLine { line: line_no });
        }
        let mut ids = [0usize; 2];
        for (slot, tok) in ids.iter_mut().zip(&tokens) {
            *slot = tok.parse().map_err(|_| GraphParseError::InvalidVertex {
                line: line_no,
                token: tok.to_string(),
            })?;
        }
        let (u, v) = (ids[0], ids[1]);
        if u == v {
            return Err(GraphParseError::SelfLoop { line: line_no, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(GraphParseError::DuplicateEdge {
                line: line_no,
                u: u.min(v),
                v: u.max(v),
            });
        }
        max_id = Some(max_id.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }
    let n = max_id.map_or(0, |m| m + 1);
    Ok(Graph::new(n, edges).expect("validated while parsing"))
}

fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_graph6(input: &str) -> Result<Graph, GraphParseError> {
    let mut text = input.trim();
    if let Some(rest) = text.strip_prefix(">>graph6<<") {
        text = rest;
    }
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(GraphParseError::Graph6Empty);
    }
    if bytes[0] == 126 {
        return Err(GraphParseError::Graph6TooLarge);
    }
    if !(63..=126).contains(&bytes[0]) {
        return Err(GraphParseError::Graph6InvalidByte { offset: 0, byte: bytes[0] });
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(GraphParseError::Graph6Length { expected: nbytes, got: bytes.len() - 1 });
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphParseError::Graph6InvalidByte { offset: i + 1, byte: b });
        }
        let val = b - 63;
        for k in (0..6).rev() {
            bits.push((val >> k) & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(GraphParseError::Graph6Padding);
    }
    // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("graph6 triangle bits encode a simple graph"))
}

fn write_graph6(g: &Graph) -> Result<String, GraphParseError> {
    let n = g.vertex_count();
    if n > 62 {
        return Err(GraphParseError::Graph6TooLarge);
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                val |= 1 << (5 - k);
            }
        }
        out.push((val + 63) as char);
    }
    Ok(out)
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_on_standard_graphs() {
        let k4 = Graph::complete(4);
        for v in 0..4 {
            assert_eq!(k4.degree(v), 3);
        }
        let c5 = Graph::cycle(5);
        for v in 0..5 {
            assert_eq!(c5.degree(v), 2);
        }
        let k33 = Graph::complete_bipartite(3, 3);
        for v in 0..6 {
            assert_eq!(k33.degree(v), 3);
        }
    }

    #[test]
    fn max_min_degree() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.max_degree(), Some(3));
        assert_eq!(k4.min_degree(), Some(3));
        let star = Graph::star(4);
        assert_eq!(star.max_degree(), Some(4));
        assert_eq!(star.min_degree(), Some(1));
        let p3 = Graph::path(3);
        assert_eq!(p3.max_degree(), Some(2));
        assert_eq!(p3.min_degree(), Some(1));
        assert_eq!(Graph::new(0, vec![]).unwrap().max_degree(), None);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            Graph::new(2, vec![(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 0 })
        );
        assert_eq!(
            Graph::new(2, vec![(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            Graph::new(2, vec![(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn handshake_on_standard_graphs() {
        for g in [
            Graph::complete(5),
            Graph::cycle(6),
            Graph::star(7),
            Graph::complete_bipartite(2, 4),
            Graph::path(9),
        ] {
            let total: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }

    #[test]
    fn delete_edge_counts() {
        let k4 = Graph::complete(4);
        let sub = k4.delete_edge(0);
        assert_eq!(sub.graph.vertex_count(), 4);
        assert_eq!(sub.graph.edge_count(), 5);
        assert_eq!(sub.edge_map, vec![1, 2, 3, 4, 5]);
        assert_eq!(sub.vertex_map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn delete_vertex_from_cycle_gives_path() {
        let c5 = Graph::cycle(5);
        let sub = c5.delete_vertex(0);
        assert_eq!(sub.graph.vertex_count(), 4);
        assert_eq!(sub.graph.edge_count(), 3);
        assert_eq!(sub.graph.max_degree(), Some(2));
        assert_eq!(sub.graph.min_degree(), Some(1));
        assert!(sub.graph.is_connected());
    }

    #[test]
    fn induced_subgraph_extracts_k4() {
        // K4 plus an isolated vertex; inducing on the K4 part recovers K4.
        let mut edges = Vec::new();
        for v in 0..4 {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        let g = Graph::new(5, edges).unwrap();
        let sub = g.induced_subgraph(&[0, 1, 2, 3]);
        assert_eq!(sub.graph.edge_count(), 6);
        assert_eq!(sub.graph.vertex_count(), 4);
    }

    #[test]
    fn two_connectivity_cases() {
        assert_eq!(Graph::cycle(4).two_connectivity(), TwoConnectivity::TwoConnected);
        assert_eq!(
            Graph::complete_bipartite(3, 3).two_connectivity(),
            TwoConnectivity::TwoConnected
        );
        // Two triangles sharing vertex 0 (bowtie): 0 is a cut vertex.
        let bowtie =
            Graph::new(5, vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(bowtie.two_connectivity(), TwoConnectivity::CutVertex(0));
        assert_eq!(bowtie.is_two_connected(), Some(false));
        assert_eq!(Graph::path(2).two_connectivity(), TwoConnectivity::TooSmall);
        assert_eq!(Graph::path(2).is_two_connected(), None);
        assert_eq!(Graph::path(4).is_two_connected(), Some(false));
        let disjoint = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(disjoint.two_connectivity(), TwoConnectivity::Disconnected);
    }

    #[test]
    fn edge_list_parses_p3() {
        let g = parse_graph("0 1\n1 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn edge_list_comments_and_blanks() {
        let g = parse_graph("# a triangle\n0 1\n\n1 2 # last edge\n2 0\n", GraphFormat::EdgeList)
            .unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert_eq!(
            parse_graph("0 0\n", GraphFormat::EdgeList),
            Err(GraphParseError::SelfLoop { line: 1, vertex: 0 })
        );
        assert_eq!(
            parse_graph("0 1\n1 0\n", GraphFormat::EdgeList),
            Err(GraphParseError::DuplicateEdge { line: 2, u: 0, v: 1 })
        );
        assert_eq!(
            parse_graph("0 1 2\n", GraphFormat::EdgeList),
            Err(GraphParseError::MalformedLine { line: 1 })
        );
        assert_eq!(
            parse_graph("0 x\n", GraphFormat::EdgeList),
            Err(GraphParseError::InvalidVertex { line: 1, token: "x".into() })
        );
    }

    #[test]
    fn graph6_decodes_k4() {
        // 'C' encodes n = 4; '~' encodes the all-ones triangle, so "C~" is K4.
        let g = parse_graph("C~", GraphFormat::Graph6).unwrap();
        let k4 = Graph::complete(4);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        for v in 0..4 {
            for u in 0..v {
                assert_eq!(g.has_edge(u, v), k4.has_edge(u, v));
            }
        }
    }

    #[test]
    fn graph6_round_trips_c4() {
        let c4 = Graph::cycle(4);
        let text = write_graph(&c4, GraphFormat::Graph6).unwrap();
        assert_eq!(text, "Cl");
        let back = parse_graph(&text, GraphFormat::Graph6).unwrap();
        for v in 0..4 {
            for u in 0..v {
                assert_eq!(back.has_edge(u, v), c4.has_edge(u, v));
            }
        }
    }

    #[test]
    fn graph6_accepts_header_prefix() {
        let g = parse_graph(">>graph6<<C~", GraphFormat::Graph6).unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert_eq!(parse_graph("", GraphFormat::Graph6), Err(GraphParseError::Graph6Empty));
        assert!(matches!(
            parse_graph("C", GraphFormat::Graph6),
            Err(GraphParseError::Graph6Length { .. })
        ));
        assert_eq!(parse_graph("~??", GraphFormat::Graph6), Err(GraphParseError::Graph6TooLarge));
        assert!(matches!(
            parse_graph("C\u{7f}", GraphFormat::Graph6),
            Err(GraphParseError::Graph6InvalidByte { .. })
        ));
    }

    #[test]
    fn edge_list_round_trip_preserves_ids() {
        let g = Graph::new(5, vec![(3, 1), (0, 4), (2, 1)]).unwrap();
        let text = write_graph(&g, GraphFormat::EdgeList).unwrap();
        let back = parse_graph(&text, GraphFormat::EdgeList).unwrap();
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn class_label_flags() {
        let k4 = Graph::complete(4);
        let label = GraphClassLabel::compute(&k4);
        assert!(label.connected);
        assert!(label.subcubic);
        assert_eq!(label.regular, Some(3));
        let star = Graph::star(4);
        let label = GraphClassLabel::compute(&star);
        assert!(!label.subcubic);
        assert_eq!(label.regular, None);
    }
}
