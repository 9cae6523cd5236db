//! Simple undirected graphs with one palette color per edge, and the ECG
//! plain-text exchange format.
//!
//! Vertices are `0..n`, colors are `1..=t` with `t <= 64` so that a set of
//! colors fits one machine word. Graphs are immutable after construction;
//! every mutating-looking operation returns a new graph.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Largest supported palette; a [`ColorSet`] is a single `u64` bitmask.
pub const MAX_PALETTE: u32 = 64;

/// Rejection reasons for graph construction and ECG parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(u32, u32),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("color {color} outside palette [{t}]")]
    ColorOutOfRange { color: u32, t: u32 },
    #[error("palette size {0} not in 1..={MAX_PALETTE}")]
    InvalidPalette(u32),
    #[error("palette mismatch in union: expected t = {expected}, part {part} has t = {got}")]
    PaletteMismatch {
        expected: u32,
        got: u32,
        part: usize,
    },
    #[error("disjoint union of zero parts has no palette")]
    EmptyUnion,
    #[error("edge {{{0}, {1}}} not present")]
    MissingEdge(u32, u32),
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
}

/// What went wrong on a given ECG line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `n t` header")]
    MissingHeader,
    #[error("malformed header (expected `n t`): {0:?}")]
    BadHeader(String),
    #[error("malformed edge line (expected `u v c`): {0:?}")]
    BadEdge(String),
    #[error("endpoints must satisfy u < v, got {0} {1}")]
    UnorderedEndpoints(u32, u32),
    #[error(transparent)]
    Graph(Box<GraphError>),
}

/// A colored edge; endpoints are stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: u32,
    pub v: u32,
    pub color: u32,
}

/// A set of colors from `[t]`, backed by one `u64`.
///
/// Bit `c - 1` represents color `c`. Intersection, union, and membership
/// are single word operations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// The full palette `{1..=t}`.
    pub fn full(t: u32) -> Self {
        debug_assert!((1..=MAX_PALETTE).contains(&t));
        if t == 64 {
            ColorSet(u64::MAX)
        } else {
            ColorSet((1u64 << t) - 1)
        }
    }

    pub fn from_colors<I: IntoIterator<Item = u32>>(colors: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in colors {
            s.insert(c);
        }
        s
    }

    pub fn insert(&mut self, color: u32) {
        debug_assert!((1..=MAX_PALETTE).contains(&color));
        self.0 |= 1u64 << (color - 1);
    }

    pub fn contains(self, color: u32) -> bool {
        (1..=MAX_PALETTE).contains(&color) && self.0 & (1u64 << (color - 1)) != 0
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    /// Complement relative to the palette `[t]`.
    pub fn complement(self, t: u32) -> ColorSet {
        ColorSet(!self.0 & Self::full(t).0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    /// Colors in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        (1..=MAX_PALETTE).filter(move |&c| self.contains(c))
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for c in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An ordered vertex sequence together with the traversed edge colors.
///
/// Returned by path searches as a proof object; `colors.len()` is always
/// `vertices.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub vertices: Vec<u32>,
    pub colors: Vec<u32>,
}

impl PathWitness {
    /// Number of vertices on the path.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// True when all traversed colors are pairwise distinct.
    pub fn is_rainbow(&self) -> bool {
        let set = ColorSet::from_colors(self.colors.iter().copied());
        set.len() as usize == self.colors.len()
    }

    pub fn color_set(&self) -> ColorSet {
        ColorSet::from_colors(self.colors.iter().copied())
    }

    /// Checks the witness against its host graph: vertices distinct,
    /// consecutive vertices adjacent, recorded colors match the host edges.
    pub fn validate(&self, g: &EdgeColoredGraph) -> Result<(), String> {
        if self.colors.len() + 1 != self.vertices.len() {
            return Err(format!(
                "length mismatch: {} vertices, {} colors",
                self.vertices.len(),
                self.colors.len()
            ));
        }
        let mut seen = HashSet::new();
        for &v in &self.vertices {
            if (v as usize) >= g.n() {
                return Err(format!("vertex {v} out of range"));
            }
            if !seen.insert(v) {
                return Err(format!("vertex {v} repeated"));
            }
        }
        for (i, pair) in self.vertices.windows(2).enumerate() {
            match g.color_of(pair[0], pair[1]) {
                None => return Err(format!("no edge {{{}, {}}}", pair[0], pair[1])),
                Some(c) if c != self.colors[i] => {
                    return Err(format!(
                        "edge {{{}, {}}} has color {c}, witness records {}",
                        pair[0], pair[1], self.colors[i]
                    ));
                }
                Some(_) => {}
            }
        }
        Ok(())
    }

    /// True when the witness traverses the edge `{u, v}` (either direction).
    pub fn uses_edge(&self, u: u32, v: u32) -> bool {
        self.vertices
            .windows(2)
            .any(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u))
    }
}

/// A simple undirected graph on vertices `0..n` with a color from `[t]`
/// on every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    n: usize,
    t: u32,
    /// Sorted by `(u, v)`, with `u < v` in every entry.
    edges: Vec<Edge>,
    /// Per-vertex `(neighbor, color)` pairs, sorted by neighbor id.
    adj: Vec<Vec<(u32, u32)>>,
}

impl EdgeColoredGraph {
    /// Builds a graph from an edge list. Endpoint order within a pair does
    /// not matter; every violation of the graph invariants is reported as a
    /// distinct error.
    pub fn from_edge_list<I>(n: usize, t: u32, list: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (u32, u32, u32)>,
    {
        if t == 0 || t > MAX_PALETTE {
            return Err(GraphError::InvalidPalette(t));
        }
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        for (a, b, color) in list {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v as usize >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if color == 0 || color > t {
                return Err(GraphError::ColorOutOfRange { color, t });
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            edges.push(Edge { u, v, color });
        }
        edges.sort();
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u as usize].push((e.v, e.color));
            adj[e.v as usize].push((e.u, e.color));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(EdgeColoredGraph { n, t, edges, adj })
    }

    /// Edgeless graph on `n` vertices with palette `[t]`.
    pub fn edgeless(n: usize, t: u32) -> Result<Self, GraphError> {
        Self::from_edge_list(n, t, std::iter::empty())
    }

    /// Disjoint union: vertex ids of part `i` are offset by the total size
    /// of parts `0..i`. All parts must share the same palette.
    pub fn disjoint_union(parts: &[EdgeColoredGraph]) -> Result<Self, GraphError> {
        let first = parts.first().ok_or(GraphError::EmptyUnion)?;
        let t = first.t;
        let mut edges = Vec::new();
        let mut offset = 0u32;
        for (i, part) in parts.iter().enumerate() {
            if part.t != t {
                return Err(GraphError::PaletteMismatch {
                    expected: t,
                    got: part.t,
                    part: i,
                });
            }
            edges.extend(
                part.edges
                    .iter()
                    .map(|e| (e.u + offset, e.v + offset, e.color)),
            );
            offset += part.n as u32;
        }
        Self::from_edge_list(offset as usize, t, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical `(u, v)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `(neighbor, color)` pairs of `v`, ascending by neighbor id.
    pub fn neighbors(&self, v: u32) -> &[(u32, u32)] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.color_of(u, v).is_some()
    }

    pub fn color_of(&self, u: u32, v: u32) -> Option<u32> {
        if u as usize >= self.n || v as usize >= self.n {
            return None;
        }
        self.adj[u as usize]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u as usize][i].1)
    }

    /// Every color that appears on at least one edge.
    pub fn colors_used(&self) -> ColorSet {
        ColorSet::from_colors(self.edges.iter().map(|e| e.color))
    }

    /// True iff at every vertex all incident edge colors are pairwise
    /// distinct.
    pub fn is_proper_coloring(&self) -> bool {
        self.adj.iter().all(|list| {
            let mut seen = 0u64;
            list.iter().all(|&(_, c)| {
                let bit = 1u64 << (c - 1);
                let fresh = seen & bit == 0;
                seen |= bit;
                fresh
            })
        })
    }

    /// Non-adjacent unordered pairs in canonical `(u, v)` order, including
    /// pairs that straddle components.
    pub fn non_edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for u in 0..self.n as u32 {
            for v in (u + 1)..self.n as u32 {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// A copy of the graph with one extra edge `{u, v}` colored `color`.
    pub fn with_edge(&self, u: u32, v: u32, color: u32) -> Result<Self, GraphError> {
        let mut edges: Vec<(u32, u32, u32)> =
            self.edges.iter().map(|e| (e.u, e.v, e.color)).collect();
        edges.push((u, v, color));
        Self::from_edge_list(self.n, self.t, edges)
    }

    /// A copy with a fresh pendant vertex attached to `v`; returns the new
    /// graph and the pendant's id (`n` of the original graph).
    pub fn with_pendant(&self, v: u32, color: u32) -> Result<(Self, u32), GraphError> {
        if v as usize >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let pendant = self.n as u32;
        let mut edges: Vec<(u32, u32, u32)> =
            self.edges.iter().map(|e| (e.u, e.v, e.color)).collect();
        edges.push((v, pendant, color));
        let g = Self::from_edge_list(self.n + 1, self.t, edges)?;
        Ok((g, pendant))
    }

    /// The same graph declared over a different palette. Fails if an edge
    /// color falls outside the new palette.
    pub fn with_palette(&self, t: u32) -> Result<Self, GraphError> {
        let edges: Vec<(u32, u32, u32)> = self.edges.iter().map(|e| (e.u, e.v, e.color)).collect();
        Self::from_edge_list(self.n, t, edges)
    }

    /// Relabels vertices: vertex `i` becomes `perm[i]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn apply_vertex_permutation(&self, perm: &[u32]) -> Result<Self, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: perm.len() as u32,
                n: self.n,
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| (perm[e.u as usize], perm[e.v as usize], e.color));
        Self::from_edge_list(self.n, self.t, edges.collect::<Vec<_>>())
    }

    /// Relabels colors: color `c` becomes `perm[c - 1]`. `perm` must be a
    /// bijection on `[t]` written as a slice of length `t`.
    pub fn apply_color_permutation(&self, perm: &[u32]) -> Result<Self, GraphError> {
        if perm.len() != self.t as usize {
            return Err(GraphError::InvalidPalette(perm.len() as u32));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, perm[e.color as usize - 1]))
            .collect::<Vec<_>>();
        Self::from_edge_list(self.n, self.t, edges)
    }
}

/// Parses the ECG text format:
///
/// ```text
/// n t
/// u v c
/// ...
/// ```
///
/// with `0 <= u < v < n` and `1 <= c <= t`. Lines starting with `#` are
/// comments; blank lines are ignored. Errors carry 1-based line numbers.
pub fn parse_ecg(text: &str) -> Result<EdgeColoredGraph, GraphError> {
    let mut header: Option<(usize, u32)> = None;
    let mut edges: Vec<(u32, u32, u32)> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if header.is_none() {
            if fields.len() != 2 {
                return Err(GraphError::Parse {
                    line,
                    kind: ParseErrorKind::BadHeader(raw.to_string()),
                });
            }
            let n = fields[0].parse::<usize>().map_err(|_| GraphError::Parse {
                line,
                kind: ParseErrorKind::BadHeader(raw.to_string()),
            })?;
            let t = fields[1].parse::<u32>().map_err(|_| GraphError::Parse {
                line,
                kind: ParseErrorKind::BadHeader(raw.to_string()),
            })?;
            header = Some((n, t));
            continue;
        }
        if fields.len() != 3 {
            return Err(GraphError::Parse {
                line,
                kind: ParseErrorKind::BadEdge(raw.to_string()),
            });
        }
        let mut nums = [0u32; 3];
        for (slot, field) in nums.iter_mut().zip(&fields) {
            *slot = field.parse::<u32>().map_err(|_| GraphError::Parse {
                line,
                kind: ParseErrorKind::BadEdge(raw.to_string()),
            })?;
        }
        let (u, v, c) = (nums[0], nums[1], nums[2]);
        if u >= v {
            return Err(GraphError::Parse {
                line,
                kind: ParseErrorKind::UnorderedEndpoints(u, v),
            });
        }
        // Re-check invariants per line so the error carries a location.
        let (n, t) = header.unwrap();
        if v as usize >= n {
            return Err(GraphError::Parse {
                line,
                kind: ParseErrorKind::Graph(Box::new(GraphError::VertexOutOfRange {
                    vertex: v,
                    n,
                })),
            });
        }
        if c == 0 || c > t {
            return Err(GraphError::Parse {
                line,
                kind: ParseErrorKind::Graph(Box::new(GraphError::ColorOutOfRange { color: c, t })),
            });
        }
        if edges.iter().any(|&(a, b, _)| (a, b) == (u, v)) {
            return Err(GraphError::Parse {
                line,
                kind: ParseErrorKind::Graph(Box::new(GraphError::DuplicateEdge(u, v))),
            });
        }
        edges.push((u, v, c));
    }
    let (n, t) = header.ok_or(GraphError::Parse {
        line: last_line.max(1),
        kind: ParseErrorKind::MissingHeader,
    })?;
    EdgeColoredGraph::from_edge_list(n, t, edges)
}

/// Canonical ECG text: header, then edges sorted by `(u, v)`, LF line
/// endings, trailing newline. `parse_ecg(write_ecg(g)) == g`.
pub fn write_ecg(g: &EdgeColoredGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.n(), g.t()));
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.color));
    }
    out
}
