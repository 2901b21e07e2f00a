//! Simple undirected graphs with stable vertex and edge identifiers, edge
//! colorings, and the cut/separation predicates everything else builds on.
//!
//! Vertices are `0..n` and edges are `0..m` in insertion order. Files use the
//! DIMACS convention of 1-based vertex labels; the conversion happens only in
//! [`parse_graph`] and [`serialize_graph`].

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type Color = usize;

/// A simple undirected graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(EdgeId, VertexId)>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and out-of-range
    /// endpoints. Edge `i` is `edges[i]`.
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (id, &(a, b)) in edges.iter().enumerate() {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::DuplicateEdge(a, b));
            }
            adjacency[a].push((id, b));
            adjacency[b].push((id, a));
        }
        Ok(Graph {
            vertex_count,
            edges,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: EdgeId) -> (VertexId, VertexId) {
        self.edges[edge]
    }

    /// `(edge, neighbor)` pairs at `v`, in edge-id order.
    pub fn incident(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    /// Minimum degree δ(G); 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Maximum degree Δ(G); 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.adjacency[u]
            .iter()
            .find(|&&(_, w)| w == v)
            .map(|&(e, _)| e)
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        self.adjacency.iter().all(|a| a.len() == degree)
    }

    /// True for the empty graph and for any graph with a single component.
    pub fn is_connected(&self) -> bool {
        self.vertex_count == 0 || components_unchecked(self, &[]).len() == 1
    }

    /// The edges with exactly one endpoint in `side`, i.e. δ(side), in
    /// edge-id order.
    pub fn boundary(&self, side: &[bool]) -> Vec<EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| side[a] != side[b])
            .map(|(e, _)| e)
            .collect()
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v >= self.vertex_count {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            });
        }
        Ok(())
    }

    pub(crate) fn check_pair(&self, s: VertexId, t: VertexId) -> Result<()> {
        self.check_vertex(s)?;
        self.check_vertex(t)?;
        if s == t {
            return Err(Error::SameVertex(s));
        }
        Ok(())
    }

    pub(crate) fn check_edges(&self, edges: &[EdgeId]) -> Result<()> {
        match edges.iter().find(|&&e| e >= self.edges.len()) {
            Some(&edge) => Err(Error::EdgeOutOfRange {
                edge,
                edge_count: self.edges.len(),
            }),
            None => Ok(()),
        }
    }

    pub(crate) fn require_connected(&self, min_vertices: usize) -> Result<()> {
        if self.vertex_count < min_vertices {
            return Err(Error::TooFewVertices(min_vertices));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }
}

/// A total assignment of colors to edges. Colors live in `0..palette`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<Color>,
    palette: usize,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>, palette: usize) -> Result<Self> {
        if let Some(&color) = colors.iter().find(|&&c| c >= palette) {
            return Err(Error::ColorOutOfPalette { color, palette });
        }
        Ok(EdgeColoring { colors, palette })
    }

    /// Palette is the smallest one that holds every color used.
    pub fn from_colors(colors: Vec<Color>) -> Self {
        let palette = colors.iter().max().map_or(0, |&c| c + 1);
        EdgeColoring { colors, palette }
    }

    pub fn color(&self, edge: EdgeId) -> Color {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn color_count(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    pub(crate) fn check_total_on(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.edge_count() {
            return Err(Error::ColoringLength {
                coloring: self.colors.len(),
                edges: g.edge_count(),
            });
        }
        Ok(())
    }
}

/// An s–t edge cut together with the vertex bipartition that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutCertificate {
    /// Sorted, duplicate-free.
    pub cut_edges: Vec<EdgeId>,
    /// Sorted.
    pub side_s: Vec<VertexId>,
    /// Sorted.
    pub side_t: Vec<VertexId>,
}

impl CutCertificate {
    /// The certificate whose cut is exactly δ(side), with `side` the s-side.
    pub fn from_side(g: &Graph, side: &[bool]) -> Self {
        let (side_s, side_t) = (0..g.vertex_count()).partition(|&v| side[v]);
        CutCertificate {
            cut_edges: g.boundary(side),
            side_s,
            side_t,
        }
    }

    /// Shrinks the certificate to δ(X) where X is the component of `s` once
    /// the current cut edges are removed. The result is a subset of the
    /// original cut and still separates `s` from everything outside X.
    pub fn minimized(&self, g: &Graph, s: VertexId) -> Self {
        let side = reachable_avoiding(g, s, &self.cut_edges);
        Self::from_side(g, &side)
    }

    pub fn s_side_mask(&self, g: &Graph) -> Vec<bool> {
        let mut mask = vec![false; g.vertex_count()];
        for &v in &self.side_s {
            mask[v] = true;
        }
        mask
    }

    /// True when the cut is exactly δ(side_s).
    pub fn is_minimal(&self, g: &Graph) -> bool {
        self.cut_edges == g.boundary(&self.s_side_mask(g))
    }

    /// Checks every certificate invariant for the pair `(s, t)`.
    pub fn validate(&self, g: &Graph, s: VertexId, t: VertexId) -> Result<()> {
        g.check_pair(s, t)?;
        g.check_edges(&self.cut_edges)?;
        let bad = |msg: &str| Err(Error::InvalidCertificate(msg.to_string()));
        if self.cut_edges.windows(2).any(|w| w[0] >= w[1]) {
            return bad("cut edges are not sorted and distinct");
        }
        let mut owner = vec![None; g.vertex_count()];
        for (side, label) in [(&self.side_s, true), (&self.side_t, false)] {
            for &v in side.iter() {
                g.check_vertex(v)?;
                if owner[v].replace(label).is_some() {
                    return bad("a vertex appears twice in the bipartition");
                }
            }
        }
        if owner.iter().any(Option::is_none) {
            return bad("the bipartition does not cover every vertex");
        }
        if owner[s] != Some(true) || owner[t] != Some(false) {
            return bad("s and t are not on their own sides");
        }
        let side: Vec<bool> = owner.into_iter().map(|o| o == Some(true)).collect();
        let cut: BTreeSet<EdgeId> = self.cut_edges.iter().copied().collect();
        if g.boundary(&side).iter().any(|e| !cut.contains(e)) {
            return bad("a crossing edge is missing from the cut");
        }
        if !separates(g, &self.cut_edges, s, t)? {
            return bad("removing the cut does not separate s and t");
        }
        Ok(())
    }
}

/// A graph file, possibly carrying a coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub coloring: Option<EdgeColoring>,
}

/// Connected components of `g` with the `removed` edges deleted, each sorted
/// and the list ordered by smallest member.
pub fn components(g: &Graph, removed: &[EdgeId]) -> Result<Vec<Vec<VertexId>>> {
    g.check_edges(removed)?;
    Ok(components_unchecked(g, removed))
}

fn components_unchecked(g: &Graph, removed: &[EdgeId]) -> Vec<Vec<VertexId>> {
    let mut gone = vec![false; g.edge_count()];
    for &e in removed {
        gone[e] = true;
    }
    let mut label = vec![usize::MAX; g.vertex_count()];
    let mut out: Vec<Vec<VertexId>> = Vec::new();
    for root in 0..g.vertex_count() {
        if label[root] != usize::MAX {
            continue;
        }
        let id = out.len();
        label[root] = id;
        let mut members = vec![root];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &(e, w) in g.incident(v) {
                if !gone[e] && label[w] == usize::MAX {
                    label[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Vertices reachable from `start` without using `removed` edges.
pub(crate) fn reachable_avoiding(g: &Graph, start: VertexId, removed: &[EdgeId]) -> Vec<bool> {
    let mut gone = vec![false; g.edge_count()];
    for &e in removed {
        gone[e] = true;
    }
    let mut seen = vec![false; g.vertex_count()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(e, w) in g.incident(v) {
            if !gone[e] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Whether deleting `cut` leaves `s` and `t` in different components.
pub fn separates(g: &Graph, cut: &[EdgeId], s: VertexId, t: VertexId) -> Result<bool> {
    g.check_pair(s, t)?;
    g.check_edges(cut)?;
    Ok(!reachable_avoiding(g, s, cut)[t])
}

/// Whether the colors on `cut` are pairwise distinct.
pub fn is_rainbow(coloring: &EdgeColoring, cut: &[EdgeId]) -> Result<bool> {
    let mut seen = HashSet::with_capacity(cut.len());
    let mut edges = HashSet::with_capacity(cut.len());
    for &e in cut {
        if e >= coloring.len() {
            return Err(Error::EdgeOutOfRange {
                edge: e,
                edge_count: coloring.len(),
            });
        }
        // a repeated edge id is the same edge, not a second one
        if edges.insert(e) && !seen.insert(coloring.color(e)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the line-oriented graph format:
///
/// ```text
/// c optional comments
/// p edge <n> <m>
/// e <u> <v> [<color>]
/// ```
///
/// Vertex labels are 1-based. Either every edge line carries a color or none
/// does.
pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut colors: Vec<Color> = Vec::new();
    let mut colored: Option<bool> = None;
    let mut seen = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        let rest: Vec<&str> = tokens.collect();
        match kind {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, "duplicate header"));
                }
                let [format, n, m] = rest[..] else {
                    return Err(parse_err(line_no, "header must be `p edge <n> <m>`"));
                };
                if format != "edge" {
                    return Err(parse_err(line_no, format!("unknown format `{format}`")));
                }
                let n = n
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad vertex count `{n}`")))?;
                let m = m
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad edge count `{m}`")))?;
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(parse_err(line_no, "edge line before header"));
                };
                let has_color = match rest.len() {
                    2 => false,
                    3 => true,
                    _ => {
                        return Err(parse_err(
                            line_no,
                            "edge line must be `e <u> <v> [<color>]`",
                        ))
                    }
                };
                if *colored.get_or_insert(has_color) != has_color {
                    return Err(parse_err(line_no, "mixed colored and uncolored edge lines"));
                }
                let endpoint = |tok: &str| -> Result<VertexId> {
                    let label: usize = tok
                        .parse()
                        .map_err(|_| parse_err(line_no, format!("bad vertex label `{tok}`")))?;
                    if label == 0 || label > n {
                        return Err(parse_err(
                            line_no,
                            format!("vertex {label} out of range 1..={n}"),
                        ));
                    }
                    Ok(label - 1)
                };
                let u = endpoint(rest[0])?;
                let v = endpoint(rest[1])?;
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at vertex {}", u + 1)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(parse_err(
                        line_no,
                        format!("duplicate edge {}-{}", u + 1, v + 1),
                    ));
                }
                if has_color {
                    let c = rest[2]
                        .parse()
                        .map_err(|_| parse_err(line_no, format!("bad color `{}`", rest[2])))?;
                    colors.push(c);
                }
                edges.push((u, v));
            }
            other => return Err(parse_err(line_no, format!("unknown line type `{other}`"))),
        }
    }

    let Some((n, m)) = header else {
        return Err(parse_err(0, "missing `p edge` header"));
    };
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    let graph = Graph::new(n, edges)?;
    let coloring = (colored == Some(true)).then(|| EdgeColoring::from_colors(colors));
    Ok(ParsedGraph { graph, coloring })
}

/// Writes `g` (and `coloring`, if any) in the format read by [`parse_graph`].
pub fn serialize_graph(g: &Graph, coloring: Option<&EdgeColoring>) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        match coloring {
            Some(c) => writeln!(out, "e {} {} {}", a + 1, b + 1, c.color(e)),
            None => writeln!(out, "e {} {}", a + 1, b + 1),
        }
        .expect("writing to a String cannot fail");
    }
    out
}
