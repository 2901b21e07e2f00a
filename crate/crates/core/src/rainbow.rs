//! Rainbow s–t cuts, rainbow disconnection colorings and the rainbow
//! disconnection number rd(G).
//!
//! Two cut searches are provided. [`find_rainbow_cut_fixed_k`] enumerates
//! edge sets holding at most one edge per color class, which is polynomial
//! for a bounded palette. [`find_rainbow_cut_exact`] branches over vertex
//! bipartitions and is exponential in general, as it must be: with an
//! unbounded palette the question is NP-complete.
//!
//! Both rely on one closure fact: if S is a rainbow s–t cut and X is the
//! component of s in G − S, then δ(X) ⊆ S, so δ(X) is a rainbow s–t cut as
//! well. Every certificate returned here is of that minimal form.

use std::collections::BTreeMap;

use crate::coloring::{self, DEFAULT_BUDGET};
use crate::connectivity::{self, require_three_edge_connected};
use crate::error::{Error, Result};
use crate::graph::{
    components, is_rainbow, reachable_avoiding, Color, CutCertificate, EdgeColoring, EdgeId, Graph,
    VertexId,
};

/// Feasible sides for a vertex, each with the cut colors that side adds.
type SideOptions = Vec<(bool, Vec<Color>)>;

/// One certified rainbow cut per vertex pair.
type PairCuts = BTreeMap<(VertexId, VertexId), CutCertificate>;

/// Knobs shared by the rainbow searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RainbowConfig {
    /// Colorings using at most this many colors are checked with the
    /// fixed-k enumeration, larger ones with the bipartition search.
    pub fixed_k_threshold: usize,
    /// Node budget for every exponential search.
    pub budget: u64,
}

impl Default for RainbowConfig {
    fn default() -> Self {
        RainbowConfig {
            fixed_k_threshold: 6,
            budget: DEFAULT_BUDGET,
        }
    }
}

fn check_cut_inputs(g: &Graph, c: &EdgeColoring, s: VertexId, t: VertexId) -> Result<()> {
    g.check_pair(s, t)?;
    c.check_total_on(g)?;
    g.require_connected(2)
}

fn budget_tick(nodes: &mut u64, budget: u64) -> Result<()> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    Ok(())
}

/// A rainbow s–t cut of at most `k` edges, if one exists.
///
/// Candidate cuts take at most one edge from each color class, so every
/// candidate is rainbow by construction; each is tested for separation. When
/// `c` uses at most `k` colors this covers every rainbow cut.
pub fn find_rainbow_cut_fixed_k(
    g: &Graph,
    c: &EdgeColoring,
    s: VertexId,
    t: VertexId,
    k: usize,
) -> Result<Option<CutCertificate>> {
    check_cut_inputs(g, c, s, t)?;
    let mut classes: BTreeMap<Color, Vec<EdgeId>> = BTreeMap::new();
    for e in 0..g.edge_count() {
        classes.entry(c.color(e)).or_default().push(e);
    }
    let classes: Vec<Vec<EdgeId>> = classes.into_values().collect();

    fn pick(
        g: &Graph,
        classes: &[Vec<EdgeId>],
        chosen: &mut Vec<EdgeId>,
        k: usize,
        s: VertexId,
        t: VertexId,
    ) -> Option<Vec<bool>> {
        let side = reachable_avoiding(g, s, chosen);
        if !side[t] {
            return Some(side);
        }
        let (class, rest) = classes.split_first()?;
        if chosen.len() < k {
            for &e in class {
                chosen.push(e);
                let found = pick(g, rest, chosen, k, s, t);
                chosen.pop();
                if found.is_some() {
                    return found;
                }
            }
        }
        // skip this color entirely
        pick(g, rest, chosen, k, s, t)
    }

    let found = pick(g, &classes, &mut Vec::with_capacity(k), k, s, t);
    Ok(found.map(|side| CutCertificate::from_side(g, &side)))
}

/// Branch-and-bound over vertex bipartitions for the exact rainbow cut
/// problem. `side[v]` is `Some(true)` on the s-side.
struct BipartitionSearch<'a> {
    graph: &'a Graph,
    coloring: &'a EdgeColoring,
    side: Vec<Option<bool>>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl BipartitionSearch<'_> {
    /// Colors of the edges that would cross if `v` were put on `on_s`, or
    /// `None` if two of them, or one of them and an already crossing edge,
    /// share a color.
    fn crossing_colors(&self, v: VertexId, on_s: bool) -> Option<Vec<Color>> {
        let mut out: Vec<Color> = Vec::new();
        for &(e, w) in self.graph.incident(v) {
            if self.side[w] == Some(!on_s) {
                let col = self.coloring.color(e);
                if self.used[col] || out.contains(&col) {
                    return None;
                }
                out.push(col);
            }
        }
        Some(out)
    }

    /// The unassigned vertex with the fewest feasible sides, ties broken by
    /// more assigned neighbors and then by smaller id. Returns `None` once
    /// every vertex is assigned.
    fn next_vertex(&self) -> Option<(VertexId, SideOptions)> {
        let mut best: Option<(usize, usize, VertexId, SideOptions)> = None;
        for v in 0..self.graph.vertex_count() {
            if self.side[v].is_some() {
                continue;
            }
            let options: SideOptions = [true, false]
                .into_iter()
                .filter_map(|on_s| self.crossing_colors(v, on_s).map(|cols| (on_s, cols)))
                .collect();
            let assigned = self
                .graph
                .incident(v)
                .iter()
                .filter(|&&(_, w)| self.side[w].is_some())
                .count();
            let better = match &best {
                None => true,
                Some((n_opts, n_assigned, _, _)) => {
                    options.len() < *n_opts || (options.len() == *n_opts && assigned > *n_assigned)
                }
            };
            if better {
                let dead = options.is_empty();
                best = Some((options.len(), assigned, v, options));
                if dead {
                    break;
                }
            }
        }
        best.map(|(_, _, v, options)| (v, options))
    }

    fn place(&mut self, v: VertexId, on_s: bool, cols: &[Color]) {
        self.side[v] = Some(on_s);
        for &c in cols {
            self.used[c] = true;
        }
    }

    fn unplace(&mut self, v: VertexId, cols: &[Color]) {
        self.side[v] = None;
        for &c in cols {
            self.used[c] = false;
        }
    }

    fn run(&mut self) -> Result<bool> {
        budget_tick(&mut self.nodes, self.budget)?;
        let Some((v, options)) = self.next_vertex() else {
            return Ok(true);
        };
        for (on_s, cols) in options {
            self.place(v, on_s, &cols);
            if self.run()? {
                return Ok(true);
            }
            self.unplace(v, &cols);
        }
        Ok(false)
    }
}

/// Exact rainbow s–t cut search with the default budget.
pub fn find_rainbow_cut_exact(
    g: &Graph,
    c: &EdgeColoring,
    s: VertexId,
    t: VertexId,
) -> Result<Option<CutCertificate>> {
    find_rainbow_cut_exact_with_budget(g, c, s, t, DEFAULT_BUDGET)
}

/// A rainbow s–t cut for an arbitrary palette, found by growing the
/// bipartition one vertex at a time and pruning as soon as two crossing
/// edges share a color.
pub fn find_rainbow_cut_exact_with_budget(
    g: &Graph,
    c: &EdgeColoring,
    s: VertexId,
    t: VertexId,
    budget: u64,
) -> Result<Option<CutCertificate>> {
    check_cut_inputs(g, c, s, t)?;
    let mut search = BipartitionSearch {
        graph: g,
        coloring: c,
        side: vec![None; g.vertex_count()],
        used: vec![false; c.palette()],
        nodes: 0,
        budget,
    };
    search.place(s, true, &[]);
    let Some(cols) = search.crossing_colors(t, false) else {
        return Ok(None);
    };
    search.place(t, false, &cols);
    if !search.run()? {
        return Ok(None);
    }
    let side: Vec<bool> = search.side.iter().map(|&x| x == Some(true)).collect();
    // the bipartition need not have a connected s-side; shrink to it
    let cert = CutCertificate::from_side(g, &side).minimized(g, s);
    debug_assert!(is_rainbow(c, &cert.cut_edges)?);
    Ok(Some(cert))
}

/// Outcome of a rainbow disconnection check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Every pair has a rainbow cut; keyed by `(s, t)` with `s < t`.
    RainbowDisconnected(BTreeMap<(VertexId, VertexId), CutCertificate>),
    /// The lexicographically first pair without a rainbow cut.
    NoRainbowCut { s: VertexId, t: VertexId },
}

impl Verdict {
    pub fn is_rainbow_disconnected(&self) -> bool {
        matches!(self, Verdict::RainbowDisconnected(_))
    }
}

/// Checks whether `c` is a rainbow disconnection coloring of `g`.
pub fn is_rainbow_disconnected(g: &Graph, c: &EdgeColoring) -> Result<Verdict> {
    is_rainbow_disconnected_with(g, c, &RainbowConfig::default())
}

pub fn is_rainbow_disconnected_with(
    g: &Graph,
    c: &EdgeColoring,
    config: &RainbowConfig,
) -> Result<Verdict> {
    c.check_total_on(g)?;
    g.require_connected(2)?;
    let palette = c.color_count();
    let mut certificates = BTreeMap::new();
    for s in 0..g.vertex_count() {
        for t in (s + 1)..g.vertex_count() {
            let cut = if palette <= config.fixed_k_threshold {
                find_rainbow_cut_fixed_k(g, c, s, t, palette)?
            } else {
                find_rainbow_cut_exact_with_budget(g, c, s, t, config.budget)?
            };
            match cut {
                Some(cert) => {
                    certificates.insert((s, t), cert);
                }
                None => return Ok(Verdict::NoRainbowCut { s, t }),
            }
        }
    }
    Ok(Verdict::RainbowDisconnected(certificates))
}

/// rd(G) with a witness coloring and one rainbow cut per vertex pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RdResult {
    pub rd_value: usize,
    pub witness: EdgeColoring,
    pub per_pair_cuts: BTreeMap<(VertexId, VertexId), CutCertificate>,
}

/// Largest instance [`rd_exact`] accepts; bonds are enumerated over vertex
/// subsets.
pub const RD_MAX_VERTICES: usize = 20;

/// A bond: a vertex set X ∋ 0 such that both X and its complement induce
/// connected subgraphs. Every minimal edge cut is δ(X) for a bond X.
struct Bond {
    members: u64,
    edges: Vec<EdgeId>,
    pairs: Vec<usize>,
}

fn induced_connected(adj: &[u64], set: u64) -> bool {
    if set == 0 {
        return false;
    }
    let start = set & set.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & set & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == set
}

fn pair_index(n: usize, a: VertexId, b: VertexId) -> usize {
    let (s, t) = (a.min(b), a.max(b));
    s * n + t
}

fn enumerate_bonds(g: &Graph) -> Vec<Bond> {
    let n = g.vertex_count();
    let all = (1u64 << n) - 1;
    let mut adj = vec![0u64; n];
    for &(a, b) in g.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut bonds = Vec::new();
    for rest in 0..(1u64 << (n - 1)) {
        let members = (rest << 1) | 1;
        if members == all || !induced_connected(&adj, members) {
            continue;
        }
        if !induced_connected(&adj, all & !members) {
            continue;
        }
        let edges = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| ((members >> a) & 1) != ((members >> b) & 1))
            .map(|(e, _)| e)
            .collect();
        let mut pairs = Vec::new();
        for a in (0..n).filter(|&v| (members >> v) & 1 == 1) {
            for b in (0..n).filter(|&v| (members >> v) & 1 == 0) {
                pairs.push(pair_index(n, a, b));
            }
        }
        bonds.push(Bond {
            members,
            edges,
            pairs,
        });
    }
    bonds
}

enum Change {
    Seen(usize, Color),
    Dead(usize),
}

/// Search over k-colorings of the edges in which every vertex pair keeps at
/// least one bond whose colored edges are still pairwise distinct.
struct ColoringSearch<'a> {
    bonds: &'a [Bond],
    bonds_of_edge: Vec<Vec<usize>>,
    k: usize,
    colors: Vec<Color>,
    seen: Vec<u64>,
    dead: Vec<bool>,
    alive_per_pair: Vec<u32>,
    log: Vec<Change>,
    nodes: u64,
    budget: u64,
}

impl ColoringSearch<'_> {
    /// Colors edge `e` with `c`, logging changes. Returns false if some pair
    /// lost its last candidate bond.
    fn assign(&mut self, e: EdgeId, c: Color) -> bool {
        self.colors[e] = c;
        let mut ok = true;
        for i in 0..self.bonds_of_edge[e].len() {
            let b = self.bonds_of_edge[e][i];
            if self.dead[b] {
                continue;
            }
            if self.seen[b] & (1 << c) != 0 {
                self.dead[b] = true;
                self.log.push(Change::Dead(b));
                for &p in &self.bonds[b].pairs {
                    self.alive_per_pair[p] -= 1;
                    if self.alive_per_pair[p] == 0 {
                        ok = false;
                    }
                }
            } else {
                self.seen[b] |= 1 << c;
                self.log.push(Change::Seen(b, c));
            }
        }
        ok
    }

    fn rollback(&mut self, mark: usize) {
        while self.log.len() > mark {
            match self.log.pop().expect("log is longer than mark") {
                Change::Seen(b, c) => self.seen[b] &= !(1 << c),
                Change::Dead(b) => {
                    self.dead[b] = false;
                    for &p in &self.bonds[b].pairs {
                        self.alive_per_pair[p] += 1;
                    }
                }
            }
        }
    }

    fn dfs(&mut self, e: EdgeId, opened: usize) -> Result<bool> {
        if e == self.colors.len() {
            return Ok(true);
        }
        budget_tick(&mut self.nodes, self.budget)?;
        // edge e may take any color already opened or the next fresh one
        for c in 0..(opened + 1).min(self.k) {
            let mark = self.log.len();
            if self.assign(e, c) && self.dfs(e + 1, opened.max(c + 1))? {
                return Ok(true);
            }
            self.rollback(mark);
        }
        Ok(false)
    }
}

/// Searches for a rainbow disconnection coloring using at most `k` colors.
/// On success returns the coloring and, per pair, the first surviving bond.
fn rd_coloring_search(
    g: &Graph,
    bonds: &[Bond],
    k: usize,
    budget: u64,
) -> Result<Option<(EdgeColoring, PairCuts)>> {
    let n = g.vertex_count();
    let mut bonds_of_edge = vec![Vec::new(); g.edge_count()];
    let mut alive_per_pair = vec![0u32; n * n];
    for (b, bond) in bonds.iter().enumerate() {
        for &e in &bond.edges {
            bonds_of_edge[e].push(b);
        }
        for &p in &bond.pairs {
            alive_per_pair[p] += 1;
        }
    }
    let mut search = ColoringSearch {
        bonds,
        bonds_of_edge,
        k,
        colors: vec![0; g.edge_count()],
        seen: vec![0; bonds.len()],
        dead: vec![false; bonds.len()],
        alive_per_pair,
        log: Vec::new(),
        nodes: 0,
        budget,
    };
    if !search.dfs(0, 0)? {
        return Ok(None);
    }
    let mut cuts = BTreeMap::new();
    for s in 0..n {
        for t in (s + 1)..n {
            let p = pair_index(n, s, t);
            let b = (0..bonds.len())
                .find(|&b| !search.dead[b] && bonds[b].pairs.contains(&p))
                .expect("every pair keeps a live bond in a successful search");
            let on_s = (bonds[b].members >> s) & 1 == 1;
            let side: Vec<bool> = (0..n)
                .map(|v| ((bonds[b].members >> v) & 1 == 1) == on_s)
                .collect();
            cuts.insert((s, t), CutCertificate::from_side(g, &side));
        }
    }
    Ok(Some((EdgeColoring::new(search.colors, k)?, cuts)))
}

/// Exact rd(G) with the default budget.
pub fn rd_exact(g: &Graph) -> Result<RdResult> {
    rd_exact_with_budget(g, DEFAULT_BUDGET)
}

/// Exact rd(G): tries k = λ⁺(G), λ⁺(G) + 1, … up to Δ(G), and otherwise
/// takes the Δ + 1 proper coloring, which is always a rainbow disconnection
/// coloring.
pub fn rd_exact_with_budget(g: &Graph, budget: u64) -> Result<RdResult> {
    g.require_connected(2)?;
    if g.vertex_count() > RD_MAX_VERTICES || g.edge_count() > 64 {
        return Err(Error::TooLarge(format!(
            "rd_exact handles at most {RD_MAX_VERTICES} vertices and 64 edges"
        )));
    }
    let lower = connectivity::upper_edge_connectivity(g)?;
    let delta = g.max_degree();
    let bonds = enumerate_bonds(g);
    for k in lower..=delta {
        if let Some((witness, per_pair_cuts)) = rd_coloring_search(g, &bonds, k, budget)? {
            return Ok(RdResult {
                rd_value: k,
                witness,
                per_pair_cuts,
            });
        }
    }
    let witness = coloring::proper_coloring_delta_plus_one(g)?;
    let per_pair_cuts = match is_rainbow_disconnected(g, &witness)? {
        Verdict::RainbowDisconnected(cuts) => cuts,
        Verdict::NoRainbowCut { s, t } => unreachable!(
            "a proper coloring always has the star of an endpoint as a rainbow cut ({s}, {t})"
        ),
    };
    Ok(RdResult {
        rd_value: delta + 1,
        witness,
        per_pair_cuts,
    })
}

/// Decision for a 3-edge-connected cubic graph, where rd(G) ∈ {3, 4}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicDecision {
    pub rd: usize,
    /// A proper edge coloring with `rd` colors; proper colorings are rainbow
    /// disconnection colorings.
    pub witness: EdgeColoring,
}

fn require_cubic(g: &Graph) -> Result<()> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) != 3) {
        return Err(Error::NotCubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if g.vertex_count() == 0 {
        return Err(Error::TooFewVertices(4));
    }
    Ok(())
}

/// For a 3-edge-connected cubic graph, rd(G) = 3 exactly when χ′(G) = 3,
/// and rd(G) = 4 otherwise: rd ≥ λ = 3 and rd ≤ χ′ ≤ 4.
pub fn decide_rd_cubic(g: &Graph) -> Result<CubicDecision> {
    decide_rd_cubic_with_budget(g, DEFAULT_BUDGET)
}

pub fn decide_rd_cubic_with_budget(g: &Graph, budget: u64) -> Result<CubicDecision> {
    require_cubic(g)?;
    g.require_connected(2)?;
    require_three_edge_connected(g)?;
    let chi = coloring::chromatic_index_exact_with_budget(g, budget)?;
    Ok(CubicDecision {
        rd: chi.chi_prime,
        witness: chi.witness,
    })
}

/// One side of a split: a component plus the new vertex standing in for
/// the other side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPart {
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub new_vertex: VertexId,
    /// Original vertex for each vertex of the part; `None` for the new one.
    pub vertex_origin: Vec<Option<VertexId>>,
    /// Original edge for each edge of the part. The three edges at the new
    /// vertex map to the cut edges they replace.
    pub edge_origin: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPair {
    pub part_1: SplitPart,
    pub part_2: SplitPart,
}

fn build_part(g: &Graph, c: &EdgeColoring, members: &[VertexId], cut: &[EdgeId; 3]) -> SplitPart {
    let mut local = vec![None; g.vertex_count()];
    for (i, &v) in members.iter().enumerate() {
        local[v] = Some(i);
    }
    let x = members.len();
    let mut edges = Vec::new();
    let mut colors = Vec::new();
    let mut edge_origin = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if let (Some(la), Some(lb)) = (local[a], local[b]) {
            edges.push((la, lb));
            colors.push(c.color(e));
            edge_origin.push(e);
        }
    }
    for &e in cut {
        let (a, b) = g.endpoints(e);
        let inside = local[a]
            .or(local[b])
            .expect("each cut edge has one end in the part");
        edges.push((inside, x));
        colors.push(c.color(e));
        edge_origin.push(e);
    }
    let mut vertex_origin: Vec<Option<VertexId>> = members.iter().map(|&v| Some(v)).collect();
    vertex_origin.push(None);
    SplitPart {
        graph: Graph::new(x + 1, edges).expect("split parts are simple"),
        coloring: EdgeColoring::new(colors, c.palette()).expect("colors come from c"),
        new_vertex: x,
        vertex_origin,
        edge_origin,
    }
}

/// Splits `g` along a rainbow 3-edge cut with pairwise non-adjacent edges:
/// each side gets a new vertex joined to its three cut endpoints, and each
/// new edge copies the color of the cut edge it replaces.
pub fn split_along_rainbow_cut(g: &Graph, c: &EdgeColoring, cut: [EdgeId; 3]) -> Result<SplitPair> {
    c.check_total_on(g)?;
    g.check_edges(&cut)?;
    if cut[0] == cut[1] || cut[0] == cut[2] || cut[1] == cut[2] {
        return Err(Error::InvalidCut("cut edges must be distinct".into()));
    }
    if !is_rainbow(c, &cut)? {
        return Err(Error::InvalidCut("cut is not rainbow".into()));
    }
    for i in 0..3 {
        for j in (i + 1)..3 {
            let (a, b) = g.endpoints(cut[i]);
            let (p, q) = g.endpoints(cut[j]);
            if a == p || a == q || b == p || b == q {
                return Err(Error::InvalidCut("cut edges share a vertex".into()));
            }
        }
    }
    let parts = components(g, &cut)?;
    if parts.len() != 2 {
        return Err(Error::InvalidCut(format!(
            "removing the cut leaves {} components, expected 2",
            parts.len()
        )));
    }
    let mut in_first = vec![false; g.vertex_count()];
    for &v in &parts[0] {
        in_first[v] = true;
    }
    if cut.iter().any(|&e| {
        let (a, b) = g.endpoints(e);
        in_first[a] == in_first[b]
    }) {
        return Err(Error::InvalidCut(
            "a cut edge does not join the two components".into(),
        ));
    }
    Ok(SplitPair {
        part_1: build_part(g, c, &parts[0], &cut),
        part_2: build_part(g, c, &parts[1], &cut),
    })
}

/// Lexicographically smallest rainbow 3-cut of pairwise non-adjacent edges
/// whose removal leaves exactly two components, both with at least two
/// vertices.
fn splittable_cut(g: &Graph, c: &EdgeColoring) -> Option<[EdgeId; 3]> {
    let m = g.edge_count();
    let disjoint = |e: EdgeId, f: EdgeId| {
        let (a, b) = g.endpoints(e);
        let (p, q) = g.endpoints(f);
        a != p && a != q && b != p && b != q
    };
    for e1 in 0..m {
        for e2 in (e1 + 1)..m {
            if c.color(e1) == c.color(e2) || !disjoint(e1, e2) {
                continue;
            }
            for e3 in (e2 + 1)..m {
                if c.color(e3) == c.color(e1)
                    || c.color(e3) == c.color(e2)
                    || !disjoint(e1, e3)
                    || !disjoint(e2, e3)
                {
                    continue;
                }
                let cut = [e1, e2, e3];
                let parts = components(g, &cut).expect("edge ids in range");
                if parts.len() != 2 || parts.iter().any(|p| p.len() < 2) {
                    continue;
                }
                if split_along_rainbow_cut(g, c, cut).is_ok() {
                    return Some(cut);
                }
            }
        }
    }
    None
}

/// Result of decomposing a 3-color rainbow disconnection coloring of a
/// 3-edge-connected cubic graph along its rainbow 3-cuts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rd3Certification {
    /// True when every terminal graph is properly colored; by reassembly
    /// this means the input coloring is proper.
    pub proper: bool,
    pub splits: usize,
    /// Terminal graphs of the decomposition with their colorings.
    pub terminals: Vec<(Graph, EdgeColoring)>,
}

/// Checks that a 3-color rainbow disconnection coloring of a
/// 3-edge-connected cubic graph is proper, by splitting along rainbow 3-cuts
/// until none separates two nontrivial sides and checking the pieces.
pub fn certify_rd3_coloring_proper(g: &Graph, c: &EdgeColoring) -> Result<Rd3Certification> {
    certify_rd3_coloring_proper_with(g, c, &RainbowConfig::default())
}

pub fn certify_rd3_coloring_proper_with(
    g: &Graph,
    c: &EdgeColoring,
    config: &RainbowConfig,
) -> Result<Rd3Certification> {
    require_cubic(g)?;
    c.check_total_on(g)?;
    g.require_connected(2)?;
    require_three_edge_connected(g)?;
    let used = c.color_count();
    if used > 3 {
        return Err(Error::TooManyColors { used, allowed: 3 });
    }
    if let Verdict::NoRainbowCut { s, t } = is_rainbow_disconnected_with(g, c, config)? {
        return Err(Error::NotRainbowDisconnected { s, t });
    }

    struct Piece {
        graph: Graph,
        coloring: EdgeColoring,
        origin: Vec<Option<VertexId>>,
    }

    let mut stack = vec![Piece {
        graph: g.clone(),
        coloring: c.clone(),
        origin: (0..g.vertex_count()).map(Some).collect(),
    }];
    let mut terminals: Vec<Piece> = Vec::new();
    let mut splits = 0;
    while let Some(piece) = stack.pop() {
        match splittable_cut(&piece.graph, &piece.coloring) {
            Some(cut) => {
                let pair = split_along_rainbow_cut(&piece.graph, &piece.coloring, cut)?;
                splits += 1;
                // part_2 pushed first so part_1 is processed first
                for part in [pair.part_2, pair.part_1] {
                    let origin = part
                        .vertex_origin
                        .iter()
                        .map(|o| o.and_then(|v| piece.origin[v]))
                        .collect();
                    stack.push(Piece {
                        graph: part.graph,
                        coloring: part.coloring,
                        origin,
                    });
                }
            }
            None => terminals.push(piece),
        }
    }

    let mut terminals_proper = true;
    for piece in &terminals {
        terminals_proper &= coloring::is_proper(&piece.graph, &piece.coloring)?;
    }

    // Reassembly: each original vertex lives in exactly one terminal, where
    // its three edges carry the colors of its original edges.
    let mut home = vec![None; g.vertex_count()];
    for (i, piece) in terminals.iter().enumerate() {
        for (local, origin) in piece.origin.iter().enumerate() {
            if let Some(v) = *origin {
                assert!(home[v].is_none(), "vertex {v} appears in two terminals");
                home[v] = Some((i, local));
            }
        }
    }
    let reassembled = home.iter().all(|h| {
        let (i, local) = h.expect("every original vertex lands in a terminal");
        let piece = &terminals[i];
        let colors: Vec<Color> = piece
            .graph
            .incident(local)
            .iter()
            .map(|&(e, _)| piece.coloring.color(e))
            .collect();
        colors[0] != colors[1] && colors[0] != colors[2] && colors[1] != colors[2]
    });
    assert_eq!(
        reassembled,
        coloring::is_proper(g, c)?,
        "reassembled properness disagrees with the direct check"
    );

    Ok(Rd3Certification {
        proper: terminals_proper && reassembled,
        splits,
        terminals: terminals
            .into_iter()
            .map(|p| (p.graph, p.coloring))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn colored(g: &Graph, colors: Vec<Color>) -> EdgeColoring {
        let c = EdgeColoring::from_colors(colors);
        assert_eq!(c.len(), g.edge_count());
        c
    }

    #[test]
    fn fixed_k_path() {
        let g = generate::path(3).unwrap();
        let c = colored(&g, vec![1, 1]);
        let cut = find_rainbow_cut_fixed_k(&g, &c, 0, 2, 2).unwrap().unwrap();
        assert_eq!(cut.cut_edges.len(), 1);
        cut.validate(&g, 0, 2).unwrap();
    }

    #[test]
    fn fixed_k_monochromatic_c4() {
        let g = generate::cycle(4).unwrap();
        let c = colored(&g, vec![1; 4]);
        assert_eq!(find_rainbow_cut_fixed_k(&g, &c, 0, 2, 1).unwrap(), None);
    }

    #[test]
    fn fixed_k_alternating_c4() {
        let g = generate::cycle(4).unwrap();
        let c = colored(&g, vec![1, 2, 1, 2]);
        let cut = find_rainbow_cut_fixed_k(&g, &c, 0, 2, 2).unwrap().unwrap();
        assert_eq!(cut.cut_edges.len(), 2);
        let mut cols: Vec<Color> = cut.cut_edges.iter().map(|&e| c.color(e)).collect();
        cols.sort();
        assert_eq!(cols, vec![1, 2]);
        cut.validate(&g, 0, 2).unwrap();
        assert!(cut.is_minimal(&g));
    }

    #[test]
    fn exact_on_trees_finds_a_bridge() {
        let g = generate::random_tree(8, 11).unwrap();
        let c = colored(&g, vec![0; 7]);
        for t in 1..8 {
            let cut = find_rainbow_cut_exact(&g, &c, 0, t).unwrap().unwrap();
            assert_eq!(cut.cut_edges.len(), 1);
            cut.validate(&g, 0, t).unwrap();
        }
    }

    #[test]
    fn exact_monochromatic_k4_has_no_cut() {
        let g = generate::complete(4).unwrap();
        let c = colored(&g, vec![0; 6]);
        for t in 1..4 {
            assert_eq!(find_rainbow_cut_exact(&g, &c, 0, t).unwrap(), None);
        }
    }

    #[test]
    fn exact_respects_budget() {
        let g = generate::complete(6).unwrap();
        let c = colored(&g, (0..15).collect());
        assert_eq!(
            find_rainbow_cut_exact_with_budget(&g, &c, 0, 5, 1),
            Err(Error::BudgetExceeded { budget: 1 })
        );
    }

    #[test]
    fn disconnection_examples() {
        let tree = generate::random_tree(6, 2).unwrap();
        let verdict = is_rainbow_disconnected(&tree, &colored(&tree, vec![1; 5])).unwrap();
        assert!(verdict.is_rainbow_disconnected());

        let c4 = generate::cycle(4).unwrap();
        let verdict = is_rainbow_disconnected(&c4, &colored(&c4, vec![0; 4])).unwrap();
        assert_eq!(verdict, Verdict::NoRainbowCut { s: 0, t: 1 });

        let k4 = generate::complete(4).unwrap();
        // edges 01 02 03 12 13 23; opposite edges share a color
        let c = colored(&k4, vec![0, 1, 2, 2, 1, 0]);
        let Verdict::RainbowDisconnected(cuts) = is_rainbow_disconnected(&k4, &c).unwrap() else {
            panic!("proper coloring of K4 must be rainbow disconnected");
        };
        assert_eq!(cuts.len(), 6);
        for (&(s, t), cert) in &cuts {
            cert.validate(&k4, s, t).unwrap();
            assert!(is_rainbow(&c, &cert.cut_edges).unwrap());
        }
    }

    #[test]
    fn disconnection_rejects_disconnected_input() {
        let g = Graph::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(
            is_rainbow_disconnected(&g, &colored(&g, vec![0])),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn exact_search_used_above_threshold() {
        let k4 = generate::complete(4).unwrap();
        let c = colored(&k4, vec![0, 1, 2, 2, 1, 0]);
        let config = RainbowConfig {
            fixed_k_threshold: 0,
            ..RainbowConfig::default()
        };
        assert!(is_rainbow_disconnected_with(&k4, &c, &config)
            .unwrap()
            .is_rainbow_disconnected());
    }

    #[test]
    fn rd_examples() {
        let tree = generate::random_tree(7, 1).unwrap();
        assert_eq!(rd_exact(&tree).unwrap().rd_value, 1);
        assert_eq!(rd_exact(&generate::cycle(5).unwrap()).unwrap().rd_value, 2);
        let k4 = generate::complete(4).unwrap();
        let r = rd_exact(&k4).unwrap();
        assert_eq!(r.rd_value, 3);
        assert_eq!(r.per_pair_cuts.len(), 6);
        for (&(s, t), cert) in &r.per_pair_cuts {
            cert.validate(&k4, s, t).unwrap();
            assert!(is_rainbow(&r.witness, &cert.cut_edges).unwrap());
        }
    }

    #[test]
    fn rd_rejects_bad_input() {
        assert_eq!(
            rd_exact(&Graph::new(3, vec![(0, 1)]).unwrap()),
            Err(Error::Disconnected)
        );
        assert_eq!(
            rd_exact(&Graph::new(1, vec![]).unwrap()),
            Err(Error::TooFewVertices(2))
        );
        assert!(matches!(
            rd_exact(&generate::cycle(21).unwrap()),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn cubic_decision_examples() {
        assert_eq!(
            decide_rd_cubic(&generate::complete(4).unwrap()).unwrap().rd,
            3
        );
        assert_eq!(
            decide_rd_cubic(&generate::complete_bipartite(3, 3).unwrap())
                .unwrap()
                .rd,
            3
        );
        let p = decide_rd_cubic(&generate::petersen()).unwrap();
        assert_eq!(p.rd, 4);
        assert!(coloring::is_proper(&generate::petersen(), &p.witness).unwrap());
    }

    #[test]
    fn cubic_decision_preconditions() {
        assert!(matches!(
            decide_rd_cubic(&generate::cycle(5).unwrap()),
            Err(Error::NotCubic { .. })
        ));
        // two copies of K4 minus an edge, joined by two edges
        let g = Graph::new(
            8,
            vec![
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (4, 5),
                (4, 6),
                (4, 7),
                (5, 6),
                (5, 7),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        assert!(g.is_regular(3));
        assert_eq!(decide_rd_cubic(&g), Err(Error::NotThreeEdgeConnected(2)));
    }

    #[test]
    fn split_prism_into_two_k4() {
        let g = generate::prism(3).unwrap();
        // triangles 01 12 20 and 34 45 53, matching 03 14 25
        let c = colored(&g, vec![2, 0, 1, 2, 0, 1, 0, 1, 2]);
        let pair = split_along_rainbow_cut(&g, &c, [6, 7, 8]).unwrap();
        for part in [&pair.part_1, &pair.part_2] {
            assert_eq!(part.graph.vertex_count(), 4);
            assert_eq!(part.graph.edge_count(), 6);
            assert!(part.graph.is_regular(3));
            let x = part.new_vertex;
            let mut cols: Vec<Color> = part
                .graph
                .incident(x)
                .iter()
                .map(|&(e, _)| part.coloring.color(e))
                .collect();
            cols.sort();
            assert_eq!(cols, vec![0, 1, 2]);
            for &(e, _) in part.graph.incident(x) {
                assert_eq!(part.coloring.color(e), c.color(part.edge_origin[e]));
            }
        }
        assert_eq!(
            pair.part_1.vertex_origin,
            vec![Some(0), Some(1), Some(2), None]
        );
    }

    #[test]
    fn split_errors() {
        let k4 = generate::complete(4).unwrap();
        let c = colored(&k4, vec![0, 1, 2, 2, 1, 0]);
        let err = split_along_rainbow_cut(&k4, &c, [0, 1, 2]).unwrap_err();
        assert!(err.to_string().contains("share a vertex"), "{err}");

        let g = generate::prism(3).unwrap();
        let c = colored(&g, vec![2, 0, 1, 2, 0, 1, 0, 0, 1]);
        let err = split_along_rainbow_cut(&g, &c, [6, 7, 8]).unwrap_err();
        assert!(err.to_string().contains("not rainbow"), "{err}");

        // pairwise disjoint and rainbow, but the rest of the prism stays connected
        let c = colored(&g, (0..9).collect());
        assert!(split_along_rainbow_cut(&g, &c, [0, 3, 8]).is_err());
    }

    #[test]
    fn certify_examples() {
        let k4 = generate::complete(4).unwrap();
        let cert = certify_rd3_coloring_proper(&k4, &colored(&k4, vec![0, 1, 2, 2, 1, 0])).unwrap();
        assert!(cert.proper);
        assert_eq!(cert.splits, 0);

        let prism = generate::prism(3).unwrap();
        let c = colored(&prism, vec![2, 0, 1, 2, 0, 1, 0, 1, 2]);
        assert!(coloring::is_proper(&prism, &c).unwrap());
        let cert = certify_rd3_coloring_proper(&prism, &c).unwrap();
        assert!(cert.proper);
        assert_eq!(cert.splits, 1);
        assert_eq!(cert.terminals.len(), 2);
        assert!(cert.terminals.iter().all(|(g, _)| g.vertex_count() == 4));

        let bad = colored(&k4, vec![0, 0, 1, 2, 1, 2]);
        assert!(matches!(
            certify_rd3_coloring_proper(&k4, &bad),
            Err(Error::NotRainbowDisconnected { .. })
        ));
    }
}
