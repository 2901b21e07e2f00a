//! Proper edge colorings: the constructive Δ+1 bound, exact chromatic index
//! by backtracking, and the properness check.

use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, Graph, VertexId};

/// Default node budget for exponential searches.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Exact chromatic index with a proper witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticIndexResult {
    pub chi_prime: usize,
    pub witness: EdgeColoring,
    /// 1 when χ′ = Δ, 2 when χ′ = Δ + 1.
    pub vizing_class: u8,
}

/// True iff no two edges sharing an endpoint have the same color.
pub fn is_proper(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    c.check_total_on(g)?;
    Ok((0..g.vertex_count()).all(|v| {
        let incident = g.incident(v);
        incident.iter().enumerate().all(|(i, &(e, _))| {
            incident[i + 1..]
                .iter()
                .all(|&(f, _)| c.color(e) != c.color(f))
        })
    }))
}

/// Working state for the Misra–Gries algorithm. `at[v][c]` is the neighbor
/// joined to `v` by the edge colored `c`, if any.
struct FanColoring<'g> {
    graph: &'g Graph,
    colors: Vec<Option<Color>>,
    at: Vec<Vec<Option<VertexId>>>,
}

impl<'g> FanColoring<'g> {
    fn new(graph: &'g Graph, palette: usize) -> Self {
        FanColoring {
            graph,
            colors: vec![None; graph.edge_count()],
            at: vec![vec![None; palette]; graph.vertex_count()],
        }
    }

    fn edge(&self, u: VertexId, v: VertexId) -> usize {
        self.graph
            .edge_between(u, v)
            .expect("fan vertices are neighbors")
    }

    fn color_of(&self, u: VertexId, v: VertexId) -> Option<Color> {
        self.colors[self.edge(u, v)]
    }

    fn is_free(&self, v: VertexId, c: Color) -> bool {
        self.at[v][c].is_none()
    }

    fn first_free(&self, v: VertexId) -> Color {
        (0..self.at[v].len())
            .find(|&c| self.is_free(v, c))
            .expect("a vertex of degree at most Δ always has a free color among Δ+1")
    }

    fn set(&mut self, u: VertexId, v: VertexId, c: Color) {
        let e = self.edge(u, v);
        debug_assert!(self.colors[e].is_none());
        self.colors[e] = Some(c);
        self.at[u][c] = Some(v);
        self.at[v][c] = Some(u);
    }

    fn clear(&mut self, u: VertexId, v: VertexId) {
        let e = self.edge(u, v);
        if let Some(c) = self.colors[e].take() {
            self.at[u][c] = None;
            self.at[v][c] = None;
        }
    }

    /// Maximal fan at `u` starting from the uncolored edge to `v`.
    fn fan(&self, u: VertexId, v: VertexId) -> Vec<VertexId> {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().expect("fan is nonempty");
            let next = self.graph.incident(u).iter().find_map(|&(e, x)| {
                let c = self.colors[e]?;
                (!fan.contains(&x) && self.is_free(last, c)).then_some(x)
            });
            match next {
                Some(x) => fan.push(x),
                None => return fan,
            }
        }
    }

    /// Swaps colors `c` and `d` on the maximal path from `u` that starts
    /// with a `d` edge and alternates d, c, d, …
    fn invert_path(&mut self, u: VertexId, c: Color, d: Color) {
        let mut path = Vec::new();
        let (mut cur, mut col) = (u, d);
        while let Some(next) = self.at[cur][col] {
            path.push((cur, next, col));
            cur = next;
            col = if col == d { c } else { d };
        }
        for &(a, b, _) in &path {
            self.clear(a, b);
        }
        for &(a, b, col) in &path {
            self.set(a, b, if col == d { c } else { d });
        }
    }

    fn color_edge(&mut self, u: VertexId, v: VertexId) {
        let fan = self.fan(u, v);
        let c = self.first_free(u);
        let d = self.first_free(*fan.last().expect("fan is nonempty"));
        self.invert_path(u, c, d);

        // first fan vertex with d free whose prefix is still a fan
        let mut pick = None;
        for i in 0..fan.len() {
            if i > 0 {
                match self.color_of(u, fan[i]) {
                    Some(col) if self.is_free(fan[i - 1], col) => {}
                    _ => break,
                }
            }
            if self.is_free(fan[i], d) {
                pick = Some(i);
                break;
            }
        }
        let w = pick.expect("Misra–Gries guarantees a rotatable fan prefix");

        for j in 0..w {
            let col = self
                .color_of(u, fan[j + 1])
                .expect("fan edges past the first are colored");
            self.clear(u, fan[j + 1]);
            self.set(u, fan[j], col);
        }
        self.set(u, fan[w], d);
    }
}

/// A proper edge coloring with at most Δ + 1 colors, built by the
/// Misra–Gries fan-rotation algorithm. Edges are colored in edge-id order.
pub fn proper_coloring_delta_plus_one(g: &Graph) -> Result<EdgeColoring> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let palette = g.max_degree() + 1;
    let mut state = FanColoring::new(g, palette);
    for &(u, v) in g.edges() {
        state.color_edge(u, v);
    }
    let colors = state
        .colors
        .into_iter()
        .map(|c| c.expect("every edge was colored"))
        .collect();
    let coloring = EdgeColoring::new(colors, palette)?;
    debug_assert!(is_proper(g, &coloring)?);
    Ok(coloring)
}

struct ProperSearch<'g> {
    graph: &'g Graph,
    order: Vec<usize>,
    k: usize,
    used: Vec<u64>,
    colors: Vec<Color>,
    nodes: u64,
    budget: u64,
}

impl ProperSearch<'_> {
    fn dfs(&mut self, pos: usize, opened: usize) -> Result<bool> {
        if pos == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        let e = self.order[pos];
        let (a, b) = self.graph.endpoints(e);
        let blocked = self.used[a] | self.used[b];
        // at most one not-yet-used color is tried: palette symmetry
        for c in 0..(opened + 1).min(self.k) {
            if blocked & (1 << c) != 0 {
                continue;
            }
            self.used[a] |= 1 << c;
            self.used[b] |= 1 << c;
            self.colors[e] = c;
            if self.dfs(pos + 1, opened.max(c + 1))? {
                return Ok(true);
            }
            self.used[a] &= !(1 << c);
            self.used[b] &= !(1 << c);
        }
        Ok(false)
    }
}

/// Searches for a proper edge coloring with at most `k` colors. Edges are
/// tried in order of decreasing max endpoint degree, then edge id.
pub fn proper_k_coloring(g: &Graph, k: usize, budget: u64) -> Result<Option<EdgeColoring>> {
    if k > 64 {
        return Err(Error::TooLarge(format!(
            "{k} colors exceed the 64-color search limit"
        )));
    }
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (a, b) = g.endpoints(e);
        (Reverse(g.degree(a).max(g.degree(b))), e)
    });
    let mut search = ProperSearch {
        graph: g,
        order,
        k,
        used: vec![0; g.vertex_count()],
        colors: vec![0; g.edge_count()],
        nodes: 0,
        budget,
    };
    if search.dfs(0, 0)? {
        Ok(Some(EdgeColoring::new(search.colors, k)?))
    } else {
        Ok(None)
    }
}

/// Exact χ′(G) with the default node budget.
pub fn chromatic_index_exact(g: &Graph) -> Result<ChromaticIndexResult> {
    chromatic_index_exact_with_budget(g, DEFAULT_BUDGET)
}

/// Exact χ′(G): tries a Δ-coloring by backtracking and otherwise falls back
/// to the Δ + 1 construction. Exceeding `budget` nodes is an error.
pub fn chromatic_index_exact_with_budget(g: &Graph, budget: u64) -> Result<ChromaticIndexResult> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let delta = g.max_degree();
    let (chi_prime, witness, vizing_class) = match proper_k_coloring(g, delta, budget)? {
        Some(witness) => (delta, witness, 1),
        None => (delta + 1, proper_coloring_delta_plus_one(g)?, 2),
    };
    debug_assert_eq!(witness.color_count(), chi_prime);
    Ok(ChromaticIndexResult {
        chi_prime,
        witness,
        vizing_class,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v)).collect()).unwrap()
    }

    #[test]
    fn properness_examples() {
        let s = star(3);
        assert!(is_proper(&s, &EdgeColoring::from_colors(vec![1, 2, 3])).unwrap());
        assert!(!is_proper(&s, &EdgeColoring::from_colors(vec![1, 1, 2])).unwrap());
        let e = Graph::new(2, vec![(0, 1)]).unwrap();
        assert!(is_proper(&e, &EdgeColoring::from_colors(vec![5])).unwrap());
        assert!(matches!(
            is_proper(&s, &EdgeColoring::from_colors(vec![0])),
            Err(Error::ColoringLength { .. })
        ));
    }

    #[test]
    fn delta_plus_one_examples() {
        let e = Graph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(proper_coloring_delta_plus_one(&e).unwrap().color_count(), 1);

        let s = star(4);
        let c = proper_coloring_delta_plus_one(&s).unwrap();
        assert!(is_proper(&s, &c).unwrap());
        assert_eq!(c.color_count(), 4);

        let c5 = generate::cycle(5).unwrap();
        let c = proper_coloring_delta_plus_one(&c5).unwrap();
        assert!(is_proper(&c5, &c).unwrap());
        assert!(c.color_count() <= 3);

        let empty = Graph::new(3, vec![]).unwrap();
        assert_eq!(proper_coloring_delta_plus_one(&empty), Err(Error::NoEdges));
    }

    #[test]
    fn delta_plus_one_on_dense_graphs() {
        for n in 2..=9 {
            let g = generate::complete(n).unwrap();
            let c = proper_coloring_delta_plus_one(&g).unwrap();
            assert!(is_proper(&g, &c).unwrap());
            assert!(c.color_count() <= g.max_degree() + 1);
        }
        let p = generate::petersen();
        assert!(is_proper(&p, &proper_coloring_delta_plus_one(&p).unwrap()).unwrap());
    }

    #[test]
    fn chromatic_index_examples() {
        let c5 = chromatic_index_exact(&generate::cycle(5).unwrap()).unwrap();
        assert_eq!((c5.chi_prime, c5.vizing_class), (3, 2));

        let k4 = generate::complete(4).unwrap();
        let r = chromatic_index_exact(&k4).unwrap();
        assert_eq!((r.chi_prime, r.vizing_class), (3, 1));
        assert!(is_proper(&k4, &r.witness).unwrap());

        let p = generate::petersen();
        let r = chromatic_index_exact(&p).unwrap();
        assert_eq!((r.chi_prime, r.vizing_class), (4, 2));
        assert!(is_proper(&p, &r.witness).unwrap());
        assert_eq!(r.witness.color_count(), 4);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let p = generate::petersen();
        assert_eq!(
            chromatic_index_exact_with_budget(&p, 10),
            Err(Error::BudgetExceeded { budget: 10 })
        );
    }

    #[test]
    fn deterministic_witness() {
        let g = generate::random_cubic(10, 3).unwrap();
        let a = chromatic_index_exact(&g).unwrap();
        let b = chromatic_index_exact(&g).unwrap();
        assert_eq!(a, b);
    }
}
