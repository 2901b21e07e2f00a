//! Deterministic graph and formula generators for test corpora.
//!
//! Every random generator is driven by `ChaCha8Rng::seed_from_u64(seed)`, so
//! output depends only on the parameters and the seed, on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::reduction::{CnfFormula, Literal};

/// Upper bound on pairing-model retries before giving up.
const CUBIC_ATTEMPTS: usize = 100_000;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs at least one vertex"));
    }
    Graph::new(n, (1..n).map(|v| (v - 1, v)).collect())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs at least 3 vertices"));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)).collect())
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete graph needs at least one vertex"));
    }
    let edges = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, edges)
}

/// K_{a,b} with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(invalid("both parts must be nonempty"));
    }
    let edges = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::new(a + b, edges)
}

/// Two k-cycles `0..k` and `k..2k` joined by the matching i–i+k. Edges are
/// the first cycle, the second cycle, then the matching.
pub fn prism(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(invalid("prism needs cycles of length at least 3"));
    }
    let mut edges: Vec<(VertexId, VertexId)> = (0..k).map(|v| (v, (v + 1) % k)).collect();
    edges.extend((0..k).map(|v| (k + v, k + (v + 1) % k)));
    edges.extend((0..k).map(|v| (v, v + k)));
    Graph::new(2 * k, edges)
}

/// Outer 5-cycle `0..5`, spokes i–i+5, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges: Vec<(VertexId, VertexId)> = (0..5).map(|v| (v, (v + 1) % 5)).collect();
    edges.extend((0..5).map(|v| (v, v + 5)));
    edges.extend((0..5).map(|v| (5 + v, 5 + (v + 2) % 5)));
    Graph::new(10, edges).expect("the Petersen graph is simple")
}

/// Random recursive tree: vertex v ≥ 1 attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("tree needs at least one vertex"));
    }
    let mut rng = rng(seed);
    Graph::new(n, (1..n).map(|v| (rng.gen_range(0..v), v)).collect())
}

/// Connected graph with `n` vertices and `m` edges: a random tree plus
/// `m - (n - 1)` further edges drawn uniformly from the remaining pairs.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("graph needs at least one vertex"));
    }
    let max_edges = n * (n - 1) / 2;
    if m + 1 < n || m > max_edges {
        return Err(invalid(format!(
            "a connected simple graph on {n} vertices has between {} and {max_edges} edges",
            n - 1
        )));
    }
    let mut rng = rng(seed);
    let mut edges: Vec<(VertexId, VertexId)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut rest: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|p| !edges.contains(p))
        .collect();
    rest.shuffle(&mut rng);
    edges.extend(rest.into_iter().take(m + 1 - n));
    Graph::new(n, edges)
}

/// Random connected cubic graph by the pairing (configuration) model,
/// rejecting loops, parallel edges and disconnected outcomes.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(invalid("random cubic graphs need an even n >= 4"));
    }
    let mut rng = rng(seed);
    let mut points: Vec<VertexId> = (0..3 * n).map(|p| p / 3).collect();
    for _ in 0..CUBIC_ATTEMPTS {
        points.shuffle(&mut rng);
        let edges: Vec<(VertexId, VertexId)> =
            points.chunks(2).map(|pair| (pair[0], pair[1])).collect();
        if let Ok(g) = Graph::new(n, edges) {
            if g.is_connected() {
                return Ok(g);
            }
        }
    }
    Err(invalid(format!(
        "no simple connected pairing found after {CUBIC_ATTEMPTS} attempts"
    )))
}

/// `m` clauses, each over 3 distinct uniformly chosen variables with
/// uniform signs.
pub fn random_cnf(n: usize, m: usize, seed: u64) -> Result<CnfFormula> {
    if n < 3 {
        return Err(invalid("a 3CNF formula needs at least 3 variables"));
    }
    let mut rng = rng(seed);
    let clauses = (0..m)
        .map(|_| {
            let vars = rand::seq::index::sample(&mut rng, n, 3);
            let mut clause = [Literal::positive(1); 3];
            for (slot, var) in clause.iter_mut().zip(vars.iter()) {
                *slot = Literal {
                    variable: var + 1,
                    positive: rng.gen_bool(0.5),
                };
            }
            clause
        })
        .collect();
    CnfFormula::new(n, clauses)
}
