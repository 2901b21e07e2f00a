//! Exact edge connectivity: pairwise λ(s, t) by unit-capacity max-flow,
//! global λ(G), and the upper edge-connectivity λ⁺(G) read off a
//! Gomory–Hu tree.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{CutCertificate, Graph, VertexId};

/// Maximum flow between two vertices of an undirected graph where every edge
/// has capacity one in each direction.
///
/// Flow on edge `e = (a, b)` is stored as `flow[e] ∈ {-1, 0, 1}`, positive
/// meaning a → b. The residual capacity from a to b is `1 - flow[e]` and from
/// b to a is `1 + flow[e]`.
struct UnitFlow<'g> {
    graph: &'g Graph,
    flow: Vec<i8>,
}

impl<'g> UnitFlow<'g> {
    fn new(graph: &'g Graph) -> Self {
        UnitFlow {
            graph,
            flow: vec![0; graph.edge_count()],
        }
    }

    fn residual(&self, e: usize, from: VertexId) -> i8 {
        let (a, _) = self.graph.endpoints(e);
        if from == a {
            1 - self.flow[e]
        } else {
            1 + self.flow[e]
        }
    }

    fn push(&mut self, e: usize, from: VertexId) {
        let (a, _) = self.graph.endpoints(e);
        if from == a {
            self.flow[e] += 1;
        } else {
            self.flow[e] -= 1;
        }
    }

    /// BFS in the residual network. Returns the predecessor edge of each
    /// reached vertex; `s` maps to `Some(usize::MAX)`.
    fn search(&self, s: VertexId, t: Option<VertexId>) -> Vec<Option<usize>> {
        let mut pred = vec![None; self.graph.vertex_count()];
        pred[s] = Some(usize::MAX);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(e, w) in self.graph.incident(v) {
                if pred[w].is_none() && self.residual(e, v) > 0 {
                    pred[w] = Some(e);
                    if Some(w) == t {
                        return pred;
                    }
                    queue.push_back(w);
                }
            }
        }
        pred
    }

    /// Shortest augmenting paths until none remain. Returns the flow value
    /// and the s-side of the canonical minimum cut (residual reachability).
    fn run(mut self, s: VertexId, t: VertexId) -> (usize, Vec<bool>) {
        let mut value = 0;
        loop {
            let pred = self.search(s, Some(t));
            if pred[t].is_none() {
                let side = pred.iter().map(Option::is_some).collect();
                return (value, side);
            }
            let mut v = t;
            while v != s {
                let e = pred[v].expect("vertex on augmenting path has a predecessor");
                let (a, b) = self.graph.endpoints(e);
                let u = if a == v { b } else { a };
                self.push(e, u);
                v = u;
            }
            value += 1;
        }
    }
}

/// Max-flow value and canonical min-cut side; no connectivity precondition.
fn min_cut(g: &Graph, s: VertexId, t: VertexId) -> (usize, Vec<bool>) {
    let (value, side) = UnitFlow::new(g).run(s, t);
    debug_assert_eq!(g.boundary(&side).len(), value, "max-flow/min-cut mismatch");
    (value, side)
}

/// λ(s, t) with a minimum cut certificate whose s-side is the set of vertices
/// reachable from `s` in the final residual network.
pub fn local_edge_connectivity(
    g: &Graph,
    s: VertexId,
    t: VertexId,
) -> Result<(usize, CutCertificate)> {
    g.check_pair(s, t)?;
    g.require_connected(2)?;
    let (value, side) = min_cut(g, s, t);
    let cert = CutCertificate::from_side(g, &side);
    assert_eq!(
        cert.cut_edges.len(),
        value,
        "flow value differs from cut size"
    );
    Ok((value, cert))
}

/// λ(G), the minimum over t ≠ 0 of λ(0, t).
pub fn global_edge_connectivity(g: &Graph) -> Result<usize> {
    g.require_connected(2)?;
    Ok((1..g.vertex_count())
        .map(|t| min_cut(g, 0, t).0)
        .min()
        .expect("at least two vertices"))
}

/// A Gomory–Hu cut tree rooted at vertex 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GomoryHuTree {
    parent: Vec<Option<VertexId>>,
    flow_value: Vec<usize>,
}

impl GomoryHuTree {
    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    /// Parent of `v`, `None` for the root.
    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    /// λ(v, parent(v)); meaningless for the root.
    pub fn flow_value(&self, v: VertexId) -> usize {
        self.flow_value[v]
    }

    /// Tree edges as `(child, parent, value)`.
    pub fn tree_edges(&self) -> impl Iterator<Item = (VertexId, VertexId, usize)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (v, p, self.flow_value[v])))
    }

    fn depth(&self, mut v: VertexId) -> usize {
        let mut d = 0;
        while let Some(p) = self.parent[v] {
            v = p;
            d += 1;
        }
        d
    }

    /// Minimum flow value on the tree path between `u` and `v`, which is
    /// λ(u, v) in the original graph.
    pub fn min_cut_value(&self, mut u: VertexId, mut v: VertexId) -> Option<usize> {
        if u == v {
            return None;
        }
        let (mut du, mut dv) = (self.depth(u), self.depth(v));
        let mut best = usize::MAX;
        while du > dv {
            best = best.min(self.flow_value[u]);
            u = self.parent[u]?;
            du -= 1;
        }
        while dv > du {
            best = best.min(self.flow_value[v]);
            v = self.parent[v]?;
            dv -= 1;
        }
        while u != v {
            best = best.min(self.flow_value[u]).min(self.flow_value[v]);
            u = self.parent[u]?;
            v = self.parent[v]?;
        }
        Some(best)
    }
}

/// Gusfield's construction: n − 1 max-flow computations on the original
/// graph, no contraction.
pub fn gomory_hu(g: &Graph) -> Result<GomoryHuTree> {
    g.require_connected(1)?;
    let n = g.vertex_count();
    let mut parent: Vec<Option<VertexId>> = (0..n).map(|v| (v > 0).then_some(0)).collect();
    let mut flow_value = vec![0; n];
    for s in 1..n {
        let t = parent[s].expect("non-root vertex");
        let (value, side) = min_cut(g, s, t);
        flow_value[s] = value;
        for v in (s + 1)..n {
            if side[v] && parent[v] == Some(t) {
                parent[v] = Some(s);
            }
        }
    }
    Ok(GomoryHuTree { parent, flow_value })
}

/// λ⁺(G) = max over pairs of λ(s, t), the heaviest Gomory–Hu tree edge.
pub fn upper_edge_connectivity(g: &Graph) -> Result<usize> {
    g.require_connected(2)?;
    let tree = gomory_hu(g)?;
    Ok(tree
        .tree_edges()
        .map(|(_, _, value)| value)
        .max()
        .expect("tree on at least two vertices has an edge"))
}

/// Rejects graphs that are not 3-edge-connected.
pub(crate) fn require_three_edge_connected(g: &Graph) -> Result<()> {
    let lambda = global_edge_connectivity(g)?;
    if lambda < 3 {
        return Err(Error::NotThreeEdgeConnected(lambda));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn two_triangles_with_bridge() -> Graph {
        Graph::new(
            6,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn tree_pairs_have_connectivity_one() {
        let g = generate::random_tree(9, 3).unwrap();
        for s in 0..9 {
            for t in 0..9 {
                if s != t {
                    let (value, cert) = local_edge_connectivity(&g, s, t).unwrap();
                    assert_eq!(value, 1);
                    cert.validate(&g, s, t).unwrap();
                }
            }
        }
    }

    #[test]
    fn cycle_opposite_vertices() {
        let g = generate::cycle(4).unwrap();
        let (value, cert) = local_edge_connectivity(&g, 0, 2).unwrap();
        assert_eq!(value, 2);
        assert_eq!(cert.cut_edges.len(), 2);
        cert.validate(&g, 0, 2).unwrap();
    }

    #[test]
    fn errors() {
        let g = Graph::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(local_edge_connectivity(&g, 0, 1), Err(Error::Disconnected));
        let c = generate::cycle(4).unwrap();
        assert_eq!(local_edge_connectivity(&c, 1, 1), Err(Error::SameVertex(1)));
        let single = Graph::new(1, vec![]).unwrap();
        assert_eq!(
            global_edge_connectivity(&single),
            Err(Error::TooFewVertices(2))
        );
        assert_eq!(gomory_hu(&g), Err(Error::Disconnected));
    }

    #[test]
    fn global_examples() {
        assert_eq!(
            global_edge_connectivity(&generate::cycle(6).unwrap()),
            Ok(2)
        );
        assert_eq!(
            global_edge_connectivity(&generate::complete(4).unwrap()),
            Ok(3)
        );
        assert_eq!(
            global_edge_connectivity(&two_triangles_with_bridge()),
            Ok(1)
        );
    }

    #[test]
    fn gomory_hu_examples() {
        let p3 = generate::path(3).unwrap();
        let tree = gomory_hu(&p3).unwrap();
        assert!(tree.tree_edges().all(|(_, _, v)| v == 1));
        assert_eq!(tree.tree_edges().count(), 2);

        let k4 = generate::complete(4).unwrap();
        let tree = gomory_hu(&k4).unwrap();
        assert!(tree.tree_edges().all(|(_, _, v)| v == 3));
    }

    #[test]
    fn upper_examples() {
        assert_eq!(upper_edge_connectivity(&generate::path(5).unwrap()), Ok(1));
        assert_eq!(upper_edge_connectivity(&two_triangles_with_bridge()), Ok(2));
        assert_eq!(
            upper_edge_connectivity(&generate::complete(4).unwrap()),
            Ok(3)
        );
    }

    #[test]
    fn tree_path_minimum_matches_direct_flow() {
        let g = two_triangles_with_bridge();
        let tree = gomory_hu(&g).unwrap();
        for s in 0..6 {
            for t in 0..6 {
                if s != t {
                    let direct = local_edge_connectivity(&g, s, t).unwrap().0;
                    assert_eq!(tree.min_cut_value(s, t), Some(direct));
                }
            }
        }
        assert_eq!(tree.min_cut_value(2, 2), None);
    }
}
