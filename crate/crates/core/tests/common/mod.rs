//! Brute-force oracles shared by the integration tests. None of these call
//! into the search code they are used to check.

#![allow(dead_code)]

use rdcolor::generate;
use rdcolor::reduction::{Assignment, CnfFormula};
use rdcolor::{EdgeColoring, Graph};

/// Every vertex set X with s ∈ X and t ∉ X, as a bitmask.
pub fn separating_sets(n: usize, s: usize, t: usize) -> impl Iterator<Item = u32> {
    (0u32..(1 << n)).filter(move |x| (x >> s) & 1 == 1 && (x >> t) & 1 == 0)
}

pub fn crossing_edges(g: &Graph, x: u32) -> Vec<usize> {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| ((x >> a) & 1) != ((x >> b) & 1))
        .map(|(e, _)| e)
        .collect()
}

/// λ(s, t) as the smallest δ(X) over all separating vertex sets.
pub fn lambda_by_bipartitions(g: &Graph, s: usize, t: usize) -> usize {
    separating_sets(g.vertex_count(), s, t)
        .map(|x| crossing_edges(g, x).len())
        .min()
        .expect("s != t")
}

fn distinct_colors(colors: &[usize], edges: &[usize]) -> bool {
    let mut seen = Vec::new();
    for &e in edges {
        if seen.contains(&colors[e]) {
            return false;
        }
        seen.push(colors[e]);
    }
    true
}

/// Whether some δ(X) separating s and t is rainbow. Any rainbow s–t cut
/// contains such a δ(X), so this decides rainbow cut existence.
pub fn rainbow_cut_by_bipartitions(g: &Graph, colors: &[usize], s: usize, t: usize) -> bool {
    separating_sets(g.vertex_count(), s, t).any(|x| distinct_colors(colors, &crossing_edges(g, x)))
}

pub fn rainbow_disconnected_by_bipartitions(g: &Graph, colors: &[usize]) -> bool {
    let n = g.vertex_count();
    (0..n).all(|s| ((s + 1)..n).all(|t| rainbow_cut_by_bipartitions(g, colors, s, t)))
}

/// Calls `f` on every coloring of `m` edges with colors `0..k` until it
/// returns true.
pub fn any_coloring(m: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut colors = vec![0; m];
    loop {
        if f(&colors) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == m {
                return false;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// rd(G) by trying every k-coloring for k = 1, 2, …
pub fn rd_by_enumeration(g: &Graph) -> usize {
    (1..)
        .find(|&k| {
            any_coloring(g.edge_count(), k, |c| {
                rainbow_disconnected_by_bipartitions(g, c)
            })
        })
        .unwrap()
}

pub fn is_proper_colors(g: &Graph, colors: &[usize]) -> bool {
    (0..g.vertex_count()).all(|v| {
        let inc: Vec<usize> = g.incident(v).iter().map(|&(e, _)| colors[e]).collect();
        (0..inc.len()).all(|i| ((i + 1)..inc.len()).all(|j| inc[i] != inc[j]))
    })
}

/// Plain backtracking in edge-id order, no symmetry breaking.
pub fn proper_coloring_exists(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, k: usize, e: usize, colors: &mut Vec<usize>) -> bool {
        if e == g.edge_count() {
            return true;
        }
        let (a, b) = g.endpoints(e);
        for c in 0..k {
            let clash = g
                .incident(a)
                .iter()
                .chain(g.incident(b))
                .any(|&(f, _)| f < e && colors[f] == c);
            if !clash {
                colors[e] = c;
                if go(g, k, e + 1, colors) {
                    return true;
                }
            }
        }
        false
    }
    go(g, k, 0, &mut vec![0; g.edge_count()])
}

pub fn chi_by_backtracking(g: &Graph) -> usize {
    (1..).find(|&k| proper_coloring_exists(g, k)).unwrap()
}

/// χ′ by trying all k^m colorings; for tiny graphs only.
pub fn chi_by_enumeration(g: &Graph) -> usize {
    (1..)
        .find(|&k| any_coloring(g.edge_count(), k, |c| is_proper_colors(g, c)))
        .unwrap()
}

/// All connected labeled graphs on `n` vertices.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    (0u32..(1 << pairs.len()))
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| (mask >> i) & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::new(n, edges).unwrap()
        })
        .filter(|g| g.is_connected())
        .collect()
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut side = vec![None; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &(_, w) in g.incident(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!side[v].unwrap());
                        stack.push(w);
                    }
                    Some(sw) if Some(sw) == side[v] => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// λ(G) ≥ 3, checked over all bipartitions.
pub fn three_edge_connected_by_bipartitions(g: &Graph) -> bool {
    (1..g.vertex_count()).all(|t| lambda_by_bipartitions(g, 0, t) >= 3)
}

/// Corpus of 3-edge-connected cubic graphs on at most 10 vertices.
pub fn cubic_corpus() -> Vec<(String, Graph)> {
    let mut corpus = vec![
        ("K4".to_string(), generate::complete(4).unwrap()),
        (
            "K3,3".to_string(),
            generate::complete_bipartite(3, 3).unwrap(),
        ),
        ("prism3".to_string(), generate::prism(3).unwrap()),
        ("prism4".to_string(), generate::prism(4).unwrap()),
        ("prism5".to_string(), generate::prism(5).unwrap()),
        ("petersen".to_string(), generate::petersen()),
    ];
    for n in [6usize, 8, 10] {
        for seed in 0..12u64 {
            let g = generate::random_cubic(n, seed).unwrap();
            if three_edge_connected_by_bipartitions(&g) {
                corpus.push((format!("cubic{n}-seed{seed}"), g));
            }
        }
    }
    corpus
}

pub fn satisfiable_by_enumeration(f: &CnfFormula) -> bool {
    let n = f.variable_count();
    (0u32..(1 << n)).any(|bits| {
        let a = Assignment::new((0..n).map(|j| (bits >> j) & 1 == 1).collect());
        f.is_satisfied_by(&a)
    })
}

pub fn colors_of(c: &EdgeColoring) -> Vec<usize> {
    c.colors().to_vec()
}
