mod common;

use proptest::prelude::*;
use rdcolor::coloring::{is_proper, proper_coloring_delta_plus_one};
use rdcolor::connectivity::{global_edge_connectivity, upper_edge_connectivity};
use rdcolor::rainbow::{find_rainbow_cut_exact, is_rainbow_disconnected};
use rdcolor::reduction::{
    build_cut_from_assignment, build_theorem2_graph, extract_assignment_from_cut, Assignment,
};
use rdcolor::{components, generate, parse_graph, separates, serialize_graph, EdgeColoring, Graph};

/// A connected graph on 2..=max_n vertices.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), (n - 1)..=n * (n - 1) / 2, any::<u64>()))
        .prop_map(|(n, m, seed)| generate::random_connected(n, m, seed).unwrap())
}

fn colored_graph(max_n: usize, palette: usize) -> impl Strategy<Value = (Graph, EdgeColoring)> {
    connected_graph(max_n).prop_flat_map(move |g| {
        let m = g.edge_count();
        (Just(g), prop::collection::vec(0..palette, m))
            .prop_map(|(g, colors)| (g, EdgeColoring::from_colors(colors)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn separates_agrees_with_components(
        g in connected_graph(8),
        mask in any::<u64>(),
        s in 0usize..8,
        t in 0usize..8,
    ) {
        let n = g.vertex_count();
        let (s, t) = (s % n, t % n);
        prop_assume!(s != t);
        let cut: Vec<usize> = (0..g.edge_count()).filter(|e| (mask >> e) & 1 == 1).collect();
        let parts = components(&g, &cut).unwrap();
        let block = |v| parts.iter().position(|p| p.contains(&v)).unwrap();
        prop_assert_eq!(separates(&g, &cut, s, t).unwrap(), block(s) != block(t));
        let firsts: Vec<usize> = parts.iter().map(|p| p[0]).collect();
        prop_assert!(firsts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn serialize_then_parse_is_identity((g, c) in colored_graph(9, 12), colored in any::<bool>()) {
        let coloring = colored.then_some(&c);
        let parsed = parse_graph(&serialize_graph(&g, coloring)).unwrap();
        prop_assert_eq!(&parsed.graph, &g);
        prop_assert_eq!(parsed.coloring.as_ref(), coloring);
    }

    #[test]
    fn delta_plus_one_coloring_is_proper(g in connected_graph(10)) {
        prop_assume!(g.edge_count() > 0);
        let c = proper_coloring_delta_plus_one(&g).unwrap();
        prop_assert!(is_proper(&g, &c).unwrap());
        prop_assert!(c.color_count() <= g.max_degree() + 1);
        prop_assert!(is_rainbow_disconnected(&g, &c).unwrap().is_rainbow_disconnected());
    }

    #[test]
    fn connectivity_chain(g in connected_graph(9)) {
        let lambda = global_edge_connectivity(&g).unwrap();
        let upper = upper_edge_connectivity(&g).unwrap();
        prop_assert!(lambda <= g.min_degree());
        prop_assert!(lambda <= upper);
        prop_assert!(upper <= g.max_degree());
    }

    #[test]
    fn exact_cuts_are_minimal_rainbow_certificates(
        (g, c) in colored_graph(8, 6),
        s in 0usize..8,
        t in 0usize..8,
    ) {
        let n = g.vertex_count();
        let (s, t) = (s % n, t % n);
        prop_assume!(s != t);
        let found = find_rainbow_cut_exact(&g, &c, s, t).unwrap();
        prop_assert_eq!(
            found.is_some(),
            common::rainbow_cut_by_bipartitions(&g, c.colors(), s, t)
        );
        if let Some(cert) = found {
            cert.validate(&g, s, t).unwrap();
            prop_assert!(cert.is_minimal(&g));
        }
    }

    #[test]
    fn reduction_round_trip(n in 3usize..=8, m in 0usize..=8, seed in any::<u64>(), bits in any::<u32>()) {
        let f = generate::random_cnf(n, m, seed).unwrap();
        let art = build_theorem2_graph(&f);
        prop_assert_eq!(art.graph.vertex_count(), 4 * m + 2 * n + 2);
        prop_assert_eq!(art.graph.edge_count(), 10 * m + 2 * n + 1);
        prop_assert_eq!(art.coloring.color_count(), 5 * m + n + 1);

        let asg = Assignment::new((0..n).map(|j| (bits >> j) & 1 == 1).collect());
        let r0 = art.color_by_name("r_0").unwrap();
        let r0_edges: Vec<usize> =
            (0..art.graph.edge_count()).filter(|&e| art.coloring.color(e) == r0).collect();
        prop_assert_eq!(r0_edges.len(), m + 1);
        let st = art.graph.edge_between(art.s, art.t).unwrap();

        if f.is_satisfied_by(&asg) {
            let cut = build_cut_from_assignment(&art, &asg).unwrap();
            let cut_r0: Vec<usize> =
                cut.cut_edges.iter().copied().filter(|e| r0_edges.contains(e)).collect();
            prop_assert_eq!(cut_r0, vec![st]);
            let back = extract_assignment_from_cut(&art, &cut).unwrap();
            prop_assert!(f.is_satisfied_by(&back));
            prop_assert_eq!(back, asg);
        } else {
            prop_assert!(build_cut_from_assignment(&art, &asg).is_err());
        }
    }
}
