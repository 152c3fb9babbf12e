use std::collections::BTreeSet;

use improper::enumerate::{connected_graphs_up_to, enumerate_connected_graphs};
use improper::{canonical_form, parse_graph6, to_graph6, Graph, VertexSet};
use proptest::prelude::*;

mod common;
use common::{all_permutations, brute_certificate, brute_isomorphic};

#[test]
fn graph6_round_trip_through_order_seven() {
    for level in connected_graphs_up_to(7).unwrap() {
        for g in level {
            let text = to_graph6(&g);
            assert_eq!(parse_graph6(&text).unwrap(), g, "{text}");
        }
    }
}

#[test]
fn connected_counts_match_labeled_enumeration() {
    for n in 1..=6 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let perms = all_permutations(n);
        let mut classes = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| pairs[b])
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() {
                classes.insert(brute_certificate(&g, &perms));
            }
        }
        let graphs = enumerate_connected_graphs(n).unwrap();
        assert_eq!(graphs.len(), classes.len(), "n = {n}");
        let ours: BTreeSet<_> = graphs
            .iter()
            .map(|g| brute_certificate(g, &perms))
            .collect();
        assert_eq!(ours, classes, "n = {n}");
    }
}

#[test]
fn canonical_form_separates_classes_through_order_six() {
    for level in connected_graphs_up_to(6).unwrap() {
        let forms: BTreeSet<_> = level.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), level.len());
    }
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut i = 0;
            for v in 0..n {
                for u in 0..v {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_and_perm(8)) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_form_agrees_with_brute_isomorphism(
        (a, perm) in graph_and_perm(6),
        flip in proptest::option::of((0usize..6, 0usize..6)),
    ) {
        let mut b = a.relabel(&perm);
        if let Some((u, v)) = flip {
            let (u, v) = (u % b.n(), v % b.n());
            if u != v {
                if b.has_edge(u, v) { b.remove_edge(u, v) } else { b.add_edge(u, v) }
            }
        }
        let same = canonical_form(&a) == canonical_form(&b);
        prop_assert_eq!(same, brute_isomorphic(&a, &b));
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(16)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn maximal_cliques_are_maximal_and_cover_edges(g in graph_strategy(10)) {
        let cliques = g.maximal_cliques();
        for &c in &cliques {
            prop_assert!(g.is_clique(c));
            for v in g.vertices().difference(c) {
                prop_assert!(!g.is_clique(c.with(v)));
            }
        }
        for (u, v) in g.edges() {
            let e = VertexSet::from_vertices([u, v]);
            prop_assert!(cliques.iter().any(|c| e.is_subset(*c)));
        }
        let distinct: BTreeSet<u32> = cliques.iter().map(|c| c.0).collect();
        prop_assert_eq!(distinct.len(), cliques.len());
    }
}
