use improper::enumerate::connected_graphs_up_to;
use improper::impropriety::{
    componentwise_impropriety, containment_profile, impropriety, impropriety_oracle,
};
use improper::interval::{enumerate_clique_orders, is_interval};
use improper::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod common;

fn interval_graphs_up_to(n: usize) -> Vec<Graph> {
    connected_graphs_up_to(n)
        .unwrap()
        .into_iter()
        .flatten()
        .filter(|g| is_interval(g).unwrap())
        .collect()
}

#[test]
fn layout_search_matches_endpoint_oracle() {
    for g in interval_graphs_up_to(6) {
        assert_eq!(
            impropriety(&g).unwrap().imp,
            impropriety_oracle(&g).unwrap(),
            "{:?}",
            g.edges()
        );
    }
}

// claw detection by scanning every centre and leaf triple
fn brute_has_claw(g: &Graph) -> bool {
    let n = g.n();
    (0..n).any(|c| {
        let nb = g.neighbors(c).to_vec();
        nb.iter().enumerate().any(|(i, &a)| {
            nb[i + 1..].iter().enumerate().any(|(j, &b)| {
                !g.has_edge(a, b)
                    && nb[i + 1 + j + 1..]
                        .iter()
                        .any(|&d| !g.has_edge(a, d) && !g.has_edge(b, d))
            })
        })
    })
}

#[test]
fn zero_impropriety_is_claw_free() {
    for g in interval_graphs_up_to(7) {
        let zero = impropriety(&g).unwrap().imp == 0;
        assert_eq!(zero, !brute_has_claw(&g), "{:?}", g.edges());
        assert_eq!(g.has_induced_claw(), brute_has_claw(&g));
    }
}

#[test]
fn witness_and_profile_invariants() {
    for g in interval_graphs_up_to(6) {
        let r = impropriety(&g).unwrap();
        let w = containment_profile(&r.witness);
        assert_eq!(w.max_imp, r.imp);
        let mut best = usize::MAX;
        for l in enumerate_clique_orders(&g).unwrap() {
            let p = containment_profile(&l);
            best = best.min(p.max_imp);
            let mut nested = 0;
            for v in 0..g.n() {
                assert!(p.counts[v] <= g.degree(v));
                assert!(r.per_vertex_min[v] <= p.counts[v]);
                nested += (0..g.n()).filter(|&u| l.strictly_nested(u, v)).count();
            }
            assert_eq!(p.counts.iter().sum::<usize>(), nested);
        }
        assert_eq!(best, r.imp);
        for v in 0..g.n() {
            assert!(r.per_vertex_min[v] <= w.counts[v]);
        }
    }
}

fn assert_monotone(g: &Graph) {
    let imp = impropriety(g).unwrap().imp;
    for v in 0..g.n() {
        if let Some(h) = g.delete_vertex(v).unwrap() {
            assert!(
                componentwise_impropriety(&h).unwrap() <= imp,
                "{:?} - {v}",
                g.edges()
            );
        }
    }
}

#[test]
fn deletion_never_raises_impropriety() {
    for g in interval_graphs_up_to(7) {
        assert_monotone(&g);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1D5);
    for i in 0..300 {
        let n = 2 + i % 7;
        assert_monotone(&common::random_interval_graph(&mut rng, n));
    }
}
