use std::collections::BTreeSet;

use improper::census::{
    construct_two_unconfined_candidates, enumerate_minimal_forbidden, is_minimal_forbidden,
    minimal_extensions, with_jobs,
};
use improper::impropriety::componentwise_impropriety;

#[test]
fn census_verdicts_are_idempotent_and_tight() {
    for p in 0..=1 {
        let census = enumerate_minimal_forbidden(p, 7).unwrap();
        for m in &census.members {
            let v = is_minimal_forbidden(&m.graph, p).unwrap();
            assert!(v.minimal_forbidden, "{}", m.graph6);
            assert_eq!(v, m.verdict);
            assert!(v.deletion_imps.iter().all(|&d| d <= p));
            assert!(v.deletion_imps.contains(&p), "{}", m.graph6);
            for u in 0..m.graph.n() {
                let d = match m.graph.delete_vertex(u).unwrap() {
                    Some(h) => componentwise_impropriety(&h).unwrap(),
                    None => 0,
                };
                assert_eq!(d, v.deletion_imps[u]);
            }
        }
    }
}

#[test]
fn census_ignores_worker_count() {
    let one = with_jobs(Some(1), || enumerate_minimal_forbidden(1, 7).unwrap());
    let four = with_jobs(Some(4), || enumerate_minimal_forbidden(1, 7).unwrap());
    assert_eq!(one, four);
    assert_eq!(one.found(), four.found());
}

#[test]
fn constructive_family_lies_in_census() {
    for p in 1..=2 {
        let built: BTreeSet<String> = construct_two_unconfined_candidates(p)
            .unwrap()
            .graph6()
            .into_iter()
            .collect();
        let census: BTreeSet<String> = enumerate_minimal_forbidden(p - 1, 7)
            .unwrap()
            .found()
            .into_iter()
            .collect();
        assert!(
            built.is_subset(&census),
            "p = {p}: {:?}",
            built.difference(&census).collect::<Vec<_>>()
        );
    }
}

#[test]
fn one_vertex_extensions_are_never_minimal() {
    for p in 0..=1 {
        for m in enumerate_minimal_forbidden(p, 7).unwrap().members {
            assert!(
                minimal_extensions(&m.graph, p).unwrap().is_empty(),
                "{}",
                m.graph6
            );
        }
    }
}
