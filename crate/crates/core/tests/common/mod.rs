//! Independent oracles and samplers shared by the integration tests.
#![allow(dead_code)]

use improper::interval::{intersection_graph, Rational, Realization};
use improper::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn upper_bits(g: &Graph) -> Vec<bool> {
    let n = g.n();
    (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .map(|(u, v)| g.has_edge(u, v))
        .collect()
}

/// Lexicographically largest upper-triangle bit vector over all relabelings.
pub fn brute_certificate(g: &Graph, perms: &[Vec<usize>]) -> Vec<bool> {
    perms
        .iter()
        .map(|p| upper_bits(&g.relabel(p)))
        .max()
        .unwrap()
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    all_permutations(a.n()).iter().any(|p| a.relabel(p) == *b)
}

/// Connected intersection graph of random intervals with integer endpoints
/// drawn from `0..4n`, retried until connected.
pub fn random_interval_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let intervals: Vec<(Rational, Rational)> = (0..n)
            .map(|_| {
                let a = rng.gen_range(0..4 * n as i64);
                let len = rng.gen_range(1..=n as i64 + 1);
                (Rational::from_integer(a), Rational::from_integer(a + len))
            })
            .collect();
        let Ok(r) = Realization::new(intervals) else {
            continue;
        };
        let g = intersection_graph(&r);
        if g.is_connected() {
            return g;
        }
    }
}
