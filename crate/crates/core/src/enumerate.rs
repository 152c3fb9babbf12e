//! One representative per isomorphism class of connected graphs.
//!
//! Small orders come from iterating every labeled edge subset. Larger orders
//! extend each connected representative on `n - 1` vertices by one vertex with
//! every nonempty neighborhood; every connected graph has a non-cut vertex, so
//! nothing is missed. Representatives are canonically labeled and the output is
//! sorted by certificate, so results do not depend on worker scheduling.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonical_graph, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_ENUMERATION_ORDER: usize = 10;
const LABELED_LIMIT: usize = 6;

fn labeled_connected(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total)
        .into_par_iter()
        .filter_map(|mask| {
            let mut g = Graph::empty(n).unwrap();
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            g.is_connected().then_some(g)
        })
        .collect()
}

fn dedup(graphs: impl ParallelIterator<Item = Graph>) -> Vec<Graph> {
    let keyed: Vec<(CanonicalForm, Graph)> = graphs
        .map(|g| {
            let (c, form) = canonical_graph(&g);
            (form, c)
        })
        .collect();
    let unique: BTreeMap<CanonicalForm, Graph> = keyed.into_iter().collect();
    unique.into_values().collect()
}

fn extend(reps: &[Graph]) -> Vec<Graph> {
    let n = reps[0].n();
    dedup(
        reps.par_iter().flat_map_iter(|g| {
            (1u32..1 << n).map(move |mask| g.with_vertex(VertexSet(mask)).unwrap())
        }),
    )
}

/// Connected graphs of every order `1..=n_max`; entry `k` holds order `k + 1`.
pub fn connected_graphs_up_to(n_max: usize) -> Result<Vec<Vec<Graph>>> {
    if n_max == 0 || n_max > MAX_ENUMERATION_ORDER {
        return Err(Error::Capacity {
            what: "enumeration order",
            actual: n_max,
            limit: MAX_ENUMERATION_ORDER,
        });
    }
    let mut levels: Vec<Vec<Graph>> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let level = if n <= LABELED_LIMIT {
            dedup(labeled_connected(n).into_par_iter())
        } else {
            extend(&levels[n - 2])
        };
        levels.push(level);
    }
    Ok(levels)
}

pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs_up_to(n)?.pop().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = connected_graphs_up_to(5)
            .unwrap()
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn order_three() {
        let g = enumerate_connected_graphs(3).unwrap();
        assert!(g.iter().any(|g| *g == Graph::complete(3).unwrap()));
        assert!(g.iter().all(|g| g.is_connected()));
    }

    #[test]
    fn range_checked() {
        assert!(matches!(
            enumerate_connected_graphs(0),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            enumerate_connected_graphs(11),
            Err(Error::Capacity { .. })
        ));
    }
}
