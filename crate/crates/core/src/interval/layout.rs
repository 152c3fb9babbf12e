use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest number of maximal cliques the permutation search accepts.
pub const MAX_LAYOUT_CLIQUES: usize = 9;

/// A linear order of all maximal cliques in which the cliques containing any
/// fixed vertex are contiguous. Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliqueLayout {
    cliques: Vec<VertexSet>,
    ranges: Vec<(usize, usize)>,
}

fn ranges_of(n: usize, cliques: &[VertexSet]) -> Vec<(usize, usize)> {
    let mut ranges = vec![(0, 0); n];
    for (i, c) in cliques.iter().enumerate() {
        for v in c.iter() {
            let pos = i + 1;
            if ranges[v].0 == 0 {
                ranges[v].0 = pos;
            }
            ranges[v].1 = pos;
        }
    }
    ranges
}

impl CliqueLayout {
    /// Validates that `cliques` lists every maximal clique of `g` exactly once
    /// in a consecutive order.
    pub fn new(g: &Graph, cliques: Vec<VertexSet>) -> Result<Self> {
        let mut expected = g.maximal_cliques();
        let mut given = cliques.clone();
        given.sort_by(|a, b| a.cmp_members(*b));
        expected.sort_by(|a, b| a.cmp_members(*b));
        if given != expected {
            return Err(Error::InvalidLayout(
                "cliques are not exactly the maximal cliques".into(),
            ));
        }
        let ranges = ranges_of(g.n(), &cliques);
        for (v, &(f, l)) in ranges.iter().enumerate() {
            if (f..=l).any(|p| !cliques[p - 1].contains(v)) {
                return Err(Error::InvalidLayout(format!(
                    "cliques containing vertex {v} are not consecutive"
                )));
            }
        }
        Ok(CliqueLayout { cliques, ranges })
    }

    fn from_valid(n: usize, cliques: Vec<VertexSet>) -> Self {
        let ranges = ranges_of(n, &cliques);
        CliqueLayout { cliques, ranges }
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn n(&self) -> usize {
        self.ranges.len()
    }

    /// Per-vertex `(first, last)` clique positions.
    pub fn ranges(&self) -> &[(usize, usize)] {
        &self.ranges
    }

    pub fn range(&self, v: usize) -> (usize, usize) {
        self.ranges[v]
    }

    /// `u`'s range lies strictly inside `v`'s on both ends.
    pub fn strictly_nested(&self, u: usize, v: usize) -> bool {
        let (fu, lu) = self.ranges[u];
        let (fv, lv) = self.ranges[v];
        fv < fu && lu < lv
    }

    /// Vertices strictly nested in `z`.
    pub fn nested_in(&self, z: usize) -> VertexSet {
        (0..self.n())
            .filter(|&u| self.strictly_nested(u, z))
            .collect()
    }

    /// Smallest first position and largest last position over `set`.
    pub fn support(&self, set: VertexSet) -> (usize, usize) {
        set.iter().fold((usize::MAX, 0), |(f, l), v| {
            (f.min(self.ranges[v].0), l.max(self.ranges[v].1))
        })
    }

    pub fn reversed(&self) -> CliqueLayout {
        let mut cliques = self.cliques.clone();
        cliques.reverse();
        CliqueLayout::from_valid(self.n(), cliques)
    }
}

pub fn layout_ranges(layout: &CliqueLayout) -> &[(usize, usize)] {
    layout.ranges()
}

/// Every consecutive ordering of the maximal cliques, in lexicographic order
/// of clique indices (cliques sorted by their member lists).
pub struct CliqueOrders {
    n: usize,
    cliques: Vec<VertexSet>,
    order: Vec<usize>,
    cursor: Vec<usize>,
    seen: Vec<VertexSet>,
    used: u32,
    done: bool,
}

impl CliqueOrders {
    fn compatible(&self, depth: usize, c: usize) -> bool {
        if depth == 0 {
            return true;
        }
        let last = self.cliques[self.order[depth - 1]];
        let closed = self.seen[depth].difference(last);
        self.cliques[c].is_disjoint(closed)
    }

    pub fn clique_count(&self) -> usize {
        self.cliques.len()
    }
}

impl Iterator for CliqueOrders {
    type Item = CliqueLayout;

    fn next(&mut self) -> Option<CliqueLayout> {
        let m = self.cliques.len();
        while !self.done {
            let d = self.order.len();
            let mut found = None;
            while self.cursor[d] < m {
                let c = self.cursor[d];
                self.cursor[d] += 1;
                if self.used >> c & 1 == 0 && self.compatible(d, c) {
                    found = Some(c);
                    break;
                }
            }
            match found {
                Some(c) if d + 1 == m => {
                    let cliques = self
                        .order
                        .iter()
                        .chain(std::iter::once(&c))
                        .map(|&i| self.cliques[i])
                        .collect();
                    return Some(CliqueLayout::from_valid(self.n, cliques));
                }
                Some(c) => {
                    self.order.push(c);
                    self.used |= 1 << c;
                    self.seen[d + 1] = self.seen[d].union(self.cliques[c]);
                    self.cursor[d + 1] = 0;
                }
                None if d == 0 => self.done = true,
                None => {
                    let c = self.order.pop().unwrap();
                    self.used &= !(1 << c);
                }
            }
        }
        None
    }
}

/// Stream of all consecutive clique orderings of `g`; empty exactly when `g`
/// is not an interval graph.
pub fn enumerate_clique_orders(g: &Graph) -> Result<CliqueOrders> {
    let cliques = g.maximal_cliques();
    let m = cliques.len();
    // chordal graphs have at most n maximal cliques, so this graph has no layout
    let hopeless = m > g.n();
    if m > MAX_LAYOUT_CLIQUES && !hopeless {
        return Err(Error::Capacity {
            what: "maximal clique count",
            actual: cliques.len(),
            limit: MAX_LAYOUT_CLIQUES,
        });
    }
    Ok(CliqueOrders {
        n: g.n(),
        cliques,
        order: Vec::with_capacity(m),
        cursor: vec![0; m + 1],
        seen: vec![VertexSet::EMPTY; m + 1],
        used: 0,
        done: m == 0 || hopeless,
    })
}

pub fn is_interval(g: &Graph) -> Result<bool> {
    Ok(enumerate_clique_orders(g)?.next().is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figures::fig1;

    fn is_consecutive(n: usize, order: &[VertexSet]) -> bool {
        (0..n).all(|v| {
            let pos: Vec<usize> = (0..order.len()).filter(|&i| order[i].contains(v)).collect();
            pos.windows(2).all(|w| w[1] == w[0] + 1)
        })
    }

    fn permutations(items: &[VertexSet]) -> Vec<Vec<VertexSet>> {
        if items.len() <= 1 {
            return vec![items.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.to_vec();
            let x = rest.remove(i);
            for mut p in permutations(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }

    // plain factorial iteration with a consecutiveness filter
    fn brute_orders(g: &Graph) -> Vec<Vec<VertexSet>> {
        permutations(&g.maximal_cliques())
            .into_iter()
            .filter(|p| is_consecutive(g.n(), p))
            .collect()
    }

    #[test]
    fn claw_has_six_layouts() {
        let g = Graph::star(3).unwrap();
        assert_eq!(enumerate_clique_orders(&g).unwrap().count(), 6);
        assert_eq!(brute_orders(&g).len(), 6);
    }

    #[test]
    fn path_has_two_layouts() {
        let g = Graph::path(4).unwrap();
        let layouts: Vec<_> = enumerate_clique_orders(&g).unwrap().collect();
        assert_eq!(layouts.len(), 2);
        assert_eq!(layouts[1], layouts[0].reversed());
        assert_eq!(layouts[0].ranges(), &[(1, 1), (1, 2), (2, 3), (3, 3)]);
    }

    #[test]
    fn c4_has_none() {
        let g = Graph::cycle(4).unwrap();
        assert_eq!(enumerate_clique_orders(&g).unwrap().count(), 0);
        assert!(!is_interval(&g).unwrap());
    }

    #[test]
    fn pruned_search_matches_factorial_filter() {
        let f = fig1();
        for g in [f.graph, Graph::star(4).unwrap(), Graph::path(5).unwrap()] {
            let fast: Vec<Vec<VertexSet>> = enumerate_clique_orders(&g)
                .unwrap()
                .map(|l| l.cliques().to_vec())
                .collect();
            assert_eq!(fast, brute_orders(&g));
        }
    }

    #[test]
    fn claw_ranges() {
        let g = Graph::star(3).unwrap();
        let l = enumerate_clique_orders(&g).unwrap().next().unwrap();
        assert_eq!(l.ranges(), &[(1, 3), (1, 1), (2, 2), (3, 3)]);
    }

    #[test]
    fn fig1_ranges_in_drawn_order() {
        let f = fig1();
        let l = f.drawn_layout();
        let want = [
            ("z", (2, 4)),
            ("a", (1, 2)),
            ("b", (1, 1)),
            ("e", (3, 3)),
            ("f", (3, 3)),
            ("c", (4, 4)),
            ("d", (4, 4)),
        ];
        for (name, r) in want {
            assert_eq!(l.range(f.id(name)), r, "{name}");
        }
    }

    #[test]
    fn capacity_is_explicit() {
        let g = Graph::star(10).unwrap();
        assert!(matches!(
            enumerate_clique_orders(&g),
            Err(Error::Capacity { actual: 10, .. })
        ));
    }

    #[test]
    fn too_many_cliques_for_a_chordal_graph() {
        // K_{2,2,2,2} minus nothing: 16 maximal cliques on 8 vertices
        let mut g = Graph::complete(8).unwrap();
        for i in 0..4 {
            g.remove_edge(2 * i, 2 * i + 1);
        }
        assert_eq!(g.maximal_cliques().len(), 16);
        assert_eq!(enumerate_clique_orders(&g).unwrap().count(), 0);
    }

    #[test]
    fn rejects_bad_layouts() {
        let g = Graph::path(4).unwrap();
        let c = g.maximal_cliques();
        assert!(CliqueLayout::new(&g, vec![c[0], c[2], c[1]]).is_err());
        assert!(CliqueLayout::new(&g, vec![c[0], c[1]]).is_err());
        assert!(CliqueLayout::new(&g, vec![c[2], c[1], c[0]]).is_ok());
    }
}
