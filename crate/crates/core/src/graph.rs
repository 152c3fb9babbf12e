//! Simple undirected graphs on at most 16 vertices, stored as one adjacency
//! bitmask per vertex.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 16;

/// A set of vertices of a graph with at most [`MAX_VERTICES`] vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        VertexSet(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares two sets by their ascending member lists.
    pub fn cmp_members(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_VERTICES],
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u != v {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            g.adj[u] = VertexSet::full(n).without(u).0;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Add an undirected edge; self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n);
        if u != v {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut out = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for (u, v) in self.edges() {
            out.add_edge(perm[u], perm[v]);
        }
        out
    }

    /// Graph on one more vertex, adjacent to exactly `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        if self.n == MAX_VERTICES {
            return Err(Error::VertexCount(self.n + 1));
        }
        let mut g = *self;
        let v = self.n;
        g.n += 1;
        for u in nbrs.intersection(self.vertices()) {
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in ascending vertex order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(v) = s.difference(self.vertices()).first() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let members = s.to_vec();
        let mut g = Graph::empty(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &w) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, w) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Graph with vertex `v` deleted, or `None` when that leaves no vertices.
    pub fn delete_vertex(&self, v: usize) -> Result<Option<Graph>> {
        self.check_vertex(v)?;
        let rest = self.vertices().without(v);
        if rest.is_empty() {
            return Ok(None);
        }
        self.induced_subgraph(rest).map(Some)
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.neighbors(v));
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, within);
            out.push(c);
            left = left.difference(c);
        }
        out
    }

    pub fn components(&self, removed: Option<usize>) -> Result<Vec<VertexSet>> {
        let mut within = self.vertices();
        if let Some(z) = removed {
            self.check_vertex(z)?;
            within = within.without(z);
        }
        Ok(self.components_within(within))
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertices()) == self.vertices()
    }

    /// Breadth-first hop distances from `source`; `None` for unreachable vertices.
    pub fn distances(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for u in self.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        Ok(dist)
    }

    /// Components of `G - removed` together with distances measured in `G`
    /// (not in the deleted graph) from `source`.
    pub fn components_and_distances(
        &self,
        removed: Option<usize>,
        source: usize,
    ) -> Result<(Vec<VertexSet>, Vec<Option<usize>>)> {
        if removed.is_some() && self.n < 2 {
            return Err(Error::VertexCount(self.n));
        }
        Ok((self.components(removed)?, self.distances(source)?))
    }

    /// Vertices at hop distance at least 2 from `z` (including unreachable ones).
    pub fn far_from(&self, z: usize) -> VertexSet {
        self.vertices().without(z).difference(self.neighbors(z))
    }

    /// All inclusion-maximal cliques, sorted by their ascending member lists.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.bron_kerbosch(
            VertexSet::EMPTY,
            self.vertices(),
            VertexSet::EMPTY,
            &mut out,
        );
        out.sort_by(|a, b| a.cmp_members(*b));
        out
    }

    fn bron_kerbosch(&self, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.intersection(self.neighbors(u)).len())
            .unwrap();
        let (mut p, mut x) = (p, x);
        for v in p.difference(self.neighbors(pivot)) {
            let nv = self.neighbors(v);
            self.bron_kerbosch(r.with(v), p.intersection(nv), x.intersection(nv), out);
            p = p.without(v);
            x = x.with(v);
        }
    }

    /// True if some four vertices induce `K_{1,3}`.
    pub fn has_induced_claw(&self) -> bool {
        (0..self.n).any(|c| {
            let nb = self.neighbors(c).to_vec();
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &d in &nb[j + 1..] {
                        if !self.has_edge(a, d) && !self.has_edge(b, d) {
                            return true;
                        }
                    }
                }
            }
            false
        })
    }
}
