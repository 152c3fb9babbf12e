//! Brute-force representation space: every sequence of the `2n` endpoint
//! events whose induced intersection graph is `G`. Exponential; only used as
//! an independent check of the clique-layout reduction.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_ENDPOINT_ORDER_VERTICES: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum End {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EndpointOrder {
    pub seq: Vec<(usize, End)>,
}

impl EndpointOrder {
    /// Positions of each vertex's left and right event.
    pub fn positions(&self, n: usize) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); n];
        for (i, &(v, end)) in self.seq.iter().enumerate() {
            match end {
                End::Left => pos[v].0 = i,
                End::Right => pos[v].1 = i,
            }
        }
        pos
    }

    /// Intersection graph: `u`, `w` meet unless one closes before the other opens.
    pub fn intersection_graph(&self, n: usize) -> Graph {
        let pos = self.positions(n);
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for w in u + 1..n {
                if !(pos[u].1 < pos[w].0 || pos[w].1 < pos[u].0) {
                    g.add_edge(u, w);
                }
            }
        }
        g
    }

    /// Per-vertex count of contained vertices: `u` inside `v` when `v` opens
    /// before `u` and `u` closes before `v`.
    pub fn containment_counts(&self, n: usize) -> Vec<usize> {
        let pos = self.positions(n);
        (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&u| u != v && pos[v].0 < pos[u].0 && pos[u].1 < pos[v].1)
                    .count()
            })
            .collect()
    }
}

fn check_capacity(g: &Graph) -> Result<()> {
    if g.n() > MAX_ENDPOINT_ORDER_VERTICES {
        return Err(Error::Capacity {
            what: "endpoint-order vertex count",
            actual: g.n(),
            limit: MAX_ENDPOINT_ORDER_VERTICES,
        });
    }
    Ok(())
}

struct Walk<'a, F> {
    g: &'a Graph,
    seq: Vec<(usize, End)>,
    started: VertexSet,
    open: VertexSet,
    visit: F,
}

impl<F: FnMut(&[(usize, End)])> Walk<'_, F> {
    fn step(&mut self) {
        let n = self.g.n();
        if self.seq.len() == 2 * n {
            (self.visit)(&self.seq);
            return;
        }
        for v in 0..n {
            let nb = self.g.neighbors(v);
            if !self.started.contains(v) {
                // everything still open overlaps v; nothing already closed may be a neighbour
                let closed = self.started.difference(self.open);
                if self.open.is_subset(nb) && closed.is_disjoint(nb) {
                    self.started = self.started.with(v);
                    self.open = self.open.with(v);
                    self.seq.push((v, End::Left));
                    self.step();
                    self.seq.pop();
                    self.open = self.open.without(v);
                    self.started = self.started.without(v);
                }
            } else if self.open.contains(v) && nb.is_subset(self.started) {
                self.open = self.open.without(v);
                self.seq.push((v, End::Right));
                self.step();
                self.seq.pop();
                self.open = self.open.with(v);
            }
        }
    }
}

/// Calls `visit` on every endpoint sequence realizing `g`.
pub fn for_each_endpoint_order<F: FnMut(&[(usize, End)])>(g: &Graph, visit: F) -> Result<()> {
    check_capacity(g)?;
    let mut walk = Walk {
        g,
        seq: Vec::with_capacity(2 * g.n()),
        started: VertexSet::EMPTY,
        open: VertexSet::EMPTY,
        visit,
    };
    walk.step();
    Ok(())
}

pub fn endpoint_orders(g: &Graph) -> Result<Vec<EndpointOrder>> {
    let mut out = Vec::new();
    for_each_endpoint_order(g, |seq| out.push(EndpointOrder { seq: seq.to_vec() }))?;
    Ok(out)
}
