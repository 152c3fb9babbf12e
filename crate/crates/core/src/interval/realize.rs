use num_rational::Ratio;

use super::layout::CliqueLayout;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub type Rational = Ratio<i64>;

/// Offsets inside a clique slot are multiples of this; at most 16 endpoints
/// share a slot, so `16 / 64 < 1/2` keeps neighbouring slots apart.
const SLOT_DENOMINATOR: i64 = 64;

/// Closed intervals on the real line, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    intervals: Vec<(Rational, Rational)>,
}

impl Realization {
    pub fn new(intervals: Vec<(Rational, Rational)>) -> Result<Self> {
        if intervals.is_empty() || intervals.len() > crate::graph::MAX_VERTICES {
            return Err(Error::VertexCount(intervals.len()));
        }
        if let Some(v) = intervals.iter().position(|(l, r)| l >= r) {
            return Err(Error::InvalidLayout(format!(
                "interval of vertex {v} has left >= right"
            )));
        }
        Ok(Realization { intervals })
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn has_distinct_endpoints(&self) -> bool {
        let mut all: Vec<Rational> = self.intervals.iter().flat_map(|&(l, r)| [l, r]).collect();
        all.sort();
        all.windows(2).all(|w| w[0] != w[1])
    }

    /// `u`'s interval lies strictly inside `v`'s.
    pub fn contains(&self, v: usize, u: usize) -> bool {
        let (lv, rv) = self.intervals[v];
        let (lu, ru) = self.intervals[u];
        lv < lu && ru < rv
    }

    /// Ordered pairs `(u, v)` with `u` properly contained in `v`.
    pub fn containment_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && self.contains(v, u) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Per-vertex count of properly contained intervals.
    pub fn containment_counts(&self) -> Vec<usize> {
        (0..self.n())
            .map(|v| {
                (0..self.n())
                    .filter(|&u| u != v && self.contains(v, u))
                    .count()
            })
            .collect()
    }

    /// Maximal cliques read left to right: the active set at every point where
    /// a left endpoint is immediately followed by a right endpoint.
    pub fn clique_sequence(&self) -> Vec<VertexSet> {
        let mut events: Vec<(Rational, bool, usize)> = self
            .intervals
            .iter()
            .enumerate()
            .flat_map(|(v, &(l, r))| [(l, false, v), (r, true, v)])
            .collect();
        // closed intervals: at a shared coordinate, openings come first
        events.sort();
        let mut active = VertexSet::EMPTY;
        let mut out = Vec::new();
        for (i, &(_, is_right, v)) in events.iter().enumerate() {
            if is_right {
                active = active.without(v);
            } else {
                active = active.with(v);
                if events.get(i + 1).is_some_and(|e| e.1) {
                    out.push(active);
                }
            }
        }
        out
    }

    /// The clique layout this realization induces.
    pub fn layout(&self) -> Result<CliqueLayout> {
        CliqueLayout::new(&intersection_graph(self), self.clique_sequence())
    }
}

pub fn intersection_graph(r: &Realization) -> Graph {
    let n = r.n();
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for w in u + 1..n {
            let (lu, ru) = r.intervals[u];
            let (lw, rw) = r.intervals[w];
            if lu.max(lw) <= ru.min(rw) {
                g.add_edge(u, w);
            }
        }
    }
    g
}

/// Places clique `k` at point `k`. Left endpoints of vertices starting at `k`
/// go in `(k - 1/2, k)` by ascending last position then id; right endpoints of
/// vertices ending at `k` go in `(k, k + 1/2)` by ascending first position
/// then id. Containment then happens exactly on strictly nested ranges.
pub fn realize(layout: &CliqueLayout) -> Realization {
    let n = layout.n();
    let half = Rational::new(1, 2);
    let mut intervals = vec![(Rational::from_integer(0), Rational::from_integer(0)); n];
    for k in 1..=layout.len() {
        let point = Rational::from_integer(k as i64);
        let mut starting: Vec<usize> = (0..n).filter(|&v| layout.range(v).0 == k).collect();
        starting.sort_by_key(|&v| (layout.range(v).1, v));
        for (j, &v) in starting.iter().enumerate() {
            intervals[v].0 = point - half + Rational::new(j as i64 + 1, SLOT_DENOMINATOR);
        }
        let mut ending: Vec<usize> = (0..n).filter(|&v| layout.range(v).1 == k).collect();
        ending.sort_by_key(|&v| (layout.range(v).0, v));
        for (j, &v) in ending.iter().enumerate() {
            intervals[v].1 = point + Rational::new(j as i64 + 1, SLOT_DENOMINATOR);
        }
    }
    Realization { intervals }
}

/// `"p/q"` with the fraction in lowest terms; integers keep `q = 1`.
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}
