//! The two worked representations: a 2-improper graph on seven vertices and a
//! 4-improper graph on eleven vertices, with their interval coordinates.
//!
//! Where the drawings reuse a coordinate for two intervals, the second one is
//! shifted right by 1/64 so all endpoints are distinct; the shift never creates
//! or removes an intersection or a containment.

use crate::graph::{Graph, VertexSet};
use crate::interval::{intersection_graph, CliqueLayout, Rational, Realization};

#[derive(Clone, Debug)]
pub struct Figure {
    pub title: &'static str,
    pub names: Vec<&'static str>,
    pub graph: Graph,
    pub realization: Realization,
}

impl Figure {
    pub fn id(&self, name: &str) -> usize {
        self.names
            .iter()
            .position(|&n| n == name)
            .unwrap_or_else(|| panic!("no vertex named {name}"))
    }

    pub fn set(&self, names: &[&str]) -> VertexSet {
        names.iter().map(|n| self.id(n)).collect()
    }

    /// `"{a,b}"` in vertex-id order.
    pub fn names_of(&self, set: VertexSet) -> String {
        let parts: Vec<&str> = set.iter().map(|v| self.names[v]).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Clique order read off the drawing.
    pub fn drawn_layout(&self) -> CliqueLayout {
        self.realization
            .layout()
            .expect("figure realization is valid")
    }
}

const NUDGE: (i64, i64) = (1, 64);

fn q(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

fn nudged(x: Rational) -> Rational {
    x + Rational::new(NUDGE.0, NUDGE.1)
}

fn build(title: &'static str, rows: Vec<(&'static str, Rational, Rational)>) -> Figure {
    let names = rows.iter().map(|s| s.0).collect();
    let realization =
        Realization::new(rows.iter().map(|s| (s.1, s.2)).collect()).expect("valid coordinates");
    let graph = intersection_graph(&realization);
    Figure {
        title,
        names,
        graph,
        realization,
    }
}

/// Long interval `z`, an exterior pair `a,b` on the left, a clique `c,d` on
/// the right and the pair `e,f` drawn inside `z`.
pub fn fig1() -> Figure {
    build(
        "FIG1",
        vec![
            ("z", q(-3, 1), q(3, 1)),
            ("a", q(-4, 1), q(-5, 2)),
            ("b", q(-5, 1), q(-7, 2)),
            ("c", q(5, 2), q(4, 1)),
            ("d", nudged(q(5, 2)), nudged(q(4, 1))),
            ("e", q(-3, 4), q(3, 4)),
            ("f", nudged(q(-3, 4)), nudged(q(3, 4))),
        ],
    )
}

/// Basepoint `z`; left side `x, c, b1, b2, d1, d2` (exterior, confined), right
/// side `r1, r2, s1, s2` (non-exterior, confined). `d*` and `s*` are drawn
/// dark gray (contributory), `b*` and `r*` light gray (blocking).
pub fn fig2() -> Figure {
    build(
        "FIG2",
        vec![
            ("z", q(-3, 1), q(3, 1)),
            ("x", q(-21, 4), q(-15, 4)),
            ("c", q(-9, 2), q(-1, 2)),
            ("b1", q(-7, 2), q(-5, 2)),
            ("b2", nudged(q(-7, 2)), nudged(q(-5, 2))),
            ("d1", q(-9, 4), q(-5, 4)),
            ("d2", nudged(q(-9, 4)), nudged(q(-5, 4))),
            ("r1", q(2, 1), q(13, 4)),
            ("r2", q(11, 4), nudged(q(13, 4))),
            ("s1", q(5, 4), q(7, 4)),
            ("s2", nudged(q(5, 4)), q(5, 2)),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_names(f: &Figure) -> Vec<String> {
        let mut out: Vec<String> = f
            .graph
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (f.names[u], f.names[v]);
                if a < b {
                    format!("{a}-{b}")
                } else {
                    format!("{b}-{a}")
                }
            })
            .collect();
        out.sort();
        out
    }

    fn normalize(list: &[&str]) -> Vec<String> {
        let mut out: Vec<String> = list
            .iter()
            .map(|e| {
                let (a, b) = e.split_once('-').unwrap();
                if a < b {
                    format!("{a}-{b}")
                } else {
                    format!("{b}-{a}")
                }
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn fig1_edges() {
        let want = ["z-a", "a-b", "z-c", "z-d", "c-d", "z-e", "z-f", "e-f"];
        assert_eq!(edge_names(&fig1()), normalize(&want));
    }

    #[test]
    fn fig2_edges() {
        let want = [
            "x-c", "c-z", "c-b1", "c-b2", "c-d1", "c-d2", "b1-b2", "b1-z", "b2-z", "d1-d2", "d1-z",
            "d2-z", "z-r1", "z-r2", "r1-r2", "z-s1", "z-s2", "s1-s2", "s2-r1",
        ];
        assert_eq!(edge_names(&fig2()), normalize(&want));
    }

    #[test]
    fn drawn_containment() {
        let f = fig1();
        let counts = f.realization.containment_counts();
        assert_eq!(counts[f.id("z")], 2);
        assert_eq!(counts.iter().max(), Some(&2));

        let f = fig2();
        let counts = f.realization.containment_counts();
        assert_eq!(counts[f.id("z")], 4);
        assert_eq!(counts[f.id("c")], 4);
        assert_eq!(counts.iter().max(), Some(&4));
        let inside_z: VertexSet = (0..11).filter(|&u| f.realization.contains(0, u)).collect();
        assert_eq!(inside_z, f.set(&["d1", "d2", "s1", "s2"]));
    }
}
