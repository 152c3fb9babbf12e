//! Canonical labeling by individualization and refinement.
//!
//! The search tree branches on the first non-singleton cell of an equitable
//! ordered partition. Vertices of that cell which are twins of an already
//! explored vertex are skipped, since swapping twins is an automorphism fixing
//! every individualized vertex. The certificate is the largest adjacency code
//! over all leaves.

use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6;

/// Isomorphism certificate: equal exactly for isomorphic graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Big-endian byte form; ordering agrees with `Ord`.
    pub fn to_bytes(&self) -> [u8; 17] {
        let mut out = [0u8; 17];
        out[0] = self.n;
        out[1..].copy_from_slice(&self.code.to_be_bytes());
        out
    }
}

/// Upper-triangle adjacency bits in graph6 order, first bit most significant.
pub(crate) fn adjacency_code(g: &Graph) -> u128 {
    let mut code = 0u128;
    for v in 1..g.n() {
        for u in 0..v {
            code = code << 1 | g.has_edge(u, v) as u128;
        }
    }
    code
}

type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let before = cells.len();
        let mut s = 0;
        while s < cells.len() {
            let splitter: VertexSet = cells[s].iter().copied().collect();
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| (g.neighbors(v).intersection(splitter).len(), v))
                    .collect();
                // higher counts first; order inside a cell carries no meaning
                keyed.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            cells = next;
            s += 1;
        }
        if cells.len() == before {
            return cells;
        }
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Partition) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let mut perm = vec![0; self.g.n()];
            for (pos, cell) in cells.iter().enumerate() {
                perm[cell[0]] = pos;
            }
            let code = adjacency_code(&self.g.relabel(&perm));
            if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                self.best = Some((code, perm));
            }
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&r| are_twins(self.g, r, v)) {
                continue;
            }
            tried.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            let child = refine(self.g, child);
            self.visit(child);
        }
    }
}

/// Canonical relabeling permutation (`perm[v]` is the new label of `v`).
pub fn canonical_permutation(g: &Graph) -> Vec<usize> {
    let start = refine(g, vec![(0..g.n()).collect()]);
    let mut search = Search { g, best: None };
    search.visit(start);
    search.best.unwrap().1
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let perm = canonical_permutation(g);
    CanonicalForm {
        n: g.n() as u8,
        code: adjacency_code(&g.relabel(&perm)),
    }
}

/// The canonically relabeled copy of `g` and its certificate.
pub fn canonical_graph(g: &Graph) -> (Graph, CanonicalForm) {
    let perm = canonical_permutation(g);
    let c = g.relabel(&perm);
    let form = CanonicalForm {
        n: g.n() as u8,
        code: adjacency_code(&c),
    };
    (c, form)
}

pub fn canonical_graph6(g: &Graph) -> String {
    to_graph6(&canonical_graph(g).0)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}
