//! Basepoints, local and side components, blocking and contributory sets, and
//! the four-way exterior/confined classification of side components with a
//! structural shape check for each category.
//!
//! All "potential" notions (potential side components, potential blocking
//! sets, confinement) quantify over every clique layout of the graph, which is
//! collected once in an [`Analysis`].

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::impropriety::{containment_profile, ContainmentProfile, ImpResult};
use crate::interval::{enumerate_clique_orders, CliqueLayout};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// The four kinds of side component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SideCategory {
    UnconfinedExterior,
    UnconfinedNonExterior,
    ConfinedNonExterior,
    ConfinedExterior,
}

impl SideCategory {
    pub fn of(exterior: bool, confined: bool) -> Self {
        match (exterior, confined) {
            (true, false) => SideCategory::UnconfinedExterior,
            (false, false) => SideCategory::UnconfinedNonExterior,
            (false, true) => SideCategory::ConfinedNonExterior,
            (true, true) => SideCategory::ConfinedExterior,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SideCategory::UnconfinedExterior => "unconfined-exterior",
            SideCategory::UnconfinedNonExterior => "unconfined-non-exterior",
            SideCategory::ConfinedNonExterior => "confined-non-exterior",
            SideCategory::ConfinedExterior => "confined-exterior",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub exterior: bool,
    pub confined: bool,
}

impl Classification {
    pub fn category(&self) -> SideCategory {
        SideCategory::of(self.exterior, self.confined)
    }
}

/// Outcome of checking a side component against the shape its category must
/// have in a minimal forbidden graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeMatch {
    pub category: SideCategory,
    pub matched: bool,
    /// First failing clause when `matched` is false.
    pub failure: Option<String>,
    /// Blocking part and contributory part used by the confined checks.
    pub blocking: VertexSet,
    pub contributory: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideReport {
    pub basepoint: usize,
    pub vertices: VertexSet,
    pub side: Side,
    pub exterior: bool,
    pub confined: bool,
    pub shape: ShapeMatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockingSet {
    pub vertices: VertexSet,
    /// Inclusion-maximal within its local component.
    pub maximal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SidePair {
    pub left: VertexSet,
    pub right: VertexSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Basepoints {
    pub vertices: VertexSet,
    pub value: usize,
}

pub fn local_components(g: &Graph, z: usize) -> Result<Vec<VertexSet>> {
    g.check_vertex(z)?;
    if g.n() < 2 {
        return Err(Error::VertexCount(g.n()));
    }
    g.components(Some(z))
}

/// Leftmost and rightmost local components of `z` by support.
pub fn side_components(g: &Graph, layout: &CliqueLayout, z: usize) -> Result<SidePair> {
    let comps = local_components(g, z)?;
    let left = *comps
        .iter()
        .min_by_key(|&&c| layout.support(c).0)
        .expect("n >= 2 gives a local component");
    let right = *comps.iter().max_by_key(|&&c| layout.support(c).1).unwrap();
    Ok(SidePair { left, right })
}

pub fn contributory_set(layout: &CliqueLayout, z: usize) -> VertexSet {
    layout.nested_in(z)
}

/// Vertices adjacent to `z`, not nested in `z` under `layout`, and not adjacent
/// to any vertex two or more hops from `z`.
pub fn blocking_candidates(g: &Graph, layout: &CliqueLayout, z: usize) -> VertexSet {
    let far = g.far_from(z);
    g.neighbors(z)
        .difference(layout.nested_in(z))
        .iter()
        .filter(|&v| g.neighbors(v).is_disjoint(far))
        .collect()
}

/// Maximal blocking set of each local component that has one, in local
/// component order.
pub fn blocking_sets(g: &Graph, layout: &CliqueLayout, z: usize) -> Result<Vec<BlockingSet>> {
    let cand = blocking_candidates(g, layout, z);
    Ok(local_components(g, z)?
        .into_iter()
        .map(|c| c.intersection(cand))
        .filter(|s| !s.is_empty())
        .map(|vertices| BlockingSet {
            vertices,
            maximal: true,
        })
        .collect())
}

/// Members of `set` reaching the `side` end of `z`'s range. When one local
/// component is both sides, each end has its own blocking set.
fn at_end(layout: &CliqueLayout, z: usize, side: Side, set: VertexSet) -> VertexSet {
    let (fz, lz) = layout.range(z);
    set.iter()
        .filter(|&v| match side {
            Side::Left => layout.range(v).0 <= fz,
            Side::Right => layout.range(v).1 >= lz,
        })
        .collect()
}

fn inclusion_maximal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp_members(*b)));
    sets.dedup();
    let mut out: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !s.is_empty() && !out.iter().any(|t| s.is_subset(*t)) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.cmp_members(*b));
    out
}

/// Every clique layout of a connected interval graph, with their containment
/// profiles and the resulting impropriety.
pub struct Analysis {
    graph: Graph,
    layouts: Vec<CliqueLayout>,
    profiles: Vec<ContainmentProfile>,
    imp: ImpResult,
}

impl Analysis {
    pub fn new(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let layouts: Vec<CliqueLayout> = enumerate_clique_orders(g)?.collect();
        if layouts.is_empty() {
            return Err(Error::NotInterval);
        }
        let profiles: Vec<ContainmentProfile> = layouts.iter().map(containment_profile).collect();
        let mut per_vertex_min = vec![usize::MAX; g.n()];
        for p in &profiles {
            for (m, &c) in per_vertex_min.iter_mut().zip(&p.counts) {
                *m = (*m).min(c);
            }
        }
        let best = (0..layouts.len())
            .min_by_key(|&i| (profiles[i].max_imp, i))
            .unwrap();
        let imp = ImpResult {
            imp: profiles[best].max_imp,
            witness: layouts[best].clone(),
            per_vertex_min,
            layout_count: layouts.len(),
        };
        Ok(Analysis {
            graph: *g,
            layouts,
            profiles,
            imp,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn layouts(&self) -> &[CliqueLayout] {
        &self.layouts
    }

    pub fn impropriety(&self) -> &ImpResult {
        &self.imp
    }

    /// Layouts attaining the impropriety.
    pub fn optimal_layouts(&self) -> impl Iterator<Item = &CliqueLayout> {
        let imp = self.imp.imp;
        self.layouts
            .iter()
            .zip(&self.profiles)
            .filter(move |(_, p)| p.max_imp == imp)
            .map(|(l, _)| l)
    }

    /// All vertices whose unavoidable containment count is largest.
    pub fn basepoints(&self) -> Basepoints {
        let value = *self.imp.per_vertex_min.iter().max().unwrap();
        let vertices = (0..self.graph.n())
            .filter(|&v| self.imp.per_vertex_min[v] == value)
            .collect();
        Basepoints { vertices, value }
    }

    fn check_local_component(&self, z: usize, h: VertexSet) -> Result<()> {
        if !local_components(&self.graph, z)?.contains(&h) {
            return Err(Error::NotLocalComponent(z));
        }
        Ok(())
    }

    fn is_side_in(&self, layout: &CliqueLayout, z: usize, h: VertexSet) -> bool {
        let sides = side_components(&self.graph, layout, z).unwrap();
        sides.left == h || sides.right == h
    }

    pub fn is_potential_side(&self, z: usize, h: VertexSet) -> Result<bool> {
        self.check_local_component(z, h)?;
        Ok(self.layouts.iter().any(|l| self.is_side_in(l, z, h)))
    }

    pub fn is_exterior(&self, z: usize, h: VertexSet) -> bool {
        !h.is_disjoint(self.graph.far_from(z))
    }

    /// Exterior by hop distance; unconfined when some layout puts `h` on a
    /// side with none of its vertices nested in `z`.
    pub fn classify_side_component(&self, z: usize, h: VertexSet) -> Result<Classification> {
        if !self.is_potential_side(z, h)? {
            return Err(Error::NotPotentialSide(z));
        }
        let unconfined = self
            .layouts
            .iter()
            .any(|l| self.is_side_in(l, z, h) && l.nested_in(z).is_disjoint(h));
        Ok(Classification {
            exterior: self.is_exterior(z, h),
            confined: !unconfined,
        })
    }

    /// Maximal sets that are blocking sets in some layout and lie in a
    /// potential side component of `z` other than the two sides of `layout`.
    pub fn interior_potential_blocking_sets(
        &self,
        z: usize,
        layout: &CliqueLayout,
    ) -> Result<Vec<VertexSet>> {
        let sides = side_components(&self.graph, layout, z)?;
        let mut found = Vec::new();
        for c in local_components(&self.graph, z)? {
            if c == sides.left || c == sides.right || !self.is_potential_side(z, c)? {
                continue;
            }
            for l in &self.layouts {
                found.push(blocking_candidates(&self.graph, l, z).intersection(c));
            }
        }
        Ok(inclusion_maximal(found))
    }

    pub fn interior_blocking_order(&self, z: usize, layout: &CliqueLayout) -> Result<usize> {
        Ok(self
            .interior_potential_blocking_sets(z, layout)?
            .iter()
            .map(|s| s.len())
            .max()
            .unwrap_or(0))
    }

    /// Largest blocking set inside `h` over all layouts.
    fn potential_blocking_order_within(&self, z: usize, h: VertexSet) -> usize {
        self.layouts
            .iter()
            .map(|l| blocking_candidates(&self.graph, l, z).intersection(h).len())
            .max()
            .unwrap_or(0)
    }

    /// Left and right side reports of `z` under `layout`.
    pub fn side_reports(&self, z: usize, layout: &CliqueLayout) -> Result<Vec<SideReport>> {
        let sides = side_components(&self.graph, layout, z)?;
        let mut out = Vec::with_capacity(2);
        for (side, h) in [(Side::Left, sides.left), (Side::Right, sides.right)] {
            let class = self.classify_side_component(z, h)?;
            let shape = self.match_shape(z, h, side, class, layout, sides)?;
            out.push(SideReport {
                basepoint: z,
                vertices: h,
                side,
                exterior: class.exterior,
                confined: class.confined,
                shape,
            });
        }
        Ok(out)
    }

    /// Side reports for every basepoint candidate under the witness layout.
    pub fn basepoint_reports(&self) -> Result<Vec<SideReport>> {
        if self.graph.n() < 2 {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for z in self.basepoints().vertices {
            out.extend(self.side_reports(z, &self.imp.witness)?);
        }
        Ok(out)
    }

    /// Some optimal layout has two distinct side components of `z`, both
    /// unconfined.
    pub fn has_two_unconfined_sides(&self, z: usize) -> Result<bool> {
        for l in self.optimal_layouts() {
            let sides = side_components(&self.graph, l, z)?;
            if sides.left == sides.right {
                continue;
            }
            if !self.classify_side_component(z, sides.left)?.confined
                && !self.classify_side_component(z, sides.right)?.confined
            {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn match_theorem_shape(
        &self,
        z: usize,
        report: &SideReport,
        layout: &CliqueLayout,
    ) -> Result<ShapeMatch> {
        let class = Classification {
            exterior: report.exterior,
            confined: report.confined,
        };
        let sides = side_components(&self.graph, layout, z)?;
        self.match_shape(z, report.vertices, report.side, class, layout, sides)
    }

    fn match_shape(
        &self,
        z: usize,
        h: VertexSet,
        side: Side,
        class: Classification,
        layout: &CliqueLayout,
        sides: SidePair,
    ) -> Result<ShapeMatch> {
        let g = &self.graph;
        let category = class.category();
        let nested = layout.nested_in(z).intersection(h);
        let candidates = blocking_candidates(g, layout, z).intersection(h);
        let mut blocking = VertexSet::EMPTY;
        let failure: Option<String> = match category {
            SideCategory::UnconfinedExterior => {
                let far = h.intersection(g.far_from(z));
                if h.len() != 2 {
                    Some(format!("expected 2 vertices, found {}", h.len()))
                } else if far.len() != 1 {
                    Some(format!("expected 1 exterior vertex, found {}", far.len()))
                } else {
                    let x = far.first().unwrap();
                    let y = h.without(x).first().unwrap();
                    (!(g.has_edge(x, y) && g.has_edge(y, z))).then(|| {
                        "connector not adjacent to both exterior vertex and basepoint".into()
                    })
                }
            }
            SideCategory::UnconfinedNonExterior => {
                let order = self.interior_blocking_order(z, layout)?;
                if !g.is_clique(h) {
                    Some("not a clique".into())
                } else if !h.is_subset(g.neighbors(z)) {
                    Some("not all adjacent to basepoint".into())
                } else if h.len() < order {
                    Some(format!(
                        "order {} below interior potential blocking order {order}",
                        h.len()
                    ))
                } else {
                    None
                }
            }
            SideCategory::ConfinedNonExterior => {
                blocking = at_end(layout, z, side, candidates);
                let order = self.interior_blocking_order(z, layout)?;
                let touching = self.touching(blocking, nested);
                if !h.is_subset(candidates.union(nested)) {
                    Some("vertices neither blocking nor contributory".into())
                } else if nested.is_empty() {
                    Some("empty contributory set".into())
                } else if blocking.is_empty() {
                    Some("empty blocking set".into())
                } else if !g.is_clique(blocking) {
                    Some("blocking set not a clique".into())
                } else if blocking.len() < order {
                    Some(format!(
                        "blocking order {} below interior potential blocking order {order}",
                        blocking.len()
                    ))
                } else if touching < 1 || touching > blocking.len() - 1 {
                    Some(format!(
                        "{touching} of {} blockers adjacent to contributory set, need 1..={}",
                        blocking.len(),
                        blocking.len() - 1
                    ))
                } else {
                    None
                }
            }
            SideCategory::ConfinedExterior => {
                let far = h.intersection(g.far_from(z));
                if far.len() != 1 {
                    Some(format!("expected 1 exterior vertex, found {}", far.len()))
                } else {
                    let x = far.first().unwrap();
                    let connectors = h.intersection(g.neighbors(x));
                    if connectors.len() != 1 {
                        Some(format!("expected 1 connector, found {}", connectors.len()))
                    } else {
                        let y = connectors.first().unwrap();
                        blocking = at_end(layout, z, side, candidates);
                        let touching = self.touching(blocking, nested);
                        if !h.without(x).without(y).is_subset(candidates.union(nested)) {
                            Some("vertices neither blocking nor contributory".into())
                        } else if nested.is_empty() {
                            Some("empty contributory set".into())
                        } else if nested.is_disjoint(g.neighbors(y)) {
                            Some("no contributory vertex adjacent to connector".into())
                        } else if blocking.is_empty() {
                            Some("empty blocking set".into())
                        } else if !g.is_clique(blocking) {
                            Some("blocking set not a clique".into())
                        } else if !blocking.is_subset(g.neighbors(z)) {
                            Some("blocker not adjacent to basepoint".into())
                        } else if !blocking.is_disjoint(g.neighbors(x)) {
                            Some("blocker adjacent to exterior vertex".into())
                        } else if touching > blocking.len() - 1 {
                            Some(format!(
                                "{touching} of {} blockers adjacent to contributory set, need at most {}",
                                blocking.len(),
                                blocking.len() - 1
                            ))
                        } else if sides.left != sides.right
                            && blocking.len() < self.potential_blocking_order_within(z, h)
                        {
                            Some("blocking set not of maximum order within the component".into())
                        } else {
                            None
                        }
                    }
                }
            }
        };
        let contributory = if class.confined {
            nested
        } else {
            VertexSet::EMPTY
        };
        Ok(ShapeMatch {
            category,
            matched: failure.is_none(),
            failure,
            blocking,
            contributory,
        })
    }

    fn touching(&self, blocking: VertexSet, contributory: VertexSet) -> usize {
        blocking
            .iter()
            .filter(|&b| !self.graph.neighbors(b).is_disjoint(contributory))
            .count()
    }
}

pub fn basepoint(g: &Graph) -> Result<Basepoints> {
    Ok(Analysis::new(g)?.basepoints())
}

pub fn classify_side_component(g: &Graph, z: usize, h: VertexSet) -> Result<Classification> {
    Analysis::new(g)?.classify_side_component(z, h)
}

pub fn interior_potential_blocking_sets(
    g: &Graph,
    z: usize,
    layout: &CliqueLayout,
) -> Result<Vec<VertexSet>> {
    Analysis::new(g)?.interior_potential_blocking_sets(z, layout)
}
