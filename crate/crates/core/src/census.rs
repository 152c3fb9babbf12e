//! Minimal forbidden interval subgraphs for the class of p-improper interval
//! graphs: single-graph verdicts, exhaustive censuses over all connected
//! graphs of bounded order, and the constructive family of graphs whose two
//! side components are both unconfined.
//!
//! "Proper subgraph" is read as proper induced subgraph. Deleting a vertex
//! never increases impropriety, so checking the `n` single-vertex deletions
//! covers every proper induced subgraph.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::canon::{canonical_graph, CanonicalForm};
use crate::enumerate::connected_graphs_up_to;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6;
use crate::impropriety::{componentwise_impropriety, impropriety};
use crate::structure::{Analysis, SideReport};

pub const MAX_CENSUS_P: usize = 2;
pub const MAX_CENSUS_ORDER: usize = 8;
pub const MAX_CONSTRUCTION_P: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenVerdict {
    pub graph: Graph,
    pub p: usize,
    pub imp: usize,
    /// `deletion_imps[v]` is the impropriety of `G - v`.
    pub deletion_imps: Vec<usize>,
    pub minimal_forbidden: bool,
    /// Side reports for every basepoint candidate, under the witness layout.
    pub sides: Vec<SideReport>,
    /// Some basepoint has an optimal layout with two unconfined sides.
    pub two_unconfined: bool,
}

fn deletion_imps(g: &Graph) -> Result<Vec<usize>> {
    (0..g.n())
        .map(|v| match g.delete_vertex(v)? {
            Some(h) => componentwise_impropriety(&h),
            None => Ok(0),
        })
        .collect()
}

pub fn is_minimal_forbidden(g: &Graph, p: usize) -> Result<ForbiddenVerdict> {
    let analysis = Analysis::new(g)?;
    verdict_from(&analysis, p)
}

fn verdict_from(analysis: &Analysis, p: usize) -> Result<ForbiddenVerdict> {
    let g = analysis.graph();
    let imp = analysis.impropriety().imp;
    let deletion_imps = deletion_imps(g)?;
    let minimal_forbidden = imp == p + 1 && deletion_imps.iter().all(|&d| d <= p);
    let sides = analysis.basepoint_reports()?;
    let mut two_unconfined = false;
    if g.n() >= 2 {
        for z in analysis.basepoints().vertices {
            if analysis.has_two_unconfined_sides(z)? {
                two_unconfined = true;
                break;
            }
        }
    }
    Ok(ForbiddenVerdict {
        graph: *g,
        p,
        imp,
        deletion_imps,
        minimal_forbidden,
        sides,
        two_unconfined,
    })
}

/// `3 * 2^(k choose 2) - 2`: the count of minimal forbidden graphs with two
/// unconfined side components for the class of `(k-1)`-improper graphs.
pub fn two_unconfined_formula(k: usize) -> u64 {
    let pairs = k * k.saturating_sub(1) / 2;
    3 * (1u64 << pairs) - 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusMember {
    pub graph: Graph,
    pub form: CanonicalForm,
    pub graph6: String,
    pub verdict: ForbiddenVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRecord {
    pub p: usize,
    pub n_max: usize,
    /// Sorted by canonical form.
    pub members: Vec<CensusMember>,
    pub two_unconfined_count: usize,
    /// Formula value for the class parameter `p`, i.e. `k = p + 1`.
    pub formula_value: u64,
    pub graphs_scanned: usize,
    pub interval_graphs: usize,
}

impl CensusRecord {
    pub fn found(&self) -> Vec<String> {
        self.members.iter().map(|m| m.graph6.clone()).collect()
    }

    pub fn two_unconfined(&self) -> Vec<String> {
        self.members
            .iter()
            .filter(|m| m.verdict.two_unconfined)
            .map(|m| m.graph6.clone())
            .collect()
    }
}

fn check_census_bounds(p: usize, n_max: usize) -> Result<()> {
    if p > MAX_CENSUS_P {
        return Err(Error::Capacity {
            what: "census class parameter",
            actual: p,
            limit: MAX_CENSUS_P,
        });
    }
    if n_max == 0 || n_max > MAX_CENSUS_ORDER {
        return Err(Error::Capacity {
            what: "census order",
            actual: n_max,
            limit: MAX_CENSUS_ORDER,
        });
    }
    Ok(())
}

/// Exhaustive census of minimal forbidden graphs for the p-improper class on
/// at most `n_max` vertices, using the current rayon pool.
pub fn enumerate_minimal_forbidden(p: usize, n_max: usize) -> Result<CensusRecord> {
    check_census_bounds(p, n_max)?;
    let graphs: Vec<Graph> = connected_graphs_up_to(n_max)?
        .into_iter()
        .flatten()
        .collect();
    let scanned: Vec<Result<(bool, Option<CensusMember>)>> = graphs
        .par_iter()
        .map(|g| {
            let quick = match impropriety(g) {
                Ok(r) => r,
                Err(Error::NotInterval) => return Ok((false, None)),
                Err(e) => return Err(e),
            };
            if quick.imp != p + 1 {
                return Ok((true, None));
            }
            let verdict = is_minimal_forbidden(g, p)?;
            if !verdict.minimal_forbidden {
                return Ok((true, None));
            }
            let (canon, form) = canonical_graph(g);
            Ok((
                true,
                Some(CensusMember {
                    graph: canon,
                    form,
                    graph6: to_graph6(&canon),
                    verdict: if canon == *g {
                        verdict
                    } else {
                        is_minimal_forbidden(&canon, p)?
                    },
                }),
            ))
        })
        .collect();
    let mut members = Vec::new();
    let mut interval_graphs = 0;
    for r in scanned {
        let (interval, member) = r?;
        interval_graphs += interval as usize;
        members.extend(member);
    }
    members.sort_by_key(|m| m.form);
    members.dedup_by_key(|m| m.form);
    let two_unconfined_count = members.iter().filter(|m| m.verdict.two_unconfined).count();
    Ok(CensusRecord {
        p,
        n_max,
        members,
        two_unconfined_count,
        formula_value: two_unconfined_formula(p + 1),
        graphs_scanned: graphs.len(),
        interval_graphs,
    })
}

/// Runs `f` on a dedicated pool with `jobs` workers (`None`: rayon default).
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        None => f(),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(f),
    }
}

/// Side configuration of a constructed candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SideShape {
    /// A clique of this many vertices, each adjacent to the basepoint only.
    Clique(usize),
    /// A connector adjacent to the basepoint and one exterior vertex beyond it.
    Pendant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub graph: Graph,
    /// Bitmask over the `p choose 2` possible edges of the contributory graph.
    pub contributory_edges: u32,
    pub sides: (SideShape, SideShape),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructiveFamily {
    pub p: usize,
    /// One entry per isomorphism class of survivor, sorted by canonical form.
    pub survivors: Vec<(CanonicalForm, Construction)>,
    /// Number of (labeled contributory graph, side configuration) pairs with a
    /// surviving candidate for some clique size.
    pub labeled_count: usize,
    /// Survivors lacking two unconfined side components (expected empty).
    pub without_two_unconfined: Vec<String>,
}

impl ConstructiveFamily {
    pub fn graphs(&self) -> Vec<Graph> {
        self.survivors
            .iter()
            .map(|(_, c)| canonical_graph(&c.graph).0)
            .collect()
    }

    pub fn graph6(&self) -> Vec<String> {
        self.graphs().iter().map(to_graph6).collect()
    }
}

fn build_candidate(p: usize, mask: u32, sides: (SideShape, SideShape)) -> Result<Graph> {
    let extra = |s: SideShape| match s {
        SideShape::Clique(k) => k,
        SideShape::Pendant => 2,
    };
    let n = 1 + p + extra(sides.0) + extra(sides.1);
    let mut g = Graph::empty(n)?;
    for h in 1..=p {
        g.add_edge(0, h);
    }
    let mut bit = 0;
    for v in 2..=p {
        for u in 1..v {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    let mut next = p + 1;
    for s in [sides.0, sides.1] {
        match s {
            SideShape::Clique(k) => {
                let part: VertexSet = (next..next + k).collect();
                for v in part {
                    g.add_edge(0, v);
                    for u in part.without(v) {
                        g.add_edge(u, v);
                    }
                }
                next += k;
            }
            SideShape::Pendant => {
                g.add_edge(0, next);
                g.add_edge(next, next + 1);
                next += 2;
            }
        }
    }
    Ok(g)
}

fn side_configurations(p: usize) -> Vec<(SideShape, SideShape)> {
    let mut out = Vec::new();
    for a in 1..=p {
        for b in a..=p {
            out.push((SideShape::Clique(a), SideShape::Clique(b)));
        }
    }
    for a in 1..=p {
        out.push((SideShape::Pendant, SideShape::Clique(a)));
    }
    out.push((SideShape::Pendant, SideShape::Pendant));
    out
}

fn config_kind(sides: (SideShape, SideShape)) -> u8 {
    match sides {
        (SideShape::Clique(_), SideShape::Clique(_)) => 0,
        (SideShape::Pendant, SideShape::Pendant) => 2,
        _ => 1,
    }
}

/// Candidates built around a basepoint `z` with `p` contributory vertices
/// (every labeled graph on them), filtered to minimal forbidden graphs for
/// the `(p-1)`-improper class.
pub fn construct_two_unconfined_candidates(p: usize) -> Result<ConstructiveFamily> {
    if p == 0 || p > MAX_CONSTRUCTION_P {
        return Err(Error::Capacity {
            what: "constructive family size",
            actual: p,
            limit: MAX_CONSTRUCTION_P,
        });
    }
    let pairs = p * (p - 1) / 2;
    let jobs: Vec<(u32, (SideShape, SideShape))> = (0..1u32 << pairs)
        .flat_map(|mask| side_configurations(p).into_iter().map(move |s| (mask, s)))
        .collect();
    let results: Vec<Result<Option<(Construction, bool)>>> = jobs
        .par_iter()
        .map(|&(mask, sides)| {
            let g = build_candidate(p, mask, sides)?;
            match is_minimal_forbidden(&g, p - 1) {
                Ok(v) if v.minimal_forbidden => Ok(Some((
                    Construction {
                        graph: g,
                        contributory_edges: mask,
                        sides,
                    },
                    v.two_unconfined,
                ))),
                Ok(_) | Err(Error::NotInterval) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect();
    let mut labeled = BTreeSet::new();
    let mut unique: BTreeMap<CanonicalForm, Construction> = BTreeMap::new();
    let mut without = BTreeSet::new();
    for r in results {
        if let Some((c, two)) = r? {
            labeled.insert((c.contributory_edges, config_kind(c.sides)));
            let (canon, form) = canonical_graph(&c.graph);
            if !two {
                without.insert(to_graph6(&canon));
            }
            unique.entry(form).or_insert(c);
        }
    }
    Ok(ConstructiveFamily {
        p,
        survivors: unique.into_iter().collect(),
        labeled_count: labeled.len(),
        without_two_unconfined: without.into_iter().collect(),
    })
}

pub fn construct_theorem6_family(p: usize) -> Result<Vec<Graph>> {
    Ok(construct_two_unconfined_candidates(p)?.graphs())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exhaustive,
    Constructive,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::Constructive => "constructive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaReport {
    pub p_class: usize,
    /// Number of contributory vertices, `p_class + 1`.
    pub p: usize,
    pub formula: u64,
    pub method: Method,
    pub n_max: Option<usize>,
    /// Census members with two unconfined sides (exhaustive method only).
    pub census_count: Option<usize>,
    pub census_witnesses: Vec<String>,
    pub labeled_construction_count: usize,
    pub unlabeled_construction: Vec<String>,
    /// Exhaustive: census count equals the formula. Constructive: the labeled
    /// construction count equals the formula.
    pub agree: bool,
    pub in_census_not_constructed: Vec<String>,
    pub constructed_not_in_census: Vec<String>,
    pub note: Option<String>,
}

pub fn verify_theorem6(p_class: usize, n_max: usize) -> Result<FormulaReport> {
    let p = p_class + 1;
    let formula = two_unconfined_formula(p);
    let family = construct_two_unconfined_candidates(p)?;
    let constructed = family.graph6();
    let labeled = family.labeled_count;
    let mut report = FormulaReport {
        p_class,
        p,
        formula,
        method: Method::Constructive,
        n_max: None,
        census_count: None,
        census_witnesses: Vec::new(),
        labeled_construction_count: labeled,
        unlabeled_construction: constructed.clone(),
        agree: labeled as u64 == formula,
        in_census_not_constructed: Vec::new(),
        constructed_not_in_census: Vec::new(),
        note: None,
    };
    if p_class > 1 {
        report.note = Some(format!(
            "beyond exhaustive bound; constructive generator used ({} labeled, {} unlabeled)",
            labeled,
            constructed.len()
        ));
        return Ok(report);
    }
    let census = enumerate_minimal_forbidden(p_class, n_max)?;
    let witnesses = census.two_unconfined();
    let census_set: BTreeSet<&String> = witnesses.iter().collect();
    let built_set: BTreeSet<&String> = constructed.iter().collect();
    report.method = Method::Exhaustive;
    report.n_max = Some(n_max);
    report.census_count = Some(witnesses.len());
    report.agree = witnesses.len() as u64 == formula;
    report.in_census_not_constructed = census_set
        .difference(&built_set)
        .map(|s| s.to_string())
        .collect();
    report.constructed_not_in_census = built_set
        .difference(&census_set)
        .map(|s| s.to_string())
        .collect();
    report.census_witnesses = witnesses;
    if !report.agree {
        report.note = Some(format!(
            "census finds {} graphs with two unconfined sides, formula gives {formula}",
            report.census_count.unwrap()
        ));
    }
    Ok(report)
}

/// One-vertex extensions of `g` (every nonempty attachment) that are
/// themselves minimal forbidden for the same class. Non-interval extensions
/// are outside the class universe and skipped.
pub fn minimal_extensions(g: &Graph, p: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for mask in 1u32..1 << g.n() {
        let h = g.with_vertex(VertexSet(mask))?;
        match is_minimal_forbidden(&h, p) {
            Ok(v) if v.minimal_forbidden => out.push(h),
            Ok(_) | Err(Error::NotInterval) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figures::fig1;

    #[test]
    fn claw_is_minimal_for_proper() {
        let v = is_minimal_forbidden(&Graph::star(3).unwrap(), 0).unwrap();
        assert!(v.minimal_forbidden);
        assert_eq!(v.imp, 1);
        assert_eq!(v.deletion_imps, vec![0, 0, 0, 0]);
        assert!(v.two_unconfined);
    }

    #[test]
    fn path_is_not_forbidden() {
        let v = is_minimal_forbidden(&Graph::path(4).unwrap(), 0).unwrap();
        assert!(!v.minimal_forbidden);
        assert_eq!(v.imp, 0);
    }

    #[test]
    fn fig1_is_minimal_for_one_improper() {
        let v = is_minimal_forbidden(&fig1().graph, 1).unwrap();
        assert!(v.minimal_forbidden);
        assert_eq!(v.imp, 2);
        assert_eq!(v.deletion_imps.len(), 7);
        assert!(v.deletion_imps.iter().all(|&d| d <= 1));
        assert!(v.two_unconfined);
    }

    #[test]
    fn non_interval_is_an_error() {
        assert_eq!(
            is_minimal_forbidden(&Graph::cycle(4).unwrap(), 0).err(),
            Some(Error::NotInterval)
        );
    }

    #[test]
    fn formula_values() {
        assert_eq!(two_unconfined_formula(1), 1);
        assert_eq!(two_unconfined_formula(2), 4);
        assert_eq!(two_unconfined_formula(3), 22);
    }

    #[test]
    fn tiny_census_is_empty() {
        let r = enumerate_minimal_forbidden(0, 3).unwrap();
        assert!(r.members.is_empty());
        assert_eq!(r.two_unconfined_count, 0);
    }

    #[test]
    fn census_bounds() {
        assert!(matches!(
            enumerate_minimal_forbidden(3, 5),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            enumerate_minimal_forbidden(0, 9),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn family_for_one_is_the_claw() {
        let fam = construct_theorem6_family(1).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(to_graph6(&fam[0]), "Cs");
    }

    #[test]
    fn family_for_two_contains_fig1() {
        let fam = construct_two_unconfined_candidates(2).unwrap();
        let fig = crate::canon::canonical_form(&fig1().graph);
        assert!(fam.survivors.iter().any(|(f, _)| *f == fig));
        // edgeless contributory pair with an exterior side is never minimal
        assert!(fam
            .survivors
            .iter()
            .all(|(_, c)| c.contributory_edges == 1 || c.sides.0 != SideShape::Pendant));
        let rejected = build_candidate(2, 0, (SideShape::Pendant, SideShape::Pendant)).unwrap();
        assert!(
            !is_minimal_forbidden(&rejected, 1)
                .unwrap()
                .minimal_forbidden
        );
    }
}
