//! JSON report. Field order is the serialization order; absent values are
//! `null` so every report has the same keys.

use improper::census::{CensusRecord, ForbiddenVerdict, FormulaReport};
use improper::interval::{format_rational, Realization};
use improper::structure::{Analysis, SideReport};
use improper::{Graph, VertexSet};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Report {
    pub graph: String,
    pub canonical: String,
    pub n: usize,
    pub connected: bool,
    pub interval: bool,
    pub imp: Option<usize>,
    pub vertex_min: Option<Vec<usize>>,
    pub witness: Option<Vec<Vec<usize>>>,
    pub basepoints: Option<Vec<usize>>,
    pub basepoint_value: Option<usize>,
    pub sides: Option<Vec<SideJson>>,
    pub verdict: Option<VerdictJson>,
    pub representation: Option<Vec<(usize, String, String)>>,
    pub oracle_imp: Option<usize>,
    pub layouts: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct SideJson {
    pub basepoint: usize,
    pub side: String,
    pub vertices: Vec<usize>,
    pub exterior: bool,
    pub confined: bool,
    pub category: &'static str,
    pub shape_matched: bool,
    pub shape_failure: Option<String>,
    pub contributory: Vec<usize>,
    pub blocking: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct VerdictJson {
    pub p: usize,
    pub imp: usize,
    pub minimal_forbidden: bool,
    pub deletion_imps: Vec<usize>,
    pub two_unconfined: bool,
}

#[derive(Debug, Serialize)]
pub struct CensusSummary {
    pub p: usize,
    pub max_n: usize,
    pub count: usize,
    pub graphs_scanned: usize,
    pub interval_graphs: usize,
    pub two_unconfined_count: usize,
    pub two_unconfined: Vec<String>,
    pub formula: u64,
    pub formula_agrees: bool,
}

#[derive(Debug, Serialize)]
pub struct FormulaJson {
    pub p_class: usize,
    pub p: usize,
    pub formula: u64,
    pub method: &'static str,
    pub n_max: Option<usize>,
    pub census_count: Option<usize>,
    pub census_witnesses: Vec<String>,
    pub labeled_construction_count: usize,
    pub unlabeled_construction: Vec<String>,
    pub agree: bool,
    pub in_census_not_constructed: Vec<String>,
    pub constructed_not_in_census: Vec<String>,
    pub note: Option<String>,
}

impl Report {
    pub fn new(input: &str, canonical: &str, g: &Graph, interval: bool) -> Self {
        Report {
            graph: input.to_owned(),
            canonical: canonical.to_owned(),
            n: g.n(),
            connected: g.is_connected(),
            interval,
            imp: None,
            vertex_min: None,
            witness: None,
            basepoints: None,
            basepoint_value: None,
            sides: None,
            verdict: None,
            representation: None,
            oracle_imp: None,
            layouts: None,
        }
    }

    pub fn fill_impropriety(&mut self, a: &Analysis) {
        let r = a.impropriety();
        self.imp = Some(r.imp);
        self.vertex_min = Some(r.per_vertex_min.clone());
        self.witness = Some(r.witness.cliques().iter().map(|c| c.to_vec()).collect());
        self.representation = Some(representation(&improper::interval::realize(&r.witness)));
        self.layouts = Some(r.layout_count);
    }

    pub fn fill_basepoints(&mut self, a: &Analysis) {
        let b = a.basepoints();
        self.basepoints = Some(b.vertices.to_vec());
        self.basepoint_value = Some(b.value);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub fn representation(r: &Realization) -> Vec<(usize, String, String)> {
    r.intervals()
        .iter()
        .enumerate()
        .map(|(v, (l, h))| (v, format_rational(l), format_rational(h)))
        .collect()
}

fn members(s: VertexSet) -> Vec<usize> {
    s.to_vec()
}

pub fn side_json(r: &SideReport) -> SideJson {
    SideJson {
        basepoint: r.basepoint,
        side: r.side.to_string(),
        vertices: members(r.vertices),
        exterior: r.exterior,
        confined: r.confined,
        category: r.shape.category.as_str(),
        shape_matched: r.shape.matched,
        shape_failure: r.shape.failure.clone(),
        contributory: members(r.shape.contributory),
        blocking: members(r.shape.blocking),
    }
}

pub fn verdict_json(v: &ForbiddenVerdict) -> VerdictJson {
    VerdictJson {
        p: v.p,
        imp: v.imp,
        minimal_forbidden: v.minimal_forbidden,
        deletion_imps: v.deletion_imps.clone(),
        two_unconfined: v.two_unconfined,
    }
}

pub fn census_summary(c: &CensusRecord) -> CensusSummary {
    CensusSummary {
        p: c.p,
        max_n: c.n_max,
        count: c.members.len(),
        graphs_scanned: c.graphs_scanned,
        interval_graphs: c.interval_graphs,
        two_unconfined_count: c.two_unconfined_count,
        two_unconfined: c.two_unconfined(),
        formula: c.formula_value,
        formula_agrees: c.two_unconfined_count as u64 == c.formula_value,
    }
}

pub fn formula_json(r: &FormulaReport) -> FormulaJson {
    FormulaJson {
        p_class: r.p_class,
        p: r.p,
        formula: r.formula,
        method: r.method.as_str(),
        n_max: r.n_max,
        census_count: r.census_count,
        census_witnesses: r.census_witnesses.clone(),
        labeled_construction_count: r.labeled_construction_count,
        unlabeled_construction: r.unlabeled_construction.clone(),
        agree: r.agree,
        in_census_not_constructed: r.in_census_not_constructed.clone(),
        constructed_not_in_census: r.constructed_not_in_census.clone(),
        note: r.note.clone(),
    }
}
