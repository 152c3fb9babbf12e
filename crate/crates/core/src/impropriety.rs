//! Containment profiles and exact impropriety.
//!
//! Minimization runs over consecutive clique orderings, counting `u` as
//! contained in `v` exactly when `u`'s clique range is strictly nested in
//! `v`'s. [`impropriety_oracle`] recomputes the same quantity over raw
//! endpoint sequences and shares no code with the layout path.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{enumerate_clique_orders, for_each_endpoint_order, CliqueLayout};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentProfile {
    pub counts: Vec<usize>,
    pub max_imp: usize,
}

pub fn containment_profile(layout: &CliqueLayout) -> ContainmentProfile {
    let n = layout.n();
    let counts: Vec<usize> = (0..n).map(|v| layout.nested_in(v).len()).collect();
    let max_imp = counts.iter().copied().max().unwrap_or(0);
    ContainmentProfile { counts, max_imp }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImpResult {
    pub imp: usize,
    /// First optimal layout in lexicographic clique-permutation order.
    pub witness: CliqueLayout,
    /// Per-vertex minimum containment count over all layouts.
    pub per_vertex_min: Vec<usize>,
    pub layout_count: usize,
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

pub fn impropriety(g: &Graph) -> Result<ImpResult> {
    require_connected(g)?;
    let mut best: Option<(usize, CliqueLayout)> = None;
    let mut per_vertex_min = vec![usize::MAX; g.n()];
    let mut layout_count = 0;
    for layout in enumerate_clique_orders(g)? {
        layout_count += 1;
        let profile = containment_profile(&layout);
        for (m, &c) in per_vertex_min.iter_mut().zip(&profile.counts) {
            *m = (*m).min(c);
        }
        if best.as_ref().is_none_or(|(b, _)| profile.max_imp < *b) {
            best = Some((profile.max_imp, layout));
        }
    }
    let (imp, witness) = best.ok_or(Error::NotInterval)?;
    Ok(ImpResult {
        imp,
        witness,
        per_vertex_min,
        layout_count,
    })
}

/// Impropriety of a possibly disconnected interval graph: components can be
/// laid side by side, so this is the maximum over components.
pub fn componentwise_impropriety(g: &Graph) -> Result<usize> {
    let mut worst = 0;
    for comp in g.components(None)? {
        if comp.len() <= 2 {
            continue;
        }
        worst = worst.max(impropriety(&g.induced_subgraph(comp)?)?.imp);
    }
    Ok(worst)
}

/// Minimum, over every endpoint sequence realizing `g`, of the largest number
/// of intervals contained in one interval.
pub fn impropriety_oracle(g: &Graph) -> Result<usize> {
    require_connected(g)?;
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut start = vec![0usize; n];
    let mut end = vec![0usize; n];
    for_each_endpoint_order(g, |seq| {
        for (i, &(v, e)) in seq.iter().enumerate() {
            match e {
                crate::interval::End::Left => start[v] = i,
                crate::interval::End::Right => end[v] = i,
            }
        }
        let worst = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&u| start[v] < start[u] && end[u] < end[v])
                    .count()
            })
            .max()
            .unwrap_or(0);
        best = Some(best.map_or(worst, |b| b.min(worst)));
    })?;
    best.ok_or(Error::NotInterval)
}

/// Containments `z` cannot avoid in any layout.
pub fn vertex_min_impropriety(g: &Graph, z: usize) -> Result<usize> {
    g.check_vertex(z)?;
    Ok(impropriety(g)?.per_vertex_min[z])
}
