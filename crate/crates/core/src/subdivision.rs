//! Edge subdivision and the packing-coloring lift onto the subdivision.

use crate::distance::all_pairs_distances;
use crate::error::{Error, Result};
use crate::graph::GenericGraph;
use crate::packing::{verify_packing, Coloring, SPacking};

/// Replaces every edge uv by a path u-m-v. Subdivision vertices take ids
/// |V|.. in sorted edge order, so the mapping is reproducible.
pub fn subdivide(g: &GenericGraph) -> GenericGraph {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut new_edges = Vec::with_capacity(2 * edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        let m = n + i;
        new_edges.push((u, m));
        new_edges.push((m, v));
    }
    GenericGraph::from_edges(n + edges.len(), &new_edges)
        .expect("subdividing a connected simple graph keeps it connected and simple")
}

/// Lifts a valid (s_1,...,s_k)-packing coloring of g to a
/// (1, 2s_1+1, ..., 2s_k+1)-packing coloring of the subdivision: every
/// subdivision vertex gets class 1, every original class i moves to i+1.
pub fn lift_coloring(
    c: &Coloring,
    s: &SPacking,
    g: &GenericGraph,
) -> Result<(Coloring, SPacking)> {
    let oracle = all_pairs_distances(g)?;
    let report = verify_packing(g, s, c, &oracle)?;
    if !report.valid() {
        return Err(Error::InvalidInput(format!(
            "coloring is not a valid {s}-packing coloring ({} violations)",
            report.violations.len()
        )));
    }
    let mut lifted_s = vec![1];
    lifted_s.extend(s.values().iter().map(|&x| 2 * x + 1));
    let lifted_s = SPacking::new(lifted_s).expect("lift of a valid schedule is non-decreasing");

    let n = g.vertex_count();
    let m = g.edge_count();
    let mut classes = Vec::with_capacity(n + m);
    for v in 0..n {
        classes.push(c.class_of(v).expect("verified total") + 1);
    }
    classes.extend(std::iter::repeat(1).take(m));
    Ok((Coloring::from_classes(classes), lifted_s))
}
