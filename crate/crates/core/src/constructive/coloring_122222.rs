//! (1,2,2,2,2,2)-packing coloring of cubic Halin graphs.
//!
//! The tree takes the (1,2,2,2) coloring with all leaves in class 1; the
//! cycle is then rewritten as a cyclic concatenation of the blocks
//! (1, 2d, 2e) and (1, 2d, 1, 2e), which exists whenever n = 3a + 4b, i.e.
//! for every n >= 3 except n = 5. The n = 5 instance falls back to a
//! bounded completion search over the cycle vertices (and, failing that, the
//! exact solver), always flagged in the diagnostics.

use crate::distance::{all_pairs_distances, DistanceOracle};
use crate::error::{Error, Result};
use crate::generators::PlaneCubicTree;
use crate::halin::HalinGraph;
use crate::packing::{verify_packing, Coloring, SPacking};
use crate::solver::{decide, SearchConfig, SolveStatus};

use super::{lemma1_tree_coloring, ColoringDiagnostics};

/// Class indices for the (1,2,2,2,2,2) schedule: 1, 2a..2e.
const CLASS_ONE: u32 = 1;
const CLASS_2D: u32 = 5;
const CLASS_2E: u32 = 6;

const BLOCK3: [u32; 3] = [CLASS_ONE, CLASS_2D, CLASS_2E];
const BLOCK4: [u32; 4] = [CLASS_ONE, CLASS_2D, CLASS_ONE, CLASS_2E];

/// Numbers of (len 3, len 4) blocks tiling a cycle of length n; none for n = 5.
pub(crate) fn block_split(n: usize) -> Option<(usize, usize)> {
    if n < 3 || n == 5 {
        return None;
    }
    let four = match n % 3 {
        0 => 0,
        1 => 1,
        _ => 2,
    };
    Some(((n - 4 * four) / 3, four))
}

pub fn color_122222(h: &HalinGraph) -> Result<(Coloring, ColoringDiagnostics)> {
    let schedule = SPacking::new(vec![1, 2, 2, 2, 2, 2]).expect("static schedule");
    let g = h.full_graph();
    let oracle = all_pairs_distances(&g)?;
    let n = h.cycle_len();
    let mut diag = ColoringDiagnostics::new(n);

    let tree = PlaneCubicTree::from_halin(h);
    let mut coloring = lemma1_tree_coloring(&tree);

    match block_split(n) {
        Some((threes, fours)) => {
            let mut pos = 0isize;
            for _ in 0..threes {
                for &class in &BLOCK3 {
                    coloring.set(h.cycle_vertex(pos), class);
                    pos += 1;
                }
            }
            for _ in 0..fours {
                for &class in &BLOCK4 {
                    coloring.set(h.cycle_vertex(pos), class);
                    pos += 1;
                }
            }
            debug_assert_eq!(pos as usize, n);
        }
        None => {
            // n = 5: the block alphabet cannot tile the cycle. Recolor the
            // five cycle vertices by bounded search against the fixed tree
            // colors, reusing tree 2-classes where distances allow.
            diag.fallback_used = true;
            match complete_cycle(h, &coloring, &oracle, schedule.class_count() as u32) {
                Some(completed) => coloring = completed,
                None => {} // leave the all-1 cycle for the verifier to reject
            }
        }
    }

    let report = verify_packing(&g, &schedule, &coloring, &oracle)?;
    if !report.valid() {
        diag.fallback_used = true;
        let repaired = decide(&g, &schedule, &SearchConfig::default())?;
        match repaired.status {
            SolveStatus::Sat(c) => coloring = c,
            _ => {
                return Err(Error::FallbackExhausted(format!(
                    "(1,2,2,2,2,2) coloring of a {}-vertex cubic Halin graph",
                    h.order()
                )));
            }
        }
    }
    Ok((coloring, diag))
}

/// First cycle recoloring (in lexicographic order) compatible with the fixed
/// tree colors, or None if the tree coloring admits no completion.
fn complete_cycle(
    h: &HalinGraph,
    base: &Coloring,
    oracle: &DistanceOracle,
    class_count: u32,
) -> Option<Coloring> {
    let schedule = SPacking::new(vec![1, 2, 2, 2, 2, 2]).expect("static schedule");
    let order = h.order();
    let cycle = h.cycle_order().to_vec();
    let mut coloring = base.clone();
    for &v in &cycle {
        coloring.clear(v);
    }
    fn feasible(
        coloring: &Coloring,
        oracle: &DistanceOracle,
        schedule: &SPacking,
        order: usize,
        v: usize,
        class: u32,
    ) -> bool {
        let bound = schedule.constraint(class) + 1;
        (0..order).all(|u| {
            u == v || coloring.class_of(u) != Some(class) || oracle.distance(u, v) >= bound
        })
    }
    fn rec(
        coloring: &mut Coloring,
        cycle: &[usize],
        idx: usize,
        oracle: &DistanceOracle,
        schedule: &SPacking,
        order: usize,
        class_count: u32,
    ) -> bool {
        if idx == cycle.len() {
            return true;
        }
        let v = cycle[idx];
        for class in 1..=class_count {
            if feasible(coloring, oracle, schedule, order, v, class) {
                coloring.set(v, class);
                if rec(coloring, cycle, idx + 1, oracle, schedule, order, class_count) {
                    return true;
                }
                coloring.clear(v);
            }
        }
        false
    }
    if rec(
        &mut coloring,
        &cycle,
        0,
        oracle,
        &schedule,
        order,
        class_count,
    ) {
        Some(coloring)
    } else {
        None
    }
}
