//! (1,2,2,2)-packing coloring of cubic trees with all leaves in class 1.
//!
//! The underlying induction: a tree with degrees in {1,3} always has a vertex
//! adjacent to two leaves; peel such a pair, color the smaller tree, then put
//! the pair back with class 1 and recolor the parent. Implemented iteratively
//! with a deterministic peel order (smallest parent id, smallest leaf ids).

use crate::generators::PlaneCubicTree;
use crate::graph::VertexId;
use crate::packing::Coloring;

/// Class indices for the (1,2,2,2) schedule: 1, 2a, 2b, 2c.
pub const CLASS_ONE: u32 = 1;
const TWO_CLASSES: [u32; 3] = [2, 3, 4];

pub fn lemma1_tree_coloring(tree: &PlaneCubicTree) -> Coloring {
    let order = tree.order();
    let mut alive = vec![true; order];
    let mut alive_count = order;
    let mut peeled: Vec<(VertexId, VertexId, VertexId)> = Vec::new();

    let alive_neighbors = |alive: &[bool], v: VertexId| -> Vec<VertexId> {
        tree.neighbors(v).iter().copied().filter(|&u| alive[u]).collect()
    };

    while alive_count > 4 {
        // Smallest-id vertex with at least two leaf neighbors in the current tree.
        let mut choice = None;
        'outer: for z in 0..order {
            if !alive[z] {
                continue;
            }
            let nbrs = alive_neighbors(&alive, z);
            if nbrs.len() != 3 {
                continue;
            }
            let leaves: Vec<VertexId> = nbrs
                .into_iter()
                .filter(|&u| alive_neighbors(&alive, u).len() == 1)
                .collect();
            if leaves.len() >= 2 {
                choice = Some((z, leaves[0], leaves[1]));
                break 'outer;
            }
        }
        let (z, x, y) = choice.expect("every cubic tree has a vertex adjacent to two leaves");
        alive[x] = false;
        alive[y] = false;
        alive_count -= 2;
        peeled.push((z, x, y));
    }

    // Base case: the four survivors form a star. Leaves get 1, the center 2a.
    let mut coloring = Coloring::empty(order);
    for v in 0..order {
        if alive[v] {
            let degree = alive_neighbors(&alive, v).len();
            coloring.set(v, if degree == 3 { TWO_CLASSES[0] } else { CLASS_ONE });
        }
    }

    for &(z, x, y) in peeled.iter().rev() {
        alive[x] = true;
        alive[y] = true;
        coloring.set(x, CLASS_ONE);
        coloring.set(y, CLASS_ONE);
        // z was a leaf of the peeled tree, so it currently holds class 1 and
        // has exactly one other neighbor.
        debug_assert_eq!(coloring.class_of(z), Some(CLASS_ONE));
        let z_third = *tree
            .neighbors(z)
            .iter()
            .find(|&&u| u != x && u != y)
            .expect("degree-3 parent keeps one neighbor");
        // Colors already used around the third neighbor: itself plus its
        // neighbors other than z.
        let mut blocked: Vec<u32> = Vec::new();
        if let Some(c) = coloring.class_of(z_third) {
            blocked.push(c);
        }
        for &u in tree.neighbors(z_third) {
            if u != z && alive[u] {
                if let Some(c) = coloring.class_of(u) {
                    blocked.push(c);
                }
            }
        }
        match TWO_CLASSES.iter().find(|c| !blocked.contains(c)) {
            Some(&free) => coloring.set(z, free),
            None => {
                // All three 2-classes sit on the third neighbor and its
                // surroundings; hand its class to z and demote it to 1.
                let inherited = coloring
                    .class_of(z_third)
                    .expect("third neighbor colored in the peeled tree");
                debug_assert!(TWO_CLASSES.contains(&inherited));
                coloring.set(z_third, CLASS_ONE);
                coloring.set(z, inherited);
            }
        }
    }
    coloring
}
