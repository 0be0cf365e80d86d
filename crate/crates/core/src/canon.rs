//! Canonical forms of small graphs under vertex relabeling.
//!
//! The canonical key is the lexicographically greatest column encoding of the
//! adjacency matrix over all vertex orderings: placing vertices one at a time,
//! position p contributes a p-bit column of adjacencies to the already-placed
//! vertices. Only columns of maximal value can extend a prefix to the maximum,
//! which prunes hard on sparse graphs. Intended for desk-scale graphs (n <= 32).

use std::cmp::Ordering;

use crate::graph::GenericGraph;

/// Relabeling-invariant key: two graphs get equal keys iff they are isomorphic.
pub fn canonical_form(g: &GenericGraph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut masks = vec![0u32; n];
    for (u, v) in g.edges() {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    canonical_key(n, &masks)
}

/// Canonical key over raw adjacency bitmasks; the graph may be disconnected.
pub fn canonical_key(n: usize, adjacency_masks: &[u32]) -> Vec<u32> {
    assert!(n <= 32, "canonical keys support at most 32 vertices");
    assert_eq!(adjacency_masks.len(), n);
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        n,
        adj: adjacency_masks,
        chosen: Vec::with_capacity(n),
        partial: Vec::with_capacity(n - 1),
        best: None,
    };
    for root in 0..n {
        search.chosen.push(root);
        search.extend();
        search.chosen.pop();
    }
    let mut key = search.best.expect("at least one ordering exists");
    key.insert(0, n as u32);
    key
}

struct Search<'a> {
    n: usize,
    adj: &'a [u32],
    chosen: Vec<usize>,
    partial: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    fn extend(&mut self) {
        let p = self.chosen.len();
        if let Some(best) = &self.best {
            // A prefix strictly below the best string cannot recover.
            if self.partial.as_slice() < &best[..self.partial.len()] {
                return;
            }
        }
        if p == self.n {
            match &self.best {
                Some(best) if best.as_slice() >= self.partial.as_slice() => {}
                _ => self.best = Some(self.partial.clone()),
            }
            return;
        }
        let mut placed: u32 = 0;
        for &v in &self.chosen {
            placed |= 1 << v;
        }
        // Column code for each unplaced vertex; only maximal codes can extend
        // this prefix to the lexicographic maximum.
        let mut max_code = 0u32;
        let mut candidates: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if placed & (1 << v) != 0 {
                continue;
            }
            let mut code = 0u32;
            for (i, &u) in self.chosen.iter().enumerate() {
                if self.adj[v] & (1 << u) != 0 {
                    code |= 1 << (p - 1 - i);
                }
            }
            match code.cmp(&max_code) {
                Ordering::Greater => {
                    max_code = code;
                    candidates.clear();
                    candidates.push(v);
                }
                Ordering::Equal => candidates.push(v),
                Ordering::Less => {}
            }
        }
        for v in candidates {
            self.chosen.push(v);
            self.partial.push(max_code);
            self.extend();
            self.partial.pop();
            self.chosen.pop();
        }
    }
}
