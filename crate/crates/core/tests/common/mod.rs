//! Shared test substrate: a naive packing-colorability oracle, an
//! isomorphism-free catalogue of all small connected graphs, and a
//! brute-force isomorphism test. All of it is independent of the library's
//! search and canonicalization paths it is used to check.

// Each test target compiles this module separately and uses a subset of it.
#![allow(dead_code)]

use halin_packing::canon::canonical_key;
use halin_packing::GenericGraph;
use std::collections::HashMap;

/// Naive oracle: walks all k^n assignments in lexicographic order (an
/// odometer over class vectors) and accepts the first one where every
/// same-class pair respects its distance bound.
pub fn naive_decide(g: &GenericGraph, schedule: &[u32]) -> bool {
    let n = g.vertex_count();
    let dist = bfs_all_pairs(g);
    let k = schedule.len();
    let mut assign = vec![0usize; n];
    loop {
        if assignment_valid(n, &dist, schedule, &assign) {
            return true;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            assign[i] += 1;
            if assign[i] < k {
                break;
            }
            assign[i] = 0;
        }
    }
}

fn assignment_valid(n: usize, dist: &[Vec<u32>], schedule: &[u32], assign: &[usize]) -> bool {
    for u in 0..n {
        for v in (u + 1)..n {
            if assign[u] == assign[v] && dist[u][v] < schedule[assign[u]] + 1 {
                return false;
            }
        }
    }
    true
}

fn bfs_all_pairs(g: &GenericGraph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut dist = vec![vec![u32::MAX; n]; n];
    for s in 0..n {
        dist[s][s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if dist[s][v] == u32::MAX {
                    dist[s][v] = dist[s][u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    dist
}

/// Every connected graph with 1..=max_n vertices, one representative per
/// isomorphism class, as adjacency bitmasks. Grown one vertex at a time with
/// canonical-key dedup; class counts are pinned against the published values
/// so the catalogue is known to be complete.
pub fn connected_graph_catalogue(max_n: usize) -> Vec<Vec<u32>> {
    assert!(max_n >= 1 && max_n <= 8);
    // All graphs (connected or not) per order, then the connected ones are
    // filtered out at the end. Disconnected intermediates matter: a connected
    // graph on n vertices may extend a disconnected one on n-1.
    const ALL_COUNTS: [usize; 8] = [1, 2, 4, 11, 34, 156, 1044, 12346];
    const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

    let mut catalogue = Vec::new();
    let mut level: HashMap<Vec<u32>, Vec<u32>> = HashMap::new();
    level.insert(canonical_key(1, &[0]), vec![0]);
    for n in 1..=max_n {
        assert_eq!(level.len(), ALL_COUNTS[n - 1], "graph count at order {n}");
        let mut connected: Vec<(Vec<u32>, Vec<u32>)> = level
            .iter()
            .filter(|(_, masks)| mask_connected(masks))
            .map(|(k, m)| (k.clone(), m.clone()))
            .collect();
        connected.sort();
        assert_eq!(
            connected.len(),
            CONNECTED_COUNTS[n - 1],
            "connected count at order {n}"
        );
        catalogue.extend(connected.into_iter().map(|(_, m)| m));
        if n == max_n {
            break;
        }
        let mut next: HashMap<Vec<u32>, Vec<u32>> = HashMap::new();
        for masks in level.values() {
            for attach in 0u32..(1 << n) {
                let mut grown = masks.clone();
                grown.push(attach);
                for v in 0..n {
                    if attach & (1 << v) != 0 {
                        grown[v] |= 1 << n;
                    }
                }
                let key = canonical_key(n + 1, &grown);
                next.entry(key).or_insert(grown);
            }
        }
        level = next;
    }
    catalogue
}

fn mask_connected(masks: &[u32]) -> bool {
    let n = masks.len();
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0u32;
        for v in 0..n {
            if frontier & (1 << v) != 0 {
                next |= masks[v];
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

pub fn graph_from_masks(masks: &[u32]) -> GenericGraph {
    let n = masks.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if masks[u] & (1 << v) != 0 {
                edges.push((u, v));
            }
        }
    }
    GenericGraph::from_edges(n, &edges).expect("catalogue graphs are connected and simple")
}

/// Brute-force graph isomorphism by backtracking over vertex maps with
/// degree pruning. Independent of the canonical-form machinery.
pub fn isomorphic_bruteforce(a: &GenericGraph, b: &GenericGraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut deg_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_map(a, b, 0, &mut map, &mut used)
}

fn extend_map(
    a: &GenericGraph,
    b: &GenericGraph,
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = a.vertex_count();
    if v == n {
        return true;
    }
    'candidates: for w in 0..n {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        for u in 0..v {
            if a.has_edge(v, u) != b.has_edge(w, map[u]) {
                continue 'candidates;
            }
        }
        map[v] = w;
        used[w] = true;
        if extend_map(a, b, v + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}
