#![allow(dead_code)]

use std::collections::VecDeque;

use levi_core::families::{
    cyclic_levi, d_graph, desargues_configuration, heawood, k33, levi, pappus, star_product,
    t_graph, CyclicParams, TVariant,
};
use levi_core::martinetti::{extend, extension_sites};
use levi_core::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Named cubic bipartite graphs used across the property suites.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("K33".to_string(), k33()),
        ("cube".to_string(), cube()),
        ("Heawood".to_string(), heawood()),
        ("Pappus".to_string(), pappus()),
        ("Desargues".to_string(), levi(&desargues_configuration())),
    ];
    for n in 7..=15 {
        out.push((format!("D({n})"), d_graph(n).unwrap()));
    }
    for (n, b, c) in [(12, 1, 4), (13, 1, 4), (14, 1, 4)] {
        out.push((
            format!("cyclic({n};0,{b},{c})"),
            cyclic_levi(CyclicParams::new(n, b, c)).unwrap(),
        ));
    }
    for v in TVariant::ALL {
        out.push((format!("T{}(1)", v.number()), t_graph(1, v).unwrap()));
    }
    let h = heawood();
    out.push((
        "H0*H0".to_string(),
        star_product(&h, 0, &h, 0, [0, 1, 2]).unwrap().graph,
    ));
    let p = pappus();
    let site = extension_sites(&p).unwrap()[0];
    out.push(("Pappus+".to_string(), extend(&p, &site).unwrap()));
    out
}

pub fn cube() -> Graph {
    let edges = (0..8usize).flat_map(|v| {
        (0..3)
            .map(move |b| (v, v ^ (1 << b)))
            .filter(|(a, b)| a < b)
    });
    Graph::new(8, edges).unwrap()
}

/// A cubic bipartite multigraph-free graph on `2k` vertices from three random
/// perfect matchings, or `None` if the matchings collide.
pub fn random_cubic_bipartite(k: usize, seed: u64) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for _ in 0..3 {
        let mut perm: Vec<usize> = (0..k).collect();
        perm.shuffle(&mut rng);
        edges.extend((0..k).map(|i| (i, k + perm[i])));
    }
    Graph::new(2 * k, edges).ok()
}

pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut rng);
    p
}

pub fn random_index(len: usize, rng: &mut ChaCha8Rng) -> usize {
    rng.gen_range(0..len)
}

/// Permanent of the bipartite adjacency matrix by row expansion.
pub fn permanent_oracle(g: &Graph) -> Option<u64> {
    let n = g.vertex_count();
    let mut side = vec![usize::MAX; n];
    for s in 0..n {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for w in g.neighbors(v) {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[v];
                    q.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    let rows: Vec<usize> = (0..n).filter(|&v| side[v] == 0).collect();
    let cols: Vec<usize> = (0..n).filter(|&v| side[v] == 1).collect();
    if rows.len() != cols.len() {
        return Some(0);
    }
    let a: Vec<Vec<bool>> = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| g.has_edge(r, c)).collect())
        .collect();
    fn expand(a: &[Vec<bool>], row: usize, used: &mut Vec<bool>) -> u64 {
        if row == a.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..a.len() {
            if a[row][c] && !used[c] {
                used[c] = true;
                total += expand(a, row + 1, used);
                used[c] = false;
            }
        }
        total
    }
    Some(expand(&a, 0, &mut vec![false; cols.len()]))
}

fn components_without(g: &Graph, removed: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        comp[s] = id;
        let mut size = 1;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &(w, e) in g.incident(v) {
                if !removed.contains(&e) && comp[w] == usize::MAX {
                    comp[w] = id;
                    size += 1;
                    stack.push(w);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

/// Shortest circuit through some edge: for each edge `ab`, the distance
/// from `a` to `b` without that edge, plus one.
pub fn girth_oracle(g: &Graph) -> Option<usize> {
    let mut best = None;
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let mut dist = vec![usize::MAX; g.vertex_count()];
        dist[a] = 0;
        let mut q = VecDeque::from([a]);
        while let Some(v) = q.pop_front() {
            for &(w, f) in g.incident(v) {
                if f != e && dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        if dist[b] != usize::MAX {
            let len = dist[b] + 1;
            best = Some(best.map_or(len, |x: usize| x.min(len)));
        }
    }
    best
}

/// Smallest number of edges (up to 3) whose removal disconnects `g`.
pub fn edge_connectivity_oracle(g: &Graph) -> usize {
    let m = g.edge_count();
    if components_without(g, &[]).len() > 1 {
        return 0;
    }
    for e in 0..m {
        if components_without(g, &[e]).len() > 1 {
            return 1;
        }
    }
    for e in 0..m {
        for f in e + 1..m {
            if components_without(g, &[e, f]).len() > 1 {
                return 2;
            }
        }
    }
    3
}

/// No cut of at most two edges and no 3-edge cut with both shores of two or more vertices.
pub fn essential_4ec_oracle(g: &Graph) -> bool {
    if edge_connectivity_oracle(g) < 3 {
        return false;
    }
    let m = g.edge_count();
    for e in 0..m {
        for f in e + 1..m {
            for h in f + 1..m {
                let sizes = components_without(g, &[e, f, h]);
                if sizes.len() > 1 && sizes.iter().all(|&s| s >= 2) {
                    return false;
                }
            }
        }
    }
    true
}
