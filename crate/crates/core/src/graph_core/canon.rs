//! Canonical labeling by color refinement plus individualization.
//!
//! The search tree individualizes one vertex of the first smallest
//! non-singleton cell at each level and refines to an equitable coloring.
//! Every leaf is a discrete coloring, i.e. a relabeling; the certificate is
//! the lexicographically least relabeled edge list over all leaves. Branches
//! whose children are related by an automorphism already found are skipped.

use std::fmt;

use super::io::to_graph6;
use super::Graph;

/// Canonical certificate: the graph6 encoding of the canonically relabeled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate({})", self.as_str())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> Certificate {
    let (canon, _) = canonical(g);
    Certificate(to_graph6(&canon).into_bytes())
}

/// Canonical relabeling: vertex `v` of `g` maps to `labeling[v]` in the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    canonical(g).1
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// A vertex bijection `f` with `g1.has_edge(a,b) == g2.has_edge(f[a], f[b])`, if one exists.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let mut d1: Vec<usize> = (0..g1.vertex_count()).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..g2.vertex_count()).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return None;
    }
    let (c1, l1) = canonical(g1);
    let (c2, l2) = canonical(g2);
    if c1.edges() != c2.edges() {
        return None;
    }
    let mut inv2 = vec![0; l2.len()];
    for (v, &c) in l2.iter().enumerate() {
        inv2[c] = v;
    }
    Some(l1.iter().map(|&c| inv2[c]).collect())
}

fn canonical(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.vertex_count();
    let mut colors: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    normalize(&mut colors);
    refine(g, &mut colors);
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    search.descend(colors);
    let (edges, labeling) = search.best.expect("search visits at least one leaf");
    let canon = Graph::new(n, edges).expect("relabeling keeps the graph simple");
    (canon, labeling)
}

/// Relabeled sorted edges and the labeling that produced them.
type Leaf = (Vec<(usize, usize)>, Vec<usize>);

struct Search<'a> {
    g: &'a Graph,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<u32>) {
        let Some(cell) = target_cell(&colors) else {
            self.leaf(colors);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            // skip v if an automorphism fixing this node's coloring maps an explored vertex to it
            if self.equivalent_to_explored(&colors, &explored, v) {
                continue;
            }
            let mut child: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| 2 * c + u32::from(u != v))
                .collect();
            normalize(&mut child);
            refine(self.g, &mut child);
            self.descend(child);
            explored.push(v);
        }
    }

    fn equivalent_to_explored(&self, colors: &[u32], explored: &[usize], v: usize) -> bool {
        if explored.is_empty() {
            return false;
        }
        // orbit of the explored set under automorphisms that preserve `colors`
        let usable: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|a| (0..colors.len()).all(|u| colors[a[u]] == colors[u]))
            .collect();
        if usable.is_empty() {
            return false;
        }
        let mut in_orbit = vec![false; colors.len()];
        let mut stack: Vec<usize> = explored.to_vec();
        for &u in explored {
            in_orbit[u] = true;
        }
        while let Some(u) = stack.pop() {
            for a in &usable {
                let w = a[u];
                if !in_orbit[w] {
                    in_orbit[w] = true;
                    stack.push(w);
                }
            }
        }
        in_orbit[v]
    }

    fn leaf(&mut self, colors: Vec<u32>) {
        let labeling: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let mut edges: Vec<(usize, usize)> = self
            .g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (labeling[a], labeling[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        match &self.best {
            None => self.best = Some((edges, labeling)),
            Some((best_edges, best_labeling)) => match edges.cmp(best_edges) {
                std::cmp::Ordering::Less => self.best = Some((edges, labeling)),
                std::cmp::Ordering::Equal => {
                    // same relabeled graph: best⁻¹ ∘ labeling is an automorphism
                    let mut inv = vec![0; best_labeling.len()];
                    for (v, &c) in best_labeling.iter().enumerate() {
                        inv[c] = v;
                    }
                    let auto: Vec<usize> = labeling.iter().map(|&c| inv[c]).collect();
                    if auto.iter().enumerate().any(|(v, &w)| v != w) {
                        self.automorphisms.push(auto);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

/// Renumbers colors to 0..k preserving their relative order.
fn normalize(colors: &mut [u32]) {
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).unwrap() as u32;
    }
}

/// Refines to the coarsest equitable coloring finer than `colors`.
/// New colors are ordered by (old color, sorted neighbor colors), which is label-invariant.
fn refine(g: &Graph, colors: &mut Vec<u32>) {
    let n = colors.len();
    let mut count = distinct_count(colors);
    loop {
        let mut signatures: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        signatures.sort_unstable();
        let mut next = vec![0u32; n];
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (signatures[i].0, &signatures[i].1) != (signatures[i - 1].0, &signatures[i - 1].1)
            {
                rank += 1;
            }
            next[signatures[i].2] = rank;
        }
        let new_count = rank as usize + 1;
        *colors = next;
        if new_count == count {
            return;
        }
        count = new_count;
    }
}

fn distinct_count(colors: &[u32]) -> usize {
    let mut d = colors.to_vec();
    d.sort_unstable();
    d.dedup();
    d.len()
}

/// First smallest color class with more than one vertex, or `None` if discrete.
fn target_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let k = colors.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut sizes = vec![0usize; k];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    let (color, _) = sizes
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > 1)
        .min_by_key(|&(c, &s)| (s, c))?;
    Some(
        colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c as usize == color)
            .map(|(v, _)| v)
            .collect(),
    )
}
