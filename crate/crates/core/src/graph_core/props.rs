use std::collections::VecDeque;

use serde::Serialize;

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    Black,
    White,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Black => Side::White,
            Side::White => Side::Black,
        }
    }
}

/// A proper 2-coloring. In Levi graphs `Black` plays the role of points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side_of: Vec<Side>,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> Side {
        self.side_of[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side_of
    }

    pub fn vertices(&self, side: Side) -> impl Iterator<Item = usize> + '_ {
        self.side_of
            .iter()
            .enumerate()
            .filter(move |(_, &s)| s == side)
            .map(|(v, _)| v)
    }
}

/// 2-colors `g`, with the lowest vertex of each component Black.
/// `None` iff `g` contains an odd circuit.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let mut side: Vec<Option<Side>> = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    for root in 0..g.vertex_count() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(Side::Black);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let s = side[v].unwrap();
            for w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(s.other());
                        queue.push_back(w);
                    }
                    Some(t) if t == s => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Bipartition {
        side_of: side.into_iter().map(Option::unwrap).collect(),
    })
}

/// Length of a shortest circuit, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        parent_edge[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            // cycles found deeper than this cannot improve on the best
            if let Some(b) = best {
                if 2 * dist[v] + 1 >= b {
                    break;
                }
            }
            for &(w, e) in g.incident(v) {
                if e == parent_edge[v] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent_edge[w] = e;
                    queue.push_back(w);
                } else {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

pub fn is_connected(g: &Graph) -> bool {
    component_count(g, &[]) <= 1
}

/// Number of connected components after deleting the given edge indices.
fn component_count(g: &Graph, removed: &[usize]) -> usize {
    components(g, removed).1
}

/// Component id per vertex and the number of components, ignoring `removed` edges.
fn components(g: &Graph, removed: &[usize]) -> (Vec<usize>, usize) {
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for root in 0..n {
        if comp[root] != usize::MAX {
            continue;
        }
        comp[root] = count;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for &(w, e) in g.incident(v) {
                if comp[w] == usize::MAX && !removed.contains(&e) {
                    comp[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (comp, count)
}

/// Exact edge connectivity via unit-capacity max-flow from vertex 0 to every other vertex.
pub fn edge_connectivity(g: &Graph) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if !is_connected(g) {
        return Err(GraphError::DisconnectedInput);
    }
    if n <= 1 {
        return Ok(0);
    }
    let mut best = usize::MAX;
    for t in 1..n {
        best = best.min(max_flow(g, 0, t, best));
    }
    Ok(best)
}

/// Unit-capacity max-flow (Edmonds–Karp), stopping once `cap` units are found.
fn max_flow(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let m = g.edge_count();
    // flow[e] in {-1, 0, 1}: +1 means one unit from edges[e].0 to edges[e].1
    let mut flow = vec![0i8; m];
    let mut total = 0;
    let n = g.vertex_count();
    let mut pred: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut queue = VecDeque::new();
    while total < cap {
        pred.fill(None);
        pred[s] = Some((s, usize::MAX));
        queue.clear();
        queue.push_back(s);
        'bfs: while let Some(v) = queue.pop_front() {
            for &(w, e) in g.incident(v) {
                if pred[w].is_some() {
                    continue;
                }
                let forward = g.edge(e).0 == v;
                let residual = if forward { 1 - flow[e] } else { 1 + flow[e] };
                if residual > 0 {
                    pred[w] = Some((v, e));
                    if w == t {
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
        if pred[t].is_none() {
            break;
        }
        let mut w = t;
        while w != s {
            let (v, e) = pred[w].unwrap();
            if g.edge(e).0 == v {
                flow[e] += 1;
            } else {
                flow[e] -= 1;
            }
            w = v;
        }
        total += 1;
    }
    total
}

/// An edge cut together with the size of its smaller shore.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCut {
    pub edges: Vec<usize>,
    pub smaller_side_vertex_count: usize,
}

impl EdgeCut {
    pub fn is_trivial(&self) -> bool {
        self.smaller_side_vertex_count <= 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Essential4ec {
    Yes,
    No { witness: EdgeCut },
}

impl Essential4ec {
    pub fn is_yes(&self) -> bool {
        matches!(self, Essential4ec::Yes)
    }
}

/// Decides essential 4-edge-connectivity of a connected cubic graph by brute
/// force over all edge sets of size at most three.
///
/// On `No` the witness is the first disconnecting set found in lexicographic
/// order: any cut of one or two edges, otherwise a 3-cut leaving every
/// component with at least two vertices.
pub fn essential_4ec(g: &Graph) -> Result<Essential4ec, GraphError> {
    g.check_cubic()?;
    if !is_connected(g) {
        return Err(GraphError::DisconnectedInput);
    }
    let m = g.edge_count();
    for a in 0..m {
        if let Some(cut) = cut_if_disconnecting(g, &[a]) {
            return Ok(Essential4ec::No { witness: cut });
        }
    }
    for a in 0..m {
        for b in a + 1..m {
            if let Some(cut) = cut_if_disconnecting(g, &[a, b]) {
                return Ok(Essential4ec::No { witness: cut });
            }
        }
    }
    Ok(match three_cuts(g, true).into_iter().next() {
        Some(cut) => Essential4ec::No { witness: cut },
        None => Essential4ec::Yes,
    })
}

/// All 3-edge sets whose removal leaves only components of at least two vertices.
pub fn nontrivial_three_edge_cuts(g: &Graph) -> Vec<EdgeCut> {
    three_cuts(g, false)
}

fn three_cuts(g: &Graph, first_only: bool) -> Vec<EdgeCut> {
    let m = g.edge_count();
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let set = [a, b, c];
                // the three edges of one vertex always give a trivial cut
                if shares_vertex_of_degree(g, &set) {
                    continue;
                }
                if let Some(cut) = cut_if_disconnecting(g, &set) {
                    if !cut.is_trivial() {
                        out.push(cut);
                        if first_only {
                            return out;
                        }
                    }
                }
            }
        }
    }
    out
}

fn shares_vertex_of_degree(g: &Graph, set: &[usize; 3]) -> bool {
    let (a, b) = g.edge(set[0]);
    [a, b].into_iter().any(|v| {
        g.degree(v) == 3 && g.incident(v).iter().all(|&(_, e)| set.contains(&e))
    })
}

fn cut_if_disconnecting(g: &Graph, removed: &[usize]) -> Option<EdgeCut> {
    let (comp, count) = components(g, removed);
    if count < 2 {
        return None;
    }
    let mut sizes = vec![0usize; count];
    for &c in &comp {
        sizes[c] += 1;
    }
    Some(EdgeCut {
        edges: removed.to_vec(),
        smaller_side_vertex_count: *sizes.iter().min().unwrap(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k33() -> Graph {
        Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn girth_of_small_graphs() {
        assert_eq!(girth(&cycle(6)), Some(6));
        assert_eq!(girth(&k33()), Some(4));
        assert_eq!(girth(&Graph::new(3, [(0, 1), (1, 2)]).unwrap()), None);
        assert_eq!(girth(&cycle(3)), Some(3));
    }

    #[test]
    fn bipartition_of_hexagon_alternates() {
        let b = bipartition(&cycle(6)).unwrap();
        let sides: Vec<_> = (0..6).map(|v| b.side(v)).collect();
        assert_eq!(sides[0], Side::Black);
        for v in 0..6 {
            assert_ne!(sides[v], sides[(v + 1) % 6]);
        }
        assert!(bipartition(&cycle(3)).is_none());
    }

    #[test]
    fn connectivity_of_cycles_and_bridges() {
        assert_eq!(edge_connectivity(&cycle(6)), Ok(2));
        // two hexagons joined by one edge
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend((0..6).map(|i| (6 + i, 6 + (i + 1) % 6)));
        edges.push((0, 6));
        let g = Graph::new(12, edges).unwrap();
        assert_eq!(edge_connectivity(&g), Ok(1));
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(edge_connectivity(&two), Err(GraphError::DisconnectedInput));
        assert_eq!(edge_connectivity(&k33()), Ok(3));
    }

    #[test]
    fn k33_is_essentially_4_edge_connected() {
        assert_eq!(essential_4ec(&k33()), Ok(Essential4ec::Yes));
        assert!(matches!(
            essential_4ec(&cycle(6)),
            Err(GraphError::NotCubic { .. })
        ));
    }

    #[test]
    fn prism_has_nontrivial_three_cut() {
        // triangular prism: the three rungs form a non-trivial 3-cut
        let g = Graph::new(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        match essential_4ec(&g).unwrap() {
            Essential4ec::No { witness } => {
                assert_eq!(witness.smaller_side_vertex_count, 3);
                let rungs: Vec<_> = [(0, 3), (1, 4), (2, 5)]
                    .iter()
                    .map(|&(a, b)| g.edge_index(a, b).unwrap())
                    .collect();
                assert_eq!(witness.edges, rungs);
            }
            Essential4ec::Yes => panic!("prism has a non-trivial 3-cut"),
        }
    }
}
