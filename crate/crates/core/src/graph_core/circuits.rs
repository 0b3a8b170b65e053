use serde::Serialize;

use super::{Graph, GraphError};

/// Partition of a spanning 2-regular edge subset into vertex-disjoint circuits.
///
/// Each circuit starts at its smallest vertex and proceeds towards the smaller
/// of that vertex's two circuit neighbors; circuits are ordered by first vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CircuitDecomposition {
    pub circuits: Vec<Vec<usize>>,
}

impl CircuitDecomposition {
    pub fn circuit_count(&self) -> usize {
        self.circuits.len()
    }

    /// Circuit lengths, sorted ascending.
    pub fn lengths(&self) -> Vec<usize> {
        let mut l: Vec<usize> = self.circuits.iter().map(Vec::len).collect();
        l.sort_unstable();
        l
    }

    pub fn covered_vertices(&self) -> usize {
        self.circuits.iter().map(Vec::len).sum()
    }
}

/// Splits a spanning 2-regular edge subset of `g` into its circuits.
pub fn decompose(g: &Graph, edge_subset: &[usize]) -> Result<CircuitDecomposition, GraphError> {
    let n = g.vertex_count();
    let mut partner = vec![[usize::MAX; 2]; n];
    let mut degree = vec![0usize; n];
    let mut seen = vec![false; g.edge_count()];
    for &e in edge_subset {
        if e >= g.edge_count() {
            return Err(GraphError::EdgeOutOfRange(e));
        }
        if std::mem::replace(&mut seen[e], true) {
            continue;
        }
        let (a, b) = g.edge(e);
        for (x, y) in [(a, b), (b, a)] {
            if degree[x] < 2 {
                partner[x][degree[x]] = y;
            }
            degree[x] += 1;
        }
    }
    if let Some(v) = (0..n).find(|&v| degree[v] != 2) {
        return Err(GraphError::NotTwoRegular {
            vertex: v,
            degree: degree[v],
        });
    }
    let mut visited = vec![false; n];
    let mut circuits = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut circuit = vec![start];
        visited[start] = true;
        let mut prev = start;
        let mut cur = partner[start][0].min(partner[start][1]);
        while cur != start {
            visited[cur] = true;
            circuit.push(cur);
            let [p, q] = partner[cur];
            let next = if p == prev { q } else { p };
            prev = cur;
            cur = next;
        }
        circuits.push(circuit);
    }
    Ok(CircuitDecomposition { circuits })
}

/// A walk with pairwise distinct vertices, or a circuit when `closed`.
///
/// A closed path stores each vertex once; the closing edge runs from the
/// last vertex back to the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<usize>,
    closed: bool,
}

impl Path {
    /// Validates that `vertices` is a path in `g`. A repeated first vertex at the
    /// end marks a circuit, as in the `(P)` notation.
    pub fn new(g: &Graph, mut vertices: Vec<usize>) -> Result<Path, GraphError> {
        let closed = vertices.len() > 3 && vertices.first() == vertices.last();
        if closed {
            vertices.pop();
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in &vertices {
            if v >= g.vertex_count() {
                return Err(GraphError::InvalidPath(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(GraphError::InvalidPath(format!(
                    "vertex {} repeated",
                    g.display_vertex(v)
                )));
            }
        }
        let path = Path { vertices, closed };
        for (a, b) in path.steps() {
            if !g.has_edge(a, b) {
                return Err(GraphError::InvalidPath(format!(
                    "missing edge {}-{}",
                    g.display_vertex(a),
                    g.display_vertex(b)
                )));
            }
        }
        Ok(path)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn is_circuit(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Consecutive vertex pairs, including the closing pair of a circuit.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let closing = self
            .closed
            .then(|| (*self.vertices.last().unwrap(), self.vertices[0]));
        self.vertices
            .windows(2)
            .map(|w| (w[0], w[1]))
            .chain(closing)
    }

    /// Edge indices traversed, in order.
    pub fn edge_indices(&self, g: &Graph) -> Vec<usize> {
        self.steps()
            .map(|(a, b)| g.edge_index(a, b).expect("validated path edge"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33() -> Graph {
        Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn k33_minus_matching_is_a_hexagon() {
        let g = k33();
        let matching: Vec<usize> = [(0, 3), (1, 4), (2, 5)]
            .iter()
            .map(|&(a, b)| g.edge_index(a, b).unwrap())
            .collect();
        let rest: Vec<usize> = (0..g.edge_count()).filter(|e| !matching.contains(e)).collect();
        let d = decompose(&g, &rest).unwrap();
        assert_eq!(d.lengths(), vec![6]);
        assert_eq!(d.circuits[0], vec![0, 4, 2, 3, 1, 5]);
    }

    #[test]
    fn two_squares() {
        let g = Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)])
            .unwrap();
        let all: Vec<usize> = (0..8).collect();
        let d = decompose(&g, &all).unwrap();
        assert_eq!(d.lengths(), vec![4, 4]);
        assert_eq!(d.circuits, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
        assert_eq!(d.covered_vertices(), 8);
    }

    #[test]
    fn non_spanning_subset_names_vertex() {
        // edges 0 and 1 are 0-3 and 0-4: vertex 1 is the first uncovered vertex
        let err = decompose(&k33(), &[0, 1]).unwrap_err();
        assert_eq!(err, GraphError::NotTwoRegular { vertex: 1, degree: 0 });
    }

    #[test]
    fn path_validation() {
        let g = k33();
        assert!(Path::new(&g, vec![0, 3, 1, 4]).is_ok());
        assert!(Path::new(&g, vec![0, 1]).is_err());
        assert!(Path::new(&g, vec![0, 3, 0]).is_err());
        let c = Path::new(&g, vec![0, 3, 1, 4, 0]).unwrap();
        assert!(c.is_circuit());
        assert_eq!(c.edge_indices(&g).len(), 4);
    }
}
