//! Simple undirected graphs with dense vertex indices and a deterministic
//! edge indexing, plus the structural predicates the classifiers rely on.

mod canon;
mod circuits;
pub mod io;
mod props;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, find_isomorphism, Certificate};
pub use circuits::{decompose, CircuitDecomposition, Path};
pub use props::{
    bipartition, edge_connectivity, essential_4ec, girth, is_connected, nontrivial_three_edge_cuts,
    Bipartition, EdgeCut, Essential4ec, Side,
};

/// Errors raised by graph construction and the structural predicates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("label list has {got} entries for {expected} vertices")]
    LabelCount { expected: usize, got: usize },
    #[error("label {0:?} is used twice")]
    DuplicateLabel(String),
    #[error("graph is disconnected")]
    DisconnectedInput,
    #[error("graph is not cubic (vertex {vertex} has degree {degree})")]
    NotCubic { vertex: usize, degree: usize },
    #[error("edge subset is not spanning 2-regular: vertex {vertex} has degree {degree}")]
    NotTwoRegular { vertex: usize, degree: usize },
    #[error("edge index {0} out of range")]
    EdgeOutOfRange(usize),
    #[error("invalid path: {0}")]
    InvalidPath(String),
}

/// An immutable simple undirected graph.
///
/// Edges are stored as `(min, max)` pairs sorted lexicographically, so the
/// edge index of a given vertex pair depends only on the edge set.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // (neighbor, edge index), sorted by edge index
    adj: Vec<Vec<(usize, usize)>>,
    labels: Option<Vec<String>>,
    label_index: HashMap<String, usize>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::with_capacity(3); n];
        for (i, &(a, b)) in list.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
            labels: None,
            label_index: HashMap::new(),
        })
    }

    /// Attaches symbolic vertex names. Labels must be unique.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        self.label_index = index;
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self.label_index.clear();
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Neighbors of `v` paired with the connecting edge index, in edge-index order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        if a >= self.n || b >= self.n {
            return None;
        }
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Vertex name for display: the label if present, otherwise the index.
    pub fn display_vertex(&self, v: usize) -> String {
        match self.label(v) {
            Some(l) => l.to_string(),
            None => v.to_string(),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|a| a.len() == k)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    /// Returns `Err(NotCubic)` naming the first vertex whose degree is not 3.
    pub fn check_cubic(&self) -> Result<(), GraphError> {
        match (0..self.n).find(|&v| self.degree(v) != 3) {
            Some(v) => Err(GraphError::NotCubic {
                vertex: v,
                degree: self.degree(v),
            }),
            None => Ok(()),
        }
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`. Labels move with their vertices.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let edges = self.edges.iter().map(|&(a, b)| (perm[a], perm[b]));
        let g = Graph::new(self.n, edges).expect("permutation of a simple graph is simple");
        match &self.labels {
            Some(labels) => {
                let mut moved = vec![String::new(); self.n];
                for (v, l) in labels.iter().enumerate() {
                    moved[perm[v]] = l.clone();
                }
                g.with_labels(moved).expect("labels stay unique")
            }
            None => g,
        }
    }

    /// Builds the graph with the given edge indices removed and extra edges added.
    /// Vertex count grows by `extra_vertices`. Labels are dropped.
    pub(crate) fn rewired(
        &self,
        removed: &[usize],
        extra_vertices: usize,
        added: &[(usize, usize)],
    ) -> Result<Graph, GraphError> {
        let n = self.n + extra_vertices;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(i))
            .map(|(_, &e)| e)
            .chain(added.iter().copied());
        Graph::new(n, edges)
    }

    /// Induced subgraph on the vertices not in `deleted`, reindexed in increasing order.
    /// Returns the graph and the old→new index map.
    pub(crate) fn delete_vertices(&self, deleted: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !deleted.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(a, b)| Some((map[a]?, map[b]?)));
        let g = Graph::new(next, edges).expect("induced subgraph is simple");
        let g = match &self.labels {
            Some(labels) => {
                let kept = labels
                    .iter()
                    .enumerate()
                    .filter(|(v, _)| map[*v].is_some())
                    .map(|(_, l)| l.clone())
                    .collect();
                g.with_labels(kept).expect("labels stay unique")
            }
            None => g,
        };
        (g, map)
    }
}

/// Incremental builder that names vertices as they are first mentioned.
#[derive(Debug, Default)]
pub struct LabeledBuilder {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
}

impl LabeledBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, name: &str) -> usize {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), v);
        v
    }

    pub fn edge(&mut self, a: &str, b: &str) {
        let (a, b) = (self.vertex(a), self.vertex(b));
        self.edges.push((a, b));
    }

    pub fn build(self) -> Result<Graph, GraphError> {
        Graph::new(self.names.len(), self.edges)?.with_labels(self.names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_are_sorted_and_indexed() {
        let g = Graph::new(4, [(3, 2), (0, 1), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_index(2, 0), Some(1));
        assert_eq!(g.edge_index(1, 3), None);
        assert_eq!(g.incident(2), &[(0, 1), (3, 2)]);
    }

    #[test]
    fn rejects_non_simple_input() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange(..))
        ));
    }

    #[test]
    fn labels_must_be_unique() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let err = g.with_labels(vec!["a".into(), "a".into()]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateLabel("a".into()));
    }

    #[test]
    fn builder_assigns_indices_in_mention_order() {
        let mut b = LabeledBuilder::new();
        b.edge("u_1^1", "u_1^2");
        b.edge("u_1^2", "x");
        let g = b.build().unwrap();
        assert_eq!(g.vertex_by_label("u_1^1"), Some(0));
        assert_eq!(g.vertex_by_label("x"), Some(2));
        assert_eq!(g.label(1), Some("u_1^2"));
    }

    #[test]
    fn permutation_moves_labels() {
        let mut b = LabeledBuilder::new();
        b.edge("a", "b");
        b.edge("b", "c");
        let g = b.build().unwrap().permuted(&[2, 0, 1]);
        assert_eq!(g.label(2), Some("a"));
        let (a, b2) = (g.vertex_by_label("a").unwrap(), g.vertex_by_label("b").unwrap());
        assert!(g.has_edge(a, b2));
    }
}
