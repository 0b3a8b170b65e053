use crate::graph_core::{bipartition, Graph};

use super::{cyclic_levi, CyclicParams, FamilyError};

pub fn k33() -> Graph {
    Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b))))
        .expect("K33 is simple")
}

/// Levi graph of the Fano plane.
pub fn heawood() -> Graph {
    cyclic_levi(CyclicParams::new(7, 1, 3)).expect("{0,1,3} mod 7 is linear")
}

/// The 18-circuit `v_1 … v_18` with chords `v_1v_6, v_2v_9, v_3v_14, v_4v_11,
/// v_5v_16, v_7v_12, v_8v_15, v_10v_17, v_13v_18`.
pub fn pappus() -> Graph {
    const CHORDS: [(usize, usize); 9] = [
        (1, 6),
        (2, 9),
        (3, 14),
        (4, 11),
        (5, 16),
        (7, 12),
        (8, 15),
        (10, 17),
        (13, 18),
    ];
    let rim = (1..=18).map(|i| (i - 1, i % 18));
    let chords = CHORDS.iter().map(|&(a, b)| (a - 1, b - 1));
    Graph::new(18, rim.chain(chords))
        .and_then(|g| g.with_labels((1..=18).map(|i| format!("v_{i}")).collect()))
        .expect("Pappus graph is simple")
}

/// Result of a star product, with the indices of the three joining edges.
#[derive(Debug, Clone)]
pub struct StarProduct {
    pub graph: Graph,
    pub join_edges: [usize; 3],
}

/// Deletes `x` from `g1` and `y` from `g2` and joins the `i`-th neighbor of `x`
/// (in index order) to neighbor `pairing[i]` of `y`.
///
/// Vertices of `g1 - x` come first, then those of `g2 - y`, each in their
/// original order. Labels, when both factors carry them, are prefixed `a.`/`b.`.
pub fn star_product(
    g1: &Graph,
    x: usize,
    g2: &Graph,
    y: usize,
    pairing: [usize; 3],
) -> Result<StarProduct, FamilyError> {
    g1.check_cubic()?;
    g2.check_cubic()?;
    if x >= g1.vertex_count() || y >= g2.vertex_count() {
        return Err(FamilyError::InvalidParameter("star vertex out of range".into()));
    }
    let mut sorted = pairing;
    sorted.sort_unstable();
    if sorted != [0, 1, 2] {
        return Err(FamilyError::InvalidParameter(format!(
            "pairing {pairing:?} is not a permutation of 0,1,2"
        )));
    }
    let (h1, map1) = g1.delete_vertices(&[x]);
    let (h2, map2) = g2.delete_vertices(&[y]);
    let offset = h1.vertex_count();
    let nx: Vec<usize> = g1.neighbors(x).map(|v| map1[v].unwrap()).collect();
    let ny: Vec<usize> = g2.neighbors(y).map(|v| map2[v].unwrap() + offset).collect();
    let joins: Vec<(usize, usize)> = (0..3).map(|i| (nx[i], ny[pairing[i]])).collect();
    let edges = h1
        .edges()
        .iter()
        .copied()
        .chain(h2.edges().iter().map(|&(a, b)| (a + offset, b + offset)))
        .chain(joins.iter().copied());
    let mut graph = Graph::new(offset + h2.vertex_count(), edges)?;
    if let (Some(l1), Some(l2)) = (h1.labels(), h2.labels()) {
        let labels = l1
            .iter()
            .map(|l| format!("a.{l}"))
            .chain(l2.iter().map(|l| format!("b.{l}")))
            .collect();
        graph = graph.with_labels(labels)?;
    }
    if bipartition(g1).is_some() && bipartition(g2).is_some() && bipartition(&graph).is_none() {
        return Err(FamilyError::BipartitenessBroken);
    }
    let join_edges = [0, 1, 2].map(|i| graph.edge_index(joins[i].0, joins[i].1).unwrap());
    Ok(StarProduct { graph, join_edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{girth, GraphError};

    #[test]
    fn named_graph_shapes() {
        assert_eq!(girth(&k33()), Some(4));
        let h = heawood();
        assert_eq!((h.vertex_count(), h.edge_count(), girth(&h)), (14, 21, Some(6)));
        let p = pappus();
        assert_eq!((p.vertex_count(), p.edge_count(), girth(&p)), (18, 27, Some(6)));
        assert!(p.is_cubic());
        assert!(bipartition(&p).is_some());
    }

    #[test]
    fn heawood_star_heawood() {
        let h = heawood();
        let s = star_product(&h, 0, &h, 0, [0, 1, 2]).unwrap();
        assert_eq!(s.graph.vertex_count(), 26);
        assert_eq!(s.graph.edge_count(), 39);
        assert!(s.graph.is_cubic());
        assert!(bipartition(&s.graph).is_some());
        for e in s.join_edges {
            let (a, b) = s.graph.edge(e);
            assert!(a < 13 && b >= 13);
        }
    }

    #[test]
    fn star_of_hexagons_is_rejected() {
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(
            star_product(&c6, 0, &c6, 0, [0, 1, 2]).unwrap_err(),
            FamilyError::Graph(GraphError::NotCubic { vertex: 0, degree: 2 })
        );
    }

    #[test]
    fn pairing_must_be_a_permutation() {
        let h = heawood();
        assert!(star_product(&h, 0, &h, 0, [0, 0, 2]).is_err());
    }
}
