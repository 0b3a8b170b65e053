use crate::graph_core::{Graph, LabeledBuilder};

use super::FamilyError;

/// How the last segment of `T(n)` is closed onto the first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TVariant {
    /// `u_1^1 v_n^1, u_1^2 v_n^2, u_1^3 v_n^3`
    One,
    /// `u_1^3 v_n^1, u_1^2 v_n^2, u_1^1 v_n^3`
    Two,
    /// `u_1^1 v_n^3, u_1^2 v_n^1, u_1^3 v_n^2`
    Three,
}

impl TVariant {
    pub const ALL: [TVariant; 3] = [TVariant::One, TVariant::Two, TVariant::Three];

    pub fn from_number(k: usize) -> Result<Self, FamilyError> {
        match k {
            1 => Ok(TVariant::One),
            2 => Ok(TVariant::Two),
            3 => Ok(TVariant::Three),
            _ => Err(FamilyError::InvalidParameter(format!(
                "T variant must be 1, 2 or 3, got {k}"
            ))),
        }
    }

    pub fn number(self) -> usize {
        match self {
            TVariant::One => 1,
            TVariant::Two => 2,
            TVariant::Three => 3,
        }
    }

    /// Closing edges as (superscript of `u_1`, superscript of `v_n`).
    fn closing(self) -> [(usize, usize); 3] {
        match self {
            TVariant::One => [(1, 1), (2, 2), (3, 3)],
            TVariant::Two => [(3, 1), (2, 2), (1, 3)],
            TVariant::Three => [(1, 3), (2, 1), (3, 2)],
        }
    }
}

/// The 20-vertex segment graph as local names (`u^1`, `t^2`, …) and edges.
///
/// `u^j` and `v^j` are the attachment vertices and have degree 2 inside the segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentTemplate {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

const G_T_VERTICES: [&str; 20] = [
    "u^1", "u^2", "u^3", "w^1", "w^2", "w^3", "x^1", "x^2", "x^3", "t^1", "y^1", "y^2", "y^3", "z^1",
    "z^2", "z^3", "t^2", "v^1", "v^2", "v^3",
];

// The union of the edges traversed by the segment paths P^1, P^2, (P^3), Q^1,
// Q^2 together with the non-path edges drawn alongside them.
const G_T_EDGES: [(&str, &str); 27] = [
    ("u^1", "w^1"),
    ("u^1", "w^2"),
    ("u^2", "w^1"),
    ("u^2", "w^3"),
    ("u^3", "w^2"),
    ("u^3", "w^3"),
    ("w^1", "x^1"),
    ("w^2", "x^2"),
    ("w^3", "x^3"),
    ("x^1", "t^1"),
    ("x^2", "t^1"),
    ("x^3", "t^1"),
    ("x^1", "y^1"),
    ("x^2", "y^2"),
    ("x^3", "y^3"),
    ("y^1", "z^1"),
    ("y^1", "z^2"),
    ("y^2", "z^1"),
    ("y^2", "z^3"),
    ("y^3", "z^2"),
    ("y^3", "z^3"),
    ("z^1", "v^1"),
    ("z^2", "v^2"),
    ("z^3", "v^3"),
    ("v^1", "t^2"),
    ("v^2", "t^2"),
    ("v^3", "t^2"),
];

impl SegmentTemplate {
    /// The segment `G_T`.
    pub fn g_t() -> Self {
        SegmentTemplate {
            vertices: G_T_VERTICES.iter().map(|s| s.to_string()).collect(),
            edges: G_T_EDGES
                .iter()
                .map(|&(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        }
    }

    /// Replaces edges `a-b`, `c-d` by `a-d`, `c-b`. Degrees are unchanged.
    pub fn switched(&self, (a, b): (&str, &str), (c, d): (&str, &str)) -> Option<Self> {
        let find = |x: &str, y: &str| {
            self.edges
                .iter()
                .position(|(p, q)| (p == x && q == y) || (p == y && q == x))
        };
        let i = find(a, b)?;
        let j = find(c, d)?;
        if find(a, d).is_some() || find(c, b).is_some() {
            return None;
        }
        let mut out = self.clone();
        out.edges[i] = (a.to_string(), d.to_string());
        out.edges[j] = (c.to_string(), b.to_string());
        Some(out)
    }

    fn indexed(local: &str, i: usize) -> String {
        let (name, sup) = local.split_once('^').expect("local names look like x^k");
        format!("{name}_{i}^{sup}")
    }
}

/// The segment `G_T` with index `i = 1`.
pub fn t_segment() -> Graph {
    let seg = SegmentTemplate::g_t();
    let mut b = LabeledBuilder::new();
    for v in &seg.vertices {
        b.vertex(&SegmentTemplate::indexed(v, 1));
    }
    for (x, y) in &seg.edges {
        b.edge(&SegmentTemplate::indexed(x, 1), &SegmentTemplate::indexed(y, 1));
    }
    b.build().expect("G_T is simple")
}

/// `T_k(n)`: `n` chained copies of `G_T` closed by the variant's three edges.
pub fn t_graph(n: usize, variant: TVariant) -> Result<Graph, FamilyError> {
    t_graph_from(&SegmentTemplate::g_t(), n, variant)
}

/// As [`t_graph`], from an arbitrary segment template.
pub fn t_graph_from(
    seg: &SegmentTemplate,
    n: usize,
    variant: TVariant,
) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParameter(
            "T(n) needs at least one segment".into(),
        ));
    }
    let at = SegmentTemplate::indexed;
    let mut b = LabeledBuilder::new();
    for i in 1..=n {
        for v in &seg.vertices {
            b.vertex(&at(v, i));
        }
    }
    for i in 1..=n {
        for (x, y) in &seg.edges {
            b.edge(&at(x, i), &at(y, i));
        }
        if i >= 2 {
            for j in 1..=3 {
                b.edge(&at(&format!("v^{j}"), i - 1), &at(&format!("u^{j}"), i));
            }
        }
    }
    for (ju, jv) in variant.closing() {
        b.edge(&at(&format!("u^{ju}"), 1), &at(&format!("v^{jv}"), n));
    }
    let g = b.build()?;
    if g.vertex_count() != n * seg.vertices.len() {
        return Err(FamilyError::InvalidParameter(
            "segment template edges mention undeclared vertices".into(),
        ));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{bipartition, girth};

    #[test]
    fn segment_degrees() {
        let g = t_segment();
        assert_eq!(g.vertex_count(), 20);
        assert_eq!(g.edge_count(), 27);
        for v in 0..20 {
            let name = g.label(v).unwrap();
            let expected = if name.starts_with('u') || name.starts_with('v') { 2 } else { 3 };
            assert_eq!(g.degree(v), expected, "{name}");
        }
    }

    #[test]
    fn t_graphs_are_cubic_bipartite() {
        for n in 1..=3 {
            for variant in TVariant::ALL {
                let g = t_graph(n, variant).unwrap();
                assert_eq!(g.vertex_count(), 20 * n);
                assert_eq!(g.edge_count(), 30 * n);
                assert!(g.is_cubic());
                assert!(bipartition(&g).is_some());
                assert_eq!(girth(&g), Some(6), "T{}({n})", variant.number());
            }
        }
        assert!(t_graph(0, TVariant::One).is_err());
        assert!(TVariant::from_number(4).is_err());
    }

    #[test]
    fn switch_keeps_degrees() {
        let seg = SegmentTemplate::g_t();
        let bad = seg.switched(("x^1", "y^1"), ("x^2", "y^2")).unwrap();
        assert_ne!(bad, seg);
        assert!(seg.switched(("x^1", "y^1"), ("x^1", "t^1")).is_none());
    }
}
