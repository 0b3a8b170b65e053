use crate::graph_core::{bipartition, girth, Graph, Side};

use super::FamilyError;

/// A symmetric `n_3` configuration: `n` points, `n` lines of three points,
/// every point on three lines, any two lines meeting in at most one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    points: usize,
    lines: Vec<[usize; 3]>,
}

impl Configuration {
    pub fn new(points: usize, lines: Vec<[usize; 3]>) -> Result<Self, FamilyError> {
        if lines.len() != points {
            return Err(FamilyError::InvalidConfiguration(format!(
                "{} lines for {points} points",
                lines.len()
            )));
        }
        let mut on = vec![0usize; points];
        let mut lines = lines;
        for (j, line) in lines.iter_mut().enumerate() {
            line.sort_unstable();
            if line[0] == line[1] || line[1] == line[2] {
                return Err(FamilyError::InvalidConfiguration(format!(
                    "line {j} repeats a point"
                )));
            }
            if line[2] >= points {
                return Err(FamilyError::InvalidConfiguration(format!(
                    "line {j} uses point {} outside 0..{points}",
                    line[2]
                )));
            }
            for &p in line.iter() {
                on[p] += 1;
            }
        }
        if let Some(p) = (0..points).find(|&p| on[p] != 3) {
            return Err(FamilyError::InvalidConfiguration(format!(
                "point {p} lies on {} lines",
                on[p]
            )));
        }
        for a in 0..points {
            for b in a + 1..points {
                let shared = lines[a].iter().filter(|p| lines[b].contains(p)).count();
                if shared >= 2 {
                    return Err(FamilyError::NotLinear(a, b));
                }
            }
        }
        Ok(Configuration { points, lines })
    }

    pub fn point_count(&self) -> usize {
        self.points
    }

    pub fn lines(&self) -> &[[usize; 3]] {
        &self.lines
    }

    /// Two lines are parallel when they share no point.
    pub fn parallel(&self, a: usize, b: usize) -> bool {
        a != b && !self.lines[a].iter().any(|p| self.lines[b].contains(p))
    }

    pub fn collinear(&self, p: usize, q: usize) -> bool {
        self.lines.iter().any(|l| l.contains(&p) && l.contains(&q))
    }
}

/// Base line `{0, b, c}` of a cyclic configuration on `Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicParams {
    pub n: usize,
    pub b: usize,
    pub c: usize,
}

impl CyclicParams {
    pub fn new(n: usize, b: usize, c: usize) -> Self {
        CyclicParams { n, b, c }
    }
}

pub fn cyclic_configuration(p: CyclicParams) -> Result<Configuration, FamilyError> {
    let CyclicParams { n, b, c } = p;
    if !(0 < b && b < c && c < n) {
        return Err(FamilyError::InvalidParameter(format!(
            "cyclic base line {{0,{b},{c}}} needs 0 < b < c < n = {n}"
        )));
    }
    let lines = (0..n).map(|j| [j, (j + b) % n, (j + c) % n]).collect();
    Configuration::new(n, lines)
}

/// Levi graph of the cyclic configuration: point `i` ~ line `j` iff `i ∈ {j, j+b, j+c} mod n`.
pub fn cyclic_levi(p: CyclicParams) -> Result<Graph, FamilyError> {
    Ok(levi(&cyclic_configuration(p)?))
}

/// Incidence graph with points `0..n` (labels `p_i`) and lines `n..2n` (labels `l_j`).
pub fn levi(c: &Configuration) -> Graph {
    let n = c.points;
    let edges = c
        .lines
        .iter()
        .enumerate()
        .flat_map(|(j, line)| line.iter().map(move |&p| (p, n + j)));
    let labels = (0..n)
        .map(|i| format!("p_{i}"))
        .chain((0..n).map(|j| format!("l_{j}")))
        .collect();
    Graph::new(2 * n, edges)
        .and_then(|g| g.with_labels(labels))
        .expect("a validated configuration has a simple incidence graph")
}

/// Reads a configuration back from a cubic bipartite graph of girth at least 6.
/// Vertices on `points` become points (in index order); each vertex on the
/// other side contributes its neighborhood as a line.
pub fn config_from_levi(g: &Graph, points: Side) -> Result<Configuration, FamilyError> {
    g.check_cubic()?;
    let sides = bipartition(g).ok_or(FamilyError::NotBipartite)?;
    if let Some(gr) = girth(g) {
        if gr < 6 {
            return Err(FamilyError::GirthTooSmall(gr));
        }
    }
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (k, v) in sides.vertices(points).enumerate() {
        index[v] = k;
    }
    let point_count = sides.vertices(points).count();
    let lines = sides
        .vertices(points.other())
        .map(|v| {
            let nb: Vec<usize> = g.neighbors(v).map(|w| index[w]).collect();
            [nb[0], nb[1], nb[2]]
        })
        .collect();
    Configuration::new(point_count, lines)
}

/// The Fano plane as the cyclic configuration with base line `{0,1,3}` mod 7.
pub fn fano_configuration() -> Configuration {
    cyclic_configuration(CyclicParams::new(7, 1, 3)).expect("Fano plane is a 7_3 configuration")
}

/// Pappus configuration: points A,B,C (0..3) on one line, a,b,c (3..6) on
/// another, and the three cross-joins X,Y,Z (6..9) on the Pappus line.
pub fn pappus_configuration() -> Configuration {
    let (a, b, c, a2, b2, c2, x, y, z) = (0, 1, 2, 3, 4, 5, 6, 7, 8);
    Configuration::new(
        9,
        vec![
            [a, b, c],
            [a2, b2, c2],
            [x, y, z],
            [a, b2, x],
            [a2, b, x],
            [a, c2, y],
            [a2, c, y],
            [b, c2, z],
            [b2, c, z],
        ],
    )
    .expect("Pappus configuration is a 9_3 configuration")
}

/// Desargues configuration: points are the 2-subsets of a 5-set, lines the
/// 3-subsets, incidence is containment.
pub fn desargues_configuration() -> Configuration {
    let pairs: Vec<[usize; 2]> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| [a, b]))
        .collect();
    let point = |a: usize, b: usize| pairs.iter().position(|p| *p == [a, b]).unwrap();
    let mut lines = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                lines.push([point(a, b), point(a, c), point(b, c)]);
            }
        }
    }
    Configuration::new(10, lines).expect("Desargues configuration is a 10_3 configuration")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_six_is_not_linear() {
        let err = cyclic_configuration(CyclicParams::new(6, 1, 3)).unwrap_err();
        // lines {0,1,3} and {3,4,0}
        assert_eq!(err, FamilyError::NotLinear(0, 3));
    }

    #[test]
    fn cyclic_parameters_are_checked() {
        assert!(matches!(
            cyclic_configuration(CyclicParams::new(7, 3, 1)),
            Err(FamilyError::InvalidParameter(_))
        ));
    }

    #[test]
    fn levi_graph_shape() {
        let g = levi(&fano_configuration());
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.edge_count(), 21);
        assert!(g.is_cubic());
        assert_eq!(girth(&g), Some(6));
        assert!(g.has_edge(0, 7));
        assert_eq!(g.label(7), Some("l_0"));
    }

    #[test]
    fn configuration_round_trip_is_exact_for_point_side() {
        let c = pappus_configuration();
        let back = config_from_levi(&levi(&c), Side::Black).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn k33_is_rejected_for_small_girth() {
        let g = Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        assert_eq!(config_from_levi(&g, Side::Black), Err(FamilyError::GirthTooSmall(4)));
    }

    #[test]
    fn parallel_and_collinear() {
        let c = pappus_configuration();
        assert!(c.parallel(0, 1));
        assert!(!c.parallel(0, 3));
        assert!(c.collinear(0, 4));
        assert!(!c.collinear(0, 3));
    }
}
