//! Martinetti extension and reduction on Levi graphs of n3 configurations.
//!
//! Points are the `Black` side of the bipartition, lines the `White` side.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph_core::{bipartition, canonical_form, girth, is_connected, Bipartition, Certificate, Graph, GraphError, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionClause {
    MultiEdge,
    Regularity,
    Girth,
    Disconnected,
}

impl fmt::Display for ReductionClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionClause::MultiEdge => "multi-edge",
            ReductionClause::Regularity => "regularity",
            ReductionClause::Girth => "girth",
            ReductionClause::Disconnected => "disconnected",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MartinettiError {
    #[error("graph is not bipartite")]
    NoBipartition,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid extension site: {0}")]
    InvalidSite(String),
    #[error("extension postcondition violated: {0}")]
    PostconditionViolated(String),
    #[error("invalid reduction: {clause}")]
    InvalidReduction { clause: ReductionClause },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Two edges `x1y1`, `x2y2` with `x1, x2` points and `y1, y2` lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ExtensionSite {
    pub e1: usize,
    pub e2: usize,
    pub x1: usize,
    pub y1: usize,
    pub x2: usize,
    pub y2: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionOption {
    /// adds `x1y1`, `x2y2`
    Straight,
    /// adds `x1y2`, `x2y1`
    Crossed,
}

/// Edge `uv` to remove, with `x1 < x2` the other neighbors of `u` and
/// `y1 < y2` those of `v`. `u` is the lower-index endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionSite {
    pub edge: usize,
    pub u: usize,
    pub v: usize,
    pub x: [usize; 2],
    pub y: [usize; 2],
    pub option: ReductionOption,
    /// Canonical certificate of the reduced graph, filled by [`reduction_sites`].
    #[serde(serialize_with = "ser_cert")]
    pub after: Option<Certificate>,
}

fn ser_cert<S: serde::Serializer>(c: &Option<Certificate>, s: S) -> Result<S::Ok, S::Error> {
    match c {
        Some(c) => s.serialize_some(c.as_str()),
        None => s.serialize_none(),
    }
}

impl ReductionSite {
    pub fn new(g: &Graph, edge: usize, option: ReductionOption) -> Result<Self, MartinettiError> {
        if edge >= g.edge_count() {
            return Err(GraphError::EdgeOutOfRange(edge).into());
        }
        g.check_cubic()?;
        let (u, v) = g.edge(edge);
        let others = |a: usize, b: usize| {
            let mut o: Vec<usize> = g.neighbors(a).filter(|&w| w != b).collect();
            o.sort_unstable();
            [o[0], o[1]]
        };
        Ok(ReductionSite {
            edge,
            u,
            v,
            x: others(u, v),
            y: others(v, u),
            option,
            after: None,
        })
    }

    pub fn added_edges(&self) -> [(usize, usize); 2] {
        let [x1, x2] = self.x;
        let [y1, y2] = self.y;
        match self.option {
            ReductionOption::Straight => [(x1, y1), (x2, y2)],
            ReductionOption::Crossed => [(x1, y2), (x2, y1)],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum MoveKind {
    Extension(ExtensionSite),
    Reduction(ReductionSite),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MartinettiMove {
    #[serde(flatten)]
    pub kind: MoveKind,
    #[serde(serialize_with = "ser_cert_plain")]
    pub before: Certificate,
    #[serde(serialize_with = "ser_cert_plain")]
    pub after: Certificate,
}

fn ser_cert_plain<S: serde::Serializer>(c: &Certificate, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(c.as_str())
}

impl MartinettiMove {
    pub fn extension(g: &Graph, site: ExtensionSite) -> Result<(Graph, Self), MartinettiError> {
        let h = extend(g, &site)?;
        let mv = MartinettiMove {
            kind: MoveKind::Extension(site),
            before: canonical_form(g),
            after: canonical_form(&h),
        };
        Ok((h, mv))
    }

    pub fn reduction(g: &Graph, site: ReductionSite) -> Result<(Graph, Self), MartinettiError> {
        let h = reduce(g, &site)?;
        let mv = MartinettiMove {
            before: canonical_form(g),
            after: canonical_form(&h),
            kind: MoveKind::Reduction(site),
        };
        Ok((h, mv))
    }
}

/// Checks cubic, bipartite and girth at least 6.
fn levi_precondition(g: &Graph) -> Result<Bipartition, MartinettiError> {
    g.check_cubic()?;
    let sides = bipartition(g).ok_or(MartinettiError::NoBipartition)?;
    match girth(g) {
        Some(k) if k < 6 => Err(MartinettiError::Precondition(format!(
            "girth {k} is below 6"
        ))),
        _ => Ok(sides),
    }
}

fn disjoint_neighborhoods(g: &Graph, a: usize, b: usize) -> bool {
    a != b && g.neighbors(a).all(|w| !g.has_edge(w, b))
}

fn site_for(g: &Graph, sides: &Bipartition, e1: usize, e2: usize) -> Option<ExtensionSite> {
    let orient = |e: usize| {
        let (a, b) = g.edge(e);
        if sides.side(a) == Side::Black {
            (a, b)
        } else {
            (b, a)
        }
    };
    let (x1, y1) = orient(e1);
    let (x2, y2) = orient(e2);
    (disjoint_neighborhoods(g, x1, x2) && disjoint_neighborhoods(g, y1, y2)).then_some(
        ExtensionSite {
            e1,
            e2,
            x1,
            y1,
            x2,
            y2,
        },
    )
}

/// Every edge pair `e1 < e2` whose points share no line and whose lines share no point.
pub fn extension_sites(g: &Graph) -> Result<Vec<ExtensionSite>, MartinettiError> {
    let sides = levi_precondition(g)?;
    let m = g.edge_count();
    Ok((0..m)
        .flat_map(|e1| (e1 + 1..m).map(move |e2| (e1, e2)))
        .filter_map(|(e1, e2)| site_for(g, &sides, e1, e2))
        .collect())
}

/// Removes `x1y1`, `x2y2` and adds a line `u = n` on `x1, x2` and a point
/// `v = n + 1` on `y1, y2`, joined by the edge `uv`.
pub fn extend(g: &Graph, site: &ExtensionSite) -> Result<Graph, MartinettiError> {
    let sides = levi_precondition(g)?;
    let m = g.edge_count();
    if site.e1 >= m || site.e2 >= m || site.e1 == site.e2 {
        return Err(MartinettiError::InvalidSite("edge index out of range or repeated".into()));
    }
    let (e1, e2) = (site.e1.min(site.e2), site.e1.max(site.e2));
    let expected = site_for(g, &sides, e1, e2).ok_or_else(|| {
        MartinettiError::InvalidSite(format!(
            "edges {} and {} share a neighborhood",
            site.e1, site.e2
        ))
    })?;
    let same = |s: &ExtensionSite| {
        (s.x1, s.y1, s.x2, s.y2) == (site.x1, site.y1, site.x2, site.y2)
            || (s.x1, s.y1, s.x2, s.y2) == (site.x2, site.y2, site.x1, site.y1)
    };
    if !same(&expected) {
        return Err(MartinettiError::InvalidSite(
            "endpoints do not match the edges".into(),
        ));
    }
    let n = g.vertex_count();
    let (u, v) = (n, n + 1);
    let added = [
        (u, site.x1),
        (u, site.x2),
        (v, site.y1),
        (v, site.y2),
        (u, v),
    ];
    let h = g
        .rewired(&[e1, e2], 2, &added)
        .map_err(|e| MartinettiError::PostconditionViolated(e.to_string()))?;
    if let Err(e) = h.check_cubic() {
        return Err(MartinettiError::PostconditionViolated(e.to_string()));
    }
    if bipartition(&h).is_none() {
        return Err(MartinettiError::PostconditionViolated("not bipartite".into()));
    }
    match girth(&h) {
        Some(k) if k < 6 => Err(MartinettiError::PostconditionViolated(format!("girth {k}"))),
        _ => Ok(h),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReduceOptions {
    pub allow_disconnected: bool,
}

/// Deletes `u, v` and adds the option's two edges.
pub fn reduce(g: &Graph, site: &ReductionSite) -> Result<Graph, MartinettiError> {
    reduce_with(g, site, ReduceOptions::default())
}

pub fn reduce_with(
    g: &Graph,
    site: &ReductionSite,
    opts: ReduceOptions,
) -> Result<Graph, MartinettiError> {
    // girth is not required of the input, so that a repeated edge can be reported
    g.check_cubic()?;
    bipartition(g).ok_or(MartinettiError::NoBipartition)?;
    let fresh = ReductionSite::new(g, site.edge, site.option)?;
    if (fresh.u, fresh.v, fresh.x, fresh.y) != (site.u, site.v, site.x, site.y) {
        return Err(MartinettiError::Precondition(
            "site does not match the graph".into(),
        ));
    }
    let invalid = |clause| MartinettiError::InvalidReduction { clause };
    let added = site.added_edges();
    if added.iter().any(|&(a, b)| g.has_edge(a, b)) || added[0] == added[1] {
        return Err(invalid(ReductionClause::MultiEdge));
    }
    let (h, map) = g.delete_vertices(&[site.u, site.v]);
    let edges = h
        .edges()
        .iter()
        .copied()
        .chain(added.iter().map(|&(a, b)| (map[a].unwrap(), map[b].unwrap())));
    let mut r = Graph::new(h.vertex_count(), edges).map_err(|_| invalid(ReductionClause::MultiEdge))?;
    if let Some(labels) = h.labels() {
        r = r.with_labels(labels.to_vec())?;
    }
    if !r.is_cubic() {
        return Err(invalid(ReductionClause::Regularity));
    }
    if girth(&r).is_some_and(|k| k < 6) {
        return Err(invalid(ReductionClause::Girth));
    }
    if !opts.allow_disconnected && !is_connected(&r) {
        return Err(invalid(ReductionClause::Disconnected));
    }
    Ok(r)
}

/// Valid reduction sites in edge order, `Straight` before `Crossed`, each with its after-certificate.
pub fn reduction_sites(g: &Graph) -> Result<Vec<ReductionSite>, MartinettiError> {
    reduction_sites_with(g, ReduceOptions::default())
}

pub fn reduction_sites_with(
    g: &Graph,
    opts: ReduceOptions,
) -> Result<Vec<ReductionSite>, MartinettiError> {
    levi_precondition(g)?;
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        for option in [ReductionOption::Straight, ReductionOption::Crossed] {
            let mut site = ReductionSite::new(g, e, option)?;
            if let Ok(r) = reduce_with(g, &site, opts) {
                site.after = Some(canonical_form(&r));
                out.push(site);
            }
        }
    }
    Ok(out)
}

pub fn is_irreducible(g: &Graph) -> Result<bool, MartinettiError> {
    if !is_connected(g) {
        return Err(MartinettiError::Precondition("graph is disconnected".into()));
    }
    Ok(reduction_sites(g)?.is_empty())
}

/// One isomorphism class of extensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionClass {
    pub certificate: Certificate,
    pub multiplicity: usize,
    /// First site producing this class.
    pub site: ExtensionSite,
}

/// Extensions grouped by canonical form, in order of first appearance.
pub fn extensions_up_to_iso(g: &Graph) -> Result<Vec<ExtensionClass>, MartinettiError> {
    let mut classes: Vec<ExtensionClass> = Vec::new();
    let mut index: HashMap<Certificate, usize> = HashMap::new();
    for site in extension_sites(g)? {
        let cert = canonical_form(&extend(g, &site)?);
        match index.get(&cert) {
            Some(&i) => classes[i].multiplicity += 1,
            None => {
                index.insert(cert.clone(), classes.len());
                classes.push(ExtensionClass {
                    certificate: cert,
                    multiplicity: 1,
                    site,
                });
            }
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{d_graph, heawood, k33, pappus, t_graph, TVariant};
    use crate::graph_core::are_isomorphic;

    #[test]
    fn heawood_is_not_extendible() {
        assert!(extension_sites(&heawood()).unwrap().is_empty());
        assert!(extensions_up_to_iso(&heawood()).unwrap().is_empty());
        let bad = ExtensionSite { e1: 0, e2: 1, x1: 0, y1: 0, x2: 0, y2: 0 };
        assert!(matches!(extend(&heawood(), &bad), Err(MartinettiError::InvalidSite(_))));
    }

    #[test]
    fn k33_is_rejected() {
        assert!(matches!(extension_sites(&k33()), Err(MartinettiError::Precondition(_))));
    }

    #[test]
    fn pappus_extends_uniquely_and_reduces_back() {
        let p = pappus();
        let sites = extension_sites(&p).unwrap();
        assert!(!sites.is_empty());
        let classes = extensions_up_to_iso(&p).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].multiplicity, sites.len());
        let h = extend(&p, &sites[0]).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (20, 30));
        assert!(!is_irreducible(&h).unwrap());
        let back = canonical_form(&p);
        let found = reduction_sites(&h).unwrap();
        assert!(found.iter().any(|s| s.after.as_ref() == Some(&back)));
        let uv = h.edge_index(18, 19).unwrap();
        let site = found.iter().find(|s| s.edge == uv).unwrap();
        assert!(are_isomorphic(&reduce(&h, site).unwrap(), &p));
    }

    #[test]
    fn irreducible_families() {
        for n in 7..=12 {
            assert!(is_irreducible(&d_graph(n).unwrap()).unwrap(), "D({n})");
        }
        for v in TVariant::ALL {
            assert!(is_irreducible(&t_graph(1, v).unwrap()).unwrap());
        }
        assert!(is_irreducible(&pappus()).unwrap());
    }

    #[test]
    fn multi_edge_reduction_is_named() {
        let h = extend(&pappus(), &extension_sites(&pappus()).unwrap()[0]).unwrap();
        // removing any original edge and re-adding through it recreates a neighbor pair
        let clause = (0..h.edge_count())
            .flat_map(|e| {
                [ReductionOption::Straight, ReductionOption::Crossed]
                    .map(|o| ReductionSite::new(&h, e, o).unwrap())
            })
            .filter_map(|s| match reduce(&h, &s) {
                Err(MartinettiError::InvalidReduction { clause }) => Some(clause),
                _ => None,
            })
            .collect::<Vec<_>>();
        assert!(clause.contains(&ReductionClause::Girth) || clause.contains(&ReductionClause::MultiEdge));
    }

    #[test]
    fn extension_move_records_certificates() {
        let p = pappus();
        let site = extension_sites(&p).unwrap()[0];
        let (h, mv) = MartinettiMove::extension(&p, site).unwrap();
        assert_eq!(mv.before, canonical_form(&p));
        assert_eq!(mv.after, canonical_form(&h));
    }
}
