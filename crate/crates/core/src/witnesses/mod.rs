//! Explicit 2-factors of opposite circuit parity for the D and T families,
//! assembled from path templates and checked against the host graph.

mod suite;
mod template;

use serde::Serialize;
use thiserror::Error;

use crate::families::{d_graph, t_graph, FamilyError, FamilyId, TVariant};
use crate::graph_core::{Graph, GraphError, Path};
use crate::two_factors::TwoFactor;

pub use suite::{verify_claim_suite, ClaimGroup, ClaimResult, ClaimStatus, Ledger, SuiteConfig};
pub use template::{template, templates, Env, Formula, PathTemplate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("no witness pair for n = {0}; the template tables start at n = 8")]
    OutOfRange(usize),
    #[error("junction {junction}: no edge {from}-{to}")]
    MissingJunctionEdge {
        junction: usize,
        from: String,
        to: String,
    },
    #[error("vertex {0} used twice")]
    VertexReuse(String),
    #[error("template does not reproduce: {0}")]
    TemplateInvalid(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Joins paths end to end through host edges. With `close_with`, that vertex
/// is appended last; a sequence ending on its first vertex becomes a circuit.
pub fn concat(g: &Graph, paths: &[Path], close_with: Option<usize>) -> Result<Path, WitnessError> {
    let mut verts: Vec<usize> = Vec::new();
    let mut junction = 0;
    let mut push_piece = |verts: &mut Vec<usize>, piece: &[usize]| {
        if let (Some(&last), Some(&first)) = (verts.last(), piece.first()) {
            junction += 1;
            if !g.has_edge(last, first) {
                return Err(WitnessError::MissingJunctionEdge {
                    junction,
                    from: g.display_vertex(last),
                    to: g.display_vertex(first),
                });
            }
        }
        verts.extend_from_slice(piece);
        Ok(())
    };
    for p in paths {
        push_piece(&mut verts, p.vertices())?;
    }
    if let Some(v) = close_with {
        push_piece(&mut verts, &[v])?;
    }
    let closes = verts.len() > 3 && verts.first() == verts.last();
    let body = if closes { &verts[..verts.len() - 1] } else { &verts[..] };
    let mut seen = vec![false; g.vertex_count()];
    for &v in body {
        if std::mem::replace(&mut seen[v], true) {
            return Err(WitnessError::VertexReuse(g.display_vertex(v)));
        }
    }
    Ok(Path::new(g, verts)?)
}

/// Instantiates a formula in `g` and checks that it is a 2-factor with the
/// formula's number of circuits.
pub fn realize(g: &Graph, formula: &Formula, m: usize, n: usize) -> Result<TwoFactor, WitnessError> {
    let invalid = |e: WitnessError| match e {
        WitnessError::TemplateInvalid(_) => e,
        other => WitnessError::TemplateInvalid(format!("{formula}: {other}")),
    };
    let mut edges = Vec::new();
    for pieces in formula.pieces(m, n)? {
        let paths = pieces
            .iter()
            .map(|labels| {
                let verts = labels
                    .iter()
                    .map(|l| {
                        g.vertex_by_label(l).ok_or_else(|| {
                            WitnessError::TemplateInvalid(format!("{formula}: no vertex {l}"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Path::new(g, verts).map_err(WitnessError::from)
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(invalid)?;
        let c = concat(g, &paths, None).map_err(invalid)?;
        if !c.is_circuit() {
            return Err(WitnessError::TemplateInvalid(format!(
                "{formula}: a circuit does not close"
            )));
        }
        edges.extend(c.edge_indices(g));
    }
    let f = TwoFactor::from_edges(g, &edges).map_err(|e| {
        WitnessError::TemplateInvalid(format!("{formula}: not a 2-factor ({e})"))
    })?;
    if f.circuit_count != formula.circuit_count() {
        return Err(WitnessError::TemplateInvalid(format!(
            "{formula}: circuits overlap"
        )));
    }
    Ok(f)
}

/// A Hamilton circuit and a 2-factor with exactly two circuits in the same graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessPair {
    pub family: String,
    pub hamiltonian_formula: String,
    pub disconnected_formula: String,
    pub hamiltonian: TwoFactor,
    pub disconnected: TwoFactor,
}

fn pair_in(
    g: &Graph,
    family: FamilyId,
    (ham, dis): (&str, &str),
    m: usize,
    n: usize,
) -> Result<WitnessPair, WitnessError> {
    let ham = Formula::parse(ham)?;
    let dis = Formula::parse(dis)?;
    let h = realize(g, &ham, m, n)?;
    let d = realize(g, &dis, m, n)?;
    if h.circuit_count != 1 || d.circuit_count != 2 {
        return Err(WitnessError::TemplateInvalid(format!(
            "circuit counts {} and {}",
            h.circuit_count, d.circuit_count
        )));
    }
    Ok(WitnessPair {
        family: family.to_string(),
        hamiltonian_formula: ham.text,
        disconnected_formula: dis.text,
        hamiltonian: h,
        disconnected: d,
    })
}

/// The formulas used for `D(n)`, `n >= 8`: (Hamiltonian, two circuits).
pub fn d_formulas(n: usize) -> Result<(&'static str, &'static str), WitnessError> {
    if n < 8 {
        return Err(WitnessError::OutOfRange(n));
    }
    let ham = match n % 3 {
        0 => "(L^1[1..m] u_1^1)",
        1 => "(L^1[1..m] w_m^2 w_m^1 u_1^1)",
        _ => "(L^1[1..m] w_m^1 w_m^2 w_m^3 w_m^4 u_1^1)",
    };
    let dis = match (n % 3, n) {
        (0, 9) => "C_1 | (M_1 u_1^4)",
        (0, _) => "C_1 | (M_1 L^2[4..m] u_1^4)",
        (1, 10) => "C_2 | C_3",
        (1, 13) => "C_1 | (M_1 M_2)",
        (1, _) => "C_1 | (M_1 L^2[4..m-1] M_2)",
        (_, 8) => "C_1 | (N_m w_m^2)",
        // the generic N_3..N_m run is followed by the special N_m path
        _ => "C_1 | (N[3..m] N_m u_3^2)",
    };
    Ok((ham, dis))
}

/// The formulas used for `T_k(n)`.
pub fn t_formulas(variant: TVariant) -> (&'static str, &'static str) {
    match variant {
        TVariant::One | TVariant::Two => (
            "(P^1[1..n] u_1^2)",
            "(P^2[1] P^1[2..n] u_1^2) | P^3[1]",
        ),
        TVariant::Three => (
            "(Q^1[1] P^1[2..n] u_1^3)",
            "(Q^2[1] P^1[2..n] u_1^3) | P^3[1]",
        ),
    }
}

pub fn d_witness_pair(n: usize) -> Result<WitnessPair, WitnessError> {
    let formulas = d_formulas(n)?;
    let g = d_graph(n)?;
    pair_in(&g, FamilyId::D(n), formulas, n / 3, n)
}

pub fn t_witness_pair(n: usize, variant: TVariant) -> Result<WitnessPair, WitnessError> {
    let g = t_graph(n, variant)?;
    t_witness_pair_in(&g, n, variant)
}

/// As [`t_witness_pair`] in a given host, e.g. one built from a modified segment.
pub fn t_witness_pair_in(g: &Graph, n: usize, variant: TVariant) -> Result<WitnessPair, WitnessError> {
    pair_in(g, FamilyId::T { n, variant }, t_formulas(variant), n, n)
}
