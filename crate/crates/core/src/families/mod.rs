//! Constructors for the configuration families and their Levi graphs.
//!
//! Builders that correspond to drawn families keep the drawing's vertex
//! names as labels (`u_2^3`, `w_3^1`, `t_1^2`, …) so that path templates
//! can be instantiated against them.

mod config;
mod dgraph;
mod named;
mod tgraph;

use std::fmt;

use thiserror::Error;

use crate::graph_core::{Graph, GraphError};

pub use config::{
    config_from_levi, cyclic_configuration, cyclic_levi, desargues_configuration, fano_configuration, levi,
    pappus_configuration, Configuration, CyclicParams,
};
pub use dgraph::{d_graph, segment_chain};
pub use named::{heawood, k33, pappus, star_product, StarProduct};
pub use tgraph::{t_graph, t_graph_from, t_segment, SegmentTemplate, TVariant};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("structure is not linear: lines {0} and {1} share two or more points")]
    NotLinear(usize, usize),
    #[error("not a symmetric n3 configuration: {0}")]
    InvalidConfiguration(String),
    #[error("girth {0} is below 6: two points lie on two common lines")]
    GirthTooSmall(usize),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("star product would not be bipartite")]
    BipartitenessBroken,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Named graph families with their parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    K33,
    Heawood,
    Pappus,
    D(usize),
    T { n: usize, variant: TVariant },
    Cyclic(CyclicParams),
    /// Star product of the Heawood graph with itself at vertex 0 of each copy;
    /// `pairing[i]` is the neighbor slot of the second copy joined to slot `i` of the first.
    HeawoodStar { pairing: [usize; 3] },
}

impl FamilyId {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilyId::K33 => Ok(k33()),
            FamilyId::Heawood => Ok(heawood()),
            FamilyId::Pappus => Ok(pappus()),
            FamilyId::D(n) => d_graph(n),
            FamilyId::T { n, variant } => t_graph(n, variant),
            FamilyId::Cyclic(p) => cyclic_levi(p),
            FamilyId::HeawoodStar { pairing } => {
                let h = heawood();
                Ok(star_product(&h, 0, &h, 0, pairing)?.graph)
            }
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::K33 => write!(f, "K33"),
            FamilyId::Heawood => write!(f, "Heawood"),
            FamilyId::Pappus => write!(f, "Pappus"),
            FamilyId::D(n) => write!(f, "D({n})"),
            FamilyId::T { n, variant } => write!(f, "T{}({n})", variant.number()),
            FamilyId::Cyclic(p) => write!(f, "Cyclic({},{{0,{},{}}})", p.n, p.b, p.c),
            FamilyId::HeawoodStar { pairing } => {
                write!(f, "H0*H0[{},{},{}]", pairing[0], pairing[1], pairing[2])
            }
        }
    }
}

/// Label `name_index^sup`, e.g. `u_2^3`.
pub(crate) fn label(name: &str, index: usize, sup: usize) -> String {
    format!("{name}_{index}^{sup}")
}
