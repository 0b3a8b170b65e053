//! Levi graphs of symmetric `n_3` configurations and their 2-factors.
//!
//! The crate builds the incidence graphs of the irreducible configuration
//! families (cyclic `{0,1,3}` configurations via `D(n)`, the `T_1/T_2/T_3`
//! families, Pappus), enumerates 2-factors of cubic graphs through the
//! complementary perfect matchings, classifies graphs by the parity of the
//! number of circuits in their 2-factors, and implements Martinetti
//! extension and reduction as validated graph rewrites.

pub mod families;
pub mod graph_core;
pub mod martinetti;
pub mod two_factors;
pub mod witnesses;

pub use graph_core::{Graph, GraphError};
