use crate::graph_core::{Graph, LabeledBuilder};

use super::{label, FamilyError};

fn u(i: usize, j: usize) -> String {
    label("u", i, j)
}

fn v(i: usize, j: usize) -> String {
    label("v", i, j)
}

fn w(m: usize, j: usize) -> String {
    label("w", m, j)
}

fn chain_builder(m: usize) -> LabeledBuilder {
    let mut b = LabeledBuilder::new();
    for i in 1..=m {
        for name in [u(i, 1), u(i, 2), u(i, 3), u(i, 4), v(i, 1), v(i, 2)] {
            b.vertex(&name);
        }
    }
    for i in 1..=m {
        // the 6-circuit u^1 u^2 u^3 u^4 v^2 v^1
        b.edge(&u(i, 1), &u(i, 2));
        b.edge(&u(i, 2), &u(i, 3));
        b.edge(&u(i, 3), &u(i, 4));
        b.edge(&u(i, 4), &v(i, 2));
        b.edge(&v(i, 2), &v(i, 1));
        b.edge(&v(i, 1), &u(i, 1));
        if i >= 2 {
            b.edge(&v(i - 1, 1), &u(i, 1));
            b.edge(&v(i - 1, 2), &u(i, 4));
            b.edge(&u(i - 1, 3), &u(i, 2));
        }
    }
    b
}

/// The chain `C(m)` of `m` hexagonal segments on `6m` vertices.
pub fn segment_chain(m: usize) -> Result<Graph, FamilyError> {
    if m < 1 {
        return Err(FamilyError::InvalidParameter(
            "segment chain needs at least one segment".into(),
        ));
    }
    Ok(chain_builder(m).build()?)
}

/// `D(n)`: `C(m)` closed according to `n mod 3`. Isomorphic to the Levi graph
/// of the cyclic configuration with base line `{0,1,3}` mod `n`.
pub fn d_graph(n: usize) -> Result<Graph, FamilyError> {
    if n < 7 {
        return Err(FamilyError::InvalidParameter(format!(
            "D(n) needs n >= 7, got {n}"
        )));
    }
    let m = n / 3;
    let mut b = chain_builder(m);
    match n % 3 {
        0 => {
            b.edge(&u(1, 1), &v(m, 1));
            b.edge(&u(1, 4), &v(m, 2));
            b.edge(&u(1, 2), &u(m, 3));
        }
        1 => {
            b.edge(&u(1, 1), &w(m, 1));
            b.edge(&u(1, 2), &v(m, 2));
            b.edge(&u(1, 4), &w(m, 2));
            b.edge(&w(m, 1), &w(m, 2));
            b.edge(&w(m, 1), &u(m, 3));
            b.edge(&w(m, 2), &v(m, 1));
        }
        _ => {
            b.edge(&v(m, 1), &w(m, 1));
            b.edge(&v(m, 2), &w(m, 4));
            b.edge(&u(m, 3), &w(m, 2));
            b.edge(&u(1, 1), &w(m, 4));
            b.edge(&u(1, 2), &w(m, 1));
            b.edge(&u(1, 4), &w(m, 3));
            b.edge(&w(m, 1), &w(m, 2));
            b.edge(&w(m, 2), &w(m, 3));
            b.edge(&w(m, 3), &w(m, 4));
        }
    }
    Ok(b.build()?)
}
