//! Explicit k-super graceful labelings for specific graph families.
//!
//! Every constructor runs the verifier on its own output before returning,
//! so a returned [`LabeledGraph`] is always valid with the stated `k`.

mod cycles;
mod fixtures;
mod partite;
mod paths;

use thiserror::Error;

use crate::caterpillar::CaterpillarGraph;
use crate::graph::{Graph, GraphError};
use crate::labeling::{induce_edge_labels, verify, Label, LabeledGraph, LabelingError, TotalLabeling, Verdict};

pub use cycles::{label_odd_cycle, label_tadpole, TadpoleVariant};
pub use fixtures::{fixture, fixture_names, fixtures, FixtureEntry};
pub use partite::{
    label_complete_bipartite, label_g1mnk, label_k11r, label_spider_1k2, label_star, label_star_with_apex,
    star_for_set, Part,
};
pub use paths::{label_path_k, label_path_super_graceful, path_formula_labeling, PathRoute};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("no known construction for P_{n} with k = {k}; try the search engine")]
    NoKnownConstruction { n: usize, k: Label },
    #[error("K(1,{n}) is not {k}-super graceful: {k} does not divide {n}")]
    NotDivisible { n: usize, k: Label },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("construction `{what}` failed verification: {verdict:?}")]
    Unverified { what: String, verdict: Verdict },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

pub(crate) fn out_of_range(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::OutOfRange(msg.into())
}

/// Verifies `labeling` on `graph` and packages it, failing unless it is valid
/// with exactly `k`.
pub(crate) fn finish(
    what: &str,
    graph: Graph,
    labeling: TotalLabeling,
    k: Label,
) -> Result<LabeledGraph, ConstructionError> {
    let verdict = verify(&graph, &labeling)?;
    if !verdict.is_valid_with(k) {
        return Err(ConstructionError::Unverified {
            what: what.to_string(),
            verdict,
        });
    }
    Ok(LabeledGraph { graph, labeling, k })
}

pub(crate) fn finish_vertices(
    what: &str,
    graph: Graph,
    vertex_labels: Vec<Label>,
    k: Label,
) -> Result<LabeledGraph, ConstructionError> {
    let labeling = induce_edge_labels(&graph, vertex_labels)?;
    finish(what, graph, labeling, k)
}

/// Which side of the bipartition receives the smallest label range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `k = a`: `f(u_i) = 3a+2b-1-i`, `f(v_j) = a+j-1`.
    A,
    /// `k = b`: the A labeling complemented with `c = 3a+3b-2`.
    B,
}

/// Labels a caterpillar `Ct(a,b)` with `k = a` (side A) or `k = b` (side B).
pub fn label_caterpillar(ct: &CaterpillarGraph, side: Side) -> Result<LabeledGraph, ConstructionError> {
    let labels = caterpillar_vertex_labels(ct, side);
    let (a, b) = (ct.a() as Label, ct.b() as Label);
    let k = match side {
        Side::A => a,
        Side::B => b,
    };
    finish_vertices("caterpillar", ct.graph.clone(), labels, k)
}

pub(crate) fn caterpillar_vertex_labels(ct: &CaterpillarGraph, side: Side) -> Vec<Label> {
    let (a, b) = (ct.a() as Label, ct.b() as Label);
    let mut labels = vec![0; ct.graph.p()];
    for (i, &u) in ct.a_order.iter().enumerate() {
        labels[u] = 3 * a + 2 * b - 2 - i as Label;
    }
    for (j, &v) in ct.b_order.iter().enumerate() {
        labels[v] = a + j as Label;
    }
    if side == Side::B {
        let c = 3 * a + 3 * b - 2;
        for x in &mut labels {
            *x = c - *x;
        }
    }
    labels
}
