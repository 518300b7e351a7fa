//! Total labelings, the k-super graceful verifier and the complement map.
//!
//! A total labeling of a `(p, q)`-graph is k-super graceful when its `p + q`
//! labels are exactly the integers `k..=k+p+q-1` and every edge carries the
//! absolute difference of its endpoint labels.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::independence::independence_number;

pub type Label = u32;

/// Largest label any labeling may use.
pub const LABEL_LIMIT: u64 = i32::MAX as u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("vertices {u} and {v} are adjacent and share label {label}; the induced edge label would be 0")]
    ZeroEdgeLabel { u: usize, v: usize, label: Label },
    #[error("vertex {0} has label 0; labels must be positive")]
    ZeroVertexLabel(usize),
    #[error("labeling does not match the graph: {0}")]
    ShapeMismatch(String),
    #[error("complement constant {c} must exceed the largest vertex label {max}")]
    ComplementTooSmall { c: Label, max: Label },
    #[error("largest label {0} exceeds the supported bound {LABEL_LIMIT}")]
    LabelOverflow(u64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Labels on every vertex and every edge of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "LabelingRepr", into = "LabelingRepr")]
pub struct TotalLabeling {
    vertex_labels: Vec<Label>,
    edge_labels: BTreeMap<(usize, usize), Label>,
}

#[derive(Serialize, Deserialize)]
struct LabelingRepr {
    vertex_labels: Vec<Label>,
    edge_labels: Vec<(usize, usize, Label)>,
}

impl From<LabelingRepr> for TotalLabeling {
    fn from(r: LabelingRepr) -> Self {
        TotalLabeling::new(r.vertex_labels, r.edge_labels)
    }
}

impl From<TotalLabeling> for LabelingRepr {
    fn from(f: TotalLabeling) -> Self {
        LabelingRepr {
            edge_labels: f.edge_labels().collect(),
            vertex_labels: f.vertex_labels,
        }
    }
}

impl TotalLabeling {
    /// Raw constructor; edge keys are normalized to `(min, max)`.
    pub fn new<I>(vertex_labels: Vec<Label>, edge_labels: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Label)>,
    {
        let edge_labels = edge_labels
            .into_iter()
            .map(|(u, v, l)| ((u.min(v), u.max(v)), l))
            .collect();
        TotalLabeling {
            vertex_labels,
            edge_labels,
        }
    }

    pub fn vertex(&self, v: usize) -> Label {
        self.vertex_labels[v]
    }

    pub fn vertex_labels(&self) -> &[Label] {
        &self.vertex_labels
    }

    pub fn edge(&self, u: usize, v: usize) -> Option<Label> {
        self.edge_labels.get(&(u.min(v), u.max(v))).copied()
    }

    /// `(u, v, label)` triples with `u < v`, sorted by edge.
    pub fn edge_labels(&self) -> impl Iterator<Item = (usize, usize, Label)> + '_ {
        self.edge_labels.iter().map(|(&(u, v), &l)| (u, v, l))
    }

    /// Overwrites (or inserts) one edge label.
    pub fn set_edge_label(&mut self, u: usize, v: usize, label: Label) {
        self.edge_labels.insert((u.min(v), u.max(v)), label);
    }

    pub fn set_vertex_label(&mut self, v: usize, label: Label) {
        self.vertex_labels[v] = label;
    }

    /// Every label, vertices first.
    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        self.vertex_labels.iter().copied().chain(self.edge_labels.values().copied())
    }

    pub fn min_label(&self) -> Option<Label> {
        self.labels().min()
    }

    pub fn max_label(&self) -> Option<Label> {
        self.labels().max()
    }

    /// Graphviz rendering with vertex and edge labels.
    pub fn to_dot(&self, g: &Graph) -> String {
        g.dot_with(
            |v| self.vertex_labels.get(v).map_or(String::from("?"), |l| l.to_string()),
            |u, v| self.edge(u, v).map(|l| l.to_string()),
        )
    }
}

/// A graph together with a verified k-super graceful labeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labeling: TotalLabeling,
    pub k: Label,
}

/// Labels every edge with `|f(u) - f(v)|`. No validity judgment is made.
pub fn induce_edge_labels(g: &Graph, vertex_labels: Vec<Label>) -> Result<TotalLabeling, LabelingError> {
    if vertex_labels.len() != g.p() {
        return Err(LabelingError::ShapeMismatch(format!(
            "{} vertex labels for {} vertices",
            vertex_labels.len(),
            g.p()
        )));
    }
    if let Some(v) = vertex_labels.iter().position(|&l| l == 0) {
        return Err(LabelingError::ZeroVertexLabel(v));
    }
    let mut edges = Vec::with_capacity(g.q());
    for &(u, v) in g.edges() {
        let (x, y) = (vertex_labels[u], vertex_labels[v]);
        if x == y {
            return Err(LabelingError::ZeroEdgeLabel { u, v, label: x });
        }
        edges.push((u, v, x.abs_diff(y)));
    }
    Ok(TotalLabeling::new(vertex_labels, edges))
}

/// One itemized reason a labeling fails to be k-super graceful.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Some label is used more than once.
    NotBijective { missing: Vec<Label>, duplicates: Vec<Label> },
    /// The labels do not fill `[lo, hi]`, where `lo` is the smallest label.
    RangeGap {
        expected: [u64; 2],
        missing: Vec<Label>,
        above: Vec<Label>,
    },
    /// A recorded edge label differs from the induced one.
    EdgeMismatch {
        edge: [usize; 2],
        induced: Label,
        recorded: Label,
    },
    /// Zero is not a permitted label.
    ZeroLabel,
}

/// Outcome of [`verify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub valid: bool,
    pub k: Option<Label>,
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn is_valid_with(&self, k: Label) -> bool {
        self.valid && self.k == Some(k)
    }
}

/// Checks whether `f` is a k-super graceful labeling of `g`, with `k` taken
/// as the smallest label. Every violation is reported.
pub fn verify(g: &Graph, f: &TotalLabeling) -> Result<Verdict, LabelingError> {
    check_shape(g, f)?;
    let mut violations = Vec::new();
    let k = f.min_label().expect("p >= 1 so at least one label");
    if k == 0 {
        violations.push(Violation::ZeroLabel);
    }
    let total = (g.p() + g.q()) as u64;
    let hi = k as u64 + total - 1;

    let mut labels: Vec<Label> = f.labels().collect();
    labels.sort_unstable();
    let mut duplicates: Vec<Label> = labels.windows(2).filter(|w| w[0] == w[1]).map(|w| w[0]).collect();
    duplicates.dedup();
    let above: Vec<Label> = labels.iter().copied().filter(|&l| l as u64 > hi).collect();
    labels.dedup();
    let mut missing = Vec::new();
    let mut it = labels.iter().peekable();
    for want in k as u64..=hi {
        while it.peek().is_some_and(|&&l| (l as u64) < want) {
            it.next();
        }
        if it.peek().is_none_or(|&&l| l as u64 != want) {
            missing.push(want as Label);
        }
    }
    if !duplicates.is_empty() {
        violations.push(Violation::NotBijective {
            missing: missing.clone(),
            duplicates,
        });
    }
    if !missing.is_empty() || !above.is_empty() {
        violations.push(Violation::RangeGap {
            expected: [k as u64, hi],
            missing,
            above,
        });
    }
    for (u, v, recorded) in f.edge_labels() {
        let induced = f.vertex(u).abs_diff(f.vertex(v));
        if induced != recorded {
            violations.push(Violation::EdgeMismatch {
                edge: [u, v],
                induced,
                recorded,
            });
        }
    }
    let valid = violations.is_empty();
    Ok(Verdict {
        valid,
        k: valid.then_some(k),
        violations,
    })
}

fn check_shape(g: &Graph, f: &TotalLabeling) -> Result<(), LabelingError> {
    if f.vertex_labels.len() != g.p() {
        return Err(LabelingError::ShapeMismatch(format!(
            "{} vertex labels for {} vertices",
            f.vertex_labels.len(),
            g.p()
        )));
    }
    if f.edge_labels.len() != g.q() || !g.edges().iter().all(|e| f.edge_labels.contains_key(e)) {
        return Err(LabelingError::ShapeMismatch(
            "edge labels do not cover exactly the graph's edges".into(),
        ));
    }
    Ok(())
}

/// Replaces every vertex label `x` with `c - x` and re-induces the edges.
///
/// With `c` equal to the sum of the smallest and largest labels this maps a
/// k-super graceful labeling to one whose smallest label is `c - (k+p+q-1)`.
pub fn complement_labeling(g: &Graph, f: &TotalLabeling, c: Label) -> Result<TotalLabeling, LabelingError> {
    check_shape(g, f)?;
    let max = f.vertex_labels.iter().copied().max().unwrap_or(0);
    if c <= max {
        return Err(LabelingError::ComplementTooSmall { c, max });
    }
    induce_edge_labels(g, f.vertex_labels.iter().map(|&x| c - x).collect())
}

/// Why a value of k was ruled out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum NecessaryRule {
    KBelowOne,
    /// The k largest labels must sit on k pairwise non-adjacent vertices.
    IndependenceBound { k: Label, alpha: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Feasibility {
    Infeasible(NecessaryRule),
    /// Necessary conditions hold; existence is still undecided.
    Unknown,
}

/// Applies the necessary conditions `1 <= k <= alpha(g)`.
pub fn check_necessary_conditions(g: &Graph, k: Label) -> Result<Feasibility, LabelingError> {
    if k < 1 {
        return Ok(Feasibility::Infeasible(NecessaryRule::KBelowOne));
    }
    let alpha = independence_number(g)?;
    if k as usize > alpha {
        return Ok(Feasibility::Infeasible(NecessaryRule::IndependenceBound { k, alpha }));
    }
    Ok(Feasibility::Unknown)
}

/// Whether the `k` largest labels (k = smallest label) are all vertex labels
/// on pairwise non-adjacent vertices. Holds for every valid labeling.
pub fn top_labels_independent(g: &Graph, f: &TotalLabeling) -> bool {
    let Some(k) = f.min_label() else { return false };
    let max = f.max_label().unwrap_or(0);
    let threshold = (max as u64 + 1).saturating_sub(k as u64);
    let top: Vec<usize> = (0..g.p()).filter(|&v| f.vertex(v) as u64 >= threshold).collect();
    let edge_in_top = f.edge_labels().any(|(_, _, l)| l as u64 >= threshold);
    top.len() == k as usize
        && !edge_in_top
        && top.iter().all(|&u| top.iter().all(|&v| !g.has_edge(u, v)))
}

/// Rejects labelings whose top label would not fit [`LABEL_LIMIT`].
pub(crate) fn check_label_bound(k: u64, g: &Graph) -> Result<(), LabelingError> {
    let top = k + (g.p() + g.q()) as u64 - 1;
    if top > LABEL_LIMIT {
        return Err(LabelingError::LabelOverflow(top));
    }
    Ok(())
}
