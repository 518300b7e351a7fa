//! Graph surgeries that carry a k-super graceful labeling to a new graph.
//!
//! Each transform checks its preconditions, applies the surgery and then
//! re-verifies the result from scratch.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{label_g1mnk, ConstructionError};
use crate::graph::{disjoint_union, Graph, GraphError};
use crate::labeling::{verify, Label, LabelingError, TotalLabeling, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("input labeling is not k-super graceful: {0:?}")]
    InvalidInput(Verdict),
    #[error("no vertex carries the anchor label {label} needed for pendant {index}")]
    MissingAnchor { index: usize, label: u64 },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("no edge is labeled {0}")]
    NoEdgeLabeledK(Label),
    #[error("transform produced an invalid labeling: {0:?}")]
    Unverified(Verdict),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// A transformed graph with its labeling, valid with `new_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformResult {
    pub graph: Graph,
    pub labeling: TotalLabeling,
    pub new_k: Label,
}

fn input_k(g: &Graph, f: &TotalLabeling) -> Result<Label, TransformError> {
    let verdict = verify(g, f)?;
    match verdict.k {
        Some(k) if verdict.valid => Ok(k),
        _ => Err(TransformError::InvalidInput(verdict)),
    }
}

fn finish(graph: Graph, labeling: TotalLabeling, new_k: Label) -> Result<TransformResult, TransformError> {
    let verdict = verify(&graph, &labeling)?;
    if !verdict.is_valid_with(new_k) {
        return Err(TransformError::Unverified(verdict));
    }
    Ok(TransformResult { graph, labeling, new_k })
}

/// Labels of the pendant step for a k-labeled graph of total size `p + q`:
/// for `i = 1..=t`, the anchor label `p+q-1+2i`, the new vertex label
/// `k+p+q-1+i` and the new edge label `k-i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantPlan {
    pub anchors: Vec<u64>,
    pub new_vertices: Vec<u64>,
    pub new_edges: Vec<u64>,
    pub new_k: u64,
}

pub fn pendant_plan(k: u64, total: u64, t: u64) -> Result<PendantPlan, TransformError> {
    if t < 1 || t > k / 2 {
        return Err(TransformError::PreconditionFailed(format!(
            "pendant count t = {t} must satisfy 1 <= t <= floor(k/2) = {}",
            k / 2
        )));
    }
    Ok(PendantPlan {
        anchors: (1..=t).map(|i| total - 1 + 2 * i).collect(),
        new_vertices: (1..=t).map(|i| k + total - 1 + i).collect(),
        new_edges: (1..=t).map(|i| k - i).collect(),
        new_k: k - t,
    })
}

/// Attaches `t` pendant vertices to the vertices labeled `p+q-1+2i`.
///
/// The pendants get ids `p..p+t` in order of `i`.
pub fn attach_pendants(g: &Graph, f: &TotalLabeling, t: usize) -> Result<TransformResult, TransformError> {
    let k = input_k(g, f)?;
    let total = (g.p() + g.q()) as u64;
    let plan = pendant_plan(k as u64, total, t as u64)?;
    let mut anchors = Vec::with_capacity(t);
    for (idx, &label) in plan.anchors.iter().enumerate() {
        let v = (0..g.p())
            .find(|&v| f.vertex(v) as u64 == label)
            .ok_or(TransformError::MissingAnchor { index: idx + 1, label })?;
        anchors.push(v);
    }
    let p = g.p();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(anchors.iter().enumerate().map(|(i, &u)| (u, p + i)));
    let graph = Graph::new(p + t, edges, g.name())?;
    let mut vertices = f.vertex_labels().to_vec();
    vertices.extend(plan.new_vertices.iter().map(|&l| l as Label));
    let labeling = TotalLabeling::new(
        vertices,
        f.edge_labels()
            .chain(anchors.iter().enumerate().map(|(i, &u)| (u, p + i, plan.new_edges[i] as Label))),
    );
    finish(graph, labeling, plan.new_k as Label)
}

/// Deletes a vertex carrying the largest label whose incident edges carry
/// exactly `k..=k+d-1`; the rest is `(k+d)`-labeled. Larger ids shift down
/// by one. Isolated vertices may remain.
pub fn delete_apex(g: &Graph, f: &TotalLabeling, v: usize) -> Result<TransformResult, TransformError> {
    let k = input_k(g, f)?;
    if v >= g.p() {
        return Err(TransformError::PreconditionFailed(format!("vertex {v} does not exist")));
    }
    let top = k as u64 + (g.p() + g.q()) as u64 - 1;
    if f.vertex(v) as u64 != top {
        return Err(TransformError::PreconditionFailed(format!(
            "f({v}) = {} is not the largest label {top}",
            f.vertex(v)
        )));
    }
    let d = g.degree(v) as Label;
    let mut incident: Vec<Label> = g.neighbors(v).iter().map(|&w| f.edge(v, w).expect("edge")).collect();
    incident.sort_unstable();
    if d == 0 || incident != (k..k + d).collect::<Vec<_>>() {
        return Err(TransformError::PreconditionFailed(format!(
            "incident edge labels {incident:?} are not {k}..={}",
            (k + d).saturating_sub(1)
        )));
    }
    let graph = g.without_vertex(v)?;
    let shift = |x: usize| if x > v { x - 1 } else { x };
    let vertices = (0..g.p()).filter(|&x| x != v).map(|x| f.vertex(x)).collect();
    let edges = f
        .edge_labels()
        .filter(|&(a, b, _)| a != v && b != v)
        .map(|(a, b, l)| (shift(a), shift(b), l));
    finish(graph, TotalLabeling::new(vertices, edges), k + d)
}

/// Super graceful labeling of `G + H` from a `(q_H+1)`-labeling of `G` and a
/// super graceful labeling of `H` with edge labels `1..=q_H`: the vertex
/// labels of `H` are shifted by `t - q_H`, `t` being the largest label of `G`.
pub fn union_labeling(
    g: &Graph,
    f_g: &TotalLabeling,
    h: &Graph,
    f_h: &TotalLabeling,
) -> Result<TransformResult, TransformError> {
    let k_g = input_k(g, f_g)?;
    let k_h = input_k(h, f_h)?;
    let q_h = h.q() as Label;
    let mut problems = Vec::new();
    if k_h != 1 {
        problems.push(format!("H is {k_h}-labeled, not 1-labeled"));
    }
    let mut h_edges: Vec<Label> = f_h.edge_labels().map(|e| e.2).collect();
    h_edges.sort_unstable();
    if h_edges != (1..=q_h).collect::<Vec<_>>() {
        problems.push(format!("edge labels of H are not 1..={q_h}"));
    }
    if k_g != q_h + 1 {
        problems.push(format!("smallest label of G is {k_g}, expected {}", q_h + 1));
    }
    if !problems.is_empty() {
        return Err(TransformError::PreconditionFailed(problems.join("; ")));
    }
    let t = f_g.max_label().expect("non-empty");
    let graph = disjoint_union(g, h);
    let shift = g.p();
    let mut vertices = f_g.vertex_labels().to_vec();
    vertices.extend(f_h.vertex_labels().iter().map(|&x| x + t - q_h));
    let edges = f_g
        .edge_labels()
        .chain(f_h.edge_labels().map(|(a, b, l)| (a + shift, b + shift, l)));
    finish(graph, TotalLabeling::new(vertices, edges), 1)
}

/// Removes the edge labeled `k` from a k-labeled cycle, leaving a
/// `(k+1)`-labeled path (in the cycle's numbering).
pub fn cycle_edge_delete(c: &Graph, f: &TotalLabeling) -> Result<TransformResult, TransformError> {
    let k = input_k(c, f)?;
    if !(0..c.p()).all(|v| c.degree(v) == 2) || !c.is_connected() {
        return Err(TransformError::PreconditionFailed("graph is not a cycle".into()));
    }
    let (u, v, _) = f
        .edge_labels()
        .find(|&(_, _, l)| l == k)
        .ok_or(TransformError::NoEdgeLabeledK(k))?;
    let graph = c.without_edge(u, v).expect("edge exists");
    let edges = f.edge_labels().filter(|&(a, b, _)| (a, b) != (u, v));
    finish(graph, TotalLabeling::new(f.vertex_labels().to_vec(), edges), k + 1)
}

/// Starting from the labeling of `G(1,m,n-k)`, adds `u_1 u_i` and deletes
/// `u_{m-i+2} v_n`. Both edges carry `(n+1)(i-1)`, so the label set is
/// unchanged and the result is a k-labeled 4-partite graph.
pub fn four_partite_swap(m: usize, n: usize, k: Label, i: usize) -> Result<TransformResult, TransformError> {
    if i < 2 || i > m {
        return Err(TransformError::PreconditionFailed(format!("i = {i} must lie in 2..={m}")));
    }
    let base = label_g1mnk(m, n, k)?;
    let u = |x: usize| x - 1;
    let v = |j: usize| m + j - 1;
    let removed = (u(m - i + 2), v(n));
    let graph = base
        .graph
        .without_edge(removed.0, removed.1)
        .expect("u v_n is an edge")
        .with_edges([(u(1), u(i))])?
        .with_name(format!("g1mnk:{m},{n},{k}+u1u{i}-u{}v{n}", m - i + 2));
    let f = &base.labeling;
    let added = f.vertex(u(i)) - f.vertex(u(1));
    let edges = f
        .edge_labels()
        .filter(|&(a, b, _)| (a, b) != removed)
        .chain([(u(1), u(i), added)]);
    finish(graph, TotalLabeling::new(f.vertex_labels().to_vec(), edges), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fixture, label_odd_cycle, label_path_super_graceful, label_star, label_star_with_apex};
    use crate::graph::Family;
    use crate::labeling::induce_edge_labels;
    use crate::search::{enumerate_labelings, SearchConfig};

    fn sorted_labels(f: &TotalLabeling) -> Vec<Label> {
        let mut v: Vec<_> = f.labels().collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn pendant_on_k12() {
        let star = label_star(2, 2).unwrap();
        assert_eq!(star.labeling.vertex_labels(), &[2, 5, 6]);
        let out = attach_pendants(&star.graph, &star.labeling, 1).unwrap();
        assert_eq!(out.new_k, 1);
        assert_eq!(out.labeling.vertex(3), 7);
        assert_eq!(out.labeling.edge(2, 3), Some(1));
        assert!(attach_pendants(&star.graph, &star.labeling, 0).is_err());
    }

    #[test]
    fn pendant_plan_large_example() {
        let plan = pendant_plan(10, 191, 5).unwrap();
        assert_eq!(plan.anchors, [192, 194, 196, 198, 200]);
        assert_eq!(plan.new_vertices, [201, 202, 203, 204, 205]);
        assert_eq!(plan.new_edges, [9, 8, 7, 6, 5]);
        assert_eq!(plan.new_k, 5);
        assert!(pendant_plan(10, 191, 6).is_err());
    }

    #[test]
    fn anchors_are_always_top_labels() {
        // p+q-1+2i <= k+p+q-1 for i <= k/2, and the k largest labels are
        // never edge labels, so every valid input has its anchors
        let g = Family::Path(7).build().unwrap();
        let all = enumerate_labelings(&g, &SearchConfig::new(4).enumerate(None)).unwrap();
        assert!(!all.labelings.is_empty());
        for f in &all.labelings {
            for t in 1..=2 {
                assert_eq!(attach_pendants(&g, f, t).unwrap().new_k, 4 - t as Label);
            }
        }
    }

    #[test]
    fn attach_then_delete_is_identity() {
        let star = label_star(2, 2).unwrap();
        let out = attach_pendants(&star.graph, &star.labeling, 1).unwrap();
        let back = delete_apex(&out.graph, &out.labeling, 3).unwrap();
        assert_eq!(back.new_k, 2);
        assert_eq!(back.graph.edges(), star.graph.edges());
        assert_eq!(back.labeling, star.labeling);
    }

    #[test]
    fn delete_star_center() {
        for d in 1..=6usize {
            let g = Family::Star(d).build().unwrap();
            let mut vertices = vec![2 * d as Label + 1];
            vertices.extend((1..=d as Label).map(|i| d as Label + i));
            let f = induce_edge_labels(&g, vertices).unwrap();
            let out = delete_apex(&g, &f, 0).unwrap();
            assert_eq!(out.new_k, d as Label + 1);
            assert_eq!((out.graph.p(), out.graph.q()), (d, 0));
        }
    }

    #[test]
    fn delete_apex_of_star_construction() {
        for (k, d) in [(1, 1), (2, 3), (4, 2)] {
            let built = label_star_with_apex(k, d).unwrap();
            let w = built.graph.p() - 1;
            let out = delete_apex(&built.graph, &built.labeling, w).unwrap();
            assert_eq!(out.new_k, k + d);
            assert!((0..out.graph.p()).all(|v| out.graph.degree(v) > 0));
        }
    }

    #[test]
    fn delete_apex_preconditions() {
        let e = fixture("C5_k2").unwrap();
        let err = delete_apex(&e.graph, &e.labeling, 0).unwrap_err();
        assert!(matches!(err, TransformError::PreconditionFailed(_)));
    }

    #[test]
    fn union_star_and_path() {
        let g = label_star(3, 3).unwrap();
        let h = label_path_super_graceful(3).unwrap();
        let out = union_labeling(&g.graph, &g.labeling, &h.graph, &h.labeling).unwrap();
        assert_eq!(out.new_k, 1);
        assert_eq!(&out.labeling.vertex_labels()[4..], &[11, 12, 10]);
        assert_eq!(sorted_labels(&out.labeling), (1..=12).collect::<Vec<_>>());
    }

    #[test]
    fn union_rejects_mismatched_k() {
        let g = label_star(2, 2).unwrap();
        let h = label_path_super_graceful(3).unwrap();
        assert!(matches!(
            union_labeling(&g.graph, &g.labeling, &h.graph, &h.labeling),
            Err(TransformError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn odd_cycle_to_path() {
        let c5 = label_odd_cycle(2).unwrap();
        let out = cycle_edge_delete(&c5.graph, &c5.labeling).unwrap();
        assert_eq!(out.new_k, 3);
        assert_eq!(out.graph.q(), 4);
    }

    #[test]
    fn c8_to_p8() {
        let e = fixture("C8_k2").unwrap();
        let out = cycle_edge_delete(&e.graph, &e.labeling).unwrap();
        assert_eq!(out.new_k, 3);
        let e = fixture("C4_k2").unwrap();
        assert_eq!(
            cycle_edge_delete(&e.graph, &e.labeling).unwrap_err(),
            TransformError::NoEdgeLabeledK(2)
        );
    }

    #[test]
    fn swaps() {
        let out = four_partite_swap(2, 3, 1, 2).unwrap();
        assert_eq!(out.labeling.edge(0, 1), Some(4));
        assert!(!out.graph.has_edge(1, 4));
        let before = label_g1mnk(2, 3, 1).unwrap();
        assert_eq!(sorted_labels(&out.labeling), sorted_labels(&before.labeling));

        let out = four_partite_swap(3, 3, 2, 3).unwrap();
        assert_eq!(out.labeling.edge(0, 2), Some(8));
        assert!(four_partite_swap(3, 3, 2, 4).is_err());
    }

    #[test]
    fn swap_gives_k1113_minus_edge() {
        // G(1,2,2) + u_1u_2 - u_2v_3 is K(1,1,1,2) minus the edge u_2 v_3
        let out = four_partite_swap(2, 3, 1, 2).unwrap();
        let k4 = Family::CompleteMultipartite(vec![1, 1, 1, 2]).build().unwrap();
        // u_1 -> 1, u_2 -> 2, v_1 -> 0, v_2 -> 3, v_3 -> 4
        let map = [1, 2, 0, 3, 4];
        let mapped = Graph::new(5, out.graph.edges().iter().map(|&(a, b)| (map[a], map[b])), "").unwrap();
        let expected = k4.without_edge(2, 4).unwrap();
        assert_eq!(mapped.edges(), expected.edges());
        assert_eq!(k4.degree(4), 3);
    }
}
