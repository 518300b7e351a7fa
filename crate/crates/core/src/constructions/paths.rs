use crate::caterpillar::{build_caterpillar, CaterpillarSpec};
use crate::graph::Family;
use crate::labeling::{Label, LabeledGraph, TotalLabeling};

use super::{caterpillar_vertex_labels, finish, finish_vertices, fixtures, out_of_range, ConstructionError, Side};

/// Super graceful (`k = 1`) labeling of `P_n` whose edge labels are exactly
/// `1..=n-1`, with `f(u_i u_{i+1}) = i`.
///
/// Odd `n`: `f(u_{2i-1}) = (3n+1)/2 - i`, `f(u_{2i}) = (3n-1)/2 + i`.
/// Even `n`: `f(u_{2i-1}) = 3n/2 - i`, `f(u_{2i}) = 3n/2 - 1 + i`.
pub fn label_path_super_graceful(n: usize) -> Result<LabeledGraph, ConstructionError> {
    if n < 2 {
        return Err(out_of_range("super graceful path needs n >= 2"));
    }
    let nn = n as Label;
    let (odd_base, even_base) = if n % 2 == 1 {
        ((3 * nn).div_ceil(2), (3 * nn - 1) / 2)
    } else {
        (3 * nn / 2, 3 * nn / 2 - 1)
    };
    let labels = (0..n)
        .map(|t| {
            let i = (t / 2 + 1) as Label;
            if t % 2 == 0 {
                odd_base - i
            } else {
                even_base + i
            }
        })
        .collect();
    finish_vertices("super graceful path", Family::Path(n).build()?, labels, 1)
}

/// Which rule produced a path labeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathRoute {
    SuperGraceful,
    Caterpillar,
    Formula,
    Fixture,
}

/// A k-super graceful labeling of `P_n` from the first applicable rule:
/// `k = 1`, the caterpillar route for `k` in `{ceil(n/2), floor(n/2)}`, the
/// closed formulas for `n` in `{6k-3, 6k-2, 6k, 6k+1}`, or the fixture
/// registry.
pub fn label_path_k(n: usize, k: Label) -> Result<(LabeledGraph, PathRoute), ConstructionError> {
    if n < 2 || k < 1 {
        return Err(out_of_range("path labeling needs n >= 2 and k >= 1"));
    }
    if k == 1 {
        return Ok((label_path_super_graceful(n)?, PathRoute::SuperGraceful));
    }
    let kk = k as usize;
    if kk == n.div_ceil(2) {
        return Ok((path_from_caterpillar(n, Side::A)?, PathRoute::Caterpillar));
    }
    if kk == n / 2 {
        return Ok((path_from_caterpillar(n, Side::B)?, PathRoute::Caterpillar));
    }
    if [6 * kk - 3, 6 * kk - 2, 6 * kk, 6 * kk + 1].contains(&n) {
        return Ok((path_formula_labeling(n, k)?, PathRoute::Formula));
    }
    let found = fixtures()
        .into_iter()
        .find(|e| e.graph.name() == format!("path:{n}") && e.expected_k == k);
    match found {
        Some(e) => Ok((
            LabeledGraph {
                graph: e.graph,
                labeling: e.labeling,
                k,
            },
            PathRoute::Fixture,
        )),
        None => Err(ConstructionError::NoKnownConstruction { n, k }),
    }
}

/// Caterpillar labeling of `P_n` in path numbering. Side A puts the large
/// label `3a+2b-2` on vertex 0; side B puts the small label `b` there.
pub(crate) fn path_from_caterpillar(n: usize, side: Side) -> Result<LabeledGraph, ConstructionError> {
    let labels = path_caterpillar_labels(n, side)?;
    let ct_k = {
        let (a, b) = (n.div_ceil(2), n / 2);
        match side {
            Side::A => a,
            Side::B => b,
        }
    };
    finish_vertices("caterpillar path", Family::Path(n).build()?, labels, ct_k as Label)
}

/// Vertex labels of the caterpillar route, listed along the path.
pub(crate) fn path_caterpillar_labels(n: usize, side: Side) -> Result<Vec<Label>, ConstructionError> {
    let ct = build_caterpillar(&CaterpillarSpec::path(n)?)?;
    let labels = caterpillar_vertex_labels(&ct, side);
    Ok(ct.spine().iter().map(|&x| labels[x]).collect())
}

/// Walk positions for `x_1 y_1 x_2 y_2 ...` paths.
struct Walk {
    u_first: bool,
    vertices: Vec<Option<Label>>,
    edges: Vec<(usize, usize, Label)>,
}

impl Walk {
    fn new(n: usize, u_first: bool) -> Self {
        Walk {
            u_first,
            vertices: vec![None; n],
            edges: Vec::with_capacity(n - 1),
        }
    }

    fn u(&self, i: usize) -> usize {
        if self.u_first {
            2 * (i - 1)
        } else {
            2 * i - 1
        }
    }

    fn v(&self, i: usize) -> usize {
        if self.u_first {
            2 * i - 1
        } else {
            2 * (i - 1)
        }
    }

    fn set(&mut self, pos: usize, label: Label) {
        assert!(self.vertices[pos].is_none(), "position {pos} labeled twice");
        self.vertices[pos] = Some(label);
    }

    fn edge(&mut self, a: usize, b: usize, label: Label) {
        assert_eq!(a.abs_diff(b), 1, "({a}, {b}) is not a path edge");
        self.edges.push((a, b, label));
    }

    fn into_labeling(self) -> TotalLabeling {
        let vertices = self
            .vertices
            .into_iter()
            .enumerate()
            .map(|(pos, l)| l.unwrap_or_else(|| panic!("position {pos} unlabeled")))
            .collect();
        TotalLabeling::new(vertices, self.edges)
    }
}

/// The closed-form k-super graceful labelings of `P_{6k-3}`, `P_{6k-2}`,
/// `P_{6k}` and `P_{6k+1}`, with both vertex and edge labels taken from the
/// formulas (not induced) and then verified.
///
/// In the `P_{6k}` block the edge labeled `12k-1-2i` is `u_{i+1} v_i`, and in
/// the `P_{6k+1}` block the last edge family is `8k+1-2i`; the printed
/// alternatives (`u_i v_{i+1}` and `8k+1-2k`) do not produce a labeling.
pub fn path_formula_labeling(n: usize, k: Label) -> Result<LabeledGraph, ConstructionError> {
    if k < 1 {
        return Err(out_of_range("k >= 1"));
    }
    let kk = k as usize;
    let mut w;
    if n == 6 * kk - 3 {
        // v_1 u_1 v_2 u_2 ... v_{3k-2} u_{3k-2} v_{3k-1}
        w = Walk::new(n, false);
        for i in 1..=kk {
            w.set(w.v(i), 13 * k - 7 - i as Label);
        }
        for i in 1..=2 * kk - 1 {
            w.set(w.v(kk + i), 10 * k - 6 - i as Label);
        }
        for i in 1..=3 * kk - 2 {
            w.set(w.u(i), k + i as Label - 1);
        }
        for i in 1..=kk {
            w.edge(w.u(i), w.v(i), 12 * k - 6 - 2 * i as Label);
        }
        for i in 1..kk {
            w.edge(w.u(i), w.v(i + 1), 12 * k - 7 - 2 * i as Label);
        }
        for i in 1..=2 * kk - 2 {
            w.edge(w.u(kk + i), w.v(kk + i), 8 * k - 5 - 2 * i as Label);
        }
        for i in 1..=2 * kk - 1 {
            w.edge(w.u(kk - 1 + i), w.v(kk + i), 8 * k - 4 - 2 * i as Label);
        }
    } else if n == 6 * kk - 2 {
        // v_1 u_1 v_2 u_2 ... v_{3k-1} u_{3k-1}
        w = Walk::new(n, false);
        for i in 1..=kk {
            w.set(w.v(i), 13 * k - 5 - i as Label);
        }
        for i in 1..=2 * kk - 1 {
            w.set(w.v(kk + i), 10 * k - 4 - i as Label);
        }
        for i in 1..=3 * kk - 1 {
            w.set(w.u(i), k + i as Label - 1);
        }
        for i in 1..=kk {
            w.edge(w.u(i), w.v(i), 12 * k - 4 - 2 * i as Label);
        }
        for i in 1..kk {
            w.edge(w.u(i), w.v(i + 1), 12 * k - 5 - 2 * i as Label);
        }
        for i in 1..=2 * kk - 1 {
            w.edge(w.u(kk + i), w.v(kk + i), 8 * k - 3 - 2 * i as Label);
        }
        for i in 1..=2 * kk - 1 {
            w.edge(w.u(kk - 1 + i), w.v(kk + i), 8 * k - 2 - 2 * i as Label);
        }
    } else if n == 6 * kk {
        // u_1 v_1 u_2 v_2 ... u_{3k} v_{3k}
        w = Walk::new(n, true);
        for i in 1..=3 * kk {
            w.set(w.u(i), k + i as Label - 1);
        }
        for i in 1..=kk {
            w.set(w.v(i), 13 * k - 1 - i as Label);
        }
        for i in 1..=2 * kk {
            w.set(w.v(kk + i), 10 * k - 1 - i as Label);
        }
        for i in 1..=kk {
            w.edge(w.u(i), w.v(i), 12 * k - 2 * i as Label);
        }
        for i in 1..=kk {
            w.edge(w.u(i + 1), w.v(i), 12 * k - 1 - 2 * i as Label);
        }
        for i in 1..=2 * kk {
            w.edge(w.u(kk + i), w.v(kk + i), 8 * k - 2 * i as Label);
        }
        for i in 1..=2 * kk - 1 {
            w.edge(w.u(kk + 1 + i), w.v(kk + i), 8 * k - 1 - 2 * i as Label);
        }
    } else if n == 6 * kk + 1 {
        // u_1 v_1 u_2 v_2 ... u_{3k} v_{3k} u_{3k+1}
        w = Walk::new(n, true);
        for i in 1..=3 * kk + 1 {
            w.set(w.u(i), k + i as Label - 1);
        }
        for i in 1..=kk {
            w.set(w.v(i), 13 * k + 1 - i as Label);
        }
        for i in 1..=2 * kk {
            w.set(w.v(kk + i), 10 * k + 1 - i as Label);
        }
        for i in 1..=kk {
            w.edge(w.u(i), w.v(i), 12 * k + 2 - 2 * i as Label);
        }
        for i in 1..=kk {
            w.edge(w.u(i + 1), w.v(i), 12 * k + 1 - 2 * i as Label);
        }
        for i in 1..=2 * kk {
            w.edge(w.u(kk + i), w.v(kk + i), 8 * k + 2 - 2 * i as Label);
        }
        for i in 1..=2 * kk {
            w.edge(w.u(kk + 1 + i), w.v(kk + i), 8 * k + 1 - 2 * i as Label);
        }
    } else {
        return Err(ConstructionError::NoKnownConstruction { n, k });
    }
    finish("path formula", Family::Path(n).build()?, w.into_labeling(), k)
}
