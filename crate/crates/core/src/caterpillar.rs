//! Caterpillars described by the degrees of their spine vertices.
//!
//! The spine is `a_1 b_1 a_2 b_2 ... a_r b_r` (even length) or the same path
//! extended by `a_{r+1}` (odd length). Leaves hanging off `b_j` are named
//! `a_{j,s}` and leaves hanging off `a_{i+1}` are named `b_{i,s}`; sorting each
//! side lexicographically by subscript gives the orders `u_1..u_a` and
//! `v_1..v_b`. In that order every vertex is adjacent to a contiguous run of
//! the other side, and the edges form a staircase in which `i + j` takes every
//! value in `2..=a+b` exactly once.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpineParity {
    /// `a_1 b_1 ... a_r b_r`
    Even,
    /// `a_1 b_1 ... a_r b_r a_{r+1}`
    Odd,
}

/// Degree specification of a caterpillar.
///
/// `a_degrees` holds `deg(a_1), deg(a_2), ...` (`r` entries for an even spine,
/// `r+1` for an odd one) and `b_degrees` holds `deg(b_1), ..., deg(b_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaterpillarSpec {
    pub parity: SpineParity,
    pub a_degrees: Vec<usize>,
    pub b_degrees: Vec<usize>,
}

impl CaterpillarSpec {
    pub fn even(a_degrees: Vec<usize>, b_degrees: Vec<usize>) -> Self {
        CaterpillarSpec {
            parity: SpineParity::Even,
            a_degrees,
            b_degrees,
        }
    }

    pub fn odd(a_degrees: Vec<usize>, b_degrees: Vec<usize>) -> Self {
        CaterpillarSpec {
            parity: SpineParity::Odd,
            a_degrees,
            b_degrees,
        }
    }

    /// The spine-only caterpillar, i.e. the path `P_n` (`n >= 2`).
    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::InvalidDegrees("a path caterpillar needs n >= 2".into()));
        }
        let r = n / 2;
        if n.is_multiple_of(2) {
            let mut a = vec![2; r];
            let mut b = vec![2; r];
            a[0] = 1;
            b[r - 1] = 1;
            Ok(Self::even(a, b))
        } else {
            let mut a = vec![2; r + 1];
            a[0] = 1;
            a[r] = 1;
            Ok(Self::odd(a, vec![2; r]))
        }
    }

    /// Number of `b_j` on the spine.
    pub fn r(&self) -> usize {
        self.b_degrees.len()
    }

    /// Size of the A side, `1 - r + sum(deg b_j)`.
    pub fn a(&self) -> usize {
        1 + self.b_degrees.iter().sum::<usize>() - self.r()
    }

    /// Size of the B side: `1 - r + sum(deg a_i)` for an even spine and
    /// `sum(deg a_i) - r` for an odd one (which has `r+1` terms).
    pub fn b(&self) -> usize {
        let total: usize = self.a_degrees.iter().sum();
        match self.parity {
            SpineParity::Even => 1 + total - self.r(),
            SpineParity::Odd => total - self.r(),
        }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidDegrees(msg));
        let r = self.r();
        if r == 0 {
            return bad("the spine needs r >= 1".into());
        }
        let expected_a = match self.parity {
            SpineParity::Even => r,
            SpineParity::Odd => r + 1,
        };
        if self.a_degrees.len() != expected_a {
            return bad(format!(
                "{:?} spine with r = {r} needs {expected_a} a-degrees, got {}",
                self.parity,
                self.a_degrees.len()
            ));
        }
        for (i, &d) in self.a_degrees.iter().enumerate() {
            let end = i == 0 || (self.parity == SpineParity::Odd && i == r);
            let min = if end { 1 } else { 2 };
            if d < min {
                return bad(format!("deg(a_{}) = {d}, needs >= {min}", i + 1));
            }
        }
        for (j, &d) in self.b_degrees.iter().enumerate() {
            let end = self.parity == SpineParity::Even && j == r - 1;
            let min = if end { 1 } else { 2 };
            if d < min {
                return bad(format!("deg(b_{}) = {d}, needs >= {min}", j + 1));
            }
        }
        Ok(())
    }

    fn leaves_of_a(&self, i: usize) -> usize {
        let r = self.r();
        match (self.parity, i) {
            (_, 1) => self.a_degrees[0] - 1,
            (SpineParity::Even, i) if i > r => 0,
            (SpineParity::Odd, i) if i == r + 1 => self.a_degrees[r] - 1,
            (_, i) => self.a_degrees[i - 1] - 2,
        }
    }

    fn leaves_of_b(&self, j: usize) -> usize {
        if self.parity == SpineParity::Even && j == self.r() {
            self.b_degrees[j - 1] - 1
        } else {
            self.b_degrees[j - 1] - 2
        }
    }
}

/// A caterpillar together with its ordered bipartition.
///
/// Vertex ids are `u_1..u_a` as `0..a` followed by `v_1..v_b` as `a..a+b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaterpillarGraph {
    pub graph: Graph,
    pub a_order: Vec<usize>,
    pub b_order: Vec<usize>,
    spine: Vec<usize>,
}

impl CaterpillarGraph {
    pub fn a(&self) -> usize {
        self.a_order.len()
    }

    pub fn b(&self) -> usize {
        self.b_order.len()
    }

    /// Spine vertex ids in walk order `a_1, b_1, a_2, ...`.
    pub fn spine(&self) -> &[usize] {
        &self.spine
    }
}

/// Builds the caterpillar and checks the interval structure of its adjacency.
pub fn build_caterpillar(spec: &CaterpillarSpec) -> Result<CaterpillarGraph, GraphError> {
    spec.validate()?;
    let r = spec.r();
    let (a, b) = (spec.a(), spec.b());
    let spine_a_count = spec.a_degrees.len();

    let mut edges = Vec::with_capacity(a + b - 1);
    let mut a_spine = vec![0; spine_a_count + 1];
    let mut b_spine = vec![0; r + 1];
    // leaves are attached once both sides are numbered
    let mut a_leaves = Vec::new();
    let mut b_leaves = Vec::new();

    let mut next_u = 0;
    for j in 1..=r {
        a_spine[j] = next_u;
        next_u += 1;
        for _ in 0..spec.leaves_of_b(j) {
            a_leaves.push((next_u, j));
            next_u += 1;
        }
    }
    if spec.parity == SpineParity::Odd {
        a_spine[r + 1] = next_u;
        next_u += 1;
    }

    let mut next_v = a;
    for _ in 0..spec.leaves_of_a(1) {
        b_leaves.push((next_v, 1));
        next_v += 1;
    }
    for j in 1..=r {
        b_spine[j] = next_v;
        next_v += 1;
        for _ in 0..spec.leaves_of_a(j + 1) {
            b_leaves.push((next_v, j + 1));
            next_v += 1;
        }
    }
    debug_assert_eq!((next_u, next_v), (a, a + b));

    for i in 1..=r {
        edges.push((a_spine[i], b_spine[i]));
        if i < spine_a_count {
            edges.push((b_spine[i], a_spine[i + 1]));
        }
    }
    edges.extend(a_leaves.iter().map(|&(leaf, j)| (leaf, b_spine[j])));
    edges.extend(b_leaves.iter().map(|&(leaf, i)| (leaf, a_spine[i])));

    let mut spine = Vec::with_capacity(2 * r + 1);
    for i in 1..=r {
        spine.push(a_spine[i]);
        spine.push(b_spine[i]);
    }
    if spec.parity == SpineParity::Odd {
        spine.push(a_spine[r + 1]);
    }

    let name = format!("caterpillar:Ct({a},{b})");
    let graph = Graph::new(a + b, edges, name)?;
    let ct = CaterpillarGraph {
        graph,
        a_order: (0..a).collect(),
        b_order: (a..a + b).collect(),
        spine,
    };
    check_intervals(spec, &ct, &a_spine, &b_spine)?;
    Ok(ct)
}

fn check_intervals(
    spec: &CaterpillarSpec,
    ct: &CaterpillarGraph,
    a_spine: &[usize],
    b_spine: &[usize],
) -> Result<(), GraphError> {
    let g = &ct.graph;
    let a = ct.a();
    let fail = |what: String| Err(GraphError::InvalidDegrees(format!("interval check failed: {what}")));
    if g.q() != a + ct.b() - 1 || !g.is_connected() {
        return fail("not a tree".into());
    }
    for &(x, y) in g.edges() {
        if (x < a) == (y < a) {
            return fail(format!("edge ({x}, {y}) inside one side"));
        }
    }
    // a_i sees v_j for 2-i+sum_{l<i} n_l <= j <= 1-i+sum_{l<=i} n_l (1-based)
    let mut prefix = 0;
    for i in 1..a_spine.len() {
        let lo = 2 + prefix - i;
        prefix += spec.a_degrees[i - 1];
        let hi = 1 + prefix - i;
        let seen: Vec<usize> = g.neighbors(a_spine[i]).iter().map(|&v| v - a + 1).collect();
        if seen != (lo..=hi).collect::<Vec<_>>() {
            return fail(format!("a_{i} adjacent to {seen:?}, expected {lo}..={hi}"));
        }
        if i > 1 && a_spine[i] + 1 != spec.b_degrees[..i - 1].iter().sum::<usize>() + 2 - i {
            return fail(format!("a_{i} at the wrong position"));
        }
    }
    let mut prefix = 0;
    for j in 1..b_spine.len() {
        let lo = 2 + prefix - j;
        prefix += spec.b_degrees[j - 1];
        let hi = 1 + prefix - j;
        let seen: Vec<usize> = g.neighbors(b_spine[j]).iter().map(|&u| u + 1).collect();
        if seen != (lo..=hi).collect::<Vec<_>>() {
            return fail(format!("b_{j} adjacent to {seen:?}, expected {lo}..={hi}"));
        }
        let pos = spec.a_degrees[..j].iter().sum::<usize>() + 1 - j;
        if b_spine[j] - a + 1 != pos {
            return fail(format!("b_{j} at the wrong position"));
        }
    }
    Ok(())
}
