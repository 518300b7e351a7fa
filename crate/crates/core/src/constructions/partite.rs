use std::collections::BTreeMap;

use crate::graph::{build_g1mnk, spider, Family, Graph};
use crate::labeling::{Label, LabeledGraph, TotalLabeling};

use super::{finish, finish_vertices, out_of_range, ConstructionError};

/// `K(1,n)` with `k | n`: center `k`, then for each block `j = 1..=n/k`
/// edges `(2j-1)k + i` and leaves `2jk + i`, `i = 1..=k`.
pub fn label_star(n: usize, k: Label) -> Result<LabeledGraph, ConstructionError> {
    if n < 1 || k < 1 {
        return Err(out_of_range("star labeling needs n >= 1 and k >= 1"));
    }
    let kk = k as usize;
    if !n.is_multiple_of(kk) {
        return Err(ConstructionError::NotDivisible { n, k });
    }
    let graph = Family::Star(n).build()?;
    let mut vertices = vec![k; n + 1];
    let mut edges = Vec::with_capacity(n);
    for leaf in 1..=n {
        let j = ((leaf - 1) / kk + 1) as Label;
        let i = ((leaf - 1) % kk + 1) as Label;
        vertices[leaf] = 2 * j * k + i;
        edges.push((0, leaf, (2 * j - 1) * k + i));
    }
    finish("star", graph, TotalLabeling::new(vertices, edges), k)
}

/// One star that is k-super graceful for every `k` in `set`: `K(1, lcm(set))`.
pub fn star_for_set(set: &[Label]) -> Result<(Graph, BTreeMap<Label, TotalLabeling>), ConstructionError> {
    if set.is_empty() || set.contains(&0) {
        return Err(out_of_range("the set must be non-empty with positive entries"));
    }
    let mut lcm: u64 = 1;
    for &k in set {
        let k = k as u64;
        lcm = lcm / gcd(lcm, k) * k;
        if lcm > 1 << 20 {
            return Err(out_of_range(format!("lcm of {set:?} is too large")));
        }
    }
    let n = lcm as usize;
    let mut labelings = BTreeMap::new();
    for &k in set {
        labelings.insert(k, label_star(n, k)?.labeling);
    }
    Ok((Family::Star(n).build()?, labelings))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Which part of `K(m,n)` carries the small labels, i.e. which of `m`, `n` is `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    M,
    N,
}

/// `K(m,n)`, `n >= m >= 2`. For [`Part::N`]: `f(u_i) = ni + i - 1`,
/// `f(v_j) = 2n + m(n+1) - j`, edges `(n+1)(m-i) + 2n - j + 1`; valid with
/// `k = n`. [`Part::M`] swaps the roles of `m` and `n` (`k = m`).
pub fn label_complete_bipartite(m: usize, n: usize, which: Part) -> Result<LabeledGraph, ConstructionError> {
    if m < 2 || n < m {
        return Err(out_of_range("complete bipartite labeling needs n >= m >= 2"));
    }
    let graph = Family::CompleteBipartite(m, n).build()?;
    let (mm, nn) = (m as Label, n as Label);
    let mut vertices = vec![0; m + n];
    let mut edges = Vec::with_capacity(m * n);
    let k = match which {
        Part::N => {
            for i in 1..=m {
                vertices[i - 1] = nn * i as Label + i as Label - 1;
            }
            for j in 1..=n {
                vertices[m + j - 1] = 2 * nn + mm * (nn + 1) - j as Label;
            }
            for i in 1..=m {
                for j in 1..=n {
                    let l = (nn + 1) * (mm - i as Label) + 2 * nn - j as Label + 1;
                    edges.push((i - 1, m + j - 1, l));
                }
            }
            nn
        }
        Part::M => {
            // the n-vertex side plays the role of u, the m-vertex side of v
            for j in 1..=n {
                vertices[m + j - 1] = mm * j as Label + j as Label - 1;
            }
            for i in 1..=m {
                vertices[i - 1] = 2 * mm + nn * (mm + 1) - i as Label;
            }
            for j in 1..=n {
                for i in 1..=m {
                    let l = (mm + 1) * (nn - j as Label) + 2 * mm - i as Label + 1;
                    edges.push((i - 1, m + j - 1, l));
                }
            }
            mm
        }
    };
    finish("complete bipartite", graph, TotalLabeling::new(vertices, edges), k)
}

/// `G(1,m,n-k)`: the [`Part::N`] labeling of `K(m,n)` extended by the edges
/// `v_1 v_j` (`j = k+1..=n`), which receive the labels `j - 1`.
pub fn label_g1mnk(m: usize, n: usize, k: Label) -> Result<LabeledGraph, ConstructionError> {
    let kk = k as usize;
    if m < 2 || n < m || kk < 1 || kk >= n {
        return Err(out_of_range("G(1,m,n-k) labeling needs n >= m >= 2 and 1 <= k <= n-1"));
    }
    let base = label_complete_bipartite(m, n, Part::N)?;
    let graph = build_g1mnk(m, n, kk)?;
    finish_vertices("G(1,m,n-k)", graph, base.labeling.vertex_labels().to_vec(), k)
}

/// Super graceful `K(1,1,r)`: `f(u_1) = r+1`, `f(u_2) = 2r+3`,
/// `f(v_i) = 3r+4-i`. Numbering: `u_1 = 0`, `u_2 = 1`, `v_i = i+1`.
pub fn label_k11r(r: usize) -> Result<LabeledGraph, ConstructionError> {
    if r < 1 {
        return Err(out_of_range("K(1,1,r) needs r >= 1"));
    }
    let graph = Family::CompleteMultipartite(vec![1, 1, r]).build()?;
    let rr = r as Label;
    let mut vertices = vec![rr + 1, 2 * rr + 3];
    vertices.extend((1..=rr).map(|i| 3 * rr + 4 - i));
    finish_vertices("K(1,1,r)", graph, vertices, 1)
}

/// The spider `SP(1^k, 2)`: `K(1,k+1)` with hub `k+1`, leaves `v_i = 2k+2+i`
/// and edges `k+1+i`, plus a vertex `w = 3k+4` joined to `v_2`.
///
/// Numbering: hub 0; the length-1 legs end at `v_1, v_3, ..., v_{k+1}`
/// (ids `1..=k`); the length-2 leg is `v_2` (id `k+1`) then `w` (id `k+2`).
pub fn label_spider_1k2(k: Label) -> Result<LabeledGraph, ConstructionError> {
    if k < 1 {
        return Err(out_of_range("spider needs k >= 1"));
    }
    let kk = k as usize;
    let mut legs = vec![1; kk];
    legs.push(2);
    let graph = spider(&legs, Family::Spider(legs.clone()).to_string());
    let leaf = |i: Label| 2 * k + 2 + i;
    let mut vertices = vec![k + 1];
    vertices.push(leaf(1));
    vertices.extend((3..=k + 1).map(leaf));
    vertices.push(leaf(2));
    vertices.push(3 * k + 4);
    finish_vertices("spider SP(1^k,2)", graph, vertices, k)
}

/// `K(1,k+d)` labeled with center `k+d`, leaves `2k+2d+i` and edges `k+d+i`,
/// plus a vertex `w = 3k+3d+1` joined to `v_2..=v_{d+1}`. Valid with `k`;
/// `w` carries the largest label and its edges carry `k..=k+d-1`.
///
/// Numbering: center 0, leaves `v_i = i`, `w = k+d+1`.
pub fn label_star_with_apex(k: Label, d: Label) -> Result<LabeledGraph, ConstructionError> {
    if k < 1 || d < 1 {
        return Err(out_of_range("needs k >= 1 and d >= 1"));
    }
    let s = (k + d) as usize;
    let w = s + 1;
    let star = Family::Star(s).build()?;
    let graph = Graph::new(
        s + 2,
        star.edges().iter().copied().chain((2..=d as usize + 1).map(|i| (i, w))),
        format!("star_apex:{k},{d}"),
    )?;
    let mut vertices = vec![k + d];
    vertices.extend((1..=k + d).map(|i| 2 * k + 2 * d + i));
    vertices.push(3 * k + 3 * d + 1);
    finish_vertices("star with apex", graph, vertices, k)
}
