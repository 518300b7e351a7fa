#![allow(dead_code)]

use std::collections::BTreeSet;

use gracelab::caterpillar::{build_caterpillar, CaterpillarGraph, CaterpillarSpec};
use gracelab::{induce_edge_labels, verify, Family, Graph, Label};

/// Every vertex labeling of `g` that is a k-labeling, found by trying each
/// injection of `k..=k+p+q-1` into the vertices and filtering with `verify`.
pub fn naive_labelings(g: &Graph, k: Label) -> BTreeSet<Vec<Label>> {
    let values: Vec<Label> = (k..k + (g.p() + g.q()) as Label).collect();
    let mut out = BTreeSet::new();
    let mut current = Vec::with_capacity(g.p());
    let mut taken = vec![false; values.len()];
    injections(g, k, &values, &mut taken, &mut current, &mut out);
    out
}

fn injections(
    g: &Graph,
    k: Label,
    values: &[Label],
    taken: &mut [bool],
    current: &mut Vec<Label>,
    out: &mut BTreeSet<Vec<Label>>,
) {
    if current.len() == g.p() {
        if let Ok(f) = induce_edge_labels(g, current.clone()) {
            if verify(g, &f).unwrap().is_valid_with(k) {
                out.insert(current.clone());
            }
        }
        return;
    }
    for i in 0..values.len() {
        if !taken[i] {
            taken[i] = true;
            current.push(values[i]);
            injections(g, k, values, taken, current, out);
            current.pop();
            taken[i] = false;
        }
    }
}

fn relabel(g: &Graph, perm: &[usize], name: &str) -> Graph {
    Graph::new(g.p(), g.edges().iter().map(|&(a, b)| (perm[a], perm[b])), name).unwrap()
}

/// Twenty connected graphs with `p + q <= 10` outside the path, cycle and
/// star families: each small shape under a few fixed vertex numberings.
pub fn mixed_graphs() -> Vec<Graph> {
    type Shape = (&'static str, usize, Vec<(usize, usize)>);
    let shapes: Vec<Shape> = vec![
        ("paw", 4, vec![(0, 1), (1, 2), (2, 0), (2, 3)]),
        ("diamond", 4, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        ("k4", 4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        ("fork", 5, vec![(0, 1), (0, 2), (0, 3), (3, 4)]),
        ("cricket", 5, vec![(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)]),
        ("t32", 5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]),
        ("bull", 5, vec![(0, 1), (1, 2), (2, 0), (1, 3), (2, 4)]),
        ("banner", 5, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
    ];
    let perms: [&[usize]; 3] = [&[0, 1, 2, 3, 4], &[4, 3, 2, 1, 0], &[2, 4, 1, 0, 3]];
    let mut out = Vec::new();
    for (round, perm) in perms.iter().enumerate() {
        for (name, p, edges) in &shapes {
            if out.len() == 20 {
                return out;
            }
            let g = Graph::new(*p, edges.iter().copied(), *name).unwrap();
            let perm: Vec<usize> = if *p == 4 {
                // drop vertex 4 from the five-point permutations
                perm.iter().copied().filter(|&x| x < 4).collect()
            } else {
                perm.to_vec()
            };
            out.push(relabel(&g, &perm, &format!("{name}#{round}")));
        }
    }
    out
}

/// The fixed oracle test set: small paths, cycles and stars plus
/// [`mixed_graphs`], all with `p + q <= 10`.
pub fn oracle_graphs() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.push(Family::Path(n).build().unwrap());
    }
    for n in 3..=5 {
        out.push(Family::Cycle(n).build().unwrap());
    }
    for n in 1..=4 {
        out.push(Family::Star(n).build().unwrap());
    }
    out.extend(mixed_graphs());
    assert!(out.iter().all(|g| g.p() + g.q() <= 10 && g.is_connected()));
    out
}

/// Small integer mixer for deterministic parameter sweeps.
pub fn mix(x: u64) -> u64 {
    let mut z = x.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z ^= z >> 29;
    z = z.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z ^ (z >> 32)
}

/// `count` caterpillar specs with both sides at most `max_side`, derived
/// deterministically from their index.
pub fn caterpillar_specs(count: usize, max_side: usize) -> Vec<CaterpillarSpec> {
    let mut out = Vec::new();
    let mut i = 0u64;
    while out.len() < count {
        i += 1;
        let h = mix(i);
        let r = 1 + (h % 4) as usize;
        let odd = (h >> 8) % 2 == 1;
        let deg = |salt: u64, min: usize| min + (mix(h ^ salt) % 3) as usize;
        let a_len = if odd { r + 1 } else { r };
        let a: Vec<usize> = (0..a_len)
            .map(|x| {
                let end = x == 0 || (odd && x == r);
                deg(x as u64 + 1, if end { 1 } else { 2 })
            })
            .collect();
        let b: Vec<usize> = (0..r)
            .map(|x| {
                let end = !odd && x == r - 1;
                deg(100 + x as u64, if end { 1 } else { 2 })
            })
            .collect();
        let spec = if odd {
            CaterpillarSpec::odd(a, b)
        } else {
            CaterpillarSpec::even(a, b)
        };
        if spec.validate().is_ok() && spec.a() <= max_side && spec.b() <= max_side {
            out.push(spec);
        }
    }
    out
}

pub fn caterpillar(spec: &CaterpillarSpec) -> CaterpillarGraph {
    build_caterpillar(spec).unwrap()
}
