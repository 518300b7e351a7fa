//! Exact independence number by branch and bound over 64-bit vertex masks.

use crate::graph::{Graph, GraphError};

/// Largest graph order accepted by [`independence_number`].
pub const ALPHA_VERTEX_LIMIT: usize = 64;

/// Exact size of a maximum independent set.
pub fn independence_number(g: &Graph) -> Result<usize, GraphError> {
    let adj = g.adjacency_masks().ok_or(GraphError::TooLarge {
        p: g.p(),
        limit: ALPHA_VERTEX_LIMIT,
    })?;
    let all = if g.p() == 64 { u64::MAX } else { (1u64 << g.p()) - 1 };
    let mut best = greedy_lower_bound(&adj, all);
    branch(&adj, all, 0, &mut best);
    Ok(best)
}

/// Minimum-degree greedy: repeatedly take the vertex with the fewest
/// remaining neighbours.
fn greedy_lower_bound(adj: &[u64], mut cand: u64) -> usize {
    let mut size = 0;
    while cand != 0 {
        let v = iter_bits(cand)
            .min_by_key(|&v| (adj[v] & cand).count_ones())
            .expect("non-empty");
        cand &= !(adj[v] | (1 << v));
        size += 1;
    }
    size
}

fn branch(adj: &[u64], mut cand: u64, mut size: usize, best: &mut usize) {
    // vertices of degree <= 1 inside `cand` belong to some maximum set
    loop {
        let forced = iter_bits(cand).find(|&v| (adj[v] & cand).count_ones() <= 1);
        match forced {
            Some(v) => {
                cand &= !(adj[v] | (1 << v));
                size += 1;
            }
            None => break,
        }
    }
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    // branch on the vertex of largest remaining degree
    let v = iter_bits(cand)
        .max_by_key(|&v| ((adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
        .expect("non-empty");
    branch(adj, cand & !(adj[v] | (1 << v)), size + 1, best);
    branch(adj, cand & !(1 << v), size, best);
}

fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, Family};

    fn naive(g: &Graph) -> usize {
        let adj = g.adjacency_masks().unwrap();
        (0u64..1 << g.p())
            .filter(|&s| iter_bits(s).all(|v| adj[v] & s == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn known_values() {
        let alpha = |f: Family| independence_number(&f.build().unwrap()).unwrap();
        assert_eq!(alpha(Family::Complete(5)), 1);
        assert_eq!(alpha(Family::Cycle(6)), 3);
        assert_eq!(alpha(Family::CompleteMultipartite(vec![1, 1, 4])), 4);
        assert_eq!(alpha(Family::Path(11)), 6);
        assert_eq!(alpha(Family::Star(63)), 63);
    }

    #[test]
    fn k114_matches_subset_scan() {
        let g = Family::CompleteMultipartite(vec![1, 1, 4]).build().unwrap();
        assert_eq!(naive(&g), 4);
    }

    #[test]
    fn union_is_additive() {
        let g = Family::Cycle(7).build().unwrap();
        let h = Family::CompleteBipartite(2, 3).build().unwrap();
        let u = disjoint_union(&g, &h);
        let a = |x: &Graph| independence_number(x).unwrap();
        assert_eq!(a(&u), a(&g) + a(&h));
        assert_eq!(a(&u), naive(&g) + naive(&h));
    }

    #[test]
    fn size_limit() {
        let g = Family::Path(65).build().unwrap();
        assert_eq!(
            independence_number(&g),
            Err(GraphError::TooLarge { p: 65, limit: 64 })
        );
        let g = Family::Path(64).build().unwrap();
        assert_eq!(independence_number(&g).unwrap(), 32);
    }

    #[test]
    fn petersen_like_dense_graph() {
        // complement of C_9 has alpha 2
        let c9 = Family::Cycle(9).build().unwrap();
        let edges = (0..9usize)
            .flat_map(|u| (u + 1..9).map(move |v| (u, v)))
            .filter(|&(u, v)| !c9.has_edge(u, v));
        let g = Graph::new(9, edges, "").unwrap();
        assert_eq!(independence_number(&g).unwrap(), 2);
        assert_eq!(naive(&g), 2);
    }
}
