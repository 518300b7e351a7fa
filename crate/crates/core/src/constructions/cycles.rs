use crate::graph::Family;
use crate::labeling::{Label, LabeledGraph};

use super::paths::{path_caterpillar_labels, path_formula_labeling};
use super::{finish_vertices, out_of_range, ConstructionError, Side};

/// `C_{2k+1}` with `k` as an edge label: the `(k+1)`-labeling of
/// `P_{2k+1}` (both ends on the A side) closed by the edge between its
/// endpoints, whose induced label is exactly `k`.
pub fn label_odd_cycle(k: Label) -> Result<LabeledGraph, ConstructionError> {
    if k < 1 {
        return Err(out_of_range("odd cycle needs k >= 1"));
    }
    let n = 2 * k as usize + 1;
    let labels = path_caterpillar_labels(n, Side::A)?;
    finish_vertices("odd cycle", Family::Cycle(n).build()?, labels, k)
}

/// Tadpole constructions obtained by surgery on path labelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TadpoleVariant {
    /// `T_{4,t}`, even `t >= 2`, labeled with `k = (t+2)/2`.
    FourCycle { tail: usize },
    /// `T_{n,1}`, odd `n >= 5`, labeled with `k = (n-1)/2`.
    CycleWithPendant { cycle: usize },
    /// `T_{2k-1,t}` for `t` in `{4k-2, 4k-1, 4k+1, 4k+2}`, `k >= 2`,
    /// labeled with `k - 1`.
    OddCycle { k: Label, tail: usize },
}

impl TadpoleVariant {
    pub fn family(&self) -> Family {
        match *self {
            TadpoleVariant::FourCycle { tail } => Family::Tadpole { cycle: 4, tail },
            TadpoleVariant::CycleWithPendant { cycle } => Family::Tadpole { cycle, tail: 1 },
            TadpoleVariant::OddCycle { k, tail } => Family::Tadpole {
                cycle: 2 * k as usize - 1,
                tail,
            },
        }
    }

    pub fn k(&self) -> Label {
        match *self {
            TadpoleVariant::FourCycle { tail } => (tail as Label + 2) / 2,
            TadpoleVariant::CycleWithPendant { cycle } => (cycle as Label - 1) / 2,
            TadpoleVariant::OddCycle { k, .. } => k - 1,
        }
    }
}

/// Labels a tadpole by path surgery.
///
/// The first two variants start from the caterpillar labeling of `P_n` (`n`
/// even) oriented so that `u_1` carries the small label `n/2`:
/// * `T_{4,n-4}`: swap the labels of `u_1` and `u_1 u_2`, then add `u_1 u_4`;
/// * `T_{n-1,1}`: add `u_1 u_{n-1}`.
///
/// The odd-cycle variant adds a chord of label difference `k-1` spanning
/// `2k-1` vertices at one end of the closed-form path labeling: `v_1 v_k` for
/// `P_{6k-3}` and `P_{6k-2}`; `v_{2k+1} v_{3k}` for `P_{6k}`;
/// `u_{2k+2} u_{3k+1}` for `P_{6k+1}`.
pub fn label_tadpole(variant: TadpoleVariant) -> Result<LabeledGraph, ConstructionError> {
    let k = variant.k();
    let graph = variant.family().build()?;
    let labels = match variant {
        TadpoleVariant::FourCycle { tail } => {
            if tail < 2 || tail % 2 != 0 {
                return Err(out_of_range("T_{4,t} needs even t >= 2"));
            }
            let mut labels = path_caterpillar_labels(tail + 4, Side::B)?;
            labels[0] = labels[0].abs_diff(labels[1]);
            labels
        }
        TadpoleVariant::CycleWithPendant { cycle } => {
            if cycle < 5 || cycle % 2 == 0 {
                return Err(out_of_range("T_{n,1} needs odd n >= 5"));
            }
            path_caterpillar_labels(cycle + 1, Side::B)?
        }
        TadpoleVariant::OddCycle { k, tail } => {
            let kk = k as usize;
            if kk < 2 || ![4 * kk - 2, 4 * kk - 1, 4 * kk + 1, 4 * kk + 2].contains(&tail) {
                return Err(out_of_range("T_{2k-1,t} needs k >= 2 and t in {4k-2, 4k-1, 4k+1, 4k+2}"));
            }
            let n = 2 * kk - 1 + tail;
            let path = path_formula_labeling(n, k)?;
            let mut labels = path.labeling.vertex_labels().to_vec();
            // the 6k and 6k+1 walks have their chord at the far end
            if tail > 4 * kk {
                labels.reverse();
            }
            labels
        }
    };
    finish_vertices("tadpole", graph, labels, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c3_and_c5() {
        let out = label_odd_cycle(1).unwrap();
        assert_eq!(out.labeling.vertex_labels(), &[6, 2, 5]);
        let around: Vec<_> = [(0, 1), (1, 2), (2, 0)].iter().map(|&(a, b)| out.labeling.edge(a, b).unwrap()).collect();
        assert_eq!(around, [4, 3, 1]);

        let out = label_odd_cycle(2).unwrap();
        assert_eq!(out.labeling.vertex_labels(), &[11, 3, 10, 4, 9]);
        let around: Vec<_> = (0..5).map(|i| out.labeling.edge(i, (i + 1) % 5).unwrap()).collect();
        assert_eq!(around, [8, 7, 6, 5, 2]);
    }

    #[test]
    fn closing_edge_is_k() {
        for k in 1..=12 {
            let out = label_odd_cycle(k).unwrap();
            let n = 2 * k as usize + 1;
            assert_eq!(out.labeling.edge(n - 1, 0), Some(k));
        }
    }

    #[test]
    fn t42_surgery() {
        let out = label_tadpole(TadpoleVariant::FourCycle { tail: 2 }).unwrap();
        assert_eq!(out.labeling.vertex_labels(), &[10, 13, 4, 12, 5, 11]);
        assert_eq!(out.labeling.edge(0, 3), Some(2));
        assert_eq!(out.labeling.edge(0, 1), Some(3));
        assert_eq!(out.k, 2);
    }

    #[test]
    fn t51_surgery() {
        let out = label_tadpole(TadpoleVariant::CycleWithPendant { cycle: 5 }).unwrap();
        assert_eq!(out.labeling.vertex_labels(), &[3, 13, 4, 12, 5, 11]);
        assert_eq!(out.labeling.edge(0, 4), Some(2));
        assert_eq!(out.k, 2);
    }

    #[test]
    fn t36_from_p9() {
        let out = label_tadpole(TadpoleVariant::OddCycle { k: 2, tail: 6 }).unwrap();
        assert_eq!(out.k, 1);
        assert_eq!(out.labeling.edge(0, 2), Some(1));
    }

    #[test]
    fn odd_cycle_variants_all_tails() {
        for k in 2..=5usize {
            for tail in [4 * k - 2, 4 * k - 1, 4 * k + 1, 4 * k + 2] {
                let out = label_tadpole(TadpoleVariant::OddCycle { k: k as Label, tail }).unwrap();
                assert_eq!(out.k as usize, k - 1);
            }
        }
        assert!(label_tadpole(TadpoleVariant::OddCycle { k: 2, tail: 8 }).is_err());
        assert!(label_tadpole(TadpoleVariant::FourCycle { tail: 3 }).is_err());
        assert!(label_tadpole(TadpoleVariant::CycleWithPendant { cycle: 6 }).is_err());
    }
}
