mod common;

use std::collections::BTreeSet;

use gracelab::{enumerate_labelings, exists_labeling, independence_number, Family, Label, SearchConfig};

#[test]
fn top_prune_never_removes_a_labeling() {
    for g in common::oracle_graphs() {
        let alpha = independence_number(&g).unwrap() as Label;
        for k in 1..=alpha {
            let on = enumerate_labelings(&g, &SearchConfig::new(k).enumerate(None)).unwrap();
            let cfg = SearchConfig {
                use_top_prune: false,
                ..SearchConfig::new(k).enumerate(None)
            };
            let off = enumerate_labelings(&g, &cfg).unwrap();
            assert_eq!(on.labelings, off.labelings, "{} k={k}", g.name());
            assert!(on.nodes_explored <= off.nodes_explored);
        }
    }
}

#[test]
fn gate_off_agrees_above_alpha() {
    // without the gate the search itself must find nothing for k > alpha
    for g in common::oracle_graphs() {
        let alpha = independence_number(&g).unwrap() as Label;
        for k in alpha + 1..=alpha + 2 {
            let cfg = SearchConfig {
                use_alpha_gate: false,
                ..SearchConfig::new(k).enumerate(None)
            };
            let out = enumerate_labelings(&g, &cfg).unwrap();
            assert!(out.exhausted && out.labelings.is_empty(), "{} k={k}", g.name());
            assert!(common::naive_labelings(&g, k).is_empty());
            let gated = exists_labeling(&g, &SearchConfig::new(k)).unwrap();
            assert!(gated.gate_rejected && gated.nodes_explored == 0);
        }
    }
}

#[test]
fn p3_k2_matches_naive_filter() {
    let g = Family::Path(3).build().unwrap();
    let found = enumerate_labelings(&g, &SearchConfig::new(2).enumerate(None)).unwrap();
    let vs: BTreeSet<Vec<Label>> = found.labelings.iter().map(|f| f.vertex_labels().to_vec()).collect();
    assert!(vs.contains(&vec![6, 2, 5]));
    assert_eq!(vs, common::naive_labelings(&g, 2));
}

#[test]
fn decision_witness_is_first_enumerated() {
    for g in common::oracle_graphs() {
        let alpha = independence_number(&g).unwrap() as Label;
        for k in 1..=alpha {
            let all = enumerate_labelings(&g, &SearchConfig::new(k).enumerate(None)).unwrap();
            let first = exists_labeling(&g, &SearchConfig::new(k)).unwrap();
            assert_eq!(first.witness(), all.labelings.first(), "{} k={k}", g.name());
        }
    }
}

#[test]
fn node_limits_replay_sequential_prefixes() {
    // a limited run is the same as cutting the full run short
    let g = Family::Cycle(5).build().unwrap();
    let full = enumerate_labelings(&g, &SearchConfig::new(1).enumerate(None)).unwrap();
    for limit in [1, 7, 50, 200, full.nodes_explored - 1] {
        for w in [1, 3] {
            let cfg = SearchConfig::new(1).enumerate(None).with_node_limit(limit).with_workers(w);
            let part = enumerate_labelings(&g, &cfg).unwrap();
            assert!(!part.exhausted);
            assert_eq!(part.nodes_explored, limit);
            assert_eq!(part.labelings, full.labelings[..part.labelings.len()]);
        }
    }
    let cfg = SearchConfig::new(1).enumerate(None).with_node_limit(full.nodes_explored);
    assert!(enumerate_labelings(&g, &cfg).unwrap().exhausted);
}

#[test]
fn enumeration_limits_match_across_workers() {
    let g = Family::Cycle(5).build().unwrap();
    let full = enumerate_labelings(&g, &SearchConfig::new(1).enumerate(None)).unwrap();
    for n in [1, 3, 10] {
        for w in [1, 2, 4, 8] {
            let cfg = SearchConfig::new(1).enumerate(Some(n)).with_workers(w);
            let part = enumerate_labelings(&g, &cfg).unwrap();
            assert_eq!(part.labelings, full.labelings[..n]);
        }
    }
}
