mod common;

use proptest::prelude::*;

use gracelab::caterpillar::{build_caterpillar, CaterpillarSpec};
use gracelab::constructions::{label_caterpillar, label_star, Side};
use gracelab::labeling::top_labels_independent;
use gracelab::{
    complement_labeling, exists_labeling, independence_number, verify, Graph, Label, SearchConfig, TotalLabeling,
};

/// Connected graphs: a random spanning tree plus a few extra edges.
fn connected_graph(max_p: usize, max_total: usize) -> impl Strategy<Value = Graph> {
    (2..=max_p)
        .prop_flat_map(|p| {
            let parents: Vec<_> = (1..p).map(|i| 0..i).collect();
            (Just(p), parents, prop::collection::vec((0..p, 0..p), 0..4))
        })
        .prop_map(move |(p, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &par)| (par, i + 1)).collect();
            for (a, b) in extra {
                let e = (a.min(b), a.max(b));
                if a != b && !edges.contains(&e) && p + edges.len() < max_total {
                    edges.push(e);
                }
            }
            Graph::new(p, edges, "random").unwrap()
        })
}

fn caterpillar_spec() -> impl Strategy<Value = CaterpillarSpec> {
    (1usize..4, any::<bool>()).prop_flat_map(|(r, odd)| {
        let a_len = if odd { r + 1 } else { r };
        (Just(r), Just(odd), prop::collection::vec(0usize..3, a_len), prop::collection::vec(0usize..3, r))
    })
    .prop_map(|(r, odd, a_extra, b_extra)| {
        let a = a_extra
            .iter()
            .enumerate()
            .map(|(i, x)| x + if i == 0 || (odd && i == r) { 1 } else { 2 })
            .collect();
        let b = b_extra
            .iter()
            .enumerate()
            .map(|(j, x)| x + if !odd && j == r - 1 { 1 } else { 2 })
            .collect();
        if odd {
            CaterpillarSpec::odd(a, b)
        } else {
            CaterpillarSpec::even(a, b)
        }
    })
}

fn sorted(f: &TotalLabeling) -> Vec<Label> {
    let mut v: Vec<_> = f.labels().collect();
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn search_matches_naive_oracle(g in connected_graph(5, 10)) {
        let alpha = independence_number(&g).unwrap() as Label;
        for k in 1..=alpha + 1 {
            let out = exists_labeling(&g, &SearchConfig::new(k)).unwrap();
            let naive = common::naive_labelings(&g, k);
            prop_assert_eq!(out.exists(), !naive.is_empty());
            prop_assert_eq!(out.not_exists(), naive.is_empty());
            if let Some(f) = out.witness() {
                prop_assert!(verify(&g, f).unwrap().is_valid_with(k));
                prop_assert!(top_labels_independent(&g, f));
                prop_assert!(naive.contains(f.vertex_labels()));
            }
        }
    }

    #[test]
    fn workers_do_not_change_outcomes(g in connected_graph(7, 14), k in 1u32..4, w in 2usize..9) {
        let one = exists_labeling(&g, &SearchConfig::new(k)).unwrap();
        let many = exists_labeling(&g, &SearchConfig::new(k).with_workers(w)).unwrap();
        prop_assert_eq!(&one.status, &many.status);
        prop_assert_eq!(one.nodes_explored, many.nodes_explored);
        let cap = one.nodes_explored / 3 + 1;
        let a = exists_labeling(&g, &SearchConfig::new(k).with_node_limit(cap)).unwrap();
        let b = exists_labeling(&g, &SearchConfig::new(k).with_node_limit(cap).with_workers(w)).unwrap();
        prop_assert_eq!(&a.status, &b.status);
        prop_assert_eq!(a.nodes_explored, b.nodes_explored);
    }

    #[test]
    fn tampering_is_detected(g in connected_graph(6, 12), bump in 1u32..5) {
        let alpha = independence_number(&g).unwrap() as Label;
        let found = (1..=alpha).find_map(|k| exists_labeling(&g, &SearchConfig::new(k)).unwrap().witness().cloned());
        if let Some(f) = found {
            let mut broken = f.clone();
            broken.set_vertex_label(0, f.vertex(0) + bump + f.max_label().unwrap());
            prop_assert!(!verify(&g, &broken).unwrap().valid);
        }
    }

    #[test]
    fn caterpillar_sides_verify(spec in caterpillar_spec()) {
        let ct = build_caterpillar(&spec).unwrap();
        let a = label_caterpillar(&ct, Side::A).unwrap();
        let b = label_caterpillar(&ct, Side::B).unwrap();
        prop_assert_eq!(a.k as usize, ct.a());
        prop_assert_eq!(b.k as usize, ct.b());
        prop_assert!(top_labels_independent(&a.graph, &a.labeling));
        prop_assert!(top_labels_independent(&b.graph, &b.labeling));
        // side B is the complement of side A
        let c = 3 * (ct.a() + ct.b()) as Label - 2;
        prop_assert_eq!(complement_labeling(&a.graph, &a.labeling, c).unwrap(), b.labeling);
    }

    #[test]
    fn complement_is_an_involution(spec in caterpillar_spec(), shift in 0u32..20) {
        let ct = build_caterpillar(&spec).unwrap();
        let f = label_caterpillar(&ct, Side::A).unwrap();
        let c = f.labeling.max_label().unwrap() + 1 + shift;
        let once = complement_labeling(&f.graph, &f.labeling, c).unwrap();
        prop_assert_eq!(complement_labeling(&f.graph, &once, c).unwrap(), f.labeling);
    }

    #[test]
    fn stars_cover_their_range(k in 1u32..10, t in 1usize..10) {
        let s = label_star(k as usize * t, k).unwrap();
        let expect: Vec<Label> = (k..k + 2 * k * t as Label + 1).collect();
        prop_assert_eq!(sorted(&s.labeling), expect);
    }

    #[test]
    fn graph_json_round_trips(g in connected_graph(8, 20)) {
        let text = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        prop_assert_eq!(back, g);
    }
}
