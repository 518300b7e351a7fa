//! Hand-listed labelings of short paths and cycles.
//!
//! Path entries are stored as the interleaved sequence
//! `f(u_1), f(u_1 u_2), f(u_2), ..., f(u_n)`; cycle entries as the vertex
//! labels in cyclic order (edge labels induced).

use serde::{Deserialize, Serialize};

use crate::graph::{Family, Graph};
use crate::labeling::{induce_edge_labels, Label, TotalLabeling};

use super::ConstructionError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub name: String,
    pub graph: Graph,
    pub labeling: TotalLabeling,
    pub expected_k: Label,
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

enum Raw {
    Path(&'static [Label]),
    Cycle(&'static [Label]),
}

struct RawEntry {
    name: &'static str,
    k: Label,
    raw: Raw,
    note: Option<&'static str>,
}

const REGISTRY: &[RawEntry] = &[
    RawEntry {
        name: "P6_k2",
        k: 2,
        raw: Raw::Path(&[2, 10, 12, 8, 4, 7, 11, 5, 6, 3, 9]),
        note: None,
    },
    RawEntry {
        name: "P7_k2",
        k: 2,
        raw: Raw::Path(&[10, 8, 2, 12, 14, 3, 11, 5, 6, 7, 13, 9, 4]),
        note: None,
    },
    RawEntry {
        name: "P8_k2",
        k: 2,
        raw: Raw::Path(&[5, 8, 13, 7, 6, 10, 16, 14, 2, 9, 11, 4, 15, 3, 12]),
        note: None,
    },
    RawEntry {
        name: "P9_k2",
        k: 2,
        raw: Raw::Path(&[18, 16, 2, 15, 17, 14, 3, 10, 13, 9, 4, 8, 12, 7, 5, 6, 11]),
        note: Some("derived from print: an empty token between 14 and 3 was dropped"),
    },
    RawEntry {
        name: "P9_k2_alt",
        k: 2,
        raw: Raw::Path(&[14, 4, 18, 8, 10, 6, 16, 7, 9, 3, 12, 5, 17, 15, 2, 11, 13]),
        note: None,
    },
    RawEntry {
        name: "P10_k2",
        k: 2,
        raw: Raw::Path(&[20, 18, 2, 17, 19, 16, 3, 12, 15, 11, 4, 10, 14, 9, 5, 8, 13, 7, 6]),
        note: None,
    },
    RawEntry {
        name: "P11_k2",
        k: 2,
        raw: Raw::Path(&[12, 8, 4, 17, 21, 18, 3, 19, 22, 20, 2, 14, 16, 11, 5, 10, 15, 9, 6, 7, 13]),
        note: None,
    },
    RawEntry {
        name: "P8_k3",
        k: 3,
        raw: Raw::Path(&[11, 4, 7, 8, 15, 9, 6, 10, 16, 13, 3, 14, 17, 12, 5]),
        note: None,
    },
    RawEntry {
        name: "P9_k3",
        k: 3,
        raw: Raw::Path(&[18, 11, 7, 12, 19, 4, 15, 5, 10, 6, 16, 13, 3, 14, 17, 9, 8]),
        note: None,
    },
    RawEntry {
        name: "P10_k3",
        k: 3,
        raw: Raw::Path(&[20, 17, 3, 18, 21, 7, 14, 8, 6, 13, 19, 9, 10, 5, 15, 11, 4, 12, 16]),
        note: None,
    },
    RawEntry {
        name: "P11_k3",
        k: 3,
        raw: Raw::Path(&[20, 13, 7, 16, 23, 19, 4, 11, 15, 6, 9, 12, 21, 3, 18, 10, 8, 14, 22, 17, 5]),
        note: None,
    },
    RawEntry {
        name: "P10_k4",
        k: 4,
        raw: Raw::Path(&[11, 8, 19, 9, 10, 12, 22, 18, 4, 17, 21, 16, 5, 15, 20, 14, 6, 7, 13]),
        note: None,
    },
    RawEntry {
        name: "P11_k4",
        k: 4,
        raw: Raw::Path(&[20, 12, 8, 16, 24, 5, 19, 15, 4, 18, 22, 13, 9, 14, 23, 6, 17, 7, 10, 11, 21]),
        note: None,
    },
    RawEntry {
        name: "C4_k2",
        k: 2,
        raw: Raw::Cycle(&[2, 8, 5, 9]),
        note: None,
    },
    RawEntry {
        name: "C5_k2",
        k: 2,
        raw: Raw::Cycle(&[3, 10, 4, 9, 11]),
        note: None,
    },
    RawEntry {
        name: "C8_k2",
        k: 2,
        raw: Raw::Cycle(&[17, 4, 14, 12, 15, 7, 16, 11]),
        note: None,
    },
];

fn decode(entry: &RawEntry) -> FixtureEntry {
    let (graph, labeling, source) = match entry.raw {
        Raw::Path(seq) => {
            assert!(seq.len() % 2 == 1, "{}: interleaved sequence has even length", entry.name);
            let n = seq.len().div_ceil(2);
            let graph = Family::Path(n).build().expect("n >= 1");
            let vertices = seq.iter().step_by(2).copied().collect();
            let edges = seq.iter().skip(1).step_by(2).enumerate().map(|(i, &l)| (i, i + 1, l));
            let source = format!(
                "hand-listed {}-super graceful labeling of P_{n}, consecutive vertex and edge labels",
                entry.k
            );
            (graph, TotalLabeling::new(vertices, edges), source)
        }
        Raw::Cycle(seq) => {
            let graph = Family::Cycle(seq.len()).build().expect("n >= 3");
            let labeling = induce_edge_labels(&graph, seq.to_vec()).expect("distinct neighbours");
            let source = format!(
                "hand-listed {}-super graceful labeling of C_{}, consecutive vertex labels",
                entry.k,
                seq.len()
            );
            (graph, labeling, source)
        }
    };
    FixtureEntry {
        name: entry.name.to_string(),
        graph,
        labeling,
        expected_k: entry.k,
        source,
        note: entry.note.map(str::to_string),
    }
}

/// Every registry entry, in registry order.
pub fn fixtures() -> Vec<FixtureEntry> {
    REGISTRY.iter().map(decode).collect()
}

pub fn fixture_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|e| e.name).collect()
}

pub fn fixture(name: &str) -> Result<FixtureEntry, ConstructionError> {
    REGISTRY
        .iter()
        .find(|e| e.name == name)
        .map(decode)
        .ok_or_else(|| ConstructionError::UnknownFixture(name.to_string()))
}
