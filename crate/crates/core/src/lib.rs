//! Construction, verification and exhaustive search of k-super graceful
//! labelings.
//!
//! A k-super graceful labeling of a graph with `p` vertices and `q` edges is a
//! bijection from vertices and edges onto `k..=k+p+q-1` in which every edge
//! is labeled with the absolute difference of its endpoint labels.

// Index loops mirror the label formulas more closely than iterator chains.
#![allow(clippy::needless_range_loop)]

pub mod caterpillar;
pub mod constructions;
pub mod graph;
pub mod independence;
pub mod labeling;
pub mod search;
pub mod transforms;

pub use caterpillar::{build_caterpillar, CaterpillarGraph, CaterpillarSpec, SpineParity};
pub use constructions::{ConstructionError, FixtureEntry};
pub use graph::{build_family, build_g1mnk, disjoint_union, Family, Graph, GraphError};
pub use independence::independence_number;
pub use labeling::{
    check_necessary_conditions, complement_labeling, induce_edge_labels, verify, Feasibility, Label,
    LabeledGraph, LabelingError, TotalLabeling, Verdict, Violation,
};
pub use search::{
    enumerate_labelings, exists_labeling, Enumeration, ExistenceTable, LimitKind, SearchConfig, SearchError,
    SearchMode, SearchOutcome, SearchStatus,
};
pub use transforms::{
    attach_pendants, cycle_edge_delete, delete_apex, four_partite_swap, union_labeling, TransformError, TransformResult,
};
