//! Exhaustive search for k-super graceful labelings.
//!
//! The search places vertex labels one vertex at a time and induces the
//! label of every edge to an already placed neighbour. A `NotExists` answer
//! is only ever reported after full exhaustion or when `k` exceeds the
//! independence number.

mod engine;
mod survey;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::independence::{independence_number, ALPHA_VERTEX_LIMIT};
use crate::labeling::{check_label_bound, induce_edge_labels, verify, Label, LabelingError, TotalLabeling};

pub use survey::{
    construct_cell, survey, CellKey, ExistenceRow, ExistenceTable, ParamRange, RowMethod, RowStatus, SurveyRequest,
    TableFormat,
};

/// Largest `p + q` accepted by [`enumerate_labelings`].
pub const ENUMERATION_LIMIT: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("enumeration needs p + q <= {limit}, got {total}")]
    TooLarge { total: usize, limit: usize },
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("survey: {0}")]
    Survey(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// Stop at the first witness.
    Decision,
    /// Collect every labeling, or the first `limit` of them.
    Enumerate { limit: Option<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub k: Label,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    pub mode: SearchMode,
    pub workers: usize,
    pub use_alpha_gate: bool,
    /// Prune that keeps the `k` largest labels on non-adjacent vertices.
    /// Only switched off to test that it never removes a solution.
    pub use_top_prune: bool,
}

impl SearchConfig {
    pub fn new(k: Label) -> Self {
        SearchConfig {
            k,
            node_limit: None,
            time_limit: None,
            mode: SearchMode::Decision,
            workers: 1,
            use_alpha_gate: true,
            use_top_prune: true,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn enumerate(mut self, limit: Option<usize>) -> Self {
        self.mode = SearchMode::Enumerate { limit };
        self
    }

    fn validate(&self) -> Result<(), SearchError> {
        let bad = |m: &str| Err(SearchError::InvalidConfig(m.to_string()));
        if self.k < 1 {
            return bad("k must be at least 1");
        }
        if self.node_limit == Some(0) {
            return bad("node limit must be positive");
        }
        if self.time_limit == Some(Duration::ZERO) {
            return bad("time limit must be positive");
        }
        if self.workers == 0 {
            return bad("workers must be positive");
        }
        if self.mode == (SearchMode::Enumerate { limit: Some(0) }) {
            return bad("enumeration limit must be positive");
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitKind {
    NodeLimit,
    TimeLimit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SearchStatus {
    Exists { witness: TotalLabeling },
    NotExists,
    Inconclusive { limit: LimitKind },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    #[serde(flatten)]
    pub status: SearchStatus,
    pub k: Label,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
    pub gate_rejected: bool,
}

impl SearchOutcome {
    pub fn exists(&self) -> bool {
        matches!(self.status, SearchStatus::Exists { .. })
    }

    pub fn not_exists(&self) -> bool {
        self.status == SearchStatus::NotExists
    }

    pub fn witness(&self) -> Option<&TotalLabeling> {
        match &self.status {
            SearchStatus::Exists { witness } => Some(witness),
            _ => None,
        }
    }
}

/// Every labeling found, in search order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub labelings: Vec<TotalLabeling>,
    /// True when the whole space was covered (no limit fired).
    pub exhausted: bool,
    /// Set when a node or time limit cut the enumeration short.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limit: Option<LimitKind>,
    pub nodes_explored: u64,
    pub gate_rejected: bool,
}

struct Raw {
    solutions: Vec<Vec<Label>>,
    nodes: u64,
    stop: Option<engine::Stop>,
    gate_rejected: bool,
}

fn run(g: &Graph, cfg: &SearchConfig, max_solutions: Option<usize>) -> Result<Raw, SearchError> {
    cfg.validate()?;
    check_label_bound(cfg.k as u64, g)?;
    if cfg.use_alpha_gate && g.p() <= ALPHA_VERTEX_LIMIT {
        let alpha = independence_number(g).expect("within the vertex limit");
        if cfg.k as usize > alpha {
            return Ok(Raw {
                solutions: Vec::new(),
                nodes: 0,
                stop: None,
                gate_rejected: true,
            });
        }
    }
    let pb = engine::Problem::new(g, cfg.k, cfg.use_top_prune);
    let limits = engine::Limits {
        node_limit: cfg.node_limit,
        deadline: cfg.time_limit.map(|t| Instant::now() + t),
        max_solutions,
    };
    let merged = engine::run(&pb, &limits, cfg.workers);
    Ok(Raw {
        solutions: merged.solutions,
        nodes: merged.nodes,
        stop: merged.stop,
        gate_rejected: false,
    })
}

fn to_labeling(g: &Graph, vertices: Vec<Label>, k: Label) -> TotalLabeling {
    let f = induce_edge_labels(g, vertices).expect("search labels are distinct");
    debug_assert!(verify(g, &f).map(|v| v.is_valid_with(k)).unwrap_or(false));
    f
}

/// Decides whether `g` has a k-labeling for `cfg.k`. The mode in `cfg` is
/// ignored: the search stops at the first witness.
pub fn exists_labeling(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    let raw = run(g, cfg, Some(1))?;
    let status = match (raw.solutions.into_iter().next(), raw.stop) {
        (Some(v), _) => {
            let witness = to_labeling(g, v, cfg.k);
            let verdict = verify(g, &witness)?;
            assert!(verdict.is_valid_with(cfg.k), "search produced an invalid witness: {verdict:?}");
            SearchStatus::Exists { witness }
        }
        (None, Some(engine::Stop::Limit(limit))) => SearchStatus::Inconclusive { limit },
        (None, _) => SearchStatus::NotExists,
    };
    Ok(SearchOutcome {
        status,
        k: cfg.k,
        nodes_explored: raw.nodes,
        elapsed_ms: start.elapsed().as_millis() as u64,
        gate_rejected: raw.gate_rejected,
    })
}

/// Lists k-labelings of `g` in search order, without any symmetry quotient.
/// A limit in `cfg.mode` caps the number returned.
pub fn enumerate_labelings(g: &Graph, cfg: &SearchConfig) -> Result<Enumeration, SearchError> {
    let total = g.p() + g.q();
    if total > ENUMERATION_LIMIT {
        return Err(SearchError::TooLarge {
            total,
            limit: ENUMERATION_LIMIT,
        });
    }
    let limit = match cfg.mode {
        SearchMode::Enumerate { limit } => limit,
        SearchMode::Decision => Some(1),
    };
    let raw = run(g, cfg, limit)?;
    Ok(Enumeration {
        labelings: raw.solutions.into_iter().map(|v| to_labeling(g, v, cfg.k)).collect(),
        exhausted: raw.stop.is_none(),
        limit: match raw.stop {
            Some(engine::Stop::Limit(l)) => Some(l),
            _ => None,
        },
        nodes_explored: raw.nodes,
        gate_rejected: raw.gate_rejected,
    })
}
