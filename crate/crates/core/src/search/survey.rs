//! Existence tables over parameterized graph families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::constructions::{
    fixtures, label_complete_bipartite, label_k11r, label_odd_cycle, label_path_k, label_star, label_tadpole, Part,
    TadpoleVariant,
};
use crate::graph::{Family, Graph};
use crate::independence::{independence_number, ALPHA_VERTEX_LIMIT};
use crate::labeling::{Label, LabeledGraph};

use super::{exists_labeling, SearchConfig, SearchError, SearchStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RowStatus {
    Exists,
    NotExists,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RowMethod {
    #[serde(rename = "constructive")]
    Constructive,
    #[serde(rename = "search")]
    Search,
    #[serde(rename = "alpha-gate")]
    AlphaGate,
}

impl RowStatus {
    fn as_str(self) -> &'static str {
        match self {
            RowStatus::Exists => "Exists",
            RowStatus::NotExists => "NotExists",
            RowStatus::Inconclusive => "Inconclusive",
        }
    }
}

impl RowMethod {
    fn as_str(self) -> &'static str {
        match self {
            RowMethod::Constructive => "constructive",
            RowMethod::Search => "search",
            RowMethod::AlphaGate => "alpha-gate",
        }
    }
}

impl FromStr for RowStatus {
    type Err = SearchError;
    fn from_str(s: &str) -> Result<Self, SearchError> {
        [RowStatus::Exists, RowStatus::NotExists, RowStatus::Inconclusive]
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| SearchError::Survey(format!("unknown status `{s}`")))
    }
}

impl FromStr for RowMethod {
    type Err = SearchError;
    fn from_str(s: &str) -> Result<Self, SearchError> {
        [RowMethod::Constructive, RowMethod::Search, RowMethod::AlphaGate]
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| SearchError::Survey(format!("unknown method `{s}`")))
    }
}

/// Identifies one cell of a survey.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CellKey {
    pub family: String,
    pub params: BTreeMap<String, usize>,
    pub k: Label,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceRow {
    pub family: String,
    pub params: BTreeMap<String, usize>,
    pub k: Label,
    pub status: RowStatus,
    pub method: RowMethod,
    pub nodes: u64,
    pub elapsed_ms: u64,
}

impl ExistenceRow {
    pub fn key(&self) -> CellKey {
        CellKey {
            family: self.family.clone(),
            params: self.params.clone(),
            k: self.k,
        }
    }
}

fn params_to_string(params: &BTreeMap<String, usize>) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

fn params_from_str(s: &str) -> Result<BTreeMap<String, usize>, SearchError> {
    let bad = || SearchError::Survey(format!("malformed params `{s}`"));
    s.split(';')
        .filter(|x| !x.is_empty())
        .map(|kv| {
            let (k, v) = kv.split_once('=').ok_or_else(bad)?;
            Ok((k.to_string(), v.parse().map_err(|_| bad())?))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl TableFormat {
    /// JSON for a `.json` extension, CSV otherwise.
    pub fn from_path(path: &std::path::Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => TableFormat::Json,
            _ => TableFormat::Csv,
        }
    }
}

const CSV_HEADER: [&str; 7] = ["family", "params", "k", "status", "method", "nodes", "elapsed_ms"];

/// Survey results, one row per `(family, params, k)` cell.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<ExistenceRow>", into = "Vec<ExistenceRow>")]
pub struct ExistenceTable {
    rows: Vec<ExistenceRow>,
    keys: BTreeSet<CellKey>,
}

impl TryFrom<Vec<ExistenceRow>> for ExistenceTable {
    type Error = SearchError;
    fn try_from(rows: Vec<ExistenceRow>) -> Result<Self, SearchError> {
        let mut t = ExistenceTable::new();
        for r in rows {
            t.insert(r)?;
        }
        Ok(t)
    }
}

impl From<ExistenceTable> for Vec<ExistenceRow> {
    fn from(t: ExistenceTable) -> Self {
        t.rows
    }
}

impl ExistenceTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rows(&self) -> &[ExistenceRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, key: &CellKey) -> bool {
        self.keys.contains(key)
    }

    pub fn get(&self, key: &CellKey) -> Option<&ExistenceRow> {
        self.rows.iter().find(|r| &r.key() == key)
    }

    /// Appends a row; rejects duplicates and `NotExists` rows that were not
    /// certified by search or by the independence gate.
    pub fn insert(&mut self, row: ExistenceRow) -> Result<(), SearchError> {
        if row.status == RowStatus::NotExists && row.method == RowMethod::Constructive {
            return Err(SearchError::Survey(format!(
                "{} {} k={}: NotExists needs search or alpha-gate",
                row.family,
                params_to_string(&row.params),
                row.k
            )));
        }
        if !self.keys.insert(row.key()) {
            return Err(SearchError::Survey(format!(
                "duplicate row {} {} k={}",
                row.family,
                params_to_string(&row.params),
                row.k
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.family.clone(),
                params_to_string(&r.params),
                r.k.to_string(),
                r.status.as_str().to_string(),
                r.method.as_str().to_string(),
                r.nodes.to_string(),
                r.elapsed_ms.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn from_csv(text: &str) -> Result<Self, SearchError> {
        let err = |e: csv::Error| SearchError::Survey(e.to_string());
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        let header: Vec<String> = rd.headers().map_err(err)?.iter().map(str::to_string).collect();
        if header != CSV_HEADER {
            return Err(SearchError::Survey(format!("unexpected header {header:?}")));
        }
        let num = |s: &str| {
            s.parse::<u64>()
                .map_err(|_| SearchError::Survey(format!("not a number: `{s}`")))
        };
        let mut table = ExistenceTable::new();
        for rec in rd.records() {
            let rec = rec.map_err(err)?;
            table.insert(ExistenceRow {
                family: rec[0].to_string(),
                params: params_from_str(&rec[1])?,
                k: num(&rec[2])? as Label,
                status: rec[3].parse()?,
                method: rec[4].parse()?,
                nodes: num(&rec[5])?,
                elapsed_ms: num(&rec[6])?,
            })?;
        }
        Ok(table)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, SearchError> {
        serde_json::from_str(text).map_err(|e| SearchError::Survey(e.to_string()))
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Csv => self.to_csv(),
            TableFormat::Json => self.to_json(),
        }
    }

    pub fn parse(text: &str, format: TableFormat) -> Result<Self, SearchError> {
        match format {
            TableFormat::Csv => Self::from_csv(text),
            TableFormat::Json => Self::from_json(text),
        }
    }
}

/// A single value or an inclusive `[lo, hi]` range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamRange {
    One(usize),
    Range([usize; 2]),
}

impl ParamRange {
    fn values(self) -> std::ops::RangeInclusive<usize> {
        match self {
            ParamRange::One(x) => x..=x,
            ParamRange::Range([lo, hi]) => lo..=hi,
        }
    }
}

/// One family swept over parameter and `k` ranges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRequest {
    pub family: String,
    pub params: BTreeMap<String, ParamRange>,
    pub k: ParamRange,
}

impl SurveyRequest {
    /// Cells in order: parameters nested by name (first name outermost), `k` innermost.
    pub fn cells(&self) -> Vec<CellKey> {
        let mut combos = vec![BTreeMap::new()];
        for (name, range) in &self.params {
            combos = combos
                .into_iter()
                .flat_map(|c| {
                    range.values().map(move |v| {
                        let mut c = c.clone();
                        c.insert(name.clone(), v);
                        c
                    })
                })
                .collect();
        }
        combos
            .into_iter()
            .flat_map(|params| {
                self.k.values().map(move |k| CellKey {
                    family: self.family.clone(),
                    params: params.clone(),
                    k: k as Label,
                })
            })
            .collect()
    }
}

/// A known construction for this family member at this `k`, if any; the
/// returned graph is always the family's own numbering.
pub fn construct_cell(family: &Family, k: Label) -> Option<LabeledGraph> {
    if k < 1 {
        return None;
    }
    let kk = k as usize;
    let built = match *family {
        Family::Path(n) => label_path_k(n, k).ok().map(|(lg, _)| lg),
        Family::Cycle(n) if n == 2 * kk + 1 => label_odd_cycle(k).ok(),
        Family::Star(n) => label_star(n, k).ok(),
        Family::CompleteBipartite(1, n) => label_star(n, k).ok(),
        Family::CompleteBipartite(m, n) if m >= 2 && m <= n && (kk == m || kk == n) => {
            label_complete_bipartite(m, n, if kk == n { Part::N } else { Part::M }).ok()
        }
        Family::CompleteMultipartite(ref parts) if k == 1 && parts.len() == 3 && parts[..2] == [1, 1] => {
            label_k11r(parts[2]).ok()
        }
        Family::Tadpole { cycle, tail } => {
            let variant = if cycle == 4 {
                TadpoleVariant::FourCycle { tail }
            } else if tail == 1 {
                TadpoleVariant::CycleWithPendant { cycle }
            } else {
                TadpoleVariant::OddCycle {
                    k: (cycle as Label).div_ceil(2),
                    tail,
                }
            };
            if variant.k() == k {
                label_tadpole(variant).ok()
            } else {
                None
            }
        }
        _ => None,
    };
    let target = family.build().ok()?;
    built
        .or_else(|| {
            fixtures()
                .into_iter()
                .find(|e| e.graph.name() == target.name() && e.expected_k == k)
                .map(|e| LabeledGraph {
                    graph: e.graph,
                    labeling: e.labeling,
                    k,
                })
        })
        .filter(|lg| lg.k == k && lg.graph.edges() == target.edges())
}

fn fill(cell: &CellKey, cfg: &SearchConfig) -> Result<ExistenceRow, SearchError> {
    let start = Instant::now();
    let family = Family::from_params(&cell.family, &cell.params).map_err(|e| SearchError::Survey(e.to_string()))?;
    let row = |status, method, nodes| ExistenceRow {
        family: cell.family.clone(),
        params: cell.params.clone(),
        k: cell.k,
        status,
        method,
        nodes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    if construct_cell(&family, cell.k).is_some() {
        return Ok(row(RowStatus::Exists, RowMethod::Constructive, 0));
    }
    let g: Graph = family.build().map_err(|e| SearchError::Survey(e.to_string()))?;
    if cfg.use_alpha_gate && g.p() <= ALPHA_VERTEX_LIMIT {
        let alpha = independence_number(&g).expect("within the vertex limit");
        if cell.k as usize > alpha {
            return Ok(row(RowStatus::NotExists, RowMethod::AlphaGate, 0));
        }
    }
    let out = exists_labeling(&g, &SearchConfig { k: cell.k, ..cfg.clone() })?;
    let status = match out.status {
        SearchStatus::Exists { .. } => RowStatus::Exists,
        SearchStatus::NotExists => RowStatus::NotExists,
        SearchStatus::Inconclusive { .. } => RowStatus::Inconclusive,
    };
    Ok(row(status, RowMethod::Search, out.nodes_explored))
}

/// Fills every requested cell missing from `table`, in request order.
/// `checkpoint` runs after each new row so callers can persist progress.
/// Returns the number of rows added.
pub fn survey<F>(
    requests: &[SurveyRequest],
    cfg: &SearchConfig,
    table: &mut ExistenceTable,
    mut checkpoint: F,
) -> Result<usize, SearchError>
where
    F: FnMut(&ExistenceTable) -> Result<(), SearchError>,
{
    let mut added = 0;
    for req in requests {
        for cell in req.cells() {
            if table.contains(&cell) {
                continue;
            }
            table.insert(fill(&cell, cfg)?)?;
            added += 1;
            checkpoint(table)?;
        }
    }
    Ok(added)
}

impl fmt::Display for CellKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} k={}", self.family, params_to_string(&self.params), self.k)
    }
}
