//! Simple undirected graphs with dense vertex ids and builders for the graph
//! families that carry known labelings.
//!
//! Every builder documents its vertex numbering. Labelings are plain arrays
//! indexed by vertex id, so the numbering is part of each builder's contract.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while building or inspecting graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{p}")]
    EndpointOutOfRange { u: usize, v: usize, p: usize },
    #[error("{family}: parameter out of range, requires {bound}")]
    ParameterOutOfRange { family: String, bound: String },
    #[error("invalid caterpillar degrees: {0}")]
    InvalidDegrees(String),
    #[error("graph has {p} vertices, exact computation is limited to {limit}")]
    TooLarge { p: usize, limit: usize },
    #[error("cannot parse graph family `{0}`")]
    Parse(String),
}

fn out_of_range(family: &str, bound: &str) -> GraphError {
    GraphError::ParameterOutOfRange {
        family: family.to_string(),
        bound: bound.to_string(),
    }
}

/// A simple undirected graph on vertices `0..p`.
///
/// Edges are stored with the smaller endpoint first and sorted
/// lexicographically. The value is immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    p: usize,
    edges: Vec<(usize, usize)>,
    name: String,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    p: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    name: String,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = GraphError;

    fn try_from(repr: GraphRepr) -> Result<Self, Self::Error> {
        Graph::new(repr.p, repr.edges.iter().map(|e| (e[0], e[1])), repr.name)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            p: g.p,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
            name: g.name,
        }
    }
}

impl Graph {
    /// Builds a graph, normalizing edge orientation and order.
    pub fn new<I>(p: usize, edges: I, name: impl Into<String>) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if p == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= p || v >= p {
                return Err(GraphError::EndpointOutOfRange { u, v, p });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); p];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            p,
            edges: normalized,
            name: name.into(),
            adjacency,
        })
    }

    /// Number of vertices.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Number of edges.
    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.p && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Returns a copy with `extra` edges added. Fails on duplicates.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let edges = self.edges.iter().copied().chain(extra);
        Graph::new(self.p, edges, self.name.clone())
    }

    /// Returns a copy with the given edge removed, if present.
    pub fn without_edge(&self, u: usize, v: usize) -> Option<Graph> {
        let key = (u.min(v), u.max(v));
        let pos = self.edges.binary_search(&key).ok()?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Graph::new(self.p, edges, self.name.clone()).ok()
    }

    /// Removes a vertex, shifting every larger id down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if self.p == 1 {
            return Err(GraphError::NoVertices);
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)));
        Graph::new(self.p - 1, edges, self.name.clone())
    }

    /// Adjacency rows as bitmasks, available for graphs with at most 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.p > 64 {
            return None;
        }
        Some(
            self.adjacency
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &w| m | (1 << w)))
                .collect(),
        )
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.p];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.p
    }

    /// Graphviz rendering of the bare graph.
    pub fn to_dot(&self) -> String {
        self.dot_with(|v| v.to_string(), |_, _| None)
    }

    pub(crate) fn dot_with<V, E>(&self, vertex_label: V, edge_label: E) -> String
    where
        V: Fn(usize) -> String,
        E: Fn(usize, usize) -> Option<String>,
    {
        let mut out = String::new();
        let title = if self.name.is_empty() { "G" } else { &self.name };
        out.push_str(&format!("graph \"{}\" {{\n", title.replace('"', "'")));
        for v in 0..self.p {
            out.push_str(&format!("  {v} [label=\"{}\"];\n", vertex_label(v)));
        }
        for &(u, v) in &self.edges {
            match edge_label(u, v) {
                Some(l) => out.push_str(&format!("  {u} -- {v} [label=\"{l}\"];\n")),
                None => out.push_str(&format!("  {u} -- {v};\n")),
            }
        }
        out.push_str("}\n");
        out
    }
}

/// The graph families with a canonical numbering.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `P_n`, vertices numbered consecutively along the path.
    Path(usize),
    /// `C_n`, vertices numbered consecutively around the cycle.
    Cycle(usize),
    /// `K(1,n)`, center 0 and leaves `1..=n`.
    Star(usize),
    /// `K_n`.
    Complete(usize),
    /// `K(m,n)`, side `u_1..u_m` as `0..m` and side `v_1..v_n` as `m..m+n`.
    CompleteBipartite(usize, usize),
    /// `T_{m,t}`: cycle `0..m` closed by `(m-1, 0)`, then the tail
    /// `m-1, m, ..., m+t-1`.
    Tadpole { cycle: usize, tail: usize },
    /// `SP(n_1,...,n_t)`: hub 0, each leg numbered consecutively away from the hub.
    Spider(Vec<usize>),
    /// Complete multipartite graph, parts numbered consecutively.
    CompleteMultipartite(Vec<usize>),
}

impl Family {
    /// Short family key used in tables and on the command line.
    pub fn key(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Star(_) => "star",
            Family::Complete(_) => "complete",
            Family::CompleteBipartite(..) => "kmn",
            Family::Tadpole { .. } => "tadpole",
            Family::Spider(_) => "spider",
            Family::CompleteMultipartite(_) => "multipartite",
        }
    }

    fn params(&self) -> Vec<usize> {
        match self {
            Family::Path(n) | Family::Cycle(n) | Family::Star(n) | Family::Complete(n) => vec![*n],
            Family::CompleteBipartite(m, n) => vec![*m, *n],
            Family::Tadpole { cycle, tail } => vec![*cycle, *tail],
            Family::Spider(legs) => legs.clone(),
            Family::CompleteMultipartite(parts) => parts.clone(),
        }
    }

    /// Builds a family from a named-parameter map (as used by survey specs).
    ///
    /// Recognized shapes: `path{n}`, `cycle{n}`, `star{n}`, `complete{n}`,
    /// `kmn{m,n}`, `tadpole{m,t}`, `k11r{r}`.
    pub fn from_params(family: &str, params: &BTreeMap<String, usize>) -> Result<Self, GraphError> {
        let get = |name: &str| {
            params
                .get(name)
                .copied()
                .ok_or_else(|| GraphError::Parse(format!("{family}: missing parameter `{name}`")))
        };
        Ok(match family {
            "path" => Family::Path(get("n")?),
            "cycle" => Family::Cycle(get("n")?),
            "star" => Family::Star(get("n")?),
            "complete" => Family::Complete(get("n")?),
            "kmn" | "complete_bipartite" => Family::CompleteBipartite(get("m")?, get("n")?),
            "tadpole" => Family::Tadpole {
                cycle: get("m")?,
                tail: get("t")?,
            },
            "k11r" => Family::CompleteMultipartite(vec![1, 1, get("r")?]),
            other => return Err(GraphError::Parse(other.to_string())),
        })
    }

    /// Builds the graph with this family's documented numbering.
    pub fn build(&self) -> Result<Graph, GraphError> {
        let name = self.to_string();
        match *self {
            Family::Path(n) => {
                if n < 1 {
                    return Err(out_of_range("path", "n >= 1"));
                }
                Graph::new(n, (1..n).map(|i| (i - 1, i)), name)
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(out_of_range("cycle", "n >= 3"));
                }
                Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)), name)
            }
            Family::Star(n) => {
                if n < 1 {
                    return Err(out_of_range("star", "n >= 1"));
                }
                Graph::new(n + 1, (1..=n).map(|i| (0, i)), name)
            }
            Family::Complete(n) => {
                if n < 1 {
                    return Err(out_of_range("complete", "n >= 1"));
                }
                let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::new(n, edges, name)
            }
            Family::CompleteBipartite(m, n) => {
                if m < 1 || n < 1 {
                    return Err(out_of_range("complete_bipartite", "m >= 1 and n >= 1"));
                }
                let edges = (0..m).flat_map(|u| (0..n).map(move |j| (u, m + j)));
                Graph::new(m + n, edges, name)
            }
            Family::Tadpole { cycle, tail } => {
                if cycle < 3 || tail < 1 {
                    return Err(out_of_range("tadpole", "m >= 3 and tail >= 1"));
                }
                let ring = (0..cycle).map(|i| (i, (i + 1) % cycle));
                let path = (cycle - 1..cycle + tail - 1).map(|i| (i, i + 1));
                Graph::new(cycle + tail, ring.chain(path), name)
            }
            Family::Spider(ref legs) => {
                if legs.len() < 3 || legs.iter().any(|&l| l < 1) {
                    return Err(out_of_range("spider", "t >= 3 legs, each of length >= 1"));
                }
                Ok(spider(legs, name))
            }
            Family::CompleteMultipartite(ref parts) => {
                if parts.is_empty() || parts.iter().any(|&s| s < 1) {
                    return Err(out_of_range("multipartite", "at least one part, every part non-empty"));
                }
                let mut part_of = Vec::new();
                for (i, &s) in parts.iter().enumerate() {
                    part_of.extend(std::iter::repeat_n(i, s));
                }
                let p = part_of.len();
                let part_of = &part_of;
                let edges = (0..p).flat_map(|u| {
                    (u + 1..p).filter(move |&v| part_of[u] != part_of[v]).map(move |v| (u, v))
                });
                Graph::new(p, edges, name)
            }
        }
    }
}

/// Spider builder without the leg-count bound; `SP(1,2)` is a path but is
/// still useful with spider numbering.
pub(crate) fn spider(legs: &[usize], name: String) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::new(next, edges, name).expect("spider edges are well formed")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|x| x.to_string()).collect();
        write!(f, "{}:{}", self.key(), params.join(","))
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// Parses `key:a,b,...`, e.g. `cycle:8`, `kmn:2,3`, `spider:1,1,2`, `k11r:3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::Parse(s.to_string());
        let (key, rest) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = rest
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let one = || if nums.len() == 1 { Ok(nums[0]) } else { Err(bad()) };
        let two = || if nums.len() == 2 { Ok((nums[0], nums[1])) } else { Err(bad()) };
        Ok(match key.trim() {
            "path" => Family::Path(one()?),
            "cycle" => Family::Cycle(one()?),
            "star" => Family::Star(one()?),
            "complete" => Family::Complete(one()?),
            "kmn" => {
                let (m, n) = two()?;
                Family::CompleteBipartite(m, n)
            }
            "tadpole" => {
                let (cycle, tail) = two()?;
                Family::Tadpole { cycle, tail }
            }
            "spider" => Family::Spider(nums),
            "multipartite" => Family::CompleteMultipartite(nums),
            "k11r" => Family::CompleteMultipartite(vec![1, 1, one()?]),
            _ => return Err(bad()),
        })
    }
}

/// Builds a graph from a family descriptor.
pub fn build_family(family: &Family) -> Result<Graph, GraphError> {
    family.build()
}

/// `G(1,m,n-k)`: `K(m,n)` plus the edges `v_1 v_j` for `k+1 <= j <= n`.
///
/// Numbering follows [`Family::CompleteBipartite`]: `u_i` is `i-1`, `v_j` is
/// `m+j-1`.
pub fn build_g1mnk(m: usize, n: usize, k: usize) -> Result<Graph, GraphError> {
    if m < 1 || n < 2 || k < 1 || k >= n {
        return Err(out_of_range("g1mnk", "m >= 1, n >= 2 and 1 <= k <= n-1"));
    }
    let base = Family::CompleteBipartite(m, n).build()?;
    let v = |j: usize| m + j - 1;
    let extra = (k + 1..=n).map(|j| (v(1), v(j)));
    Ok(base.with_edges(extra)?.with_name(format!("g1mnk:{m},{n},{k}")))
}

/// Disjoint union `G + H`; the vertices of `h` are shifted by `g.p()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.p();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    let name = format!("{}+{}", g.name(), h.name());
    Graph::new(g.p() + h.p(), edges, name).expect("union of valid graphs is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn handshake(g: &Graph) -> bool {
        (0..g.p()).map(|v| g.degree(v)).sum::<usize>() == 2 * g.q()
    }

    #[test]
    fn path_of_two() {
        let g = Family::Path(2).build().unwrap();
        assert_eq!(g.p(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn tadpole_numbering() {
        let g = Family::Tadpole { cycle: 4, tail: 2 }.build().unwrap();
        assert_eq!((g.p(), g.q()), (6, 6));
        for e in [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (4, 5)] {
            assert!(g.has_edge(e.0, e.1), "{e:?}");
        }
    }

    #[test]
    fn spider_sp112() {
        let g = Family::Spider(vec![1, 1, 2]).build().unwrap();
        assert_eq!((g.p(), g.q(), g.degree(0)), (5, 4, 3));
    }

    #[test]
    fn family_edge_counts() {
        let cases = [
            (Family::Path(7), 6),
            (Family::Cycle(7), 7),
            (Family::Star(7), 7),
            (Family::Complete(7), 21),
            (Family::CompleteBipartite(3, 4), 12),
            (Family::Tadpole { cycle: 5, tail: 3 }, 8),
            (Family::Spider(vec![2, 3, 1, 4]), 10),
            (Family::CompleteMultipartite(vec![1, 1, 4]), 9),
        ];
        for (family, q) in cases {
            let g = family.build().unwrap();
            assert_eq!(g.q(), q, "{family}");
            assert!(handshake(&g));
        }
    }

    #[test]
    fn bounds_are_reported() {
        let err = Family::Cycle(2).build().unwrap_err();
        assert!(err.to_string().contains("n >= 3"), "{err}");
        assert!(Family::Spider(vec![1, 2]).build().is_err());
        assert!(Family::Tadpole { cycle: 4, tail: 0 }.build().is_err());
        assert!(build_g1mnk(2, 3, 3).is_err());
    }

    #[test]
    fn g1mnk_sizes() {
        let g = build_g1mnk(2, 3, 2).unwrap();
        assert_eq!((g.p(), g.q()), (5, 7));
        let g = build_g1mnk(2, 3, 1).unwrap();
        assert_eq!(g.q(), 8);
        let g = build_g1mnk(1, 2, 1).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn g1mnk_top_case_is_complete_tripartite() {
        // parts {v_1}, {u_1..u_m}, {v_2..v_n} mapped onto multipartite numbering
        for (m, n) in [(1, 2), (2, 3), (3, 5), (4, 4)] {
            // the third part has n - k vertices, so k = 1 gives K(1, m, n-1)
            let g = build_g1mnk(m, n, 1).unwrap();
            let k = Family::CompleteMultipartite(vec![1, m, n - 1]).build().unwrap();
            let map = |x: usize| if x < m { 1 + x } else if x == m { 0 } else { x };
            let mapped = Graph::new(g.p(), g.edges().iter().map(|&(a, b)| (map(a), map(b))), "").unwrap();
            assert_eq!(mapped.edges(), k.edges(), "m={m} n={n}");
        }
    }

    #[test]
    fn unions() {
        let p2 = Family::Path(2).build().unwrap();
        let u = disjoint_union(&p2, &p2);
        assert_eq!((u.p(), u.q()), (4, 2));
        let u = disjoint_union(&Family::Star(3).build().unwrap(), &Family::Path(3).build().unwrap());
        assert_eq!((u.p(), u.q()), (7, 5));
        assert!(u.has_edge(4, 5) && u.has_edge(5, 6));
    }

    #[test]
    fn json_is_canonical() {
        let g = Graph::new(3, [(2, 1), (1, 0)], "x").unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"p":3,"edges":[[0,1],[1,2]],"name":"x"}"#);
        let back: Graph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"p":2,"edges":[[0,0]]}"#).is_err());
        assert!(serde_json::from_str::<Graph>(r#"{"p":2,"edges":[[0,1],[1,0]]}"#).is_err());
    }

    #[test]
    fn parse_family_descriptors() {
        assert_eq!("cycle:8".parse::<Family>().unwrap(), Family::Cycle(8));
        assert_eq!("kmn:2,3".parse::<Family>().unwrap(), Family::CompleteBipartite(2, 3));
        assert_eq!(
            "k11r:3".parse::<Family>().unwrap(),
            Family::CompleteMultipartite(vec![1, 1, 3])
        );
        assert!("cycle".parse::<Family>().is_err());
        assert!("path:1,2".parse::<Family>().is_err());
        let f = Family::Tadpole { cycle: 4, tail: 2 };
        assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
    }

    #[test]
    fn vertex_and_edge_removal() {
        let c = Family::Cycle(4).build().unwrap();
        let p = c.without_edge(3, 0).unwrap();
        assert_eq!(p.edges(), Family::Path(4).build().unwrap().edges());
        let s = Family::Star(3).build().unwrap().without_vertex(0).unwrap();
        assert_eq!((s.p(), s.q()), (3, 0));
    }

    #[test]
    fn dot_output() {
        let dot = Family::Path(2).build().unwrap().to_dot();
        assert!(dot.contains("0 -- 1;"));
    }
}
