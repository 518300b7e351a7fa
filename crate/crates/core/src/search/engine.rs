//! Vertex-order backtracking with induced edge labels.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::graph::Graph;
use crate::labeling::Label;

use super::LimitKind;

const TIME_CHECK_MASK: u64 = 1023;

/// Max-degree vertex first, then BFS that enqueues unvisited neighbours by
/// descending degree (ties by id); restarts on every further component.
pub(crate) fn vertex_order(g: &Graph) -> Vec<usize> {
    let p = g.p();
    let by_degree = |vs: &mut Vec<usize>| vs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut seeds: Vec<usize> = (0..p).collect();
    by_degree(&mut seeds);
    let mut seen = vec![false; p];
    let mut order = Vec::with_capacity(p);
    for &s in &seeds {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let mut next: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| !seen[w]).collect();
            by_degree(&mut next);
            for w in next {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

pub(crate) struct Problem {
    order: Vec<usize>,
    /// For each position, the positions of earlier neighbours.
    back: Vec<Vec<usize>>,
    k: Label,
    max: Label,
    /// Values at or above this are among the `k` largest.
    top: Label,
    prune_top: bool,
}

impl Problem {
    pub(crate) fn new(g: &Graph, k: Label, prune_top: bool) -> Self {
        let order = vertex_order(g);
        let mut pos = vec![0; g.p()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut b: Vec<usize> = g.neighbors(v).iter().map(|&w| pos[w]).filter(|&j| j < i).collect();
                b.sort_unstable();
                b
            })
            .collect();
        let total = (g.p() + g.q()) as Label;
        Problem {
            order,
            back,
            k,
            max: k + total - 1,
            top: total,
            prune_top,
        }
    }

    fn values(&self) -> impl Iterator<Item = Label> {
        (self.k..=self.max).rev()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum BranchEnd {
    Complete,
    Stopped,
    Limit(LimitKind),
    Cancelled,
}

/// Result of exploring one first-level branch.
pub(crate) struct Branch {
    /// Each solution with the node count at which it was recorded.
    pub solutions: Vec<(u64, Vec<Label>)>,
    pub nodes: u64,
    pub end: BranchEnd,
}

pub(crate) struct Limits {
    pub node_limit: Option<u64>,
    pub deadline: Option<Instant>,
    pub max_solutions: Option<usize>,
}

struct Dfs<'a> {
    pb: &'a Problem,
    limits: &'a Limits,
    index: usize,
    cancel: Option<&'a AtomicUsize>,
    /// Labels by position.
    labels: Vec<Label>,
    used: Vec<bool>,
    nodes: u64,
    solutions: Vec<(u64, Vec<Label>)>,
}

impl Dfs<'_> {
    /// Tries `value` at position `i`; on success the value and its induced
    /// edge labels are marked and the node is counted.
    fn place(&mut self, i: usize, value: Label) -> Result<bool, BranchEnd> {
        let pb = self.pb;
        let slot = |x: Label| (x - pb.k) as usize;
        if self.used[slot(value)] {
            return Ok(false);
        }
        if pb.prune_top && value >= pb.top && pb.back[i].iter().any(|&j| self.labels[j] >= pb.top) {
            return Ok(false);
        }
        self.used[slot(value)] = true;
        let mut marked = 0;
        let mut ok = true;
        for &j in &pb.back[i] {
            let d = value.abs_diff(self.labels[j]);
            if d < pb.k || self.used[slot(d)] {
                ok = false;
                break;
            }
            self.used[slot(d)] = true;
            marked += 1;
        }
        if ok && self.limits.node_limit == Some(self.nodes) {
            self.unmark(i, value, marked);
            return Err(BranchEnd::Limit(LimitKind::NodeLimit));
        }
        if !ok {
            self.unmark(i, value, marked);
            return Ok(false);
        }
        self.nodes += 1;
        self.labels[i] = value;
        if let Some(c) = self.cancel {
            if c.load(Ordering::Relaxed) < self.index {
                self.unmark(i, value, marked);
                return Err(BranchEnd::Cancelled);
            }
        }
        if self.nodes & TIME_CHECK_MASK == 0 {
            if let Some(d) = self.limits.deadline {
                if Instant::now() >= d {
                    self.unmark(i, value, marked);
                    return Err(BranchEnd::Limit(LimitKind::TimeLimit));
                }
            }
        }
        Ok(true)
    }

    fn unmark(&mut self, i: usize, value: Label, edges: usize) {
        let k = self.pb.k;
        self.used[(value - k) as usize] = false;
        for &j in &self.pb.back[i][..edges] {
            self.used[(value.abs_diff(self.labels[j]) - k) as usize] = false;
        }
    }

    fn descend(&mut self, i: usize) -> Result<(), BranchEnd> {
        if i == self.pb.order.len() {
            let mut by_vertex = vec![0; i];
            for (pos, &v) in self.pb.order.iter().enumerate() {
                by_vertex[v] = self.labels[pos];
            }
            self.solutions.push((self.nodes, by_vertex));
            if self.limits.max_solutions == Some(self.solutions.len()) {
                return Err(BranchEnd::Stopped);
            }
            return Ok(());
        }
        for value in self.pb.values() {
            if self.place(i, value)? {
                let res = self.descend(i + 1);
                let marked = self.pb.back[i].len();
                self.unmark(i, value, marked);
                res?;
            }
        }
        Ok(())
    }
}

/// Explores the branch where the first vertex in order takes `value`.
pub(crate) fn run_branch(pb: &Problem, limits: &Limits, index: usize, value: Label, cancel: Option<&AtomicUsize>) -> Branch {
    let mut dfs = Dfs {
        pb,
        limits,
        index,
        cancel,
        labels: vec![0; pb.order.len()],
        used: vec![false; (pb.max - pb.k + 1) as usize],
        nodes: 0,
        solutions: Vec::new(),
    };
    let end = match dfs.place(0, value) {
        Ok(true) => match dfs.descend(1) {
            Ok(()) => BranchEnd::Complete,
            Err(e) => e,
        },
        Ok(false) => BranchEnd::Complete,
        Err(e) => e,
    };
    Branch {
        solutions: dfs.solutions,
        nodes: dfs.nodes,
        end,
    }
}

/// Outcome of the merged search, equal to what a single sequential DFS over
/// all branches in order would report.
pub(crate) struct Merged {
    pub solutions: Vec<Vec<Label>>,
    pub nodes: u64,
    /// `None` when exhausted, otherwise why the search stopped early.
    pub stop: Option<Stop>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Stop {
    Solutions,
    Limit(LimitKind),
}

/// Folds branch results in branch order, replaying the sequential budget.
struct Merger<'a> {
    limits: &'a Limits,
    out: Merged,
}

impl Merger<'_> {
    /// Returns false once the merged run has stopped.
    fn push(&mut self, b: Branch) -> bool {
        assert!(b.end != BranchEnd::Cancelled, "merge reached a cancelled branch");
        let base = self.out.nodes;
        let budget = self.limits.node_limit.unwrap_or(u64::MAX);
        for (stamp, labels) in b.solutions {
            if base + stamp > budget {
                break;
            }
            self.out.solutions.push(labels);
            if self.limits.max_solutions == Some(self.out.solutions.len()) {
                self.out.nodes = base + stamp;
                self.out.stop = Some(Stop::Solutions);
                return false;
            }
        }
        match b.end {
            BranchEnd::Limit(LimitKind::NodeLimit) => {
                self.out.nodes = budget;
                self.out.stop = Some(Stop::Limit(LimitKind::NodeLimit));
                false
            }
            _ if base + b.nodes > budget => {
                self.out.nodes = budget;
                self.out.stop = Some(Stop::Limit(LimitKind::NodeLimit));
                false
            }
            BranchEnd::Limit(LimitKind::TimeLimit) => {
                self.out.nodes = base + b.nodes;
                self.out.stop = Some(Stop::Limit(LimitKind::TimeLimit));
                false
            }
            _ => {
                self.out.nodes = base + b.nodes;
                true
            }
        }
    }
}

fn ends_merge(b: &Branch) -> bool {
    matches!(b.end, BranchEnd::Stopped | BranchEnd::Limit(_))
}

pub(crate) fn run(pb: &Problem, limits: &Limits, workers: usize) -> Merged {
    let mut merger = Merger {
        limits,
        out: Merged {
            solutions: Vec::new(),
            nodes: 0,
            stop: None,
        },
    };
    if pb.order.is_empty() {
        return merger.out;
    }
    let values: Vec<Label> = pb.values().collect();
    if workers <= 1 {
        for (index, &value) in values.iter().enumerate() {
            if !merger.push(run_branch(pb, limits, index, value, None)) {
                break;
            }
        }
        return merger.out;
    }

    let cancel = AtomicUsize::new(usize::MAX);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let branches: Vec<Branch> = pool.install(|| {
        values
            .par_iter()
            .enumerate()
            .map(|(index, &value)| {
                if cancel.load(Ordering::Relaxed) < index {
                    return Branch {
                        solutions: Vec::new(),
                        nodes: 0,
                        end: BranchEnd::Cancelled,
                    };
                }
                let b = run_branch(pb, limits, index, value, Some(&cancel));
                if ends_merge(&b) {
                    cancel.fetch_min(index, Ordering::Relaxed);
                }
                b
            })
            .collect()
    });
    for b in branches {
        if !merger.push(b) {
            break;
        }
    }
    merger.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn order_starts_at_max_degree() {
        let g = Family::Star(4).build().unwrap();
        assert_eq!(vertex_order(&g), [0, 1, 2, 3, 4]);
        let g = Family::Path(5).build().unwrap();
        // neighbours of 1 are queued by degree: 2 before 0
        assert_eq!(vertex_order(&g), [1, 2, 0, 3, 4]);
        let g = Family::Tadpole { cycle: 4, tail: 2 }.build().unwrap();
        assert_eq!(vertex_order(&g)[0], 3);
    }

    #[test]
    fn order_covers_components() {
        let g = Graph::new(5, [(3, 4)], "").unwrap();
        assert_eq!(vertex_order(&g), [3, 4, 0, 1, 2]);
    }
}
