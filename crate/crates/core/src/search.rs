//! Pieces shared by every traversal strategy: the per-node step, run limits,
//! and result types.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bounds::{should_prune, BestSource, SolveMode};
use crate::graph::{BaseGraph, Vertex};
use crate::node::SearchNode;
use crate::phase::{timed, Phase, PhaseSink, PhaseTimes};
use crate::reduce::reduce_fixpoint_with;

/// Best answer a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub size: usize,
    /// Dense vertex ids, ascending.
    pub cover: Vec<Vertex>,
    /// MVC: always true once a cover is known. PVC: a cover of size at most
    /// `k` was found.
    pub feasible: bool,
}

impl Solution {
    pub fn from_cover(cover: Vec<Vertex>) -> Self {
        Solution { size: cover.len(), cover, feasible: true }
    }

    pub fn infeasible() -> Self {
        Solution { size: 0, cover: Vec::new(), feasible: false }
    }

    /// The cover in the ids used by the input file.
    pub fn original_cover(&self, g: &BaseGraph) -> Vec<u64> {
        self.cover.iter().map(|&v| g.original_id(v)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Complete,
    Timeout,
    Budget,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Complete => "complete",
            Status::Timeout => "timeout",
            Status::Budget => "budget",
        }
    }

    pub fn is_complete(self) -> bool {
        self == Status::Complete
    }

    pub(crate) fn to_u8(self) -> u8 {
        match self {
            Status::Complete => 0,
            Status::Timeout => 1,
            Status::Budget => 2,
        }
    }

    pub(crate) fn from_u8(x: u8) -> Self {
        match x {
            1 => Status::Timeout,
            2 => Status::Budget,
            _ => Status::Complete,
        }
    }
}

/// Optional caps on a run. Exceeding one ends the run with an incomplete
/// status and whatever was found so far.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub node_budget: Option<u64>,
    pub timeout: Option<Duration>,
}

impl Limits {
    /// Checked after a node has been counted. `visits` is the run-wide total.
    pub(crate) fn exceeded(&self, visits: u64, started: Instant) -> Option<Status> {
        if self.node_budget.is_some_and(|b| visits > b) {
            return Some(Status::Budget);
        }
        // clock reads are amortized over 64 nodes
        if visits.is_multiple_of(64) && self.timeout.is_some_and(|t| started.elapsed() > t) {
            return Some(Status::Timeout);
        }
        None
    }
}

/// What a worker measured.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct WorkerStats {
    /// Tree nodes visited (reduced and tested).
    pub nodes: u64,
    pub phases: PhaseTimes,
    /// Wall time from worker start to exit.
    pub elapsed: Duration,
    pub max_stack_depth: usize,
    /// Order-independent fingerprint of the visited node multiset, when
    /// requested.
    pub fingerprint: Option<u64>,
}

impl WorkerStats {
    pub(crate) fn new(fingerprint: bool) -> Self {
        WorkerStats { fingerprint: fingerprint.then_some(0), ..Default::default() }
    }

    pub(crate) fn visit(&mut self, node: &SearchNode) {
        self.nodes += 1;
        if let Some(fp) = self.fingerprint.as_mut() {
            let mut h = DefaultHasher::new();
            node.degrees().hash(&mut h);
            *fp = fp.wrapping_add(h.finish());
        }
    }
}

/// Outcome of visiting one tree node.
pub(crate) enum Visit {
    /// The stopping condition fired.
    Pruned,
    /// No edges are left; `node` is a cover within the bound.
    Covered,
    /// `node` became the remove-`v_max` child; the payload is the
    /// remove-`N(v_max)` sibling.
    Branched(SearchNode),
}

/// Reduce, test the stopping condition, then either report a cover or branch
/// on the smallest-id maximum-degree vertex.
pub(crate) fn expand<B, S>(node: &mut SearchNode, g: &BaseGraph, mode: SolveMode, best: &B, sink: &mut S) -> Visit
where
    B: BestSource + ?Sized,
    S: PhaseSink + ?Sized,
{
    reduce_fixpoint_with(node, g, mode, best, sink);
    if timed(sink, Phase::PruneCheck, || should_prune(node, mode, best.current_best())) {
        return Visit::Pruned;
    }
    match timed(sink, Phase::MaxDegree, || node.max_degree_vertex()) {
        None | Some((_, 0)) => {
            debug_assert_eq!(node.alive_edge_count(), 0);
            Visit::Covered
        }
        Some((v, _)) => {
            let child = timed(sink, Phase::RemoveNeighbors, || {
                let mut child = node.clone();
                child.remove_neighbors_into_cover(g, v);
                child
            });
            timed(sink, Phase::RemoveVertex, || node.remove_vertex_into_cover(g, v));
            Visit::Branched(child)
        }
    }
}
