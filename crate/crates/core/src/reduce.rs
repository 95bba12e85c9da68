//! The three reduction rules and their fixpoint loop.
//!
//! Every rule scans vertices in ascending id and evaluates each vertex
//! against the degrees at the moment it is visited. When two candidates
//! conflict (mutual degree-one neighbors, several degree-two vertices of one
//! triangle) the smaller id acts first and the other no longer qualifies.

use crate::bounds::{BestSource, SolveMode};
use crate::graph::BaseGraph;
use crate::node::{SearchNode, REMOVED};
use crate::phase::{timed, Phase, PhaseSink};

/// Degree threshold of the high-degree rule: a vertex whose degree exceeds
/// `limit` must be in every improving (MVC) or feasible (PVC) cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionBound {
    pub limit: usize,
}

impl ReductionBound {
    /// `best - |S| - 1` for MVC, `k - |S|` for PVC, clamped at 0.
    pub fn new(mode: SolveMode, best: usize, cover_count: usize) -> Self {
        let limit = match mode {
            SolveMode::Mvc => best.saturating_sub(cover_count + 1),
            SolveMode::Pvc { k } => k.saturating_sub(cover_count),
        };
        ReductionBound { limit }
    }
}

/// For each degree-one vertex, moves its neighbor into the cover.
pub fn apply_degree_one(node: &mut SearchNode, g: &BaseGraph) -> bool {
    let mut changed = false;
    let mut from = 0;
    while let Some(v) = node.find_from(from, |d| d == 1) {
        from = v as usize + 1;
        let u = node.alive_neighbors(g, v).next().expect("degree-one vertex has an alive neighbor");
        node.remove_vertex_into_cover(g, u);
        changed = true;
    }
    changed
}

/// For each degree-two vertex whose two neighbors are adjacent, moves both
/// neighbors into the cover.
pub fn apply_degree_two_triangle(node: &mut SearchNode, g: &BaseGraph) -> bool {
    let mut changed = false;
    let mut from = 0;
    while let Some(v) = node.find_from(from, |d| d == 2) {
        from = v as usize + 1;
        let (u, w) = {
            let mut it = node.alive_neighbors(g, v);
            match (it.next(), it.next()) {
                (Some(u), Some(w)) => (u, w),
                _ => unreachable!("degree-two vertex has two alive neighbors"),
            }
        };
        if g.has_edge(u, w) {
            node.remove_vertex_into_cover(g, u);
            node.remove_vertex_into_cover(g, w);
            changed = true;
        }
    }
    changed
}

/// Moves every vertex with degree above the bound into the cover. The bound
/// is recomputed after each removal because |S| grows.
pub fn apply_high_degree(node: &mut SearchNode, g: &BaseGraph, mode: SolveMode, best: usize) -> bool {
    let mut changed = false;
    let mut from = 0;
    loop {
        let limit = ReductionBound::new(mode, best, node.cover_count()).limit;
        let Some(v) = node.find_from(from, |d| d != REMOVED && d as usize > limit) else { break };
        from = v as usize + 1;
        node.remove_vertex_into_cover(g, v);
        changed = true;
    }
    changed
}

/// Applies degree-one, degree-two-triangle and high-degree, each until it
/// stops firing, and repeats the round until nothing changes.
pub fn reduce_fixpoint<B: BestSource + ?Sized>(node: &mut SearchNode, g: &BaseGraph, mode: SolveMode, best: &B) {
    reduce_fixpoint_with(node, g, mode, best, &mut ());
}

/// [`reduce_fixpoint`] with per-rule timing.
pub fn reduce_fixpoint_with<B, S>(node: &mut SearchNode, g: &BaseGraph, mode: SolveMode, best: &B, sink: &mut S)
where
    B: BestSource + ?Sized,
    S: PhaseSink + ?Sized,
{
    loop {
        let mut changed = false;
        while timed(sink, Phase::DegreeOne, || apply_degree_one(node, g)) {
            changed = true;
        }
        while timed(sink, Phase::DegreeTwoTriangle, || apply_degree_two_triangle(node, g)) {
            changed = true;
        }
        let snapshot = best.current_best();
        while timed(sink, Phase::HighDegree, || apply_high_degree(node, g, mode, snapshot)) {
            changed = true;
        }
        if !changed {
            break;
        }
    }
}

/// Fixpoint of the two bound-free rules (degree-one and degree-two-triangle).
/// These never change the minimum cover size of `G` plus `|S|`.
pub fn reduce_exact(node: &mut SearchNode, g: &BaseGraph) {
    loop {
        let mut changed = false;
        while apply_degree_one(node, g) {
            changed = true;
        }
        while apply_degree_two_triangle(node, g) {
            changed = true;
        }
        if !changed {
            break;
        }
    }
}
