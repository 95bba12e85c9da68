//! Single-threaded depth-first branch-and-reduce.

use std::time::Instant;

use crate::bounds::{greedy_approx, SolveMode};
use crate::graph::BaseGraph;
use crate::node::{LocalStack, SearchNode};
use crate::phase::{timed, Phase};
use crate::search::{expand, Limits, Solution, Status, Visit, WorkerStats};

/// Result of a sequential run.
#[derive(Clone, Debug)]
pub struct SeqRun {
    pub solution: Solution,
    pub status: Status,
    pub greedy_size: usize,
    pub stats: WorkerStats,
}

pub fn solve_mvc_seq(g: &BaseGraph) -> Solution {
    run_sequential(g, SolveMode::Mvc, Limits::default(), false).solution
}

/// Panics if `k == 0`.
pub fn solve_pvc_seq(g: &BaseGraph, k: usize) -> Solution {
    let mode = SolveMode::pvc(k).expect("k must be at least 1");
    run_sequential(g, mode, Limits::default(), false).solution
}

/// The remove-`N(v_max)` child is pushed and the remove-`v_max` child is
/// processed next, so the traversal order matches the per-worker loop of
/// the parallel strategies.
pub fn run_sequential(g: &BaseGraph, mode: SolveMode, limits: Limits, fingerprint: bool) -> SeqRun {
    let started = Instant::now();
    let greedy = greedy_approx(g);
    let mut stats = WorkerStats::new(fingerprint);
    let mut best = greedy.size;
    let mut solution = match mode {
        SolveMode::Mvc => Solution::from_cover(greedy.cover),
        SolveMode::Pvc { .. } => Solution::infeasible(),
    };
    let mut stack = LocalStack::new(mode.depth_bound(greedy.size));
    let mut status = Status::Complete;
    let mut current = Some(SearchNode::root(g));

    loop {
        let mut node = match current.take() {
            Some(node) => node,
            None => match timed(&mut stats.phases, Phase::Stack, || stack.pop()) {
                Some(node) => node,
                None => break,
            },
        };
        stats.visit(&node);
        if let Some(s) = limits.exceeded(stats.nodes, started) {
            status = s;
            break;
        }
        match expand(&mut node, g, mode, &best, &mut stats.phases) {
            Visit::Pruned => {}
            Visit::Covered => match mode {
                SolveMode::Mvc => {
                    if node.cover_count() < best {
                        best = node.cover_count();
                        solution = Solution::from_cover(node.cover());
                    }
                }
                SolveMode::Pvc { .. } => {
                    solution = Solution::from_cover(node.cover());
                    break;
                }
            },
            Visit::Branched(child) => {
                timed(&mut stats.phases, Phase::Stack, || stack.push(child));
                current = Some(node);
            }
        }
    }
    stats.max_stack_depth = stack.high_water();
    stats.elapsed = started.elapsed();
    SeqRun { solution, status, greedy_size: greedy.size, stats }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn mvc_examples() {
        assert_eq!(solve_mvc_seq(&path(3)).size, 1);
        assert_eq!(solve_mvc_seq(&cycle(5)).size, 3);
        let p = petersen();
        let s = solve_mvc_seq(&p);
        assert_eq!(s.size, 6);
        assert!(p.is_vertex_cover(&s.cover));
        assert_eq!(solve_mvc_seq(&BaseGraph::empty(3)).size, 0);
        assert_eq!(solve_mvc_seq(&complete(6)).size, 5);
    }

    #[test]
    fn pvc_examples() {
        let p = petersen();
        assert!(!solve_pvc_seq(&p, 5).feasible);
        let s = solve_pvc_seq(&p, 6);
        assert!(s.feasible && s.size <= 6 && p.is_vertex_cover(&s.cover));
        let s = solve_pvc_seq(&BaseGraph::empty(3), 1);
        assert!(s.feasible);
        assert!(s.cover.is_empty());
    }

    #[test]
    fn deterministic() {
        let g = petersen();
        let a = run_sequential(&g, SolveMode::Mvc, Limits::default(), true);
        let b = run_sequential(&g, SolveMode::Mvc, Limits::default(), true);
        assert_eq!(a.solution, b.solution);
        assert_eq!(a.stats.nodes, b.stats.nodes);
        assert_eq!(a.stats.fingerprint, b.stats.fingerprint);
    }

    #[test]
    fn stack_stays_within_bound() {
        let g = petersen();
        let r = run_sequential(&g, SolveMode::Mvc, Limits::default(), false);
        assert!(r.stats.max_stack_depth <= r.greedy_size);
    }

    #[test]
    fn node_budget_stops_early() {
        let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(3);
        let g = gnp(60, 0.3, &mut rng);
        let limits = Limits { node_budget: Some(5), timeout: None };
        let r = run_sequential(&g, SolveMode::Mvc, limits, false);
        assert_eq!(r.status, Status::Budget);
        assert!(g.is_vertex_cover(&r.solution.cover));
    }
}
