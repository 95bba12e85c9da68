//! Problem modes, the greedy upper bound and the stopping conditions.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::graph::{BaseGraph, Vertex};
use crate::node::SearchNode;
use crate::reduce::reduce_exact;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    /// Minimum vertex cover.
    Mvc,
    /// Decide whether a cover of size at most `k` exists (`k >= 1`).
    Pvc { k: usize },
}

impl SolveMode {
    pub fn pvc(k: usize) -> Option<Self> {
        (k >= 1).then_some(SolveMode::Pvc { k })
    }

    pub fn k(self) -> Option<usize> {
        match self {
            SolveMode::Mvc => None,
            SolveMode::Pvc { k } => Some(k),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SolveMode::Mvc => "mvc",
            SolveMode::Pvc { .. } => "pvc",
        }
    }

    /// Local stack provisioning: no path ever branches more often than this.
    pub fn depth_bound(self, greedy_size: usize) -> usize {
        match self {
            SolveMode::Mvc => greedy_size,
            SolveMode::Pvc { k } => k,
        }
    }
}

/// Where the current best cover size is read from. Plain values for the
/// sequential solver, an atomic for the parallel ones. Ignored under PVC.
pub trait BestSource {
    fn current_best(&self) -> usize;
}

impl BestSource for usize {
    #[inline]
    fn current_best(&self) -> usize {
        *self
    }
}

impl BestSource for AtomicUsize {
    #[inline]
    fn current_best(&self) -> usize {
        self.load(Ordering::Relaxed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyCover {
    pub size: usize,
    pub cover: Vec<Vertex>,
}

/// Upper bound: alternate the degree-one and degree-two-triangle rules with
/// taking a max-degree vertex until no edge is left. The high-degree rule is
/// not applied since no incumbent exists yet.
pub fn greedy_approx(g: &BaseGraph) -> GreedyCover {
    let mut node = SearchNode::root(g);
    loop {
        reduce_exact(&mut node, g);
        if node.alive_edge_count() == 0 {
            break;
        }
        let (v, _) = node.max_degree_vertex().expect("edges remain, so some vertex is alive");
        node.remove_vertex_into_cover(g, v);
    }
    GreedyCover { size: node.cover_count(), cover: node.cover() }
}

#[inline]
fn square(x: usize) -> u128 {
    (x as u128) * (x as u128)
}

/// Stopping condition on raw counts: `cover` = |S|, `edges` = |E(G)|.
pub fn prune_condition(mode: SolveMode, cover: usize, edges: usize, best: usize) -> bool {
    match mode {
        SolveMode::Mvc => cover >= best || edges as u128 > square(best - cover - 1),
        SolveMode::Pvc { k } => cover > k || edges as u128 > square(k - cover),
    }
}

/// True iff no improving (MVC) or feasible (PVC) cover can lie below `node`.
pub fn should_prune(node: &SearchNode, mode: SolveMode, best: usize) -> bool {
    prune_condition(mode, node.cover_count(), node.alive_edge_count(), best)
}

#[inline]
pub fn is_cover_found(node: &SearchNode) -> bool {
    node.alive_edge_count() == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_approx(&BaseGraph::empty(4)).size, 0);
        let s = greedy_approx(&star(5));
        assert_eq!((s.size, s.cover), (1, vec![0]));
        let c = greedy_approx(&cycle(5));
        assert_eq!((c.size, c.cover.clone()), (3, vec![0, 2, 4]));
        assert!(cycle(5).is_vertex_cover(&c.cover));
    }

    #[test]
    fn greedy_exact_on_paths_and_trees() {
        assert_eq!(greedy_approx(&path(5)).size, 2);
        assert_eq!(greedy_approx(&path(6)).size, 3);
        assert_eq!(greedy_approx(&complete_binary_tree(3)).size, 2);
        assert_eq!(greedy_approx(&complete_binary_tree(4)).size, 5);
    }

    #[test]
    fn prune_examples() {
        assert!(prune_condition(SolveMode::Mvc, 3, 0, 3));
        assert!(prune_condition(SolveMode::Mvc, 2, 5, 5));
        assert!(!prune_condition(SolveMode::Mvc, 2, 4, 5));
        assert!(!prune_condition(SolveMode::Pvc { k: 2 }, 1, 1, 0));
        assert!(prune_condition(SolveMode::Pvc { k: 2 }, 1, 2, 0));
        assert!(prune_condition(SolveMode::Pvc { k: 2 }, 3, 0, 0));
        assert!(!prune_condition(SolveMode::Pvc { k: 2 }, 2, 0, 0));
    }

    #[test]
    fn cover_found_examples() {
        let e = BaseGraph::empty(3);
        assert!(is_cover_found(&SearchNode::root(&e)));
        let p3 = path(3);
        let mut n = SearchNode::root(&p3);
        assert!(!is_cover_found(&n));
        n.remove_vertex_into_cover(&p3, 1);
        assert!(is_cover_found(&n));
    }

    #[test]
    fn mode_helpers() {
        assert_eq!(SolveMode::pvc(0), None);
        assert_eq!(SolveMode::pvc(3), Some(SolveMode::Pvc { k: 3 }));
        assert_eq!(SolveMode::Mvc.depth_bound(7), 7);
        assert_eq!(SolveMode::Pvc { k: 9 }.depth_bound(7), 9);
    }

    proptest::proptest! {
        #[test]
        fn prune_monotone_in_cover(cover in 0usize..40, edges in 0usize..400, best in 0usize..40, k in 1usize..40) {
            for mode in [SolveMode::Mvc, SolveMode::Pvc { k }] {
                if prune_condition(mode, cover, edges, best) {
                    proptest::prop_assert!(prune_condition(mode, cover + 1, edges, best));
                }
            }
        }
    }
}
