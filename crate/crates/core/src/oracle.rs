//! Exhaustive minimum vertex cover for small graphs. Shares no code with
//! the branch-and-reduce solvers, so it can serve as their test oracle.

use thiserror::Error;

use crate::graph::{BaseGraph, Vertex};

pub const MAX_ORACLE_VERTICES: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("brute force is limited to {MAX_ORACLE_VERTICES} vertices, graph has {0}")]
pub struct GraphTooLarge(pub usize);

/// A minimum cover found by enumerating every subset, smallest first by
/// cardinality, lowest bitmask first within a cardinality.
pub fn brute_force_min_cover(g: &BaseGraph) -> Result<Vec<Vertex>, GraphTooLarge> {
    let n = g.num_vertices();
    if n > MAX_ORACLE_VERTICES {
        return Err(GraphTooLarge(n));
    }
    let adj: Vec<u32> = g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u))).collect();
    // S is a cover iff every vertex outside S has all its neighbors in S
    let covers = |s: u32| (0..n).all(|v| s & (1 << v) != 0 || adj[v] & !s == 0);
    let mut best: Option<u32> = None;
    for s in 0u32..(1u32 << n) {
        if best.is_some_and(|b| s.count_ones() >= b.count_ones()) {
            continue;
        }
        if covers(s) {
            best = Some(s);
        }
    }
    let best = best.unwrap_or(0);
    Ok((0..n as Vertex).filter(|&v| best & (1 << v) != 0).collect())
}

pub fn brute_force_mvc(g: &BaseGraph) -> Result<usize, GraphTooLarge> {
    brute_force_min_cover(g).map(|c| c.len())
}
