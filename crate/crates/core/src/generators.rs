//! Small named graph families and Erdős–Rényi random graphs, used by the
//! test suites and the benchmark harness.

use rand::Rng;

use crate::graph::{BaseGraph, Vertex};

pub fn path(n: usize) -> BaseGraph {
    BaseGraph::from_edges(n, (1..n as Vertex).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> BaseGraph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    BaseGraph::from_edges(n, (0..n as Vertex).map(|v| (v, (v + 1) % n as Vertex)))
}

/// K_{1,leaves}; vertex 0 is the center.
pub fn star(leaves: usize) -> BaseGraph {
    BaseGraph::from_edges(leaves + 1, (1..=leaves as Vertex).map(|v| (0, v)))
}

pub fn complete(n: usize) -> BaseGraph {
    let n32 = n as Vertex;
    BaseGraph::from_edges(n, (0..n32).flat_map(|u| ((u + 1)..n32).map(move |v| (u, v))))
}

pub fn petersen() -> BaseGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    BaseGraph::from_edges(10, edges)
}

/// Complete binary tree with `levels` levels in heap order (root 0).
pub fn complete_binary_tree(levels: u32) -> BaseGraph {
    let n = (1usize << levels) - 1;
    BaseGraph::from_edges(n, (1..n as Vertex).map(|v| ((v - 1) / 2, v)))
}

/// G(n, p): each of the n(n-1)/2 pairs is an edge independently with
/// probability `p`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> BaseGraph {
    let n32 = n as Vertex;
    let mut edges = Vec::new();
    for u in 0..n32 {
        for v in (u + 1)..n32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    BaseGraph::from_edges(n, edges)
}
