//! Search-tree node state: a degree array over the base graph.
//!
//! Combined with the shared [`BaseGraph`], a [`SearchNode`] fully describes an
//! intermediate graph `G` and the partial cover `S`: vertices in `S` carry the
//! [`REMOVED`] sentinel, every other vertex stores its degree among the alive
//! vertices. A node owns no references and can be moved between workers.

use crate::graph::{BaseGraph, Vertex};

/// Degree-array marker for a vertex that has been moved into the cover.
pub const REMOVED: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchNode {
    degrees: Vec<u32>,
    cover_count: usize,
    alive_edges: usize,
}

impl SearchNode {
    /// Root of the search tree: the full graph with an empty cover.
    pub fn root(g: &BaseGraph) -> Self {
        SearchNode {
            degrees: g.vertices().map(|v| g.degree(v) as u32).collect(),
            cover_count: 0,
            alive_edges: g.num_edges(),
        }
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.degrees.len()
    }

    #[inline]
    pub fn is_alive(&self, v: Vertex) -> bool {
        self.degrees[v as usize] != REMOVED
    }

    /// Current degree, or `None` if `v` is in the cover.
    #[inline]
    pub fn degree(&self, v: Vertex) -> Option<u32> {
        match self.degrees[v as usize] {
            REMOVED => None,
            d => Some(d),
        }
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// |S|.
    #[inline]
    pub fn cover_count(&self) -> usize {
        self.cover_count
    }

    /// |E(G)|.
    #[inline]
    pub fn alive_edge_count(&self) -> usize {
        self.alive_edges
    }

    /// The cover vertices in ascending order.
    pub fn cover(&self) -> Vec<Vertex> {
        (0..self.degrees.len() as Vertex).filter(|&v| !self.is_alive(v)).collect()
    }

    /// `G = G - {v}; S = S ∪ {v}`.
    ///
    /// Panics if `v` is already in the cover.
    pub fn remove_vertex_into_cover(&mut self, g: &BaseGraph, v: Vertex) {
        let d = self.degrees[v as usize];
        assert!(d != REMOVED, "vertex {v} is already in the cover");
        self.degrees[v as usize] = REMOVED;
        self.cover_count += 1;
        self.alive_edges -= d as usize;
        if d == 0 {
            return;
        }
        for &u in g.neighbors(v) {
            let du = &mut self.degrees[u as usize];
            if *du != REMOVED {
                *du -= 1;
            }
        }
    }

    /// `G = G - N(v); S = S ∪ N(v)`. `v` stays alive with degree 0.
    pub fn remove_neighbors_into_cover(&mut self, g: &BaseGraph, v: Vertex) {
        assert!(self.is_alive(v), "vertex {v} is already in the cover");
        for &u in g.neighbors(v) {
            if self.is_alive(u) {
                self.remove_vertex_into_cover(g, u);
            }
        }
    }

    /// Alive base-graph neighbors of `v`, ascending.
    pub(crate) fn alive_neighbors<'g>(&'g self, g: &'g BaseGraph, v: Vertex) -> impl Iterator<Item = Vertex> + 'g {
        g.neighbors(v).iter().copied().filter(move |&u| self.is_alive(u))
    }

    /// First vertex at or after `from` whose degree entry satisfies `pred`.
    /// Cover vertices show up as [`REMOVED`].
    #[inline]
    pub(crate) fn find_from(&self, from: usize, pred: impl Fn(u32) -> bool) -> Option<Vertex> {
        self.degrees[from..].iter().position(|&d| pred(d)).map(|i| (from + i) as Vertex)
    }

    /// Smallest-id alive vertex of maximum degree, with that degree. The
    /// degree may be 0. `None` only when every vertex is in the cover.
    pub fn max_degree_vertex(&self) -> Option<(Vertex, u32)> {
        let mut best: Option<(Vertex, u32)> = None;
        for (v, &d) in self.degrees.iter().enumerate() {
            if d == REMOVED {
                continue;
            }
            if best.is_none_or(|(_, bd)| d > bd) {
                best = Some((v as Vertex, d));
            }
        }
        best
    }

    /// The intermediate graph as a standalone [`BaseGraph`] on the same vertex
    /// ids; cover vertices become isolated.
    pub fn residual_graph(&self, g: &BaseGraph) -> BaseGraph {
        let edges = g.edges().filter(|&(u, v)| self.is_alive(u) && self.is_alive(v));
        BaseGraph::from_edges(g.num_vertices(), edges)
    }

    /// Recomputes every counter from the base graph and reports the first
    /// mismatch.
    pub fn validate(&self, g: &BaseGraph) -> Result<(), String> {
        if self.degrees.len() != g.num_vertices() {
            return Err("degree array length differs from |V|".into());
        }
        let mut sum = 0usize;
        let mut removed = 0usize;
        for v in g.vertices() {
            match self.degree(v) {
                None => removed += 1,
                Some(d) => {
                    let expect = self.alive_neighbors(g, v).count();
                    if d as usize != expect {
                        return Err(format!("degree of {v} is {d}, expected {expect}"));
                    }
                    sum += d as usize;
                }
            }
        }
        if removed != self.cover_count {
            return Err(format!("cover_count {} but {removed} sentinels", self.cover_count));
        }
        if sum != 2 * self.alive_edges {
            return Err(format!("degree sum {sum} but alive_edge_count {}", self.alive_edges));
        }
        let uncovered = g.edges().filter(|&(u, v)| self.is_alive(u) && self.is_alive(v)).count();
        if uncovered != self.alive_edges {
            return Err(format!("{uncovered} uncovered edges but alive_edge_count {}", self.alive_edges));
        }
        Ok(())
    }
}

/// Bounded depth-first stack owned by one worker.
///
/// The bound is the provisioned search depth (greedy cover size for MVC, `k`
/// for PVC). Pushing past it means the depth argument was violated, which is
/// a bug, so [`LocalStack::push`] panics.
#[derive(Debug)]
pub struct LocalStack {
    entries: Vec<SearchNode>,
    bound: usize,
    high_water: usize,
}

impl LocalStack {
    pub fn new(bound: usize) -> Self {
        LocalStack { entries: Vec::with_capacity(bound.min(1024)), bound, high_water: 0 }
    }

    pub fn push(&mut self, node: SearchNode) {
        assert!(self.entries.len() < self.bound, "local stack depth would exceed its bound of {}", self.bound);
        self.entries.push(node);
        self.high_water = self.high_water.max(self.entries.len());
    }

    pub fn pop(&mut self) -> Option<SearchNode> {
        self.entries.pop()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Deepest the stack has been.
    pub fn high_water(&self) -> usize {
        self.high_water
    }
}
