//! Immutable compressed adjacency storage for the input graph, plus the
//! edge-list and DIMACS readers/writers.
//!
//! A [`BaseGraph`] is built once, then shared read-only by every worker. All
//! per-search-node state lives in [`crate::node::SearchNode`].

use std::fmt::Write as _;

use thiserror::Error;

/// Dense 0-based vertex id.
pub type Vertex = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("missing 'p edge N M' problem line")]
    MissingProblemLine,
    #[error("line {line}: vertex id {id} outside 1..={n}")]
    VertexOutOfRange { line: usize, id: u64, n: u64 },
    #[error("graph has {0} vertices, more than the supported maximum")]
    TooManyVertices(u64),
}

/// Undirected simple graph in compressed sparse row form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseGraph {
    offsets: Vec<usize>,
    neighbors: Vec<Vertex>,
    num_edges: usize,
    /// Added to a dense id to recover the id used in the input file.
    id_base: u64,
}

impl BaseGraph {
    /// Builds a graph on `n` vertices. Self-loops and duplicate pairs are
    /// dropped; `(u, v)` and `(v, u)` are the same edge.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!((u as usize) < n && (v as usize) < n, "edge ({u}, {v}) out of range for {n} vertices");
            if u == v {
                continue;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut neighbors = Vec::new();
        offsets.push(0);
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            neighbors.extend_from_slice(list);
            offsets.push(neighbors.len());
        }
        let num_edges = neighbors.len() / 2;
        BaseGraph { offsets, neighbors, num_edges, id_base: 0 }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, std::iter::empty())
    }

    pub fn with_id_base(mut self, base: u64) -> Self {
        self.id_base = base;
        self
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn id_base(&self) -> u64 {
        self.id_base
    }

    /// Id of `v` as it appeared in the input file.
    pub fn original_id(&self, v: Vertex) -> u64 {
        v as u64 + self.id_base
    }

    /// Binary search in the sorted neighbor slice of the lower-degree endpoint.
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.num_vertices() as Vertex
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices()
            .flat_map(move |u| self.neighbors(u).iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edge complement on the same vertex set.
    pub fn complement(&self) -> BaseGraph {
        let n = self.num_vertices();
        let mut offsets = Vec::with_capacity(n + 1);
        let total = n * n.saturating_sub(1) - 2 * self.num_edges;
        let mut neighbors = Vec::with_capacity(total);
        offsets.push(0);
        for u in self.vertices() {
            let mut present = self.neighbors(u).iter().peekable();
            for v in self.vertices() {
                if present.peek() == Some(&&v) {
                    present.next();
                    continue;
                }
                if v != u {
                    neighbors.push(v);
                }
            }
            offsets.push(neighbors.len());
        }
        let num_edges = n * n.saturating_sub(1) / 2 - self.num_edges;
        BaseGraph { offsets, neighbors, num_edges, id_base: self.id_base }
    }

    /// True iff every edge has at least one endpoint in `cover`.
    pub fn is_vertex_cover(&self, cover: &[Vertex]) -> bool {
        let mut in_cover = vec![false; self.num_vertices()];
        for &v in cover {
            match in_cover.get_mut(v as usize) {
                Some(slot) => *slot = true,
                None => return false,
            }
        }
        self.edges().all(|(u, v)| in_cover[u as usize] || in_cover[v as usize])
    }

    /// Checks the structural invariants of the CSR arrays.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.num_vertices();
        if self.offsets[0] != 0 {
            return Err("offsets[0] != 0".into());
        }
        if self.offsets.windows(2).any(|w| w[0] > w[1]) {
            return Err("offsets decrease".into());
        }
        if self.offsets[n] != 2 * self.num_edges || self.neighbors.len() != 2 * self.num_edges {
            return Err(format!("offsets[n]={} but 2|E|={}", self.offsets[n], 2 * self.num_edges));
        }
        for u in self.vertices() {
            let slice = self.neighbors(u);
            if slice.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("neighbors of {u} not strictly ascending"));
            }
            for &v in slice {
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if v as usize >= n || self.neighbors(v).binary_search(&u).is_err() {
                    return Err(format!("edge {u}-{v} not symmetric"));
                }
            }
        }
        Ok(())
    }

    /// Plain edge list, one `u v` pair per line, 0-based, `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.num_vertices(), self.num_edges);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
        out
    }
}

fn parse_id(tok: &str, line: usize) -> Result<u64, GraphError> {
    tok.parse::<u64>().map_err(|_| GraphError::Parse { line, msg: format!("invalid vertex id {tok:?}") })
}

fn check_size(n: u64) -> Result<usize, GraphError> {
    if n >= Vertex::MAX as u64 {
        return Err(GraphError::TooManyVertices(n));
    }
    Ok(n as usize)
}

/// Parses whitespace-separated `u v` pairs. Lines starting with `#` or `%`
/// are comments; tokens after the first two on a line are ignored. Ids are
/// shifted to 0-based when the smallest id seen is at least 1.
pub fn parse_edge_list(text: &str) -> Result<BaseGraph, GraphError> {
    let mut raw = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let mut toks = line.split_whitespace();
        let u = parse_id(toks.next().unwrap_or_default(), lineno)?;
        let v = match toks.next() {
            Some(t) => parse_id(t, lineno)?,
            None => return Err(GraphError::Parse { line: lineno, msg: "expected two vertex ids".into() }),
        };
        raw.push((u, v));
    }
    let Some(min_id) = raw.iter().map(|&(u, v)| u.min(v)).min() else {
        return Ok(BaseGraph::empty(0));
    };
    let max_id = raw.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
    let base = if min_id >= 1 { 1 } else { 0 };
    let n = check_size(max_id - base + 1)?;
    let edges = raw.into_iter().map(|(u, v)| ((u - base) as Vertex, (v - base) as Vertex));
    Ok(BaseGraph::from_edges(n, edges).with_id_base(base))
}

/// Parses the DIMACS ascii graph format (`c` comments, one `p edge N M`
/// line, `e u v` edges with 1-based ids). `p col` is accepted as a synonym.
pub fn parse_dimacs(text: &str) -> Result<BaseGraph, GraphError> {
    let mut n: Option<u64> = None;
    let mut edges = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let mut toks = line.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(GraphError::Parse { line: lineno, msg: "duplicate problem line".into() });
                }
                match toks.next() {
                    Some("edge" | "col") => {}
                    other => {
                        return Err(GraphError::Parse {
                            line: lineno,
                            msg: format!("unsupported problem type {:?}", other.unwrap_or("")),
                        })
                    }
                }
                let count = toks
                    .next()
                    .ok_or_else(|| GraphError::Parse { line: lineno, msg: "missing vertex count".into() })?;
                n = Some(parse_id(count, lineno)?);
            }
            Some("e") => {
                let n = n.ok_or(GraphError::MissingProblemLine)?;
                let mut endpoint = || -> Result<Vertex, GraphError> {
                    let tok = toks
                        .next()
                        .ok_or_else(|| GraphError::Parse { line: lineno, msg: "expected two vertex ids".into() })?;
                    let id = parse_id(tok, lineno)?;
                    if id == 0 || id > n {
                        return Err(GraphError::VertexOutOfRange { line: lineno, id, n });
                    }
                    Ok((id - 1) as Vertex)
                };
                let u = endpoint()?;
                let v = endpoint()?;
                edges.push((u, v));
            }
            Some(tok) if tok.starts_with('c') => {}
            Some(tok) => {
                return Err(GraphError::Parse { line: lineno, msg: format!("unknown line type {tok:?}") });
            }
        }
    }
    let n = check_size(n.ok_or(GraphError::MissingProblemLine)?)?;
    Ok(BaseGraph::from_edges(n, edges).with_id_base(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &BaseGraph) -> Vec<usize> {
        g.vertices().map(|v| g.degree(v)).collect()
    }

    #[test]
    fn edge_list_path() {
        let g = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(degrees(&g), vec![1, 2, 1]);
        assert_eq!(g.num_edges(), 2);
        g.validate().unwrap();
    }

    #[test]
    fn edge_list_drops_duplicates_and_loops() {
        let g = parse_edge_list("0 1\n1 0\n0 0").unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.num_edges(), 1);
    }

    #[test]
    fn edge_list_one_based_and_comments() {
        let g = parse_edge_list("% sym unweighted\n# note\n1 2 1\n\n2 3 7 99\n").unwrap();
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.id_base(), 1);
        assert_eq!(g.original_id(0), 1);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn edge_list_keeps_trailing_isolated() {
        let g = parse_edge_list("0 1\n0 5\n").unwrap();
        assert_eq!(g.num_vertices(), 6);
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn edge_list_errors_carry_line() {
        assert_eq!(
            parse_edge_list("0 1\n2\n"),
            Err(GraphError::Parse { line: 2, msg: "expected two vertex ids".into() })
        );
        assert!(matches!(parse_edge_list("0 1\n\n3 x\n"), Err(GraphError::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list("-1 2"), Err(GraphError::Parse { line: 1, .. })));
    }

    #[test]
    fn empty_edge_list() {
        let g = parse_edge_list("# nothing\n").unwrap();
        assert_eq!(g.num_vertices(), 0);
        assert_eq!(g.num_edges(), 0);
    }

    #[test]
    fn dimacs_basic() {
        let g = parse_dimacs("c test\np edge 3 2\ne 1 2\ne 2 3").unwrap();
        assert_eq!(degrees(&g), vec![1, 2, 1]);
        let g = parse_dimacs("p edge 2 1\ne 1 2").unwrap();
        assert_eq!(g.num_edges(), 1);
        assert_eq!(g.original_id(1), 2);
    }

    #[test]
    fn dimacs_cleans_input() {
        let g = parse_dimacs("p edge 3 4\ne 1 2\ne 2 1\ne 3 3\ne 1 3\n").unwrap();
        assert_eq!(g.num_edges(), 2);
    }

    #[test]
    fn dimacs_errors() {
        assert_eq!(parse_dimacs("c only\n"), Err(GraphError::MissingProblemLine));
        assert_eq!(parse_dimacs("e 1 2\n"), Err(GraphError::MissingProblemLine));
        assert_eq!(
            parse_dimacs("p edge 3 1\ne 1 4\n"),
            Err(GraphError::VertexOutOfRange { line: 2, id: 4, n: 3 })
        );
        assert!(matches!(parse_dimacs("p edge 3 1\ne 0 1\n"), Err(GraphError::VertexOutOfRange { .. })));
        assert!(matches!(parse_dimacs("p edge 3 1\nx 1 2\n"), Err(GraphError::Parse { line: 2, .. })));
    }

    #[test]
    fn complement_examples() {
        let k3 = BaseGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        let c = k3.complement();
        assert_eq!(c.num_vertices(), 3);
        assert_eq!(c.num_edges(), 0);

        let p3 = BaseGraph::from_edges(3, [(0, 1), (1, 2)]);
        let c = p3.complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        c.validate().unwrap();
    }

    #[test]
    fn complement_edge_arithmetic() {
        // 300 vertices, 10933 edges -> 44850 - 10933 = 33917 in the complement
        let mut edges = Vec::new();
        'outer: for u in 0..300u32 {
            for v in (u + 1)..300 {
                if edges.len() == 10933 {
                    break 'outer;
                }
                if (u * 7 + v * 13) % 4 == 0 {
                    edges.push((u, v));
                }
            }
        }
        let g = BaseGraph::from_edges(300, edges);
        assert_eq!(g.num_edges(), 10933);
        let c = g.complement();
        assert_eq!(c.num_edges(), 33917);
        c.validate().unwrap();
    }

    #[test]
    fn cover_check() {
        let p3 = BaseGraph::from_edges(3, [(0, 1), (1, 2)]);
        assert!(p3.is_vertex_cover(&[1]));
        assert!(!p3.is_vertex_cover(&[0]));
        assert!(!p3.is_vertex_cover(&[7]));
        assert!(BaseGraph::empty(4).is_vertex_cover(&[]));
    }
}
