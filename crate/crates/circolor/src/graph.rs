//! Simple undirected graphs over dense integer vertex ids, basic graph
//! families, and outerplanar embedding validation/search.
//!
//! An outerplanar embedding is represented by a cyclic order of all vertices;
//! the graph is outerplanar with that outer-face order exactly when no two
//! edges, drawn as chords of the circle, strictly interleave.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// No self-loops, no parallel edges. Immutable after construction, so shared
/// references are safe to use concurrently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation; self-loops, duplicates and out-of-range endpoints are
    /// rejected.
    pub fn new(n: usize, edge_list: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges = BTreeSet::new();
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edge_list {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("self-loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !edges.insert(e) {
                return Err(Error::InvalidInput(format!("duplicate edge ({}, {})", e.0, e.1)));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new(), adj: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized pairs `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.contains(&e)
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// contained vertex id.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on `vertices` (must be sorted and duplicate-free).
    /// Vertex `vertices[i]` becomes vertex `i`; the original ids are returned
    /// alongside for mapping results back.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        let g = Graph::new(vertices.len(), edges).expect("induced edges are valid");
        (g, vertices.to_vec())
    }
}

/// The basic graph families used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    Empty,
}

/// Builds `P_n` (vertices joined as 0-1-...-(n-1)), `C_n` (additionally
/// closing (n-1)-0), `K_n`, or the edgeless graph on `n` vertices.
pub fn make_family(kind: FamilyKind, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("family size must be positive".into()));
    }
    match kind {
        FamilyKind::Path => Graph::new(n, (1..n).map(|i| (i - 1, i))),
        FamilyKind::Cycle => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!("cycle requires n >= 3, got {n}")));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        FamilyKind::Complete => {
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        FamilyKind::Empty => Ok(Graph::empty(n)),
    }
}

/// A cyclic order of all vertices witnessing an outerplanar drawing.
/// Position 0 is the designated start; the order is read cyclically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterEmbedding {
    order: Vec<usize>,
}

impl OuterEmbedding {
    pub fn new(order: Vec<usize>) -> Self {
        OuterEmbedding { order }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Position of each vertex in the cyclic order, or an error when the
    /// order is not a permutation of `0..n`.
    pub fn positions(&self, n: usize) -> Result<Vec<usize>> {
        if self.order.len() != n {
            return Err(Error::InvalidInput(format!(
                "embedding order has {} entries for {} vertices",
                self.order.len(),
                n
            )));
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::InvalidInput(
                    "embedding order is not a permutation of the vertices".into(),
                ));
            }
            pos[v] = i;
        }
        Ok(pos)
    }

    /// Index of each vertex in the cyclic order re-read so that `start` gets
    /// index 0.
    pub fn index_from(&self, start: usize, n: usize) -> Result<Vec<usize>> {
        let pos = self.positions(n)?;
        if start >= n {
            return Err(Error::InvalidInput(format!("start vertex {start} out of range")));
        }
        let s = pos[start];
        Ok(pos.into_iter().map(|p| (p + n - s) % n).collect())
    }
}

/// Is `x` strictly inside the cyclic arc from `a` to `b` (walking in
/// increasing position)?
fn strictly_inside(x: usize, a: usize, b: usize, n: usize) -> bool {
    let span = (b + n - a) % n;
    let off = (x + n - a) % n;
    off > 0 && off < span
}

/// Checks whether `emb` certifies an outerplanar drawing of `g`: no two
/// edges with four distinct endpoints may strictly interleave in the cyclic
/// order (exactly one endpoint of one chord inside the arc spanned by the
/// other).
pub fn validate_outer_embedding(g: &Graph, emb: &OuterEmbedding) -> Result<bool> {
    let n = g.vertex_count();
    let pos = emb.positions(n)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let c_in = strictly_inside(pos[c], pos[a], pos[b], n);
            let d_in = strictly_inside(pos[d], pos[a], pos[b], n);
            if c_in != d_in {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Incremental crossing check used by the embedding search: are the already
/// placed edges chord-crossing-free given positions `pos` (usize::MAX marks
/// unplaced vertices)? Only edges incident to the most recently placed
/// vertex `last` are tested against the rest.
fn placement_ok(g: &Graph, pos: &[usize], n_placed: usize, last: usize) -> bool {
    let placed = |v: usize| pos[v] != usize::MAX;
    for &w in g.neighbors(last) {
        if !placed(w) {
            continue;
        }
        let (a, b) = (last, w);
        for (c, d) in g.edges() {
            if !placed(c) || !placed(d) {
                continue;
            }
            if a == c || a == d || b == c || b == d {
                continue;
            }
            // Relative cyclic order of placed vertices is final, so the
            // interleaving test on partial data is exact.
            let c_in = strictly_inside_linear(pos[c], pos[a], pos[b], n_placed);
            let d_in = strictly_inside_linear(pos[d], pos[a], pos[b], n_placed);
            if c_in != d_in {
                return false;
            }
        }
    }
    true
}

fn strictly_inside_linear(x: usize, a: usize, b: usize, n: usize) -> bool {
    strictly_inside(x, a, b, n)
}

fn find_component_order(g: &Graph, comp: &[usize]) -> Option<Vec<usize>> {
    // Backtracking over sequences starting at the component's smallest
    // vertex; tries vertices in ascending order so the first completed
    // sequence is the lexicographically smallest valid one.
    let m = comp.len();
    let mut pos = vec![usize::MAX; g.vertex_count()];
    let mut order = Vec::with_capacity(m);
    pos[comp[0]] = 0;
    order.push(comp[0]);

    fn extend(
        g: &Graph,
        comp: &[usize],
        pos: &mut Vec<usize>,
        order: &mut Vec<usize>,
    ) -> bool {
        if order.len() == comp.len() {
            return true;
        }
        for &v in comp {
            if pos[v] != usize::MAX {
                continue;
            }
            pos[v] = order.len();
            order.push(v);
            if placement_ok(g, pos, order.len(), v) && extend(g, comp, pos, order) {
                return true;
            }
            order.pop();
            pos[v] = usize::MAX;
        }
        false
    }

    if extend(g, comp, &mut pos, &mut order) {
        Some(order)
    } else {
        None
    }
}

/// Searches for an outer-face order of `g`, or `None` when `g` is not
/// outerplanar. Each connected component is embedded on its own arc (the
/// lexicographically smallest valid order starting at the component's
/// smallest vertex) and components are concatenated in increasing order of
/// their smallest vertex id. Exponential in the worst case; intended for
/// desk-scale graphs — callers that already know an order should pass it in
/// directly.
pub fn find_outer_embedding(g: &Graph) -> Option<OuterEmbedding> {
    if g.vertex_count() == 0 {
        return Some(OuterEmbedding::new(Vec::new()));
    }
    let mut order = Vec::with_capacity(g.vertex_count());
    for comp in g.components() {
        // Crossings cannot occur between components placed on disjoint arcs,
        // so each component is solved independently.
        let (sub, ids) = g.induced(&comp);
        let sub_order = find_component_order(&sub, &(0..sub.vertex_count()).collect::<Vec<_>>())?;
        order.extend(sub_order.into_iter().map(|v| ids[v]));
    }
    Some(OuterEmbedding::new(order))
}
