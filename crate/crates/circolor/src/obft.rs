//! Ordered breadth-first search partition of a connected outerplanar graph
//! into a rooted spanning tree and the non-tree edge set H, with layer
//! structure, latest common ancestors, interior sets, and verification of
//! the five structural properties the partition guarantees.
//!
//! The BFS processes its queue in order and enqueues the unvisited neighbors
//! of each vertex by increasing outer-face index read from the root. "Left
//! to right" within a layer means increasing enqueue position.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{validate_outer_embedding, Graph, OuterEmbedding};

/// Result of an ordered BFS: spanning tree, non-tree edges, and the layer
/// geometry needed by the coloring algorithms. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObftPartition {
    root: usize,
    parent: Vec<Option<usize>>,
    layer: Vec<usize>,
    position: Vec<usize>,
    layers: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
    tree_edges: BTreeSet<(usize, usize)>,
    nontree_edges: BTreeSet<(usize, usize)>,
}

/// Per-property outcome of `verify_properties`, with the offending edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ObftPropertyReport {
    pub pass: [bool; 5],
    pub offenders: [Vec<(usize, usize)>; 5],
}

impl ObftPropertyReport {
    pub fn all_pass(&self) -> bool {
        self.pass.iter().all(|&p| p)
    }
}

/// Runs the ordered BFS from `r` and splits the edges of `g` into discovery
/// (tree) edges and the remainder H. Requires `g` connected and `emb` a
/// valid outer embedding of `g`.
pub fn obft_partition(g: &Graph, emb: &OuterEmbedding, r: usize) -> Result<ObftPartition> {
    let n = g.vertex_count();
    if r >= n {
        return Err(Error::InvalidInput(format!("root {r} out of range")));
    }
    if !validate_outer_embedding(g, emb)? {
        return Err(Error::InvalidInput("embedding is not outerplanar for this graph".into()));
    }
    let idx = emb.index_from(r, n)?;

    let mut parent = vec![None; n];
    let mut layer = vec![usize::MAX; n];
    let mut position = vec![usize::MAX; n];
    let mut children = vec![Vec::new(); n];
    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut tree_edges = BTreeSet::new();

    layer[r] = 0;
    let mut queue = std::collections::VecDeque::from([r]);
    while let Some(u) = queue.pop_front() {
        let lu = layer[u];
        if layers.len() == lu {
            layers.push(Vec::new());
        }
        position[u] = layers[lu].len();
        layers[lu].push(u);

        let mut fresh: Vec<usize> =
            g.neighbors(u).iter().copied().filter(|&w| layer[w] == usize::MAX).collect();
        fresh.sort_unstable_by_key(|&w| idx[w]);
        for w in fresh {
            layer[w] = lu + 1;
            parent[w] = Some(u);
            children[u].push(w);
            tree_edges.insert((u.min(w), u.max(w)));
            queue.push_back(w);
        }
    }
    if layer.contains(&usize::MAX) {
        return Err(Error::InvalidInput("graph is not connected".into()));
    }
    let nontree_edges = g.edges().filter(|e| !tree_edges.contains(e)).collect();
    Ok(ObftPartition {
        root: r,
        parent,
        layer,
        position,
        layers,
        children,
        tree_edges,
        nontree_edges,
    })
}

impl ObftPartition {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.layer.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn layer_of(&self, v: usize) -> usize {
        self.layer[v]
    }

    /// Left-to-right index of `v` within its layer.
    pub fn position_of(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    /// Vertices of layer `i`, left to right.
    pub fn layer(&self, i: usize) -> &[usize] {
        &self.layers[i]
    }

    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// Sons of `v`, left to right.
    pub fn sons(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn tree_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.tree_edges
    }

    pub fn nontree_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.nontree_edges
    }

    /// Deepest common vertex of the root paths to `u` and `v`.
    pub fn lca(&self, u: usize, v: usize) -> usize {
        let (mut a, mut b) = (u, v);
        while self.layer[a] > self.layer[b] {
            a = self.parent[a].expect("non-root vertex has a parent");
        }
        while self.layer[b] > self.layer[a] {
            b = self.parent[b].expect("non-root vertex has a parent");
        }
        while a != b {
            a = self.parent[a].expect("non-root vertex has a parent");
            b = self.parent[b].expect("non-root vertex has a parent");
        }
        a
    }

    fn ancestor_at(&self, v: usize, target_layer: usize) -> usize {
        let mut a = v;
        while self.layer[a] > target_layer {
            a = self.parent[a].expect("non-root vertex has a parent");
        }
        a
    }

    fn is_nontree_edge(&self, u: usize, v: usize) -> bool {
        self.nontree_edges.contains(&(u.min(v), u.max(v)))
    }

    fn same_layer_consecutive(&self, u: usize, v: usize) -> bool {
        self.layer[u] == self.layer[v] && self.position[u].abs_diff(self.position[v]) == 1
    }

    /// Int(u, v): the vertices enclosed between the two root paths and the
    /// (actual or virtual) edge uv. A vertex w lies inside exactly when, at
    /// its layer, it sits strictly between the two paths' positions; layers
    /// below both endpoints are outside the enclosed region. Defined for
    /// non-tree edges and for consecutive vertices of the same layer.
    pub fn interior_set(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let n = self.vertex_count();
        if u >= n || v >= n || u == v {
            return Err(Error::InvalidInput(format!("interior set of invalid pair ({u}, {v})")));
        }
        if !self.is_nontree_edge(u, v) && !self.same_layer_consecutive(u, v) {
            return Err(Error::InvalidInput(format!(
                "interior set requires a non-tree edge or consecutive same-layer vertices, got ({u}, {v})"
            )));
        }
        let anc = self.lca(u, v);
        let top = self.layer[anc];
        let bottom = self.layer[u].min(self.layer[v]);
        let mut inside = Vec::new();
        for m in top + 1..=bottom {
            let pa = self.position[self.ancestor_at(u, m)];
            let pb = self.position[self.ancestor_at(v, m)];
            let (lo, hi) = (pa.min(pb), pa.max(pb));
            for &w in &self.layers[m] {
                let p = self.position[w];
                if p > lo && p < hi {
                    inside.push(w);
                }
            }
        }
        Ok(inside)
    }

    /// Checks the five structural properties of an OBFT partition of a
    /// connected outerplanar graph:
    ///
    /// 1. H has maximum degree at most 4.
    /// 2. Same-layer non-tree edges join consecutive positions.
    /// 3. Cross-layer non-tree edges join consecutive layers.
    /// 4. A non-tree edge from `u` down in layer `i` to `w` in layer `i-1`
    ///    has `w` immediately right of `u`'s father, `u` the rightmost son,
    ///    and an empty interior set.
    /// 5. A same-layer non-tree edge joins vertices whose fathers are equal
    ///    or adjacent, with an empty interior set.
    pub fn verify_properties(&self) -> ObftPropertyReport {
        let mut report = ObftPropertyReport { pass: [true; 5], offenders: Default::default() };
        let fail = |report: &mut ObftPropertyReport, i: usize, e: (usize, usize)| {
            report.pass[i] = false;
            report.offenders[i].push(e);
        };

        let mut h_degree = vec![0usize; self.vertex_count()];
        for &(u, v) in &self.nontree_edges {
            h_degree[u] += 1;
            h_degree[v] += 1;
        }
        for &e in &self.nontree_edges {
            if h_degree[e.0] > 4 || h_degree[e.1] > 4 {
                fail(&mut report, 0, e);
            }
        }

        for &(a, b) in &self.nontree_edges {
            if self.layer[a] == self.layer[b] {
                if self.position[a].abs_diff(self.position[b]) != 1 {
                    fail(&mut report, 1, (a, b));
                    continue;
                }
                // Property 5 on the consecutive pair: fathers equal or
                // adjacent, interior empty.
                let (left, right) = if self.position[a] < self.position[b] { (a, b) } else { (b, a) };
                let fl = self.parent[left].map(|p| self.position[p]);
                let fr = self.parent[right].map(|p| self.position[p]);
                let fathers_ok = match (fl, fr) {
                    (Some(l), Some(h)) => h == l || h == l + 1,
                    _ => false,
                };
                let int_empty =
                    self.interior_set(left, right).map(|s| s.is_empty()).unwrap_or(false);
                if !fathers_ok || !int_empty {
                    fail(&mut report, 4, (a, b));
                }
            } else {
                if self.layer[a].abs_diff(self.layer[b]) != 1 {
                    fail(&mut report, 2, (a, b));
                    continue;
                }
                // Property 4: deeper endpoint u, shallower w.
                let (u, w) = if self.layer[a] > self.layer[b] { (a, b) } else { (b, a) };
                let father = self.parent[u].expect("deep endpoint has a parent");
                let rightmost_son = *self.children[father].last().expect("father has sons");
                let position_ok = self.position[w] == self.position[father] + 1;
                let int_empty = self.interior_set(u, w).map(|s| s.is_empty()).unwrap_or(false);
                if !position_ok || rightmost_son != u || !int_empty {
                    fail(&mut report, 3, (a, b));
                }
            }
        }
        report
    }

    /// GraphViz rendering: solid tree edges, dashed non-tree edges, one rank
    /// per layer.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph obft {\n  rankdir=TB;\n");
        for layer in &self.layers {
            let _ = write!(out, "  {{ rank=same;");
            for &v in layer {
                let _ = write!(out, " v{v};");
            }
            out.push_str(" }\n");
        }
        for &(u, v) in &self.tree_edges {
            let _ = writeln!(out, "  v{u} -- v{v};");
        }
        for &(u, v) in &self.nontree_edges {
            let _ = writeln!(out, "  v{u} -- v{v} [style=dashed];");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_g5;
    use crate::graph::{make_family, FamilyKind};

    fn g5_partition() -> ObftPartition {
        let (g, emb) = gen_g5();
        obft_partition(&g, &emb, 0).unwrap()
    }

    #[test]
    fn g5_layers_and_nontree_edges() {
        let p = g5_partition();
        assert_eq!(p.layer_count(), 3);
        assert_eq!(p.layer(0), &[0]);
        // y1..y6.
        assert_eq!(p.layer(1), &[1, 4, 7, 10, 13, 16]);
        // u1, v1, u2, v2, ... in exterior order.
        assert_eq!(p.layer(2), &[2, 3, 5, 6, 8, 9, 11, 12, 14, 15]);
        let h: Vec<(usize, usize)> = p.nontree_edges().iter().copied().collect();
        assert_eq!(h, vec![(2, 3), (5, 6), (8, 9), (11, 12), (14, 15)]);
        assert_eq!(p.tree_edges().len(), 16);
    }

    #[test]
    fn c4_partition() {
        let c4 = make_family(FamilyKind::Cycle, 4).unwrap();
        let emb = OuterEmbedding::new(vec![0, 1, 2, 3]);
        let p = obft_partition(&c4, &emb, 0).unwrap();
        let tree: Vec<(usize, usize)> = p.tree_edges().iter().copied().collect();
        assert_eq!(tree, vec![(0, 1), (0, 3), (1, 2)]);
        let h: Vec<(usize, usize)> = p.nontree_edges().iter().copied().collect();
        assert_eq!(h, vec![(2, 3)]);
    }

    #[test]
    fn star_partition_is_all_tree() {
        let star = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let emb = OuterEmbedding::new(vec![0, 1, 2, 3]);
        let p = obft_partition(&star, &emb, 0).unwrap();
        assert!(p.nontree_edges().is_empty());
        assert_eq!(p.layer_count(), 2);
        assert_eq!(p.layer(1).len(), 3);
        assert!(p.verify_properties().all_pass());
    }

    #[test]
    fn lca_cases() {
        let p = g5_partition();
        assert_eq!(p.lca(5, 5), 5);
        // u1 sits under y1, v1 under y2; they meet at the hub.
        assert_eq!(p.lca(2, 3), 0);
        // Brothers meet at their father: v1 and u2 are both sons of y2.
        assert_eq!(p.lca(3, 5), 4);
        assert_eq!(p.lca(0, 9), 0);
    }

    #[test]
    fn g5_interior_sets_are_empty() {
        let p = g5_partition();
        for &(u, v) in p.nontree_edges().clone().iter() {
            assert!(p.interior_set(u, v).unwrap().is_empty());
        }
        // Consecutive brothers.
        assert!(p.interior_set(3, 5).unwrap().is_empty());
        // Consecutive hub sons y1, y2: the enclosed region is closed off at
        // their own layer, so nothing lies inside.
        assert!(p.interior_set(1, 4).unwrap().is_empty());
    }

    #[test]
    fn interior_set_captures_enclosed_vertex() {
        // Hub 0 with sons 1, 2, 3; vertex 4 under 1 and vertex 5 under 3.
        // In layer 2 the vertices 4 and 5 are consecutive, but vertex 2
        // hangs strictly between the two root paths.
        let g = Graph::new(6, vec![(0, 1), (0, 2), (0, 3), (1, 4), (3, 5)]).unwrap();
        let emb = OuterEmbedding::new(vec![0, 1, 4, 2, 3, 5]);
        let p = obft_partition(&g, &emb, 0).unwrap();
        assert_eq!(p.layer(1), &[1, 2, 3]);
        assert_eq!(p.layer(2), &[4, 5]);
        assert_eq!(p.interior_set(4, 5).unwrap(), vec![2]);
    }

    #[test]
    fn interior_set_preconditions() {
        let p = g5_partition();
        // Tree edge.
        assert!(p.interior_set(0, 1).is_err());
        // Same layer but not consecutive.
        assert!(p.interior_set(2, 6).is_err());
        assert!(p.interior_set(1, 1).is_err());
    }

    #[test]
    fn g5_properties_pass_with_offset_fathers() {
        let p = g5_partition();
        let report = p.verify_properties();
        assert!(report.all_pass(), "{report:?}");
        // Each u_i v_i edge joins sons of consecutive fathers (h = l + 1).
        for &(u, v) in p.nontree_edges().clone().iter() {
            let fu = p.parent(u).unwrap();
            let fv = p.parent(v).unwrap();
            assert_eq!(p.position_of(fv), p.position_of(fu) + 1);
        }
    }

    #[test]
    fn partition_structure_invariants() {
        let p = g5_partition();
        let n = p.vertex_count();
        assert_eq!(p.tree_edges().len(), n - 1);
        assert_eq!((0..n).filter(|&v| p.parent(v).is_none()).count(), 1);
        for &(u, v) in p.nontree_edges() {
            assert!(p.layer_of(u).abs_diff(p.layer_of(v)) <= 1);
        }
        for i in 0..p.layer_count() {
            for (expected, &v) in p.layer(i).iter().enumerate() {
                assert_eq!(p.position_of(v), expected);
                assert_eq!(p.layer_of(v), i);
            }
        }
    }

    #[test]
    fn disconnected_and_invalid_inputs() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let emb = OuterEmbedding::new(vec![0, 1, 2, 3]);
        assert!(matches!(obft_partition(&g, &emb, 0), Err(Error::InvalidInput(_))));

        let k4 = make_family(FamilyKind::Complete, 4).unwrap();
        let emb = OuterEmbedding::new(vec![0, 1, 2, 3]);
        assert!(matches!(obft_partition(&k4, &emb, 0), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn partition_is_deterministic() {
        let (g, emb) = gen_g5();
        assert_eq!(obft_partition(&g, &emb, 0).unwrap(), obft_partition(&g, &emb, 0).unwrap());
        assert_eq!(obft_partition(&g, &emb, 7).unwrap(), obft_partition(&g, &emb, 7).unwrap());
    }

    #[test]
    fn dot_export_shape() {
        let p = g5_partition();
        let dot = p.to_dot();
        assert!(dot.starts_with("graph obft {"));
        assert!(dot.contains("rank=same"));
        assert!(dot.contains("[style=dashed]"));
        assert_eq!(dot.matches(" -- ").count(), 21);
    }
}
