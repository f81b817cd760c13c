//! Gadget constructions that translate between coloring problems, together
//! with the constructive coloring transfers in both directions. Each
//! construction records the correspondence between original and constructed
//! vertices so the transfers and equivalence tests stay mechanical.
//!
//! Classical (k, d)-defective coloring (a plain same-color neighbor budget,
//! no circular distance) appears here as the source problem of the
//! path-gadget reductions; it is decided by the shared backtracking engine
//! with distance parameter 1, under which "circular distance < q" becomes
//! color equality.

use crate::coloring::{check_relaxed, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{decide, SolverConfig};

/// Which gadget produced an instance, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    /// Every edge replaced by a path on four vertices.
    P4Subdivision,
    /// Every edge replaced by a path on four vertices whose interior
    /// vertices each carry `t - 1` pendant edges (disjoint two-cliques).
    GadgetA { t: usize },
    /// Composition with the edgeless graph on `p` vertices: every vertex
    /// becomes an independent class of `p` copies, every edge a complete
    /// bipartite join.
    Blowup { p: usize },
    /// A clique of size `floor(k/2) * (d + 1)` glued onto every vertex.
    CliqueAttachment { k: usize, d: usize },
}

/// Gadget interior for one original edge: the fresh vertex ids in layout
/// order (path interiors first, then pendant pairs left to right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeGadget {
    pub edge: (usize, usize),
    pub vertices: Vec<usize>,
}

/// A constructed instance plus the correspondence back to the original
/// graph. Original vertices keep their ids (`original_vertex_map` is the
/// identity into the constructed graph for vertex-preserving gadgets; for
/// the blow-up it points at the first copy in each class). Gadget vertices
/// are appended edge by edge in sorted edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub original: Graph,
    pub constructed: Graph,
    pub kind: ReductionKind,
    pub original_vertex_map: Vec<usize>,
    pub edge_gadgets: Vec<EdgeGadget>,
    /// Per original vertex: its copy class (blow-up) or attached clique
    /// (clique attachment). Empty for the path gadgets.
    pub vertex_groups: Vec<Vec<usize>>,
}

/// Replaces each edge uv with a path u-x-y-v on fresh interior vertices
/// (x adjacent to the smaller endpoint). The instance has `n + 2m` vertices
/// and `3m` edges.
pub fn subdivide_p4(g: &Graph) -> ReductionInstance {
    let n = g.vertex_count();
    let mut next = n;
    let mut edges = Vec::with_capacity(3 * g.edge_count());
    let mut gadgets = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        let (x, y) = (next, next + 1);
        next += 2;
        edges.push((u, x));
        edges.push((x, y));
        edges.push((y, v));
        gadgets.push(EdgeGadget { edge: (u, v), vertices: vec![x, y] });
    }
    ReductionInstance {
        original: g.clone(),
        constructed: Graph::new(next, edges).expect("subdivision edges are valid"),
        kind: ReductionKind::P4Subdivision,
        original_vertex_map: (0..n).collect(),
        edge_gadgets: gadgets,
        vertex_groups: Vec::new(),
    }
}

/// Replaces each edge uv with the path u-x-y-v where x and y each connect
/// to both endpoints of `t - 1` disjoint fresh edges. Adds `2 + 4(t-1)`
/// vertices and `3 + 6(t-1)` edges per original edge.
pub fn gadget_a(g: &Graph, t: usize) -> Result<ReductionInstance> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("gadget requires t >= 2, got {t}")));
    }
    let n = g.vertex_count();
    let mut next = n;
    let mut edges = Vec::new();
    let mut gadgets = Vec::new();
    for (u, v) in g.edges() {
        let (x, y) = (next, next + 1);
        next += 2;
        let mut vertices = vec![x, y];
        edges.push((u, x));
        edges.push((x, y));
        edges.push((y, v));
        for attach in [x, y] {
            for _ in 0..t - 1 {
                let (a, b) = (next, next + 1);
                next += 2;
                vertices.push(a);
                vertices.push(b);
                edges.push((a, b));
                edges.push((attach, a));
                edges.push((attach, b));
            }
        }
        gadgets.push(EdgeGadget { edge: (u, v), vertices });
    }
    Ok(ReductionInstance {
        original: g.clone(),
        constructed: Graph::new(next, edges).expect("gadget edges are valid"),
        kind: ReductionKind::GadgetA { t },
        original_vertex_map: (0..n).collect(),
        edge_gadgets: gadgets,
        vertex_groups: Vec::new(),
    })
}

/// Composition of `g` with the edgeless graph on `p` vertices: vertex `i`
/// becomes the class `{i*p, ..., i*p + p - 1}` and every edge a complete
/// p-by-p bipartite join.
pub fn blowup_compose(g: &Graph, p: usize) -> Result<ReductionInstance> {
    if p == 0 {
        return Err(Error::InvalidParameter("blow-up requires p >= 1".into()));
    }
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(g.edge_count() * p * p);
    for (u, v) in g.edges() {
        for a in 0..p {
            for b in 0..p {
                edges.push((u * p + a, v * p + b));
            }
        }
    }
    let groups: Vec<Vec<usize>> = (0..n).map(|i| (i * p..(i + 1) * p).collect()).collect();
    Ok(ReductionInstance {
        original: g.clone(),
        constructed: Graph::new(n * p, edges).expect("blow-up edges are valid"),
        kind: ReductionKind::Blowup { p },
        original_vertex_map: (0..n).map(|i| i * p).collect(),
        edge_gadgets: Vec::new(),
        vertex_groups: groups,
    })
}

/// Glues a clique of size `floor(k/2) * (d + 1)` onto every vertex of `g`,
/// identifying one clique vertex with it.
pub fn attach_cliques(g: &Graph, k: usize, d: usize) -> Result<ReductionInstance> {
    if k < 5 || d < 1 {
        return Err(Error::InvalidParameter(format!(
            "clique attachment requires k >= 5 and d >= 1, got k = {k}, d = {d}"
        )));
    }
    let n = g.vertex_count();
    let size = (k / 2) * (d + 1);
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut groups = Vec::with_capacity(n);
    for v in 0..n {
        let mut group = vec![v];
        group.extend(n + v * (size - 1)..n + (v + 1) * (size - 1));
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                edges.push((group[i], group[j]));
            }
        }
        groups.push(group);
    }
    Ok(ReductionInstance {
        original: g.clone(),
        constructed: Graph::new(n * size, edges).expect("clique edges are valid"),
        kind: ReductionKind::CliqueAttachment { k, d },
        original_vertex_map: (0..n).collect(),
        edge_gadgets: Vec::new(),
        vertex_groups: groups,
    })
}

/// Interior colors `(x, y)` completing `a-x-y-b` to a valid 1-relaxed
/// 4-coloring of the path: distinct endpoints end up with no relaxations,
/// equal endpoints with exactly one each (which is forced).
pub fn p4_internal_colors(a: usize, b: usize) -> Result<(usize, usize)> {
    if a >= 4 || b >= 4 {
        return Err(Error::InvalidParameter(format!("colors ({a}, {b}) out of range for k = 4")));
    }
    Ok(match (b + 4 - a) % 4 {
        0 => ((a + 1) % 4, (a + 3) % 4),
        1 => ((a + 2) % 4, (a + 3) % 4),
        2 => ((a + 2) % 4, a),
        3 => ((a + 2) % 4, (a + 1) % 4),
        _ => unreachable!(),
    })
}

/// Per-vertex count of same-colored neighbors (classical defect).
pub fn classical_defects(g: &Graph, f: &Coloring) -> Result<Vec<usize>> {
    if f.len() != g.vertex_count() {
        return Err(Error::InvalidInput(format!(
            "coloring covers {} vertices but the graph has {}",
            f.len(),
            g.vertex_count()
        )));
    }
    let mut defects = vec![0usize; g.vertex_count()];
    for (u, v) in g.edges() {
        if f.color(u) == f.color(v) {
            defects[u] += 1;
            defects[v] += 1;
        }
    }
    Ok(defects)
}

/// Classical (k, d)-defective validity: every vertex has at most `d`
/// neighbors of its own color.
pub fn check_classical_defective(g: &Graph, f: &Coloring, d: usize) -> Result<bool> {
    Ok(classical_defects(g, f)?.iter().all(|&c| c <= d))
}

/// Decides classical (k, d)-defective colorability with the shared solver:
/// with distance 1 the defective semantics counts exactly the same-color
/// neighbors.
pub fn decide_classical_defective(g: &Graph, k: usize, d: usize) -> Result<Option<Coloring>> {
    decide(g, &SolverConfig::defective(k, d).with_q(1))
}

fn wrong_kind(want: &str, got: ReductionKind) -> Error {
    Error::InvalidInput(format!("instance was not built by {want}, got {got:?}"))
}

/// Lifts a classical (4, 1)-defective coloring of the original graph onto
/// the subdivided instance, producing a 1-relaxed 4-coloring.
pub fn lift_p4(inst: &ReductionInstance, f: &Coloring) -> Result<Coloring> {
    if inst.kind != ReductionKind::P4Subdivision {
        return Err(wrong_kind("subdivide_p4", inst.kind));
    }
    lift_path_gadget(inst, f, 1, false)
}

/// Lifts a classical (4, t)-defective coloring of the original graph onto
/// the gadget instance, producing a t-relaxed 4-coloring.
pub fn lift_gadget_a(inst: &ReductionInstance, f: &Coloring) -> Result<Coloring> {
    let ReductionKind::GadgetA { t } = inst.kind else {
        return Err(wrong_kind("gadget_a", inst.kind));
    };
    lift_path_gadget(inst, f, t, true)
}

fn lift_path_gadget(
    inst: &ReductionInstance,
    f: &Coloring,
    t: usize,
    with_pendants: bool,
) -> Result<Coloring> {
    if f.k() != 4 {
        return Err(Error::InvalidInput(format!("source coloring must use k = 4, got {}", f.k())));
    }
    if !check_classical_defective(&inst.original, f, t)? {
        return Err(Error::InvalidInput(format!("source coloring is not (4, {t})-defective")));
    }
    let mut colors = vec![0usize; inst.constructed.vertex_count()];
    for v in 0..inst.original.vertex_count() {
        colors[inst.original_vertex_map[v]] = f.color(v);
    }
    for gadget in &inst.edge_gadgets {
        let (u, v) = gadget.edge;
        let (a, b) = (f.color(u), f.color(v));
        let (x, y) = (gadget.vertices[0], gadget.vertices[1]);
        let (cx, cy) = if a == b { ((a + 1) % 4, (a + 3) % 4) } else { p4_internal_colors(a, b)? };
        colors[x] = cx;
        colors[y] = cy;
        if with_pendants {
            // Pendant pair colors: around x they avoid relaxing x more than
            // once per pair; same around y.
            let (x_pair, y_pair) = if a == b {
                (((a + 2) % 4, (a + 3) % 4), (a, (a + 1) % 4))
            } else {
                (((cx + 1) % 4, (cx + 2) % 4), ((cy + 1) % 4, (cy + 2) % 4))
            };
            let pairs = (gadget.vertices.len() - 2) / 2;
            for (i, chunk) in gadget.vertices[2..].chunks_exact(2).enumerate() {
                let pair = if i < pairs / 2 { x_pair } else { y_pair };
                colors[chunk[0]] = pair.0;
                colors[chunk[1]] = pair.1;
            }
        }
    }
    Coloring::two_distant(4, colors)
}

/// Lifts a coloring of the original graph onto the blow-up by copying each
/// vertex's color to its whole class.
pub fn lift_blowup(inst: &ReductionInstance, f: &Coloring) -> Result<Coloring> {
    let ReductionKind::Blowup { p } = inst.kind else {
        return Err(wrong_kind("blowup_compose", inst.kind));
    };
    if f.len() != inst.original.vertex_count() {
        return Err(Error::InvalidInput("coloring does not cover the original graph".into()));
    }
    let mut colors = vec![0usize; inst.constructed.vertex_count()];
    for v in 0..f.len() {
        for j in 0..p {
            colors[v * p + j] = f.color(v);
        }
    }
    Coloring::new(f.k(), f.q(), colors)
}

/// Projects a coloring of the blow-up instance back to the original graph:
/// each vertex receives the smallest color occurring at least `t + 1` times
/// in its class. Requires the blow-up parameter `p = k*t + 1`, which
/// pigeonholes such a color into existence. When the instance coloring is
/// t-relaxed-valid, the projection has every original edge at circular
/// distance at least 2.
pub fn project_blowup(inst: &ReductionInstance, gstar: &Coloring, t: usize) -> Result<Coloring> {
    let ReductionKind::Blowup { p } = inst.kind else {
        return Err(wrong_kind("blowup_compose", inst.kind));
    };
    if p != gstar.k() * t + 1 {
        return Err(Error::InvalidInput(format!(
            "projection requires p = k*t + 1 = {}, instance has p = {p}",
            gstar.k() * t + 1
        )));
    }
    if gstar.len() != inst.constructed.vertex_count() {
        return Err(Error::InvalidInput("coloring does not cover the instance".into()));
    }
    let mut colors = Vec::with_capacity(inst.original.vertex_count());
    for group in &inst.vertex_groups {
        let mut histogram = vec![0usize; gstar.k()];
        for &w in group {
            histogram[gstar.color(w)] += 1;
        }
        let c = histogram.iter().position(|&count| count > t).ok_or_else(|| {
            Error::InternalInvariant("no color reaches multiplicity t + 1 in a class".into())
        })?;
        colors.push(c);
    }
    Coloring::two_distant(gstar.k(), colors)
}

/// Lifts a 2-distant circular k-coloring of the original graph onto the
/// clique-attachment instance: the clique on `v` receives the colors
/// `f(v), f(v)+2, ..., f(v)+k-2` (one step short for odd k), each `d + 1`
/// times, with `v` keeping `f(v)`. The result is (k, d)-defective.
pub fn lift_cliques(inst: &ReductionInstance, f: &Coloring) -> Result<Coloring> {
    let ReductionKind::CliqueAttachment { k, d } = inst.kind else {
        return Err(wrong_kind("attach_cliques", inst.kind));
    };
    if f.k() != k {
        return Err(Error::InvalidInput(format!("source coloring must use k = {k}")));
    }
    if !check_relaxed(&inst.original, f, 0)?.valid {
        return Err(Error::InvalidInput(
            "source coloring is not a 2-distant circular coloring".into(),
        ));
    }
    let mut colors = vec![0usize; inst.constructed.vertex_count()];
    for (v, group) in inst.vertex_groups.iter().enumerate() {
        let base = f.color(v);
        let steps = k / 2;
        let mut palette = Vec::with_capacity(group.len());
        for j in 0..steps {
            for _ in 0..d + 1 {
                palette.push((base + 2 * j) % k);
            }
        }
        debug_assert_eq!(palette.len(), group.len());
        // The identified vertex keeps f(v); companions take the rest of the
        // palette in order.
        colors[group[0]] = palette[0];
        for (slot, &w) in group[1..].iter().enumerate() {
            colors[w] = palette[slot + 1];
        }
    }
    Coloring::two_distant(k, colors)
}

/// Restriction of an instance coloring to the original vertices.
pub fn restrict_to_originals(inst: &ReductionInstance, g_coloring: &Coloring) -> Result<Coloring> {
    if g_coloring.len() != inst.constructed.vertex_count() {
        return Err(Error::InvalidInput("coloring does not cover the instance".into()));
    }
    let colors = inst.original_vertex_map.iter().map(|&w| g_coloring.color(w)).collect();
    Coloring::new(g_coloring.k(), g_coloring.q(), colors)
}

/// Forward color-pair collapse: `{0,1} -> 0`, `{2,3} -> 1`. Takes
/// (4/2, d)-defective colorings to classical (2, d)-defective ones.
pub fn map_42d_to_2d(f: &Coloring) -> Result<Coloring> {
    if f.k() != 4 {
        return Err(Error::InvalidInput(format!("expected a 4-coloring, got k = {}", f.k())));
    }
    Coloring::new(2, f.q(), f.colors().iter().map(|&c| c / 2).collect())
}

/// Backward color-pair expansion: `0 -> 0`, `1 -> 2`. Takes classical
/// (2, d)-defective colorings to (4/2, d)-defective ones.
pub fn map_2d_to_42d(f: &Coloring) -> Result<Coloring> {
    if f.k() != 2 {
        return Err(Error::InvalidInput(format!("expected a 2-coloring, got k = {}", f.k())));
    }
    Coloring::new(4, f.q(), f.colors().iter().map(|&c| c * 2).collect())
}
