//! Closed-form relaxed circular chromatic values and witness colorings for
//! paths, cycles and complete graphs; the separating families G5 and H(m);
//! and a seeded random outerplanar corpus generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{make_family, FamilyKind, Graph, OuterEmbedding};

fn check_family_params(kind: FamilyKind, n: usize, t: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::InvalidParameter("relaxation parameter t must be positive".into()));
    }
    match kind {
        FamilyKind::Path | FamilyKind::Cycle if n < 3 => {
            Err(Error::InvalidParameter(format!("family requires n >= 3, got {n}")))
        }
        FamilyKind::Complete if n < 1 => {
            Err(Error::InvalidParameter("complete graph requires n >= 1".into()))
        }
        FamilyKind::Empty => {
            Err(Error::InvalidParameter("no closed form for the empty family".into()))
        }
        _ => Ok(()),
    }
}

/// Closed-form t-relaxed 2-distant circular chromatic number for paths,
/// cycles and complete graphs.
pub fn closed_form_cchi(kind: FamilyKind, n: usize, t: usize) -> Result<usize> {
    check_family_params(kind, n, t)?;
    Ok(match kind {
        FamilyKind::Path => {
            if t == 1 {
                4
            } else {
                2
            }
        }
        FamilyKind::Cycle => {
            if t == 1 {
                if n == 3 {
                    5
                } else {
                    4
                }
            } else if n.is_multiple_of(2) {
                2
            } else {
                3
            }
        }
        FamilyKind::Complete => {
            if t == 1 {
                if n.is_multiple_of(2) {
                    3 * n / 2
                } else {
                    (3 * n).div_ceil(2)
                }
            } else {
                n
            }
        }
        FamilyKind::Empty => unreachable!(),
    })
}

/// A coloring witnessing `closed_form_cchi(kind, n, t)`: it uses exactly
/// that many colors and passes the relaxed verifier with bound `t`.
pub fn witness_coloring(kind: FamilyKind, n: usize, t: usize) -> Result<Coloring> {
    check_family_params(kind, n, t)?;
    let k = closed_form_cchi(kind, n, t)?;
    let colors = match kind {
        FamilyKind::Path => {
            if t == 1 {
                (0..n).map(|i| if i % 2 == 0 { 0 } else { 2 }).collect()
            } else {
                (0..n).map(|i| i % 2).collect()
            }
        }
        FamilyKind::Cycle => {
            if t == 1 {
                if n == 3 {
                    vec![0, 2, 4]
                } else if n.is_multiple_of(2) {
                    (0..n).map(|i| if i % 2 == 0 { 0 } else { 2 }).collect()
                } else {
                    // 0,2,0,2,...,0 then 1,3
                    let mut c: Vec<usize> =
                        (0..n - 2).map(|i| if i % 2 == 0 { 0 } else { 2 }).collect();
                    c.push(1);
                    c.push(3);
                    c
                }
            } else if n.is_multiple_of(2) {
                (0..n).map(|i| i % 2).collect()
            } else {
                let mut c: Vec<usize> = (0..n - 1).map(|i| i % 2).collect();
                c.push(2);
                c
            }
        }
        FamilyKind::Complete => {
            if t == 1 {
                // Pairs of consecutive colors separated by a gap: 0,1, 3,4,
                // 6,7, ... and (for odd n) the lone color 3p on top.
                (0..n).map(|i| 3 * (i / 2) + i % 2).collect()
            } else {
                (0..n).collect()
            }
        }
        FamilyKind::Empty => unreachable!(),
    };
    Coloring::two_distant(k, colors)
}

/// Vertex names of G5 in exterior-face order; index in the returned list is
/// the vertex id.
pub fn g5_vertex_names() -> Vec<String> {
    let mut names = vec!["x".to_string()];
    for i in 1..=5 {
        names.push(format!("y{i}"));
        names.push(format!("u{i}"));
        names.push(format!("v{i}"));
    }
    names.push("y6".to_string());
    names
}

/// The 17-vertex outerplanar graph whose interior faces are all 5-cycles:
/// a hub `x` joined to `y1..y6`, with paths `y_i - u_i - v_i - y_{i+1}`
/// between consecutive spokes. Vertex ids follow the exterior cycle
/// `x, y1, u1, v1, y2, ..., y5, u5, v5, y6`, so the returned embedding is
/// the identity order.
pub fn gen_g5() -> (Graph, OuterEmbedding) {
    let y = |i: usize| 3 * (i - 1) + 1; // i in 1..=6
    let u = |i: usize| 3 * (i - 1) + 2; // i in 1..=5
    let v = |i: usize| 3 * i; // i in 1..=5
    let mut edges = Vec::new();
    for i in 1..=6 {
        edges.push((0, y(i)));
    }
    for i in 1..=5 {
        edges.push((y(i), u(i)));
        edges.push((u(i), v(i)));
        edges.push((v(i), y(i + 1)));
    }
    let g = Graph::new(17, edges).expect("G5 edge list is valid");
    let emb = OuterEmbedding::new((0..17).collect());
    (g, emb)
}

/// The 1-defective 4-coloring of G5: `x` and every `u_i`, `v_i` get color 0,
/// every `y_j` gets color 2.
pub fn g5_defective_coloring() -> Coloring {
    let mut colors = vec![0usize; 17];
    for i in 1..=6 {
        colors[3 * (i - 1) + 1] = 2;
    }
    Coloring::two_distant(4, colors).expect("G5 coloring is in range")
}

/// Vertex names of H(m) in exterior-face order.
pub fn h_vertex_names(m: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(3 * (m + 1));
    for branch in ["x", "y", "z"] {
        names.push(branch.to_string());
        for i in 1..=m {
            names.push(format!("{branch}{i}"));
        }
    }
    names
}

/// The outerplanar graph H(m): a triangle `x, y, z`, three fans
/// `x-x_i`, `y-y_i`, `z-z_i`, paths along each fan rim, and the closing
/// edges `x_m-y`, `y_m-z`, `z_m-x`. Vertex ids follow the exterior order
/// `x, x_1..x_m, y, y_1..y_m, z, z_1..z_m`, so the returned embedding is
/// the identity order. H(0) is the triangle on `x, y, z`.
pub fn gen_h(m: usize) -> (Graph, OuterEmbedding) {
    let n = 3 * (m + 1);
    let x = 0;
    let y = m + 1;
    let z = 2 * m + 2;
    let xi = |i: usize| i;
    let yi = |i: usize| m + 1 + i;
    let zi = |i: usize| 2 * m + 2 + i;
    let mut edges = vec![(x, y), (y, z), (x, z)];
    for i in 1..m {
        edges.push((xi(i), xi(i + 1)));
        edges.push((yi(i), yi(i + 1)));
        edges.push((zi(i), zi(i + 1)));
    }
    for i in 1..=m {
        edges.push((x, xi(i)));
        edges.push((y, yi(i)));
        edges.push((z, zi(i)));
    }
    if m >= 1 {
        edges.push((xi(m), y));
        edges.push((yi(m), z));
        edges.push((zi(m), x));
    }
    let g = Graph::new(n, edges).expect("H(m) edge list is valid");
    let emb = OuterEmbedding::new((0..n).collect());
    (g, emb)
}

/// The witness coloring of H(2t-2) for `t >= 2`: `x, y, z` get `0, 1, 2`,
/// and for `i = 1..t-1` the rim vertices follow the fixed pattern
/// `x_{2i-1} = 2`, `x_{2i} = y_{2i-1} = 3`, `y_{2i} = z_{2i-1} = 0`,
/// `z_{2i} = 1`. The result has relaxation counts `t+1, t+1, t` on
/// `x, y, z` and passes the relaxed verifier with bound `t + 1`.
pub fn h_witness(t: usize) -> Result<Coloring> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("h_witness requires t >= 2, got {t}")));
    }
    let m = 2 * t - 2;
    let n = 3 * (m + 1);
    let mut colors = vec![0usize; n];
    colors[0] = 0; // x
    colors[m + 1] = 1; // y
    colors[2 * m + 2] = 2; // z
    for i in 1..t {
        colors[2 * i - 1] = 2; // x_{2i-1}
        colors[2 * i] = 3; // x_{2i}
        colors[m + 1 + 2 * i - 1] = 3; // y_{2i-1}
        colors[m + 1 + 2 * i] = 0; // y_{2i}
        colors[2 * m + 2 + 2 * i - 1] = 0; // z_{2i-1}
        colors[2 * m + 2 + 2 * i] = 1; // z_{2i}
    }
    Coloring::two_distant(4, colors)
}

/// Uniform random binary tree with `leaves` leaves, grown by repeatedly
/// grafting a new leaf onto a uniformly chosen node. Returns child arrays
/// (usize::MAX marks a leaf) and the root id.
fn random_binary_tree(leaves: usize, rng: &mut ChaCha8Rng) -> (Vec<usize>, Vec<usize>, usize) {
    const NONE: usize = usize::MAX;
    let total = 2 * leaves - 1;
    let mut left = vec![NONE; total];
    let mut right = vec![NONE; total];
    let mut parent = vec![NONE; total];
    let mut root = 0;
    for s in 1..leaves {
        let count = 2 * s - 1;
        let x = rng.random_range(0..count);
        let internal = count;
        let leaf = count + 1;
        let p = parent[x];
        if p == NONE {
            root = internal;
        } else if left[p] == x {
            left[p] = internal;
        } else {
            right[p] = internal;
        }
        parent[internal] = p;
        if rng.random_bool(0.5) {
            left[internal] = x;
            right[internal] = leaf;
        } else {
            left[internal] = leaf;
            right[internal] = x;
        }
        parent[x] = internal;
        parent[leaf] = internal;
    }
    (left, right, root)
}

/// Diagonals of the polygon triangulation encoded by a binary tree with
/// `n - 1` leaves, rooted at the hull edge `(0, n-1)`.
fn triangulation_diagonals(
    left: &[usize],
    right: &[usize],
    root: usize,
    n: usize,
) -> Vec<(usize, usize)> {
    const NONE: usize = usize::MAX;
    // Leaf counts by iterative post-order.
    let mut leaf_count = vec![0usize; left.len()];
    let mut stack = vec![(root, false)];
    while let Some((node, expanded)) = stack.pop() {
        if left[node] == NONE {
            leaf_count[node] = 1;
        } else if expanded {
            leaf_count[node] = leaf_count[left[node]] + leaf_count[right[node]];
        } else {
            stack.push((node, true));
            stack.push((left[node], false));
            stack.push((right[node], false));
        }
    }
    let mut diagonals = Vec::new();
    // Each internal node covering the hull arc i..j splits it at
    // m = i + leaves(left child), forming the triangle (i, m, j).
    let mut stack = vec![(root, 0usize, n - 1)];
    while let Some((node, i, j)) = stack.pop() {
        if left[node] == NONE {
            continue;
        }
        let m = i + leaf_count[left[node]];
        if m > i + 1 {
            diagonals.push((i, m));
        }
        if j > m + 1 {
            diagonals.push((m, j));
        }
        stack.push((left[node], i, m));
        stack.push((right[node], m, j));
    }
    diagonals.sort_unstable();
    diagonals.dedup();
    diagonals
}

/// Generates a random outerplanar graph on the polygon `0..n`: a uniform
/// random triangulation of the n-gon keeps all polygon edges, and each
/// diagonal survives independently with probability `edge_keep_prob`.
/// Deterministic for a fixed `(n, edge_keep_prob, seed)`. The returned
/// embedding is the polygon order.
pub fn random_outerplanar(
    n: usize,
    edge_keep_prob: f64,
    seed: u64,
) -> Result<(Graph, OuterEmbedding)> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("polygon requires n >= 3, got {n}")));
    }
    if !(0.0..=1.0).contains(&edge_keep_prob) {
        return Err(Error::InvalidParameter(format!(
            "edge_keep_prob must lie in [0, 1], got {edge_keep_prob}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (left, right, root) = random_binary_tree(n - 1, &mut rng);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for (a, b) in triangulation_diagonals(&left, &right, root, n) {
        if rng.random_bool(edge_keep_prob) {
            edges.push((a, b));
        }
    }
    let g = Graph::new(n, edges)?;
    Ok((g, OuterEmbedding::new((0..n).collect())))
}

/// Sweeps seeded polygon triangulations of increasing size, returning the
/// first one the exact solver certifies as not t-relaxed k-colorable,
/// together with its embedding and generator seed. Full triangulations are
/// the extremal outerplanar graphs, so they are the natural corpus for
/// hunting small non-colorable witnesses.
pub fn find_non_colorable_outerplanar(
    k: usize,
    t: usize,
    max_n: usize,
    seeds_per_size: u64,
) -> Result<Option<(Graph, OuterEmbedding, u64)>> {
    for n in 3..=max_n {
        for seed in 0..seeds_per_size {
            let (g, emb) = random_outerplanar(n, 1.0, seed)?;
            if crate::solver::decide(&g, &crate::solver::SolverConfig::relaxed(k, t))?.is_none() {
                return Ok(Some((g, emb, seed)));
            }
        }
    }
    Ok(None)
}

/// A named family instance, as exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Empty { n: usize },
    G5,
    H { m: usize },
}

impl FamilySpec {
    /// Builds the graph, along with its canonical outer embedding when the
    /// family carries one.
    pub fn build(&self) -> Result<(Graph, Option<OuterEmbedding>)> {
        match *self {
            FamilySpec::Path { n } => {
                let g = make_family(FamilyKind::Path, n)?;
                let emb = OuterEmbedding::new((0..n).collect());
                Ok((g, Some(emb)))
            }
            FamilySpec::Cycle { n } => {
                let g = make_family(FamilyKind::Cycle, n)?;
                let emb = OuterEmbedding::new((0..n).collect());
                Ok((g, Some(emb)))
            }
            FamilySpec::Complete { n } => Ok((make_family(FamilyKind::Complete, n)?, None)),
            FamilySpec::Empty { n } => Ok((make_family(FamilyKind::Empty, n)?, None)),
            FamilySpec::G5 => {
                let (g, emb) = gen_g5();
                Ok((g, Some(emb)))
            }
            FamilySpec::H { m } => {
                let (g, emb) = gen_h(m);
                Ok((g, Some(emb)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{check_defective, check_relaxed};
    use crate::graph::validate_outer_embedding;

    #[test]
    fn closed_forms_match_stated_values() {
        assert_eq!(closed_form_cchi(FamilyKind::Path, 5, 1).unwrap(), 4);
        assert_eq!(closed_form_cchi(FamilyKind::Path, 5, 2).unwrap(), 2);
        assert_eq!(closed_form_cchi(FamilyKind::Cycle, 3, 1).unwrap(), 5);
        assert_eq!(closed_form_cchi(FamilyKind::Cycle, 6, 1).unwrap(), 4);
        assert_eq!(closed_form_cchi(FamilyKind::Cycle, 6, 2).unwrap(), 2);
        assert_eq!(closed_form_cchi(FamilyKind::Cycle, 7, 2).unwrap(), 3);
        assert_eq!(closed_form_cchi(FamilyKind::Complete, 5, 1).unwrap(), 8);
        assert_eq!(closed_form_cchi(FamilyKind::Complete, 6, 2).unwrap(), 6);
    }

    #[test]
    fn closed_form_parameter_errors() {
        assert!(closed_form_cchi(FamilyKind::Path, 2, 1).is_err());
        assert!(closed_form_cchi(FamilyKind::Path, 3, 0).is_err());
        assert!(closed_form_cchi(FamilyKind::Empty, 3, 1).is_err());
    }

    #[test]
    fn witness_examples() {
        let w = witness_coloring(FamilyKind::Complete, 4, 1).unwrap();
        assert_eq!(w.k(), 6);
        assert_eq!(w.colors(), &[0, 1, 3, 4]);

        let w = witness_coloring(FamilyKind::Complete, 3, 1).unwrap();
        assert_eq!(w.k(), 5);
        assert_eq!(w.colors(), &[0, 1, 3]);

        let w = witness_coloring(FamilyKind::Cycle, 5, 1).unwrap();
        assert_eq!(w.k(), 4);
        assert_eq!(w.colors(), &[0, 2, 0, 1, 3]);
    }

    #[test]
    fn witnesses_verify_at_their_closed_form() {
        for kind in [FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Complete] {
            for n in 3..10 {
                for t in 1..4 {
                    let g = make_family(kind, n).unwrap();
                    let w = witness_coloring(kind, n, t).unwrap();
                    assert_eq!(w.k(), closed_form_cchi(kind, n, t).unwrap());
                    let report = check_relaxed(&g, &w, t).unwrap();
                    assert!(report.valid, "{kind:?} n={n} t={t}: {report:?}");
                }
            }
        }
    }

    #[test]
    fn g5_structure() {
        let (g, emb) = gen_g5();
        assert_eq!(g.vertex_count(), 17);
        assert_eq!(g.edge_count(), 21);
        assert!(validate_outer_embedding(&g, &emb).unwrap());
        assert_eq!(g.degree(0), 6);
        let names = g5_vertex_names();
        assert_eq!(names.len(), 17);
        assert_eq!(names[0], "x");
        assert_eq!(names[16], "y6");
    }

    #[test]
    fn g5_defective_coloring_is_one_defective() {
        let (g, _) = gen_g5();
        let f = g5_defective_coloring();
        let report = check_defective(&g, &f, 1).unwrap();
        assert!(report.valid);
    }

    #[test]
    fn h_family_structure() {
        let (h0, _) = gen_h(0);
        assert_eq!(h0.vertex_count(), 3);
        assert_eq!(h0.edge_count(), 3);

        let (h2, emb) = gen_h(2);
        assert_eq!(h2.vertex_count(), 9);
        // |N(x)| = m + 3.
        assert_eq!(h2.degree(0), 5);
        assert!(validate_outer_embedding(&h2, &emb).unwrap());

        for m in 0..8 {
            let (h, emb) = gen_h(m);
            assert_eq!(h.vertex_count(), 3 * (m + 1));
            assert!(validate_outer_embedding(&h, &emb).unwrap());
            assert_eq!(h_vertex_names(m).len(), h.vertex_count());
        }
    }

    #[test]
    fn h_witness_relaxation_profile() {
        for t in 2..6 {
            let m = 2 * t - 2;
            let (h, _) = gen_h(m);
            let f = h_witness(t).unwrap();
            let report = check_relaxed(&h, &f, t + 1).unwrap();
            assert!(report.valid, "t={t}");
            assert!(!check_relaxed(&h, &f, t).unwrap().valid);
            let (x, y, z) = (0, m + 1, 2 * m + 2);
            assert_eq!(report.relaxations[x], t + 1);
            assert_eq!(report.relaxations[y], t + 1);
            assert_eq!(report.relaxations[z], t);
        }
        assert!(h_witness(1).is_err());
    }

    #[test]
    fn h6_witness_pattern() {
        let f = h_witness(4).unwrap();
        let m = 6;
        for i in 1..4 {
            assert_eq!(f.color(2 * i - 1), 2); // x odd
            assert_eq!(f.color(2 * i), 3); // x even
            assert_eq!(f.color(m + 1 + 2 * i - 1), 3); // y odd
            assert_eq!(f.color(m + 1 + 2 * i), 0); // y even
            assert_eq!(f.color(2 * m + 2 + 2 * i - 1), 0); // z odd
            assert_eq!(f.color(2 * m + 2 + 2 * i), 1); // z even
        }
    }

    #[test]
    fn random_outerplanar_edge_cases() {
        let (g, _) = random_outerplanar(3, 1.0, 7).unwrap();
        assert_eq!(g.edge_count(), 3);

        for n in [4, 7, 12] {
            let (g, _) = random_outerplanar(n, 0.0, 11).unwrap();
            assert_eq!(g, make_family(FamilyKind::Cycle, n).unwrap());
            // Full triangulation: 2n - 3 edges.
            let (g, _) = random_outerplanar(n, 1.0, 11).unwrap();
            assert_eq!(g.edge_count(), 2 * n - 3);
        }
    }

    #[test]
    fn random_outerplanar_is_deterministic_and_valid() {
        for seed in 0..50 {
            let n = 3 + (seed as usize % 40);
            let (g1, e1) = random_outerplanar(n, 0.6, seed).unwrap();
            let (g2, e2) = random_outerplanar(n, 0.6, seed).unwrap();
            assert_eq!(g1, g2);
            assert_eq!(e1, e2);
            assert!(validate_outer_embedding(&g1, &e1).unwrap());
        }
    }

    #[test]
    fn random_outerplanar_rejects_bad_parameters() {
        assert!(random_outerplanar(2, 0.5, 0).is_err());
        assert!(random_outerplanar(5, 1.5, 0).is_err());
        assert!(random_outerplanar(5, f64::NAN, 0).is_err());
    }

    #[test]
    fn sweep_finds_a_small_non_colorable_triangulation() {
        // A triangulated hexagon already separates: six vertices suffice
        // for an outerplanar graph with no 1-relaxed 5-coloring.
        let (g, emb, _) = find_non_colorable_outerplanar(5, 1, 6, 10).unwrap().unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert!(validate_outer_embedding(&g, &emb).unwrap());
        assert!(crate::solver::decide(&g, &crate::solver::SolverConfig::relaxed(5, 1))
            .unwrap()
            .is_none());
        // Every outerplanar graph is 0-relaxed 6-colorable, and this one
        // needs exactly that.
        assert!(crate::solver::decide(&g, &crate::solver::SolverConfig::relaxed(6, 0))
            .unwrap()
            .is_some());
    }
}
