//! Circular color distance and the two relaxation semantics.
//!
//! A coloring maps every vertex to a color in `0..k`; the circular distance
//! between colors `i` and `j` is `min(|i-j|, k-|i-j|)`. An edge whose
//! endpoint colors sit at circular distance `< q` relaxes both endpoints.
//! The relaxed (starred) semantics additionally demands that adjacent
//! vertices receive distinct colors and bounds relaxations per vertex by
//! `t`; the defective semantics permits equal colors and bounds relaxations
//! by `d`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Circular distance between colors `i` and `j` on a cycle of `k` colors.
pub fn circ_dist(i: usize, j: usize, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidInput("modulus k must be at least 1".into()));
    }
    if i >= k || j >= k {
        return Err(Error::InvalidInput(format!("colors ({i}, {j}) out of range for k = {k}")));
    }
    Ok(dist(i, j, k))
}

#[inline]
pub(crate) fn dist(i: usize, j: usize, k: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(k - d)
}

/// A total assignment of colors `0..k` to vertices, carrying the modulus `k`
/// and the required circular distance `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    k: usize,
    q: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(k: usize, q: usize, colors: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("modulus k must be at least 1".into()));
        }
        if q == 0 {
            return Err(Error::InvalidParameter("distance q must be at least 1".into()));
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= k) {
            return Err(Error::InvalidParameter(format!("color {c} out of range for k = {k}")));
        }
        Ok(Coloring { k, q, colors })
    }

    /// A 2-distant coloring (`q = 2`), the default throughout.
    pub fn two_distant(k: usize, colors: Vec<usize>) -> Result<Self> {
        Coloring::new(k, 2, colors)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// The coloring with every color shifted by `+shift mod k`. Shifting
    /// preserves circular distances, hence every report field.
    pub fn rotated(&self, shift: usize) -> Coloring {
        let colors = self.colors.iter().map(|&c| (c + shift) % self.k).collect();
        Coloring { k: self.k, q: self.q, colors }
    }

    /// The coloring with every color reflected as `c -> k - 1 - c`.
    pub fn reflected(&self) -> Coloring {
        let colors = self.colors.iter().map(|&c| self.k - 1 - c).collect();
        Coloring { k: self.k, q: self.q, colors }
    }
}

/// Full diagnostics for a coloring under either semantics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringReport {
    /// Per-vertex count of neighbors at circular distance `< q`.
    pub relaxations: Vec<usize>,
    /// Maximum relaxation count over all vertices (0 for the empty graph).
    pub max_relaxations: usize,
    /// Do all adjacent vertices receive distinct colors?
    pub proper: bool,
    /// Number of vertices per color.
    pub histogram: Vec<usize>,
    /// Verdict under the semantics queried.
    pub valid: bool,
}

fn diagnostics(g: &Graph, f: &Coloring) -> Result<(Vec<usize>, bool, Vec<usize>)> {
    if f.len() != g.vertex_count() {
        return Err(Error::InvalidInput(format!(
            "coloring covers {} vertices but the graph has {}",
            f.len(),
            g.vertex_count()
        )));
    }
    let mut relax = vec![0usize; g.vertex_count()];
    let mut proper = true;
    for (u, v) in g.edges() {
        let (cu, cv) = (f.color(u), f.color(v));
        if cu == cv {
            proper = false;
        }
        if dist(cu, cv, f.k()) < f.q() {
            relax[u] += 1;
            relax[v] += 1;
        }
    }
    let mut histogram = vec![0usize; f.k()];
    for v in 0..g.vertex_count() {
        histogram[f.color(v)] += 1;
    }
    Ok((relax, proper, histogram))
}

/// Verifies `f` as a t-relaxed q-distant circular coloring of `g`: adjacent
/// vertices must receive distinct colors and no vertex may have more than
/// `t` neighbors at circular distance `< q`. The report is fully populated
/// even when invalid.
pub fn check_relaxed(g: &Graph, f: &Coloring, t: usize) -> Result<ColoringReport> {
    let (relaxations, proper, histogram) = diagnostics(g, f)?;
    let max_relaxations = relaxations.iter().copied().max().unwrap_or(0);
    let valid = proper && max_relaxations <= t;
    Ok(ColoringReport { relaxations, max_relaxations, proper, histogram, valid })
}

/// Verifies `f` as a d-defective q-distant circular coloring of `g`: equal
/// colors on adjacent vertices are permitted (they count as relaxations),
/// and no vertex may have more than `d` neighbors at circular distance
/// `< q`.
pub fn check_defective(g: &Graph, f: &Coloring, d: usize) -> Result<ColoringReport> {
    let (relaxations, proper, histogram) = diagnostics(g, f)?;
    let max_relaxations = relaxations.iter().copied().max().unwrap_or(0);
    let valid = max_relaxations <= d;
    Ok(ColoringReport { relaxations, max_relaxations, proper, histogram, valid })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilyKind};

    #[test]
    fn circular_distance_basics() {
        assert_eq!(circ_dist(0, 3, 4).unwrap(), 1);
        assert_eq!(circ_dist(1, 4, 5).unwrap(), 2);
        for k in 1..8 {
            for a in 0..k {
                assert_eq!(circ_dist(a, a, k).unwrap(), 0);
                for b in 0..k {
                    let d = circ_dist(a, b, k).unwrap();
                    assert_eq!(d, circ_dist(b, a, k).unwrap());
                    assert!(d <= k / 2);
                }
            }
        }
        assert!(circ_dist(4, 0, 4).is_err());
        assert!(circ_dist(0, 0, 0).is_err());
    }

    #[test]
    fn relaxed_triangle_with_five_colors() {
        let c3 = make_family(FamilyKind::Cycle, 3).unwrap();
        let f = Coloring::two_distant(5, vec![0, 2, 4]).unwrap();
        let report = check_relaxed(&c3, &f, 1).unwrap();
        assert!(report.valid);
        assert_eq!(report.relaxations, vec![1, 0, 1]);
        assert_eq!(report.max_relaxations, 1);
        assert!(report.proper);
    }

    #[test]
    fn equal_colors_on_edge_are_never_relaxed_valid() {
        let k2 = make_family(FamilyKind::Complete, 2).unwrap();
        let f = Coloring::two_distant(4, vec![0, 0]).unwrap();
        for t in 0..5 {
            let report = check_relaxed(&k2, &f, t).unwrap();
            assert!(!report.valid);
            assert!(!report.proper);
        }
    }

    #[test]
    fn exact_distance_two_gives_zero_relaxations() {
        let p3 = make_family(FamilyKind::Path, 3).unwrap();
        let f = Coloring::two_distant(4, vec![0, 2, 0]).unwrap();
        let report = check_relaxed(&p3, &f, 0).unwrap();
        assert!(report.valid);
        assert_eq!(report.relaxations, vec![0, 0, 0]);
    }

    #[test]
    fn defective_allows_equal_colors() {
        let k2 = make_family(FamilyKind::Complete, 2).unwrap();
        let f = Coloring::two_distant(4, vec![0, 0]).unwrap();
        let report = check_defective(&k2, &f, 1).unwrap();
        assert!(report.valid);
        assert_eq!(report.relaxations, vec![1, 1]);

        let c3 = make_family(FamilyKind::Cycle, 3).unwrap();
        let f = Coloring::two_distant(4, vec![0, 0, 0]).unwrap();
        let report = check_defective(&c3, &f, 1).unwrap();
        assert!(!report.valid);
        assert_eq!(report.max_relaxations, 2);
    }

    #[test]
    fn partial_coloring_is_rejected() {
        let p3 = make_family(FamilyKind::Path, 3).unwrap();
        let f = Coloring::two_distant(4, vec![0, 2]).unwrap();
        assert!(matches!(check_relaxed(&p3, &f, 1), Err(Error::InvalidInput(_))));
        assert!(matches!(check_defective(&p3, &f, 1), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn out_of_range_color_rejected_at_construction() {
        assert!(Coloring::two_distant(4, vec![0, 4]).is_err());
        assert!(Coloring::new(0, 2, vec![]).is_err());
        assert!(Coloring::new(4, 0, vec![]).is_err());
    }

    #[test]
    fn small_k_relaxations_equal_degree() {
        // For k <= 3 and q = 2 every circular distance is < 2, so each
        // vertex is relaxed once per neighbor no matter the coloring.
        let c4 = make_family(FamilyKind::Cycle, 4).unwrap();
        for k in 1..=3 {
            let f = Coloring::two_distant(k, vec![0, k - 1, 0, k - 1]).unwrap();
            let report = check_defective(&c4, &f, 2).unwrap();
            for v in 0..4 {
                assert_eq!(report.relaxations[v], c4.degree(v));
            }
            assert!(report.valid);
        }
    }

    #[test]
    fn histogram_and_relaxation_sum_invariants() {
        let g = make_family(FamilyKind::Cycle, 5).unwrap();
        let f = Coloring::two_distant(4, vec![0, 2, 0, 1, 3]).unwrap();
        let report = check_relaxed(&g, &f, 1).unwrap();
        assert_eq!(report.histogram.iter().sum::<usize>(), 5);
        let violating = g
            .edges()
            .filter(|&(u, v)| dist(f.color(u), f.color(v), f.k()) < f.q())
            .count();
        assert_eq!(report.relaxations.iter().sum::<usize>(), 2 * violating);
    }

    #[test]
    fn rotation_and_reflection_preserve_reports() {
        let g = make_family(FamilyKind::Cycle, 5).unwrap();
        let f = Coloring::two_distant(4, vec![0, 2, 0, 1, 3]).unwrap();
        let base = check_relaxed(&g, &f, 1).unwrap();
        for shift in 0..4 {
            let r = check_relaxed(&g, &f.rotated(shift), 1).unwrap();
            assert_eq!(r.relaxations, base.relaxations);
            assert_eq!(r.valid, base.valid);
        }
        let refl = check_relaxed(&g, &f.reflected(), 1).unwrap();
        assert_eq!(refl.relaxations, base.relaxations);
        assert_eq!(refl.valid, base.valid);
    }
}
