//! Exact decision of relaxed/defective circular colorability by
//! backtracking, minimum-k computation, and universally quantified checks
//! over all valid colorings.
//!
//! The search assigns vertices in id order and colors in ascending order,
//! maintaining per-vertex relaxation counts against the colored prefix for
//! pruning. `decide` therefore returns the lexicographically smallest valid
//! assignment when one exists. Every solve call is single-threaded and
//! deterministic.

use crate::coloring::{dist, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which verifier the solver targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Semantics {
    /// Proper coloring with at most `bound` neighbors at circular distance
    /// `< q` per vertex.
    RelaxedStar,
    /// Equal adjacent colors allowed; at most `bound` neighbors at circular
    /// distance `< q` per vertex.
    Defective,
}

/// Default budget of color-assignment attempts per solve call.
pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub semantics: Semantics,
    /// Number of colors.
    pub k: usize,
    /// Required circular distance. 2 throughout; 1 turns the defective
    /// semantics into classical same-color defect counting and the relaxed
    /// semantics into plain proper coloring.
    pub q: usize,
    /// The relaxation budget `t` (relaxed) or `d` (defective).
    pub bound: usize,
    pub node_limit: u64,
}

impl SolverConfig {
    /// t-relaxed 2-distant circular k-coloring.
    pub fn relaxed(k: usize, t: usize) -> Self {
        SolverConfig { semantics: Semantics::RelaxedStar, k, q: 2, bound: t, node_limit: DEFAULT_NODE_LIMIT }
    }

    /// d-defective 2-distant circular k-coloring.
    pub fn defective(k: usize, d: usize) -> Self {
        SolverConfig { semantics: Semantics::Defective, k, q: 2, bound: d, node_limit: DEFAULT_NODE_LIMIT }
    }

    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = limit;
        self
    }

    pub fn with_q(mut self, q: usize) -> Self {
        self.q = q;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidParameter("modulus k must be at least 1".into()));
        }
        if self.q == 0 {
            return Err(Error::InvalidParameter("distance q must be at least 1".into()));
        }
        Ok(())
    }
}

/// Predicates evaluated over the per-vertex relaxation counts of a complete
/// valid coloring. Both are invariant under rotation and reflection of the
/// colors, which licenses the symmetry reduction in `forall_valid_colorings`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringPredicate {
    EveryVertexRelaxedAtLeast(usize),
    NoVertexRelaxedMoreThan(usize),
}

impl ColoringPredicate {
    fn eval(&self, relaxations: &[usize]) -> bool {
        match *self {
            ColoringPredicate::EveryVertexRelaxedAtLeast(x) => {
                relaxations.iter().all(|&r| r >= x)
            }
            ColoringPredicate::NoVertexRelaxedMoreThan(x) => relaxations.iter().all(|&r| r <= x),
        }
    }
}

const UNCOLORED: usize = usize::MAX;

/// Fixed-capacity vertex set used for conflict tracking.
#[derive(Clone)]
struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    fn new(n: usize) -> Self {
        VertexSet { words: vec![0; n.div_ceil(64)] }
    }

    fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    fn union(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    fn max(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some(i * 64 + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }
}

enum Step {
    Found,
    /// Dead subtree; `conflicts` holds every assigned vertex whose color
    /// contributed to some failure inside it.
    Fail(VertexSet),
}

/// A constraint-dense search order: repeatedly take the vertex with the
/// most already-ordered neighbors (ties: higher degree, then smaller id).
/// Keeps the active search region connected so that refutations stay local
/// instead of being re-proved under every assignment of an unrelated part.
fn constraint_dense_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut ordered = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !ordered[v])
            .max_by_key(|&v| (weight[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("an unordered vertex remains");
        ordered[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !ordered[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    q: usize,
    bound: usize,
    proper: bool,
    /// Assignment order: `order[depth]` is the vertex decided at `depth`.
    order: Vec<usize>,
    /// Inverse of `order`.
    position: Vec<usize>,
    colors: Vec<usize>,
    relax: Vec<usize>,
    /// Per vertex: search positions of the assigned vertices currently
    /// relaxing it. Assignments are made and undone in position order, so
    /// each list behaves as a stack.
    relaxers: Vec<Vec<usize>>,
    /// Cap (inclusive) on colors tried per vertex; `k - 1` when unrestricted.
    color_cap: Vec<usize>,
    /// Pinned color per vertex, if any.
    pin: Vec<usize>,
    nodes: u64,
    node_limit: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, cfg: &SolverConfig, order: Vec<usize>) -> Self {
        let n = g.vertex_count();
        let mut position = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        Search {
            g,
            k: cfg.k,
            q: cfg.q,
            bound: cfg.bound,
            proper: cfg.semantics == Semantics::RelaxedStar,
            order,
            position,
            colors: vec![UNCOLORED; n],
            relax: vec![0; n],
            relaxers: vec![Vec::new(); n],
            color_cap: vec![cfg.k - 1; n],
            pin: vec![UNCOLORED; n],
            nodes: 0,
            node_limit: cfg.node_limit,
        }
    }

    /// Restrict the first vertex of each component to colors `0..=k/2`.
    /// Sound only when the caller quantifies over a rotation/reflection
    /// invariant property.
    fn restrict_component_firsts(&mut self) {
        for comp in self.g.components() {
            self.color_cap[comp[0]] = (self.k - 1).min(self.k / 2);
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            Err(Error::NodeLimitExceeded { limit: self.node_limit })
        } else {
            Ok(())
        }
    }

    /// Attempts to color `v` with `c` against the colored prefix. On
    /// rejection nothing is mutated and the search positions of the
    /// assigned vertices responsible are added to `conflicts`: the
    /// offending neighbor for properness, the full set of short-distance
    /// neighbors when `v`'s own budget would overflow, or an overflowing
    /// neighbor together with its current relaxers.
    fn try_assign(&mut self, v: usize, c: usize, conflicts: &mut VertexSet) -> bool {
        let mut added = 0;
        for &u in self.g.neighbors(v) {
            let cu = self.colors[u];
            if cu == UNCOLORED {
                continue;
            }
            if self.proper && cu == c {
                conflicts.insert(self.position[u]);
                return false;
            }
            if dist(cu, c, self.k) < self.q {
                if self.relax[u] + 1 > self.bound {
                    conflicts.insert(self.position[u]);
                    for &w in &self.relaxers[u] {
                        conflicts.insert(w);
                    }
                    return false;
                }
                added += 1;
                if added > self.bound {
                    for &w in self.g.neighbors(v) {
                        let cw = self.colors[w];
                        if cw != UNCOLORED && dist(cw, c, self.k) < self.q {
                            conflicts.insert(self.position[w]);
                        }
                    }
                    return false;
                }
            }
        }
        for &u in self.g.neighbors(v) {
            let cu = self.colors[u];
            if cu != UNCOLORED && dist(cu, c, self.k) < self.q {
                self.relax[u] += 1;
                self.relaxers[u].push(self.position[v]);
                self.relaxers[v].push(self.position[u]);
            }
        }
        self.relax[v] = added;
        self.colors[v] = c;
        true
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = UNCOLORED;
        for &u in self.g.neighbors(v) {
            let cu = self.colors[u];
            if cu != UNCOLORED && dist(cu, c, self.k) < self.q {
                self.relax[u] -= 1;
                self.relaxers[u].pop();
            }
        }
        self.relax[v] = 0;
        self.relaxers[v].clear();
    }

    fn candidate_range(&self, v: usize) -> (usize, usize) {
        if self.pin[v] != UNCOLORED {
            (self.pin[v], self.pin[v])
        } else {
            (0, self.color_cap[v])
        }
    }

    /// Depth-first search for some valid coloring in the configured order,
    /// with conflict-directed backjumping: when a subtree fails without the
    /// current vertex in any of its conflicts, no other color here can
    /// repair it and the failure propagates unchanged. Only provably dead
    /// branches are skipped.
    fn find_first(&mut self, depth: usize) -> Result<Step> {
        if depth == self.g.vertex_count() {
            return Ok(Step::Found);
        }
        let v = self.order[depth];
        let mut conflicts = VertexSet::new(self.g.vertex_count());
        let (lo, hi) = self.candidate_range(v);
        for c in lo..=hi {
            self.tick()?;
            if !self.try_assign(v, c, &mut conflicts) {
                continue;
            }
            match self.find_first(depth + 1)? {
                Step::Found => return Ok(Step::Found),
                Step::Fail(mut sub) => {
                    self.unassign(v);
                    if sub.max() != Some(depth) {
                        return Ok(Step::Fail(sub));
                    }
                    sub.remove(depth);
                    conflicts.union(&sub);
                }
            }
        }
        Ok(Step::Fail(conflicts))
    }

    /// Enumerates every valid coloring (pruned exactly: a partial coloring
    /// survives iff it extends to valid ones) and returns false as soon as
    /// one violates the predicate. Plain chronological backtracking:
    /// backjumping would be unsound for enumeration.
    fn check_all(&mut self, depth: usize, pred: ColoringPredicate) -> Result<bool> {
        if depth == self.g.vertex_count() {
            return Ok(pred.eval(&self.relax));
        }
        let v = self.order[depth];
        let mut scratch = VertexSet::new(self.g.vertex_count());
        let (lo, hi) = self.candidate_range(v);
        for c in lo..=hi {
            self.tick()?;
            if self.try_assign(v, c, &mut scratch) {
                let ok = self.check_all(depth + 1, pred)?;
                self.unassign(v);
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// One satisfiability run in the constraint-dense order, drawing on a
/// shared node budget. Returns the witness assignment if one exists.
fn solve_once(
    g: &Graph,
    cfg: &SolverConfig,
    order: &[usize],
    pins: &[usize],
    nodes_used: &mut u64,
) -> Result<Option<Vec<usize>>> {
    let mut search = Search::new(g, cfg, order.to_vec());
    search.node_limit = cfg.node_limit.saturating_sub(*nodes_used);
    search.pin.copy_from_slice(pins);
    let outcome = search.find_first(0);
    *nodes_used += search.nodes;
    match outcome {
        Err(Error::NodeLimitExceeded { .. }) => {
            Err(Error::NodeLimitExceeded { limit: cfg.node_limit })
        }
        Err(e) => Err(e),
        Ok(Step::Found) => Ok(Some(search.colors)),
        Ok(Step::Fail(_)) => Ok(None),
    }
}

/// Decides whether `g` admits a valid coloring under `cfg`, returning the
/// lexicographically smallest one (vertex 0 first, colors ascending) or
/// `None`. Exceeding the node budget is an error, never a silent `None`.
///
/// Internally this first settles satisfiability with a constraint-dense
/// search order, then minimizes the witness by walking the vertices in id
/// order and pinning each to the smallest color that keeps the instance
/// satisfiable. The result is the unique lexicographic minimum, so the
/// internal order never shows.
pub fn decide(g: &Graph, cfg: &SolverConfig) -> Result<Option<Coloring>> {
    cfg.validate()?;
    let order = constraint_dense_order(g);
    let mut nodes_used = 0u64;
    let Some(mut best) = solve_once(g, cfg, &order, &vec![UNCOLORED; g.vertex_count()], &mut nodes_used)?
    else {
        return Ok(None);
    };
    let mut pins = vec![UNCOLORED; g.vertex_count()];
    for v in 0..g.vertex_count() {
        for c in 0..best[v] {
            pins[v] = c;
            if let Some(witness) = solve_once(g, cfg, &order, &pins, &mut nodes_used)? {
                best = witness;
                break;
            }
        }
        // Either the loop pinned a smaller feasible color, or the current
        // witness color is already the smallest; `best` satisfies the pins
        // in both cases.
        pins[v] = best[v];
    }
    Ok(Some(Coloring::new(cfg.k, cfg.q, best)?))
}

/// True iff every coloring accepted by the `cfg` verifier satisfies the
/// predicate; vacuously true when no valid coloring exists. The first
/// vertex of each component is restricted to colors `0..=k/2`, which is
/// sound because validity and both predicates are invariant under rotation
/// and reflection of the colors.
pub fn forall_valid_colorings(
    g: &Graph,
    cfg: &SolverConfig,
    pred: ColoringPredicate,
) -> Result<bool> {
    cfg.validate()?;
    let mut search = Search::new(g, cfg, (0..g.vertex_count()).collect());
    search.restrict_component_firsts();
    search.check_all(0, pred)
}

/// `forall_valid_colorings` with some vertices pinned to fixed colors.
/// Pinning breaks color symmetry, so no restriction is applied.
pub fn forall_valid_colorings_pinned(
    g: &Graph,
    cfg: &SolverConfig,
    pins: &[(usize, usize)],
    pred: ColoringPredicate,
) -> Result<bool> {
    cfg.validate()?;
    let mut search = Search::new(g, cfg, (0..g.vertex_count()).collect());
    for &(v, c) in pins {
        if v >= g.vertex_count() || c >= cfg.k {
            return Err(Error::InvalidInput(format!("pin ({v}, {c}) out of range")));
        }
        search.pin[v] = c;
    }
    search.check_all(0, pred)
}

/// Smallest `k` for which `decide` succeeds with the given semantics and
/// bound. Ascends from 1 (defective, or relaxed on edgeless graphs) or 2
/// (relaxed otherwise); termination is guaranteed because doubling a proper
/// coloring (color `c` to `2c` with `2 chi(g)` colors) has every edge at
/// circular distance at least 2.
pub fn min_k(g: &Graph, semantics: Semantics, bound: usize) -> Result<usize> {
    let start = match semantics {
        Semantics::Defective => 1,
        Semantics::RelaxedStar => {
            if g.edge_count() == 0 {
                1
            } else {
                2
            }
        }
    };
    let ceiling = 2 * g.vertex_count().max(1);
    for k in start..=ceiling {
        let cfg = match semantics {
            Semantics::RelaxedStar => SolverConfig::relaxed(k, bound),
            Semantics::Defective => SolverConfig::defective(k, bound),
        };
        if decide(g, &cfg)?.is_some() {
            return Ok(k);
        }
    }
    Err(Error::InternalInvariant(format!(
        "no valid coloring found up to k = {ceiling}, beyond the theoretical ceiling"
    )))
}

/// Chromatic number via the same backtracking engine: with `q = 1` the
/// relaxed semantics degenerates to plain proper coloring.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    for k in 1..=g.vertex_count().max(1) {
        let cfg = SolverConfig::relaxed(k, 0).with_q(1);
        if decide(g, &cfg)?.is_some() {
            return Ok(k);
        }
    }
    Err(Error::InternalInvariant("graph not properly colorable with n colors".into()))
}
