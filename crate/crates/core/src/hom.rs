//! Exact backtracking search for graph homomorphisms and isomorphisms.
//!
//! One kernel serves every search in the crate. Each source vertex carries a
//! candidate set (a bitset over target vertices). Assigning `x ↦ y` collapses
//! the candidate set of `x` and arc consistency then removes every candidate
//! `y'` of a neighbour `z` that has no neighbour left in the candidate set of
//! the vertex it is adjacent to. In isomorphism mode the kernel also enforces
//! injectivity and maps non-edges to non-edges.
//!
//! The next variable is the unassigned vertex with the most assigned
//! neighbours; ties go to the smaller candidate set, then to the smaller id.
//! Candidates are tried in ascending order, so every search is deterministic.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Default node-expansion cap for a single search.
pub const DEFAULT_EXPANSIONS: u64 = 100_000_000;

/// Environment variable that overrides [`DEFAULT_EXPANSIONS`].
pub const BUDGET_ENV: &str = "GP_ORACLE_BUDGET";

/// A total map between vertex sets. Serializes as a JSON array where index is
/// the vertex id and value its image.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexMap(Vec<usize>);

impl VertexMap {
    pub fn new(images: Vec<usize>) -> Self {
        Self(images)
    }

    pub fn identity(order: usize) -> Self {
        Self((0..order).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    /// `self ∘ inner`: first apply `inner`, then `self`.
    pub fn compose(&self, inner: &VertexMap) -> VertexMap {
        VertexMap(inner.0.iter().map(|&v| self.0[v]).collect())
    }

    /// Sorted, deduplicated image.
    pub fn image_set(&self) -> Vec<usize> {
        let mut img = self.0.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    pub fn is_injective(&self) -> bool {
        self.image_set().len() == self.0.len()
    }

    /// Every edge `{a,b}` of `source` maps to an edge of `target`.
    pub fn is_homomorphism(&self, source: &SimpleGraph, target: &SimpleGraph) -> bool {
        self.0.len() == source.order()
            && self.0.iter().all(|&y| y < target.order())
            && source
                .edges()
                .into_iter()
                .all(|(a, b)| target.has_edge(self.0[a], self.0[b]))
    }

    /// A bijective homomorphism between graphs with equal edge counts.
    pub fn is_isomorphism(&self, source: &SimpleGraph, target: &SimpleGraph) -> bool {
        source.order() == target.order()
            && source.size() == target.size()
            && self.is_injective()
            && self.is_homomorphism(source, target)
    }
}

impl From<Vec<usize>> for VertexMap {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

/// Caps on a single search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_expansions: u64,
    pub max_time: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_expansions: DEFAULT_EXPANSIONS,
            max_time: None,
        }
    }
}

impl SearchBudget {
    pub fn expansions(max_expansions: u64) -> Self {
        Self {
            max_expansions: max_expansions.max(1),
            max_time: None,
        }
    }

    /// The default budget, overridden by `GP_ORACLE_BUDGET` when it parses as a positive integer.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .filter(|&b| b > 0)
            .map(Self::expansions)
            .unwrap_or_default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    Homomorphism,
    Isomorphism,
}

/// Whether the solution callback wants more solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flow {
    Continue,
    Stop,
}

struct Kernel<'a> {
    source: &'a SimpleGraph,
    mode: Mode,
    words: usize,
    target_nbrs: Vec<u64>,
    target_non_nbrs: Vec<u64>,
    assignment: Vec<usize>,
    assigned_nbrs: Vec<u32>,
    levels: Vec<Vec<u64>>,
    expansions: u64,
    budget: SearchBudget,
    started: Instant,
}

const UNASSIGNED: usize = usize::MAX;

impl<'a> Kernel<'a> {
    fn new(source: &'a SimpleGraph, target: &SimpleGraph, mode: Mode, budget: SearchBudget) -> Self {
        let words = target.order().div_ceil(64).max(1);
        let mut target_nbrs = vec![0u64; target.order() * words];
        for y in 0..target.order() {
            for &w in target.neighbors(y) {
                target_nbrs[y * words + w / 64] |= 1 << (w % 64);
            }
        }
        let mut target_non_nbrs = Vec::new();
        if mode == Mode::Isomorphism {
            target_non_nbrs = vec![0u64; target.order() * words];
            for y in 0..target.order() {
                for w in 0..target.order() {
                    if w != y && !target.has_edge(y, w) {
                        target_non_nbrs[y * words + w / 64] |= 1 << (w % 64);
                    }
                }
            }
        }
        let n = source.order();
        Self {
            source,
            mode,
            words,
            target_nbrs,
            target_non_nbrs,
            assignment: vec![UNASSIGNED; n],
            assigned_nbrs: vec![0; n],
            levels: vec![vec![0u64; n * words]; n + 1],
            expansions: 0,
            budget,
            started: Instant::now(),
        }
    }

    fn domain<'b>(&self, doms: &'b [u64], v: usize) -> &'b [u64] {
        &doms[v * self.words..(v + 1) * self.words]
    }

    fn count(&self, doms: &[u64], v: usize) -> u32 {
        self.domain(doms, v).iter().map(|w| w.count_ones()).sum()
    }

    fn tick(&mut self) -> Result<()> {
        self.expansions += 1;
        if self.expansions > self.budget.max_expansions {
            return Err(Error::BudgetExhausted {
                expansions: self.expansions - 1,
            });
        }
        if let Some(limit) = self.budget.max_time {
            if self.expansions.is_multiple_of(4096) && self.started.elapsed() > limit {
                return Err(Error::BudgetExhausted {
                    expansions: self.expansions,
                });
            }
        }
        Ok(())
    }

    /// Restrict the domain of `z` to `mask`; returns (changed, empty).
    fn restrict(words: usize, doms: &mut [u64], z: usize, mask: &[u64]) -> (bool, bool) {
        let dz = &mut doms[z * words..(z + 1) * words];
        let mut changed = false;
        let mut any = false;
        for (d, m) in dz.iter_mut().zip(mask) {
            let nd = *d & m;
            changed |= nd != *d;
            any |= nd != 0;
            *d = nd;
        }
        (changed, !any)
    }

    /// Arc consistency over the source edges, seeded with `queue`. Returns false on a wipe-out.
    fn propagate(&self, doms: &mut [u64], mut queue: Vec<usize>) -> bool {
        let w = self.words;
        let mut in_queue = vec![false; self.source.order()];
        for &v in &queue {
            in_queue[v] = true;
        }
        let mut support = vec![0u64; w];
        while let Some(z) = queue.pop() {
            in_queue[z] = false;
            support.iter_mut().for_each(|s| *s = 0);
            for (wi, &word) in self.domain(doms, z).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let y = wi * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    for (s, m) in support.iter_mut().zip(&self.target_nbrs[y * w..(y + 1) * w]) {
                        *s |= m;
                    }
                }
            }
            for &t in self.source.neighbors(z) {
                if self.assignment[t] != UNASSIGNED {
                    continue;
                }
                let (changed, empty) = Self::restrict(w, doms, t, &support);
                if empty {
                    return false;
                }
                if changed && !in_queue[t] {
                    in_queue[t] = true;
                    queue.push(t);
                }
            }
        }
        true
    }

    fn pick_variable(&self, doms: &[u64]) -> Option<usize> {
        let mut best: Option<(usize, u32, u32)> = None;
        for v in 0..self.source.order() {
            if self.assignment[v] != UNASSIGNED {
                continue;
            }
            let nb = self.assigned_nbrs[v];
            let size = self.count(doms, v);
            let better = match best {
                None => true,
                Some((_, bnb, bsize)) => nb > bnb || (nb == bnb && size < bsize),
            };
            if better {
                best = Some((v, nb, size));
            }
        }
        best.map(|b| b.0)
    }

    fn search(&mut self, depth: usize, cb: &mut dyn FnMut(&[usize]) -> Flow) -> Result<Flow> {
        let Some(var) = self.pick_variable(&self.levels[depth]) else {
            return Ok(cb(&self.assignment));
        };
        let w = self.words;
        let candidates: Vec<usize> = {
            let dom = self.domain(&self.levels[depth], var);
            let mut c = Vec::new();
            for (wi, &word) in dom.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    c.push(wi * 64 + bits.trailing_zeros() as usize);
                    bits &= bits - 1;
                }
            }
            c
        };
        for y in candidates {
            self.tick()?;
            let (head, tail) = self.levels.split_at_mut(depth + 1);
            let child = &mut tail[0];
            child.copy_from_slice(&head[depth]);
            let dv = &mut child[var * w..(var + 1) * w];
            dv.iter_mut().for_each(|x| *x = 0);
            dv[y / 64] = 1 << (y % 64);
            let mut child_doms = std::mem::take(child);
            self.assignment[var] = y;
            let ok = self.assign_effects(&mut child_doms, var, y);
            self.levels[depth + 1] = child_doms;
            if ok {
                for &z in self.source.neighbors(var) {
                    self.assigned_nbrs[z] += 1;
                }
                let flow = self.search(depth + 1, cb);
                for &z in self.source.neighbors(var) {
                    self.assigned_nbrs[z] -= 1;
                }
                self.assignment[var] = UNASSIGNED;
                if flow? == Flow::Stop {
                    return Ok(Flow::Stop);
                }
            } else {
                self.assignment[var] = UNASSIGNED;
            }
        }
        Ok(Flow::Continue)
    }

    fn assign_effects(&self, doms: &mut [u64], var: usize, y: usize) -> bool {
        let w = self.words;
        if self.mode == Mode::Isomorphism {
            let mut touched = Vec::new();
            let mut is_nbr = vec![false; self.source.order()];
            for &z in self.source.neighbors(var) {
                is_nbr[z] = true;
            }
            for z in 0..self.source.order() {
                if z == var || self.assignment[z] != UNASSIGNED {
                    continue;
                }
                let mask = if is_nbr[z] {
                    &self.target_nbrs[y * w..(y + 1) * w]
                } else {
                    &self.target_non_nbrs[y * w..(y + 1) * w]
                };
                let (changed, empty) = Self::restrict(w, doms, z, mask);
                if empty {
                    return false;
                }
                if changed {
                    touched.push(z);
                }
            }
            touched.push(var);
            self.propagate(doms, touched)
        } else {
            self.propagate(doms, vec![var])
        }
    }
}

/// Runs the kernel with initial candidate sets `allowed(v, y)`.
pub(crate) fn run_search(
    source: &SimpleGraph,
    target: &SimpleGraph,
    mode: Mode,
    budget: SearchBudget,
    allowed: &dyn Fn(usize, usize) -> bool,
    cb: &mut dyn FnMut(&[usize]) -> Flow,
) -> Result<()> {
    let mut kernel = Kernel::new(source, target, mode, budget);
    let w = kernel.words;
    let mut root = std::mem::take(&mut kernel.levels[0]);
    for v in 0..source.order() {
        let mut any = false;
        for y in 0..target.order() {
            if allowed(v, y) {
                root[v * w + y / 64] |= 1 << (y % 64);
                any = true;
            }
        }
        if !any {
            return Ok(());
        }
    }
    let seeds = (0..source.order()).collect();
    if !kernel.propagate(&mut root, seeds) {
        return Ok(());
    }
    kernel.levels[0] = root;
    kernel.search(0, cb)?;
    Ok(())
}

fn first_solution(
    source: &SimpleGraph,
    target: &SimpleGraph,
    mode: Mode,
    budget: SearchBudget,
    allowed: &dyn Fn(usize, usize) -> bool,
) -> Result<Option<VertexMap>> {
    let mut found = None;
    run_search(source, target, mode, budget, allowed, &mut |a| {
        found = Some(VertexMap(a.to_vec()));
        Flow::Stop
    })?;
    if let Some(f) = &found {
        debug_assert!(f.is_homomorphism(source, target));
        if !f.is_homomorphism(source, target) {
            return Err(Error::Domain("kernel returned a non-homomorphism".into()));
        }
    }
    Ok(found)
}

/// Searches for a homomorphism `g → h` extending `partial` (pairs `(v, image)`).
///
/// `Ok(None)` means the search completed without finding one. Budget
/// exhaustion is reported as [`Error::BudgetExhausted`].
pub fn find_homomorphism(
    g: &SimpleGraph,
    h: &SimpleGraph,
    partial: &[(usize, usize)],
    budget: SearchBudget,
) -> Result<Option<VertexMap>> {
    let mut fixed = vec![None; g.order()];
    for &(v, y) in partial {
        if v >= g.order() || y >= h.order() {
            return Err(Error::Precondition(format!("partial pair ({v},{y}) out of range")));
        }
        if fixed[v].is_some_and(|prev| prev != y) {
            return Err(Error::Precondition(format!("vertex {v} assigned twice")));
        }
        fixed[v] = Some(y);
    }
    for (a, b) in g.edges() {
        if let (Some(x), Some(y)) = (fixed[a], fixed[b]) {
            if !h.has_edge(x, y) {
                return Err(Error::Precondition(format!(
                    "partial map sends edge ({a},{b}) to non-edge ({x},{y})"
                )));
            }
        }
    }
    first_solution(g, h, Mode::Homomorphism, budget, &|v, y| {
        fixed[v].is_none_or(|f| f == y)
    })
}

/// An endomorphism of `g` whose image misses at least one vertex, if any exists.
///
/// `g` is a core iff this returns `None`: a proper core is a retract, so a
/// non-core has an endomorphism avoiding some vertex, and conversely such an
/// endomorphism is not an automorphism.
pub fn non_surjective_endomorphism(
    g: &SimpleGraph,
    budget: SearchBudget,
) -> Result<Option<VertexMap>> {
    for avoid in 0..g.order() {
        if let Some(f) = first_solution(g, g, Mode::Homomorphism, budget, &|_, y| y != avoid)? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// True iff every endomorphism of `g` is an automorphism.
pub fn is_core_oracle(g: &SimpleGraph, budget: SearchBudget) -> Result<bool> {
    Ok(non_surjective_endomorphism(g, budget)?.is_none())
}

/// True iff `f` is an endomorphism of `g` with image inside `target` that fixes `target` pointwise.
pub fn verify_retraction(g: &SimpleGraph, f: &VertexMap, target: &[usize]) -> bool {
    let mut in_target = vec![false; g.order()];
    for &x in target {
        if x >= g.order() {
            return false;
        }
        in_target[x] = true;
    }
    f.is_homomorphism(g, g)
        && f.images().iter().all(|&y| in_target[y])
        && target.iter().all(|&x| f.get(x) == x)
}

/// A retraction of `g` onto the subgraph induced by `target`, if one exists.
pub fn find_retraction(
    g: &SimpleGraph,
    target: &[usize],
    budget: SearchBudget,
) -> Result<Option<VertexMap>> {
    let mut in_target = vec![false; g.order()];
    for &x in target {
        in_target[x] = true;
    }
    first_solution(g, g, Mode::Homomorphism, budget, &|v, y| {
        in_target[y] && (!in_target[v] || v == y)
    })
}

/// For every ordered pair `(u, v)` some endomorphism sends `u` to `v`.
///
/// Independent pairs are searched in parallel; the answer is their conjunction.
pub fn is_endo_transitive_oracle(g: &SimpleGraph, budget: SearchBudget) -> Result<bool> {
    let order = g.order();
    let per_source: Vec<Result<bool>> = (0..order)
        .into_par_iter()
        .map(|u| {
            for v in 0..order {
                if find_homomorphism(g, g, &[(u, v)], budget)?.is_none() {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect();
    let mut all = true;
    for r in per_source {
        all &= r?;
    }
    Ok(all)
}

/// Whether the subgraph induced by the image of the endomorphism `f` is a retract of `g`.
pub fn image_is_retract_check(
    g: &SimpleGraph,
    f: &VertexMap,
    budget: SearchBudget,
) -> Result<bool> {
    if !f.is_homomorphism(g, g) {
        return Err(Error::Precondition("map is not an endomorphism".into()));
    }
    Ok(find_retraction(g, &f.image_set(), budget)?.is_some())
}

/// Stable colour refinement on the disjoint union of `g` and `h`.
///
/// Returns one colour per vertex of `g` followed by one per vertex of `h`;
/// equal colours are a necessary condition for an isomorphism to pair them.
fn refine_colors(g: &SimpleGraph, h: &SimpleGraph) -> Vec<usize> {
    let total = g.order() + h.order();
    let nbrs = |v: usize| -> Vec<usize> {
        if v < g.order() {
            g.neighbors(v).to_vec()
        } else {
            h.neighbors(v - g.order()).iter().map(|&w| w + g.order()).collect()
        }
    };
    let adjacency: Vec<Vec<usize>> = (0..total).map(nbrs).collect();
    let mut colors: Vec<usize> = adjacency.iter().map(Vec::len).collect();
    let mut classes = usize::MAX;
    loop {
        let mut signatures = BTreeMap::new();
        let sigs: Vec<(usize, Vec<usize>)> = (0..total)
            .map(|v| {
                let mut ms: Vec<usize> = adjacency[v].iter().map(|&w| colors[w]).collect();
                ms.sort_unstable();
                (colors[v], ms)
            })
            .collect();
        for s in &sigs {
            let next = signatures.len();
            signatures.entry(s.clone()).or_insert(next);
        }
        let fresh: Vec<usize> = sigs.iter().map(|s| signatures[s]).collect();
        if signatures.len() == classes {
            return fresh;
        }
        classes = signatures.len();
        colors = fresh;
    }
}

/// Calls `cb` for every isomorphism `g → h` in ascending lexicographic order of images.
pub(crate) fn for_each_isomorphism(
    g: &SimpleGraph,
    h: &SimpleGraph,
    budget: SearchBudget,
    cb: &mut dyn FnMut(&[usize]) -> Flow,
) -> Result<()> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(());
    }
    let colors = refine_colors(g, h);
    let offset = g.order();
    run_search(g, h, Mode::Isomorphism, budget, &|v, y| colors[v] == colors[offset + y], cb)
}

/// One isomorphism `g → h`, or `None` if the graphs are not isomorphic.
pub fn find_isomorphism(
    g: &SimpleGraph,
    h: &SimpleGraph,
    budget: SearchBudget,
) -> Result<Option<VertexMap>> {
    let mut found = None;
    for_each_isomorphism(g, h, budget, &mut |a| {
        found = Some(VertexMap(a.to_vec()));
        Flow::Stop
    })?;
    if let Some(f) = &found {
        if !f.is_isomorphism(g, h) {
            return Err(Error::Domain("kernel returned a non-isomorphism".into()));
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gp::{build_gp, GPParams};

    fn gp(n: usize, k: usize) -> SimpleGraph {
        build_gp(GPParams::new(n, k).unwrap())
    }

    #[test]
    fn even_cycle_maps_to_edge() {
        let f = find_homomorphism(&SimpleGraph::cycle(6), &SimpleGraph::complete(2), &[], SearchBudget::default())
            .unwrap()
            .unwrap();
        assert!(f.is_homomorphism(&SimpleGraph::cycle(6), &SimpleGraph::complete(2)));
    }

    #[test]
    fn odd_cycle_does_not_map_to_edge() {
        let r = find_homomorphism(&SimpleGraph::cycle(5), &SimpleGraph::complete(2), &[], SearchBudget::default());
        assert_eq!(r, Ok(None));
    }

    #[test]
    fn c5_to_itself() {
        let c5 = SimpleGraph::cycle(5);
        let f = find_homomorphism(&c5, &c5, &[], SearchBudget::default()).unwrap().unwrap();
        assert!(f.is_isomorphism(&c5, &c5));
    }

    #[test]
    fn petersen_has_no_map_to_c5() {
        let r = find_homomorphism(&gp(5, 2), &SimpleGraph::cycle(5), &[], SearchBudget::default());
        assert_eq!(r, Ok(None));
    }

    #[test]
    fn inconsistent_partial_is_rejected() {
        let c5 = SimpleGraph::cycle(5);
        let r = find_homomorphism(&c5, &c5, &[(0, 0), (1, 2)], SearchBudget::default());
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let r = is_core_oracle(&gp(5, 2), SearchBudget::expansions(3));
        assert!(matches!(r, Err(Error::BudgetExhausted { .. })));
    }

    #[test]
    fn core_examples() {
        let b = SearchBudget::default();
        assert!(is_core_oracle(&SimpleGraph::complete(3), b).unwrap());
        assert!(is_core_oracle(&gp(5, 2), b).unwrap());
        assert!(!is_core_oracle(&gp(6, 1), b).unwrap());
        assert!(!is_core_oracle(&SimpleGraph::cycle(6), b).unwrap());
    }

    #[test]
    fn non_core_witness_is_proper_endomorphism() {
        let g = gp(6, 1);
        let f = non_surjective_endomorphism(&g, SearchBudget::default()).unwrap().unwrap();
        assert!(f.is_homomorphism(&g, &g));
        assert!(f.image_set().len() < g.order());
    }

    #[test]
    fn identity_is_a_retraction() {
        let g = gp(5, 2);
        let all: Vec<usize> = (0..10).collect();
        assert!(verify_retraction(&g, &VertexMap::identity(10), &all));
        let mut bad = (0..10).collect::<Vec<_>>();
        bad.swap(0, 5);
        assert!(!verify_retraction(&g, &VertexMap::new(bad), &all));
    }

    #[test]
    fn endo_transitivity_examples() {
        let b = SearchBudget::default();
        assert!(is_endo_transitive_oracle(&gp(4, 1), b).unwrap());
        assert!(is_endo_transitive_oracle(&gp(5, 2), b).unwrap());
    }

    #[test]
    fn identity_image_is_retract() {
        let g = gp(7, 2);
        assert!(image_is_retract_check(&g, &VertexMap::identity(14), SearchBudget::default()).unwrap());
    }

    #[test]
    fn isomorphism_search() {
        let b = SearchBudget::default();
        assert_eq!(find_isomorphism(&SimpleGraph::cycle(5), &SimpleGraph::cycle(6), b), Ok(None));
        let f = find_isomorphism(&gp(5, 2), &gp(5, 2), b).unwrap().unwrap();
        assert!(f.is_isomorphism(&gp(5, 2), &gp(5, 2)));
        // prism vs Petersen: same counts, not isomorphic
        assert_eq!(find_isomorphism(&gp(5, 1), &gp(5, 2), b), Ok(None));
    }

    #[test]
    fn vertex_map_json() {
        let f = VertexMap::new(vec![2, 0, 1]);
        assert_eq!(serde_json::to_string(&f).unwrap(), "[2,0,1]");
    }
}
