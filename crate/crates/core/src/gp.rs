//! Generalized Petersen graphs `G(n,k)` and their cycle metrics.
//!
//! Vertex layout is fixed: outer vertex `u_i` has id `i`, inner vertex `v_i`
//! has id `n + i`. Every serialized artifact relies on this layout.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Default ceiling on `n` for exhaustive minimum-odd-cycle enumeration.
pub const DEFAULT_CYCLE_ENUM_MAX_N: usize = 32;

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Validated parameters `(n, k)` with `n >= 3` and `0 < k < n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct GPParams {
    n: usize,
    k: usize,
    d: usize,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    n: usize,
    k: usize,
}

impl TryFrom<RawParams> for GPParams {
    type Error = Error;
    fn try_from(raw: RawParams) -> Result<Self> {
        GPParams::new(raw.n, raw.k)
    }
}

impl From<GPParams> for RawParams {
    fn from(p: GPParams) -> Self {
        RawParams { n: p.n, k: p.k }
    }
}

impl GPParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 3 || k == 0 || 2 * k >= n {
            return Err(Error::InvalidParams {
                n: n as i64,
                k: k as i64,
            });
        }
        Ok(Self { n, k, d: gcd(n, k) })
    }

    /// Every valid `(n, k)` with `3 <= n <= n_max`, ordered by `(n, k)`.
    pub fn all_up_to(n_max: usize) -> Vec<GPParams> {
        (3..=n_max)
            .flat_map(|n| (1..).take_while(move |k| 2 * k < n).map(move |k| (n, k)))
            .map(|(n, k)| GPParams::new(n, k).expect("in range"))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `gcd(n, k)`, the number of inner cycles.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Length `n / gcd(n, k)` of each inner cycle.
    pub fn inner_len(&self) -> usize {
        self.n / self.d
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.n
    }

    pub fn outer(&self, i: i64) -> usize {
        i.rem_euclid(self.n as i64) as usize
    }

    pub fn inner(&self, i: i64) -> usize {
        self.n + i.rem_euclid(self.n as i64) as usize
    }

    pub fn vertex(&self, id: usize) -> GPVertex {
        assert!(id < 2 * self.n, "vertex id {id} out of range");
        if id < self.n {
            GPVertex::outer(id)
        } else {
            GPVertex::inner(id - self.n)
        }
    }

    pub fn id_of(&self, v: GPVertex) -> usize {
        match v.side {
            Side::Outer => self.outer(v.index as i64),
            Side::Inner => self.inner(v.index as i64),
        }
    }

    /// True iff `{a, b}` joins the outer layer to the inner layer.
    pub fn is_spoke(&self, a: usize, b: usize) -> bool {
        (a < self.n) != (b < self.n)
    }
}

impl fmt::Display for GPParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.n, self.k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Outer,
    Inner,
}

/// A labelled vertex `u_i` (outer) or `v_i` (inner).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GPVertex {
    pub side: Side,
    pub index: usize,
}

impl GPVertex {
    pub fn outer(index: usize) -> Self {
        Self {
            side: Side::Outer,
            index,
        }
    }

    pub fn inner(index: usize) -> Self {
        Self {
            side: Side::Inner,
            index,
        }
    }
}

impl fmt::Display for GPVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Outer => write!(f, "u{}", self.index),
            Side::Inner => write!(f, "v{}", self.index),
        }
    }
}

/// Builds `G(n,k)`: outer rim `u_i u_{i+1}`, inner edges `v_i v_{i+k}`, spokes `u_i v_i`.
pub fn build_gp(params: GPParams) -> SimpleGraph {
    build_gp_with_step(params.n, params.k)
}

/// The same edge construction for any step `1 <= step < n` with `2*step != n`.
///
/// `G(n, n-k)` has exactly the edge set of `G(n, k)`; the retraction builder
/// relies on this for its second case.
pub(crate) fn build_gp_with_step(n: usize, step: usize) -> SimpleGraph {
    let labels = (0..n)
        .map(|i| GPVertex::outer(i).to_string())
        .chain((0..n).map(|i| GPVertex::inner(i).to_string()))
        .collect();
    let mut g = SimpleGraph::with_labels(labels);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n).expect("outer edge");
        g.add_edge(n + i, n + (i + step) % n).expect("inner edge");
        g.add_edge(i, n + i).expect("spoke");
    }
    g
}

/// Closed form: `G(n,k)` is bipartite iff `n` is even and `k` is odd.
pub fn is_bipartite_gp(params: GPParams) -> bool {
    params.n.is_multiple_of(2) && params.k % 2 == 1
}

/// The inner cycles as vertex-id sequences `(v_s, v_{s+k}, v_{s+2k}, …)` for `s = 0..d`.
pub fn inner_cycles(params: GPParams) -> Vec<Vec<usize>> {
    (0..params.d)
        .map(|s| {
            (0..params.inner_len())
                .map(|j| params.inner((s + j * params.k) as i64))
                .collect()
        })
        .collect()
}

/// Length of a shortest odd cycle, or `None` if the graph is bipartite.
///
/// For each source `s` this runs BFS on the parity double layering and reads
/// off the shortest odd closed walk through `s`; the minimum over all sources
/// is the odd girth.
pub fn odd_girth(graph: &SimpleGraph) -> Option<usize> {
    let order = graph.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; 2 * order];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..order {
        dist.iter_mut().for_each(|x| *x = usize::MAX);
        queue.clear();
        dist[2 * s] = 0;
        queue.push_back(2 * s);
        while let Some(state) = queue.pop_front() {
            let (v, parity) = (state / 2, state % 2);
            if best.is_some_and(|b| dist[state] + 1 >= b) {
                break;
            }
            for &w in graph.neighbors(v) {
                let next = 2 * w + (1 - parity);
                if dist[next] == usize::MAX {
                    dist[next] = dist[state] + 1;
                    queue.push_back(next);
                }
            }
            if dist[2 * s + 1] != usize::MAX {
                break;
            }
        }
        let odd = dist[2 * s + 1];
        if odd != usize::MAX && best.is_none_or(|b| odd < b) {
            best = Some(odd);
        }
    }
    best
}

/// A cycle of `G(n,k)` with its edge-type census.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub length: usize,
    pub spoke_count: usize,
    pub uses_inner: bool,
    pub uses_outer: bool,
}

impl CycleWitness {
    /// Checks that `vertices` is a cycle of `graph` (distinct, consecutive vertices adjacent,
    /// closing edge present) and annotates it.
    pub fn new(params: GPParams, graph: &SimpleGraph, vertices: Vec<usize>) -> Result<Self> {
        let len = vertices.len();
        if len < 3 {
            return Err(Error::Domain(format!("a cycle needs >= 3 vertices, got {len}")));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != len {
            return Err(Error::Domain("cycle repeats a vertex".into()));
        }
        let mut spokes = 0;
        for i in 0..len {
            let (a, b) = (vertices[i], vertices[(i + 1) % len]);
            if !graph.has_edge(a, b) {
                return Err(Error::Domain(format!("{a} and {b} are not adjacent")));
            }
            if params.is_spoke(a, b) {
                spokes += 1;
            }
        }
        Ok(Self {
            uses_inner: vertices.iter().any(|&v| v >= params.n()),
            uses_outer: vertices.iter().any(|&v| v < params.n()),
            vertices,
            length: len,
            spoke_count: spokes,
        })
    }
}

/// Every cycle of `G(n,k)` whose length equals the odd girth, for `n <= 32`.
pub fn min_odd_cycle_witnesses(params: GPParams) -> Result<Vec<CycleWitness>> {
    min_odd_cycle_witnesses_bounded(params, DEFAULT_CYCLE_ENUM_MAX_N)
}

/// As [`min_odd_cycle_witnesses`] with an explicit ceiling on `n`.
///
/// Each cycle is reported once, rotated to start at its smallest vertex and
/// oriented so that the second vertex is smaller than the last. The list is sorted.
pub fn min_odd_cycle_witnesses_bounded(
    params: GPParams,
    max_n: usize,
) -> Result<Vec<CycleWitness>> {
    if is_bipartite_gp(params) {
        return Err(Error::NoOddCycles {
            n: params.n(),
            k: params.k(),
        });
    }
    if params.n() > max_n {
        return Err(Error::BoundExceeded {
            what: "n for cycle enumeration",
            size: params.n(),
            bound: max_n,
        });
    }
    let graph = build_gp(params);
    let girth = odd_girth(&graph).expect("non-bipartite");
    let mut out = Vec::new();
    for start in 0..graph.order() {
        let dist = graph.distances_from(start);
        let mut path = vec![start];
        let mut on_path = vec![false; graph.order()];
        on_path[start] = true;
        extend_cycles(&graph, girth, &dist, &mut path, &mut on_path, &mut |p| {
            out.push(CycleWitness::new(params, &graph, p.to_vec()).expect("enumerated cycle"));
        });
    }
    out.sort();
    Ok(out)
}

fn extend_cycles(
    graph: &SimpleGraph,
    target: usize,
    dist: &[usize],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    emit: &mut dyn FnMut(&[usize]),
) {
    let start = path[0];
    let last = *path.last().unwrap();
    if path.len() == target {
        if graph.has_edge(last, start) && path[1] < path[target - 1] {
            emit(path);
        }
        return;
    }
    // after adding w there are target - path.len() edges left to get back to start
    let remaining = target - path.len();
    for &w in graph.neighbors(last) {
        if w <= start || on_path[w] || dist[w] > remaining {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        extend_cycles(graph, target, dist, path, on_path, emit);
        on_path[w] = false;
        path.pop();
    }
}

/// Tensor product with `K_2`: vertex `(v, s)` has id `s * order + v`, and each
/// edge `{a, b}` yields `{(a,0),(b,1)}` and `{(b,0),(a,1)}`.
pub fn kronecker_cover(graph: &SimpleGraph) -> SimpleGraph {
    let order = graph.order();
    let labels = (0..2)
        .flat_map(|s| (0..order).map(move |v| (s, v)))
        .map(|(s, v)| format!("{}_{}", graph.label(v), s))
        .collect();
    let mut cover = SimpleGraph::with_labels(labels);
    for (a, b) in graph.edges() {
        cover.add_edge(a, order + b).expect("cover edge");
        cover.add_edge(b, order + a).expect("cover edge");
    }
    cover
}

/// The projection `(v, s) ↦ v` from [`kronecker_cover`] back to the base graph.
pub fn kronecker_projection(order: usize) -> Vec<usize> {
    (0..2 * order).map(|v| v % order).collect()
}

/// Checks that `map` is a covering map `cover → base`: a surjective
/// homomorphism that is bijective from the edges at each vertex `v` onto the
/// edges at `map[v]`.
pub fn is_covering_map(cover: &SimpleGraph, base: &SimpleGraph, map: &[usize]) -> bool {
    if map.len() != cover.order() || map.iter().any(|&x| x >= base.order()) {
        return false;
    }
    let mut hit = vec![false; base.order()];
    for v in 0..cover.order() {
        hit[map[v]] = true;
        let mut images: Vec<usize> = cover.neighbors(v).iter().map(|&w| map[w]).collect();
        images.sort_unstable();
        if images.as_slice() != base.neighbors(map[v]) {
            return false;
        }
    }
    hit.into_iter().all(|h| h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, k: usize) -> GPParams {
        GPParams::new(n, k).unwrap()
    }

    #[test]
    fn parameter_domain() {
        assert!(GPParams::new(4, 1).is_ok());
        assert!(GPParams::new(3, 1).is_ok());
        assert!(GPParams::new(2, 1).is_err());
        assert!(GPParams::new(6, 3).is_err());
        assert!(GPParams::new(7, 0).is_err());
        assert!(GPParams::new(7, 4).is_err());
        let q = p(16, 4);
        assert_eq!((q.d(), q.inner_len()), (4, 4));
    }

    #[test]
    fn petersen_counts() {
        let g = build_gp(p(5, 2));
        assert_eq!((g.order(), g.size()), (10, 15));
        assert_eq!(inner_cycles(p(5, 2)).len(), 1);
        assert_eq!(g.label(0), "u0");
        assert_eq!(g.label(5), "v0");
    }

    #[test]
    fn inner_cycles_of_16_4() {
        let cycles = inner_cycles(p(16, 4));
        assert_eq!(cycles.len(), 4);
        assert!(cycles.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn bipartite_closed_form_examples() {
        assert!(is_bipartite_gp(p(8, 3)));
        assert!(!is_bipartite_gp(p(5, 2)));
        assert!(!is_bipartite_gp(p(6, 2)));
    }

    #[test]
    fn odd_girth_examples() {
        assert_eq!(odd_girth(&build_gp(p(10, 2))), Some(5));
        assert_eq!(odd_girth(&build_gp(p(8, 3))), None);
        assert_eq!(odd_girth(&build_gp(p(16, 6))), Some(7));
        assert_eq!(odd_girth(&SimpleGraph::complete(3)), Some(3));
    }

    #[test]
    fn witnesses_reject_bipartite_and_large() {
        assert!(matches!(
            min_odd_cycle_witnesses(p(8, 3)),
            Err(Error::NoOddCycles { .. })
        ));
        assert!(matches!(
            min_odd_cycle_witnesses_bounded(p(11, 2), 10),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn spoked_witness_in_dodecahedron() {
        let ws = min_odd_cycle_witnesses(p(10, 2)).unwrap();
        assert!(ws.iter().any(|w| w.spoke_count >= 1));
        assert!(ws.iter().all(|w| w.length == 5 && w.spoke_count <= 2));
    }

    #[test]
    fn cycle_witness_validation() {
        let params = p(5, 2);
        let g = build_gp(params);
        assert!(CycleWitness::new(params, &g, vec![0, 1, 2]).is_err());
        let w = CycleWitness::new(params, &g, vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!((w.spoke_count, w.uses_inner, w.uses_outer), (0, false, true));
    }

    #[test]
    fn triangle_cover_is_hexagon() {
        let cover = kronecker_cover(&SimpleGraph::complete(3));
        assert_eq!((cover.order(), cover.size()), (6, 6));
        assert_eq!(cover.components().len(), 1);
        assert!(cover.is_bipartite());
        assert!((0..6).all(|v| cover.degree(v) == 2));
    }

    #[test]
    fn projection_is_covering() {
        let base = build_gp(p(5, 2));
        let cover = kronecker_cover(&base);
        assert!(is_covering_map(&cover, &base, &kronecker_projection(10)));
        let mut broken = kronecker_projection(10);
        broken[0] = 1;
        assert!(!is_covering_map(&cover, &base, &broken));
    }
}
