//! Rotation, reflection and inside-out maps; vertex-transitivity; brute-force
//! automorphism groups; colour endomorphisms of Cayley digraphs.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cayley::CayleyDigraph;
use crate::error::{Error, Result};
use crate::gp::GPParams;
use crate::graph::SimpleGraph;
use crate::hom::{for_each_isomorphism, Flow, SearchBudget, VertexMap};

/// Default ceiling on vertex count for [`aut_group_bruteforce`].
pub const DEFAULT_AUT_MAX_VERTICES: usize = 60;

/// Pairs whose automorphism group is not the one generated by rotation,
/// reflection and (when it is an automorphism) inside-out.
pub const EXCEPTIONAL_PAIRS: [(usize, usize); 7] =
    [(4, 1), (5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5)];

/// A bijection of `0..len`. Serializes as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Domain(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Self(images))
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        Self::try_from(images)
    }

    pub fn identity(len: usize) -> Self {
        Self((0..len).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Permutation) -> Permutation {
        Permutation(inner.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w] = v;
        }
        Permutation(inv)
    }

    pub fn pow(&self, e: usize) -> Permutation {
        (0..e).fold(Self::identity(self.0.len()), |acc, _| self.compose(&acc))
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let id = Self::identity(self.0.len());
        let mut ord = 1;
        while p != id {
            p = self.compose(&p);
            ord += 1;
        }
        ord
    }

    pub fn is_automorphism(&self, graph: &SimpleGraph) -> bool {
        self.as_map().is_isomorphism(graph, graph)
    }

    pub fn as_map(&self) -> VertexMap {
        VertexMap::new(self.0.clone())
    }
}

/// `u_i ↦ u_{i+1}`, `v_i ↦ v_{i+1}`.
pub fn rotation(params: GPParams) -> Permutation {
    let n = params.n();
    Permutation((0..2 * n).map(|v| (v / n) * n + (v % n + 1) % n).collect())
}

/// `u_i ↦ u_{-i}`, `v_i ↦ v_{-i}`.
pub fn reflection(params: GPParams) -> Permutation {
    let n = params.n();
    Permutation((0..2 * n).map(|v| (v / n) * n + (n - v % n) % n).collect())
}

/// `u_i ↦ v_{ki}`, `v_i ↦ u_{ki}`. Returned as a raw map: it is a bijection only when
/// `gcd(n,k) = 1` and an automorphism only when `k² ≡ ±1 (mod n)`.
pub fn inside_out(params: GPParams) -> VertexMap {
    let (n, k) = (params.n(), params.k());
    VertexMap::new(
        (0..2 * n)
            .map(|v| {
                let ki = (k * (v % n)) % n;
                if v < n {
                    n + ki
                } else {
                    ki
                }
            })
            .collect(),
    )
}

/// `k² ≡ ±1 (mod n)` or `(n,k) = (10,2)`.
pub fn is_vertex_transitive(params: GPParams) -> bool {
    let (n, k) = (params.n(), params.k());
    let sq = (k * k) % n;
    sq == 1 || sq == n - 1 || (n, k) == (10, 2)
}

/// Order of `Aut(G(n,k))` given by its presentation, or `None` for the seven exceptional pairs.
pub fn expected_aut_order(params: GPParams) -> Option<usize> {
    let (n, k) = (params.n(), params.k());
    if EXCEPTIONAL_PAIRS.contains(&(n, k)) {
        return None;
    }
    let sq = (k * k) % n;
    Some(if sq == 1 || sq == n - 1 { 4 * n } else { 2 * n })
}

/// All automorphisms of `graph`, sorted by image array. Refuses graphs above 60 vertices.
pub fn aut_group_bruteforce(graph: &SimpleGraph, budget: SearchBudget) -> Result<Vec<Permutation>> {
    aut_group_bruteforce_bounded(graph, budget, DEFAULT_AUT_MAX_VERTICES)
}

pub fn aut_group_bruteforce_bounded(
    graph: &SimpleGraph,
    budget: SearchBudget,
    max_vertices: usize,
) -> Result<Vec<Permutation>> {
    if graph.order() > max_vertices {
        return Err(Error::BoundExceeded {
            what: "vertex count for automorphism enumeration",
            size: graph.order(),
            bound: max_vertices,
        });
    }
    let mut out = Vec::new();
    for_each_isomorphism(graph, graph, budget, &mut |a| {
        out.push(Permutation(a.to_vec()));
        Flow::Continue
    })?;
    out.sort();
    Ok(out)
}

/// True iff `perms` contains the identity and is closed under composition and inverse.
pub fn is_group(perms: &[Permutation]) -> bool {
    let Some(first) = perms.first() else {
        return false;
    };
    let set: BTreeSet<&Permutation> = perms.iter().collect();
    set.contains(&Permutation::identity(first.0.len()))
        && perms.iter().all(|p| set.contains(&p.inverse()))
        && perms
            .iter()
            .all(|p| perms.iter().all(|q| set.contains(&p.compose(q))))
}

/// Orbits of the group generated by `perms` on `0..len`, each sorted, ordered by minimum.
pub fn orbits(len: usize, perms: &[Permutation]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..len).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in perms {
        for v in 0..len {
            let (a, b) = (find(&mut parent, v), find(&mut parent, p.apply(v)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..len {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    groups.into_values().collect()
}

/// The subgroup generated by `gens`, as a sorted list.
pub fn generated_group(len: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut frontier = vec![Permutation::identity(len)];
    seen.insert(Permutation::identity(len));
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen.into_iter().collect()
}

/// One row of the automorphism-order report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutOrderRow {
    pub n: usize,
    pub k: usize,
    pub expected: Option<usize>,
    pub found: Option<usize>,
}

/// CSV with header `n,k,expected,found`; absent values are empty fields.
pub fn aut_order_csv(rows: &[AutOrderRow]) -> String {
    let mut out = String::from("n,k,expected,found\n");
    let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
    for r in rows {
        let _ = writeln!(out, "{},{},{},{}", r.n, r.k, opt(r.expected), opt(r.found));
    }
    out
}

/// `f(m)·c = f(m·c)` for every vertex `m` and connection element `c` of `digraph`.
pub fn is_color_endomorphism(digraph: &CayleyDigraph, f: &VertexMap) -> bool {
    let m = digraph.order();
    f.len() == m
        && f.images().iter().all(|&x| x < m)
        && (0..m).all(|s| {
            (0..digraph.connection().len())
                .all(|ci| digraph.target(f.get(s), ci) == f.get(digraph.target(s, ci)))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gp::build_gp;

    fn p(n: usize, k: usize) -> GPParams {
        GPParams::new(n, k).unwrap()
    }

    #[test]
    fn rotation_and_reflection_relations() {
        let params = p(7, 2);
        let (a, b) = (rotation(params), reflection(params));
        assert_eq!(a.order(), 7);
        assert_eq!(b.order(), 2);
        assert_eq!(b.compose(&a).compose(&b), a.inverse());
        let g = build_gp(params);
        assert!(a.is_automorphism(&g) && b.is_automorphism(&g));
    }

    #[test]
    fn inside_out_examples() {
        assert!(inside_out(p(8, 3)).is_isomorphism(&build_gp(p(8, 3)), &build_gp(p(8, 3))));
        assert!(!inside_out(p(7, 2)).is_homomorphism(&build_gp(p(7, 2)), &build_gp(p(7, 2))));
    }

    #[test]
    fn transitivity_examples() {
        assert!(is_vertex_transitive(p(10, 2)));
        assert!(is_vertex_transitive(p(5, 2)));
        assert!(!is_vertex_transitive(p(7, 2)));
    }

    #[test]
    fn expected_orders() {
        assert_eq!(expected_aut_order(p(7, 2)), Some(14));
        assert_eq!(expected_aut_order(p(13, 5)), Some(52));
        assert_eq!(expected_aut_order(p(5, 2)), None);
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![1, 2]).is_err());
        let p: Permutation = serde_json::from_str("[1,0,2]").unwrap();
        assert_eq!(p.order(), 2);
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }

    #[test]
    fn aut_of_7_2_is_dihedral() {
        let g = build_gp(p(7, 2));
        let aut = aut_group_bruteforce(&g, SearchBudget::default()).unwrap();
        assert_eq!(aut.len(), 14);
        assert!(is_group(&aut));
        assert_eq!(orbits(14, &aut).len(), 2);
    }

    #[test]
    fn aut_bound_refuses() {
        let g = SimpleGraph::cycle(61);
        assert!(matches!(
            aut_group_bruteforce(&g, SearchBudget::default()),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn csv_report() {
        let rows = [AutOrderRow { n: 5, k: 2, expected: None, found: Some(120) }];
        assert_eq!(aut_order_csv(&rows), "n,k,expected,found\n5,2,,120\n");
    }
}
