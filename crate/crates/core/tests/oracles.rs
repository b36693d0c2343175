//! Closed forms and searches checked against small independent computations.

use std::collections::BTreeSet;

use gpetersen::algebra::{cay1_monoid, OpTable};
use gpetersen::cores::{compute_a, CoreParams};
use gpetersen::gp::{build_gp, gcd, inner_cycles, is_bipartite_gp, min_odd_cycle_witnesses, odd_girth};
use gpetersen::hom::{find_homomorphism, find_isomorphism};
use gpetersen::symmetry::{
    aut_group_bruteforce, expected_aut_order, generated_group, inside_out, reflection, rotation,
    Permutation, EXCEPTIONAL_PAIRS,
};
use gpetersen::{GPParams, SearchBudget, SimpleGraph};

#[test]
fn a_matches_exhaustive_scan() {
    for p in GPParams::all_up_to(60) {
        let (n, k, d) = (p.n(), p.k(), gcd(p.n(), p.k()));
        let scanned: Vec<usize> = (1..n / d).filter(|a| (a * k) % n == d % n).collect();
        assert_eq!(scanned, vec![compute_a(p)], "{p}");
        assert_eq!(CoreParams::of(p).g_inner, n / d);
    }
}

#[test]
fn bipartite_matches_two_colouring() {
    for p in GPParams::all_up_to(30) {
        assert_eq!(is_bipartite_gp(p), build_gp(p).is_bipartite(), "{p}");
    }
}

fn union_find_components(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> Vec<BTreeSet<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] == x {
            x
        } else {
            let r = root(parent, parent[x]);
            parent[x] = r;
            r
        }
    }
    for (a, b) in edges {
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        parent[ra] = rb;
    }
    let mut groups = std::collections::BTreeMap::<usize, BTreeSet<usize>>::new();
    for v in 0..n {
        let r = root(&mut parent, v);
        groups.entry(r).or_default().insert(v);
    }
    groups.into_values().collect()
}

#[test]
fn inner_cycles_match_union_find() {
    for p in GPParams::all_up_to(30) {
        let (n, k) = (p.n(), p.k());
        let comps = union_find_components(n, (0..n).map(|i| (i, (i + k) % n)));
        let ours: BTreeSet<BTreeSet<usize>> = inner_cycles(p)
            .into_iter()
            .map(|c| c.into_iter().map(|v| v - n).collect())
            .collect();
        assert_eq!(ours, comps.into_iter().collect(), "{p}");
        assert!(ours.iter().all(|c| c.len() == n / gcd(n, k)));
    }
    // (10,4): two pentagons on the even and odd inner vertices
    let p = GPParams::new(10, 4).unwrap();
    assert_eq!(inner_cycles(p).len(), 2);
}

/// Every simple cycle, as a canonical vertex sequence, found by brute-force DFS from each start.
fn all_cycles(g: &SimpleGraph) -> BTreeSet<Vec<usize>> {
    fn extend(g: &SimpleGraph, path: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == path[0] && path.len() >= 3 {
                let mut c = path.clone();
                // canonical: start at min, orientation with smaller second vertex
                let m = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
                c.rotate_left(m);
                if c[1] > c[c.len() - 1] {
                    c[1..].reverse();
                }
                out.insert(c);
            } else if !path.contains(&w) {
                path.push(w);
                extend(g, path, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..g.order() {
        extend(g, &mut vec![s], &mut out);
    }
    out
}

#[test]
fn min_odd_cycles_match_brute_force() {
    for p in GPParams::all_up_to(9) {
        if is_bipartite_gp(p) {
            assert!(min_odd_cycle_witnesses(p).is_err());
            continue;
        }
        let g = build_gp(p);
        let cycles = all_cycles(&g);
        let girth = cycles.iter().map(Vec::len).filter(|l| l % 2 == 1).min().unwrap();
        assert_eq!(odd_girth(&g), Some(girth), "{p}");
        let brute: BTreeSet<Vec<usize>> = cycles.into_iter().filter(|c| c.len() == girth).collect();
        let ours: BTreeSet<Vec<usize>> =
            min_odd_cycle_witnesses(p).unwrap().into_iter().map(|w| w.vertices).collect();
        assert_eq!(ours, brute, "{p}");
    }
}

fn brute_force_hom_exists(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    let (n, m) = (g.order(), h.order());
    let mut f = vec![0; n];
    loop {
        if g.edges().iter().all(|&(a, b)| h.has_edge(f[a], f[b])) {
            return true;
        }
        let mut i = 0;
        while i < n {
            f[i] += 1;
            if f[i] < m {
                break;
            }
            f[i] = 0;
            i += 1;
        }
        if i == n {
            return false;
        }
    }
}

#[test]
fn homomorphism_existence_matches_enumeration() {
    let graphs = [
        SimpleGraph::cycle(3),
        SimpleGraph::cycle(4),
        SimpleGraph::cycle(5),
        SimpleGraph::cycle(7),
        SimpleGraph::complete(2),
        SimpleGraph::complete(4),
        build_gp(GPParams::new(3, 1).unwrap()),
    ];
    for g in &graphs {
        for h in &graphs {
            let kernel = find_homomorphism(g, h, &[], SearchBudget::default()).unwrap();
            assert_eq!(kernel.is_some(), brute_force_hom_exists(g, h));
            if let Some(f) = kernel {
                assert!(f.is_homomorphism(g, h));
            }
        }
    }
}

#[test]
fn aut_orders_match_permutation_closure() {
    // ⟨α, β, γ⟩ generated as permutations gives the order independently of the closed form
    for p in GPParams::all_up_to(12) {
        if EXCEPTIONAL_PAIRS.contains(&(p.n(), p.k())) {
            continue;
        }
        let mut gens = vec![rotation(p), reflection(p)];
        let g = build_gp(p);
        let io = inside_out(p);
        if io.is_isomorphism(&g, &g) {
            gens.push(Permutation::new(io.images().to_vec()).unwrap());
        }
        let closure = generated_group(p.vertex_count(), &gens);
        assert_eq!(Some(closure.len()), expected_aut_order(p), "{p}");
        let brute: BTreeSet<_> = aut_group_bruteforce(&g, SearchBudget::default()).unwrap().into_iter().collect();
        assert!(closure.iter().all(|x| brute.contains(x)));
    }
}

#[test]
fn inside_out_automorphism_iff_congruence() {
    for p in GPParams::all_up_to(30) {
        let g = build_gp(p);
        let sq = (p.k() * p.k()) % p.n();
        assert_eq!(inside_out(p).is_isomorphism(&g, &g), sq == 1 || sq == p.n() - 1, "{p}");
    }
}

#[test]
fn isomorphism_matches_permutation_search() {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let six: Vec<SimpleGraph> = vec![
        SimpleGraph::cycle(6),
        build_gp(GPParams::new(3, 1).unwrap()),
        SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap(),
        SimpleGraph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap(),
    ];
    let perms = permutations(6);
    for g in &six {
        for h in &six {
            let brute = perms
                .iter()
                .any(|p| g.edges().iter().all(|&(a, b)| h.has_edge(p[a], p[b])) && g.size() == h.size());
            let ours = find_isomorphism(g, h, SearchBudget::default()).unwrap();
            assert_eq!(ours.is_some(), brute);
        }
    }
}

#[test]
fn cay1_idempotents_are_band_with_identity() {
    for p in GPParams::all_up_to(24) {
        let (n, k) = (p.n(), p.k());
        let sq = k * k % n;
        if sq != k && sq != n - k {
            continue;
        }
        let m: OpTable = cay1_monoid(p).unwrap();
        let idem = m.idempotents();
        assert_eq!(idem.len(), p.d() + 1, "{p}");
        assert_eq!(idem[0], 0);
        for &e in &idem[1..] {
            for &f in &idem[1..] {
                assert_eq!(m.mul(e, f), e, "{p}: idempotents form a left-zero band");
            }
        }
    }
}
