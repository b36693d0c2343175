use std::collections::BTreeSet;

use proptest::prelude::*;

use gpetersen::algebra::{
    cay1_connection, cay1_monoid, combinator_left_band_extension, combinator_null_extension,
    cyclic_group, dihedral_group, direct_product, left_zero_band, presented_group_alpha_gamma,
    BuiltinTable, Cay1Variant, OpTable, ALPHA, GAMMA,
};
use gpetersen::cayley::build_cayley;
use gpetersen::cores::{build_retraction, classify_core, retraction_target, CoreReason, CoreStatus};
use gpetersen::gp::{build_gp, is_covering_map, kronecker_cover, kronecker_projection};
use gpetersen::hom::{find_homomorphism, verify_retraction};
use gpetersen::symmetry::{
    aut_group_bruteforce, generated_group, is_color_endomorphism, reflection, rotation,
};
use gpetersen::{GPParams, SearchBudget, VertexMap};

fn params(n_max: usize) -> impl Strategy<Value = GPParams> {
    (3..=n_max).prop_flat_map(|n| (Just(n), 1..=(n - 1) / 2)).prop_map(|(n, k)| GPParams::new(n, k).unwrap())
}

fn left_multiplication(t: &OpTable, m: usize) -> VertexMap {
    VertexMap::new((0..t.order()).map(|x| t.mul(m, x)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kronecker_cover_is_bipartite_double_cover(p in params(30)) {
        let g = build_gp(p);
        let cover = kronecker_cover(&g);
        prop_assert!(cover.is_bipartite());
        prop_assert_eq!(cover.order(), 2 * g.order());
        prop_assert!(is_covering_map(&cover, &g, &kronecker_projection(g.order())));
    }

    #[test]
    fn verdict_matches_its_defining_conditions(p in params(80)) {
        let v = classify_core(p);
        let g = p.inner_len();
        match v.status {
            CoreStatus::Bipartite => prop_assert!(p.n() % 2 == 0 && p.k() % 2 == 1),
            CoreStatus::Core(CoreReason::C1) => prop_assert!(g % 2 == 0),
            CoreStatus::Core(CoreReason::C2) => prop_assert!(g % 2 == 1 && (v.a + v.d) % 2 == 0 && v.a >= v.d + 2),
            CoreStatus::Core(CoreReason::C3) => prop_assert!(g % 2 == 1 && (v.a + v.d) % 2 == 1 && v.a + v.d + 2 <= g),
            CoreStatus::NotCore(_) => prop_assert!(g % 2 == 1),
        }
    }

    #[test]
    fn non_cores_retract_onto_inner_cycle(p in params(80)) {
        if let CoreStatus::NotCore(_) = classify_core(p).status {
            let f = build_retraction(p).unwrap();
            let target = retraction_target(p);
            prop_assert!(verify_retraction(&build_gp(p), &f, &target));
            prop_assert_eq!(f.image_set(), target);
        } else {
            prop_assert!(build_retraction(p).is_err());
        }
    }

    #[test]
    fn endomorphisms_compose(p in params(10), u in 0usize..20, v in 0usize..20) {
        let g = build_gp(p);
        let (u, v) = (u % g.order(), v % g.order());
        let b = SearchBudget::default();
        if let (Some(f), Some(h)) = (
            find_homomorphism(&g, &g, &[(u, v)], b).unwrap(),
            find_homomorphism(&g, &g, &[(v, u)], b).unwrap(),
        ) {
            prop_assert!(f.compose(&h).is_homomorphism(&g, &g));
            prop_assert!(h.compose(&f).is_homomorphism(&g, &g));
        }
    }

    #[test]
    fn rotation_and_reflection_give_dihedral_subgroup(p in params(12)) {
        let aut: BTreeSet<_> = aut_group_bruteforce(&build_gp(p), SearchBudget::default()).unwrap().into_iter().collect();
        let d = generated_group(p.vertex_count(), &[rotation(p), reflection(p)]);
        prop_assert_eq!(d.len(), 2 * p.n());
        prop_assert!(d.iter().all(|x| aut.contains(x)));
    }

    #[test]
    fn light_test_agrees_with_full_scan(cells in proptest::collection::vec(0usize..3, 9)) {
        let t = OpTable::new(cells.chunks(3).map(<[usize]>::to_vec).collect()).unwrap();
        let all: Vec<usize> = (0..3).collect();
        prop_assert_eq!(t.is_associative_with_generators(&all), t.is_associative());
        prop_assert_eq!(t.is_associative_with_generators(&[0]), t.is_associative());
    }

    #[test]
    fn products_of_groups_and_bands_are_associative(a in 1usize..5, b in 1usize..4, c in 1usize..4) {
        let x = direct_product(&cyclic_group(a).unwrap(), &dihedral_group(b).unwrap()).unwrap();
        prop_assert!(x.is_associative());
        let y = direct_product(&x, &left_zero_band(c).unwrap()).unwrap();
        prop_assert!(y.is_associative());
        prop_assert_eq!(y.order(), a * 2 * b * c);
    }

    #[test]
    fn null_extension_is_associative(n in 1usize..6, j in 1usize..4, band in any::<bool>()) {
        // Z_n with an absorbing zero adjoined as id n
        let r = OpTable::from_fn(n + 1, |x, y| if x == n || y == n { n } else { (x + y) % n }).unwrap();
        let rp = if band { left_zero_band(j).unwrap() } else { cyclic_group(j).unwrap() };
        let e = combinator_null_extension(&r, &[n], &rp).unwrap();
        prop_assert!(e.is_associative());
        prop_assert_eq!(e.order(), (n + 1) * j);
    }

    #[test]
    fn left_band_extension_of_reductions(n in 1usize..13, i in 0usize..6, j in 0usize..6) {
        let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        let (a, b) = (divisors[i % divisors.len()], divisors[j % divisors.len()]);
        let phi: Vec<usize> = (0..n).map(|x| x % a).collect();
        let psi: Vec<usize> = (0..n).map(|x| x % b).collect();
        let t = combinator_left_band_extension(
            &cyclic_group(n).unwrap(), &cyclic_group(a).unwrap(), &cyclic_group(b).unwrap(), &phi, &psi,
        ).unwrap();
        prop_assert_eq!(t.order(), n + a * b);
        prop_assert_eq!(t.find_identity(), Some(0));
    }

    #[test]
    fn presented_group_relation(n in 3usize..60, k in 1usize..60) {
        let k = 1 + k % (n - 1);
        if (k * k) % n == 1 {
            let h = presented_group_alpha_gamma(n, k).unwrap();
            prop_assert!(h.is_group());
            prop_assert_eq!(h.mul(h.mul(GAMMA, ALPHA), GAMMA), h.pow(ALPHA, k));
            prop_assert_eq!(h.element_order(ALPHA).unwrap(), n);
        } else {
            prop_assert!(presented_group_alpha_gamma(n, k).is_err());
        }
    }
}

#[test]
fn left_multiplications_are_colour_endomorphisms() {
    let mut cases: Vec<(OpTable, Vec<usize>)> =
        BuiltinTable::ALL.iter().map(|b| (b.table(), b.connection())).collect();
    let p = GPParams::new(10, 4).unwrap();
    cases.push((cay1_monoid(p).unwrap(), cay1_connection(p, Cay1Variant::Standard)));
    for (t, c) in cases {
        let d = build_cayley(&t, &c).unwrap();
        let lambdas: Vec<VertexMap> = (0..t.order()).map(|m| left_multiplication(&t, m)).collect();
        for f in &lambdas {
            assert!(is_color_endomorphism(&d, f));
        }
        for f in &lambdas {
            for g in &lambdas {
                assert!(is_color_endomorphism(&d, &f.compose(g)));
            }
        }
        assert!(is_color_endomorphism(&d, &VertexMap::identity(t.order())));
    }
}

#[test]
fn broken_colour_is_detected() {
    let z5 = cyclic_group(5).unwrap();
    let d = build_cayley(&z5, &[1]).unwrap();
    assert!(!is_color_endomorphism(&d, &VertexMap::new(vec![1, 0, 2, 3, 4])));
}
