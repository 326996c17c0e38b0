use affine_rigidity::families;
use affine_rigidity::hypergraph::is_k_vertex_connected;
use affine_rigidity::numkernel::prime::DEFAULT_PRIME;
use affine_rigidity::rigidity::generic::finite_field_corank_i64;
use affine_rigidity::rigidity::{
    affine_rigidity_test, neighborhood_affine_rigidity_test, universal_rigidity_certificate, Configuration,
    Framework, UniversalOutcome, UniversalRoute, Verdict,
};
use affine_rigidity::{seeded_rng, Graph, Hypergraph};
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn corank_is_invariant_under_affine_maps(seed in any::<u64>(), v in 4usize..11, d in 1usize..4) {
        prop_assume!(v > d + 1);
        let mut rng = seeded_rng(seed);
        let edges: Vec<Vec<usize>> = (0..v)
            .map(|_| {
                let k = rng.random_range(2..=v.min(d + 3));
                rand::seq::index::sample(&mut rng, v, k).into_vec()
            })
            .collect();
        let theta = Hypergraph::new(v, edges).unwrap();
        let p = Configuration::random(v, d, &mut rng);
        let a = nalgebra::DMatrix::from_fn(d, d, |_, _| rng.random_range(-1.0..1.0));
        let sv = a.singular_values();
        prop_assume!(sv.min() > 0.1 * sv.max());
        let t = nalgebra::DVector::from_fn(d, |_, _| rng.random_range(-3.0..3.0));
        let before = affine_rigidity_test(&theta, &p, 1e-9).unwrap().corank;
        let after = affine_rigidity_test(&theta, &p.transformed(&a, &t), 1e-9).unwrap().corank;
        prop_assert_eq!(before, after);
        prop_assert!(before > d);
    }

    #[test]
    fn integer_coordinates_agree_across_fields(seed in any::<u64>(), v in 4usize..10) {
        let mut rng = seeded_rng(seed);
        let edges: Vec<Vec<usize>> = (0..v)
            .map(|_| {
                let k = rng.random_range(3..=v.min(5));
                rand::seq::index::sample(&mut rng, v, k).into_vec()
            })
            .collect();
        let theta = Hypergraph::new(v, edges).unwrap();
        let p = Configuration::random_integer(v, 2, 1000, &mut rng);
        prop_assume!(p.affine_span_dim(1e-9).unwrap() == 2);
        let ints: Vec<Vec<i64>> = p.to_rows().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        let exact = finite_field_corank_i64(&theta, &ints, 2, DEFAULT_PRIME).unwrap();
        let float = affine_rigidity_test(&theta, &p, 1e-9).unwrap().corank;
        prop_assert_eq!(exact, float);
    }

    #[test]
    fn three_connected_graphs_are_neighborhood_rigid(seed in any::<u64>(), n in 5usize..40) {
        let mut rng = seeded_rng(seed);
        let g = families::random_k_connected(3, n, n / 3, &mut rng).unwrap();
        prop_assert!(is_k_vertex_connected(&g, 3));
        let p = Configuration::random(n, 2, &mut rng);
        let v = neighborhood_affine_rigidity_test(&g, &p, 1e-9, seed).unwrap();
        prop_assert_eq!(v.verdict, Verdict::Rigid);
    }
}

#[test]
fn trilateration_graphs_are_certified_universally_rigid() {
    let mut rng = seeded_rng(81);
    for d in [2, 3] {
        let g = families::trilateration(d, 12, &mut rng).unwrap();
        let f = Framework::of_graph(g, Configuration::random(12, d, &mut rng)).unwrap();
        let out = universal_rigidity_certificate(&f, UniversalRoute::PsdStress, 1e-9, 1).unwrap();
        assert!(out.is_certified(), "{out:?}");
    }
}

#[test]
fn neighborhood_route_gives_universal_certificate_for_hypergraph() {
    let mut rng = seeded_rng(82);
    let g = families::hex_torus(4, 4).unwrap();
    let theta = g.neighborhood_hypergraph();
    let f = Framework::of_hypergraph(theta, Configuration::random(32, 2, &mut rng)).unwrap();
    match universal_rigidity_certificate(&f, UniversalRoute::AffineRigidity, 1e-9, 0).unwrap() {
        UniversalOutcome::Certified(c) => assert!(c.conic_shortcut),
        UniversalOutcome::Inconclusive { reason } => panic!("{reason}"),
    }
}

#[test]
fn path_is_not_two_connected_and_flexible() {
    let g = Graph::path(6).unwrap();
    assert!(!is_k_vertex_connected(&g, 2));
    let mut rng = seeded_rng(83);
    let p = Configuration::random(6, 2, &mut rng);
    let v = neighborhood_affine_rigidity_test(&g, &p, 1e-9, 0).unwrap();
    assert_eq!(v.verdict, Verdict::Flexible);
}
