use affine_rigidity::families;
use affine_rigidity::registration::{
    affine_fit_residual, affine_register, euclidean_register, remove_affine, Gauge, Scan, ScanSet, Trust,
};
use affine_rigidity::rigidity::{generic_affine_rigidity_test, Configuration, GenericTestOptions, Verdict};
use affine_rigidity::{seeded_rng, Error, Graph, Hypergraph, SeededRng};
use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;
use rand::Rng;

fn transform(scans: &ScanSet, euclidean: bool, rng: &mut SeededRng) -> ScanSet {
    let d = scans.dim();
    let moved = scans
        .scans()
        .iter()
        .map(|s| {
            let a = loop {
                let m = DMatrix::from_fn(d, d, |_, _| rng.random_range(-1.0..1.0));
                if euclidean {
                    break m.qr().q();
                }
                let sv = m.singular_values();
                if sv.min() > 0.1 * sv.max() {
                    break m;
                }
            };
            let t = DVector::from_fn(d, |_, _| rng.random_range(-4.0..4.0));
            let c = Configuration::new(s.coords().clone()).unwrap().transformed(&a, &t);
            Scan::new(s.hyperedge().to_vec(), c.points().clone()).unwrap()
        })
        .collect();
    ScanSet::new(scans.vertex_count(), d, moved, scans.trust()).unwrap()
}

fn distance_mismatch(a: &Configuration, b: &Configuration) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..a.vertex_count() {
        for j in i + 1..a.vertex_count() {
            let da = (a.point(i) - a.point(j)).norm();
            let db = (b.point(i) - b.point(j)).norm();
            worst = worst.max((da - db).abs());
        }
    }
    worst
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn affine_output_is_gauge_invariant(seed in any::<u64>(), n in 6usize..24) {
        let mut rng = seeded_rng(seed);
        let g = families::random_k_connected(3, n, 2, &mut rng).unwrap();
        let p = Configuration::random(n, 2, &mut rng);
        let base = ScanSet::from_framework(&g.neighborhood_hypergraph(), &p, Trust::Affine).unwrap();
        let a = affine_register(&transform(&base, false, &mut rng), 1e-9).unwrap();
        let b = affine_register(&transform(&base, false, &mut rng), 1e-9).unwrap();
        let diam = a.config.diameter();
        prop_assert!(affine_fit_residual(a.config.points(), b.config.points()).unwrap() <= 1e-8 * diam);
    }

    #[test]
    fn euclidean_register_is_congruence_correct(seed in any::<u64>(), n in 6usize..24, d in 2usize..4) {
        let mut rng = seeded_rng(seed);
        let g = families::random_k_connected(d + 1, n.max(d + 3), 3, &mut rng).unwrap();
        let p = Configuration::random(g.vertex_count(), d, &mut rng);
        let scans = ScanSet::from_framework(&g.neighborhood_hypergraph(), &p, Trust::Euclidean).unwrap();
        let reg = euclidean_register(&transform(&scans, true, &mut rng), 1e-9).unwrap();
        prop_assert_eq!(reg.gauge, Gauge::Euclidean);
        prop_assert!(distance_mismatch(&reg.config, &p) <= 1e-6 * p.diameter());
        prop_assert!(reg.diagnostics.max_relative_length_error.unwrap() <= 1e-7);
    }

    #[test]
    fn remove_affine_reproduces_lengths(seed in any::<u64>(), n in 4usize..10) {
        let mut rng = seeded_rng(seed);
        let rho = Configuration::random(n, 2, &mut rng);
        let a = DMatrix::<f64>::from_fn(2, 2, |_, _| rng.random_range(-2.0..2.0));
        prop_assume!(a.determinant().abs() > 0.05);
        let sigma = rho.transformed(&a, &DVector::zeros(2));
        let theta = Hypergraph::new(n, [(0..n).collect::<Vec<_>>()]).unwrap();
        let reg = affine_register(&ScanSet::from_framework(&theta, &sigma, Trust::Affine).unwrap(), 1e-9).unwrap();
        let lengths: Vec<_> = Graph::complete(n).unwrap().edges().iter()
            .map(|&(u, w)| (u, w, (rho.point(u) - rho.point(w)).norm_squared()))
            .collect();
        let out = remove_affine(&reg, &lengths, 1e-9).unwrap();
        for &(u, w, l) in &lengths {
            let got = (out.config.point(u) - out.config.point(w)).norm_squared();
            prop_assert!((got - l).abs() <= 1e-7 * l);
        }
    }

    #[test]
    fn not_rigid_error_matches_generic_tester(seed in any::<u64>(), v in 4usize..10) {
        let mut rng = seeded_rng(seed);
        let m = rng.random_range(1..=v);
        let edges: Vec<Vec<usize>> = (0..m)
            .map(|_| {
                let k = rng.random_range(2..=v.min(5));
                rand::seq::index::sample(&mut rng, v, k).into_vec()
            })
            .collect();
        let mut theta = Hypergraph::new(v, edges).unwrap();
        // make sure every vertex is scanned
        let mut all = theta.hyperedges().to_vec();
        for u in 0..v {
            if !all.iter().any(|h| h.contains(&u)) {
                all.push(vec![u, (u + 1) % v]);
            }
        }
        theta = Hypergraph::new(v, all).unwrap();
        let p = Configuration::random(v, 2, &mut rng);
        let scans = transform(&ScanSet::from_framework(&theta, &p, Trust::Affine).unwrap(), false, &mut rng);
        let generic = generic_affine_rigidity_test(&theta, 2, &GenericTestOptions { seed, ..Default::default() }).unwrap();
        match affine_register(&scans, 1e-9) {
            Ok(_) => prop_assert_eq!(generic.verdict, Verdict::Rigid),
            Err(Error::NotAffinelyRigid { corank, .. }) => {
                prop_assert_eq!(generic.verdict, Verdict::Flexible);
                prop_assert_eq!(corank, generic.corank);
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}

#[test]
fn noisy_scans_complete_with_small_residual() {
    let mut rng = seeded_rng(71);
    let g = families::hex_torus(4, 4).unwrap();
    let p = Configuration::random(32, 2, &mut rng);
    let diam = p.diameter();
    let noise = 1e-4;
    let scans = ScanSet::from_framework(&g.neighborhood_hypergraph(), &p, Trust::Euclidean).unwrap();
    let noisy: Vec<Scan> = scans
        .scans()
        .iter()
        .map(|s| {
            let c = s.coords().map(|x| x + noise * diam * rng.random_range(-1.0..1.0));
            Scan::new(s.hyperedge().to_vec(), c).unwrap()
        })
        .collect();
    let noisy = ScanSet::new(32, 2, noisy, Trust::Euclidean).unwrap();
    // noise lifts the trivial singular values well above 1e-9
    let reg = euclidean_register(&noisy, 1e-3).unwrap();
    assert!(reg.diagnostics.relative_scan_residual <= 10.0 * noise, "{:?}", reg.diagnostics);
    assert!(matches!(euclidean_register(&noisy, 1e-12), Err(Error::InconsistentScans { .. })));
}

#[test]
fn single_full_scan_is_identity_like() {
    let mut rng = seeded_rng(72);
    let p = Configuration::random(7, 3, &mut rng);
    let theta = Hypergraph::new(7, [(0..7).collect::<Vec<_>>()]).unwrap();
    let reg = euclidean_register(&ScanSet::from_framework(&theta, &p, Trust::Euclidean).unwrap(), 1e-9).unwrap();
    assert!(distance_mismatch(&reg.config, &p) < 1e-10);
    assert!(reg.diagnostics.relative_scan_residual < 1e-12);
}
