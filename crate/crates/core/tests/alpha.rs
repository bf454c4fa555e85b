mod common;

use proptest::prelude::*;

use inertia_bounds::alpha::{
    evaluate_bound, full_diagonal_constraints, optimize_fixed_k, optimize_fixed_k_with_rows, optimize_k1, optimize_k2,
    prune_diagonal_constraints, AlphaBoundResult, AlphaMethod,
};
use inertia_bounds::catalog::bundled_graph;
use inertia_bounds::oracles::grid_search_bound;
use inertia_bounds::{DiagonalProfile, DistinctSpectrum, Graph, Polynomial};

use common::*;

fn setup(g: &Graph, k: usize) -> (DistinctSpectrum, DiagonalProfile) {
    (DistinctSpectrum::of_graph(g).unwrap(), DiagonalProfile::new(g, k))
}

fn named(name: &str, k: usize) -> (DistinctSpectrum, DiagonalProfile) {
    setup(&bundled_graph(name).unwrap(), k)
}

fn by_method(g: &Graph, k: usize) -> AlphaBoundResult {
    let (spec, prof) = setup(g, k);
    match k {
        1 => optimize_k1(&spec),
        2 => optimize_k2(&spec, &prof).unwrap(),
        _ => optimize_fixed_k(&spec, &prof, k).unwrap(),
    }
}

fn check_result_shape(r: &AlphaBoundResult, spec: &DistinctSpectrum) -> Result<(), TestCaseError> {
    prop_assert_eq!(r.value, spec.n() - spec.weight_of(r.negative_set.iter().copied()));
    prop_assert!((1..=spec.n()).contains(&r.value));
    for &j in &r.negative_set {
        prop_assert!(r.witness.eval(spec.thetas()[j]) <= -1.0 + 1e-6, "{:?} at {}", r.witness, spec.thetas()[j]);
    }
    Ok(())
}

#[test]
fn evaluate_bound_examples() {
    let (spec, prof) = setup(&Graph::empty(4).unwrap(), 2);
    assert_eq!(evaluate_bound(&Polynomial::constant(1.0), &spec, &prof).unwrap().value, 4);

    let (spec, prof) = named("heawood", 2);
    let r = evaluate_bound(&Polynomial::new(vec![-3.0, 0.0, 1.0]), &spec, &prof).unwrap();
    assert_eq!((r.value, r.method), (2, AlphaMethod::EvaluateOnly));

    let (spec, prof) = setup(&Graph::cycle(5).unwrap(), 2);
    assert_eq!(evaluate_bound(&Polynomial::new(vec![-2.0, 1.0, 1.0]), &spec, &prof).unwrap().value, 1);
}

#[test]
fn evaluate_bound_rejects_excess_degree() {
    let (spec, prof) = setup(&Graph::cycle(5).unwrap(), 1);
    assert!(evaluate_bound(&Polynomial::new(vec![0.0, 0.0, 1.0]), &spec, &prof).is_err());
}

#[test]
fn k1_examples() {
    let value = |g: Graph| optimize_k1(&DistinctSpectrum::of_graph(&g).unwrap()).value;
    assert_eq!(value(Graph::complete(2).unwrap()), 1);
    assert_eq!(value(bundled_graph("petersen").unwrap()), 4);
    assert_eq!(value(Graph::cycle(4).unwrap()), 3);
    assert_eq!(value(Graph::cycle(5).unwrap()), 2);
}

#[test]
fn k2_examples() {
    for (name, want) in [("heawood", 2), ("coxeter", 7), ("icosahedron", 4)] {
        let (spec, prof) = named(name, 2);
        let r = optimize_k2(&spec, &prof).unwrap();
        assert_eq!(r.value, want, "{name}");
        assert_eq!(r.method, AlphaMethod::K2TwoPointer);
    }
}

#[test]
fn pentagon_k2_matches_grid_and_exact_oracle() {
    let c5 = Graph::cycle(5).unwrap();
    let (spec, prof) = setup(&c5, 2);
    assert_eq!(optimize_k2(&spec, &prof).unwrap().value, 1);
    assert_eq!(grid_search_bound(&spec, &prof, 2, 5.0, 0.1).unwrap().value, 1);
    assert_eq!(brute_alpha_k(&c5, 2), 1);
}

#[test]
fn fixed_k_examples() {
    for (name, want) in [("heawood", 1), ("dodecahedron", 4)] {
        let (spec, prof) = named(name, 3);
        let r = optimize_fixed_k(&spec, &prof, 3).unwrap();
        assert_eq!((r.value, r.method), (want, AlphaMethod::FixedKEnum), "{name}");
    }
    let (spec, prof) = named("petersen", 3);
    assert!(optimize_fixed_k(&spec, &prof, 0).is_err());
    assert!(optimize_fixed_k(&spec, &prof, 6).is_err());
    assert!(optimize_fixed_k(&spec, &DiagonalProfile::new(&bundled_graph("petersen").unwrap(), 2), 3).is_err());
}

#[test]
fn fixed_k2_agrees_with_two_pointer_on_catalog() {
    for (name, g) in inertia_bounds::catalog::load_catalog(&inertia_bounds::catalog::bundled_dir()).unwrap() {
        let (spec, prof) = setup(&g, 2);
        assert_eq!(
            optimize_k2(&spec, &prof).unwrap().value,
            optimize_fixed_k(&spec, &prof, 2).unwrap().value,
            "{name}"
        );
    }
}

#[test]
fn pruning_examples() {
    let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (0, 5), (1, 4), (2, 5)]).unwrap();
    let mut degrees = g.degrees();
    degrees.sort_unstable();
    degrees.dedup();
    assert_eq!(degrees, [2, 3, 4]);
    let prof = DiagonalProfile::new(&g, 2);
    let rows = prune_diagonal_constraints(&prof, 2);
    let mut picked: Vec<i64> = rows.iter().map(|r| r.coeffs[2] as i64).collect();
    picked.sort_unstable();
    assert_eq!(picked, [prof.d_min(), prof.d_max()]);

    let prof = DiagonalProfile::new(&bundled_graph("nonredundant_k3").unwrap(), 3);
    let mut points: Vec<(i64, i64)> =
        prune_diagonal_constraints(&prof, 3).iter().map(|r| (r.coeffs[2] as i64, r.coeffs[3] as i64)).collect();
    points.sort_unstable();
    assert_eq!(points, [(2, 0), (2, 2), (3, 0), (3, 4), (4, 2), (4, 4)]);

    let prof = DiagonalProfile::new(&bundled_graph("heawood").unwrap(), 3);
    assert_eq!(prune_diagonal_constraints(&prof, 3).len(), 1);
    assert_eq!(prune_diagonal_constraints(&prof, 1).len(), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bounds_are_sound(g in arb_graph(1, 11), k in 1usize..=3) {
        let r = by_method(&g, k);
        prop_assert!(r.value >= brute_alpha_k(&g, k), "value {} for k={}", r.value, k);
    }

    #[test]
    fn results_are_consistent(g in arb_graph(1, 11), k in 1usize..=3) {
        let (spec, prof) = setup(&g, k);
        let r = by_method(&g, k);
        check_result_shape(&r, &spec)?;
        prop_assert!(evaluate_bound(&r.witness, &spec, &prof).unwrap().value <= r.value);
    }

    #[test]
    fn diagonal_shift_never_hurts(g in arb_graph(1, 11), k in 1usize..=3) {
        let (spec, prof) = setup(&g, k);
        let r = by_method(&g, k);
        let coeffs = r.witness.coeffs();
        let gamma = (0..g.vertex_count()).map(|v| prof.poly_diag(v, coeffs)).fold(f64::INFINITY, f64::min);
        prop_assert!(gamma >= -1e-6);
        let shifted = r.witness.shifted(-gamma);
        let min_diag = (0..g.vertex_count()).map(|v| prof.poly_diag(v, shifted.coeffs())).fold(f64::INFINITY, f64::min);
        prop_assert!(min_diag.abs() <= 1e-6 * gamma.abs().max(1.0));
        for &j in &r.negative_set {
            prop_assert!(shifted.eval(spec.thetas()[j]) < 0.0);
        }
        let before = evaluate_bound(&r.witness, &spec, &prof).unwrap().value;
        prop_assert!(evaluate_bound(&shifted, &spec, &prof).unwrap().value <= before);
    }

    #[test]
    fn closed_forms_agree_with_enumeration(g in arb_graph(1, 12)) {
        let (spec, prof) = setup(&g, 2);
        prop_assert_eq!(optimize_k1(&spec).value, optimize_fixed_k(&spec, &prof, 1).unwrap().value);
        prop_assert_eq!(optimize_k2(&spec, &prof).unwrap().value, optimize_fixed_k(&spec, &prof, 2).unwrap().value);
    }

    #[test]
    fn pruning_is_lossless(g in arb_graph(2, 12), k in 2usize..=3) {
        let (spec, prof) = setup(&g, k);
        let pruned = optimize_fixed_k_with_rows(&spec, k, &prune_diagonal_constraints(&prof, k)).unwrap();
        let full = optimize_fixed_k_with_rows(&spec, k, &full_diagonal_constraints(&prof, k)).unwrap();
        prop_assert_eq!(pruned.value, full.value);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn optimum_lies_between_exact_and_grid(g in arb_graph(2, 10), k in 1usize..=2) {
        let (spec, prof) = setup(&g, k);
        let r = by_method(&g, k);
        let grid = grid_search_bound(&spec, &prof, k, 5.0, 0.25).unwrap();
        prop_assert!(brute_alpha_k(&g, k) <= r.value);
        prop_assert!(r.value <= grid.value, "optimizer {} above grid {}", r.value, grid.value);
    }
}
