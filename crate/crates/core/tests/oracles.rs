mod common;

use proptest::prelude::*;

use inertia_bounds::catalog::{bundled_dir, bundled_graph, load_catalog};
use inertia_bounds::oracles::{exact_alpha_k, exact_chi_k, grid_search_bound, OracleBudget};
use inertia_bounds::{DiagonalProfile, DistinctSpectrum, Error, Graph};

use common::*;

fn alpha(g: &Graph, k: usize) -> usize {
    exact_alpha_k(g, k, &mut OracleBudget::alpha_default()).unwrap()
}

fn chi(g: &Graph, k: usize) -> usize {
    exact_chi_k(g, k, &mut OracleBudget::chi_default()).unwrap()
}

#[test]
fn alpha_examples() {
    assert_eq!(alpha(&bundled_graph("petersen").unwrap(), 2), 1);
    assert_eq!(alpha(&bundled_graph("heawood").unwrap(), 3), 1);
    assert_eq!(alpha(&Graph::cycle(6).unwrap(), 2), 2);
    assert_eq!(brute_alpha_k(&Graph::cycle(6).unwrap(), 2), 2);
}

#[test]
fn chi_examples() {
    assert_eq!(chi(&bundled_graph("petersen").unwrap(), 2), 10);
    assert_eq!(chi(&Graph::cycle(5).unwrap(), 1), 3);
    let heawood = bundled_graph("heawood").unwrap();
    assert_eq!(chi(&heawood, 2), 7);
    assert_eq!(brute_chi_k(&heawood, 2), 7);
}

#[test]
fn budget_overruns_are_skips_with_notes() {
    let g = bundled_graph("coxeter").unwrap();
    let mut budget = OracleBudget::new(20, 60.0);
    match exact_alpha_k(&g, 1, &mut budget) {
        Err(Error::Skipped { note }) => assert!(note.contains("28"), "{note}"),
        other => panic!("expected a skip, got {other:?}"),
    }
    assert!(budget.note.is_some());
    let mut budget = OracleBudget::new(30, 0.0);
    let r = exact_chi_k(&bundled_graph("tutte_coxeter").unwrap(), 1, &mut budget);
    assert!(matches!(r, Ok(2) | Err(Error::Skipped { .. })));
}

#[test]
fn grid_examples() {
    let run = |g: &Graph, k: usize, half: f64, step: f64| {
        let spec = DistinctSpectrum::of_graph(g).unwrap();
        grid_search_bound(&spec, &DiagonalProfile::new(g, k), k, half, step)
    };
    assert_eq!(run(&Graph::cycle(5).unwrap(), 2, 5.0, 0.1).unwrap().value, 1);
    assert_eq!(run(&Graph::complete(2).unwrap(), 1, 2.0, 0.5).unwrap().value, 1);
    assert_eq!(run(&Graph::empty(3).unwrap(), 1, 2.0, 0.5).unwrap().value, 3);
    assert!(matches!(run(&Graph::cycle(5).unwrap(), 3, 100.0, 0.001), Err(Error::Capability(_))));
    assert!(run(&Graph::cycle(5).unwrap(), 4, 1.0, 0.5).is_err());
}

#[test]
fn catalog_satisfies_the_ratio_inequality() {
    for (name, g) in load_catalog(&bundled_dir()).unwrap() {
        if g.vertex_count() > 20 {
            continue;
        }
        for k in 1..=2 {
            let (a, c) = (alpha(&g, k), chi(&g, k));
            assert!(a * c >= g.vertex_count(), "{name} k={k}: alpha {a}, chi {c}");
        }
    }
}

proptest! {
    #[test]
    fn alpha_matches_subset_enumeration(g in arb_graph(1, 12), k in 1usize..=3) {
        prop_assert_eq!(alpha(&g, k), brute_alpha_k(&g, k));
    }

    #[test]
    fn chi_matches_backtracking(g in arb_graph(1, 9), k in 1usize..=2) {
        prop_assert_eq!(chi(&g, k), brute_chi_k(&g, k));
    }

    #[test]
    fn monotone_in_k_and_ratio_inequality(g in arb_graph(1, 12)) {
        let n = g.vertex_count();
        let alphas: Vec<usize> = (1..=4).map(|k| alpha(&g, k)).collect();
        let chis: Vec<usize> = (1..=4).map(|k| chi(&g, k)).collect();
        prop_assert!(alphas.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(chis.windows(2).all(|w| w[0] <= w[1]));
        for (a, c) in alphas.iter().zip(&chis) {
            prop_assert!(a * c >= n);
        }
    }
}
