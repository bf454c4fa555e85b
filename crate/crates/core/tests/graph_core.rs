#![allow(clippy::needless_range_loop)]

mod common;

use proptest::prelude::*;

use inertia_bounds::catalog::{bundled_graph, load_catalog};
use inertia_bounds::graph::{parse_edge_list, parse_graph, parse_graph6, GraphFormat};
use inertia_bounds::profile::is_k_partially_walk_regular;
use inertia_bounds::{DiagonalProfile, Error, Graph};

use common::*;

/// Plain graph6 encoder for `n <= 62`, written from the format description.
fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n <= 62);
    let mut bits = Vec::new();
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = String::from((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let x = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        out.push((63 + x) as char);
    }
    out
}

#[test]
fn graph6_triangle() {
    let g = parse_graph6("Bw").unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
    assert_eq!(encode_graph6(&Graph::complete(3).unwrap()), "Bw");
}

#[test]
fn edge_list_examples() {
    let g = parse_graph("n=2\n0 1", GraphFormat::EdgeList).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
    assert!(matches!(parse_edge_list("n=3\n0 0"), Err(Error::Parse { .. })));
    assert!(matches!(parse_edge_list("n=3\n0 1\n1 0"), Err(Error::Parse { .. })));
    assert!(matches!(parse_edge_list("n=3\n0 5"), Err(Error::Parse { .. })));
}

#[test]
fn parse_errors_name_their_location() {
    let msg = parse_edge_list("n=3\n0 1\n2 2").unwrap_err().to_string();
    assert!(msg.contains("line 3"), "{msg}");
    let msg = parse_graph6("B!").unwrap_err().to_string();
    assert!(msg.contains("byte 1"), "{msg}");
}

#[test]
fn diagonal_profile_examples() {
    let k3 = DiagonalProfile::new(&Graph::complete(3).unwrap(), 3);
    assert!(k3.rows().all(|r| r == [1, 0, 2, 2]));
    let k2 = DiagonalProfile::new(&Graph::complete(2).unwrap(), 2);
    assert!(k2.rows().all(|r| r == [1, 0, 1]));
    assert_eq!((k2.d_min(), k2.d_max()), (1, 1));
    let petersen = bundled_graph("petersen").unwrap();
    let prof = DiagonalProfile::new(&petersen, 3);
    let reference = reference_diagonals(&petersen, 3);
    for v in 0..10 {
        assert_eq!(prof.row(v), [1, 0, 3, 0]);
        assert_eq!(prof.row(v), reference[v].as_slice());
    }
}

#[test]
fn graph_power_examples() {
    let petersen = bundled_graph("petersen").unwrap();
    assert_eq!(petersen.power(2).unwrap().edge_count(), 45);
    let c6 = Graph::cycle(6).unwrap();
    let sq = c6.power(2).unwrap();
    let dist = distance_table(&c6);
    for v in 0..6 {
        let expected = (0..6).filter(|&u| dist[v][u].is_some_and(|d| (1..=2).contains(&d))).count();
        assert_eq!(sq.degree(v), expected);
        assert_eq!(expected, 4);
    }
    assert_eq!(c6.power(1).unwrap().edges(), c6.edges());
}

#[test]
fn walk_regularity_examples() {
    assert!(is_k_partially_walk_regular(&bundled_graph("petersen").unwrap(), 3));
    assert!(!is_k_partially_walk_regular(&Graph::path(3).unwrap(), 2));
    let frucht = bundled_graph("frucht").unwrap();
    let triangles: Vec<usize> = (0..12).map(|v| frucht.triangles_at(v)).collect();
    assert!(triangles.iter().any(|&t| t != triangles[0]));
    assert!(is_k_partially_walk_regular(&frucht, 2));
    assert!(!is_k_partially_walk_regular(&frucht, 3));
}

#[test]
fn catalog_heawood_validates() {
    let g = bundled_graph("heawood").unwrap();
    assert_eq!(g.vertex_count(), 14);
    assert!(g.degrees().iter().all(|&d| d == 3));
    let ev = reference_eigenvalues(&g);
    let s2 = 2f64.sqrt();
    let expected = [3.0, s2, s2, s2, s2, s2, s2, -s2, -s2, -s2, -s2, -s2, -s2, -3.0];
    for (a, b) in ev.iter().zip(expected) {
        assert!((a - b).abs() < 1e-9, "{ev:?}");
    }
}

#[test]
fn catalog_directory_cases() {
    let dir = tempfile::tempdir().unwrap();
    assert!(load_catalog(dir.path()).unwrap().is_empty());
    std::fs::write(dir.path().join("catalog.csv"), "name,file\nk3,k3.g6\nghost,ghost.g6\n").unwrap();
    std::fs::write(dir.path().join("k3.g6"), "Bw\n").unwrap();
    match load_catalog(dir.path()) {
        Err(Error::Catalog { offending, .. }) => assert_eq!(offending, vec!["ghost.g6".to_string()]),
        other => panic!("expected a catalog error, got {other:?}"),
    }
}

#[test]
fn bundled_catalog_loads_with_distinct_names() {
    let graphs = load_catalog(&inertia_bounds::catalog::bundled_dir()).unwrap();
    let mut names: Vec<&str> = graphs.iter().map(|(n, _)| n.as_str()).collect();
    let total = names.len();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), total);
    assert!(total >= 20);
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in arb_graph(1, 40)) {
        let text = g.to_graph6();
        prop_assert_eq!(&text, &encode_graph6(&g));
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn edge_list_roundtrip(g in arb_graph(1, 15)) {
        let back = parse_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn adjacency_is_symmetric_with_zero_diagonal(g in arb_graph(1, 15)) {
        let a = g.adjacency_matrix();
        for u in 0..g.vertex_count() {
            prop_assert_eq!(a[u][u], 0.0);
            for v in 0..g.vertex_count() {
                prop_assert_eq!(a[u][v], a[v][u]);
                prop_assert_eq!(a[u][v] == 1.0, g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn diagonal_sums_are_traces(g in arb_graph(1, 12), k in 0usize..6) {
        let prof = DiagonalProfile::new(&g, k);
        let reference = reference_diagonals(&g, k);
        for v in 0..g.vertex_count() {
            prop_assert_eq!(prof.row(v), reference[v].as_slice());
        }
        if k >= 2 {
            prop_assert_eq!(prof.trace(2), 2 * g.edge_count() as i64);
            prop_assert!(prof.rows().all(|r| (prof.d_min()..=prof.d_max()).contains(&r[2])));
        }
        if k >= 3 {
            prop_assert_eq!(prof.trace(3), 6 * g.triangle_count() as i64);
        }
    }

    #[test]
    fn powers_are_nested(g in arb_graph(1, 12), k in 2usize..5) {
        let lower = g.power(k - 1).unwrap();
        let upper = g.power(k).unwrap();
        prop_assert_eq!(upper.vertex_count(), g.vertex_count());
        for &(u, v) in lower.edges() {
            prop_assert!(upper.has_edge(u, v));
        }
        let dist = distance_table(&g);
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                let near = u != v && dist[u][v].is_some_and(|d| d <= k);
                prop_assert_eq!(upper.has_edge(u, v), near);
            }
        }
    }

    #[test]
    fn walk_regularity_is_downward_closed(g in arb_graph(1, 10), k in 0usize..5) {
        if is_k_partially_walk_regular(&g, k) {
            for j in 0..=k {
                prop_assert!(is_k_partially_walk_regular(&g, j));
            }
        }
    }
}
