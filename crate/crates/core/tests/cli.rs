use std::path::Path;
use std::process::{Command, Output};

use inertia_bounds::catalog::{bundled_dir, load_catalog};
use inertia_bounds::report::{
    bench, bundled_expected, load_expected, run, BoundKind, GraphSource, Method, Report, RunConfig, NOT_APPLICABLE,
};
use inertia_bounds::{Error, Graph};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_inertia-bounds")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn catalog_source(name: &str) -> GraphSource {
    let catalog = load_catalog(&bundled_dir()).unwrap();
    let (_, g) = catalog.iter().find(|(n, _)| n == name).unwrap();
    GraphSource::from_graph(name, g)
}

fn single(config: &RunConfig, source: GraphSource) -> inertia_bounds::report::Record {
    run(config, &[source]).unwrap().records.remove(0)
}

#[test]
fn run_examples() {
    let r = single(&RunConfig::new(2, BoundKind::Alpha), catalog_source("heawood"));
    assert_eq!((r.value.as_deref(), r.n, r.distinct), (Some("2"), Some(14), Some(4)));

    let r = single(&RunConfig::new(2, BoundKind::ChiSecond), catalog_source("poussin"));
    assert_eq!(r.value.as_deref(), Some(NOT_APPLICABLE));
    assert_eq!(r.applicable, Some(false));

    let r = single(&RunConfig::new(1, BoundKind::Alpha), GraphSource::from_graph("k2", &Graph::complete(2).unwrap()));
    assert_eq!(r.value.as_deref(), Some("1"));

    let r = single(&RunConfig::new(2, BoundKind::ChiSecond), catalog_source("petersen"));
    assert_eq!((r.value.as_deref(), r.n_plus, r.n_minus), (Some("10"), Some(1), Some(9)));
}

#[test]
fn per_graph_errors_do_not_abort_the_batch() {
    let inputs = [GraphSource::new("broken", "n=2\n0 0\n"), catalog_source("petersen")];
    let report = run(&RunConfig::new(2, BoundKind::Alpha), &inputs).unwrap();
    assert!(report.has_errors());
    assert!(report.records[0].error.is_some() && report.records[0].value.is_none());
    assert_eq!(report.records[1].value.as_deref(), Some("1"));
}

#[test]
fn config_validation() {
    let mut c = RunConfig::new(2, BoundKind::Alpha);
    c.method = Method::K1;
    assert!(c.validate().is_err());
    assert!(RunConfig::new(0, BoundKind::Alpha).validate().is_err());
    c.k = 1;
    assert!(c.validate().is_ok());
}

#[test]
fn milp_reference_matches_optimizers() {
    let mut c = RunConfig::new(2, BoundKind::Alpha);
    c.method = Method::MilpReference;
    assert_eq!(single(&c, catalog_source("heawood")).value.as_deref(), Some("2"));
    c.bound = BoundKind::ChiSecond;
    assert_eq!(single(&c, catalog_source("petersen")).value.as_deref(), Some("10"));
}

#[test]
fn report_output_is_deterministic_and_round_trips() {
    let catalog = load_catalog(&bundled_dir()).unwrap();
    let inputs: Vec<GraphSource> = catalog.iter().take(8).map(|(n, g)| GraphSource::from_graph(n.clone(), g)).collect();
    for bound in BoundKind::ALL {
        let config = RunConfig::new(2, *bound);
        let strip = |mut r: Report| {
            r.records.iter_mut().for_each(|x| x.ms = 0.0);
            r
        };
        let a = run(&config, &inputs).unwrap();
        let b = run(&config, &inputs).unwrap();
        let names: Vec<&str> = a.records.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, catalog.iter().take(8).map(|(n, _)| n.as_str()).collect::<Vec<_>>());

        let json = a.to_json().unwrap();
        assert_eq!(Report::from_json(&json).unwrap().to_json().unwrap(), json);
        assert_eq!(strip(a.clone()), strip(b));

        let csv = a.to_csv().unwrap();
        assert_eq!(csv.lines().next().unwrap(), "name,n,k,bound,value,n_plus,n_minus,method,ms");
        assert_eq!(csv.lines().count(), inputs.len() + 1);
    }
}

#[test]
fn bundled_bench_passes() {
    let expected = load_expected(&bundled_expected()).unwrap();
    let catalog = load_catalog(&bundled_dir()).unwrap();
    let summary = bench(&expected, &catalog).unwrap();
    assert!(summary.passed(), "{}", summary.diff_table());
    for (name, k, want) in [("heawood", 2, "2"), ("coxeter", 2, "7"), ("dodecahedron", 3, "4")] {
        let row = summary.rows.iter().find(|r| r.name == name && r.k == k && r.quantity == "alpha_bound").unwrap();
        assert_eq!((row.computed.as_str(), row.ok), (want, true));
    }
}

#[test]
fn corrupted_expectation_fails_with_diff() {
    let mut expected = load_expected(&bundled_expected()).unwrap();
    let heawood = expected.iter_mut().find(|e| e.name == "heawood" && e.k == 2).unwrap();
    heawood.alpha_bound = Some(3);
    let summary = bench(&expected, &load_catalog(&bundled_dir()).unwrap()).unwrap();
    assert!(!summary.passed());
    let bad: Vec<_> = summary.mismatches().collect();
    assert_eq!(bad.len(), 1);
    assert_eq!((bad[0].expected.as_str(), bad[0].computed.as_str()), ("3", "2"));
    assert!(summary.diff_table().contains("FAIL"));
}

#[test]
fn unknown_bench_name_is_an_error() {
    let mut expected = load_expected(&bundled_expected()).unwrap();
    expected[0].name = "no_such_graph".into();
    match bench(&expected, &load_catalog(&bundled_dir()).unwrap()) {
        Err(Error::Catalog { offending, .. }) => assert_eq!(offending, ["no_such_graph"]),
        other => panic!("expected a catalog error, got {other:?}"),
    }
}

#[test]
fn binary_bound_csv() {
    let o = bin(&["bound", "petersen", "heawood", "poussin", "--k", "2", "--bound", "chi_second", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let values: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(4).unwrap()).collect();
    assert_eq!(values, ["10", "7", "n/a"]);
}

#[test]
fn binary_reads_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    std::fs::write(&path, "n=5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let o = bin(&["bound", path.to_str().unwrap(), "--k", "2", "--format", "json"]);
    assert!(o.status.success());
    let report = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(report.records[0].value.as_deref(), Some("1"));
}

#[test]
fn binary_exit_codes() {
    assert_eq!(bin(&["bound", "no_such_graph"]).status.code(), Some(2));
    assert_eq!(bin(&["bound", "petersen", "--k", "2", "--method", "k1"]).status.code(), Some(2));
    assert_eq!(bin(&["bench"]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("expected.csv");
    let text = std::fs::read_to_string(bundled_expected()).unwrap();
    let corrupted = text.replacen("heawood,2,2,2,", "heawood,2,2,3,", 1);
    assert_ne!(text, corrupted);
    std::fs::write(&bad, corrupted).unwrap();
    let o = bin(&["bench", "--expected", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn binary_export_milp_writes_named_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = bin(&["export-milp", "heawood", "--k", "2", "--out", out]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let file = Path::new(out).join("heawood_alpha_unified_k2.lp");
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("\\ formulation alpha_unified"));
    assert!(text.contains("Binaries\n b0 b1 b2 b3\n"));

    let o = bin(&["export-milp", "petersen", "--bound", "chi_second", "--formulation", "fixed-ell", "--index", "3", "--out", out]);
    assert!(o.status.success());
    assert!(Path::new(out).join("petersen_chi_fixed_l3_k2.lp").exists());
}

#[test]
fn binary_oracle_and_catalog() {
    let o = bin(&["oracle", "petersen", "--k", "2", "--bound", "chi"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("petersen\t2\t10"));
    let o = bin(&["oracle", "coxeter", "--k", "1", "--max-vertices", "10"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("skipped"));
    let o = bin(&["catalog"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l.starts_with("heawood\t14\t21\ttrue\t4")));
}
