use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use inertia_bounds::catalog::{bundled_dir, load_catalog};
use inertia_bounds::milp::{build_alpha_model, build_chi_model, AlphaVariant, ChiVariant, MilpParams};
use inertia_bounds::oracles::{exact_alpha_k, exact_chi_k, OracleBudget};
use inertia_bounds::report::{
    bench, bundled_expected, load_expected, model_size, run, write_model, BoundKind, GraphSource, Method,
    OutputFormat, RunConfig, Tolerances,
};
use inertia_bounds::spectra::{default_tolerance, group_distinct};
use inertia_bounds::{DiagonalProfile, DistinctSpectrum, Error, Graph, Spectrum};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "inertia-bounds", version, about = "Inertia-type spectral bounds for graph powers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a bound for each input graph.
    Bound(BoundArgs),
    /// Write MILP models in LP format.
    ExportMilp(ExportArgs),
    /// Exact alpha_k or chi_k by exhaustive search.
    Oracle(OracleArgs),
    /// Compare computed values with the expected-results file.
    Bench(BenchArgs),
    /// List the bundled named graphs.
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct BoundArgs {
    /// Graph files (graph6 or edge list) or catalog names; all catalog graphs when empty.
    inputs: Vec<String>,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value = "alpha")]
    bound: BoundKind,
    #[arg(long, default_value = "auto")]
    method: Method,
    #[arg(long, default_value = "table")]
    format: OutputFormat,
    /// Eigenvalue grouping tolerance.
    #[arg(long)]
    tol_group: Option<f64>,
    /// Relative zero threshold for sign counts.
    #[arg(long)]
    tol_zero: Option<f64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write each graph's unified MILP into this directory.
    #[arg(long)]
    export_dir: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    /// A graph file or catalog name.
    input: String,
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// `alpha` or `chi_second`.
    #[arg(long, default_value = "alpha")]
    bound: BoundKind,
    /// `unified`, or `per-vertex` / `fixed-ell` for the original models.
    #[arg(long, default_value = "unified")]
    formulation: String,
    /// Vertex `u` or count `l`; every value when omitted.
    #[arg(long)]
    index: Option<usize>,
    #[arg(long)]
    tol_group: Option<f64>,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    inputs: Vec<String>,
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// `alpha` or `chi`.
    #[arg(long, default_value = "alpha")]
    bound: String,
    #[arg(long)]
    max_vertices: Option<usize>,
    #[arg(long)]
    max_seconds: Option<f64>,
}

#[derive(Args)]
struct BenchArgs {
    /// Expected-results CSV; the bundled file when omitted.
    #[arg(long)]
    expected: Option<PathBuf>,
    /// Catalog directory; the bundled catalog when omitted.
    #[arg(long)]
    catalog: Option<PathBuf>,
    #[arg(long, default_value = "table")]
    format: OutputFormat,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long)]
    dir: Option<PathBuf>,
}

fn resolve_inputs(args: &[String]) -> Result<Vec<GraphSource>, Error> {
    let catalog = load_catalog(&bundled_dir())?;
    if args.is_empty() {
        return Ok(catalog.iter().map(|(name, g)| GraphSource::from_graph(name.clone(), g)).collect());
    }
    let mut out = Vec::new();
    for arg in args {
        let path = Path::new(arg);
        if path.exists() {
            out.extend(GraphSource::from_path(path)?);
        } else if let Some((name, g)) = catalog.iter().find(|(name, _)| name == arg) {
            out.push(GraphSource::from_graph(name.clone(), g));
        } else {
            return Err(Error::Catalog { message: "not a file or catalog name".into(), offending: vec![arg.clone()] });
        }
    }
    Ok(out)
}

fn resolve_graph(arg: &str) -> Result<Graph, Error> {
    let mut sources = resolve_inputs(&[arg.to_string()])?;
    if sources.len() != 1 {
        return Err(Error::InvalidArgument(format!("{arg} holds {} graphs, expected one", sources.len())));
    }
    sources.remove(0).parse()
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| Error::Io { path: path.to_path_buf(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_bound(a: BoundArgs) -> Result<u8, Error> {
    let mut config = RunConfig::new(a.k, a.bound);
    config.method = a.method;
    config.output = a.format;
    config.export_dir = a.export_dir;
    config.tolerances = Tolerances { group: a.tol_group, zero: a.tol_zero.unwrap_or(Tolerances::default().zero) };
    config.validate()?;
    let report = run(&config, &resolve_inputs(&a.inputs)?)?;
    emit(&report.render(config.output)?, a.out.as_deref())?;
    for r in report.records.iter().filter(|r| r.error.is_some()) {
        eprintln!("{}: {}", r.name, r.error.as_deref().unwrap_or_default());
    }
    Ok(if report.has_errors() { EXIT_INPUT } else { 0 })
}

fn cmd_export(a: ExportArgs) -> Result<u8, Error> {
    let g = resolve_graph(&a.input)?;
    let name = g.name().unwrap_or("graph").to_string();
    let spectrum = Spectrum::of_graph(&g)?;
    let spec: DistinctSpectrum = group_distinct(&spectrum, a.tol_group.unwrap_or_else(|| default_tolerance(&spectrum)));
    let prof = DiagonalProfile::new(&g, a.k);
    let n = g.vertex_count();
    let params = MilpParams::default();
    let formulation = a.formulation.replace('-', "_");

    let models = match (a.bound, formulation.as_str()) {
        (BoundKind::Alpha | BoundKind::ChiFirst, "unified") => vec![build_alpha_model(&spec, &prof, AlphaVariant::Unified, &params)?],
        (BoundKind::Alpha | BoundKind::ChiFirst, "per_vertex") => {
            let us: Vec<usize> = a.index.map_or_else(|| (0..n).collect(), |u| vec![u]);
            us.into_iter()
                .map(|u| build_alpha_model(&spec, &prof, AlphaVariant::PerVertex(u), &params))
                .collect::<Result<_, _>>()?
        }
        (BoundKind::ChiSecond, "unified") => vec![build_chi_model(&spec, n, a.k, ChiVariant::Unified, &params)?],
        (BoundKind::ChiSecond, "fixed_ell") => {
            let ells: Vec<usize> = a.index.map_or_else(|| (1..n).collect(), |l| vec![l]);
            ells.into_iter()
                .map(|l| build_chi_model(&spec, n, a.k, ChiVariant::FixedEll(l), &params))
                .collect::<Result<_, _>>()?
        }
        (bound, f) => return Err(Error::InvalidArgument(format!("formulation '{f}' does not fit bound {bound}"))),
    };
    for model in &models {
        write_model(&a.out, &name, model)?;
        let (bins, conts) = model_size(model);
        println!(
            "{} ({bins} binaries, {conts} continuous, {} rows)",
            a.out.join(inertia_bounds::milp::lp_file_name(&name, model)).display(),
            model.constraints.len()
        );
    }
    Ok(0)
}

fn cmd_oracle(a: OracleArgs) -> Result<u8, Error> {
    let chi = match a.bound.as_str() {
        "alpha" => false,
        "chi" => true,
        other => return Err(Error::InvalidArgument(format!("oracle bound must be alpha or chi, got '{other}'"))),
    };
    let mut failed = false;
    println!("name\tk\t{}", if chi { "chi_k" } else { "alpha_k" });
    for source in resolve_inputs(&a.inputs)? {
        let mut budget = if chi { OracleBudget::chi_default() } else { OracleBudget::alpha_default() };
        budget.max_vertices = a.max_vertices.unwrap_or(budget.max_vertices);
        budget.max_seconds = a.max_seconds.unwrap_or(budget.max_seconds);
        let value = source.parse().and_then(|g| {
            if chi {
                exact_chi_k(&g, a.k, &mut budget)
            } else {
                exact_alpha_k(&g, a.k, &mut budget)
            }
        });
        match value {
            Ok(v) => println!("{}\t{}\t{v}", source.name, a.k),
            Err(Error::Skipped { note }) => println!("{}\t{}\tskipped ({note})", source.name, a.k),
            Err(e) => {
                failed = true;
                println!("{}\t{}\terror ({e})", source.name, a.k);
            }
        }
    }
    Ok(if failed { EXIT_INPUT } else { 0 })
}

fn cmd_bench(a: BenchArgs) -> Result<u8, Error> {
    let expected = load_expected(&a.expected.unwrap_or_else(bundled_expected))?;
    let catalog = load_catalog(&a.catalog.unwrap_or_else(bundled_dir))?;
    let summary = bench(&expected, &catalog)?;
    match a.format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&summary).map_err(|e| Error::InvalidArgument(e.to_string()))?
        ),
        _ => print!("{}", summary.diff_table()),
    }
    Ok(if summary.passed() { 0 } else { EXIT_MISMATCH })
}

fn cmd_catalog(a: CatalogArgs) -> Result<u8, Error> {
    let graphs = load_catalog(&a.dir.unwrap_or_else(bundled_dir))?;
    println!("name\tn\tedges\tregular\tdistinct_eigenvalues");
    for (name, g) in graphs {
        let distinct = DistinctSpectrum::of_graph(&g).map_or_else(|e| e.to_string(), |s| s.distinct_count().to_string());
        println!("{name}\t{}\t{}\t{}\t{distinct}", g.vertex_count(), g.edge_count(), g.is_regular());
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Bound(a) => cmd_bound(a),
        Command::ExportMilp(a) => cmd_export(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Catalog(a) => cmd_catalog(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
