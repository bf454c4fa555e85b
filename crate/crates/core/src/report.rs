//! Batch runs over graph sources and the regression bench.

use std::fmt::{self, Write as _};
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alpha::{self, AlphaBoundResult, MAX_K};
use crate::chi::{self, ChiBoundResult, ZERO_TOL};
use crate::error::{Error, Result};
use crate::graph::{detect_format, parse_graph, Graph, GraphFormat};
use crate::milp::{self, AlphaVariant, ChiVariant, ExportFormat, MilpModel, MilpParams, VarKind};
use crate::oracles::{exact_alpha_k, OracleBudget};
use crate::polynomial::Polynomial;
use crate::profile::DiagonalProfile;
use crate::spectra::{default_tolerance, group_distinct, DistinctSpectrum, Spectrum};

macro_rules! keyword_enum {
    ($name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
        pub enum $name {
            $(#[serde(rename = $text)] $variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $($name::$variant => $text),+ })
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                let norm = s.replace('-', "_");
                $(if norm == $text { return Ok($name::$variant); })+
                let all: Vec<&str> = vec![$($text),+];
                Err(Error::InvalidArgument(format!("unknown {} '{s}' (expected one of {})", stringify!($name), all.join(", "))))
            }
        }
    };
}

keyword_enum!(BoundKind { Alpha => "alpha", ChiFirst => "chi_first", ChiSecond => "chi_second" });
keyword_enum!(Method { Auto => "auto", K1 => "k1", K2 => "k2", FixedK => "fixed_k", MilpReference => "milp_reference" });
keyword_enum!(OutputFormat { Table => "table", Csv => "csv", Json => "json" });

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Eigenvalue grouping tolerance; `None` uses the spectrum's default.
    pub group: Option<f64>,
    /// Relative zero threshold for sign counts of the second chi bound.
    pub zero: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { group: None, zero: ZERO_TOL }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub k: usize,
    pub bound: BoundKind,
    pub method: Method,
    pub tolerances: Tolerances,
    pub output: OutputFormat,
    /// When set, the unified model of every graph is written here as LP text.
    pub export_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(k: usize, bound: BoundKind) -> Self {
        RunConfig {
            k,
            bound,
            method: Method::Auto,
            tolerances: Tolerances::default(),
            output: OutputFormat::Table,
            export_dir: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.k > MAX_K {
            return Err(Error::InvalidArgument(format!("k must be in 1..={MAX_K}, got {}", self.k)));
        }
        match (self.method, self.k) {
            (Method::K1, k) if k != 1 => Err(Error::InvalidArgument(format!("method k1 needs k = 1, got {k}"))),
            (Method::K2, k) if k != 2 => Err(Error::InvalidArgument(format!("method k2 needs k = 2, got {k}"))),
            _ => Ok(()),
        }?;
        if let Some(t) = self.tolerances.group {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::InvalidArgument(format!("grouping tolerance must be positive, got {t}")));
            }
        }
        let z = self.tolerances.zero;
        if !(z >= 0.0 && z.is_finite()) {
            return Err(Error::InvalidArgument(format!("zero tolerance must be nonnegative, got {z}")));
        }
        Ok(())
    }

    /// The concrete method `auto` stands for at this `k`.
    pub fn resolved_method(&self) -> Method {
        match (self.method, self.k) {
            (Method::Auto, 1) => Method::K1,
            (Method::Auto, 2) => Method::K2,
            (Method::Auto, _) => Method::FixedK,
            (m, _) => m,
        }
    }
}

/// Graph text to be parsed during a run.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSource {
    pub name: String,
    pub text: String,
    pub format: Option<GraphFormat>,
}

impl GraphSource {
    pub fn new(name: impl Into<String>, text: impl Into<String>) -> Self {
        GraphSource { name: name.into(), text: text.into(), format: None }
    }

    pub fn from_graph(name: impl Into<String>, g: &Graph) -> Self {
        GraphSource { name: name.into(), text: g.to_graph6(), format: Some(GraphFormat::Graph6) }
    }

    /// Reads a file. A graph6 file with several lines yields one source per line.
    pub fn from_path(path: &Path) -> Result<Vec<Self>> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
        let stem = path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        if detect_format(&text) == GraphFormat::EdgeList {
            return Ok(vec![GraphSource { name: stem, text, format: Some(GraphFormat::EdgeList) }]);
        }
        let lines: Vec<(usize, &str)> = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        if lines.len() <= 1 {
            return Ok(vec![GraphSource { name: stem, text, format: Some(GraphFormat::Graph6) }]);
        }
        Ok(lines
            .into_iter()
            .map(|(i, l)| GraphSource { name: format!("{stem}:{}", i + 1), text: l.to_string(), format: Some(GraphFormat::Graph6) })
            .collect())
    }

    pub fn parse(&self) -> Result<Graph> {
        let format = self.format.unwrap_or_else(|| detect_format(&self.text));
        Ok(parse_graph(&self.text, format)?.with_name(self.name.clone()))
    }
}

/// One graph's outcome. `value` is an integer, a reduced fraction, or `n/a`
/// when the bound does not apply; it is absent when the graph failed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    pub n: Option<usize>,
    /// Number of distinct eigenvalues, `d + 1`.
    pub distinct: Option<usize>,
    pub k: usize,
    pub bound: BoundKind,
    pub value: Option<String>,
    pub witness: Vec<f64>,
    pub n_plus: Option<usize>,
    pub n_minus: Option<usize>,
    pub applicable: Option<bool>,
    pub method: Option<String>,
    pub ms: f64,
    pub error: Option<String>,
}

pub const NOT_APPLICABLE: &str = "n/a";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<Record>,
}

struct Outcome {
    distinct: usize,
    value: String,
    witness: Vec<f64>,
    signs: Option<(usize, usize)>,
    applicable: Option<bool>,
    method: String,
}

fn spectrum_for(g: &Graph, tol: &Tolerances) -> Result<DistinctSpectrum> {
    let s = Spectrum::of_graph(g)?;
    let t = tol.group.unwrap_or_else(|| default_tolerance(&s));
    Ok(group_distinct(&s, t))
}

fn solve_milp(model: &MilpModel) -> Result<milp::Solution> {
    milp::solve_reference(model)?.ok_or_else(|| Error::Undefined("reference MILP is infeasible".into()))
}

fn coefficients(model: &MilpModel, sol: &milp::Solution) -> Vec<f64> {
    (0..=model.meta.k).map(|i| model.var_index(&format!("a{i}")).map_or(0.0, |v| sol.values[v])).collect()
}

fn indicator(model: &MilpModel, sol: &milp::Solution, prefix: &str, j: usize) -> bool {
    model.var_index(&format!("{prefix}{j}")).is_some_and(|v| sol.values[v] > 0.5)
}

fn alpha_result(spec: &DistinctSpectrum, prof: &DiagonalProfile, k: usize, method: Method) -> Result<AlphaBoundResult> {
    match method {
        Method::K1 => Ok(alpha::optimize_k1(spec)),
        Method::K2 => alpha::optimize_k2(spec, prof),
        Method::FixedK => alpha::optimize_fixed_k(spec, prof, k),
        Method::MilpReference => {
            let model = milp::build_alpha_model(spec, prof, AlphaVariant::Unified, &MilpParams::default())?;
            let sol = solve_milp(&model)?;
            let negative_set: Vec<usize> = (0..spec.distinct_count()).filter(|&j| !indicator(&model, &sol, "b", j)).collect();
            let mut r = alpha::evaluate_bound(&Polynomial::new(coefficients(&model, &sol)), spec, prof)?;
            r.value = sol.objective.round() as usize;
            r.negative_set = negative_set;
            Ok(r)
        }
        Method::Auto => unreachable!("resolved before dispatch"),
    }
}

fn chi_second_result(
    g: &Graph,
    spec: &DistinctSpectrum,
    prof: &DiagonalProfile,
    k: usize,
    method: Method,
    zero_tol: f64,
) -> Result<ChiBoundResult> {
    match method {
        Method::K1 => chi::optimize_second_k1(spec),
        Method::K2 => chi::optimize_second_k2_with(spec, g.edge_count(), g.vertex_count(), zero_tol),
        Method::FixedK => chi::optimize_second_fixed_k(spec, prof, k),
        Method::MilpReference => {
            let model = milp::build_chi_model(spec, g.vertex_count(), k, ChiVariant::Unified, &MilpParams::default())?;
            let sol = solve_milp(&model)?;
            let (mut n_plus, mut n_minus) = (0, 0);
            for (j, &m) in spec.mults().iter().enumerate() {
                if indicator(&model, &sol, "c", j) {
                    n_plus += m;
                }
                if !indicator(&model, &sol, "b", j) {
                    n_minus += m;
                }
            }
            Ok(ChiBoundResult {
                n_plus,
                n_minus,
                witness: Polynomial::new(coefficients(&model, &sol)),
                method: chi::ChiMethod::EvaluateOnly,
            })
        }
        Method::Auto => unreachable!("resolved before dispatch"),
    }
}

fn export_unified(dir: &Path, g: &Graph, name: &str, spec: &DistinctSpectrum, prof: &DiagonalProfile, config: &RunConfig) -> Result<()> {
    let params = MilpParams::default();
    let model = match config.bound {
        BoundKind::Alpha | BoundKind::ChiFirst => milp::build_alpha_model(spec, prof, AlphaVariant::Unified, &params)?,
        BoundKind::ChiSecond => milp::build_chi_model(spec, g.vertex_count(), config.k, ChiVariant::Unified, &params)?,
    };
    write_model(dir, name, &model)
}

/// Writes `model` as LP text under its conventional file name.
pub fn write_model(dir: &Path, graph_name: &str, model: &MilpModel) -> Result<()> {
    fs::create_dir_all(dir).map_err(|source| Error::Io { path: dir.to_path_buf(), source })?;
    let path = dir.join(milp::lp_file_name(graph_name, model));
    fs::write(&path, milp::export(model, ExportFormat::LpText)).map_err(|source| Error::Io { path, source })
}

fn compute(g: &Graph, name: &str, config: &RunConfig) -> Result<Outcome> {
    let k = config.k;
    let method = config.resolved_method();
    let spec = spectrum_for(g, &config.tolerances)?;
    let prof = DiagonalProfile::new(g, k);
    if let Some(dir) = &config.export_dir {
        export_unified(dir, g, name, &spec, &prof, config)?;
    }
    match config.bound {
        BoundKind::Alpha => {
            let r = alpha_result(&spec, &prof, k, method)?;
            Ok(Outcome {
                distinct: spec.distinct_count(),
                value: r.value.to_string(),
                witness: r.witness.coeffs().to_vec(),
                signs: None,
                applicable: None,
                method: format!("{method}/{}", r.method),
            })
        }
        BoundKind::ChiFirst => {
            let r = alpha_result(&spec, &prof, k, method)?;
            Ok(Outcome {
                distinct: spec.distinct_count(),
                value: chi::first_bound(&r, g.vertex_count()).to_string(),
                witness: r.witness.coeffs().to_vec(),
                signs: None,
                applicable: Some(true),
                method: format!("{method}/{}", r.method),
            })
        }
        BoundKind::ChiSecond => match chi::check_applicable(&prof, k) {
            Err(Error::Inapplicable { .. }) => Ok(Outcome {
                distinct: spec.distinct_count(),
                value: NOT_APPLICABLE.into(),
                witness: Vec::new(),
                signs: None,
                applicable: Some(false),
                method: method.to_string(),
            }),
            Err(e) => Err(e),
            Ok(()) => {
                let r = chi_second_result(g, &spec, &prof, k, method, config.tolerances.zero)?;
                Ok(Outcome {
                    distinct: spec.distinct_count(),
                    value: r.value().to_string(),
                    witness: r.witness.coeffs().to_vec(),
                    signs: Some((r.n_plus, r.n_minus)),
                    applicable: Some(true),
                    method: format!("{method}/{}", r.method),
                })
            }
        },
    }
}

fn run_one(source: &GraphSource, config: &RunConfig) -> Record {
    let start = Instant::now();
    let mut rec = Record {
        name: source.name.clone(),
        n: None,
        distinct: None,
        k: config.k,
        bound: config.bound,
        value: None,
        witness: Vec::new(),
        n_plus: None,
        n_minus: None,
        applicable: None,
        method: None,
        ms: 0.0,
        error: None,
    };
    let outcome = source.parse().and_then(|g| {
        rec.n = Some(g.vertex_count());
        compute(&g, &source.name, config)
    });
    match outcome {
        Ok(o) => {
            rec.distinct = Some(o.distinct);
            rec.value = Some(o.value);
            rec.witness = o.witness;
            rec.n_plus = o.signs.map(|s| s.0);
            rec.n_minus = o.signs.map(|s| s.1);
            rec.applicable = o.applicable;
            rec.method = Some(o.method);
        }
        Err(e) => rec.error = Some(e.to_string()),
    }
    rec.ms = start.elapsed().as_secs_f64() * 1e3;
    rec
}

/// Evaluates every source concurrently; records keep the input order and
/// per-graph failures are recorded rather than aborting the batch.
pub fn run(config: &RunConfig, inputs: &[GraphSource]) -> Result<Report> {
    config.validate()?;
    Ok(Report { records: inputs.par_iter().map(|s| run_one(s, config)).collect() })
}

#[derive(Serialize)]
struct CsvRow<'a> {
    name: &'a str,
    n: Option<usize>,
    k: usize,
    bound: BoundKind,
    value: &'a str,
    n_plus: Option<usize>,
    n_minus: Option<usize>,
    method: &'a str,
    ms: String,
}

impl Report {
    pub fn has_errors(&self) -> bool {
        self.records.iter().any(|r| r.error.is_some())
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Table => Ok(self.to_table()),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    /// Columns `name,n,k,bound,value,n_plus,n_minus,method,ms`; failed rows
    /// carry `error` in the value column.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.records {
            w.serialize(CsvRow {
                name: &r.name,
                n: r.n,
                k: r.k,
                bound: r.bound,
                value: r.value.as_deref().unwrap_or("error"),
                n_plus: r.n_plus,
                n_minus: r.n_minus,
                method: r.method.as_deref().unwrap_or(""),
                ms: format!("{:.3}", r.ms),
            })
            .map_err(|e| Error::InvalidArgument(format!("csv encoding failed: {e}")))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(format!("csv encoding failed: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::InvalidArgument(format!("json encoding failed: {e}")))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("invalid report json: {e}")))
    }

    pub fn to_table(&self) -> String {
        let header = ["name", "n", "d+1", "k", "bound", "value", "n+", "n-", "method", "ms"];
        let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
        let rows: Vec<Vec<String>> = self
            .records
            .iter()
            .map(|r| {
                vec![
                    r.name.clone(),
                    opt(r.n),
                    opt(r.distinct),
                    r.k.to_string(),
                    r.bound.to_string(),
                    r.value.clone().unwrap_or_else(|| format!("error: {}", r.error.as_deref().unwrap_or(""))),
                    opt(r.n_plus),
                    opt(r.n_minus),
                    r.method.clone().unwrap_or_default(),
                    format!("{:.3}", r.ms),
                ]
            })
            .collect();
        format_table(&header, &rows)
    }
}

fn format_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let parts: Vec<String> = cells.zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

/// A regression target for the bench.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRecord {
    pub name: String,
    pub k: usize,
    pub alpha_exact: Option<usize>,
    pub alpha_bound: Option<usize>,
    pub chi_applicable: bool,
}

/// The expected-results file shipped with the crate.
pub fn bundled_expected() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("bench").join("expected.csv")
}

pub fn load_expected(path: &Path) -> Result<Vec<ExpectedRecord>> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    reader
        .deserialize()
        .enumerate()
        .map(|(i, r)| r.map_err(|e| Error::parse_line(i + 2, e.to_string())))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub name: String,
    pub k: usize,
    pub quantity: &'static str,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchSummary {
    pub rows: Vec<BenchRow>,
}

impl BenchSummary {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &BenchRow> {
        self.rows.iter().filter(|r| !r.ok)
    }

    /// Every comparison with its status; mismatches are marked `FAIL`.
    pub fn diff_table(&self) -> String {
        let header = ["name", "k", "quantity", "expected", "computed", "status"];
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.name.clone(),
                    r.k.to_string(),
                    r.quantity.to_string(),
                    r.expected.clone(),
                    r.computed.clone(),
                    if r.ok { "ok" } else { "FAIL" }.to_string(),
                ]
            })
            .collect();
        let mut out = format_table(&header, &rows);
        let failed = self.mismatches().count();
        let _ = writeln!(out, "{} comparisons, {failed} mismatches", self.rows.len());
        out
    }
}

fn bench_record(rec: &ExpectedRecord, g: &Graph) -> Vec<BenchRow> {
    let row = |quantity, expected: String, computed: String| BenchRow {
        name: rec.name.clone(),
        k: rec.k,
        quantity,
        ok: expected == computed,
        expected,
        computed,
    };
    let mut rows = Vec::new();
    let prof = DiagonalProfile::new(g, rec.k);
    if let Some(expected) = rec.alpha_bound {
        let computed = DistinctSpectrum::of_graph(g)
            .and_then(|spec| match rec.k {
                1 => Ok(alpha::optimize_k1(&spec)),
                2 => alpha::optimize_k2(&spec, &prof),
                k => alpha::optimize_fixed_k(&spec, &prof, k),
            })
            .map_or_else(|e| format!("error: {e}"), |r| r.value.to_string());
        rows.push(row("alpha_bound", expected.to_string(), computed));
    }
    if let Some(expected) = rec.alpha_exact {
        match exact_alpha_k(g, rec.k, &mut OracleBudget::alpha_default()) {
            Ok(v) => rows.push(row("alpha_exact", expected.to_string(), v.to_string())),
            Err(Error::Skipped { .. }) => {
                let mut r = row("alpha_exact", expected.to_string(), "skipped".into());
                r.ok = true;
                rows.push(r);
            }
            Err(e) => rows.push(row("alpha_exact", expected.to_string(), format!("error: {e}"))),
        }
    }
    let applicable = prof.is_walk_regular(rec.k);
    rows.push(row("chi_applicable", rec.chi_applicable.to_string(), applicable.to_string()));
    rows
}

/// Compares computed values against `expected` exactly. Every name must be
/// present in `catalog`.
pub fn bench(expected: &[ExpectedRecord], catalog: &[(String, Graph)]) -> Result<BenchSummary> {
    let missing: Vec<String> = expected
        .iter()
        .filter(|e| !catalog.iter().any(|(n, _)| *n == e.name))
        .map(|e| e.name.clone())
        .collect();
    if !missing.is_empty() {
        return Err(Error::Catalog { message: "expected records name unknown graphs".into(), offending: missing });
    }
    if let Some(bad) = expected.iter().find(|e| e.k == 0 || e.k > MAX_K) {
        return Err(Error::InvalidArgument(format!("{}: k must be in 1..={MAX_K}, got {}", bad.name, bad.k)));
    }
    let rows = expected
        .par_iter()
        .map(|e| {
            let g = &catalog.iter().find(|(n, _)| *n == e.name).expect("checked above").1;
            bench_record(e, g)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Ok(BenchSummary { rows })
}

/// Counts of `(binary, continuous)` variables, for quick model summaries.
pub fn model_size(model: &MilpModel) -> (usize, usize) {
    let bins = model.vars.iter().filter(|v| v.kind == VarKind::Binary).count();
    (bins, model.vars.len() - bins)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2_source() -> GraphSource {
        GraphSource::new("k2", "A_")
    }

    #[test]
    fn keywords_parse_and_print() {
        for b in BoundKind::ALL {
            assert_eq!(b.to_string().parse::<BoundKind>().unwrap(), *b);
        }
        assert_eq!("fixed-k".parse::<Method>().unwrap(), Method::FixedK);
        assert!("nope".parse::<OutputFormat>().is_err());
    }

    #[test]
    fn method_must_match_k() {
        let mut c = RunConfig::new(3, BoundKind::Alpha);
        c.method = Method::K2;
        assert!(c.validate().is_err());
        c.k = 2;
        assert!(c.validate().is_ok());
        assert!(RunConfig::new(0, BoundKind::Alpha).validate().is_err());
    }

    #[test]
    fn complete_graph_on_two_vertices() {
        let report = run(&RunConfig::new(1, BoundKind::Alpha), &[k2_source()]).unwrap();
        assert_eq!(report.records[0].value.as_deref(), Some("1"));
    }

    #[test]
    fn failures_stay_per_graph() {
        let inputs = [GraphSource::new("bad", "~~~"), k2_source()];
        let report = run(&RunConfig::new(1, BoundKind::Alpha), &inputs).unwrap();
        assert!(report.records[0].error.is_some());
        assert_eq!(report.records[1].value.as_deref(), Some("1"));
        assert!(report.has_errors());
    }

    #[test]
    fn irregular_graph_is_not_applicable() {
        let p3 = GraphSource::from_graph("p3", &Graph::path(3).unwrap());
        let report = run(&RunConfig::new(2, BoundKind::ChiSecond), &[p3]).unwrap();
        assert_eq!(report.records[0].value.as_deref(), Some(NOT_APPLICABLE));
        assert_eq!(report.records[0].applicable, Some(false));
    }

    #[test]
    fn csv_header() {
        let report = run(&RunConfig::new(1, BoundKind::Alpha), &[k2_source()]).unwrap();
        let csv = report.to_csv().unwrap();
        assert_eq!(csv.lines().next(), Some("name,n,k,bound,value,n_plus,n_minus,method,ms"));
    }

    #[test]
    fn bench_flags_corrupted_value() {
        let catalog = vec![("c5".to_string(), Graph::cycle(5).unwrap())];
        let good = ExpectedRecord { name: "c5".into(), k: 1, alpha_exact: Some(2), alpha_bound: Some(2), chi_applicable: true };
        assert!(bench(std::slice::from_ref(&good), &catalog).unwrap().passed());
        let bad = ExpectedRecord { alpha_bound: Some(3), ..good };
        let summary = bench(&[bad], &catalog).unwrap();
        assert!(!summary.passed());
        assert!(summary.diff_table().contains("FAIL"));
    }

    #[test]
    fn bench_rejects_unknown_names() {
        let e = ExpectedRecord { name: "nope".into(), k: 2, alpha_exact: None, alpha_bound: Some(1), chi_applicable: true };
        assert!(matches!(bench(&[e], &[]), Err(Error::Catalog { .. })));
    }
}
