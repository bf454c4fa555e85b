//! Named graph collections: a directory of graph6 files indexed by a
//! `catalog.csv` manifest with header `name,file`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};

pub const MANIFEST: &str = "catalog.csv";

#[derive(Debug, Deserialize)]
struct Entry {
    name: String,
    file: String,
}

/// The catalog shipped with this crate.
pub fn bundled_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog")
}

/// Loads every manifest entry in order. An empty directory is an empty
/// catalog; all unreadable or unparsable entries are reported together.
pub fn load_catalog(dir: &Path) -> Result<Vec<(String, Graph)>> {
    let io = |source| Error::Io { path: dir.to_path_buf(), source };
    let mut listing = fs::read_dir(dir).map_err(io)?.peekable();
    if listing.peek().is_none() {
        return Ok(Vec::new());
    }
    let manifest = dir.join(MANIFEST);
    if !manifest.is_file() {
        return Err(Error::Catalog { message: "missing manifest".into(), offending: vec![MANIFEST.into()] });
    }
    let mut reader = csv::Reader::from_path(&manifest).map_err(|e| Error::Catalog {
        message: e.to_string(),
        offending: vec![MANIFEST.into()],
    })?;

    let mut graphs = Vec::new();
    let mut offending = Vec::new();
    let mut reasons = Vec::new();
    for record in reader.deserialize::<Entry>() {
        let entry = match record {
            Ok(e) => e,
            Err(e) => {
                offending.push(MANIFEST.to_string());
                reasons.push(e.to_string());
                continue;
            }
        };
        match fs::read_to_string(dir.join(&entry.file)) {
            Err(e) => {
                reasons.push(format!("{}: {e}", entry.file));
                offending.push(entry.file);
            }
            Ok(text) => match parse_graph6(text.trim()) {
                Ok(g) => graphs.push((entry.name.clone(), g.with_name(entry.name))),
                Err(e) => {
                    reasons.push(format!("{}: {e}", entry.file));
                    offending.push(entry.file);
                }
            },
        }
    }
    if offending.is_empty() {
        Ok(graphs)
    } else {
        Err(Error::Catalog { message: reasons.join("; "), offending })
    }
}

/// Looks up one graph of the bundled catalog by name.
pub fn bundled_graph(name: &str) -> Result<Graph> {
    load_catalog(&bundled_dir())?
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, g)| g)
        .ok_or_else(|| Error::Catalog { message: "unknown graph".into(), offending: vec![name.into()] })
}
