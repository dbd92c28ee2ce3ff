//! Dump files: one serialized object per line, plus a one-line JSON
//! manifest written next to the dump as `<path>.manifest`.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

/// Generator identification stored in every manifest.
pub const GENERATOR: &str = concat!("smallcover ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    /// What the lines hold: `mn` (bit matrices) or `dags` (digraphs).
    pub kind: String,
    pub polytope: String,
    pub count: String,
    pub generator: String,
}

pub fn manifest_path(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".manifest");
    PathBuf::from(name)
}

/// Writes every item's `Display` form on its own line, then the manifest.
/// Returns the number of lines written.
pub fn write_dump<I, T>(path: &Path, kind: &str, polytope: &str, items: I) -> std::io::Result<u64>
where
    I: IntoIterator<Item = T>,
    T: std::fmt::Display,
{
    let mut out = BufWriter::new(File::create(path)?);
    let mut count = 0u64;
    for item in items {
        writeln!(out, "{item}")?;
        count += 1;
    }
    out.flush()?;
    let manifest = Manifest {
        kind: kind.to_string(),
        polytope: polytope.to_string(),
        count: count.to_string(),
        generator: GENERATOR.to_string(),
    };
    let mut m = File::create(manifest_path(path))?;
    writeln!(m, "{}", serde_json::to_string(&manifest)?)?;
    Ok(count)
}

pub fn read_manifest(path: &Path) -> std::io::Result<Manifest> {
    let text = std::fs::read_to_string(manifest_path(path))?;
    Ok(serde_json::from_str(text.trim())?)
}
