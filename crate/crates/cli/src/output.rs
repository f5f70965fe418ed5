//! Rendering and writing reports.

use std::fmt::Display;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::CliError;

pub fn json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

/// Tab-separated table: a header row, then one line per row.
#[derive(Debug, Default)]
pub struct Tsv {
    text: String,
}

impl Tsv {
    pub fn new(header: &[&str]) -> Self {
        let mut t = Tsv::default();
        t.row(header);
        t
    }

    pub fn row<D: Display>(&mut self, cells: &[D]) {
        let line: Vec<String> = cells.iter().map(ToString::to_string).collect();
        self.text.push_str(&line.join("\t"));
        self.text.push('\n');
    }

    /// Starts a second table after a blank line.
    pub fn section(&mut self, header: &[&str]) {
        self.text.push('\n');
        self.row(header);
    }

    pub fn finish(self) -> String {
        self.text
    }
}

/// `-` for a missing value.
pub fn opt<T: Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so an interrupted run leaves no partial file.
pub fn write_atomic(path: &Path, text: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| CliError::Input(format!("{}: {}", path.display(), e.error)))?;
    Ok(())
}
