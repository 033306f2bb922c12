//! File loaders for the poset and group formats.

use std::fs;
use std::path::Path;

use tracedcat::formats::{parse_group, parse_poset};
use tracedcat::group::GroupTable;
use tracedcat::model_order::FinPoset;
use tracedcat::{Error, Result};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| "P".to_string(), |s| s.to_string_lossy().into_owned())
}

fn located(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    }
}

/// Reads a poset file; the file stem names the poset.
pub fn load_poset(path: &Path) -> Result<FinPoset> {
    parse_poset(&stem(path), &read(path)?).map_err(|e| located(path, e))
}

pub fn load_group(path: &Path) -> Result<GroupTable> {
    parse_group(&read(path)?).map_err(|e| located(path, e))
}
