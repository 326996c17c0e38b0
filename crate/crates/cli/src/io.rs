use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use tempfile::NamedTempFile;

use crate::docs::{parse_document, Document};
use crate::error::CliError;

fn io_error(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Reads a document from a path, or from stdin for `-`.
pub fn read_document(path: &Path) -> Result<Document, CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| io_error(path, e))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| io_error(path, e))?
    };
    parse_document(&text, &path.display().to_string())
}

/// Writes `text` to a path (atomically: temp file in the same directory,
/// then rename), or to stdout for `-`.
pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    if path == Path::new("-") {
        let mut out = std::io::stdout().lock();
        return out
            .write_all(text.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|e| io_error(path, e));
    }
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = NamedTempFile::new_in(&dir).map_err(|e| io_error(path, e))?;
    tmp.write_all(text.as_bytes()).map_err(|e| io_error(path, e))?;
    tmp.as_file().sync_all().map_err(|e| io_error(path, e))?;
    tmp.persist(path).map_err(|e| io_error(path, e.error))?;
    Ok(())
}

pub fn write_document(path: &Path, doc: &Document) -> Result<(), CliError> {
    write_text(path, &doc.to_json())
}
