use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use drstax_core::taxonomy::ConceptDictionary;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flag combination not caught by the parser.
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            _ => 2,
        }
    }

    pub fn data(e: impl std::fmt::Display) -> Self {
        CliError::Data(e.to_string())
    }
}

pub fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) => read_file(p),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
            Ok(s)
        }
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes through a temp file in the target directory and renames it.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

/// Writes a report and, with `--json`, its JSON mirror next to it.
pub fn write_report<T: Serialize>(path: &Path, tsv: &str, json: bool, value: &T) -> Result<(), CliError> {
    write_atomic(path, tsv)?;
    if json {
        let mut p = path.as_os_str().to_owned();
        p.push(".json");
        write_atomic(Path::new(&p), &to_json(value)?)?;
    }
    Ok(())
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(CliError::data)?;
    s.push('\n');
    Ok(s)
}

/// Output to a file when given, stdout otherwise.
pub fn emit(path: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_atomic(p, contents),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(contents.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

pub fn load_dict(path: Option<&Path>) -> Result<ConceptDictionary, CliError> {
    let p = path.ok_or_else(|| CliError::Usage("this command needs --dict (or DRSTAX_DICT)".into()))?;
    let d = ConceptDictionary::load(p).map_err(|e| CliError::Data(format!("{}: {e}", p.display())))?;
    log::info!("dictionary {}: {} entries", p.display(), d.entries().len());
    Ok(d)
}
