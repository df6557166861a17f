//! On-disk cache of enumerated root systems, one JSON file per diagram.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use ade_core::roots::RootSystemJson;
use ade_core::{enumerate_roots, DynkinDiagram, RootSystem};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;
pub const ENV_VAR: &str = "ADE_CACHE_DIR";

#[derive(Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub format_version: u32,
    pub key: String,
    pub payload: RootSystemJson,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    /// Enumerated and written.
    Cold,
    /// Loaded from disk.
    Warm,
    /// The stored entry was unreadable or failed validation; rebuilt.
    Rebuilt,
}

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache entry {0} is corrupt: {1}")]
    CacheCorrupt(String, String),
    #[error(transparent)]
    Domain(#[from] ade_core::Error),
    #[error("cache i/o: {0}")]
    Io(#[from] io::Error),
}

/// Platform cache directory, e.g. `~/.cache/ade` on Linux.
pub fn default_dir() -> PathBuf {
    dirs::cache_dir().unwrap_or_else(std::env::temp_dir).join("ade")
}

pub fn entry_path(dir: &Path, diagram: &DynkinDiagram) -> PathBuf {
    dir.join(format!("{diagram}.json"))
}

fn load(path: &Path, diagram: &DynkinDiagram) -> Result<RootSystem, CacheError> {
    let key = diagram.to_string();
    let text = fs::read_to_string(path)?;
    let corrupt = |why: String| CacheError::CacheCorrupt(key.clone(), why);
    let entry: CacheEntry = serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
    if entry.format_version != FORMAT_VERSION {
        return Err(corrupt(format!("format_version {}", entry.format_version)));
    }
    if entry.key != key {
        return Err(corrupt(format!("key {:?}", entry.key)));
    }
    let rs = RootSystem::from_json(&entry.payload).map_err(|e| corrupt(e.to_string()))?;
    if rs.diagram() != diagram {
        return Err(corrupt("diagram mismatch".into()));
    }
    Ok(rs)
}

fn store(path: &Path, rs: &RootSystem) -> Result<(), CacheError> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let entry = CacheEntry { format_version: FORMAT_VERSION, key: rs.diagram().to_string(), payload: rs.to_json() };
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_vec(&entry).expect("entry serializes"))?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Loads the root system for `diagram`, enumerating and persisting it on a
/// miss. A corrupt entry is reported through `on_corrupt` and overwritten.
pub fn roundtrip(
    dir: &Path,
    diagram: &DynkinDiagram,
    mut on_corrupt: impl FnMut(&CacheError),
) -> Result<(RootSystem, CacheOutcome), CacheError> {
    let path = entry_path(dir, diagram);
    let outcome = if path.exists() {
        match load(&path, diagram) {
            Ok(rs) => return Ok((rs, CacheOutcome::Warm)),
            Err(e @ CacheError::CacheCorrupt(..)) => {
                on_corrupt(&e);
                CacheOutcome::Rebuilt
            }
            Err(e) => return Err(e),
        }
    } else {
        CacheOutcome::Cold
    };
    let rs = enumerate_roots(diagram)?;
    store(&path, &rs)?;
    Ok((rs, outcome))
}

/// Removes every cached entry; returns how many files went.
pub fn clear(dir: &Path) -> io::Result<usize> {
    let entries = match fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e),
    };
    let mut removed = 0;
    for entry in entries {
        let path = entry?.path();
        if path.extension().is_some_and(|x| x == "json") {
            fs::remove_file(&path)?;
            removed += 1;
        }
    }
    Ok(removed)
}
