use std::fs;
use std::path::{Path, PathBuf};

use gw_core::{Error, Result, VirtualConstantTable};

/// A virtual-constant table backed by `vsc_N{N}_k{k}.json` in a cache
/// directory. Rows missing from the file are computed on demand and written
/// back by [`CachedTable::persist`].
pub struct CachedTable {
    pub table: VirtualConstantTable,
    path: Option<PathBuf>,
    loaded: Vec<u32>,
}

pub fn file_name(n: u32, k: u32) -> String {
    format!("vsc_N{n}_k{k}.json")
}

impl CachedTable {
    pub fn open(dir: Option<&Path>, n: u32, k: u32) -> Result<Self> {
        let fresh = VirtualConstantTable::new(n, k)?;
        let Some(dir) = dir else {
            return Ok(CachedTable {
                table: fresh,
                path: None,
                loaded: Vec::new(),
            });
        };
        let path = dir.join(file_name(n, k));
        let table = if path.exists() {
            let t = VirtualConstantTable::load(&path)?;
            if t.N() != n || t.k() != k {
                return Err(Error::CacheMismatch {
                    n,
                    k,
                    found_n: t.N() as i64,
                    found_k: t.k() as i64,
                });
            }
            t
        } else {
            fresh
        };
        let loaded = table.degrees();
        Ok(CachedTable {
            table,
            path: Some(path),
            loaded,
        })
    }

    /// Writes the file only if rows were added since it was opened.
    pub fn persist(&self) -> Result<()> {
        match &self.path {
            Some(path) if self.table.degrees() != self.loaded => self.table.store(path),
            _ => Ok(()),
        }
    }
}

/// Cache files in `dir` with the degrees each one holds.
pub fn list(dir: &Path) -> Result<Vec<(String, Vec<u32>)>> {
    let mut out = Vec::new();
    for name in cache_files(dir)? {
        let t = VirtualConstantTable::load(&dir.join(&name))?;
        out.push((name, t.degrees()));
    }
    Ok(out)
}

pub fn clear(dir: &Path) -> Result<usize> {
    let names = cache_files(dir)?;
    for name in &names {
        let path = dir.join(name);
        fs::remove_file(&path).map_err(|e| io(&path, e))?;
    }
    Ok(names.len())
}

fn cache_files(dir: &Path) -> Result<Vec<String>> {
    if !dir.exists() {
        return Ok(Vec::new());
    }
    let mut names: Vec<String> = fs::read_dir(dir)
        .map_err(|e| io(dir, e))?
        .filter_map(|e| e.ok())
        .map(|e| e.file_name().to_string_lossy().into_owned())
        .filter(|n| n.starts_with("vsc_N") && n.ends_with(".json"))
        .collect();
    names.sort();
    Ok(names)
}

fn io(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}
