//! Bundled presentations (`<group>.pcp`) with their automorphisms
//! (`<group>.<label>.aut`) and endomorphisms (`<group>.<label>.endo`).

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_bigint::BigUint;
use pcdyn_core::{parse_map_file, parse_presentation, ExponentVector, PcAutomorphism, PcEndomorphism, PcPresentation};

use crate::error::{HarnessError, Result};

#[derive(Clone, Debug)]
pub struct NamedMap<M> {
    pub label: String,
    pub map: M,
    /// Translation part, when the file has a `t` line.
    pub t: Option<ExponentVector>,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub pres: Arc<PcPresentation>,
    pub automorphisms: Vec<NamedMap<PcAutomorphism>>,
    pub endomorphisms: Vec<NamedMap<PcEndomorphism>>,
}

impl CorpusEntry {
    pub fn order(&self) -> BigUint {
        self.pres.order()
    }

    pub fn automorphism(&self, label: &str) -> Option<&PcAutomorphism> {
        self.automorphisms.iter().find(|a| a.label == label).map(|a| &a.map)
    }

    pub fn endomorphism(&self, label: &str) -> Option<&PcEndomorphism> {
        self.endomorphisms.iter().find(|a| a.label == label).map(|a| &a.map)
    }
}

pub fn bundled_corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub(crate) fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| HarnessError::Io { path: path.to_owned(), source })
}

pub fn read_presentation(path: &Path) -> Result<PcPresentation> {
    parse_presentation(&read(path)?).map_err(|source| HarnessError::File { path: path.to_owned(), source })
}

pub fn read_map(path: &Path, pres: &PcPresentation) -> Result<pcdyn_core::MapFile> {
    parse_map_file(&read(path)?, pres).map_err(|source| HarnessError::File { path: path.to_owned(), source })
}

/// Loads `<dir>/<name>.pcp` and every map file next to it.
pub fn load_entry(dir: &Path, name: &str) -> Result<CorpusEntry> {
    let pres = Arc::new(read_presentation(&dir.join(format!("{name}.pcp")))?);
    let mut entry = CorpusEntry { name: name.to_owned(), pres: pres.clone(), automorphisms: Vec::new(), endomorphisms: Vec::new() };
    let prefix = format!("{name}.");
    for path in sorted_files(dir)? {
        let file = path.file_name().and_then(|f| f.to_str()).unwrap_or_default();
        let Some(rest) = file.strip_prefix(&prefix) else { continue };
        let (label, ext) = match rest.rsplit_once('.') {
            Some((l, e)) if !l.contains('.') => (l.to_owned(), e),
            _ => continue,
        };
        let in_file = |source| HarnessError::File { path: path.clone(), source };
        match ext {
            "aut" => {
                let mf = read_map(&path, &pres)?;
                let map = PcAutomorphism::new(pres.clone(), mf.images).map_err(in_file)?;
                entry.automorphisms.push(NamedMap { label, map, t: mf.t });
            }
            "endo" => {
                let mf = read_map(&path, &pres)?;
                let map = PcEndomorphism::new(pres.clone(), mf.images).map_err(in_file)?;
                entry.endomorphisms.push(NamedMap { label, map, t: mf.t });
            }
            _ => {}
        }
    }
    Ok(entry)
}

fn sorted_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let io = |source| HarnessError::Io { path: dir.to_owned(), source };
    let mut out = Vec::new();
    for e in fs::read_dir(dir).map_err(io)? {
        out.push(e.map_err(io)?.path());
    }
    out.sort();
    Ok(out)
}

/// Every `.pcp` in `dir`, sorted by group order and then name.
pub fn load_corpus(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for path in sorted_files(dir)? {
        if path.extension().is_some_and(|e| e == "pcp") {
            let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_owned();
            out.push(load_entry(dir, &name)?);
        }
    }
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.name.cmp(&b.name)));
    Ok(out)
}
