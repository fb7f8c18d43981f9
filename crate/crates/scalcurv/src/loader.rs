//! Resolving manifold and cobordism references from files and the catalog.
//!
//! The built-in catalog comes from `scalcurv_core::manifolds::catalog`. If the
//! `SCALCURV_CATALOG` environment variable names a directory, every `*.json`
//! manifold manifest in it is added under its `name` field. Extra entries may
//! not reuse a built-in name.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use scalcurv_core::invariants::CobordismData;
use scalcurv_core::manifolds::{self, CharacteristicData, CATALOG_NAMES};

use crate::manifest::{CobordismManifest, ManifoldManifest, ManifoldRef, CATALOG_PREFIX};
use crate::{CliError, Result};

pub const CATALOG_ENV: &str = "SCALCURV_CATALOG";

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    extra: BTreeMap<String, CharacteristicData>,
}

impl Catalog {
    pub fn builtin() -> Self {
        Catalog::default()
    }

    /// Built-ins plus the directory named by `SCALCURV_CATALOG`, if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CATALOG_ENV) {
            Some(dir) if !dir.is_empty() => Self::with_directory(Path::new(&dir)),
            _ => Ok(Self::builtin()),
        }
    }

    pub fn with_directory(dir: &Path) -> Result<Self> {
        let mut catalog = Self::builtin();
        let entries = fs::read_dir(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
        let mut paths: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        for path in paths {
            let data = read_manifold(&path)?;
            catalog.insert(data, &path)?;
        }
        Ok(catalog)
    }

    fn insert(&mut self, data: CharacteristicData, origin: &Path) -> Result<()> {
        let name = data.name().to_string();
        if manifolds::catalog(&name).is_ok() || self.extra.contains_key(&name) {
            return Err(CliError::Catalog(format!(
                "{}: catalog entry {name:?} is already defined",
                origin.display()
            )));
        }
        self.extra.insert(name, data);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<CharacteristicData> {
        if let Some(m) = self.extra.get(name) {
            return Ok(m.clone());
        }
        manifolds::catalog(name).map_err(|e| match e {
            scalcurv_core::Error::UnknownCatalogEntry { name, .. } => {
                CliError::Catalog(format!("unknown catalog entry {name:?}; available: {}", self.names().join(", ")))
            }
            other => other.into(),
        })
    }

    pub fn names(&self) -> Vec<String> {
        let mut names: Vec<String> = CATALOG_NAMES.iter().map(|s| s.to_string()).collect();
        names.push("S<n>".to_string());
        names.extend(self.extra.keys().cloned());
        names
    }

    pub fn entries(&self) -> Vec<CharacteristicData> {
        CATALOG_NAMES
            .iter()
            .map(|n| manifolds::catalog(n).expect("built-in entry"))
            .chain(self.extra.values().cloned())
            .collect()
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path, text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let field = match e.path().to_string() {
            p if p == "." => "<top level>".to_string(),
            p => p,
        };
        let inner = e.into_inner();
        CliError::Parse {
            path: path.to_path_buf(),
            line: inner.line(),
            column: inner.column(),
            field,
            message: inner.to_string(),
        }
    })
}

fn read_manifold(path: &Path) -> Result<CharacteristicData> {
    let manifest: ManifoldManifest = parse(path, &read_text(path)?)?;
    Ok(manifest.to_data()?)
}

/// Resolves manifold and cobordism references against a catalog.
#[derive(Clone, Debug, Default)]
pub struct Loader {
    pub catalog: Catalog,
}

impl Loader {
    pub fn new(catalog: Catalog) -> Self {
        Loader { catalog }
    }

    /// `catalog:NAME` or a path to a manifold manifest.
    pub fn manifold(&self, reference: &str) -> Result<CharacteristicData> {
        match reference.strip_prefix(CATALOG_PREFIX) {
            Some(name) => self.catalog.get(name),
            None => read_manifold(Path::new(reference)),
        }
    }

    pub fn cobordism(&self, path: &Path) -> Result<CobordismData> {
        let manifest: CobordismManifest = parse(path, &read_text(path)?)?;
        self.cobordism_from_manifest(&manifest)
    }

    pub fn cobordism_from_manifest(&self, m: &CobordismManifest) -> Result<CobordismData> {
        let boundary = match &m.boundary {
            ManifoldRef::Catalog(s) => match s.strip_prefix(CATALOG_PREFIX) {
                Some(name) => self.catalog.get(name)?,
                None => {
                    return Err(CliError::Catalog(format!(
                        "boundary reference {s:?} must use the {CATALOG_PREFIX}NAME form"
                    )))
                }
            },
            ManifoldRef::Inline(inline) => inline.to_data()?,
        };
        Ok(CobordismData::new(
            m.name.clone(),
            m.dimension,
            m.relative_pontrjagin_numbers.0.clone(),
            m.signature.0.clone(),
            boundary,
            m.psc_extension,
        )?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_refs() {
        let l = Loader::default();
        assert_eq!(l.manifold("catalog:K3").unwrap().dimension(), 4);
        assert!(matches!(l.manifold("catalog:nope"), Err(CliError::Catalog(_))));
        assert!(matches!(l.manifold("/definitely/not/here.json"), Err(CliError::Io { .. })));
    }

    #[test]
    fn extra_catalog_directory() {
        let dir = tempfile::tempdir().unwrap();
        let m = ManifoldManifest::from_data(&manifolds::k3().renamed("K3b"));
        fs::write(dir.path().join("k3b.json"), serde_json::to_string(&m).unwrap()).unwrap();
        fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
        let cat = Catalog::with_directory(dir.path()).unwrap();
        assert!(cat.get("K3b").unwrap().same_characteristics(&manifolds::k3()));
        assert!(cat.names().contains(&"K3b".to_string()));

        let dup = ManifoldManifest::from_data(&manifolds::k3());
        fs::write(dir.path().join("k3.json"), serde_json::to_string(&dup).unwrap()).unwrap();
        assert!(matches!(Catalog::with_directory(dir.path()), Err(CliError::Catalog(_))));
    }

    #[test]
    fn parse_errors_carry_position() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        fs::write(&path, "{\n  \"name\": \"x\",\n  \"dimension\": \"seven\"\n}").unwrap();
        match Loader::default().manifold(path.to_str().unwrap()) {
            Err(CliError::Parse { line, field, .. }) => {
                assert_eq!(line, 3);
                assert_eq!(field, "dimension");
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
