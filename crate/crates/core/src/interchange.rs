//! JSON interchange format for simplicial sets and maps.
//!
//! Writers emit simplices in canonical order (dimension, then id), collapse
//! sets ascending and object keys sorted, so that a load/save round trip is
//! byte-identical. Readers accept simplices in any order.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::SimplicialError;
use crate::map::SimplicialMap;
use crate::sset::{RawCell, SimplexExpr, SimplicialSet};
use crate::surjection::{OrdinalSurjection, MAX_DIM};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InterchangeError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Invalid(#[from] SimplicialError),
}

impl From<serde_json::Error> for InterchangeError {
    fn from(e: serde_json::Error) -> Self {
        let located = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        InterchangeError::Parse {
            line: e.line(),
            column: e.column(),
            message: located.strip_suffix(&suffix).unwrap_or(&located).to_string(),
        }
    }
}

/// `{"collapse": [..], "target": id}`
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ExprFile {
    pub collapse: Vec<usize>,
    pub target: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SimplexFile {
    pub id: String,
    pub dim: usize,
    pub faces: Vec<ExprFile>,
}

/// A simplicial set file.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SsetFile {
    pub name: String,
    pub simplices: Vec<SimplexFile>,
}

/// A map file. `domain` and `codomain` name the simplicial sets involved.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub domain: String,
    pub codomain: String,
    pub assignments: BTreeMap<String, ExprFile>,
}

/// Serialises with sorted keys and a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("interchange values serialise");
    let mut out = serde_json::to_string_pretty(&value).expect("json values serialise");
    out.push('\n');
    out
}

pub fn expr_to_file(set: &SimplicialSet, e: &SimplexExpr) -> ExprFile {
    ExprFile {
        collapse: e.surj.collapse(),
        target: set.id(e.base).to_string(),
    }
}

/// Resolves an expression against `set`; its dimension is the target's
/// dimension plus the number of collapse positions.
pub fn expr_from_file(set: &SimplicialSet, e: &ExprFile) -> Result<SimplexExpr, SimplicialError> {
    let base = set
        .lookup(&e.target)
        .ok_or_else(|| SimplicialError::UnknownId(e.target.clone()))?;
    let dim = set.cell(base).dim + e.collapse.len();
    if dim > MAX_DIM {
        return Err(SimplicialError::DimensionTooLarge(dim));
    }
    let surj = OrdinalSurjection::new(dim, &e.collapse)?;
    Ok(SimplexExpr { base, surj })
}

impl SsetFile {
    pub fn from_set(set: &SimplicialSet) -> Self {
        SsetFile {
            name: set.name().to_string(),
            simplices: set
                .cells()
                .iter()
                .map(|c| SimplexFile {
                    id: c.id.clone(),
                    dim: c.dim,
                    faces: c.faces.iter().map(|f| expr_to_file(set, f)).collect(),
                })
                .collect(),
        }
    }

    /// Checks every invariant and builds the simplicial set.
    pub fn build(&self) -> Result<SimplicialSet, SimplicialError> {
        let mut position: HashMap<&str, (usize, usize)> = HashMap::new();
        for (k, s) in self.simplices.iter().enumerate() {
            if s.dim > MAX_DIM {
                return Err(SimplicialError::DimensionTooLarge(s.dim));
            }
            if position.insert(s.id.as_str(), (k, s.dim)).is_some() {
                return Err(SimplicialError::DuplicateId(s.id.clone()));
            }
        }
        let mut raw = Vec::with_capacity(self.simplices.len());
        for s in &self.simplices {
            let mut faces = Vec::with_capacity(s.faces.len());
            for (k, f) in s.faces.iter().enumerate() {
                let &(target, target_dim) = position
                    .get(f.target.as_str())
                    .ok_or_else(|| SimplicialError::UnknownId(f.target.clone()))?;
                let dim = target_dim + f.collapse.len();
                if dim + 1 != s.dim {
                    return Err(SimplicialError::FaceDimension {
                        id: s.id.clone(),
                        face: k,
                        expected: s.dim.saturating_sub(1),
                        found: dim,
                    });
                }
                faces.push((OrdinalSurjection::new(dim, &f.collapse)?, target));
            }
            raw.push(RawCell {
                id: s.id.clone(),
                dim: s.dim,
                faces,
            });
        }
        SimplicialSet::from_raw(self.name.clone(), raw)
    }
}

/// Outcome of validating a simplicial set file.
#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub name: String,
    /// Nondegenerate simplices per dimension, when valid.
    pub counts: Vec<usize>,
    pub error: Option<String>,
}

/// Checks all simplicial-set invariants of a parsed file.
pub fn validate(file: &SsetFile) -> ValidationReport {
    match file.build() {
        Ok(set) => ValidationReport {
            ok: true,
            name: file.name.clone(),
            counts: set.counts(),
            error: None,
        },
        Err(e) => ValidationReport {
            ok: false,
            name: file.name.clone(),
            counts: Vec::new(),
            error: Some(e.to_string()),
        },
    }
}

pub fn parse_sset_file(text: &str) -> Result<SsetFile, InterchangeError> {
    Ok(serde_json::from_str(text)?)
}

/// Parses and validates a simplicial set.
pub fn parse_sset(text: &str) -> Result<SimplicialSet, InterchangeError> {
    Ok(parse_sset_file(text)?.build()?)
}

pub fn write_sset(set: &SimplicialSet) -> String {
    to_canonical_json(&SsetFile::from_set(set))
}

impl MapFile {
    pub fn from_map(map: &SimplicialMap, domain: &str, codomain: &str) -> Self {
        let dom = map.domain();
        let cod = map.codomain();
        MapFile {
            domain: domain.to_string(),
            codomain: codomain.to_string(),
            assignments: map
                .values()
                .iter()
                .enumerate()
                .map(|(a, v)| (dom.id(a).to_string(), expr_to_file(cod, v)))
                .collect(),
        }
    }

    /// Resolves the assignments against the given sets and validates the map.
    pub fn build(
        &self,
        domain: &Arc<SimplicialSet>,
        codomain: &Arc<SimplicialSet>,
    ) -> Result<SimplicialMap, SimplicialError> {
        for id in self.assignments.keys() {
            if domain.lookup(id).is_none() {
                return Err(SimplicialError::UnknownId(id.clone()));
            }
        }
        let label = format!("{} -> {}", domain.name(), codomain.name());
        let values = domain
            .cells()
            .iter()
            .map(|c| {
                let e =
                    self.assignments
                        .get(&c.id)
                        .ok_or_else(|| SimplicialError::MissingValue {
                            map: label.clone(),
                            id: c.id.clone(),
                        })?;
                expr_from_file(codomain, e)
            })
            .collect::<Result<Vec<_>, _>>()?;
        SimplicialMap::new(domain.clone(), codomain.clone(), values)
    }
}

/// Map file that names its endpoints by their set names.
pub fn map_file(map: &SimplicialMap) -> MapFile {
    MapFile::from_map(map, map.domain().name(), map.codomain().name())
}

pub fn parse_map_file(text: &str) -> Result<MapFile, InterchangeError> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_map(
    text: &str,
    domain: &Arc<SimplicialSet>,
    codomain: &Arc<SimplicialSet>,
) -> Result<SimplicialMap, InterchangeError> {
    Ok(parse_map_file(text)?.build(domain, codomain)?)
}

pub fn write_map(map: &SimplicialMap) -> String {
    to_canonical_json(&map_file(map))
}

/// Failure to load an interchange file from disk.
#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format {
        path: PathBuf,
        source: InterchangeError,
    },
}

fn read(path: &Path) -> Result<String, LoadError> {
    std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_sset(path: &Path) -> Result<SimplicialSet, LoadError> {
    parse_sset(&read(path)?).map_err(|source| LoadError::Format {
        path: path.to_path_buf(),
        source,
    })
}

/// Where a map file's `domain`/`codomain` reference points: `<dir>/<ref>`
/// if that file exists, otherwise `<dir>/<ref>.sset.json`.
pub fn resolve_reference(map_path: &Path, reference: &str) -> PathBuf {
    let dir = map_path.parent().unwrap_or_else(|| Path::new(""));
    let direct = dir.join(reference);
    if direct.is_file() {
        direct
    } else {
        dir.join(format!("{reference}.sset.json"))
    }
}

/// Loads a map file together with the simplicial sets it references.
pub fn read_map(path: &Path) -> Result<SimplicialMap, LoadError> {
    let format = |source: InterchangeError| LoadError::Format {
        path: path.to_path_buf(),
        source,
    };
    let file = parse_map_file(&read(path)?).map_err(format)?;
    let domain = Arc::new(read_sset(&resolve_reference(path, &file.domain))?);
    let codomain = if file.codomain == file.domain {
        domain.clone()
    } else {
        Arc::new(read_sset(&resolve_reference(path, &file.codomain))?)
    };
    file.build(&domain, &codomain)
        .map_err(|e| format(InterchangeError::Invalid(e)))
}
