use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::Subcommand;
use serde_json::{json, Map, Value};
use workbench_core::interchange::{read_map, read_sset, to_canonical_json, write_sset, MapFile};
use workbench_core::lifting::PushoutProduct;
use workbench_core::surjection::MAX_DIM;
use workbench_core::{boundary, horn, product, SimplicialMap, SimplicialSet};

use crate::{Failure, Outcome};

#[derive(Subcommand, Debug)]
pub enum BuildCommand {
    /// `X × Y` with its projections.
    Product { left: PathBuf, right: PathBuf },
    /// The pushout-product of two monos, given as map files.
    PushoutProduct { left: PathBuf, right: PathBuf },
    /// `∂Δⁿ ↪ Δⁿ`.
    Boundary { n: usize },
    /// `Λⁿ_k ↪ Δⁿ`.
    Horn { n: usize, k: usize },
}

/// Named sets and maps; each becomes `<stem>.sset.json` or `<stem>.map.json`.
struct Artifacts {
    sets: Vec<(&'static str, Arc<SimplicialSet>)>,
    maps: Vec<(&'static str, SimplicialMap, &'static str, &'static str)>,
}

impl Artifacts {
    fn inclusion(map: SimplicialMap, domain: &'static str, codomain: &'static str) -> Self {
        Artifacts {
            sets: vec![(domain, map.domain().clone()), (codomain, map.codomain().clone())],
            maps: vec![("inclusion", map, domain, codomain)],
        }
    }

    fn files(&self) -> Vec<(String, String)> {
        let set_file = |stem: &str| format!("{stem}.sset.json");
        let mut out: Vec<(String, String)> = self
            .sets
            .iter()
            .map(|(stem, set)| (set_file(stem), write_sset(set)))
            .collect();
        for (stem, map, dom, cod) in &self.maps {
            let file = MapFile::from_map(map, &set_file(dom), &set_file(cod));
            out.push((format!("{stem}.map.json"), to_canonical_json(&file)));
        }
        out.sort();
        out
    }
}

fn check_dim(n: usize) -> Result<(), Failure> {
    if n > MAX_DIM {
        return Err(Failure::Invalid(format!(
            "dimension {n} exceeds the supported maximum {MAX_DIM}"
        )));
    }
    Ok(())
}

fn load_set(path: &Path) -> Result<Arc<SimplicialSet>, Failure> {
    read_sset(path)
        .map(Arc::new)
        .map_err(|e| Failure::Invalid(e.to_string()))
}

fn load_map(path: &Path) -> Result<SimplicialMap, Failure> {
    read_map(path).map_err(|e| Failure::Invalid(e.to_string()))
}

fn construct(what: BuildCommand) -> Result<Artifacts, Failure> {
    Ok(match what {
        BuildCommand::Boundary { n } => {
            check_dim(n)?;
            Artifacts::inclusion(boundary(n).1, "boundary", "simplex")
        }
        BuildCommand::Horn { n, k } => {
            check_dim(n)?;
            let (_, map) = horn(n, k).map_err(|e| Failure::Invalid(e.to_string()))?;
            Artifacts::inclusion(map, "horn", "simplex")
        }
        BuildCommand::Product { left, right } => {
            let (x, y) = (load_set(&left)?, load_set(&right)?);
            if x.dim().unwrap_or(0) + y.dim().unwrap_or(0) > MAX_DIM {
                return Err(Failure::Invalid("product dimension exceeds the supported maximum".into()));
            }
            let prod = product(&x, &y);
            Artifacts {
                sets: vec![("left", x), ("right", y), ("product", prod.set.clone())],
                maps: vec![
                    ("proj1", prod.proj1, "product", "left"),
                    ("proj2", prod.proj2, "product", "right"),
                ],
            }
        }
        BuildCommand::PushoutProduct { left, right } => {
            let (i, j) = (load_map(&left)?, load_map(&right)?);
            let pp = PushoutProduct::new(&i, &j).map_err(|e| Failure::Invalid(e.to_string()))?;
            Artifacts::inclusion(pp.inclusion, "domain", "codomain")
        }
    })
}

pub fn run(what: BuildCommand, out_dir: Option<&Path>) -> Result<Outcome, Failure> {
    let files = construct(what)?.files();
    let report = match out_dir {
        None => {
            let objects: Map<String, Value> = files
                .into_iter()
                .map(|(name, text)| (name, serde_json::from_str(&text).expect("canonical JSON")))
                .collect();
            json!({ "files": objects })
        }
        Some(dir) => {
            std::fs::create_dir_all(dir)
                .map_err(|e| Failure::Invalid(format!("{}: {e}", dir.display())))?;
            for (name, text) in &files {
                let path = dir.join(name);
                std::fs::write(&path, text)
                    .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
            }
            json!({ "written": files.iter().map(|(n, _)| n).collect::<Vec<_>>() })
        }
    };
    Ok(Outcome::new(0, report))
}
