use std::path::Path;

use serde_json::{json, Value};
use workbench_core::interchange::{parse_sset_file, read_map, validate as validate_file};
use workbench_core::lem::{
    decompose_base, is_propositional_homotopy, is_propositional_rlp, lem_section,
    verify_certificate, vertex_complement, CertificateFile, LemError,
};
use workbench_core::lifting::{check_family, default_bound, Family, SearchOrder};
use workbench_core::SimplicialMap;

use crate::{FamilyArg, Failure, Outcome};

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn load_map(path: &Path) -> Result<SimplicialMap, Failure> {
    read_map(path).map_err(|e| Failure::Invalid(e.to_string()))
}

pub fn validate(path: &Path) -> Result<Outcome, Failure> {
    let text = read(path)?;
    let file = parse_sset_file(&text)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    let report = validate_file(&file);
    let code = if report.ok { 0 } else { 2 };
    Ok(Outcome::new(code, serde_json::to_value(report).expect("report serializes")))
}

pub fn check(
    map: &Path,
    family: FamilyArg,
    min: Option<usize>,
    max: Option<usize>,
) -> Result<Outcome, Failure> {
    let p = load_map(map)?;
    let (family, default_min) = match family {
        FamilyArg::Boundary => (Family::Boundary, 0),
        FamilyArg::Horn => (Family::Horn, 1),
        FamilyArg::Prism => (Family::Prism, 0),
    };
    let report = check_family(
        &p,
        family,
        min.unwrap_or(default_min),
        max.unwrap_or_else(|| default_bound(&p)),
        SearchOrder::Canonical,
    );
    Ok(Outcome::new(if report.holds { 0 } else { 1 }, report.to_json()))
}

pub fn decompose(map: &Path) -> Result<Outcome, Failure> {
    let p = load_map(map)?;
    let vertex = vertex_complement(&p).ids();
    match decompose_base(&p) {
        Ok(d) => Ok(Outcome::new(
            0,
            json!({
                "base": d.base.name(),
                "gamma0": d.gamma0.ids(),
                "gamma1": d.gamma1.ids(),
                "vertex_complement": vertex,
            }),
        )),
        Err(e) => match &e {
            LemError::NotComplemented { simplex, face } => Ok(Outcome::new(
                3,
                json!({
                    "error": {
                        "kind": "not_complemented",
                        "message": e.to_string(),
                        "simplex": simplex,
                        "face": face,
                    },
                    "vertex_complement": vertex,
                }),
            )),
            _ => Err(Failure::Invalid(e.to_string())),
        },
    }
}

fn error(kind: &str, message: String) -> Value {
    json!({ "kind": kind, "message": message })
}

pub fn prop(map: &Path, bound: Option<usize>, homotopy: bool) -> Result<Outcome, Failure> {
    let p = load_map(map)?;
    let report = is_propositional_rlp(&p, bound.unwrap_or_else(|| default_bound(&p)));
    let mut json = report.to_json();
    let mut code = if report.propositional() { 0 } else { 1 };
    if homotopy {
        if !report.kan_check.holds {
            json["error"] = error(
                "precondition_unmet",
                "the homotopy oracle needs a Kan fibration; the horn check failed".into(),
            );
            code = 3;
        } else {
            match is_propositional_homotopy(&p) {
                Ok(h) => json["via_homotopy"] = json!(h),
                Err(e) => {
                    json["error"] = error("size_guard", e.to_string());
                    code = 3;
                }
            }
        }
    }
    Ok(Outcome::new(code, json))
}

pub fn lem(map: &Path, bound: Option<usize>) -> Result<Outcome, Failure> {
    let p = load_map(map)?;
    match lem_section(&p, bound.unwrap_or_else(|| default_bound(&p))) {
        Ok(cert) => Ok(Outcome::new(
            0,
            serde_json::to_value(cert.to_file()).expect("certificate serializes"),
        )),
        Err(
            e @ (LemError::Precondition(_)
            | LemError::NotComplemented { .. }
            | LemError::NoFiller { .. }
            | LemError::SizeGuard { .. }),
        ) => Err(Failure::Precondition(e.to_string())),
        Err(e) => Ok(Outcome::new(1, json!({ "error": error("internal", e.to_string()) }))),
    }
}

pub fn verify(cert: &Path, map: &Path) -> Result<Outcome, Failure> {
    let file = CertificateFile::parse(&read(cert)?)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", cert.display())))?;
    let p = load_map(map)?;
    let v = verify_certificate(&file, &p);
    Ok(Outcome::new(if v.valid { 0 } else { 1 }, v.to_json()))
}
