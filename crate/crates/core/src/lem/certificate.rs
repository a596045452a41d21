//! Excluded-middle certificates: a section over the image part of the base
//! and a witness that the fibre over the rest is empty.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::interchange::{to_canonical_json, InterchangeError, MapFile};
use crate::lem::{
    decompose_base, is_propositional_rlp, trivial_fibration_section, Decomposition, LemError,
};
use crate::lifting::boundary_rlp;
use crate::map::{compose, SimplicialMap};
use crate::product::pullback;
use crate::sset::SimplicialSet;
use crate::subcomplex::Subcomplex;

/// The only emptiness witness: no vertex of the total space lies over any
/// vertex of the simplex.
pub const NO_PREIMAGE_VERTEX: &str = "no-preimage-vertex";

/// Name given to the realized image part; section maps start here.
const GAMMA0: &str = "gamma0";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemCertificate {
    pub fibration: SimplicialMap,
    pub decomposition: Decomposition,
    /// From the realized `gamma0` into the total space.
    pub section0: SimplicialMap,
    pub emptiness1: BTreeMap<String, String>,
    pub bound: usize,
}

/// Serialized form, the only input the verifier reads besides `p`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub bound: u64,
    pub gamma0: Vec<String>,
    pub gamma1: Vec<String>,
    pub section0: MapFile,
    pub emptiness1: BTreeMap<String, String>,
}

impl CertificateFile {
    pub fn parse(text: &str) -> Result<Self, InterchangeError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(self)
    }
}

impl LemCertificate {
    pub fn to_file(&self) -> CertificateFile {
        CertificateFile {
            bound: self.bound as u64,
            gamma0: self.decomposition.gamma0.ids(),
            gamma1: self.decomposition.gamma1.ids(),
            section0: MapFile::from_map(&self.section0, GAMMA0, self.fibration.domain().name()),
            emptiness1: self.emptiness1.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_file().to_json()
    }

    pub fn verify(&self) -> Verification {
        verify_certificate(&self.to_file(), &self.fibration)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub valid: bool,
    /// The first failed check.
    pub diagnostic: Option<String>,
}

impl Verification {
    pub fn to_json(&self) -> Value {
        json!({ "valid": self.valid, "diagnostic": self.diagnostic })
    }
}

/// First simplex of `x` with a vertex over a vertex of `base` cell `cell`.
fn preimage_vertex(p: &SimplicialMap, cell: usize) -> Option<usize> {
    let base = p.codomain();
    let corners = base.cell_vertices(cell);
    p.domain()
        .cells_of_dim(0)
        .find(|&v| corners.contains(&p.value_of(v).base))
}

/// Builds the certificate for `p`, which must be Kan up to `bound + 1` and
/// lift against `∂Δⁿ ↪ Δⁿ` for `1 ≤ n ≤ bound`.
pub fn lem_section(p: &SimplicialMap, bound: usize) -> Result<LemCertificate, LemError> {
    if bound == 0 {
        return Err(LemError::Precondition("bound must be at least 1".into()));
    }
    let report = is_propositional_rlp(p, bound);
    if let Some(cx) = &report.kan_check.counterexample {
        return Err(LemError::Precondition(format!(
            "not Kan up to dimension {}: horn {} of dimension {} has no filler",
            bound + 1,
            cx.horn.unwrap_or(0),
            cx.dim
        )));
    }
    if let Some(cx) = &report.via_rlp.counterexample {
        return Err(LemError::Precondition(format!(
            "not propositional: a boundary square of dimension {} has no filler",
            cx.dim
        )));
    }

    let decomposition = decompose_base(p)?;
    let (_, incl0) = decomposition.gamma0.realize(GAMMA0)?;
    let restricted = pullback(p, &incl0)?;
    if !boundary_rlp(&restricted.proj2, 0, 0).holds {
        return Err(LemError::SelfCheck(
            "restriction over gamma0 misses a vertex".into(),
        ));
    }
    let s0 = trivial_fibration_section(&restricted.proj2, bound)?;
    let section0 = compose(&restricted.proj1, &s0)?;

    let base = p.codomain();
    let mut emptiness1 = BTreeMap::new();
    for &x in decomposition.gamma1.members() {
        if preimage_vertex(p, x).is_some() {
            return Err(LemError::NonEmptyFiber {
                simplex: base.id(x).to_string(),
            });
        }
        emptiness1.insert(base.id(x).to_string(), NO_PREIMAGE_VERTEX.to_string());
    }

    let cert = LemCertificate {
        fibration: p.clone(),
        decomposition,
        section0,
        emptiness1,
        bound,
    };
    match cert.verify().diagnostic {
        None => Ok(cert),
        Some(d) => Err(LemError::SelfCheck(d)),
    }
}

fn resolve(base: &SimplicialSet, field: &str, ids: &[String]) -> Result<BTreeSet<usize>, String> {
    let mut out = BTreeSet::new();
    for id in ids {
        let cell = base
            .lookup(id)
            .ok_or_else(|| format!("{field}: unknown simplex `{id}`"))?;
        if !out.insert(cell) {
            return Err(format!("{field}: `{id}` listed twice"));
        }
    }
    Ok(out)
}

fn check(cert: &CertificateFile, p: &SimplicialMap) -> Result<(), String> {
    let base = p.codomain();
    let total = p.domain();
    if cert.bound < 1 {
        return Err("bound must be at least 1".into());
    }

    let g0 = resolve(base, "gamma0", &cert.gamma0)?;
    let g1 = resolve(base, "gamma1", &cert.gamma1)?;
    for x in 0..base.len() {
        match (g0.contains(&x), g1.contains(&x)) {
            (true, true) => return Err(format!("`{}` is in both gamma0 and gamma1", base.id(x))),
            (false, false) => {
                return Err(format!("`{}` is in neither gamma0 nor gamma1", base.id(x)))
            }
            _ => {}
        }
    }
    let gamma0 = Subcomplex::from_members(base, g0);
    let gamma1 = Subcomplex::from_members(base, g1);
    for (name, part) in [("gamma0", &gamma0), ("gamma1", &gamma1)] {
        if let Some((x, f)) = part.first_open_face() {
            return Err(format!(
                "{name} is not face-closed: `{}` has face `{}` outside it",
                base.id(x),
                base.id(f)
            ));
        }
    }

    let (g0_set, incl0) = gamma0.realize(GAMMA0).map_err(|e| format!("gamma0: {e}"))?;
    let section = cert
        .section0
        .build(&g0_set, total)
        .map_err(|e| format!("section0: {e}"))?;
    let over = compose(p, &section).map_err(|e| format!("section0: {e}"))?;
    if let Some(x) = (0..g0_set.len()).find(|&x| over.value_of(x) != incl0.value_of(x)) {
        return Err(format!(
            "section0: p maps the value at `{}` to `{}`, not to itself",
            g0_set.id(x),
            base.render(&over.value_of(x))
        ));
    }

    let keys: BTreeSet<&str> = cert.emptiness1.keys().map(String::as_str).collect();
    let expected: BTreeSet<&str> = gamma1.members().iter().map(|&x| base.id(x)).collect();
    if let Some(x) = expected.difference(&keys).next() {
        return Err(format!("emptiness1: no witness for `{x}`"));
    }
    if let Some(x) = keys.difference(&expected).next() {
        return Err(format!("emptiness1: `{x}` is not in gamma1"));
    }
    if let Some((x, w)) = cert
        .emptiness1
        .iter()
        .find(|(_, w)| *w != NO_PREIMAGE_VERTEX)
    {
        return Err(format!("emptiness1: unknown witness `{w}` for `{x}`"));
    }
    for &x in gamma1.members() {
        if let Some(v) = preimage_vertex(p, x) {
            return Err(format!(
                "emptiness1: vertex `{}` lies over `{}`",
                total.id(v),
                base.id(x)
            ));
        }
    }
    let (_, incl1) = gamma1
        .realize("gamma1")
        .map_err(|e| format!("gamma1: {e}"))?;
    let fibre = pullback(p, &incl1).map_err(|e| e.to_string())?;
    if let Some(c) = fibre.set.cells().first() {
        return Err(format!("pullback over gamma1 contains `{}`", c.id));
    }
    Ok(())
}

/// Re-checks a certificate against `p` using only composition, face
/// closure and pullback.
pub fn verify_certificate(cert: &CertificateFile, p: &SimplicialMap) -> Verification {
    match check(cert, p) {
        Ok(()) => Verification {
            valid: true,
            diagnostic: None,
        },
        Err(d) => Verification {
            valid: false,
            diagnostic: Some(d),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::coproduct;
    use crate::interchange::ExprFile;
    use crate::sset::SimplicialSet;
    use crate::standard::std_simplex;
    use std::sync::Arc;

    fn arc(n: usize) -> Arc<SimplicialSet> {
        Arc::new(std_simplex(n))
    }

    #[test]
    fn component_inclusion_certificate() {
        let (_, inj) = coproduct(&arc(2), &arc(1));
        let cert = lem_section(&inj[0], 4).unwrap();
        let file = cert.to_file();
        assert_eq!(file.gamma0.len(), 7);
        assert_eq!(file.gamma1, vec!["1:0", "1:1", "1:01"]);
        assert_eq!(file.section0.assignments["0:012"].target, "012");
        assert!(file.emptiness1.values().all(|w| w == NO_PREIMAGE_VERTEX));
        assert!(cert.verify().valid);
        assert_eq!(cert.to_json(), lem_section(&inj[0], 4).unwrap().to_json());
    }

    #[test]
    fn identity_certificate() {
        let id = SimplicialMap::identity(&arc(1));
        let cert = lem_section(&id, 3).unwrap();
        assert!(cert.decomposition.gamma1.is_empty());
        assert_eq!(cert.section0.values(), id.values());
    }

    #[test]
    fn empty_total_space() {
        let empty = Arc::new(SimplicialSet::empty("0"));
        let p = SimplicialMap::from_empty(&empty, &arc(1));
        let cert = lem_section(&p, 2).unwrap();
        assert!(cert.decomposition.gamma0.is_empty());
        assert!(cert.section0.values().is_empty());
        assert_eq!(cert.decomposition.gamma1.len(), 3);
    }

    #[test]
    fn empty_base() {
        let empty = Arc::new(SimplicialSet::empty("0"));
        let p = SimplicialMap::identity(&empty);
        let cert = lem_section(&p, 1).unwrap();
        assert!(cert.verify().valid);
    }

    #[test]
    fn corrupted_section_value_breaks_face_commutation() {
        let (_, inj) = coproduct(&arc(2), &arc(1));
        let cert = lem_section(&inj[0], 4).unwrap();
        let mut file = cert.to_file();
        file.section0.assignments.insert(
            "0:0".into(),
            ExprFile {
                collapse: vec![],
                target: "1".into(),
            },
        );
        let v = verify_certificate(&file, &inj[0]);
        assert!(!v.valid);
        assert!(v.diagnostic.unwrap().contains("face"));
    }

    #[test]
    fn non_propositional_maps_are_refused() {
        let pt = arc(0);
        let (two, _) = coproduct(&pt, &pt);
        let p = SimplicialMap::new(two, pt, vec![crate::SimplexExpr::cell(0, 0); 2]).unwrap();
        assert!(matches!(lem_section(&p, 2), Err(LemError::Precondition(_))));
    }
}
